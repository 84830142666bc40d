#pragma once

#include "tridesign/derived_codes.hpp"
#include "tridesign/distribution.hpp"
#include "tridesign/polynomial.hpp"
#include "tridesign/triple.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tridesign {

/// One point (n, M) of the search space; T = 2M/n when n divides 2M.
struct CandidateParameters {
  int n = 0;
  Integer M;
  std::optional<Integer> T;
};

enum class FamilyTag { Tight5, Case3 };

/// A parameter family allowed by the classification conjecture. For Tight5,
/// m is the odd integer with n = m^2 - 2; the icosahedron (n = 3) has no
/// integer m and carries std::nullopt.
struct KnownFamily {
  FamilyTag tag = FamilyTag::Tight5;
  std::optional<int> m;

  friend bool operator==(const KnownFamily&, const KnownFamily&) = default;
};

std::string to_string(const KnownFamily& family);

enum class Status {
  OutOfRange,
  RejectedDivisibility,
  RejectedRootStructure,
  RejectedSignPattern,
  RejectedNonIntegerDistribution,
  KnownFamilyMatch,
  SurvivorRefutedByDerived,
  SurvivorUnresolved,
};

std::string to_string(Status status);
std::optional<Status> parse_status(const std::string& text);
bool is_rejection(Status status);

struct CandidateReport {
  CandidateParameters parameters;
  Status status = Status::OutOfRange;
  std::optional<Polynomial> cubic;
  std::optional<InnerProductTriple> inner_products;
  std::optional<DistanceDistribution> distribution;
  std::vector<KnownFamily> families;
  std::vector<DerivedCodeReport> derived;
  std::string note;
};

/// n(n+1) <= M <= n(n+1)(n+5)/6.
std::pair<Integer, Integer> cardinality_bounds(int n);

/// T = 2M/n when integral.
std::optional<Integer> divisibility_filter(int n, const Integer& M);

/// (n+2)[n(n+3) - 2M] t^3 - n(n+2)(n-1) t^2 + (6M - 5n^2 - 7n) t + n(n-1).
/// Throws std::domain_error("cubic degenerates") when 2M = n(n+3).
Polynomial inner_product_cubic(int n, const Integer& M);

/// Quadratic whose roots are a and b once c is known.
Polynomial quadratic_for_ab(int n, const Rational& c);

struct VietaSymmetrics {
  Rational e1;  // a + b + c
  Rational e2;  // ab + bc + ca
  Rational e3;  // abc
};

VietaSymmetrics vieta_symmetrics(int n, const Integer& M);

/// Moment solve for t^0..t^2, verified on t^3..t^5. Throws
/// std::domain_error("moment mismatch") if the triple is not the root set of
/// the cubic for (n, M).
DistanceDistribution distance_distribution(int n, const Integer& M, const InnerProductTriple& roots);

/// Closed form from the odd-moment equations. Throws
/// std::domain_error("degenerate: use moment solve") when a pairwise sum vanishes.
DistanceDistribution closed_form_distribution(const Rational& a, const Rational& b, const Rational& c);

/// (n+2)^3 (2M - n(n+3))^4 (a-b)^2 (b-c)^2 (c-a)^2 as an integer polynomial in n, M.
Integer r1_polynomial(const Integer& n, const Integer& M);
/// R_1(n, Tn/2) / n^4 as an integer polynomial in n, T.
Integer r2_polynomial(const Integer& n, const Integer& T);
/// The expansions of R_1 and R_2 as printed in the source derivation. They do
/// not equal the quantities above and are kept only so the discrepancy can be
/// reported.
Integer printed_r1_polynomial(const Integer& n, const Integer& M);
Integer printed_r2_polynomial(const Integer& n, const Integer& T);

struct XyzProduct {
  Rational via_r1;
  std::optional<Rational> via_r2;
};

/// XYZ = M^2 (n-1)(n+2)^2 (2M - n(n+3))^5 / (R_1 n^3), and the T-form when n | 2M.
/// Throws std::domain_error("closed form invalid; fall back to componentwise
/// product") when R_1 = 0 or some pairwise sum of roots vanishes, and
/// std::logic_error if the two forms disagree.
XyzProduct xyz_product(int n, const Integer& M);

/// All families whose parameters equal (n, M).
std::vector<KnownFamily> recognize_known_family(int n, const Integer& M);

struct ClassifyOptions {
  bool apply_divisibility = true;
  /// Initial width of root enclosures (2^-80).
  Rational root_width = Rational(Integer(1), Integer(1) << 80);
  /// Refinement stops once root enclosures are narrower than 2^-max_precision_bits.
  unsigned max_precision_bits = 320;
  bool analyze_derived = true;
};

/// The full exact pipeline: range, divisibility, root structure, sign
/// pattern, distribution integrality, family recognition, derived codes.
CandidateReport classify(int n, const Integer& M, const ClassifyOptions& options = {});

struct ScanOptions {
  bool verbose = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool apply_divisibility = true;
  bool use_prefilter = true;
  /// Also report M = n(n+1) for dimensions carrying a tight 5-design family.
  bool include_tight = true;
  ClassifyOptions classify;
  std::function<void(int n)> on_dimension_done;
};

struct ScanResult {
  std::vector<CandidateReport> records;  // sorted by (n, M)
  std::map<Status, std::uint64_t> counts;
  std::uint64_t examined = 0;
  std::uint64_t exact_checks = 0;  // candidates the prefilter could not settle
};

/// Iterates M over (n(n+1), n(n+1)(n+5)/6] for every n in [n_lo, n_hi].
ScanResult scan_range(int n_lo, int n_hi, const ScanOptions& options = {});

/// Classifies one (n, M) the way scan_range does (prefilter first).
CandidateReport scan_candidate(int n, std::int64_t M, const ScanOptions& options, bool* used_exact = nullptr);

}  // namespace tridesign
