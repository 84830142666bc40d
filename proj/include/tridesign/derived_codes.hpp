#pragma once

#include "tridesign/distribution.hpp"
#include "tridesign/triple.hpp"

#include <string>
#include <vector>

namespace tridesign {

enum class DerivedTag { A, B, C };

enum class DerivedVerdict { Pass, ContradictionNonInteger, ContradictionNegative, InconsistentMoment3, Skipped };

std::string to_string(DerivedTag tag);
std::string to_string(DerivedVerdict verdict);

/// Distance distribution analysis of the code formed by the points at inner
/// product u in {a, b, c} from a fixed point, rescaled onto S^{n-2}.
struct DerivedCodeReport {
  DerivedTag which = DerivedTag::A;
  Rational cardinality;
  std::vector<Rational> products;  // ascending, each in [-1, 1)
  std::vector<Rational> values;    // aligned with products
  DerivedVerdict verdict = DerivedVerdict::Skipped;
  std::string reason;  // set when Skipped

  bool is_contradiction() const {
    return verdict == DerivedVerdict::ContradictionNonInteger || verdict == DerivedVerdict::ContradictionNegative ||
           verdict == DerivedVerdict::InconsistentMoment3;
  }
};

/// Cosine-law images (t - u^2)/(1 - u^2) of a, b, c for the chosen base inner
/// product u, restricted to [-1, 1) with duplicates merged.
/// Throws std::domain_error when u = -1 (the derived code is a single point).
std::vector<Rational> derived_inner_products(const InnerProductTriple& triple, DerivedTag which);

struct DerivedDistribution {
  std::vector<Rational> values;
  bool higher_moments_hold = false;  // the equations beyond the solved ones, up to t^3
};

/// Solves sum_j p_j^i V_j = f_i(n-1) * cardinality - 1 for i < |products| and
/// checks the remaining equations up to i = 3. n is the dimension of the parent code.
DerivedDistribution derived_distribution(int n, const Rational& cardinality, const std::vector<Rational>& products);

/// One report per tag a, b, c. Irrational triples give three Skipped reports.
std::vector<DerivedCodeReport> derived_analysis(int n, const Integer& cardinality, const InnerProductTriple& triple,
                                                const DistanceDistribution& distribution);

bool any_contradiction(const std::vector<DerivedCodeReport>& reports);

}  // namespace tridesign
