#pragma once

#include "tridesign/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridesign {

enum class Representation { Coordinates, Gram };
enum class Exactness { Exact, Numeric };

/// A finite code on S^{n-1}, held by its Gram matrix (row-major, size x size).
/// The numeric Gram is always populated; the exact Gram only for exact instances.
struct DesignInstance {
  int dimension = 0;
  std::size_t size = 0;
  Representation source = Representation::Gram;
  Exactness exactness = Exactness::Exact;
  std::vector<Rational> exact_gram;
  std::vector<double> numeric_gram;
  double tolerance = 1e-9;

  bool is_exact() const { return exactness == Exactness::Exact; }
  const Rational& exact_at(std::size_t i, std::size_t j) const { return exact_gram[i * size + j]; }
  double numeric_at(std::size_t i, std::size_t j) const { return numeric_gram[i * size + j]; }
};

class DesignFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates diagonal, symmetry and range; throws DesignFormatError.
DesignInstance make_exact_gram(int n, std::vector<Rational> gram);
DesignInstance make_numeric_gram(int n, std::vector<double> gram, double tolerance = 1e-9);
/// Rows are unit vectors (exactly / within tolerance).
DesignInstance make_exact_coordinates(const std::vector<std::vector<Rational>>& rows);
DesignInstance make_numeric_coordinates(const std::vector<std::vector<double>>& rows, double tolerance = 1e-9);

struct GramRealizability {
  bool positive_semidefinite = false;
  std::size_t rank = 0;
};

/// Exact instances use fraction-free symmetric elimination; numeric ones a
/// tolerance-guarded LDL^T.
GramRealizability check_gram_realizable(const DesignInstance& instance);

struct LoadOptions {
  bool require_exact = false;
  /// Gram inputs are checked for positive semidefiniteness and rank <= n.
  bool check_realizable = true;
  double tolerance = 1e-9;
};

/// Text format:
///   design <coords|gram> dim=<n> size=<M> [exact|numeric]
///   M rows of whitespace separated tokens (decimal or p/q); '#' starts a comment line.
DesignInstance load_design(std::istream& in, const LoadOptions& options = {});
DesignInstance load_design_file(const std::string& path, const LoadOptions& options = {});
void write_design(std::ostream& out, const DesignInstance& instance);

/// hexagon, heptagon, icosahedron, e8_derived_56, e8_roots_240.
DesignInstance fixture(const std::string& name);
std::vector<std::string> fixture_names();

struct SpectrumEntry {
  double value = 0.0;
  std::optional<Rational> exact;
  std::size_t count = 0;
};

struct SpectrumReport {
  /// Distinct inner products (off the diagonal), ascending, with total counts.
  std::vector<SpectrumEntry> distinct;
  /// per_point[x][k] = A_{distinct[k]}(x).
  std::vector<std::vector<std::size_t>> per_point;
  bool constant_across_points = false;
};

SpectrumReport spectrum(const DesignInstance& instance);

/// Largest tau <= tau_max with sum_{x,y} P_k(<x,y>) = 0 for all 1 <= k <= tau
/// (numeric instances: |sum| <= tolerance * M^2).
int design_strength(const DesignInstance& instance, int tau_max);

struct WitnessCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct WitnessReport {
  bool precondition_met = false;
  std::string precondition_detail;
  int strength = 0;
  std::vector<WitnessCheck> checks;

  bool all_passed() const;
};

/// Checks a 3-distance code against the 5-design structure: strength >= 5,
/// point-independent distribution, distribution equal to the moment solve,
/// inner products equal to the Levenshtein polynomial roots, and M = L_5(n, s).
WitnessReport verify_conjecture_witness(const DesignInstance& instance);

}  // namespace tridesign
