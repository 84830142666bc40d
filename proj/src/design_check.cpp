#include "tridesign/design_check.hpp"

#include "tridesign/feasibility.hpp"
#include "tridesign/moments.hpp"
#include "tridesign/ortho_poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace tridesign {

namespace {

std::size_t side_of(std::size_t entries) {
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries))));
  if (side * side != entries) {
    throw DesignFormatError("gram matrix is not square");
  }
  return side;
}

}  // namespace

DesignInstance make_exact_gram(int n, std::vector<Rational> gram) {
  DesignInstance d;
  d.dimension = n;
  d.size = side_of(gram.size());
  d.exactness = Exactness::Exact;
  for (std::size_t i = 0; i < d.size; ++i) {
    if (gram[i * d.size + i] != 1) {
      throw DesignFormatError("gram diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Rational& g = gram[i * d.size + j];
      if (g != gram[j * d.size + i]) {
        throw DesignFormatError("asymmetric gram at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (g < -1 || g > 1) {
        throw DesignFormatError("gram entry outside [-1, 1] at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  d.numeric_gram.reserve(gram.size());
  for (const auto& g : gram) {
    d.numeric_gram.push_back(to_double(g));
  }
  d.exact_gram = std::move(gram);
  return d;
}

DesignInstance make_numeric_gram(int n, std::vector<double> gram, double tolerance) {
  DesignInstance d;
  d.dimension = n;
  d.size = side_of(gram.size());
  d.exactness = Exactness::Numeric;
  d.tolerance = tolerance;
  for (std::size_t i = 0; i < d.size; ++i) {
    if (std::fabs(gram[i * d.size + i] - 1.0) > tolerance) {
      throw DesignFormatError("gram diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double g = gram[i * d.size + j];
      if (std::fabs(g - gram[j * d.size + i]) > tolerance) {
        throw DesignFormatError("asymmetric gram at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (std::fabs(g) > 1.0 + tolerance) {
        throw DesignFormatError("gram entry outside [-1, 1] at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  d.numeric_gram = std::move(gram);
  return d;
}

DesignInstance make_exact_coordinates(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) {
    throw DesignFormatError("empty code");
  }
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<Rational> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw DesignFormatError("row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < n; ++k) {
        dot += rows[i][k] * rows[j][k];
      }
      gram[i * m + j] = dot;
      gram[j * m + i] = dot;
    }
    if (gram[i * m + i] != 1) {
      throw DesignFormatError("non-unit vector at row " + std::to_string(i));
    }
  }
  DesignInstance d = make_exact_gram(static_cast<int>(n), std::move(gram));
  d.source = Representation::Coordinates;
  return d;
}

DesignInstance make_numeric_coordinates(const std::vector<std::vector<double>>& rows, double tolerance) {
  if (rows.empty()) {
    throw DesignFormatError("empty code");
  }
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<double> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw DesignFormatError("row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        dot += rows[i][k] * rows[j][k];
      }
      gram[i * m + j] = dot;
      gram[j * m + i] = dot;
    }
    if (std::fabs(gram[i * m + i] - 1.0) > tolerance) {
      throw DesignFormatError("non-unit vector at row " + std::to_string(i));
    }
  }
  DesignInstance d = make_numeric_gram(static_cast<int>(n), std::move(gram), tolerance);
  d.source = Representation::Coordinates;
  return d;
}

GramRealizability check_gram_realizable(const DesignInstance& instance) {
  const std::size_t m = instance.size;
  GramRealizability out;
  out.positive_semidefinite = true;
  if (instance.is_exact()) {
    Integer den = 1;
    for (const auto& g : instance.exact_gram) {
      den = boost::multiprecision::lcm(den, denominator_of(g));
    }
    std::vector<Integer> b(m * m);
    for (std::size_t k = 0; k < m * m; ++k) {
      b[k] = numerator_of(instance.exact_gram[k]) * (den / denominator_of(instance.exact_gram[k]));
    }
    // Bareiss elimination restricted to diagonal pivots; a zero pivot needs a zero row.
    Integer previous = 1;
    std::vector<bool> removed(m, false);
    for (std::size_t k = 0; k < m; ++k) {
      const Integer pivot = b[k * m + k];
      if (pivot < 0) {
        out.positive_semidefinite = false;
        return out;
      }
      if (pivot == 0) {
        for (std::size_t j = k + 1; j < m; ++j) {
          if (!removed[j] && b[k * m + j] != 0) {
            out.positive_semidefinite = false;
            return out;
          }
        }
        removed[k] = true;
        continue;
      }
      ++out.rank;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (removed[i]) {
          continue;
        }
        for (std::size_t j = k + 1; j < m; ++j) {
          if (removed[j]) {
            continue;
          }
          b[i * m + j] = (pivot * b[i * m + j] - b[i * m + k] * b[k * m + j]) / previous;
        }
      }
      previous = pivot;
    }
    return out;
  }
  std::vector<double> a = instance.numeric_gram;
  const double eps = instance.tolerance * static_cast<double>(std::max<std::size_t>(m, 1));
  for (std::size_t k = 0; k < m; ++k) {
    const double pivot = a[k * m + k];
    if (pivot < -eps) {
      out.positive_semidefinite = false;
      return out;
    }
    if (pivot <= eps) {
      continue;
    }
    ++out.rank;
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = a[i * m + k] / pivot;
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i * m + j] -= f * a[k * m + j];
      }
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Header {
  Representation representation = Representation::Gram;
  int dimension = 0;
  std::size_t size = 0;
  std::optional<Exactness> exactness;
};

Header parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  if (word != "design") {
    throw DesignFormatError("header must start with 'design'");
  }
  Header h;
  std::string kind;
  if (!(is >> kind) || (kind != "coords" && kind != "gram")) {
    throw DesignFormatError("header: expected 'coords' or 'gram'");
  }
  h.representation = kind == "coords" ? Representation::Coordinates : Representation::Gram;
  bool have_dim = false;
  bool have_size = false;
  while (is >> word) {
    try {
      if (word.rfind("dim=", 0) == 0) {
        h.dimension = std::stoi(word.substr(4));
        have_dim = true;
      } else if (word.rfind("size=", 0) == 0) {
        h.size = static_cast<std::size_t>(std::stoul(word.substr(5)));
        have_size = true;
      } else if (word == "exact") {
        h.exactness = Exactness::Exact;
      } else if (word == "numeric") {
        h.exactness = Exactness::Numeric;
      } else {
        throw DesignFormatError("header: unknown field '" + word + "'");
      }
    } catch (const std::logic_error&) {
      throw DesignFormatError("header: malformed field '" + word + "'");
    }
  }
  if (!have_dim || !have_size || h.dimension < 2 || h.size == 0) {
    throw DesignFormatError("header: dim>=2 and size>=1 are required");
  }
  return h;
}

}  // namespace

DesignInstance load_design(std::istream& in, const LoadOptions& options) {
  std::string line;
  std::optional<Header> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') {
      continue;
    }
    if (!header) {
      header = parse_header(t);
      continue;
    }
    std::istringstream is(t);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) {
      tokens.push_back(tok);
    }
    const std::size_t expected =
        header->representation == Representation::Coordinates ? static_cast<std::size_t>(header->dimension) : header->size;
    if (tokens.size() != expected) {
      throw DesignFormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                              " tokens, found " + std::to_string(tokens.size()));
    }
    rows.push_back(std::move(tokens));
  }
  if (!header) {
    throw DesignFormatError("missing 'design' header");
  }
  if (rows.size() != header->size) {
    throw DesignFormatError("expected " + std::to_string(header->size) + " rows, found " + std::to_string(rows.size()));
  }
  bool all_rational = true;
  for (const auto& r : rows) {
    for (const auto& tok : r) {
      all_rational = all_rational && is_rational_token(tok);
    }
  }
  Exactness mode = header->exactness.value_or(all_rational ? Exactness::Exact : Exactness::Numeric);
  if (options.require_exact) {
    mode = Exactness::Exact;
  }
  if (mode == Exactness::Exact && !all_rational) {
    throw DesignFormatError("exact mode requires rational tokens");
  }

  DesignInstance d;
  try {
    if (mode == Exactness::Exact) {
      std::vector<std::vector<Rational>> values;
      for (const auto& r : rows) {
        auto& row = values.emplace_back();
        for (const auto& tok : r) {
          row.push_back(parse_rational(tok));
        }
      }
      if (header->representation == Representation::Coordinates) {
        d = make_exact_coordinates(values);
      } else {
        std::vector<Rational> flat;
        for (auto& row : values) {
          flat.insert(flat.end(), row.begin(), row.end());
        }
        d = make_exact_gram(header->dimension, std::move(flat));
      }
    } else {
      std::vector<std::vector<double>> values;
      for (const auto& r : rows) {
        auto& row = values.emplace_back();
        for (const auto& tok : r) {
          row.push_back(is_rational_token(tok) ? to_double(parse_rational(tok)) : std::stod(tok));
        }
      }
      if (header->representation == Representation::Coordinates) {
        d = make_numeric_coordinates(values, options.tolerance);
      } else {
        std::vector<double> flat;
        for (auto& row : values) {
          flat.insert(flat.end(), row.begin(), row.end());
        }
        d = make_numeric_gram(header->dimension, std::move(flat), options.tolerance);
      }
    }
  } catch (const DesignFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw DesignFormatError(std::string("malformed token: ") + e.what());
  }
  if (d.dimension != header->dimension) {
    throw DesignFormatError("coordinate rows do not match dim=" + std::to_string(header->dimension));
  }
  if (options.check_realizable && header->representation == Representation::Gram) {
    const GramRealizability g = check_gram_realizable(d);
    if (!g.positive_semidefinite) {
      throw DesignFormatError("gram matrix is not positive semidefinite");
    }
    if (g.rank > static_cast<std::size_t>(d.dimension)) {
      throw DesignFormatError("gram matrix has rank " + std::to_string(g.rank) + " > dim=" +
                              std::to_string(d.dimension));
    }
  }
  return d;
}

DesignInstance load_design_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw DesignFormatError("cannot open '" + path + "'");
  }
  return load_design(in, options);
}

void write_design(std::ostream& out, const DesignInstance& instance) {
  out << "design gram dim=" << instance.dimension << " size=" << instance.size << " "
      << (instance.is_exact() ? "exact" : "numeric") << "\n";
  for (std::size_t i = 0; i < instance.size; ++i) {
    for (std::size_t j = 0; j < instance.size; ++j) {
      if (j != 0) {
        out << ' ';
      }
      if (instance.is_exact()) {
        out << to_string(instance.exact_at(i, j));
      } else {
        std::ostringstream os;
        os << std::setprecision(17) << instance.numeric_at(i, j);
        out << os.str();
      }
    }
    out << "\n";
  }
}

namespace {

// The 240 roots of E8, scaled by 2 so that every coordinate is an integer.
std::vector<std::array<int, 8>> e8_roots_doubled() {
  std::vector<std::array<int, 8>> roots;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int si : {-2, 2}) {
        for (int sj : {-2, 2}) {
          std::array<int, 8> v{};
          v[static_cast<std::size_t>(i)] = si;
          v[static_cast<std::size_t>(j)] = sj;
          roots.push_back(v);
        }
      }
    }
  }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) {
      continue;
    }
    std::array<int, 8> v{};
    for (unsigned k = 0; k < 8; ++k) {
      v[k] = ((mask >> k) & 1U) != 0 ? -1 : 1;
    }
    roots.push_back(v);
  }
  return roots;
}

// Inner product of the underlying (unscaled) roots; norms are 2.
int e8_dot(const std::array<int, 8>& x, const std::array<int, 8>& y) {
  int s = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    s += x[k] * y[k];
  }
  return s / 4;
}

DesignInstance e8_roots_240() {
  const auto roots = e8_roots_doubled();
  const std::size_t m = roots.size();
  std::vector<Rational> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gram[i * m + j] = Rational(e8_dot(roots[i], roots[j]), 2);
    }
  }
  return make_exact_gram(8, std::move(gram));
}

DesignInstance e8_derived_56() {
  const auto roots = e8_roots_doubled();
  const std::array<int, 8> base{2, 2, 0, 0, 0, 0, 0, 0};
  std::vector<std::array<int, 8>> selected;
  for (const auto& r : roots) {
    if (e8_dot(r, base) == 1) {
      selected.push_back(r);
    }
  }
  // Project away from the base point: t -> (t - u^2) / (1 - u^2) with u = 1/2.
  const Rational u(1, 2);
  const std::size_t m = selected.size();
  std::vector<Rational> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational t(e8_dot(selected[i], selected[j]), 2);
      gram[i * m + j] = (t - u * u) / (1 - u * u);
    }
  }
  return make_exact_gram(7, std::move(gram));
}

DesignInstance regular_polygon_numeric(int sides) {
  const auto m = static_cast<std::size_t>(sides);
  std::vector<double> gram(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto k = static_cast<double>((static_cast<long>(i) - static_cast<long>(j) + sides) % sides);
      gram[i * m + j] = i == j ? 1.0 : std::cos(2.0 * std::numbers::pi * k / sides);
    }
  }
  return make_numeric_gram(2, std::move(gram));
}

DesignInstance hexagon_exact() {
  const std::array<Rational, 6> cosines{1, Rational(1, 2), Rational(-1, 2), -1, Rational(-1, 2), Rational(1, 2)};
  std::vector<Rational> gram(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      gram[i * 6 + j] = cosines[(i + 6 - j) % 6];
    }
  }
  return make_exact_gram(2, std::move(gram));
}

DesignInstance icosahedron_numeric() {
  const double phi = std::numbers::phi;
  const double norm = std::sqrt(1.0 + phi * phi);
  std::vector<std::vector<double>> rows;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      const double p = s1 / norm;
      const double q = s2 * phi / norm;
      rows.push_back({0.0, p, q});
      rows.push_back({p, q, 0.0});
      rows.push_back({q, 0.0, p});
    }
  }
  return make_numeric_coordinates(rows);
}

}  // namespace

std::vector<std::string> fixture_names() { return {"hexagon", "heptagon", "icosahedron", "e8_derived_56", "e8_roots_240"}; }

DesignInstance fixture(const std::string& name) {
  if (name == "hexagon") {
    return hexagon_exact();
  }
  if (name == "heptagon") {
    return regular_polygon_numeric(7);
  }
  if (name == "icosahedron") {
    return icosahedron_numeric();
  }
  if (name == "e8_derived_56") {
    return e8_derived_56();
  }
  if (name == "e8_roots_240") {
    return e8_roots_240();
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

SpectrumReport spectrum(const DesignInstance& instance) {
  SpectrumReport out;
  const std::size_t m = instance.size;
  out.per_point.assign(m, {});
  if (instance.is_exact()) {
    std::map<Rational, std::size_t> totals;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) {
          ++totals[instance.exact_at(i, j)];
        }
      }
    }
    std::map<Rational, std::size_t> index;
    for (const auto& [v, c] : totals) {
      index[v] = out.distinct.size();
      out.distinct.push_back({to_double(v), v, c});
    }
    for (std::size_t i = 0; i < m; ++i) {
      out.per_point[i].assign(out.distinct.size(), 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) {
          ++out.per_point[i][index[instance.exact_at(i, j)]];
        }
      }
    }
  } else {
    // Values closer than 1e3 * tolerance are the same inner product.
    const double cluster = 1e3 * instance.tolerance;
    std::vector<double> values;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) {
          values.push_back(instance.numeric_at(i, j));
        }
      }
    }
    std::sort(values.begin(), values.end());
    for (double v : values) {
      if (out.distinct.empty() || v - out.distinct.back().value > cluster) {
        out.distinct.push_back({v, std::nullopt, 0});
      }
      ++out.distinct.back().count;
    }
    auto nearest = [&](double v) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < out.distinct.size(); ++k) {
        if (std::fabs(out.distinct[k].value - v) < std::fabs(out.distinct[best].value - v)) {
          best = k;
        }
      }
      return best;
    };
    for (std::size_t i = 0; i < m; ++i) {
      out.per_point[i].assign(out.distinct.size(), 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) {
          ++out.per_point[i][nearest(instance.numeric_at(i, j))];
        }
      }
    }
  }
  out.constant_across_points =
      std::all_of(out.per_point.begin(), out.per_point.end(), [&](const auto& row) { return row == out.per_point.front(); });
  return out;
}

int design_strength(const DesignInstance& instance, int tau_max) {
  if (tau_max < 1) {
    throw std::invalid_argument("design_strength: tau_max must be at least 1");
  }
  const std::size_t m = instance.size;
  std::map<Rational, std::size_t> histogram;
  if (instance.is_exact()) {
    for (const auto& g : instance.exact_gram) {
      ++histogram[g];
    }
  }
  for (int k = 1; k <= tau_max; ++k) {
    const Polynomial pk = gegenbauer_polynomial(static_cast<unsigned>(k), instance.dimension);
    bool vanishes = false;
    if (instance.is_exact()) {
      Rational total = 0;
      for (const auto& [v, c] : histogram) {
        total += pk(v) * static_cast<long>(c);
      }
      vanishes = total == 0;
    } else {
      double total = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          row += pk.evaluate(instance.numeric_at(i, j));
        }
        total += row;
      }
      vanishes = std::fabs(total) <= instance.tolerance * static_cast<double>(m * m);
    }
    if (!vanishes) {
      return k - 1;
    }
  }
  return tau_max;
}

bool WitnessReport::all_passed() const {
  return precondition_met && std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.passed; });
}

namespace {

std::string join_counts(const std::vector<std::size_t>& counts) {
  std::string s = "(";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    s += (k != 0 ? ", " : "") + std::to_string(counts[k]);
  }
  return s + ")";
}

}  // namespace

WitnessReport verify_conjecture_witness(const DesignInstance& instance) {
  WitnessReport report;
  const SpectrumReport spec = spectrum(instance);
  if (spec.distinct.size() != 3) {
    report.precondition_detail =
        "expected exactly 3 distinct inner products, found " + std::to_string(spec.distinct.size());
    return report;
  }
  report.precondition_met = true;
  const int n = instance.dimension;
  const Integer M = static_cast<long>(instance.size);
  const double tol = instance.tolerance;

  report.strength = design_strength(instance, 7);
  report.checks.push_back({"strength", report.strength >= 5, "strength " + std::to_string(report.strength)});

  report.checks.push_back({"point_independent_distribution", spec.constant_across_points,
                           "per-point distribution " + join_counts(spec.per_point.front())});

  const auto& observed = spec.per_point.front();
  if (instance.is_exact()) {
    const InnerProductTriple triple =
        InnerProductTriple::from_values(*spec.distinct[0].exact, *spec.distinct[1].exact, *spec.distinct[2].exact);
    const Rational& s = *spec.distinct[2].exact;
    {
      WitnessCheck c{"distribution_matches_moment_solve", false, ""};
      try {
        const auto expected = distance_distribution(n, M, triple).values();
        c.passed = expected[0] == observed[0] && expected[1] == observed[1] && expected[2] == observed[2];
        c.detail = "moment solve (" + to_string(expected[0]) + ", " + to_string(expected[1]) + ", " +
                   to_string(expected[2]) + ")";
      } catch (const std::exception& e) {
        c.detail = e.what();
      }
      report.checks.push_back(c);
    }
    {
      WitnessCheck c{"levenshtein_roots", false, ""};
      if (s > -1 && s < 1) {
        const Polynomial lev = levenshtein_polynomial(3, n, s);
        c.passed = lev.degree() == 3 && lev(*spec.distinct[0].exact) == 0 && lev(*spec.distinct[1].exact) == 0;
        c.detail = "P3(t)P2(s) - P3(s)P2(t) at s = " + to_string(s);
      }
      report.checks.push_back(c);
    }
    {
      WitnessCheck c{"levenshtein_bound", false, ""};
      try {
        const Rational bound = levenshtein_bound_l5(n, s);
        c.passed = bound == Rational(M);
        c.detail = "L5(n, s) = " + to_string(bound);
      } catch (const std::exception& e) {
        c.detail = e.what();
      }
      report.checks.push_back(c);
    }
    return report;
  }

  const std::array<double, 3> nodes{spec.distinct[0].value, spec.distinct[1].value, spec.distinct[2].value};
  const double s = nodes[2];
  {
    std::array<double, 3> rhs{};
    for (unsigned i = 0; i < 3; ++i) {
      rhs[i] = static_cast<double>(instance.size) * to_double(monomial_mean(i, n)) - 1.0;
    }
    const auto expected = solve_vandermonde<double>(nodes, rhs);
    bool ok = true;
    std::ostringstream detail;
    detail << "moment solve (" << std::setprecision(12);
    for (std::size_t k = 0; k < 3; ++k) {
      ok = ok && std::fabs(expected[k] - static_cast<double>(observed[k])) <= 1e-6;
      detail << (k != 0 ? ", " : "") << expected[k];
    }
    detail << ")";
    report.checks.push_back({"distribution_matches_moment_solve", ok, detail.str()});
  }
  {
    const Polynomial p3 = jacobi_polynomial(3, n);
    const Polynomial p2 = jacobi_polynomial(2, n);
    auto lev = [&](double t) { return p3.evaluate(t) * p2.evaluate(s) - p3.evaluate(s) * p2.evaluate(t); };
    const bool ok = std::fabs(lev(nodes[0])) <= 1e3 * tol && std::fabs(lev(nodes[1])) <= 1e3 * tol;
    std::ostringstream detail;
    detail << "numeric, tolerance " << 1e3 * tol;
    report.checks.push_back({"levenshtein_roots", ok, detail.str()});
  }
  {
    const double nn = n;
    const double bound = nn * ((nn + 2) * (nn + 3) * s * s + 4 * (nn + 2) * s - nn + 1) * (1 - s) /
                         (2 * s * (3 - (nn + 2) * s * s));
    const double mm = static_cast<double>(instance.size);
    std::ostringstream detail;
    detail << std::setprecision(12) << "L5(n, s) = " << bound;
    report.checks.push_back({"levenshtein_bound", std::fabs(bound - mm) <= 1e-6 * mm, detail.str()});
  }
  return report;
}

}  // namespace tridesign
