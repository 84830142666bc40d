#include "tridesign/feasibility.hpp"

#include "tridesign/moments.hpp"
#include "tridesign/prefilter.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tridesign {

std::string to_string(const KnownFamily& family) {
  std::string out = family.tag == FamilyTag::Tight5 ? "Tight5" : "Case3";
  out += family.m ? "(m=" + std::to_string(*family.m) + ")" : "(icosahedron)";
  return out;
}

namespace {

constexpr std::array kStatusNames{
    std::pair{Status::OutOfRange, "OutOfRange"},
    std::pair{Status::RejectedDivisibility, "RejectedDivisibility"},
    std::pair{Status::RejectedRootStructure, "RejectedRootStructure"},
    std::pair{Status::RejectedSignPattern, "RejectedSignPattern"},
    std::pair{Status::RejectedNonIntegerDistribution, "RejectedNonIntegerDistribution"},
    std::pair{Status::KnownFamilyMatch, "KnownFamilyMatch"},
    std::pair{Status::SurvivorRefutedByDerived, "SurvivorRefutedByDerived"},
    std::pair{Status::SurvivorUnresolved, "SurvivorUnresolved"},
};

}  // namespace

std::string to_string(Status status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) {
      return name;
    }
  }
  return "?";
}

std::optional<Status> parse_status(const std::string& text) {
  for (const auto& [s, name] : kStatusNames) {
    if (text == name) {
      return s;
    }
  }
  return std::nullopt;
}

bool is_rejection(Status status) {
  return status == Status::RejectedDivisibility || status == Status::RejectedRootStructure ||
         status == Status::RejectedSignPattern || status == Status::RejectedNonIntegerDistribution;
}

std::pair<Integer, Integer> cardinality_bounds(int n) {
  if (n < 2) {
    throw std::invalid_argument("cardinality_bounds: dimension must be at least 2");
  }
  const Integer nn = n;
  return {nn * (nn + 1), nn * (nn + 1) * (nn + 5) / 6};
}

std::optional<Integer> divisibility_filter(int n, const Integer& M) {
  if (n <= 0) {
    return std::nullopt;
  }
  const Integer twice = 2 * M;
  if (twice % n != 0) {
    return std::nullopt;
  }
  return Integer(twice / n);
}

Polynomial inner_product_cubic(int n, const Integer& M) {
  const Integer nn = n;
  const Integer lead = (nn + 2) * (nn * (nn + 3) - 2 * M);
  if (lead == 0) {
    throw std::domain_error("cubic degenerates");
  }
  return Polynomial{Rational(nn * (nn - 1)), Rational(6 * M - 5 * nn * nn - 7 * nn), Rational(-nn * (nn + 2) * (nn - 1)),
                    Rational(lead)};
}

Polynomial quadratic_for_ab(int n, const Rational& c) {
  const Rational n2 = n + 2;
  return Polynomial{3 - n2 * c * c, 2 * c * (c + 1) * n2, n2 * (n2 * c * c + 2 * c - 1)};
}

VietaSymmetrics vieta_symmetrics(int n, const Integer& M) {
  const Polynomial cubic = inner_product_cubic(n, M);
  const Rational& a = cubic.leading();
  return {-cubic.coefficient(2) / a, cubic.coefficient(1) / a, -cubic.coefficient(0) / a};
}

DistanceDistribution distance_distribution(int n, const Integer& M, const InnerProductTriple& roots) {
  const auto nodes = roots.enclosures();
  std::array<RationalInterval, 6> rhs;
  for (unsigned i = 0; i < 6; ++i) {
    rhs[i] = RationalInterval(Rational(M) * monomial_mean(i, n) - 1);
  }
  const auto w = solve_vandermonde<RationalInterval>(nodes, std::span(rhs).first(3));
  DistanceDistribution dist;
  std::copy(w.begin(), w.end(), dist.counts.begin());
  for (unsigned i = 3; i < 6; ++i) {
    if (!weighted_power_sum<RationalInterval>(nodes, dist.counts, i).contains(rhs[i].lo)) {
      throw std::domain_error("moment mismatch");
    }
  }
  return dist;
}

DistanceDistribution closed_form_distribution(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 || b == 0 || c == 0 || a == b || b == c || a == c || a + b == 0 || b + c == 0 || c + a == 0) {
    throw std::domain_error("degenerate: use moment solve");
  }
  auto one = [](const Rational& u, const Rational& v, const Rational& w) {
    return -(1 - v * v) * (1 - w * w) / (u * (u * u - v * v) * (u * u - w * w));
  };
  DistanceDistribution d;
  d.counts = {RationalInterval(one(a, b, c)), RationalInterval(one(b, c, a)), RationalInterval(one(c, a, b))};
  return d;
}

namespace {

Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

Integer r1_polynomial(const Integer& n, const Integer& M) {
  auto N = [&](unsigned e) { return ipow(n, e); };
  auto P = [&](unsigned e) { return ipow(M, e); };
  return 1728 * P(4) - 5184 * P(3) * N(2) - 8640 * P(3) * n + 144 * P(2) * N(5) + 5760 * P(2) * N(4) +
         19152 * P(2) * N(3) + 16416 * P(2) * N(2) - 240 * M * N(7) - 3136 * M * N(6) - 13920 * M * N(5) -
         24000 * M * N(4) - 14000 * M * N(3) + 4 * N(10) + 88 * N(9) + 780 * N(8) + 3536 * N(7) + 8540 * N(6) +
         10200 * N(5) + 4500 * N(4);
}

Integer r2_polynomial(const Integer& n, const Integer& T) {
  auto N = [&](unsigned e) { return ipow(n, e); };
  auto P = [&](unsigned e) { return ipow(T, e); };
  return 108 * P(4) - 648 * P(3) * n - 1080 * P(3) + 36 * P(2) * N(3) + 1440 * P(2) * N(2) + 4788 * P(2) * n +
         4104 * P(2) - 120 * T * N(4) - 1568 * T * N(3) - 6960 * T * N(2) - 12000 * T * n - 7000 * T + 4 * N(6) +
         88 * N(5) + 780 * N(4) + 3536 * N(3) + 8540 * N(2) + 10200 * n + 4500;
}

Integer printed_r1_polynomial(const Integer& n, const Integer& M) {
  auto N = [&](unsigned e) { return ipow(n, e); };
  auto P = [&](unsigned e) { return ipow(M, e); };
  return 1728 * P(4) - 5184 * P(3) * N(2) - 8640 * P(3) * n + 360 * P(2) * N(5) + 5544 * P(2) * N(4) +
         18936 * P(2) * N(3) + 16632 * P(2) * N(2) - 528 * M * N(7) - 3424 * M * N(6) - 13056 * M * N(5) -
         23712 * M * N(4) - 14576 * M * N(3) + 4 * N(10) + 178 * N(9) + 1086 * N(8) + 3428 * N(7) + 7856 * N(6) +
         10218 * N(5) + 4878 * N(4);
}

Integer printed_r2_polynomial(const Integer& n, const Integer& T) {
  auto N = [&](unsigned e) { return ipow(n, e); };
  auto P = [&](unsigned e) { return ipow(T, e); };
  return 108 * P(4) - 648 * P(3) * N(2) - 1080 * P(3) * n + 90 * P(2) * N(5) + 1386 * P(2) * N(4) +
         4734 * P(2) * N(3) + 4158 * P(2) * N(2) - 264 * T * N(7) - 1712 * T * N(6) - 6528 * T * N(5) -
         11856 * T * N(4) - 7288 * T * N(3) + 2 * (n + 1) * (n + 3) * (2 * N(4) + 81 * N(3) + 213 * N(2) + 619 * n + 813);
}

XyzProduct xyz_product(int n, const Integer& M) {
  const VietaSymmetrics v = vieta_symmetrics(n, M);
  // (a+b)(b+c)(c+a) = e1 e2 - e3
  if (v.e1 * v.e2 - v.e3 == 0) {
    throw std::domain_error("closed form invalid; fall back to componentwise product");
  }
  const Integer nn = n;
  const Integer r1 = r1_polynomial(nn, M);
  if (r1 == 0) {
    throw std::domain_error("closed form invalid; fall back to componentwise product");
  }
  XyzProduct out;
  out.via_r1 = Rational(M * M * (nn - 1) * (nn + 2) * (nn + 2) * ipow(2 * M - nn * (nn + 3), 5), r1 * ipow(nn, 3));
  if (auto T = divisibility_filter(n, M)) {
    const Integer r2 = r2_polynomial(nn, *T);
    out.via_r2 = Rational(*T * *T * (nn - 1) * (nn + 2) * (nn + 2) * ipow(*T - nn - 3, 5), 4 * r2);
    if (*out.via_r2 != out.via_r1) {
      throw std::logic_error("R_1 and R_2 forms of XYZ disagree");
    }
  }
  return out;
}

namespace {

std::optional<int> exact_sqrt(const Integer& v) {
  if (v < 0) {
    return std::nullopt;
  }
  const Integer r = sqrt(v);
  if (r * r != v) {
    return std::nullopt;
  }
  return r.convert_to<int>();
}

}  // namespace

std::vector<KnownFamily> recognize_known_family(int n, const Integer& M) {
  std::vector<KnownFamily> out;
  const Integer nn = n;
  if (n >= 3 && M == nn * (nn + 1)) {
    if (n == 3) {
      out.push_back({FamilyTag::Tight5, std::nullopt});
    } else if (auto m = exact_sqrt(nn + 2); m && *m >= 3 && *m % 2 == 1) {
      out.push_back({FamilyTag::Tight5, *m});
    }
  }
  if ((n + 5) % 3 == 0) {
    if (auto m = exact_sqrt(Integer((n + 5) / 3)); m && *m >= 2) {
      const Integer m4 = ipow(Integer(*m), 4);
      if (2 * M == m4 * nn) {
        out.push_back({FamilyTag::Case3, *m});
      }
    }
  }
  return out;
}

namespace {

int sign_of_root(const IsolatingInterval& x) { return compare_roots(x, IsolatingInterval::exact(0)); }

IsolatingInterval magnitude(const IsolatingInterval& x, int sign) { return sign < 0 ? negate(x) : x; }

bool sign_pattern_holds(const InnerProductTriple& t) {
  const int sa = sign_of_root(t.a());
  const int sb = sign_of_root(t.b());
  const int sc = sign_of_root(t.c());
  if (sa == 0 || sb == 0 || sc == 0) {
    return false;
  }
  const IsolatingInterval abs_a = magnitude(t.a(), sa);
  const IsolatingInterval abs_b = magnitude(t.b(), sb);
  const IsolatingInterval abs_c = magnitude(t.c(), sc);
  return compare_roots(abs_a, abs_c) > 0 && compare_roots(abs_c, abs_b) > 0;
}

}  // namespace

CandidateReport classify(int n, const Integer& M, const ClassifyOptions& options) {
  CandidateReport report;
  report.parameters = {n, M, divisibility_filter(n, M)};
  if (n < 2) {
    report.status = Status::OutOfRange;
    report.note = "dimension below 2";
    return report;
  }
  const auto [lower, upper] = cardinality_bounds(n);
  if (M < lower || M > upper) {
    report.status = Status::OutOfRange;
    report.note = "cardinality outside [n(n+1), n(n+1)(n+5)/6]";
    return report;
  }
  if (!report.parameters.T && options.apply_divisibility) {
    report.status = Status::RejectedDivisibility;
    return report;
  }
  const Integer nn = n;
  if (2 * M == nn * (nn + 3)) {
    report.status = Status::RejectedRootStructure;
    report.note = "cubic degenerates";
    return report;
  }
  const Polynomial cubic = inner_product_cubic(n, M);
  report.cubic = cubic;
  std::vector<IsolatingInterval> roots = isolate_real_roots(cubic, -1, 1);
  if (!roots.empty() && roots.back().is_exact() && roots.back().lo == 1) {
    roots.pop_back();
  }
  if (roots.size() != 3) {
    report.status = Status::RejectedRootStructure;
    report.note = std::to_string(roots.size()) + " distinct roots in [-1, 1)";
    return report;
  }
  InnerProductTriple triple;
  for (std::size_t i = 0; i < 3; ++i) {
    triple.roots[i] = refine_interval(try_exact(roots[i]), options.root_width);
  }
  report.inner_products = triple;

  const bool tight = M == lower;
  if (!tight && !sign_pattern_holds(triple)) {
    report.status = Status::RejectedSignPattern;
    return report;
  }

  const Rational floor_width(Integer(1), Integer(1) << options.max_precision_bits);
  bool unresolved = false;
  for (;;) {
    const DistanceDistribution dist = distance_distribution(n, M, triple);
    report.inner_products = triple;
    report.distribution = dist;
    const bool excluded = std::any_of(dist.counts.begin(), dist.counts.end(),
                                      [](const RationalInterval& c) { return !c.contains_nonnegative_integer(); });
    if (excluded) {
      report.status = Status::RejectedNonIntegerDistribution;
      return report;
    }
    if (triple.is_exact()) {
      break;
    }
    if (triple.max_width() <= floor_width) {
      unresolved = true;
      break;
    }
    triple = triple.refined(std::max(Rational(triple.max_width() / (Integer(1) << 32)), floor_width));
  }

  report.families = recognize_known_family(n, M);
  if (options.analyze_derived) {
    report.derived = derived_analysis(n, M, triple, *report.distribution);
  }
  if (!report.families.empty()) {
    report.status = Status::KnownFamilyMatch;
    return report;
  }
  if (unresolved) {
    report.status = Status::SurvivorUnresolved;
    report.note = "integrality undecided for irrational inner products";
    return report;
  }
  if (any_contradiction(report.derived)) {
    report.status = Status::SurvivorRefutedByDerived;
  } else {
    report.status = Status::SurvivorUnresolved;
    report.note = "derived codes give no contradiction";
  }
  return report;
}

CandidateReport scan_candidate(int n, std::int64_t M, const ScanOptions& options, bool* used_exact) {
  if (used_exact != nullptr) {
    *used_exact = false;
  }
  const std::int64_t nn = n;
  if (options.apply_divisibility && (2 * M) % nn != 0) {
    CandidateReport r;
    r.parameters = {n, Integer(M), std::nullopt};
    r.status = Status::RejectedDivisibility;
    return r;
  }
  if (options.use_prefilter && M > nn * (nn + 1) && prefilter_rejects(n, M)) {
    CandidateReport r;
    r.parameters = {n, Integer(M), divisibility_filter(n, Integer(M))};
    r.status = Status::RejectedNonIntegerDistribution;
    r.note = "certified floating-point screen";
    return r;
  }
  if (used_exact != nullptr) {
    *used_exact = true;
  }
  ClassifyOptions opts = options.classify;
  opts.apply_divisibility = options.apply_divisibility;
  return classify(n, Integer(M), opts);
}

namespace {

struct DimensionResult {
  std::vector<CandidateReport> records;
  std::map<Status, std::uint64_t> counts;
  std::uint64_t examined = 0;
  std::uint64_t exact_checks = 0;
};

DimensionResult scan_dimension(int n, const ScanOptions& options) {
  DimensionResult out;
  const std::int64_t nn = n;
  const std::int64_t lower = nn * (nn + 1);
  const std::int64_t upper = nn * (nn + 1) * (nn + 5) / 6;

  auto record = [&](CandidateReport&& r, bool exact) {
    ++out.examined;
    ++out.counts[r.status];
    if (exact) {
      ++out.exact_checks;
    }
    if (options.verbose || !is_rejection(r.status)) {
      out.records.push_back(std::move(r));
    }
  };

  if (options.include_tight && !recognize_known_family(n, Integer(lower)).empty()) {
    ClassifyOptions opts = options.classify;
    opts.apply_divisibility = options.apply_divisibility;
    record(classify(n, Integer(lower), opts), true);
  }

  const bool enumerate_all = !options.apply_divisibility || options.verbose;
  if (enumerate_all) {
    for (std::int64_t M = lower + 1; M <= upper; ++M) {
      bool exact = false;
      CandidateReport r = scan_candidate(n, M, options, &exact);
      record(std::move(r), exact);
    }
    return out;
  }
  // Only M with n | 2M: M = T n / 2 for T n even.
  const std::int64_t t_first = 2 * lower / nn + 1;
  const std::int64_t t_last = 2 * upper / nn;
  std::uint64_t divisible = 0;
  for (std::int64_t T = t_first; T <= t_last; ++T) {
    if ((T * nn) % 2 != 0) {
      continue;
    }
    ++divisible;
    bool exact = false;
    CandidateReport r = scan_candidate(n, T * nn / 2, options, &exact);
    record(std::move(r), exact);
  }
  const auto skipped = static_cast<std::uint64_t>(upper - lower) - divisible;
  out.examined += skipped;
  if (skipped != 0) {
    out.counts[Status::RejectedDivisibility] += skipped;
  }
  return out;
}

}  // namespace

ScanResult scan_range(int n_lo, int n_hi, const ScanOptions& options) {
  if (n_lo < 2 || n_lo > n_hi) {
    throw std::invalid_argument("scan_range: need 2 <= n_lo <= n_hi");
  }
  const auto dims = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<DimensionResult> results(dims);
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, dims));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      // Largest dimensions first: they dominate the cost.
      const std::size_t k = next.fetch_add(1);
      if (k >= dims) {
        return;
      }
      const int n = n_hi - static_cast<int>(k);
      try {
        results[static_cast<std::size_t>(n - n_lo)] = scan_dimension(n, options);
        if (options.on_dimension_done) {
          options.on_dimension_done(n);
        }
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next.store(dims);
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  ScanResult out;
  for (auto& r : results) {
    out.examined += r.examined;
    out.exact_checks += r.exact_checks;
    for (const auto& [status, count] : r.counts) {
      out.counts[status] += count;
    }
    std::sort(r.records.begin(), r.records.end(),
              [](const CandidateReport& x, const CandidateReport& y) { return x.parameters.M < y.parameters.M; });
    for (auto& rec : r.records) {
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace tridesign
