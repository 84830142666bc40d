#include "tridesign/derived_codes.hpp"

#include "tridesign/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace tridesign {

std::string to_string(DerivedTag tag) {
  switch (tag) {
    case DerivedTag::A:
      return "a";
    case DerivedTag::B:
      return "b";
    case DerivedTag::C:
      return "c";
  }
  return "?";
}

std::string to_string(DerivedVerdict verdict) {
  switch (verdict) {
    case DerivedVerdict::Pass:
      return "Pass";
    case DerivedVerdict::ContradictionNonInteger:
      return "ContradictionNonInteger";
    case DerivedVerdict::ContradictionNegative:
      return "ContradictionNegative";
    case DerivedVerdict::InconsistentMoment3:
      return "InconsistentMoment3";
    case DerivedVerdict::Skipped:
      return "Skipped";
  }
  return "?";
}

std::array<Rational, 3> DistanceDistribution::values() const {
  if (!is_exact()) {
    throw std::logic_error("distance distribution is not exact");
  }
  return {counts[0].lo, counts[1].lo, counts[2].lo};
}

std::vector<Rational> derived_inner_products(const InnerProductTriple& triple, DerivedTag which) {
  const auto abc = triple.values();
  const Rational& u = abc[static_cast<std::size_t>(which)];
  if (u == -1) {
    throw std::domain_error("antipodal derived code is a single point");
  }
  if (u == 1) {
    throw std::domain_error("inner product 1 does not define a derived code");
  }
  const Rational scale = 1 - u * u;
  std::vector<Rational> out;
  for (const auto& t : abc) {
    const Rational p = (t - u * u) / scale;
    if (p >= -1 && p < 1 && std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DerivedDistribution derived_distribution(int n, const Rational& cardinality, const std::vector<Rational>& products) {
  if (products.empty() || products.size() > 3) {
    throw std::invalid_argument("derived_distribution: need 1 to 3 inner products");
  }
  if (n < 3) {
    throw std::invalid_argument("derived_distribution: parent dimension must be at least 3");
  }
  std::array<Rational, 4> rhs;
  for (unsigned i = 0; i < 4; ++i) {
    rhs[i] = monomial_mean(i, n - 1) * cardinality - 1;
  }
  const std::size_t k = products.size();
  DerivedDistribution out;
  out.values = solve_vandermonde<Rational>(products, std::span<const Rational>(rhs).first(k));
  out.higher_moments_hold = true;
  for (auto i = static_cast<unsigned>(k); i < 4; ++i) {
    if (weighted_power_sum<Rational>(products, out.values, i) != rhs[i]) {
      out.higher_moments_hold = false;
    }
  }
  return out;
}

namespace {

DerivedCodeReport skipped(DerivedTag tag, std::string reason) {
  DerivedCodeReport r;
  r.which = tag;
  r.verdict = DerivedVerdict::Skipped;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

std::vector<DerivedCodeReport> derived_analysis(int n, const Integer& /*cardinality*/, const InnerProductTriple& triple,
                                                const DistanceDistribution& distribution) {
  std::vector<DerivedCodeReport> reports;
  constexpr std::array tags{DerivedTag::A, DerivedTag::B, DerivedTag::C};
  if (!triple.is_exact()) {
    for (auto tag : tags) {
      reports.push_back(skipped(tag, "irrational inner products"));
    }
    return reports;
  }
  for (auto tag : tags) {
    const RationalInterval& count = distribution.counts[static_cast<std::size_t>(tag)];
    if (!count.is_point() || !is_integer(count.lo) || count.lo < 0) {
      reports.push_back(skipped(tag, "derived code cardinality is not a nonnegative integer"));
      continue;
    }
    if (count.lo == 0) {
      reports.push_back(skipped(tag, "empty derived code"));
      continue;
    }
    std::vector<Rational> products;
    try {
      products = derived_inner_products(triple, tag);
    } catch (const std::domain_error& e) {
      reports.push_back(skipped(tag, e.what()));
      continue;
    }
    if (products.empty()) {
      reports.push_back(skipped(tag, "no derived inner products in [-1, 1)"));
      continue;
    }
    DerivedCodeReport r;
    r.which = tag;
    r.cardinality = count.lo;
    r.products = products;
    const DerivedDistribution dist = derived_distribution(n, count.lo, products);
    r.values = dist.values;
    Rational sum = 0;
    for (const auto& v : r.values) {
      sum += v;
    }
    if (sum != count.lo - 1) {
      throw std::logic_error("derived distribution violates the t^0 equation");
    }
    const bool integral = std::all_of(r.values.begin(), r.values.end(), [](const Rational& v) { return is_integer(v); });
    const bool nonnegative = std::all_of(r.values.begin(), r.values.end(), [](const Rational& v) { return v >= 0; });
    if (!integral) {
      r.verdict = DerivedVerdict::ContradictionNonInteger;
    } else if (!nonnegative) {
      r.verdict = DerivedVerdict::ContradictionNegative;
    } else if (!dist.higher_moments_hold) {
      r.verdict = DerivedVerdict::InconsistentMoment3;
    } else {
      r.verdict = DerivedVerdict::Pass;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

bool any_contradiction(const std::vector<DerivedCodeReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const DerivedCodeReport& r) { return r.is_contradiction(); });
}

}  // namespace tridesign
