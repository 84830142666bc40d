#include "tridesign/roots.hpp"

#include <stdexcept>

namespace tridesign {

IsolatingInterval IsolatingInterval::exact(const Rational& r) {
  return {r, r, std::make_shared<const Polynomial>(Polynomial{-r, Rational(1)})};
}

const Rational& IsolatingInterval::value() const {
  if (!is_exact()) {
    throw std::logic_error("value() on a non-degenerate isolating interval");
  }
  return lo;
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Scales to integer coefficients without changing the sign of the polynomial.
Polynomial sign_preserving_primitive(const Polynomial& p) {
  if (p.is_zero()) {
    return p;
  }
  Polynomial prim = p.primitive();
  return p.leading() < 0 ? -prim : prim;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& square_free) {
  chain_.push_back(sign_preserving_primitive(square_free));
  if (square_free.degree() <= 0) {
    return;
  }
  chain_.push_back(sign_preserving_primitive(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (rem.is_zero()) {
      break;
    }
    chain_.push_back(sign_preserving_primitive(-rem));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int previous = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) {
      continue;
    }
    if (previous != 0 && s != previous) {
      ++changes;
    }
    previous = s;
  }
  return changes;
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() <= 0) {
    return 1;
  }
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    m = std::max(m, Rational(abs(p.coefficients()[static_cast<std::size_t>(i)] / p.leading())));
  }
  return m + 1;
}

namespace {

struct Isolator {
  const SturmSequence& sturm;
  std::shared_ptr<const Polynomial> poly;
  std::vector<IsolatingInterval>& out;

  void push_exact(const Rational& r) { out.push_back({r, r, poly}); }

  // Emits the roots in (lo, hi]; cnt is their number.
  void run(const Rational& lo, const Rational& hi, int cnt) {
    if (cnt <= 0) {
      return;
    }
    if (cnt == 1) {
      if (poly->sign_at(hi) == 0) {
        push_exact(hi);
        return;
      }
      emit_single(lo, hi);
      return;
    }
    const Rational mid = (lo + hi) / 2;
    const int left = sturm.variations(lo) - sturm.variations(mid);
    run(lo, mid, left);
    run(mid, hi, cnt - left);
  }

  // Exactly one root in (lo, hi), hi not a root; lo may be a (different) root.
  void emit_single(Rational lo, Rational hi) {
    while (poly->sign_at(lo) == 0) {
      const Rational mid = (lo + hi) / 2;
      if (poly->sign_at(mid) == 0) {
        push_exact(mid);
        return;
      }
      if (sturm.count_roots(mid, hi) == 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.push_back({lo, hi, poly});
  }
};

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) {
    throw std::invalid_argument("isolate_real_roots: zero polynomial");
  }
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0 || lo > hi) {
    return out;
  }
  auto sqf = std::make_shared<const Polynomial>(square_free_part(p));
  const SturmSequence sturm(*sqf);
  Isolator iso{sturm, sqf, out};
  if (sqf->sign_at(lo) == 0) {
    iso.push_exact(lo);
  }
  if (lo < hi) {
    iso.run(lo, hi, sturm.count_roots(lo, hi));
  }
  // Bisection can leave neighbours sharing an endpoint; make them disjoint.
  for (std::size_t k = 1; k < out.size(); ++k) {
    while (out[k - 1].hi >= out[k].lo) {
      out[k - 1] = refine_interval(out[k - 1], out[k - 1].width() / 2);
      out[k] = refine_interval(out[k], out[k].width() / 2);
    }
  }
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
  const Rational bound = cauchy_bound(p);
  return isolate_real_roots(p, -bound, bound);
}

IsolatingInterval refine_interval(const IsolatingInterval& iv, const Rational& width_bound) {
  IsolatingInterval r = iv;
  if (r.is_exact()) {
    return r;
  }
  int lo_sign = r.poly->sign_at(r.lo);
  if (lo_sign == 0) {
    lo_sign = -r.poly->sign_at(r.hi);
  }
  while (r.hi - r.lo > width_bound) {
    const Rational mid = (r.lo + r.hi) / 2;
    const int s = r.poly->sign_at(mid);
    if (s == 0) {
      r.lo = mid;
      r.hi = mid;
      return r;
    }
    if (s == lo_sign) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) {
    throw std::invalid_argument("simplest_between: empty interval");
  }
  const Integer fl = floor_of(lo);
  if (Rational(fl) == lo) {
    return lo;
  }
  if (Rational(fl + 1) <= hi) {
    // Prefer the integer closest to zero for intervals spanning several.
    if (lo <= 0 && hi >= 0) {
      return 0;
    }
    return lo > 0 ? Rational(fl + 1) : Rational(floor_of(hi));
  }
  const Rational base(fl);
  return base + 1 / simplest_between(1 / (hi - base), 1 / (lo - base));
}

namespace {

// Denominator bound from the rational-root theorem: any rational root u/v in
// lowest terms has v dividing the leading coefficient of the primitive form.
Integer denominator_bound(const Polynomial& p) { return abs(p.integer_coefficients().back()); }

std::optional<Rational> rational_root_in(const IsolatingInterval& iv, const Integer& den_bound) {
  if (iv.is_exact()) {
    return iv.lo;
  }
  const Rational width = Rational(Integer(1), den_bound * den_bound * 2);
  const IsolatingInterval tight = refine_interval(iv, width);
  if (tight.is_exact()) {
    return tight.lo;
  }
  const Rational candidate = simplest_between(tight.lo, tight.hi);
  if (denominator_of(candidate) <= den_bound && tight.poly->sign_at(candidate) == 0) {
    return candidate;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) {
    return out;
  }
  const Integer bound = denominator_bound(square_free_part(p));
  for (const auto& iv : isolate_real_roots(p)) {
    if (auto r = rational_root_in(iv, bound)) {
      out.push_back(*r);
    }
  }
  return out;
}

IsolatingInterval try_exact(const IsolatingInterval& iv) {
  if (iv.is_exact()) {
    return iv;
  }
  if (auto r = rational_root_in(iv, denominator_bound(*iv.poly))) {
    return {*r, *r, iv.poly};
  }
  return iv;
}

IsolatingInterval negate(const IsolatingInterval& x) {
  return {-x.hi, -x.lo, std::make_shared<const Polynomial>(x.poly->reflected())};
}

int compare_roots(const IsolatingInterval& x, const IsolatingInterval& y) {
  IsolatingInterval a = x;
  IsolatingInterval b = y;
  const Rational gcd_threshold = Rational(Integer(1), Integer(1) << 64);
  bool gcd_checked = false;
  for (;;) {
    if (a.hi < b.lo) {
      return -1;
    }
    if (b.hi < a.lo) {
      return 1;
    }
    if (a.is_exact() && b.is_exact()) {
      return sign_of(a.lo - b.lo);
    }
    if (a.is_exact() && b.poly->sign_at(a.lo) == 0) {
      return 0;  // a lies inside b's interval and is b's unique root there
    }
    if (b.is_exact() && a.poly->sign_at(b.lo) == 0) {
      return 0;
    }
    if (!gcd_checked && a.width() < gcd_threshold && b.width() < gcd_threshold) {
      gcd_checked = true;
      // Endpoints of non-exact intervals are not roots, so a common root in the
      // open overlap is the unique root of both intervals. Without one the
      // numbers differ and further refinement separates them.
      const Polynomial g = gcd(*a.poly, *b.poly);
      if (g.degree() >= 1) {
        const Rational lo = std::max(a.lo, b.lo);
        const Rational hi = std::min(a.hi, b.hi);
        const SturmSequence sturm(square_free_part(g));
        const int inside = sturm.count_roots(lo, hi) - (g.sign_at(hi) == 0 ? 1 : 0);
        if (inside > 0) {
          return 0;
        }
      }
    }
    a = refine_interval(a, a.width() / 4);
    b = refine_interval(b, b.width() / 4);
  }
}

}  // namespace tridesign
