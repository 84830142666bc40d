#include "tridesign/interval.hpp"
#include "tridesign/polynomial.hpp"
#include "tridesign/rational.hpp"
#include "tridesign/roots.hpp"

#include "doctest.h"

#include <random>

using namespace tridesign;

namespace {

Polynomial from_roots(std::initializer_list<Rational> roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) {
    p *= Polynomial{-r, 1};
  }
  return p;
}

bool contains(const IsolatingInterval& iv, const Rational& x) { return iv.lo <= x && x <= iv.hi; }

}  // namespace

TEST_SUITE("exact-core") {
  TEST_CASE("rational text round trip") {
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("007/010") == Rational(7, 10));
    CHECK(parse_integer("-0123") == -123);
    CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
    CHECK(is_rational_token("3/4"));
    CHECK_FALSE(is_rational_token("0.75"));
  }

  TEST_CASE("canonical form") {
    const Rational r(Integer(-10), Integer(-4));
    CHECK(numerator_of(r) == 5);
    CHECK(denominator_of(r) == 2);
    CHECK(floor_of(Rational(-7, 2)) == -4);
    CHECK(ceil_of(Rational(-7, 2)) == -3);
    CHECK(denominator_of(Rational(0)) == 1);
  }

  TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(2, 48) == 4);
    CHECK(p_adic_valuation(3, 54) == 3);
    CHECK(p_adic_valuation(5, 7) == 0);
    CHECK(p_adic_valuation(2, -48) == 4);
    CHECK_THROWS_WITH_AS(p_adic_valuation(2, 0), "valuation undefined", std::domain_error);
    CHECK_THROWS_AS(p_adic_valuation(4, 16), std::invalid_argument);
  }

  TEST_CASE("valuation is additive") {
    std::mt19937_64 rng(20261017);
    std::uniform_int_distribution<long> value(1, 1'000'000'000);
    const std::array<int, 5> primes{2, 3, 5, 7, 101};
    for (int k = 0; k < 500; ++k) {
      const Integer a = value(rng);
      const Integer b = value(rng);
      for (int p : primes) {
        CHECK(p_adic_valuation(p, a * b) == p_adic_valuation(p, a) + p_adic_valuation(p, b));
      }
    }
  }

  TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000'000'000, 1'000'000'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000'000'000);
    for (int k = 0; k < 1000; ++k) {
      const Rational x(num(rng), den(rng));
      Rational y(num(rng), den(rng));
      if (y == 0) {
        y = 1;
      }
      CHECK((x + y) - y == x);
      CHECK((x * y) / y == x);
    }
  }

  TEST_CASE("polynomial basics") {
    const Polynomial p{-1, -1, 9, 9};
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "9*t^3 + 9*t^2 - t - 1");
    CHECK(p(Rational(1, 3)) == 0);
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(p.derivative() == Polynomial{-1, 18, 27});
    const auto [q, r] = divmod(p, Polynomial{1, 1});
    CHECK(r.is_zero());
    CHECK(q == Polynomial{-1, 0, 9});
    CHECK(gcd(p, Polynomial{-1, 0, 9}) == Polynomial{Rational(-1, 9), 0, 1});
    CHECK(square_free_part(Polynomial{1, 2, 1}) == Polynomial{1, 1});
    CHECK(Polynomial{Rational(1, 2), Rational(-3, 4)}.primitive() == Polynomial{-2, 3});
  }

  TEST_CASE("isolate roots: paper triple") {
    const Polynomial p = from_roots({Rational(-1, 7), Rational(-1, 35), Rational(1, 14)});
    const auto roots = isolate_real_roots(p, -1, 1);
    REQUIRE(roots.size() == 3);
    CHECK(contains(roots[0], Rational(-1, 7)));
    CHECK(contains(roots[1], Rational(-1, 35)));
    CHECK(contains(roots[2], Rational(1, 14)));
  }

  TEST_CASE("isolate roots: no real roots") { CHECK(isolate_real_roots(Polynomial{1, 0, 1}, -1, 1).empty()); }

  TEST_CASE("isolate roots: tight cubic at (7, 56)") {
    const Polynomial p{-1, -1, 9, 9};
    const auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    const std::array<Rational, 3> expected{-1, Rational(-1, 3), Rational(1, 3)};
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(contains(roots[k], expected[k]));
      CHECK(try_exact(roots[k]).is_exact());
      CHECK(try_exact(roots[k]).value() == expected[k]);
    }
  }

  TEST_CASE("isolate roots: endpoint roots and zero polynomial") {
    const auto roots = isolate_real_roots(Polynomial{-1, 0, 1}, -1, 1);
    REQUIRE(roots.size() == 2);
    CHECK(contains(roots[0], -1));
    CHECK(contains(roots[1], 1));
    CHECK_THROWS_AS(isolate_real_roots(Polynomial(), -1, 1), std::invalid_argument);
  }

  TEST_CASE("refine interval") {
    const Polynomial p = from_roots({Rational(-1, 7), Rational(-1, 35), Rational(1, 14)});
    const auto roots = isolate_real_roots(p, -1, 1);
    const Rational bound(1, Integer(10) * Integer("10000000000000000000"));
    const auto fine = refine_interval(roots[2], bound);
    CHECK(fine.width() <= bound);
    CHECK(contains(fine, Rational(1, 14)));

    const auto point = IsolatingInterval::exact(Rational(1, 14));
    const auto same = refine_interval(point, bound);
    CHECK(same.is_exact());
    CHECK(same.value() == Rational(1, 14));

    const auto sqrt2 = isolate_real_roots(Polynomial{-2, 0, 1}, 1, 2);
    REQUIRE(sqrt2.size() == 1);
    const auto r = refine_interval(sqrt2[0], Rational(1, 1000));
    CHECK(r.width() <= Rational(1, 1000));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    // Bisection oracle: 1.4142 < sqrt 2 < 1.4143.
    CHECK(r.hi > Rational(14142, 10000));
    CHECK(r.lo < Rational(14143, 10000));
  }

  TEST_CASE("rational roots") {
    CHECK(rational_roots(Polynomial{1, 42, 245}) == std::vector<Rational>{Rational(-1, 7), Rational(-1, 35)});
    CHECK(rational_roots(Polynomial{-2, 0, 0, 1}).empty());
    CHECK(rational_roots(Polynomial{-1, -1, 9, 9}) == std::vector<Rational>{-1, Rational(-1, 3), Rational(1, 3)});
    CHECK(rational_roots(Polynomial{0, 0, 1}) == std::vector<Rational>{0});
  }

  TEST_CASE("simplest fraction and root comparison") {
    CHECK(simplest_between(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-2, 5), Rational(-3, 10)) == Rational(-1, 3));
    CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == 0);
    const auto sqrt2 = isolate_real_roots(Polynomial{-2, 0, 1}, 1, 2)[0];
    const auto also_sqrt2 = isolate_real_roots(Polynomial{-4, 0, 2}, 0, 10)[0];
    const auto sqrt3 = isolate_real_roots(Polynomial{-3, 0, 1}, 1, 2)[0];
    CHECK(compare_roots(sqrt2, also_sqrt2) == 0);
    CHECK(compare_roots(sqrt2, sqrt3) == -1);
    CHECK(compare_roots(sqrt3, sqrt2) == 1);
    CHECK(compare_roots(negate(sqrt2), IsolatingInterval::exact(Rational(-141, 100))) == -1);
  }

  TEST_CASE("interval arithmetic") {
    const RationalInterval x(Rational(-1, 2), Rational(1, 3));
    const RationalInterval y(2, 3);
    CHECK((x * y).lo == -Rational(3, 2));
    CHECK((x * y).hi == 1);
    CHECK((x / y).lo == -Rational(1, 4));
    CHECK_THROWS_AS(y / x, std::domain_error);
    CHECK(RationalInterval(Rational(5, 2), Rational(7, 2)).contains_nonnegative_integer());
    CHECK_FALSE(RationalInterval(Rational(5, 2), Rational(11, 4)).contains_nonnegative_integer());
    CHECK_FALSE(RationalInterval(-3, Rational(-1, 2)).contains_nonnegative_integer());
  }

  TEST_CASE("Sturm invariants on random cubics") {
    std::mt19937_64 rng(1000);
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    int with_roots = 0;
    for (int k = 0; k < 1000; ++k) {
      Polynomial p{Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)),
                   Rational(coeff(rng) == 0 ? 1 : coeff(rng), den(rng))};
      if (k % 3 == 0) {
        // Force some rational roots so exact endpoints are exercised.
        p = from_roots({Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng)), Rational(coeff(rng), den(rng))}) *
            Rational(coeff(rng) == 0 ? 1 : coeff(rng));
      }
      if (p.degree() < 1) {
        continue;
      }
      const auto roots = isolate_real_roots(p);
      const Polynomial sqf = square_free_part(p);
      const SturmSequence sturm(sqf);
      const Rational bound = cauchy_bound(p);
      CHECK(static_cast<int>(roots.size()) == sturm.count_roots(-bound - 1, bound));
      for (std::size_t j = 0; j < roots.size(); ++j) {
        const auto& iv = roots[j];
        if (iv.is_exact()) {
          CHECK(p(iv.lo) == 0);
        } else {
          CHECK(iv.lo < iv.hi);
          CHECK(sqf.sign_at(iv.lo) * sqf.sign_at(iv.hi) <= 0);
          CHECK(sturm.count_roots(iv.lo, iv.hi) == 1);
        }
        if (j > 0) {
          CHECK(roots[j - 1].hi < iv.lo);
        }
      }
      for (const auto& r : rational_roots(p)) {
        int hits = 0;
        for (const auto& iv : roots) {
          hits += contains(iv, r) ? 1 : 0;
        }
        CHECK(hits == 1);
      }
      with_roots += roots.empty() ? 0 : 1;
    }
    CHECK(with_roots > 500);
  }
}
