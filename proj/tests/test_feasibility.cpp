#include "tridesign/feasibility.hpp"
#include "tridesign/ortho_poly.hpp"
#include "tridesign/prefilter.hpp"

#include "doctest.h"

#include <random>

using namespace tridesign;

namespace {

// Discriminant of A t^3 + B t^2 + C t + D.
Rational discriminant(const Polynomial& p) {
  const Rational& D = p.coefficient(0);
  const Rational& C = p.coefficient(1);
  const Rational& B = p.coefficient(2);
  const Rational& A = p.coefficient(3);
  return 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * A * C * C * C - 27 * A * A * D * D;
}

Integer case3_n(int m) { return 3 * m * m - 5; }
Integer case3_M(int m) { return Integer(m) * m * m * m * case3_n(m) / 2; }

}  // namespace

TEST_SUITE("feasibility") {
  TEST_CASE("cardinality bounds") {
    CHECK(cardinality_bounds(3) == std::pair<Integer, Integer>{12, 16});
    CHECK(cardinality_bounds(7) == std::pair<Integer, Integer>{56, 112});
    CHECK(cardinality_bounds(2) == std::pair<Integer, Integer>{6, 7});
  }

  TEST_CASE("divisibility filter") {
    CHECK(divisibility_filter(341, 638352) == Integer(3744));
    CHECK(divisibility_filter(7, 56) == Integer(16));
    CHECK_FALSE(divisibility_filter(5, 33).has_value());
  }

  TEST_CASE("inner product cubic") {
    const Polynomial at7 = inner_product_cubic(7, 56);
    CHECK(at7 == Polynomial{-1, -1, 9, 9} * Rational(-42));
    CHECK(rational_roots(inner_product_cubic(341, 638352)) ==
          std::vector<Rational>{Rational(-1, 7), Rational(-1, 35), Rational(1, 14)});
    CHECK(rational_roots(inner_product_cubic(638, 2236509)) ==
          std::vector<Rational>{Rational(-1, 8), Rational(-1, 40), Rational(1, 20)});
    // 2M = n(n+3) at n = 5, M = 20.
    CHECK_THROWS_WITH_AS(inner_product_cubic(5, 20), "cubic degenerates", std::domain_error);
  }

  TEST_CASE("quadratic for a and b") {
    const Polynomial q = quadratic_for_ab(341, Rational(1, 14));
    CHECK(q.primitive() == Polynomial{1, 42, 245});
    CHECK(rational_roots(quadratic_for_ab(22, Rational(1, 4))) == std::vector<Rational>{Rational(-1, 2), Rational(-1, 8)});
    for (const auto& [n, c] : std::vector<std::pair<int, Rational>>{{638, Rational(1, 20)}, {43, Rational(1, 5)}}) {
      const Integer M = numerator_of(levenshtein_bound_l5(n, c));
      const auto cubic = rational_roots(inner_product_cubic(n, M));
      CHECK(rational_roots(quadratic_for_ab(n, c)) == std::vector<Rational>{cubic[0], cubic[1]});
    }
  }

  TEST_CASE("Vieta symmetrics") {
    const auto v = vieta_symmetrics(341, 638352);
    CHECK(v.e3 == Rational(1, 3430));
    CHECK(v.e3 == Rational(341 * 340) / Rational(343 * (1276704 - 117304)));
    CHECK(v.e1 == Rational(-1, 7) - Rational(1, 35) + Rational(1, 14));
    CHECK(vieta_symmetrics(7, 56).e3 == Rational(1, 9));
    const Polynomial p = inner_product_cubic(100, 40000);
    CHECK(vieta_symmetrics(100, 40000).e1 == -p.coefficient(2) / p.coefficient(3));
  }

  TEST_CASE("distance distribution") {
    const auto d341 = distance_distribution(
        341, 638352, InnerProductTriple::from_values(Rational(-1, 7), Rational(-1, 35), Rational(1, 14)));
    REQUIRE(d341.is_exact());
    CHECK(d341.values() == std::array<Rational, 3>{23205, 406250, 208896});
    CHECK(distance_distribution(7, 56, InnerProductTriple::from_values(-1, Rational(-1, 3), Rational(1, 3))).values() ==
          std::array<Rational, 3>{1, 27, 27});
    const auto d22 =
        distance_distribution(22, 891, InnerProductTriple::from_values(Rational(-1, 2), Rational(-1, 8), Rational(1, 4)));
    CHECK(d22.values() == std::array<Rational, 3>{42, 512, 336});
    CHECK_THROWS_WITH_AS(
        distance_distribution(22, 890, InnerProductTriple::from_values(Rational(-1, 2), Rational(-1, 8), Rational(1, 4))),
        "moment mismatch", std::domain_error);
  }

  TEST_CASE("closed form distribution") {
    CHECK(closed_form_distribution(Rational(-1, 2), Rational(-1, 8), Rational(1, 4)).values()[0] == 42);
    CHECK(closed_form_distribution(Rational(-1, 7), Rational(-1, 35), Rational(1, 14)).values()[0] == 23205);
    CHECK_THROWS_WITH_AS(closed_form_distribution(-1, Rational(-1, 3), Rational(1, 3)), "degenerate: use moment solve",
                         std::domain_error);
  }

  TEST_CASE("R1 is the scaled discriminant") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 300; ++k) {
      const int n = std::uniform_int_distribution<int>(3, 1000)(rng);
      const auto [lo, hi] = cardinality_bounds(n);
      const Integer M = lo + std::uniform_int_distribution<long>(1, static_cast<long>(hi - lo))(rng);
      if (2 * M == Integer(n) * (n + 3)) {
        continue;
      }
      const Rational disc = discriminant(inner_product_cubic(n, M));
      CHECK(Rational(r1_polynomial(n, M)) == disc / (n + 2));
      if (const auto T = divisibility_filter(n, M)) {
        CHECK(r1_polynomial(n, M) == r2_polynomial(n, *T) * Integer(n) * n * n * n);
      }
    }
  }

  TEST_CASE("XYZ closed form") {
    const auto at22 = xyz_product(22, 891);
    CHECK(at22.via_r1 == 7225344);
    REQUIRE(at22.via_r2);
    CHECK(*at22.via_r2 == 7225344);
    CHECK(xyz_product(341, 638352).via_r1 == Rational(23205) * 406250 * 208896);
    CHECK_THROWS_WITH_AS(xyz_product(7, 56), "closed form invalid; fall back to componentwise product", std::domain_error);
  }

  TEST_CASE("printed R1 and R2 expansions disagree with the product") {
    const Integer n = 22, M = 891, T = 81;
    CHECK(printed_r1_polynomial(n, M) != r1_polynomial(n, M));
    CHECK(printed_r2_polynomial(n, T) != r2_polynomial(n, T));
    const Rational printed = Rational(M * M * (n - 1) * (n + 2) * (n + 2) * pow(Rational(2 * M - n * (n + 3)), 5)) /
                             Rational(printed_r1_polynomial(n, M) * n * n * n);
    CHECK(printed == Rational(97542144, 25));
    CHECK(printed != 7225344);
  }

  TEST_CASE("known families") {
    CHECK(recognize_known_family(7, 56) ==
          std::vector<KnownFamily>{{FamilyTag::Tight5, 3}, {FamilyTag::Case3, 2}});
    CHECK(recognize_known_family(22, 891) == std::vector<KnownFamily>{{FamilyTag::Case3, 3}});
    CHECK(recognize_known_family(23, 552) == std::vector<KnownFamily>{{FamilyTag::Tight5, 5}});
    CHECK(recognize_known_family(3, 12) == std::vector<KnownFamily>{{FamilyTag::Tight5, std::nullopt}});
    CHECK(recognize_known_family(22, 890).empty());
    CHECK(to_string(KnownFamily{FamilyTag::Tight5, 3}) == "Tight5(m=3)");
    CHECK(to_string(KnownFamily{FamilyTag::Tight5, std::nullopt}) == "Tight5(icosahedron)");
  }

  TEST_CASE("status names round trip") {
    for (Status s : {Status::OutOfRange, Status::RejectedDivisibility, Status::RejectedRootStructure,
                     Status::RejectedSignPattern, Status::RejectedNonIntegerDistribution, Status::KnownFamilyMatch,
                     Status::SurvivorRefutedByDerived, Status::SurvivorUnresolved}) {
      CHECK(parse_status(to_string(s)) == s);
    }
    CHECK_FALSE(parse_status("Bogus").has_value());
  }

  TEST_CASE("classify") {
    CHECK(classify(341, 638352).status == Status::SurvivorRefutedByDerived);
    CHECK(classify(638, 2236509).status == Status::SurvivorRefutedByDerived);
    const auto at22 = classify(22, 891);
    CHECK(at22.status == Status::KnownFamilyMatch);
    CHECK(at22.families == std::vector<KnownFamily>{{FamilyTag::Case3, 3}});
    CHECK(classify(22, 10000).status == Status::OutOfRange);
    CHECK(classify(5, 33).status == Status::RejectedDivisibility);
    CHECK(classify(22, 892).status == Status::RejectedDivisibility);
    const auto ico = classify(3, 12);
    CHECK(ico.status == Status::KnownFamilyMatch);
    REQUIRE(ico.inner_products);
    CHECK_FALSE(ico.inner_products->c().is_exact());
    CHECK(ico.inner_products->a().is_exact());
  }

  TEST_CASE("classify invariants on random candidates") {
    std::mt19937_64 rng(99);
    int reached = 0;
    for (int k = 0; k < 300; ++k) {
      const int n = std::uniform_int_distribution<int>(3, 400)(rng);
      const auto [lo, hi] = cardinality_bounds(n);
      const long T_lo = static_cast<long>(2 * lo / n) + 1;
      const long T_hi = static_cast<long>(2 * hi / n);
      Integer T = std::uniform_int_distribution<long>(T_lo, T_hi)(rng);
      if ((T * n) % 2 != 0) {
        T += 1;
      }
      const Integer M = T * n / 2;
      const auto report = classify(n, M);
      if (report.distribution) {
        ++reached;
        const auto& d = *report.distribution;
        const RationalInterval sum = d.x() + d.y() + d.z();
        CHECK(sum.contains(Rational(M - 1)));
      }
      if (report.status == Status::RejectedNonIntegerDistribution) {
        REQUIRE(report.distribution);
        bool some_excluded = false;
        for (const auto& c : report.distribution->counts) {
          some_excluded = some_excluded || !c.contains_nonnegative_integer();
        }
        CHECK(some_excluded);
      }
    }
    CHECK(reached > 200);
  }

  TEST_CASE("sign pattern rejections are reported separately") {
    // Scan n = 3..40 verbosely and make sure every sign-pattern rejection really breaks |a| > |c| > |b| > 0.
    ScanOptions options;
    options.verbose = true;
    options.jobs = 1;
    const auto result = scan_range(3, 40, options);
    for (const auto& r : result.records) {
      if (r.status != Status::RejectedSignPattern) {
        continue;
      }
      REQUIRE(r.inner_products);
      const auto e = r.inner_products->enclosures();
      const bool certified_good = (-e[0].hi > e[2].hi) && (e[2].lo > e[1].hi && e[2].lo > -e[1].lo) && !e[1].contains_zero();
      CHECK_FALSE(certified_good);
    }
  }

  TEST_CASE("scan small ranges") {
    ScanOptions options;
    options.jobs = 2;
    const auto result = scan_range(3, 100, options);
    for (const auto& r : result.records) {
      CHECK(r.status == Status::KnownFamilyMatch);
    }
    std::vector<std::pair<int, Integer>> found;
    for (const auto& r : result.records) {
      found.emplace_back(r.parameters.n, r.parameters.M);
    }
    const std::vector<std::pair<int, Integer>> expected{{3, 12},   {7, 56},   {22, 891},  {23, 552},
                                                         {43, 5504}, {47, 2256}, {70, 21875}, {79, 6320}};
    CHECK(found == expected);
    CHECK(result.counts.count(Status::SurvivorUnresolved) == 0);
    CHECK(result.counts.count(Status::SurvivorRefutedByDerived) == 0);

    // A dimension with no feasible candidate yields nothing.
    CHECK(scan_range(4, 4, options).records.empty());
  }

  TEST_CASE("prefilter agrees with the exact pipeline") {
    std::mt19937_64 rng(5);
    int rejected = 0;
    for (int k = 0; k < 2000; ++k) {
      const int n = std::uniform_int_distribution<int>(3, 1000)(rng);
      const auto [lo, hi] = cardinality_bounds(n);
      const auto M = static_cast<std::int64_t>(lo) + std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(hi - lo))(rng);
      if (prefilter_rejects(n, M)) {
        ++rejected;
        ClassifyOptions options;
        options.apply_divisibility = false;
        CHECK(classify(n, Integer(M), options).status == Status::RejectedNonIntegerDistribution);
      }
    }
    CHECK(rejected > 1000);
  }
}
