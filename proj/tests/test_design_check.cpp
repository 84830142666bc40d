#include "tridesign/design_check.hpp"

#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

using namespace tridesign;

namespace {

std::string data_file(const std::string& name) { return std::string(TRIDESIGN_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("design-check") {
  TEST_CASE("fixture shapes") {
    const auto hex = fixture("hexagon");
    CHECK(hex.dimension == 2);
    CHECK(hex.size == 6);
    CHECK(hex.is_exact());
    const auto e8 = fixture("e8_derived_56");
    CHECK(e8.dimension == 7);
    CHECK(e8.size == 56);
    std::set<Rational> entries(e8.exact_gram.begin(), e8.exact_gram.end());
    CHECK(entries == std::set<Rational>{-1, Rational(-1, 3), Rational(1, 3), 1});
    const auto roots = fixture("e8_roots_240");
    std::set<Rational> root_entries(roots.exact_gram.begin(), roots.exact_gram.end());
    CHECK(root_entries == std::set<Rational>{-1, Rational(-1, 2), 0, Rational(1, 2), 1});
    const auto ico = fixture("icosahedron");
    CHECK(ico.size == 12);
    CHECK_FALSE(ico.is_exact());
    CHECK_THROWS_AS(fixture("dodecahedron"), std::invalid_argument);
  }

  TEST_CASE("spectra") {
    const auto e8 = spectrum(fixture("e8_derived_56"));
    REQUIRE(e8.distinct.size() == 3);
    CHECK(e8.constant_across_points);
    CHECK(*e8.distinct[0].exact == -1);
    CHECK(*e8.distinct[1].exact == Rational(-1, 3));
    CHECK(*e8.distinct[2].exact == Rational(1, 3));
    CHECK(e8.per_point.front() == std::vector<std::size_t>{1, 27, 27});

    const auto hex = spectrum(fixture("hexagon"));
    CHECK(hex.per_point.front() == std::vector<std::size_t>{1, 2, 2});

    const auto ico = spectrum(fixture("icosahedron"));
    REQUIRE(ico.distinct.size() == 3);
    CHECK(ico.distinct[0].value == doctest::Approx(-1.0));
    CHECK(ico.distinct[2].value == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK(ico.per_point.front() == std::vector<std::size_t>{1, 5, 5});

    for (const auto& name : fixture_names()) {
      const auto d = fixture(name);
      for (const auto& row : spectrum(d).per_point) {
        std::size_t total = 0;
        for (auto c : row) {
          total += c;
        }
        CHECK(total == d.size - 1);
      }
    }
  }

  TEST_CASE("design strength") {
    CHECK(design_strength(fixture("hexagon"), 6) == 5);
    CHECK(design_strength(fixture("e8_derived_56"), 6) == 5);
    CHECK(design_strength(fixture("heptagon"), 7) == 6);
    CHECK(design_strength(fixture("icosahedron"), 7) == 5);
    CHECK(design_strength(fixture("e8_roots_240"), 7) == 7);
    CHECK(design_strength(fixture("hexagon"), 3) == 3);
    CHECK_THROWS_AS(design_strength(fixture("hexagon"), 0), std::invalid_argument);
  }

  TEST_CASE("witness checks") {
    for (const auto& name : {"e8_derived_56", "hexagon", "icosahedron", "heptagon"}) {
      const auto w = verify_conjecture_witness(fixture(name));
      CHECK(w.precondition_met);
      CHECK(w.checks.size() == 5);
      CHECK(w.all_passed());
    }
    const auto e8 = verify_conjecture_witness(fixture("e8_derived_56"));
    CHECK(e8.strength == 5);
    const auto roots = verify_conjecture_witness(fixture("e8_roots_240"));
    CHECK_FALSE(roots.precondition_met);
    CHECK(roots.precondition_detail == "expected exactly 3 distinct inner products, found 4");
  }

  TEST_CASE("Gram realizability") {
    const auto e8 = check_gram_realizable(fixture("e8_derived_56"));
    CHECK(e8.positive_semidefinite);
    CHECK(e8.rank == 7);
    CHECK(check_gram_realizable(fixture("e8_roots_240")).rank == 8);
    CHECK(check_gram_realizable(fixture("icosahedron")).rank == 3);
    // Three unit vectors with pairwise inner product -1 cannot exist.
    const auto bad = make_exact_gram(3, {1, -1, -1, -1, 1, -1, -1, -1, 1});
    CHECK_FALSE(check_gram_realizable(bad).positive_semidefinite);
  }

  TEST_CASE("loader") {
    const auto hex = load_design_file(data_file("hexagon.design"));
    CHECK(hex.dimension == 2);
    CHECK(hex.size == 6);
    const auto e8 = load_design_file(data_file("e8_derived_56.design"));
    CHECK(e8.dimension == 7);
    CHECK(e8.size == 56);
    CHECK(e8.is_exact());
    CHECK_THROWS_WITH_AS(load_design_file(data_file("non_unit.design")), "non-unit vector at row 2", DesignFormatError);
    LoadOptions exact;
    exact.require_exact = true;
    CHECK_THROWS_WITH_AS(load_design_file(data_file("heptagon.design"), exact), "exact mode requires rational tokens",
                         DesignFormatError);

    std::istringstream asym("design gram dim=2 size=2\n1 1/2\n-1/2 1\n");
    CHECK_THROWS_AS(load_design(asym), DesignFormatError);
    std::istringstream short_row("design coords dim=3 size=1\n1 0\n");
    CHECK_THROWS_AS(load_design(short_row), DesignFormatError);
    std::istringstream no_header("1 0\n");
    CHECK_THROWS_AS(load_design(no_header), DesignFormatError);
    std::istringstream rank("design gram dim=1 size=2\n1 0\n0 1\n");
    CHECK_THROWS_WITH_AS(load_design(rank), "header: dim>=2 and size>=1 are required", DesignFormatError);
    std::istringstream too_big("design gram dim=2 size=3\n1 0 0\n0 1 0\n0 0 1\n");
    CHECK_THROWS_WITH_AS(load_design(too_big), "gram matrix has rank 3 > dim=2", DesignFormatError);
    std::istringstream coords("# comment\ndesign coords dim=2 size=4 exact\n1 0\n0 1\n-1 0\n0 -1\n");
    const auto square = load_design(coords);
    CHECK(square.source == Representation::Coordinates);
    CHECK(design_strength(square, 5) == 3);
  }

  TEST_CASE("write and reload") {
    for (const auto& name : fixture_names()) {
      const auto d = fixture(name);
      std::ostringstream out;
      write_design(out, d);
      std::istringstream in(out.str());
      const auto back = load_design(in);
      CHECK(back.size == d.size);
      CHECK(back.dimension == d.dimension);
      CHECK(back.is_exact() == d.is_exact());
      if (d.is_exact()) {
        CHECK(back.exact_gram == d.exact_gram);
      } else {
        CHECK(back.numeric_gram == d.numeric_gram);
      }
    }
  }

  TEST_CASE("perturbed hexagon") {
    const auto d = load_design_file(data_file("hexagon_perturbed.design"));
    CHECK(design_strength(d, 6) < 5);
    CHECK_FALSE(verify_conjecture_witness(d).all_passed());
  }
}
