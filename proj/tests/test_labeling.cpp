#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "sperner/fixtures.hpp"
#include "sperner/labeling.hpp"

using namespace sperner;
using helpers::pt;

TEST_CASE("validate_labeling worked examples", "[labeling]") {
    const Subdivision fig1 = fig1_subdivision();
    SECTION("the fig1 labeling passes") {
        CHECK(validate_labeling(fig1, fig1_labeling()).passed);
    }
    SECTION("labeling d with 2 breaks the Sperner condition") {
        Labeling labeling = fig1_labeling();
        labeling.labels[6] = 2;  // d = (1/2, 0, 1/2), support {1, 3}
        const ValidationReport report = validate_labeling(fig1, labeling);
        REQUIRE_FALSE(report.passed);
        CHECK(report.violations.front().kind == "sperner-violation");
        CHECK(report.violations.front().ids == std::vector<std::size_t>{6});
    }
    SECTION("a corner accepts only its own index") {
        Labeling labeling = fig1_labeling();
        labeling.labels[0] = 3;  // e1
        CHECK_FALSE(validate_labeling(fig1, labeling).passed);
    }
    SECTION("missing and out-of-range labels are violations") {
        CHECK_FALSE(validate_labeling(fig1, Labeling{{1, 2, 3}}).passed);
        Labeling labeling = fig1_labeling();
        labeling.labels[4] = 9;
        const ValidationReport report = validate_labeling(fig1, labeling);
        REQUIRE_FALSE(report.passed);
        CHECK(report.violations.front().kind == "label-out-of-range");
    }
}

TEST_CASE("random labelings respect supports and seeds", "[labeling]") {
    SECTION("corners of the trivial subdivision are forced") {
        const Subdivision sub = edgewise_subdivision(3, 1);
        for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
            const Labeling labeling = random_sperner_labeling(sub, seed);
            for (VertexId v = 0; v < 3; ++v)
                CHECK(labeling.at(v) == support(sub.point(v)).front());
        }
    }
    SECTION("same seed, same labeling") {
        const Subdivision sub = fig1_subdivision();
        CHECK(random_sperner_labeling(sub, 1234).labels ==
              random_sperner_labeling(sub, 1234).labels);
    }
    SECTION("an edge vertex only ever draws from its support") {
        const Subdivision sub = edgewise_subdivision(3, 2);
        VertexId target = sub.vertex_count();
        for (VertexId v = 0; v < sub.vertex_count(); ++v)
            if (sub.point(v) == pt({"1/2", "1/2", "0"})) target = v;
        REQUIRE(target < sub.vertex_count());
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const int label = random_sperner_labeling(sub, seed).at(target);
            CHECK((label == 1 || label == 2));
        }
    }
    SECTION("every draw passes validation") {
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t m = 1; m <= 3; ++m) {
                const Subdivision sub = edgewise_subdivision(n, m);
                for (std::uint64_t seed = 0; seed < 20; ++seed)
                    CHECK(validate_labeling(sub, random_sperner_labeling(sub, seed)).passed);
            }
    }
}

TEST_CASE("map-induced labelings", "[labeling]") {
    const Subdivision sub = edgewise_subdivision(3, 2);
    SECTION("identity picks the smallest support index") {
        const Labeling labeling =
            labeling_from_map(sub, [](const BPoint& x) { return x; });
        for (VertexId v = 0; v < sub.vertex_count(); ++v)
            CHECK(labeling.at(v) == support(sub.point(v)).front());
        CHECK(validate_labeling(sub, labeling).passed);
    }
    SECTION("the cyclic rotation labels e1 with 1") {
        const auto rotate = [](const BPoint& x) {
            return BPoint({x[2], x[0], x[1]});
        };
        const Labeling labeling = labeling_from_map(sub, rotate);
        for (VertexId v = 0; v < sub.vertex_count(); ++v)
            if (sub.point(v) == BPoint::basis(3, 1)) CHECK(labeling.at(v) == 1);
        CHECK(validate_labeling(sub, labeling).passed);
    }
    SECTION("the constant map to e1") {
        const auto const_e1 = [](const BPoint& x) { return BPoint::basis(x.dim(), 1); };
        const Labeling labeling = labeling_from_map(sub, const_e1);
        for (VertexId v = 0; v < sub.vertex_count(); ++v) {
            if (sub.point(v) == pt({"0", "1", "0"})) CHECK(labeling.at(v) == 2);
            if (sub.point(v) == pt({"1/2", "1/2", "0"})) CHECK(labeling.at(v) == 2);
        }
        CHECK(validate_labeling(sub, labeling).passed);
    }
    SECTION("a map leaving the simplex is an error") {
        const auto off = [](const BPoint& x) -> BPoint {
            return BPoint({x[0] + 1, x[1], x[2]});  // sums to 2, rejected
        };
        CHECK_THROWS_AS(labeling_from_map(sub, off), std::invalid_argument);
    }
    SECTION("map labelings over the generators always validate") {
        const auto rotate = [](const BPoint& x) {
            std::vector<Rational> c(x.dim());
            c[0] = x[x.dim() - 1];
            for (std::size_t k = 1; k < x.dim(); ++k) c[k] = x[k - 1];
            return BPoint(std::move(c));
        };
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t m = 1; m <= 3; ++m) {
                const Subdivision s = edgewise_subdivision(n, m);
                CHECK(validate_labeling(s, labeling_from_map(s, rotate)).passed);
            }
    }
}
