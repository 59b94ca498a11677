#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wald/catalog.hpp"
#include "wald/verifier.hpp"

using namespace wald;

namespace {

Pt P(long x, long y, long z) { return canonicalize_point(BigInt(x), BigInt(y), BigInt(z)); }

} // namespace

TEST_CASE("classification of small configurations") {
    CHECK(verdict_name(classify_small(catalog::build("LINE(4)"))) == "Line");
    CHECK(verdict_name(classify_small(catalog::build("NEAR_PENCIL(7)"))) == "NearPencil");
    CHECK(verdict_name(classify_small(catalog::build("H6_9"))) == "CatalogType(H6_9)");
    CHECK(verdict_name(classify_small(catalog::build("GENERAL6"))) == "CatalogType(GENERAL6)");
    CHECK(verdict_name(classify_small(catalog::build("CONIC(6)"))) == "ConicContained");

    Config five("five", {P(0, 0, 1), P(1, 0, 1), P(0, 1, 1), P(1, 1, 1), P(3, 7, 1)});
    TypeMatch t = classify_small(five);
    CHECK(verdict_name(t) == "ConicContained");
    CHECK(t.conic.has_value());

    // Every named catalog entry classifies back to itself.
    for (const char* name : {"H6_2", "H6_5", "H6_10", "H7_13", "H7_17", "H7_21", "H7_29",
                             "H8_118", "H8_119", "H8_136", "H8_137", "NINE_17_7"}) {
        CAPTURE(name);
        CHECK(verdict_name(classify_small(catalog::build(name))) ==
              std::string("CatalogType(") + name + ")");
    }
}

TEST_CASE("classification is invariant under transforms and reordering") {
    const Config z = catalog::build("H7_17");
    ProjectiveMap map = {{{BigInt(1), BigInt(1), BigInt(0)},
                          {BigInt(0), BigInt(1), BigInt(0)},
                          {BigInt(2), BigInt(0), BigInt(1)}}};
    CHECK(verdict_name(classify_small(apply_transform(z, map))) == "CatalogType(H7_17)");
    std::vector<Pt> rev(z.points.rbegin(), z.points.rend());
    CHECK(verdict_name(classify_small(Config("rev", rev))) == "CatalogType(H7_17)");
}

TEST_CASE("theorem B scan") {
    CHECK(theoremB_scan({3, 2, 2, 3, 2, 2, 2}) == std::pair<int, int>(3, 5));
    CHECK(theoremB_scan({3, 1, 3, 1}) == std::pair<int, int>(0, 0));
    CHECK(theoremB_scan({2, 2, 2, 2, 2}) == std::pair<int, int>(5, 1));
    CHECK(theoremB_scan({2, 3, 2, 2}) == std::pair<int, int>(2, 3));
}

TEST_CASE("theorem B instance checks") {
    Engine engine;
    TheoremBReport h69 = theoremB_check(engine, catalog::build("H6_9"), 8);
    CHECK(h69.max_run == 3);
    CHECK_FALSE(h69.on_conic);
    CHECK_FALSE(h69.violation);

    TheoremBReport conic = theoremB_check(engine, catalog::build("CONIC(6)"), 6);
    CHECK(conic.max_run >= 4);
    CHECK(conic.on_conic);
    CHECK_FALSE(conic.violation);

    TheoremBReport line = theoremB_check(engine, catalog::build("LINE(5)"), 6);
    CHECK(line.diffs == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK_FALSE(line.violation);

    CHECK_THROWS_AS(theoremB_check(engine, catalog::build("LINE(5)"), 4), std::invalid_argument);
}

TEST_CASE("nine point subset survey mirrors the case analysis") {
    const auto survey = subset_survey(catalog::build("NINE_17_7"));
    REQUIRE(survey.size() == 9);
    // Point order: A,B,C,D,E,G,F1,F2,F3.
    const std::vector<std::string> expected = {
        "CatalogType(H8_136)", "ConicContained", "CatalogType(H8_136)",
        "ConicContained",      "ConicContained", "CatalogType(H8_136)",
        "CatalogType(H8_137)", "CatalogType(H8_137)", "CatalogType(H8_137)"};
    for (const auto& sv : survey) {
        CAPTURE(sv.dropped);
        CHECK(verdict_name(sv.match) == expected[sv.dropped]);
    }
    CHECK_THROWS_AS(subset_survey(catalog::build("H6_9")), std::invalid_argument);
}

TEST_CASE("theorem A instance checks") {
    Engine engine;
    // At a short horizon the bracket does not resolve below 5/2.
    CHECK(theoremA_check(engine, catalog::build("NINE_17_7"), 3) ==
          TheoremAVerdict::NotApplicable);
    CHECK(theoremA_check(engine, catalog::build("CONIC(10)"), 2) == TheoremAVerdict::Pass);
    CHECK(theoremA_check(engine, catalog::build("NEAR_PENCIL(9)"), 2) == TheoremAVerdict::Pass);
    CHECK_THROWS_AS(theoremA_check(engine, catalog::build("H6_9"), 3), std::invalid_argument);
}
