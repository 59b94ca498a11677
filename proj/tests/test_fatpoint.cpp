#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support/oracles.hpp"
#include "wald/catalog.hpp"
#include "wald/fatpoint.hpp"
#include "wald/linalg.hpp"

using namespace wald;

TEST_CASE("monomial basis") {
    CHECK(monomial_basis(0) == std::vector<std::array<int, 3>>{{0, 0, 0}});
    CHECK(monomial_basis(1) ==
          std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(monomial_basis(4).size() == 15);
}

TEST_CASE("conditions matrix") {
    Config origin("o", {canonicalize_point(BigInt(0), BigInt(0), BigInt(1))});
    IntMatrix m11 = conditions_matrix(origin, 1, 1);
    CHECK(m11.rows() == 1);
    CHECK(m11.cols() == 3);
    CHECK(m11.at(0, 0) == 0);
    CHECK(m11.at(0, 1) == 0);
    CHECK(m11.at(0, 2) == 1);

    // Forms of degree 2 singular at (0:0:1) are exactly span{x^2, xy, y^2}.
    IntMatrix m22 = conditions_matrix(origin, 2, 2);
    CHECK(m22.rows() == 3);
    CHECK(m22.cols() == 6);
    CHECK(rank_exact(m22) == 3);

    CHECK_THROWS_AS(conditions_matrix(origin, 3, 2), std::invalid_argument);
}

TEST_CASE("H6_10 double-point system at degree 4 contains the four-line product") {
    IntMatrix m = conditions_matrix(catalog::build("H6_10"), 2, 4);
    CHECK(m.rows() == 18);
    CHECK(m.cols() == 15);
    // x * y * (x+y-z) * (x+2y-3z) expanded in the grlex degree-4 basis.
    std::vector<BigInt> witness = {BigInt(0), BigInt(1),  BigInt(0), BigInt(3), BigInt(-4),
                                   BigInt(0), BigInt(2),  BigInt(-5), BigInt(3), BigInt(0),
                                   BigInt(0), BigInt(0),  BigInt(0), BigInt(0), BigInt(0)};
    CHECK(m.annihilates(witness));
    auto v = kernel_vector_exact(m);
    REQUIRE(v.has_value());
    CHECK(m.annihilates(*v));
}

TEST_CASE("system dimensions") {
    Engine engine;
    Config line3("l3", {canonicalize_point(BigInt(0), BigInt(0), BigInt(1)),
                        canonicalize_point(BigInt(1), BigInt(0), BigInt(1)),
                        canonicalize_point(BigInt(2), BigInt(0), BigInt(1))});
    CHECK(engine.system_dimension(line3, 1, 1, Mode::Certified).dim == 1);

    Config five("five", {canonicalize_point(BigInt(0), BigInt(0), BigInt(1)),
                         canonicalize_point(BigInt(1), BigInt(0), BigInt(1)),
                         canonicalize_point(BigInt(0), BigInt(1), BigInt(1)),
                         canonicalize_point(BigInt(1), BigInt(1), BigInt(1)),
                         canonicalize_point(BigInt(2), BigInt(5), BigInt(1))});
    CHECK(engine.system_dimension(five, 1, 2, Mode::Certified).dim == 1);

    const Config h610 = catalog::build("H6_10");
    DimResult zero = engine.system_dimension(h610, 2, 3, Mode::Certified);
    CHECK(zero.dim == 0);
    CHECK(zero.certainty == Certainty::Certified);
    // d < m short-circuits.
    CHECK(engine.system_dimension(h610, 3, 2, Mode::Certified).dim == 0);

    DimResult pos = engine.system_dimension(h610, 2, 4, Mode::Certified);
    CHECK(pos.dim == 1);
    REQUIRE(pos.witness.has_value());
    CHECK(conditions_matrix(h610, 2, 4).annihilates(*pos.witness));

    DimResult heur = engine.system_dimension(h610, 2, 4, Mode::Heuristic);
    CHECK(heur.dim == 1);
    CHECK(heur.certainty == Certainty::ModularConsensus);
    CHECK(heur.primes_used.size() == 3);
}

TEST_CASE("initial degrees and sequences") {
    Engine engine;
    CHECK(engine.initial_degree(catalog::build("LINE(4)"), 3) == 3);
    CHECK(engine.initial_degree(catalog::build("H6_10"), 3) == 7);

    InitialSequence line3 = engine.initial_sequence(catalog::build("LINE(3)"), 5);
    CHECK(line3.values() == std::vector<int>{1, 2, 3, 4, 5});

    InitialSequence h69 = engine.initial_sequence(catalog::build("H6_9"), 4);
    CHECK(h69.values() == std::vector<int>{3, 5, 7, 9});
    CHECK(h69.first_differences() == std::vector<int>{3, 2, 2, 2});

    InitialSequence h717 = engine.initial_sequence(catalog::build("H7_17"), 7);
    CHECK(h717.values() == std::vector<int>{3, 5, 7, 10, 12, 14, 16});
}

TEST_CASE("modes agree and auto policy splits at m = 6") {
    Engine engine;
    const Config z = catalog::build("H6_9");
    for (int m = 1; m <= 3; ++m)
        CHECK(engine.initial_degree(z, m, Mode::Certified) ==
              engine.initial_degree(z, m, Mode::Heuristic));
    InitialSequence seq = engine.initial_sequence(z, 7, ModePolicy::Auto);
    CHECK(seq.entries[5].certainty == Certainty::Certified);
    CHECK(seq.entries[6].certainty == Certainty::ModularConsensus);
}

TEST_CASE("config hash ignores point order") {
    const Config a = catalog::build("H6_9");
    std::vector<Pt> shuffled(a.points.rbegin(), a.points.rend());
    const Config b("other-label", shuffled);
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a) != config_hash(catalog::build("H6_10")));
}

TEST_CASE("cache round-trips and survives tampering") {
    const std::string path = "test_fatpoint_cache.jsonl";
    std::remove(path.c_str());
    const Config z = catalog::build("H6_10");
    {
        Engine engine(PrimeSet::default_set(), path);
        CHECK(engine.system_dimension(z, 2, 4, Mode::Certified).dim == 1);
        CHECK(engine.system_dimension(z, 2, 3, Mode::Certified).dim == 0);
    }
    {
        // Fresh engine, warm file.
        Engine engine(PrimeSet::default_set(), path);
        DimResult r = engine.system_dimension(z, 2, 4, Mode::Certified);
        CHECK(r.dim == 1);
        REQUIRE(r.witness.has_value());
        CHECK(conditions_matrix(z, 2, 4).annihilates(*r.witness));
    }
    {
        // Corrupt the stored witnesses; the engine must re-verify, reject
        // and recompute rather than serve garbage.
        std::ifstream in(path);
        std::string all, line;
        while (std::getline(in, line)) {
            std::size_t at = line.find("\"witness\":[\"");
            if (at != std::string::npos) line.replace(at + 12, 1, "9");
            all += line + "\n";
        }
        in.close();
        std::ofstream(path, std::ios::trunc) << all;
        Engine engine(PrimeSet::default_set(), path);
        DimResult r = engine.system_dimension(z, 2, 4, Mode::Certified);
        CHECK(r.dim == 1);
        REQUIRE(r.witness.has_value());
        CHECK(conditions_matrix(z, 2, 4).annihilates(*r.witness));
    }
    std::remove(path.c_str());
}
