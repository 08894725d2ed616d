#include <doctest.h>

#include <random>

#include "magicarr/homology.hpp"
#include "test_support.hpp"

using namespace magicarr;

TEST_CASE("chain complex of the mermin square") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    ChainData cd = build_chain(arr);
    CHECK(cd.boundary.rows() == 9);
    CHECK(cd.boundary.cols() == 6);
    // over Z_2 every column has exactly three odd entries
    for (size_t j = 0; j < 6; ++j) {
        int odd = 0;
        for (size_t i = 0; i < 9; ++i)
            if (mod_norm(cd.boundary.at(i, j), 2) == 1) ++odd;
        CHECK(odd == 3);
    }
    // decomposition is exact and unimodular
    CHECK(cd.smith.U * cd.boundary * cd.smith.V == cd.smith.S);
    CHECK(abs(det(cd.smith.U)) == 1);
    CHECK(abs(det(cd.smith.V)) == 1);
}

TEST_CASE("small boundary columns") {
    Arrangement arr = make_arrangement(2, {"a", "b"}, {{"C", {{"a", 1}, {"b", 1}}, 0}});
    ChainData cd = build_chain(arr);
    CHECK(cd.boundary.at(0, 0) == 1);
    CHECK(cd.boundary.at(1, 0) == 1);
}

TEST_CASE("mermin square is classically infeasible with a checkable witness") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    ClassicalResult r = solve_classical(arr);
    REQUIRE(std::holds_alternative<InfeasibilityWitness>(r));
    const auto& w = std::get<InfeasibilityWitness>(r);
    // y * boundary^T = 0 mod d and y * tau != 0 mod d
    ChainData cd = build_chain(arr);
    for (size_t l = 0; l < arr.labels.size(); ++l) {
        Int acc = 0;
        for (size_t c = 0; c < arr.contexts.size(); ++c) acc += Int(w.y[c]) * cd.boundary.at(l, c);
        CHECK(mod_norm(acc, 2) == 0);
    }
    Int dot = 0;
    for (size_t c = 0; c < arr.contexts.size(); ++c) dot += Int(w.y[c]) * arr.contexts[c].tau;
    CHECK(mod_norm(dot, 2) == 1);
}

TEST_CASE("tau = 0 always has the zero solution") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    for (auto& c : arr.contexts) c.tau = 0;
    Arrangement z = make_arrangement(arr.d, arr.labels, arr.contexts);
    ClassicalResult r = solve_classical(z);
    REQUIRE(std::holds_alternative<ClassicalSolution>(r));
    for (int64_t v : std::get<ClassicalSolution>(r).values) CHECK(v == 0);
}

TEST_CASE("single context over Z_3: canonical solution frozen from the oracle") {
    Arrangement arr = make_arrangement(3, {"a", "b"}, {{"C", {{"a", 1}, {"b", 1}}, 2}});
    ClassicalResult r = solve_classical(arr);
    REQUIRE(std::holds_alternative<ClassicalSolution>(r));
    const auto& c = std::get<ClassicalSolution>(r);
    // lexicographically first over 9 candidates: (0, 2)
    CHECK(c.values[0] == 0);
    CHECK(c.values[1] == 2);
    OracleResult orc = brute_force_classical(arr, 4096);
    REQUIRE(orc.status == OracleStatus::Feasible);
    CHECK(orc.solution->values == c.values);
}

TEST_CASE("brute force caps") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    OracleResult orc = brute_force_classical(arr, 4096);
    CHECK(orc.status == OracleStatus::Infeasible);
    CHECK(orc.tested == 512);
    CHECK(brute_force_classical(arr, 10).status == OracleStatus::TooLarge);
}

TEST_CASE("solver agrees with the oracle on random arrangements") {
    std::mt19937 rng(424242);
    for (int t = 0; t < 150; ++t) {
        Arrangement arr = random_arrangement(rng, 5, 4, {2, 3, 4, 6});
        OracleResult orc = brute_force_classical(arr, 4096);
        if (orc.status == OracleStatus::TooLarge) continue;
        ClassicalResult r = solve_classical(arr);
        bool feasible = std::holds_alternative<ClassicalSolution>(r);
        CHECK(feasible == (orc.status == OracleStatus::Feasible));
        if (feasible) {
            const auto& c = std::get<ClassicalSolution>(r);
            CHECK(check_classical(arr, c.values));
            // both are lexicographically minimal, so they coincide
            CHECK(c.values == orc.solution->values);
        } else {
            const auto& w = std::get<InfeasibilityWitness>(r);
            ChainData cd = build_chain(arr);
            for (size_t l = 0; l < arr.labels.size(); ++l) {
                Int acc = 0;
                for (size_t c2 = 0; c2 < arr.contexts.size(); ++c2)
                    acc += Int(w.y[c2]) * cd.boundary.at(l, c2);
                CHECK(mod_norm(acc, arr.d) == 0);
            }
            Int dot = 0;
            for (size_t c2 = 0; c2 < arr.contexts.size(); ++c2)
                dot += Int(w.y[c2]) * arr.contexts[c2].tau;
            CHECK(mod_norm(dot, arr.d) != 0);
        }
    }
}

TEST_CASE("H^2 invariant factors") {
    // torus-signed square: H^2(T; Z_2) = Z_2
    Arrangement torus = parse_arrangement(read_fixture("mermin_square.json"));
    CHECK(cohomology_rank(build_chain(torus), 2) == std::vector<int64_t>{2});
    // RP2-signed square: H^2(RP2; Z_3) = 0, H^2(RP2; Z_2) = Z_2
    Arrangement rp2 = parse_arrangement(read_fixture("mermin_square_rp2_d3.json"));
    ChainData cd = build_chain(rp2);
    CHECK(cohomology_rank(cd, 3).empty());
    CHECK(cohomology_rank(cd, 2) == std::vector<int64_t>{2});
    // empty arrangement: H^2 = 0
    Arrangement empty = make_arrangement(2, {}, {});
    CHECK(cohomology_rank(build_chain(empty), 2).empty());
}
