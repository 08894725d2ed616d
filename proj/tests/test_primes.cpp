#include <doctest.h>

#include <random>

#include "magicarr/primes.hpp"
#include "test_support.hpp"

using namespace magicarr;

TEST_CASE("prime plans") {
    PrimePlan p6 = make_prime_plan(6);
    REQUIRE(p6.components.size() == 2);
    CHECK(p6.components[0].modulus == 2);
    CHECK(p6.components[0].cofactor == 3);
    CHECK(p6.components[0].weight == 1);  // 3 * 1 = 1 mod 2
    CHECK(p6.components[1].modulus == 3);
    CHECK(p6.components[1].cofactor == 2);
    CHECK(p6.components[1].weight == 2);  // 2 * 2 = 1 mod 3
    // plan identity: sum d_j w_j = 3 + 4 = 7 = 1 mod 6
    int64_t sum = 0;
    for (const auto& c : p6.components) sum += c.cofactor * c.weight;
    CHECK(mod_norm(Int(sum), 6) == 1);

    PrimePlan p5 = make_prime_plan(5);
    REQUIRE(p5.components.size() == 1);
    CHECK(p5.components[0].cofactor == 1);
    CHECK(p5.components[0].weight == 1);

    PrimePlan p4 = make_prime_plan(4);
    REQUIRE(p4.components.size() == 1);
    CHECK(p4.components[0].p == 2);
    CHECK(p4.components[0].alpha == 2);
    CHECK(p4.components[0].modulus == 4);

    for (int64_t d = 2; d <= 30; ++d) {
        PrimePlan plan = make_prime_plan(d);
        Int s = 0;
        for (const auto& c : plan.components) s += Int(c.cofactor) * c.weight;
        CHECK(mod_norm(s, d) == 1);
    }
}

TEST_CASE("decompose scales tau by the cofactor") {
    Arrangement arr = make_arrangement(6, {"a"}, {{"C", {{"a", 1}}, 5}});
    std::vector<Arrangement> parts = decompose(arr);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].d == 2);
    CHECK(parts[0].contexts[0].tau == 1);  // 3 * 5 mod 2
    CHECK(parts[1].d == 3);
    CHECK(parts[1].contexts[0].tau == 1);  // 2 * 5 mod 3

    // prime d: single unchanged component
    Arrangement p = make_arrangement(5, {"a"}, {{"C", {{"a", 1}}, 3}});
    std::vector<Arrangement> pp = decompose(p);
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].contexts[0].tau == 3);
}

TEST_CASE("glue solves the original system") {
    Arrangement arr = make_arrangement(6, {"a"}, {{"C", {{"a", 1}}, 5}});
    PrimePlan plan = make_prime_plan(6);
    std::vector<Arrangement> parts = decompose(arr);
    std::vector<ClassicalSolution> sols;
    for (const auto& part : parts) {
        ClassicalResult r = solve_classical(part);
        REQUIRE(std::holds_alternative<ClassicalSolution>(r));
        sols.push_back(std::get<ClassicalSolution>(r));
    }
    ClassicalSolution glued = glue(sols, plan);
    CHECK(glued.values[0] == 5);
    CHECK(check_classical(arr, glued.values));

    // single prime: c = c1
    Arrangement p = make_arrangement(5, {"a"}, {{"C", {{"a", 1}}, 3}});
    ClassicalSolution c1{{3}};
    CHECK(glue({c1}, make_prime_plan(5)).values == std::vector<int64_t>{3});

    // tau = 0 everywhere glues to zero
    ClassicalSolution z2{{0}}, z3{{0}};
    CHECK(glue({z2, z3}, plan).values == std::vector<int64_t>{0});

    CHECK_THROWS_AS(glue({c1}, plan), ValidationError);                       // wrong count
    CHECK_THROWS_AS(glue({ClassicalSolution{{0, 0}}, z3}, plan), ValidationError);  // mismatched sizes
}

TEST_CASE("prime reduction equivalence on random d = 6 arrangements") {
    std::mt19937 rng(900913);
    int checked = 0;
    while (checked < 100) {
        Arrangement arr = random_arrangement(rng, 4, 4, {6});
        if (brute_force_classical(arr, 4096).status == OracleStatus::TooLarge) continue;
        ++checked;
        bool full = std::holds_alternative<ClassicalSolution>(solve_classical(arr));
        PrimePlan plan = make_prime_plan(6);
        std::vector<Arrangement> parts = decompose(arr);
        std::vector<ClassicalSolution> sols;
        bool all = true;
        for (const auto& part : parts) {
            ClassicalResult r = solve_classical(part);
            if (std::holds_alternative<ClassicalSolution>(r))
                sols.push_back(std::get<ClassicalSolution>(r));
            else
                all = false;
        }
        CHECK(full == all);
        if (all) {
            ClassicalSolution glued = glue(sols, plan);
            CHECK(check_classical(arr, glued.values));
        }
    }
}
