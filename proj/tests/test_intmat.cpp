#include <doctest.h>

#include <random>

#include "magicarr/intmat.hpp"

using namespace magicarr;

namespace {

IntMat from_rows(const std::vector<std::vector<int64_t>>& rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMat& A) {
    SmithForm sf = smith_normal_form(A);
    CHECK(sf.U * A * sf.V == sf.S);
    CHECK(sf.U * sf.Uinv == IntMat::identity(A.rows()));
    CHECK(sf.V * sf.Vinv == IntMat::identity(A.cols()));
    if (A.rows() > 0) CHECK(abs(det(sf.U)) == 1);
    if (A.cols() > 0) CHECK(abs(det(sf.V)) == 1);
    for (size_t i = 0; i + 1 < sf.diag.size(); ++i) {
        CHECK(sf.diag[i] > 0);
        CHECK(sf.diag[i + 1] % sf.diag[i] == 0);
    }
    // S is diagonal and zero outside the rank block
    for (size_t i = 0; i < sf.S.rows(); ++i)
        for (size_t j = 0; j < sf.S.cols(); ++j)
            if (i != j || i >= sf.rank) CHECK(sf.S.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on a frozen example") {
    IntMat A = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithForm sf = smith_normal_form(A);
    check_snf(A);
    REQUIRE(sf.diag.size() == 3);
    CHECK(sf.diag[0] == 2);
    CHECK(sf.diag[1] == 2);
    CHECK(sf.diag[0] * sf.diag[1] * sf.diag[2] == abs(det(A)));
}

TEST_CASE("smith normal form edge shapes") {
    check_snf(from_rows({{0, 0}, {0, 0}}));
    check_snf(from_rows({{1}}));
    check_snf(IntMat(0, 0));
    check_snf(IntMat(3, 0));
    check_snf(IntMat(0, 3));
    check_snf(from_rows({{6, 4}, {4, 6}}));
}

TEST_CASE("smith normal form randomized structural checks") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int t = 0; t < 60; ++t) {
        IntMat A(dim(rng), dim(rng));
        for (size_t i = 0; i < A.rows(); ++i)
            for (size_t j = 0; j < A.cols(); ++j) A.at(i, j) = val(rng);
        check_snf(A);
    }
}

TEST_CASE("solve_mod finds solutions and honest witnesses") {
    // x + y = 2 mod 3 has solutions
    IntMat A = from_rows({{1, 1}});
    ModSolveResult r = solve_mod(A, {2}, 3);
    REQUIRE(r.feasible);
    CHECK((r.x[0] + r.x[1]) % 3 == 2);

    // lexicographically minimal solution is (0, 2)
    auto lex = lexmin_solve_mod(A, {2}, 3);
    REQUIRE(lex.has_value());
    CHECK((*lex)[0] == 0);
    CHECK((*lex)[1] == 2);

    // 2x = 1 mod 4 is infeasible; witness y has yA = 0 and yb != 0 mod 4
    IntMat B = from_rows({{2}});
    ModSolveResult bad = solve_mod(B, {1}, 4);
    REQUIRE(!bad.feasible);
    REQUIRE(bad.witness.size() == 1);
    CHECK(bad.witness[0] * 2 % 4 == 0);
    CHECK(bad.witness[0] * 1 % 4 != 0);

    // 2x = 2 mod 4 is feasible
    CHECK(solve_mod(B, {2}, 4).feasible);
}

TEST_CASE("solve_mod randomized witness soundness") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(1, 4), val(-3, 3), dmod(2, 6);
    for (int t = 0; t < 200; ++t) {
        int64_t d = dmod(rng);
        IntMat A(dim(rng), dim(rng));
        for (size_t i = 0; i < A.rows(); ++i)
            for (size_t j = 0; j < A.cols(); ++j) A.at(i, j) = val(rng);
        std::vector<int64_t> b(A.rows());
        for (auto& x : b) x = std::uniform_int_distribution<int64_t>(0, d - 1)(rng);
        ModSolveResult r = solve_mod(A, b, d);
        if (r.feasible) {
            for (size_t i = 0; i < A.rows(); ++i) {
                Int acc = 0;
                for (size_t j = 0; j < A.cols(); ++j) acc += A.at(i, j) * r.x[j];
                CHECK(mod_norm(acc - b[i], d) == 0);
            }
        } else {
            for (size_t j = 0; j < A.cols(); ++j) {
                Int acc = 0;
                for (size_t i = 0; i < A.rows(); ++i) acc += Int(r.witness[i]) * A.at(i, j);
                CHECK(mod_norm(acc, d) == 0);
            }
            Int dot = 0;
            for (size_t i = 0; i < A.rows(); ++i) dot += Int(r.witness[i]) * b[i];
            CHECK(mod_norm(dot, d) != 0);
        }
    }
}

TEST_CASE("modular helpers") {
    CHECK(gcd64(12, 18) == 6);
    CHECK(gcd64(0, 5) == 5);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(2, 3) == 2);
    int64_t x, y;
    CHECK(egcd64(12, 18, x, y) == 6);
    CHECK(12 * x + 18 * y == 6);
    CHECK(mod_norm(Int(-7), 5) == 3);
}
