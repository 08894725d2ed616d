#include <doctest.h>

#include <random>

#include "magicarr/pauli.hpp"
#include "magicarr/pi1.hpp"
#include "test_support.hpp"

using namespace magicarr;

namespace {

PauliOp op1(int64_t d, int64_t phase, int64_t a, int64_t b) {
    PauliOp p;
    p.d = d;
    p.phase = phase;
    p.sites = {{a, b}};
    return p;
}

}  // namespace

TEST_CASE("qubit algebra basics") {
    PauliOp X = op1(2, 0, 1, 0), Z = op1(2, 0, 0, 1), Y = op1(2, 1, 1, 1);
    // XZ and ZX differ by omega = -1
    PauliOp xz = multiply(X, Z), zx = multiply(Z, X);
    CHECK(xz.sites == zx.sites);
    CHECK((zx.phase - xz.phase + 4) % 4 == 2);
    // Y^2 = I but (XZ)^2 = -I
    CHECK(is_identity(multiply(Y, Y)));
    CHECK(is_scalar_omega(multiply(xz, xz), 1));
    CHECK(order_divides_d(X));
    CHECK(order_divides_d(Y));
    CHECK(!order_divides_d(xz));
    // identity is neutral
    PauliOp I = pauli_identity(2, 1);
    CHECK(multiply(I, Y) == Y);
    CHECK(multiply(Y, I) == Y);
    // inverses
    CHECK(is_identity(multiply(Y, inverse(Y))));
    CHECK(is_identity(multiply(xz, inverse(xz))));
}

TEST_CASE("convention identity and associativity on random triples") {
    std::mt19937 rng(20240809);
    for (int t = 0; t < 1000; ++t) {
        int64_t d = std::uniform_int_distribution<int64_t>(2, 7)(rng);
        size_t n = std::uniform_int_distribution<size_t>(1, 3)(rng);
        auto rnd = [&]() {
            PauliOp p;
            p.d = d;
            p.phase = std::uniform_int_distribution<int64_t>(0, 2 * d - 1)(rng);
            for (size_t k = 0; k < n; ++k)
                p.sites.push_back({std::uniform_int_distribution<int64_t>(0, d - 1)(rng),
                                   std::uniform_int_distribution<int64_t>(0, d - 1)(rng)});
            return p;
        };
        PauliOp p = rnd(), q = rnd(), r = rnd();
        CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
        // X^a Z^b * X^a' Z^b' = omega^{a'b} X^{a+a'} Z^{b+b'} per site
        PauliOp pq = multiply(p, q);
        int64_t cross = 0;
        for (size_t k = 0; k < n; ++k) cross += p.sites[k].second * q.sites[k].first;
        CHECK(pq.phase == ((p.phase + q.phase + 2 * cross) % (2 * d) + 2 * d) % (2 * d));
        for (size_t k = 0; k < n; ++k) {
            CHECK(pq.sites[k].first == (p.sites[k].first + q.sites[k].first) % d);
            CHECK(pq.sites[k].second == (p.sites[k].second + q.sites[k].second) % d);
        }
        // p^d is a scalar and p * p^{-1} = I
        PauliOp pd = power(p, d);
        for (auto [a, b] : pd.sites) {
            CHECK(a == 0);
            CHECK(b == 0);
        }
        CHECK(is_identity(multiply(p, inverse(p))));
    }
}

TEST_CASE("mermin square table verifies") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    OperatorAssignment T = parse_operators(read_fixture("mermin_square_ops.json"));
    CHECK(verify_operator_realization(arr, T).empty());
    CHECK(verify_quantum_realization(arr, T).empty());

    // with tau = 0 everywhere the {XX,ZZ,YY} context is violated
    std::vector<Context> ctxs = arr.contexts;
    for (auto& c : ctxs) c.tau = 0;
    Arrangement z = make_arrangement(2, arr.labels, ctxs);
    auto viol = verify_operator_realization(z, T);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0].where == "C6");
}

TEST_CASE("identity assignment realizes tau = 0") {
    Arrangement arr = make_arrangement(2, {"a", "b"}, {{"C", {{"a", 1}, {"b", 1}}, 0}});
    OperatorAssignment T;
    T.d = 2;
    T.n = 1;
    T.ops["a"] = pauli_identity(2, 1);
    T.ops["b"] = pauli_identity(2, 1);
    CHECK(verify_quantum_realization(arr, T).empty());
}

TEST_CASE("commutation violations are reported") {
    Arrangement arr = make_arrangement(2, {"x", "z"}, {{"C", {{"x", 1}, {"z", 1}}, 0}});
    OperatorAssignment T;
    T.d = 2;
    T.n = 1;
    T.ops["x"] = op1(2, 0, 1, 0);
    T.ops["z"] = op1(2, 0, 0, 1);
    CHECK(!verify_operator_realization(arr, T).empty());  // XZ product is not a scalar
    bool has_comm = false;
    for (const auto& v : verify_quantum_realization(arr, T))
        if (v.detail.find("commute") != std::string::npos) has_comm = true;
    CHECK(has_comm);
}

TEST_CASE("mermin star table verifies") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_star.json"));
    OperatorAssignment T = parse_operators(read_fixture("mermin_star_ops.json"));
    CHECK(verify_quantum_realization(arr, T).empty());
}

TEST_CASE("path operators") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    OperatorAssignment T = parse_operators(read_fixture("mermin_square_ops.json"));
    CellComplex2 X = parse_realization(read_fixture("mermin_square_torus.json"));

    // empty path
    CHECK(is_identity(path_operator(T, X, {})));

    // concatenation and reversal (loops at v1)
    std::vector<FaceStep> p = {{"XX", 1}}, q = {{"Z1", 1}};
    std::vector<FaceStep> pq = {{"XX", 1}, {"Z1", 1}};
    CHECK(path_operator(T, X, pq) == multiply(path_operator(T, X, p), path_operator(T, X, q)));
    std::vector<FaceStep> prev = {{"XX", -1}};
    CHECK(path_operator(T, X, prev) == inverse(path_operator(T, X, p)));

    // inconsistent path rejected
    CHECK_THROWS_AS(path_operator(T, X, {{"X1", 1}, {"X1", 1}}), ValidationError);
}

TEST_CASE("face identities hold on all fixture realizations") {
    struct Case {
        const char* arr;
        const char* ops;
        const char* real;
    };
    for (const Case& c : {Case{"mermin_square.json", "mermin_square_ops.json", "mermin_square_torus.json"},
                          Case{"mermin_square_rp2_d2.json", "mermin_square_ops.json", "mermin_square_rp2.json"},
                          Case{"mermin_star.json", "mermin_star_ops.json", "mermin_star_torus.json"}}) {
        Arrangement arr = parse_arrangement(read_fixture(c.arr));
        OperatorAssignment T = parse_operators(read_fixture(c.ops));
        CellComplex2 X = parse_realization(read_fixture(c.real));
        REQUIRE(validate_realization(arr, X, RealizationMode::Topological).empty());
        CHECK(check_face_identity(T, X, arr).empty());
        // also on the single-vertex model
        CHECK(check_face_identity(T, build_single_vertex(arr), arr).empty());
    }
}

TEST_CASE("torus commutator identity [T1, T4] = omega^{sum tau} = -I") {
    // the loops e1, e4 of the torus gluing carry XX and Z1
    OperatorAssignment T = parse_operators(read_fixture("mermin_square_ops.json"));
    CellComplex2 X = parse_realization(read_fixture("mermin_square_torus.json"));
    std::vector<FaceStep> comm = {{"XX", 1}, {"Z1", 1}, {"XX", -1}, {"Z1", -1}};
    CHECK(is_scalar_omega(path_operator(T, X, comm), 1));
}

TEST_CASE("orientation-reversed faces evaluate to the same scalar (d = 2)") {
    struct Case {
        const char* arr;
        const char* ops;
        const char* real;
    };
    for (const Case& c : {Case{"mermin_square.json", "mermin_square_ops.json", "mermin_square_torus.json"},
                          Case{"mermin_square_rp2_d2.json", "mermin_square_ops.json", "mermin_square_rp2.json"},
                          Case{"mermin_star.json", "mermin_star_ops.json", "mermin_star_torus.json"}}) {
        Arrangement arr = parse_arrangement(read_fixture(c.arr));
        OperatorAssignment T = parse_operators(read_fixture(c.ops));
        CellComplex2 X = parse_realization(read_fixture(c.real));
        CellComplex2 Xbar = reverse_orientation(X);
        int64_t total = 0;
        for (const Face& f : Xbar.faces) {
            int64_t tau = arr.contexts[arr.context_at(f.context)].tau;
            CHECK(is_scalar_omega(path_operator(T, Xbar, f.word), tau));
            total += tau;
        }
        // omega^{2 tau(X)} = 1
        CHECK((2 * total) % arr.d == 0);
    }
}

TEST_CASE("relator path operators are scalars: the projective representation is defined") {
    // for each relator of the presentation, the loop word's operator is
    // omega^k I (all site exponents vanish)
    struct Case {
        const char* arr;
        const char* ops;
        const char* real;
        const char* basepoint;
    };
    for (const Case& k : {Case{"mermin_square.json", "mermin_square_ops.json", "mermin_square_torus.json", "v1"},
                          Case{"mermin_square_rp2_d2.json", "mermin_square_ops.json", "mermin_square_rp2.json", "v1"},
                          Case{"mermin_star.json", "mermin_star_ops.json", "mermin_star_torus.json", "f0"}}) {
    Arrangement arr = parse_arrangement(read_fixture(k.arr));
    OperatorAssignment T = parse_operators(read_fixture(k.ops));
    CellComplex2 X = parse_realization(read_fixture(k.real));
    GroupPresentation P = presentation(X, k.basepoint);
    for (size_t i = 0; i < P.relators.size(); ++i) {
        std::vector<FaceStep> loop;
        for (const Letter& l : P.relators[i]) {
            std::vector<FaceStep> g = P.generator_loop[l.gen];
            if (l.exp == -1) {
                std::vector<FaceStep> inv;
                for (auto it = g.rbegin(); it != g.rend(); ++it) inv.push_back({it->edge, -it->exp});
                g = inv;
            }
            loop.insert(loop.end(), g.begin(), g.end());
        }
        PauliOp op = path_operator(T, X, loop);
        for (auto [a, b] : op.sites) {
            CHECK(a == 0);
            CHECK(b == 0);
        }
        CHECK(op.phase % 2 == 0);
        // Lemma-key phase: conjugating the face word through the tree gives
        // the same operator as the bare face word
        const Face& f = X.faces[i];
        int64_t tau = arr.contexts[arr.context_at(f.context)].tau;
        CHECK(is_scalar_omega(op, tau));
    }
    }
}

TEST_CASE("power realization") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    OperatorAssignment T = parse_operators(read_fixture("mermin_square_ops.json"));

    PoweredRealization one = power_realization(arr, T, 1);
    CHECK(verify_quantum_realization(one.arr, one.ops).empty());
    CHECK(one.arr.contexts[5].tau == 1);

    PoweredRealization two = power_realization(arr, T, 2);
    for (const auto& [l, op] : two.ops.ops) CHECK(is_identity(op));
    for (const auto& c : two.arr.contexts) CHECK(c.tau == 0);
    CHECK(verify_quantum_realization(two.arr, two.ops).empty());

    // rejects a non-realization
    std::vector<Context> ctxs = arr.contexts;
    for (auto& c : ctxs) c.tau = 0;
    Arrangement z = make_arrangement(2, arr.labels, ctxs);
    CHECK_THROWS_AS(power_realization(z, T, 2), ValidationError);
}

TEST_CASE("operator file parsing") {
    OperatorAssignment T = parse_operators(read_fixture("mermin_square_ops.json"));
    CHECK(T.n == 2);
    CHECK(T.d == 2);
    CHECK(T.ops.size() == 9);
    std::string text = serialize_operators(T);
    OperatorAssignment back = parse_operators(text);
    CHECK(serialize_operators(back) == text);

    CHECK_THROWS_AS(parse_operators(R"({"n":1,"d":2,"ops":{"a":{"phase":4,"sites":[[0,0]]}}})"),
                    ValidationError);  // phase out of range
    CHECK_THROWS_AS(parse_operators(R"({"n":2,"d":2,"ops":{"a":{"phase":0,"sites":[[0,0]]}}})"),
                    ValidationError);  // wrong site count
    CHECK_THROWS_AS(parse_operators(R"({"n":1,"d":2,"ops":{},"x":0})"), ParseError);
}

TEST_CASE("cofactor powers drop to prime-power order") {
    // d = 6, one qudit: raising a quantum realization to the cofactor
    // d_j = d / p_j^{a_j} leaves operators of order dividing p_j^{a_j}
    Arrangement arr = make_arrangement(6, {"a", "b"}, {{"C", {{"a", 1}, {"b", -1}}, 0}});
    OperatorAssignment T;
    T.d = 6;
    T.n = 1;
    T.ops["a"] = op1(6, 0, 1, 0);  // X
    T.ops["b"] = op1(6, 0, 1, 0);
    REQUIRE(verify_quantum_realization(arr, T).empty());
    PoweredRealization cube = power_realization(arr, T, 3);  // cofactor of p = 2
    for (const auto& [l, op] : cube.ops.ops) CHECK(is_identity(power(op, 2)));
    PoweredRealization square = power_realization(arr, T, 2);  // cofactor of p = 3
    for (const auto& [l, op] : square.ops.ops) CHECK(is_identity(power(op, 3)));
    CHECK(verify_quantum_realization(cube.arr, cube.ops).empty());
}
