#include <doctest.h>

#include "magicarr/complex2.hpp"
#include "magicarr/homology.hpp"
#include "test_support.hpp"

using namespace magicarr;

TEST_CASE("single vertex model counts") {
    Arrangement square = parse_arrangement(read_fixture("mermin_square.json"));
    CellComplex2 X = build_single_vertex(square);
    CHECK(X.vertices.size() == 1);
    CHECK(X.edges.size() == 9);
    CHECK(X.faces.size() == 6);
    CHECK(surface_report(X).euler == -2);

    Arrangement one = make_arrangement(2, {"a"}, {{"C", {{"a", 1}}, 0}});
    CHECK(surface_report(build_single_vertex(one)).euler == 1);

    Arrangement star = parse_arrangement(read_fixture("mermin_star.json"));
    CHECK(surface_report(build_single_vertex(star)).euler == -4);
}

TEST_CASE("the single vertex model always validates topologically") {
    for (const char* name : {"mermin_square.json", "mermin_star.json", "mermin_square_rp2_d3.json",
                             "cycle4.json"}) {
        Arrangement arr = parse_arrangement(read_fixture(name));
        CellComplex2 X = build_single_vertex(arr);
        CHECK(validate_realization(arr, X, RealizationMode::Topological).empty());
        CHECK(validate_realization(arr, X, RealizationMode::Commutative).empty());
    }
}

TEST_CASE("torus fixture is a genus-1 closed orientable surface") {
    CellComplex2 X = parse_realization(read_fixture("mermin_square_torus.json"));
    CHECK(X.vertices.size() == 3);
    CHECK(X.edges.size() == 9);
    CHECK(X.faces.size() == 6);
    SurfaceReport r = surface_report(X);
    CHECK(r.euler == 0);
    CHECK(r.is_closed_surface);
    CHECK(r.orientable == SurfaceReport::Orientable::Yes);
    CHECK(r.genus == 1);
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    CHECK(validate_realization(arr, X, RealizationMode::Topological).empty());
}

TEST_CASE("projective plane fixture") {
    CellComplex2 X = parse_realization(read_fixture("mermin_square_rp2.json"));
    CHECK(X.vertices.size() == 4);
    SurfaceReport r = surface_report(X);
    CHECK(r.euler == 1);
    CHECK(r.is_closed_surface);
    CHECK(r.orientable == SurfaceReport::Orientable::No);
    CHECK(r.genus == 1);  // one cross-cap
    Arrangement arr = parse_arrangement(read_fixture("mermin_square_rp2_d3.json"));
    CHECK(validate_realization(arr, X, RealizationMode::Topological).empty());
    Arrangement arr2 = parse_arrangement(read_fixture("mermin_square_rp2_d2.json"));
    CHECK(validate_realization(arr2, X, RealizationMode::Topological).empty());
    // against the torus-signed arrangement the words differ
    Arrangement torus_signed = parse_arrangement(read_fixture("mermin_square.json"));
    CHECK(!validate_realization(torus_signed, X, RealizationMode::Topological).empty());
}

TEST_CASE("star torus fixture") {
    CellComplex2 X = parse_realization(read_fixture("mermin_star_torus.json"));
    SurfaceReport r = surface_report(X);
    CHECK(r.euler == 0);
    CHECK(r.is_closed_surface);
    CHECK(r.orientable == SurfaceReport::Orientable::Yes);
    CHECK(r.genus == 1);
    Arrangement arr = parse_arrangement(read_fixture("mermin_star.json"));
    CHECK(validate_realization(arr, X, RealizationMode::Topological).empty());
}

TEST_CASE("single vertex model is not a closed surface: the link fails") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    CellComplex2 X = build_single_vertex(arr);
    // edge-use counts are fine (restricted arrangement: twice each)...
    std::map<std::string, int> uses;
    for (const auto& f : X.faces)
        for (const auto& s : f.word) ++uses[s.edge];
    for (const auto& [e, n] : uses) CHECK(n == 2);
    // ...but the vertex link is not a single circle
    SurfaceReport r = surface_report(X);
    CHECK(!r.is_closed_surface);
    CHECK(r.orientable == SurfaceReport::Orientable::Unknown);
    CHECK(!r.genus.has_value());
}

TEST_CASE("orientation reversal") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    CellComplex2 X = parse_realization(read_fixture("mermin_square_torus.json"));
    CellComplex2 Xbar = reverse_orientation(X);

    // word order reversed with negated exponents on swapped edges
    CHECK(Xbar.faces[0].word.size() == 3);
    CHECK(Xbar.faces[0].word[0].edge == X.faces[0].word[2].edge);
    CHECK(Xbar.faces[0].word[0].exp == -X.faces[0].word[2].exp);

    // boundary matrices are negatives
    IntMat B = boundary_matrix(X), Bbar = boundary_matrix(Xbar);
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) CHECK(Bbar.at(i, j) == -B.at(i, j));

    // involution
    CellComplex2 Xback = reverse_orientation(Xbar);
    CHECK(serialize_realization(Xback) == serialize_realization(X));

    // Euler characteristic invariant, and the reversal is only a
    // commutative realization of the same signed arrangement
    CHECK(surface_report(Xbar).euler == surface_report(X).euler);
    CHECK(!validate_realization(arr, Xbar, RealizationMode::Topological).empty());
    CHECK(validate_realization(arr, Xbar, RealizationMode::Commutative).empty());
}

TEST_CASE("validation catches wrong words in both modes") {
    Arrangement arr = make_arrangement(2, {"a", "b", "c"}, {{"C", {{"a", 1}, {"b", 1}, {"c", 1}}, 0}});
    // word skipping a context label fails both modes
    CellComplex2 bad = make_complex({"v"},
                                    {{"a", "v", "v"}, {"b", "v", "v"}, {"c", "v", "v"}},
                                    {{"C", {{"a", 1}, {"b", 1}, {"b", -1}}}});
    CHECK(!validate_realization(arr, bad, RealizationMode::Topological).empty());
    CHECK(!validate_realization(arr, bad, RealizationMode::Commutative).empty());
    // rotation of the word is fine topologically
    CellComplex2 rot = make_complex({"v"},
                                    {{"a", "v", "v"}, {"b", "v", "v"}, {"c", "v", "v"}},
                                    {{"C", {{"b", 1}, {"c", 1}, {"a", 1}}}});
    CHECK(validate_realization(arr, rot, RealizationMode::Topological).empty());
    // permutation beyond rotation is commutative-only
    CellComplex2 perm = make_complex({"v"},
                                     {{"a", "v", "v"}, {"b", "v", "v"}, {"c", "v", "v"}},
                                     {{"C", {{"b", 1}, {"a", 1}, {"c", 1}}}});
    CHECK(!validate_realization(arr, perm, RealizationMode::Topological).empty());
    CHECK(validate_realization(arr, perm, RealizationMode::Commutative).empty());
}

TEST_CASE("complex construction rejects bad data") {
    CHECK_THROWS_AS(make_complex({"v"}, {{"e", "v", "w"}}, {}), ValidationError);  // unknown vertex
    CHECK_THROWS_AS(make_complex({"v", "w"}, {}, {}), ValidationError);            // disconnected
    CHECK_THROWS_AS(
        make_complex({"u", "v"}, {{"e", "u", "v"}}, {{"F", {{"e", 1}, {"e", 1}}}}),
        ValidationError);  // not a closed path
    CHECK_THROWS_AS(parse_realization("{"), ParseError);
    CHECK_THROWS_AS(parse_realization(R"({"vertices":["v"],"edges":[],"faces":[],"junk":1})"), ParseError);
}

TEST_CASE("realization round trip") {
    for (const char* name :
         {"mermin_square_torus.json", "mermin_square_rp2.json", "mermin_star_torus.json"}) {
        CellComplex2 X = parse_realization(read_fixture(name));
        std::string text = serialize_realization(X);
        CHECK(serialize_realization(parse_realization(text)) == text);
    }
}

TEST_CASE("validated realizations induce the identity on 1- and 2-chains") {
    // boundary matrix of a topologically validated realization coincides
    // with the arrangement's chain boundary in the label/context bases
    struct Case {
        const char* arr;
        const char* real;
    };
    for (const Case& k : {Case{"mermin_square.json", "mermin_square_torus.json"},
                          Case{"mermin_square_rp2_d3.json", "mermin_square_rp2.json"},
                          Case{"mermin_star.json", "mermin_star_torus.json"}}) {
        Arrangement arr = parse_arrangement(read_fixture(k.arr));
        CellComplex2 X = parse_realization(read_fixture(k.real));
        REQUIRE(validate_realization(arr, X, RealizationMode::Topological).empty());
        magicarr::IntMat BX = boundary_matrix(X);
        magicarr::IntMat BD = magicarr::build_chain(arr).boundary;
        REQUIRE(BX.rows() == BD.rows());
        REQUIRE(BX.cols() == BD.cols());
        for (size_t e = 0; e < BX.rows(); ++e)
            for (size_t f = 0; f < BX.cols(); ++f) {
                size_t le = arr.label_at(X.edges[e].id);
                size_t cf = arr.context_at(X.faces[f].context);
                CHECK(BX.at(e, f) == BD.at(le, cf));
            }
    }
}

TEST_CASE("standalone complex chain data feeds cohomology_rank") {
    CellComplex2 X = parse_realization(read_fixture("mermin_square_torus.json"));
    magicarr::ChainData cd;
    cd.boundary = boundary_matrix(X);
    cd.d = 2;
    cd.smith = magicarr::smith_normal_form(cd.boundary);
    CHECK(magicarr::cohomology_rank(cd, 2) == std::vector<int64_t>{2});  // H^2(T; Z_2)
    CellComplex2 P = parse_realization(read_fixture("mermin_square_rp2.json"));
    magicarr::ChainData cp;
    cp.boundary = boundary_matrix(P);
    cp.d = 3;
    cp.smith = magicarr::smith_normal_form(cp.boundary);
    CHECK(magicarr::cohomology_rank(cp, 3).empty());  // H^2(RP2; Z_3)
    CHECK(magicarr::cohomology_rank(cp, 2) == std::vector<int64_t>{2});
}
