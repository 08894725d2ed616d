#include <doctest.h>

#include "magicarr/arrangement.hpp"
#include "test_support.hpp"

using namespace magicarr;

TEST_CASE("mermin square fixture parses") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_square.json"));
    CHECK(arr.d == 2);
    CHECK(arr.labels.size() == 9);
    CHECK(arr.contexts.size() == 6);
    CHECK(arr.restricted);
    for (const auto& c : arr.contexts) CHECK(c.elements.size() == 3);
    // tau = 1 exactly on the {XX, ZZ, YY} context
    int ones = 0;
    for (const auto& c : arr.contexts)
        if (c.tau == 1) {
            ++ones;
            std::set<std::string> labs;
            for (const auto& e : c.elements) labs.insert(e.label);
            CHECK(labs == std::set<std::string>{"XX", "ZZ", "YY"});
        }
    CHECK(ones == 1);
}

TEST_CASE("mermin star fixture parses") {
    Arrangement arr = parse_arrangement(read_fixture("mermin_star.json"));
    CHECK(arr.d == 2);
    CHECK(arr.labels.size() == 10);
    CHECK(arr.contexts.size() == 5);
    CHECK(arr.restricted);
    for (const auto& c : arr.contexts) CHECK(c.elements.size() == 4);
}

TEST_CASE("round trip on all arrangement fixtures") {
    for (const char* name : {"mermin_square.json", "mermin_star.json", "mermin_square_rp2_d2.json",
                             "mermin_square_rp2_d3.json", "cycle4.json"}) {
        Arrangement arr = parse_arrangement(read_fixture(name));
        std::string text = serialize_arrangement(arr);
        Arrangement back = parse_arrangement(text);
        CHECK(serialize_arrangement(back) == text);
        CHECK(back.d == arr.d);
        CHECK(back.labels == arr.labels);
        CHECK(back.restricted == arr.restricted);
    }
}

TEST_CASE("validation failures carry positions") {
    CHECK_THROWS_AS(parse_arrangement(R"({"d":1,"labels":["a"],"contexts":[
        {"id":"C","elements":[{"label":"a","sign":1}],"tau":0}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a"],"contexts":[
        {"id":"C","elements":[{"label":"b","sign":1}],"tau":0}]})"),
                    ValidationError);
    // duplicate label inside a context
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a"],"contexts":[
        {"id":"C","elements":[{"label":"a","sign":1},{"label":"a","sign":1}],"tau":0}]})"),
                    ValidationError);
    // tau out of range
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a"],"contexts":[
        {"id":"C","elements":[{"label":"a","sign":1}],"tau":2}]})"),
                    ValidationError);
    // bad sign
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a"],"contexts":[
        {"id":"C","elements":[{"label":"a","sign":2}],"tau":0}]})"),
                    ValidationError);
    // label used in no context
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a","b"],"contexts":[
        {"id":"C","elements":[{"label":"a","sign":1}],"tau":0}]})"),
                    ValidationError);
    // unknown key
    CHECK_THROWS_AS(parse_arrangement(R"({"d":2,"labels":["a"],"junk":1,"contexts":[
        {"id":"C","elements":[{"label":"a","sign":1}],"tau":0}]})"),
                    ParseError);
    // malformed json
    CHECK_THROWS_AS(parse_arrangement("{"), ParseError);

    try {
        parse_arrangement(R"({"d":2,"labels":["a"],"contexts":[
            {"id":"C","elements":[{"label":"b","sign":1}],"tau":0}]})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.where()).find("contexts[0].elements[0]") != std::string::npos);
    }
}

TEST_CASE("is_restricted") {
    Arrangement square = parse_arrangement(read_fixture("mermin_square.json"));
    CHECK(is_restricted(square));
    CHECK(square.restricted == is_restricted(square));

    Arrangement one = make_arrangement(2, {"a"}, {{"C", {{"a", 1}}, 0}});
    CHECK(!is_restricted(one));
    CHECK(one.restricted == false);

    Arrangement tri = make_arrangement(
        2, {"a", "b", "c"},
        {{"C1", {{"a", 1}, {"b", 1}}, 0}, {"C2", {{"b", 1}, {"c", 1}}, 0}, {"C3", {{"c", 1}, {"a", 1}}, 0}});
    CHECK(is_restricted(tri));
}

TEST_CASE("per-occurrence signs may disagree across contexts") {
    Arrangement arr = make_arrangement(
        3, {"a", "b"}, {{"C1", {{"a", 1}, {"b", 1}}, 0}, {"C2", {{"a", -1}, {"b", 1}}, 0}});
    CHECK(arr.restricted);
    CHECK(arr.contexts[0].elements[0].sign == 1);
    CHECK(arr.contexts[1].elements[0].sign == -1);
}
