#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "chowgamma/errors.hpp"
#include "chowgamma/io.hpp"

using namespace chowgamma;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "io_test_" + name + ".json";
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("polynomial JSON and text round trip") {
    MVPoly f = 1 + 4 * MVPoly::t() + MVPoly::t(2) - 3 * MVPoly::q() * MVPoly::p(2);
    Json j = to_json(f);
    CHECK(j.dump() == R"([[0,0,0,"1"],[0,1,2,"-3"],[1,0,0,"4"],[2,0,0,"1"]])");
    CHECK(poly_from_json(j) == f);
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_poly("1+4t+t^2") == 1 + 4 * MVPoly::t() + MVPoly::t(2));
    CHECK(parse_poly("-t*q^3 + 2") == 2 - MVPoly::t() * MVPoly::q(3));
    CHECK(parse_poly("123456789012345678901234567890*p").coeff({0, 0, 1}) ==
          mpz_class("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_poly("1 + x"), DomainError);
    CHECK_THROWS_AS(parse_poly("2*"), DomainError);
    CHECK_THROWS_AS(parse_poly(""), DomainError);
}

TEST_CASE("inline matroid specs") {
    CHECK(parse_matroid("uniform:2,4").rank() == 2);
    CHECK(parse_matroid("boolean:3").ground_size() == 3);
    Matroid k4 = parse_matroid("graphic:K4");
    CHECK(k4.ground_size() == 6);
    CHECK(k4.rank() == 3);
    CHECK_THROWS_AS(parse_matroid("uniform:2"), DomainError);
    CHECK_THROWS_AS(parse_matroid("graphic:4"), DomainError);
    CHECK_THROWS_AS(parse_matroid("no-such-file.json"), DomainError);
}

TEST_CASE("matroid files round trip for every kind") {
    std::vector<Matroid> ms{Matroid::uniform(2, 4), Matroid::complete_graph(4),
                            Matroid::from_bases(3, {{0, 1}, {0, 2}, {1, 2}}),
                            Matroid::from_flats(3, {{{}, 0}, {{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 1, 2}, 2}})};
    for (const Matroid& m : ms) {
        std::string path = write_temp("matroid", to_json(m).dump());
        Matroid back = parse_matroid(path);
        CHECK(to_json(back) == to_json(m));
        CHECK(flats_lattice(back).size() == flats_lattice(m).size());
        std::remove(path.c_str());
    }
    CHECK_THROWS_AS(matroid_from_json(Json{{"kind", "vector"}}), DomainError);
    CHECK_THROWS_AS(matroid_from_json(Json{{"kind", "uniform"}, {"r", 2}}), DomainError);
}

TEST_CASE("group input") {
    Matroid k4 = Matroid::complete_graph(4);
    CHECK(group_from_json(Json{{"named", "symmetric"}}, k4).order() == 24);
    // Vertex action inferred from the degree, cycle notation accepted.
    CHECK(group_from_json(Json::parse(R"j({"n":4,"generators":["(1 2 3 4)"]})j"), k4).order() == 4);
    Matroid u = Matroid::uniform(2, 4);
    CHECK(group_from_json(Json::parse(R"({"n":4,"generators":[[1,2,3,0]]})"), u).order() == 4);
    CHECK(group_from_json(Json::parse(R"({"n":4,"generators":[[2,3,4,1]]})"), u).order() == 4);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"n":5,"generators":[[1,0,2,3,4]]})"), u), DomainError);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"n":4,"generators":[[0,0,1,2]]})"), u), DomainError);
    CHECK_THROWS_AS(parse_group("dihedral", u), DomainError);
    Json g = to_json(symmetric_group(3));
    CHECK(g["order"] == 6);
    CHECK(g["classes"].size() == 3);
}

TEST_CASE("SymF JSON round trip") {
    SymF s = SymF::schur({2, 1}, 1 + MVPoly::t()) + SymF::schur({3}, MVPoly::q());
    CHECK(symf_from_json(to_json(s)) == s);
    SymF f = SymF::fundamental({1}, 3, 2) + SymF::fundamental({}, 3);
    Json j = to_json(f);
    CHECK(j["terms"][0]["index"].is_object());
    CHECK(symf_from_json(j) == f);
    CHECK_THROWS_AS(symf_from_json(Json{{"degree", 2}, {"basis", "monomial"}, {"terms", Json::array()}}),
                    DomainError);
}

TEST_CASE("report serialization") {
    Report empty("demo");
    CHECK(to_json(empty).dump() ==
          R"({"suite":"demo","checks":[],"status":"pass","schema":"chowgamma.report.v1","version":"1.0.0"})");
    Report r("demo");
    r.add("b/n=10", true, "1", "1", "0");
    r.add("b/n=2", false, "1 + t", "1", "t", "note, with comma");
    r.sort_by_id();
    CHECK(r.checks()[0].id == "b/n=2");
    Json j = to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["checks"][0]["status"] == "fail");
    CHECK(to_csv(r) ==
          "suite,id,status,lhs,rhs,residual,note\ndemo,b/n=2,fail,1 + t,1,t,\"note, with comma\"\ndemo,b/n=10,pass,1,1,0,\n");
    CHECK(to_text(r).find("FAIL b/n=2") == 0);
    CHECK(to_json(r, 1.5)["wall_seconds"] == 1.5);
}

TEST_CASE("natural order of ids") {
    CHECK(natural_less("n=2", "n=10"));
    CHECK_FALSE(natural_less("n=10", "n=2"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("x/1", "x/1/y"));
    CHECK_FALSE(natural_less("same", "same"));
}
