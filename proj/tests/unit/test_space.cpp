#include "test_support.hpp"

#include "tassign/errors.hpp"

#include <doctest.h>

using namespace tassign;
using testing_support::corpus_space;
using testing_support::P;
using json = nlohmann::json;

namespace {

json cp1sq_doc() {
    return json::parse(R"({
      "rank": 2, "half_dim": 2,
      "fixed_points": [
        {"name": "p1", "weights": [[-1, 0], [-1, 0]]},
        {"name": "p2", "weights": [[-1, 0], [1, 0]]},
        {"name": "p3", "weights": [[1, 0], [-1, 0]]},
        {"name": "p4", "weights": [[1, 0], [1, 0]]}
      ],
      "one_skeleton": [{"name": "X1", "direction": [1, 0], "fixed_points": ["p1", "p2", "p3", "p4"], "half_dim": 2}],
      "formal": true
    })");
}

} // namespace

TEST_CASE("corpus spaces load") {
    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1", "ex_cp2_t2"})
        CHECK_NOTHROW(corpus_space(name));
    const auto cube = corpus_space("ex_cp1cube");
    CHECK(cube.fixed_points.size() == 8);
    CHECK(cube.one_skeleton.size() == 1);
    CHECK(cube.one_skeleton[0].half_dim == 3);
}

TEST_CASE("validation errors name the invariant") {
    SUBCASE("too few tangent weights") {
        auto doc = cp1sq_doc();
        doc["fixed_points"][1]["weights"] = json::parse("[[-1, 0], [0, 1]]");
        doc["one_skeleton"].push_back(json::parse(R"({"name": "Y", "direction": [0, 1], "fixed_points": ["p2", "p3"], "half_dim": 1})"));
        try {
            load_space(doc);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("p2 has 1 weight") != std::string::npos);
            CHECK(std::string(e.what()).find("component X1 declares d=2") != std::string::npos);
        }
    }
    SUBCASE("uncovered direction") {
        auto doc = cp1sq_doc();
        doc["one_skeleton"][0]["fixed_points"] = json::parse(R"(["p1", "p2", "p3"])");
        CHECK_THROWS_AS(load_space(doc), ValidationError);
    }
    SUBCASE("weight count") {
        auto doc = cp1sq_doc();
        doc["fixed_points"][0]["weights"] = json::parse("[[-1, 0]]");
        CHECK_THROWS_AS(load_space(doc), ValidationError);
    }
    SUBCASE("zero weight") {
        auto doc = cp1sq_doc();
        doc["fixed_points"][0]["weights"][0] = json::parse("[0, 0]");
        CHECK_THROWS_AS(load_space(doc), ValidationError);
    }
    SUBCASE("non-generic xi") {
        auto doc = cp1sq_doc();
        doc["xi"] = json::parse("[0, 1]");
        CHECK_THROWS_AS(load_space(doc), ValidationError);
    }
    SUBCASE("formality is required") {
        auto doc = cp1sq_doc();
        doc["formal"] = false;
        CHECK_THROWS_AS(load_space(doc), ValidationError);
        doc.erase("formal");
        CHECK_THROWS_AS(load_space(doc), SchemaError);
    }
    SUBCASE("schema") {
        auto doc = cp1sq_doc();
        doc["extra"] = 1;
        CHECK_THROWS_AS(load_space(doc), SchemaError);
        doc = cp1sq_doc();
        doc["rank"] = "two";
        CHECK_THROWS_AS(load_space(doc), SchemaError);
        doc = cp1sq_doc();
        doc["fixed_points"][0]["weights"][0] = json::parse("[1, 0, 0]");
        CHECK_THROWS(load_space(doc));
    }
    SUBCASE("higher strata need codimension two") {
        auto doc = cp1sq_doc();
        doc["higher_strata"] = json::parse(R"([{"name": "H", "annihilator": [[1, 0]], "fixed_points": ["p1"]}])");
        CHECK_THROWS_AS(load_space(doc), ValidationError);
    }
}

TEST_CASE("GKM detection") {
    CHECK(is_gkm(corpus_space("ex_cp1")));
    CHECK_FALSE(is_gkm(corpus_space("ex_cp1sq")));
    CHECK_FALSE(is_gkm(corpus_space("ex_cp1cube")));
    CHECK(is_gkm(corpus_space("ex_cp1xcp1_gkm")));
    CHECK(is_gkm(corpus_space("ex_cp2_t2")));
    CHECK_FALSE(is_gkm(corpus_space("ex_cp2_s1")));
}

TEST_CASE("generic xi search") {
    CHECK(choose_generic_xi(corpus_space("ex_cp1")) == Xi{1, 1});
    CHECK(choose_generic_xi(corpus_space("ex_cp2_t2")) == Xi{1, 2});  // x1 - x2 rules out (1, 1)
    CHECK(choose_generic_xi(corpus_space("ex_cp2_s1")) == Xi{1});
    CHECK(effective_xi(corpus_space("ex_cp2_s1")) == Xi{1});
}

TEST_CASE("Morse data") {
    const auto s = corpus_space("ex_cp1sq");
    const auto md = morse_data(s, Xi{1, 1});
    CHECK(md.points[0].index == 2);
    CHECK(md.points[1].index == 1);
    CHECK(md.points[2].index == 1);
    CHECK(md.points[3].index == 0);
    CHECK(md.points[0].euler == P("x1^2", 2, 2));
    CHECK(md.points[1].euler == P("-x1^2", 2, 2));
    CHECK(md.points[3].negative_part == Polynomial::constant(2, 1));

    const auto cube = corpus_space("ex_cp1cube");
    for (const auto& pm : morse_data(cube, Xi{1, 1}).points) {
        const bool plus = pm.euler == P("x1^3", 2, 3);
        const bool minus = pm.euler == P("-x1^3", 2, 3);
        CHECK((plus || minus));
    }

    CHECK_THROWS_AS(morse_data(s, Xi{0, 1}), NonGenericXi);
}

TEST_CASE("Morse duality and Euler factorization") {
    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1", "ex_cp2_t2"}) {
        const auto s = corpus_space(name);
        const Xi xi = effective_xi(s);
        Xi neg;
        for (const auto& c : xi) neg.push_back(-c);
        const auto up = morse_data(s, xi);
        const auto down = morse_data(s, neg);
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p) {
            CHECK(down.points[p].index == s.half_dim - up.points[p].index);
            // negative weights for -xi are the positive ones for xi
            CHECK(up.points[p].euler == up.points[p].negative_part * down.points[p].negative_part);
        }
    }
}

TEST_CASE("Betti numbers and equivariant dimensions") {
    const auto sq = betti_and_dims(corpus_space("ex_cp1sq"), Xi{1, 1}, 2);
    CHECK(sq.betti == std::vector<long>{1, 2, 1});
    CHECK(sq.equivariant_dims[1] == 4);

    const auto cp1 = betti_and_dims(corpus_space("ex_cp1"), Xi{1, 1}, 1);
    CHECK(cp1.betti == std::vector<long>{1, 1});
    CHECK(cp1.equivariant_dims[1] == 3);

    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1"}) {
        const auto s = corpus_space(name);
        const auto b = betti_and_dims(s, effective_xi(s), s.half_dim);
        long total = 0;
        for (auto v : b.betti) total += v;
        CHECK(total == static_cast<long>(s.fixed_points.size()));
    }
    CHECK(symmetric_power_dim(2, 1) == 2);
    CHECK(symmetric_power_dim(3, 2) == 6);
    CHECK(symmetric_power_dim(1, 7) == 1);
}

TEST_CASE("stratum views") {
    const auto s = corpus_space("ex_cp1xcp1_gkm");
    const auto e13 = *s.find_stratum("E13");
    CHECK(s.stratum_points(e13) == std::vector<std::size_t>{0, 2});
    CHECK(s.tangent_weights(e13, 0) == std::vector<LinForm>{LinForm({1, 0})});
    CHECK(s.normal_weights(e13, 0) == std::vector<LinForm>{LinForm({0, 1})});
    CHECK(s.stratum_half_dim(e13) == 1);
    CHECK(s.stratum_stabilizer(StratumRef::whole()) == Subtorus::origin(2));
    CHECK(*s.find_stratum("M") == StratumRef::whole());
    CHECK_FALSE(s.find_stratum("nope"));

    // non-effective example: the whole space has a one-dimensional stabilizer
    const auto sq = corpus_space("ex_cp1sq");
    CHECK(sq.stratum_stabilizer(StratumRef::whole()).dim() == 1);
}
