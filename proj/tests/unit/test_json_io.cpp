#include "test_support.hpp"

#include "tassign/errors.hpp"
#include "tassign/json_io.hpp"

#include <doctest.h>

using namespace tassign;
using namespace testing_support;
using nlohmann::json;

TEST_CASE("assignment documents round-trip byte for byte") {
    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1", "ex_cp2_t2"}) {
        const auto s = corpus_space(name);
        for (int k = 0; k <= 2; ++k)
            for (const auto& b : assignment_basis(s, k)) {
                const std::string once = io::assignment_to_json(s, b).dump(2);
                const auto back = io::assignment_from_json(s, json::parse(once));
                CHECK(back == b);
                CHECK(io::assignment_to_json(s, back).dump(2) == once);
            }
    }
}

TEST_CASE("assignment documents are validated") {
    const auto sq = corpus_space("ex_cp1sq");
    CHECK_NOTHROW(io::load_assignment_file(sq, corpus_path("f_cp1sq.json")));
    CHECK_THROWS_AS(io::assignment_from_json(sq, json::parse(R"({"degree": 3, "values": {}})")), SchemaError);
    CHECK_THROWS_AS(io::assignment_from_json(sq, json::parse(R"({"values": {}})")), SchemaError);
    CHECK_THROWS_AS(io::assignment_from_json(sq, json::parse(R"({"degree": 2, "values": {"q": "x1"}})")),
                    ValidationError);
    CHECK_THROWS_AS(
        io::assignment_from_json(sq, json::parse(R"({"degree": 2, "values": {"p1": "x2", "p2": "0", "p3": "0", "p4": "0"}})")),
        CongruenceViolation);
    CHECK_THROWS_AS(
        io::assignment_from_json(sq, json::parse(R"({"degree": 2, "values": {"p1": "x1^2", "p2": "0", "p3": "0", "p4": "0"}})")),
        ParseError);
    CHECK_THROWS(io::assignment_from_json(sq, json::parse(R"({"degree": 2, "values": {"p1": "x1"}})")));
}

TEST_CASE("verdict report") {
    const auto sq = corpus_space("ex_cp1sq");
    const auto f = io::load_assignment_file(sq, corpus_path("f_cp1sq.json"));
    const auto report = io::verdict_to_json(decide_cohomological(sq, f));
    CHECK(report["verdict"] == "NotCohomological");
    CHECK(report["components"][0]["status"] == "fail");
    CHECK(report["components"][0]["certificate"]["text"] == "2/x1");
    CHECK(report["witness"]["certificate"]["denominator"][0]["multiplicity"] == 1);
    CHECK(report["witness"]["certificate"]["denominator"][0]["coefficients"] == json::parse("[1, 0]"));
}

TEST_CASE("space summary") {
    const auto s = corpus_space("ex_cp1xcp1_gkm");
    const auto j = io::space_summary_json(s, Xi{1, 1});
    CHECK(j["gkm"] == true);
    CHECK(j["betti"] == json::parse("[1, 2, 1]"));
    CHECK(j["morse"][3]["index"] == 2);
    CHECK(j["one_skeleton"].size() == 4);
}
