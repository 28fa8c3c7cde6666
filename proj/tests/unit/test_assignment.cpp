#include "test_support.hpp"

#include "tassign/errors.hpp"
#include "tassign/linalg.hpp"

#include <doctest.h>

#include <bit>

using namespace tassign;
using testing_support::A;
using testing_support::corpus_space;
using testing_support::P;

namespace {

// Coordinates of an assignment in the per-point monomial blocks.
linalg::Row coordinates(const Assignment& a, std::size_t rank) {
    linalg::Row r;
    for (const auto& v : a.values)
        for (const auto& m : monomial_basis(rank, a.degree)) r.push_back(v.coefficient(m));
    return r;
}

} // namespace

TEST_CASE("make_assignment validates congruences") {
    const auto sq = corpus_space("ex_cp1sq");
    CHECK_NOTHROW(A(sq, 1, {"x1", "0", "0", "x1"}));
    const auto cube = corpus_space("ex_cp1cube");
    CHECK_NOTHROW(A(cube, 1, {"x1", "-x1", "0", "0", "0", "0", "0", "0"}));

    try {
        A(sq, 1, {"x2", "0", "0", "0"});
        FAIL("expected CongruenceViolation");
    } catch (const CongruenceViolation& e) {
        REQUIRE_FALSE(e.failures().empty());
        CHECK(e.failures()[0].stratum == "X0");
        CHECK(e.failures()[0].residue == P("x2", 2, 1));
    }
    CHECK_THROWS_AS(make_assignment(sq, 1, std::vector<Polynomial>{P("x1", 2, 1)}), ValidationError);
    CHECK_THROWS_AS(make_assignment(sq, 1, std::vector<Polynomial>(4, P("x1^2", 2, 2))), DegreeMismatch);
}

TEST_CASE("make_assignment by name") {
    const auto cp1 = corpus_space("ex_cp1");
    std::map<std::string, Polynomial> values{{"p1", P("x1 + x2", 2, 1)}, {"p2", P("x2", 2, 1)}};
    const auto a = make_assignment(cp1, 1, values);
    CHECK(a.values[0] == P("x1 + x2", 2, 1));
    values.erase("p2");
    CHECK_THROWS(make_assignment(cp1, 1, values));
}

TEST_CASE("basis dimensions match hand counts") {
    // f(p1) free, every other point differs by alpha times a degree k-1 form
    auto expected = [](std::size_t points, int k) { return static_cast<std::size_t>(k + 1 + (points - 1) * k); };
    const auto cp1 = corpus_space("ex_cp1");
    const auto sq = corpus_space("ex_cp1sq");
    const auto cube = corpus_space("ex_cp1cube");
    for (int k = 0; k <= 3; ++k) {
        CHECK(assignment_dimension(cp1, k) == expected(2, k));
        CHECK(assignment_dimension(sq, k) == expected(4, k));
        CHECK(assignment_dimension(cube, k) == expected(8, k));
    }
    CHECK(assignment_dimension(sq, 1) == 5);
    CHECK(assignment_dimension(cp1, 1) == 3);
    // rank one: congruences modulo x hold automatically once k >= 1
    const auto s1 = corpus_space("ex_cp2_s1");
    CHECK(assignment_dimension(s1, 0) == 1);
    CHECK(assignment_dimension(s1, 2) == 3);
}

TEST_CASE("basis elements validate, are independent and span") {
    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1xcp1_gkm", "ex_cp2_t2"}) {
        const auto s = corpus_space(name);
        for (int k = 0; k <= 2; ++k) {
            const auto basis = assignment_basis(s, k);
            linalg::Matrix m;
            for (const auto& b : basis) {
                CHECK(find_violations(s, b).empty());
                CHECK(b.degree == k);
                m.push_back(coordinates(b, s.rank));
            }
            const std::size_t cols = s.fixed_points.size() * monomial_basis(s.rank, k).size();
            CHECK(linalg::rank(m, cols) == basis.size());
            // products of basis elements are assignments again
            if (k == 1 && basis.size() >= 2) CHECK_NOTHROW(multiply(s, basis[0], basis[1]));
        }
    }
}

TEST_CASE("ring operations") {
    const auto cube = corpus_space("ex_cp1cube");
    const auto f = A(cube, 1, {"x1", "-x1", "0", "0", "0", "0", "0", "0"});
    const auto f2 = multiply(cube, f, f);
    CHECK(f2 == A(cube, 2, {"x1^2", "x1^2", "0", "0", "0", "0", "0", "0"}));
    CHECK(add(cube, f, scale(cube, f, Rational(-1))).is_zero());
    CHECK(scale(cube, f, Rational(1)) == f);
    CHECK_THROWS_AS(add(cube, f, f2), DegreeMismatch);
    CHECK(constant_assignment(cube, Rational(3)).values[5] == Polynomial::constant(2, 3));
}

TEST_CASE("delta classes") {
    const auto cube = corpus_space("ex_cp1cube");
    const auto d1 = delta_class(cube, 0);
    CHECK(d1 == A(cube, 1, {"x1", "0", "0", "0", "0", "0", "0", "0"}));

    const auto gkm = corpus_space("ex_cp1xcp1_gkm");
    const auto dp = delta_class(gkm, 0);
    CHECK(dp.degree == 2);
    CHECK(dp.values[0] == P("x1*x2", 2, 2));
    for (std::size_t q = 1; q < 4; ++q) CHECK(dp.values[q].is_zero());
    CHECK_NOTHROW(add(gkm, delta_class(gkm, 1), delta_class(gkm, 2)));

    // direction products use the positive primitive representative
    const auto t2 = corpus_space("ex_cp2_t2");
    CHECK(delta_class(t2, 1).values[1] == P("x1^2 - x1*x2", 2, 2));

    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1", "ex_cp2_t2"}) {
        const auto s = corpus_space(name);
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p) CHECK(find_violations(s, delta_class(s, p)).empty());
    }
}

TEST_CASE("Chern assignments") {
    const auto sq = corpus_space("ex_cp1sq");
    CHECK(chern_assignment(sq, 0) == constant_assignment(sq, Rational(1)));
    CHECK(chern_assignment(sq, 1) == A(sq, 1, {"-2*x1", "0", "0", "2*x1"}));
    for (const char* name : {"ex_cp1", "ex_cp1sq", "ex_cp1cube", "ex_cp1xcp1_gkm", "ex_cp2_s1", "ex_cp2_t2"}) {
        const auto s = corpus_space(name);
        const auto md = morse_data(s, effective_xi(s));
        const auto top = chern_assignment(s, s.half_dim);
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p) CHECK(top.values[p] == md.points[p].euler);
        // coefficient extraction from prod(1 + w t), expanded by hand over subsets
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p) {
            const auto& ws = s.fixed_points[p].weights;
            for (int m = 0; m <= s.half_dim; ++m) {
                Polynomial sigma(s.rank, m);
                for (unsigned mask = 0; mask < (1u << ws.size()); ++mask) {
                    if (std::popcount(mask) != m) continue;
                    Polynomial term = Polynomial::constant(s.rank, 1);
                    for (std::size_t j = 0; j < ws.size(); ++j)
                        if (mask & (1u << j)) term = term * ws[j].to_polynomial();
                    sigma += term;
                }
                CHECK(chern_assignment(s, m).values[p] == sigma);
            }
        }
    }
    CHECK_THROWS(chern_assignment(sq, 3));
}

TEST_CASE("Thom assignments") {
    const auto gkm = corpus_space("ex_cp1xcp1_gkm");
    const auto e13 = thom_assignment(gkm, *gkm.find_stratum("E13"));
    CHECK(e13 == A(gkm, 1, {"x2", "0", "x2", "0"}));
    const auto e24 = thom_assignment(gkm, *gkm.find_stratum("E24"));
    CHECK(e24 == A(gkm, 1, {"0", "-x2", "0", "-x2"}));
    CHECK(thom_assignment(gkm, StratumRef::whole()) == constant_assignment(gkm, Rational(1)));
}

TEST_CASE("collinear counterexample") {
    const auto cube = corpus_space("ex_cp1cube");
    const auto f = collinear_counterexample(cube);
    CHECK(f.degree == 1);
    std::size_t nonzero = 0;
    for (const auto& v : f.values) nonzero += v.is_zero() ? 0 : 1;
    CHECK(nonzero == 2);
    CHECK(f == A(cube, 1, {"x1", "-x1", "0", "0", "0", "0", "0", "0"}));
    CHECK_THROWS_AS(collinear_counterexample(corpus_space("ex_cp1xcp1_gkm")), NotApplicable);
    CHECK_THROWS_AS(collinear_counterexample(corpus_space("ex_cp1sq")), NotApplicable);
}

TEST_CASE("circle reduction") {
    const auto gkm = corpus_space("ex_cp1xcp1_gkm");
    const Xi xi{1, 1};
    const auto c = circle_reduction(gkm, xi);
    CHECK(c.rank == 1);
    CHECK(c.one_skeleton.size() == 1);
    CHECK(c.one_skeleton[0].half_dim == 2);
    CHECK(c.fixed_points[1].weights == std::vector<LinForm>{LinForm({1}), LinForm({-1})});
    const auto f = A(gkm, 1, {"x1 + x2", "x1", "x2", "0"});
    const auto r = restrict_to_circle(f, xi);
    CHECK(r.values[0] == P("2*x1", 1, 1));
    CHECK(find_violations(c, r).empty());
    CHECK_THROWS_AS(circle_reduction(gkm, Xi{1, 0}), NonGenericXi);
}
