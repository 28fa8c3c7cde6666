#include "test_support.hpp"

#include <doctest.h>

using namespace tassign;
using testing_support::P;

namespace {

LinFraction frac(const std::string& num, int degree, std::vector<LinForm> weights, std::size_t rank = 2) {
    return LinFraction::over_weights(P(num, rank, degree), weights);
}

} // namespace

TEST_CASE("construction normalizes and reduces") {
    const LinForm a({1, 0});
    // x1 / (-x1)^2 -> 1/x1
    const auto f = frac("x1", 1, {-a, -a});
    CHECK(f.to_string() == "1/x1");
    CHECK(f.denominator_degree() == 1);
    CHECK(f.formal_degree() == -1);

    // x2 / (-2 x1) -> -1/2*x2 / x1
    const auto g = frac("x2", 1, {LinForm({-2, 0})});
    CHECK(g.numerator() == P("-1/2*x2", 2, 1));
    REQUIRE(g.denominator().size() == 1);
    CHECK(g.denominator()[0].form == a);

    // (x1^2 - x2^2) / (x1 - x2) -> x1 + x2
    const auto h = frac("x1^2 - x2^2", 2, {LinForm({1, -1})});
    CHECK(h.is_polynomial());
    CHECK(h.numerator() == P("x1 + x2", 2, 1));

    // 0 / (x1 x2) -> 0 with empty denominator
    const auto z = LinFraction::over_weights(Polynomial::zero(2, 0), std::vector<LinForm>{a, LinForm({0, 1})});
    CHECK(z.is_zero());
    CHECK(z.is_polynomial());
    CHECK(z.to_string() == "0");
}

TEST_CASE("fraction sums") {
    const LinForm a({1, 0});
    SUBCASE("two terms alpha/alpha^2") {
        const std::vector<LinFraction> t{frac("x1", 1, {a, a}), frac("x1", 1, {a, a})};
        const auto s = fraction_sum(t);
        CHECK(s.to_string() == "2/x1");
        CHECK(s.numerator() == Polynomial::constant(2, 2));
        REQUIRE(s.denominator().size() == 1);
        CHECK(s.denominator()[0].multiplicity == 1);
    }
    SUBCASE("cancellation to zero") {
        const std::vector<LinFraction> t{frac("x1", 1, {a, a, a}), frac("-x1", 1, {a, a, a})};
        CHECK(fraction_sum(t).is_zero());
    }
    SUBCASE("like denominators") {
        const LinForm b({0, 1});
        const std::vector<LinFraction> t{frac("x1", 1, {b}), frac("x1", 1, {b})};
        CHECK(fraction_sum(t).to_string() == "2*x1/x2");
    }
    SUBCASE("mixed denominators cancel a shared factor") {
        // 1/(x1 (x1 - x2)) + 1/(x2 (x2 - x1)) = -1/(x1 x2)
        const LinForm b({0, 1}), c({1, -1});
        const std::vector<LinFraction> t{frac("1", 0, {a, c}), frac("1", 0, {b, -c})};
        const auto s = fraction_sum(t);
        CHECK(s.numerator() == Polynomial::constant(2, -1));
        CHECK(s.denominator_degree() == 2);
        CHECK(s.to_string() == "-1/(x1*x2)");
    }
    SUBCASE("empty sum has no rank") { CHECK_THROWS(fraction_sum(std::vector<LinFraction>{})); }
}

TEST_CASE("fraction_as_polynomial") {
    const LinForm a({1, 0});
    const auto two_over_a = fraction_sum(std::vector<LinFraction>{frac("x1", 1, {a, a}), frac("x1", 1, {a, a})});
    auto r = fraction_as_polynomial(two_over_a);
    REQUIRE(std::holds_alternative<NotPolynomial>(r));
    const auto& cert = std::get<NotPolynomial>(r).denominator;
    REQUIRE(cert.size() == 1);
    CHECK(cert[0].form == a);
    CHECK(denominator_to_string(cert) == "x1");

    auto q = fraction_as_polynomial(frac("x1^2 - x2^2", 2, {LinForm({1, -1})}));
    REQUIRE(std::holds_alternative<Polynomial>(q));
    CHECK(std::get<Polynomial>(q) == P("x1 + x2", 2, 1));
}

TEST_CASE("times re-reduces") {
    const LinForm a({1, 0});
    const auto f = frac("1", 0, {a, a});
    CHECK(f.times(P("x1^2", 2, 2)).to_string() == "1");
    CHECK(f.times(P("x1*x2", 2, 2)).to_string() == "x2/x1");
}
