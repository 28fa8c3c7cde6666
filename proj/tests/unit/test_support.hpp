#pragma once

#include "tassign/assignment.hpp"
#include "tassign/fraction.hpp"
#include "tassign/localize.hpp"
#include "tassign/space.hpp"

#include <random>
#include <string>

namespace testing_support {

using namespace tassign;

inline std::string corpus_path(const std::string& name) { return std::string(TASSIGN_CORPUS_DIR) + "/" + name; }

inline TSpace corpus_space(const std::string& name) { return load_space_file(corpus_path(name + ".json")); }

inline Polynomial P(const std::string& text, std::size_t rank, int degree) {
    return parse_polynomial(text, rank, degree);
}

inline Assignment A(const TSpace& s, int degree, std::initializer_list<const char*> values) {
    std::vector<Polynomial> v;
    for (const char* t : values) v.push_back(parse_polynomial(t, s.rank, degree));
    return make_assignment(s, degree, std::move(v));
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t rank, int degree, int max_coeff = 5) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> den(1, 3);
    Polynomial p(rank, degree);
    for (const auto& m : monomial_basis(rank, degree)) {
        const int c = coeff(rng);
        if (c == 0) continue;
        Rational q(c, den(rng));
        q.canonicalize();
        p.add_term(m, q);
    }
    return p;
}

inline LinForm random_form(std::mt19937& rng, std::size_t rank, int max_coeff = 3) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    for (;;) {
        std::vector<std::int64_t> c(rank);
        bool nonzero = false;
        for (auto& x : c) {
            x = coeff(rng);
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return LinForm(c);
    }
}

inline std::vector<Integer> random_point(std::mt19937& rng, std::size_t rank, int range = 50) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Integer> pt;
    for (std::size_t i = 0; i < rank; ++i) pt.emplace_back(d(rng));
    return pt;
}

/// CP^n with the circle acting with weights 0, 1, ..., n on homogeneous
/// coordinates: weights at p_i are (j - i) x for j != i.
inline TSpace cpn_circle(int n) {
    nlohmann::json doc;
    doc["rank"] = 1;
    doc["half_dim"] = n;
    doc["formal"] = true;
    doc["fixed_points"] = nlohmann::json::array();
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) {
        nlohmann::json ws = nlohmann::json::array();
        for (int j = 0; j <= n; ++j)
            if (j != i) ws.push_back({j - i});
        names.push_back("p" + std::to_string(i));
        doc["fixed_points"].push_back({{"name", names.back()}, {"weights", ws}});
    }
    doc["one_skeleton"] = {{{"name", "S"}, {"direction", {1}}, {"fixed_points", names}, {"half_dim", n}}};
    return load_space(doc);
}

/// Value of a fraction at a point where no denominator form vanishes.
inline std::optional<Rational> fraction_value(const LinFraction& f, std::span<const Integer> pt) {
    Rational den = 1;
    for (const auto& d : f.denominator()) {
        const Integer v = d.form.pair(pt);
        if (v == 0) return std::nullopt;
        for (int i = 0; i < d.multiplicity; ++i) den *= Rational(v);
    }
    return f.numerator().evaluate(pt) / den;
}

/// Value of prod(weights) at a point.
inline Rational weights_value(std::span<const LinForm> ws, std::span<const Integer> pt) {
    Rational v = 1;
    for (const auto& w : ws) v *= Rational(w.pair(pt));
    return v;
}

} // namespace testing_support
