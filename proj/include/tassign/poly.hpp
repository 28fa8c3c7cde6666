#pragma once

// Exact homogeneous polynomials over Q in r variables x1..xr, and integer
// linear forms (isotropy weights).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tassign {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial. Length equals the ambient rank.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial one(std::size_t rank) { return Monomial(std::vector<int>(rank, 0)); }
    static Monomial variable(std::size_t rank, std::size_t i);

    std::size_t rank() const { return exponents.size(); }
    int total() const;
    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;
};

/// Graded-lex order, largest first: x1^2 > x1*x2 > x2^2.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Every monomial of total degree `degree` in `rank` variables, graded-lex
/// descending.
std::vector<Monomial> monomial_basis(std::size_t rank, int degree);

class LinForm;

/// Homogeneous polynomial with rational coefficients. The zero polynomial
/// still carries a declared degree.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    Polynomial() = default;
    Polynomial(std::size_t rank, int degree);

    static Polynomial zero(std::size_t rank, int degree) { return {rank, degree}; }
    static Polynomial constant(std::size_t rank, const Rational& c);
    static Polynomial variable(std::size_t rank, std::size_t i);
    static Polynomial monomial(const Monomial& m, const Rational& c);

    std::size_t rank() const { return rank_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int e) const;

    /// Add c*m in place. `m` must have this polynomial's rank and degree.
    void add_term(const Monomial& m, const Rational& c);

    /// Ring map x_i -> images[i]. All images must be homogeneous of degree 1
    /// and share a rank.
    Polynomial substitute(std::span<const Polynomial> images) const;

    /// Value at an integer point of t (used for pairings with xi).
    Rational evaluate(std::span<const Integer> point) const;

    /// Canonical rendering, e.g. "2*x1^2*x2 - 1/3*x2^3".
    std::string to_string() const;

    bool operator==(const Polynomial& other) const;

private:
    std::size_t rank_ = 0;
    int degree_ = 0;
    Terms terms_;
};

/// Parse the canonical rendering back. Also accepts "x1*x1", implicit
/// coefficient 1, parentheses-free sums and the "^" power operator.
/// `degree` is required to type the zero polynomial and is checked
/// against every parsed term.
Polynomial parse_polynomial(std::string_view text, std::size_t rank, int degree);

/// Exact division by the m-th power of a linear form; std::nullopt when
/// P is not divisible.
std::optional<Polynomial> divide_by_linear_form(const Polynomial& p, const LinForm& l, int multiplicity = 1);

/// Integer linear form on t (an element of the weight lattice).
class LinForm {
public:
    LinForm() = default;
    explicit LinForm(std::vector<std::int64_t> coefficients);

    std::size_t rank() const { return coeffs_.size(); }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

    /// Primitive representative of the line through this form with first
    /// nonzero entry positive.
    LinForm direction() const;
    /// Signed integer s with *this == s * direction().
    std::int64_t scale() const;
    /// Signed integer s with *this == s * dir, or nullopt if not proportional.
    std::optional<std::int64_t> multiple_of(const LinForm& dir) const;
    bool proportional_to(const LinForm& other) const;

    Integer pair(std::span<const Integer> xi) const;
    Polynomial to_polynomial() const;
    std::string to_string() const;

    LinForm operator-() const;
    bool operator==(const LinForm&) const = default;
    auto operator<=>(const LinForm&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

std::string rational_to_string(const Rational& q);

} // namespace tassign
