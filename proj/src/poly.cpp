#include "tassign/poly.hpp"

#include "tassign/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tassign {

Monomial Monomial::variable(std::size_t rank, std::size_t i) {
    Monomial m = one(rank);
    m.exponents.at(i) = 1;
    return m;
}

int Monomial::total() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += other.exponents[i];
    return out;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const int ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.exponents > b.exponents;
}

namespace {

void compositions(std::size_t rank, int degree, std::size_t pos, std::vector<int>& cur,
                  std::vector<Monomial>& out) {
    if (pos + 1 == rank) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[pos] = e;
        compositions(rank, degree - e, pos + 1, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomial_basis(std::size_t rank, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (rank == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(rank, 0);
    compositions(rank, degree, 0, cur, out);
    return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t rank, int degree) : rank_(rank), degree_(degree) {}

Polynomial Polynomial::constant(std::size_t rank, const Rational& c) {
    Polynomial p(rank, 0);
    p.add_term(Monomial::one(rank), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t rank, std::size_t i) {
    return monomial(Monomial::variable(rank, i), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.rank(), m.total());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.rank() != rank_) throw RankMismatch("monomial rank differs from polynomial rank");
    if (m.total() != degree_) throw DegreeMismatch("monomial degree differs from polynomial degree");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.rank_ != rank_) throw RankMismatch("polynomial ranks differ");
    if (other.is_zero()) return *this;
    if (is_zero()) {
        degree_ = other.degree_;
    } else if (other.degree_ != degree_) {
        throw DegreeMismatch("cannot add polynomials of degree " + std::to_string(degree_) + " and " +
                             std::to_string(other.degree_));
    }
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (other.rank_ != rank_) throw RankMismatch("polynomial ranks differ");
    Polynomial out(rank_, degree_ + other.degree_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(rank_, degree_);
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial out = constant(rank_, Rational(1));
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (images.size() != rank_) throw RankMismatch("substitution needs one image per variable");
    const std::size_t target_rank = rank_ == 0 ? 0 : images.front().rank();
    for (const auto& img : images) {
        if (img.rank() != target_rank) throw RankMismatch("substitution images disagree on rank");
        if (img.degree() != 1 && !img.is_zero()) throw DegreeMismatch("substitution images must be linear");
    }
    // powers[i][e] = images[i]^e, grown lazily
    std::vector<std::vector<Polynomial>> powers(rank_);
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target_rank, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) {
            Polynomial next = cache.back() * images[i];
            cache.push_back(std::move(next));
        }
        return cache[e];
    };
    Polynomial out(target_rank, degree_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target_rank, c);
        for (std::size_t i = 0; i < rank_; ++i)
            if (m.exponents[i] > 0) term *= power(i, m.exponents[i]);
        out += term;
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Integer> point) const {
    if (point.size() != rank_) throw RankMismatch("evaluation point has wrong rank");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Integer v = 1;
        for (std::size_t i = 0; i < rank_; ++i) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(m.exponents[i]));
            v *= p;
        }
        sum += c * Rational(v);
    }
    return sum;
}

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.rank(); ++i) {
            if (m.exponents[i] == 0) continue;
            std::string f = "x" + std::to_string(i + 1);
            if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            os << rational_to_string(mag);
            continue;
        }
        if (mag != 1) os << rational_to_string(mag) << '*';
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (rank_ != other.rank_) return false;
    if (terms_.empty() && other.terms_.empty()) return true;
    return degree_ == other.degree_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t rank, int degree)
        : text_(text), rank_(rank), degree_(degree) {}

    Polynomial parse() {
        Polynomial out(rank_, degree_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        add(out, negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            add(out, op == '-');
        }
        return out;
    }

private:
    void add(Polynomial& out, bool negative) {
        auto [mono, coef] = term();
        if (negative) coef = -coef;
        if (coef == 0) return;
        if (mono.total() != degree_)
            fail("term of degree " + std::to_string(mono.total()) + " in a polynomial of degree " +
                 std::to_string(degree_));
        out.add_term(mono, coef);
    }

    std::pair<Monomial, Rational> term() {
        Monomial mono = Monomial::one(rank_);
        Rational coef = 1;
        factor(mono, coef);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            factor(mono, coef);
        }
        return {mono, coef};
    }

    void factor(Monomial& mono, Rational& coef) {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        if (peek() == 'x') {
            ++pos_;
            const auto idx = integer();
            if (idx < 1 || static_cast<std::size_t>(idx) > rank_)
                fail("variable x" + std::to_string(idx) + " outside rank " + std::to_string(rank_));
            int e = 1;
            if (accept('^')) e = static_cast<int>(integer());
            mono.exponents[idx - 1] += e;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits());
            Integer den = 1;
            if (accept('/')) den = Integer(digits());
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            if (accept('^')) {
                const auto e = integer();
                Rational base = q;
                q = 1;
                for (long i = 0; i < e; ++i) q *= base;
            }
            coef *= q;
        } else {
            fail(std::string("unexpected character '") + peek() + "'");
        }
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    long integer() {
        const std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        return std::stol(d);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                         std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t rank_;
    int degree_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t rank, int degree) {
    return PolyParser(text, rank, degree).parse();
}

// ---------------------------------------------------------------------------
// Division by powers of a linear form

namespace {

std::optional<Polynomial> divide_once(const Polynomial& p, const LinForm& l, std::size_t pivot) {
    const Rational lead(static_cast<long>(l[pivot]));
    const Polynomial lpoly = l.to_polynomial();
    Polynomial quotient(p.rank(), p.degree() - 1);
    Polynomial rem = p;
    for (;;) {
        const Monomial* best = nullptr;
        Rational best_coef;
        for (const auto& [m, c] : rem.terms()) {
            if (m.exponents[pivot] > 0 && (!best || m.exponents[pivot] > best->exponents[pivot])) {
                best = &m;
                best_coef = c;
            }
        }
        if (!best) break;
        Monomial qm = *best;
        --qm.exponents[pivot];
        const Rational qc = best_coef / lead;
        quotient.add_term(qm, qc);
        rem -= Polynomial::monomial(qm, qc) * lpoly;
    }
    // What is left is P restricted to the hyperplane l = 0.
    if (!rem.is_zero()) return std::nullopt;
    return quotient;
}

} // namespace

std::optional<Polynomial> divide_by_linear_form(const Polynomial& p, const LinForm& l, int multiplicity) {
    if (l.rank() != p.rank()) throw RankMismatch("linear form rank differs from polynomial rank");
    std::size_t pivot = 0;
    while (pivot < l.rank() && l[pivot] == 0) ++pivot;
    if (pivot == l.rank()) throw Error("division by the zero linear form");
    Polynomial q = p;
    for (int i = 0; i < multiplicity; ++i) {
        if (q.is_zero()) return Polynomial::zero(p.rank(), p.degree() - multiplicity);
        auto next = divide_once(q, l, pivot);
        if (!next) return std::nullopt;
        q = std::move(*next);
    }
    return q;
}

// ---------------------------------------------------------------------------

LinForm::LinForm(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; }))
        throw ValidationError("linear form must be nonzero");
}

LinForm LinForm::direction() const {
    std::int64_t g = 0;
    for (auto c : coeffs_) g = std::gcd(g, c < 0 ? -c : c);
    std::vector<std::int64_t> out(coeffs_.size());
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
    const std::int64_t sign = *first < 0 ? -1 : 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = sign * coeffs_[i] / g;
    return LinForm(std::move(out));
}

std::int64_t LinForm::scale() const { return *multiple_of(direction()); }

std::optional<std::int64_t> LinForm::multiple_of(const LinForm& dir) const {
    if (dir.rank() != rank()) return std::nullopt;
    std::size_t j = 0;
    while (dir.coeffs_[j] == 0) ++j;
    if (coeffs_[j] % dir.coeffs_[j] != 0) return std::nullopt;
    const std::int64_t s = coeffs_[j] / dir.coeffs_[j];
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != s * dir.coeffs_[i]) return std::nullopt;
    return s;
}

bool LinForm::proportional_to(const LinForm& other) const {
    return other.rank() == rank() && direction() == other.direction();
}

Integer LinForm::pair(std::span<const Integer> xi) const {
    if (xi.size() != rank()) throw RankMismatch("xi has wrong rank");
    Integer s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += Integer(static_cast<long>(coeffs_[i])) * xi[i];
    return s;
}

Polynomial LinForm::to_polynomial() const {
    Polynomial p(rank(), 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.add_term(Monomial::variable(rank(), i), Rational(static_cast<long>(coeffs_[i])));
    return p;
}

std::string LinForm::to_string() const { return to_polynomial().to_string(); }

LinForm LinForm::operator-() const {
    std::vector<std::int64_t> out(coeffs_);
    for (auto& c : out) c = -c;
    return LinForm(std::move(out));
}

} // namespace tassign
