#include "tassign/subtorus.hpp"

#include "tassign/errors.hpp"

#include <algorithm>

namespace tassign {

namespace {

linalg::Matrix to_rows(std::size_t rank, std::span<const LinForm> forms) {
    linalg::Matrix rows;
    for (const auto& f : forms) {
        if (f.rank() != rank) throw RankMismatch("annihilator form has wrong rank");
        linalg::Row r(rank);
        for (std::size_t i = 0; i < rank; ++i) r[i] = Rational(static_cast<long>(f[i]));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

Subtorus::Subtorus(std::size_t rank, std::span<const LinForm> annihilator)
    : Subtorus(rank, to_rows(rank, annihilator)) {}

Subtorus::Subtorus(std::size_t rank, const linalg::Matrix& rows)
    : rank_(rank), echelon_(linalg::row_reduce(rows, rank)) {
    std::vector<bool> is_pivot(rank, false);
    for (auto p : echelon_.pivots) is_pivot[p] = true;
    images_.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        Polynomial img(rank, 1);
        if (!is_pivot[i]) {
            img.add_term(Monomial::variable(rank, i), Rational(1));
        } else {
            // x_i = -sum_{free c} row[c] x_c on the subalgebra
            const auto row = std::find(echelon_.pivots.begin(), echelon_.pivots.end(), i) - echelon_.pivots.begin();
            for (std::size_t c = 0; c < rank; ++c)
                if (!is_pivot[c] && echelon_.rows[row][c] != 0)
                    img.add_term(Monomial::variable(rank, c), -echelon_.rows[row][c]);
        }
        images_.push_back(std::move(img));
    }
}

Subtorus Subtorus::origin(std::size_t rank) {
    linalg::Matrix id(rank, linalg::Row(rank, Rational(0)));
    for (std::size_t i = 0; i < rank; ++i) id[i][i] = 1;
    return Subtorus(rank, id);
}

Subtorus Subtorus::kernel(const LinForm& form) { return Subtorus(form.rank(), std::span(&form, 1)); }

std::vector<std::vector<Integer>> Subtorus::integer_annihilator() const {
    std::vector<std::vector<Integer>> out;
    for (const auto& r : echelon_.rows) {
        Integer l = 1;
        for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> v;
        for (const auto& q : r) v.push_back(q.get_num() * (l / q.get_den()));
        out.push_back(std::move(v));
    }
    return out;
}

Polynomial Subtorus::reduce(const Polynomial& f) const {
    if (f.rank() != rank_) throw RankMismatch("polynomial of rank " + std::to_string(f.rank()) +
                                              " reduced modulo a subtorus of rank " + std::to_string(rank_));
    if (codim() == 0) return f;
    Polynomial out = f.substitute(images_);
    if (out.is_zero()) return Polynomial::zero(rank_, f.degree());
    return out;
}

bool Subtorus::restrictions_equal(const Polynomial& f, const Polynomial& g) const {
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
        throw DegreeMismatch("restrictions_equal on polynomials of different degree");
    return reduce(f - g).is_zero();
}

bool Subtorus::annihilates(const LinForm& form) const { return reduce(form.to_polynomial()).is_zero(); }

bool Subtorus::contains(const Subtorus& other) const {
    if (other.rank_ != rank_) throw RankMismatch("subtori of different rank");
    // t_this ⊇ t_other  <=>  ann(this) ⊆ span ann(other)
    linalg::Matrix combined = other.echelon_.rows;
    combined.insert(combined.end(), echelon_.rows.begin(), echelon_.rows.end());
    return linalg::rank(combined, rank_) == other.codim();
}

Subtorus Subtorus::intersection(const Subtorus& other) const {
    if (other.rank_ != rank_) throw RankMismatch("subtori of different rank");
    linalg::Matrix combined = echelon_.rows;
    combined.insert(combined.end(), other.echelon_.rows.begin(), other.echelon_.rows.end());
    return Subtorus(rank_, combined);
}

bool Subtorus::operator==(const Subtorus& other) const {
    return rank_ == other.rank_ && echelon_.rows == other.echelon_.rows;
}

Polynomial reduce_mod_subtorus(const Polynomial& f, const Subtorus& h) { return h.reduce(f); }

bool restrictions_equal(const Polynomial& f, const Polynomial& g, const Subtorus& h) {
    return h.restrictions_equal(f, g);
}

} // namespace tassign
