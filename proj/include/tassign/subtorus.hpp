#pragma once

// Subalgebras t_X of t, stored by annihilator, and the restriction maps
// S(t*) -> S(t_X*) realized as reduction modulo the linear ideal generated
// by the annihilator.

#include "tassign/linalg.hpp"
#include "tassign/poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tassign {

class Subtorus {
public:
    Subtorus() = default;
    /// Subalgebra cut out by the given forms. Dependent forms are allowed;
    /// the stored annihilator is their echelon basis.
    Subtorus(std::size_t rank, std::span<const LinForm> annihilator);

    static Subtorus whole(std::size_t rank) { return Subtorus(rank, std::span<const LinForm>{}); }
    static Subtorus origin(std::size_t rank);
    static Subtorus kernel(const LinForm& form);

    std::size_t rank() const { return rank_; }
    /// Codimension in t (the degree of a stratum with this stabilizer).
    std::size_t codim() const { return echelon_.pivots.size(); }
    std::size_t dim() const { return rank_ - codim(); }
    const linalg::Matrix& echelon() const { return echelon_.rows; }
    const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }
    /// Echelon rows scaled to primitive integer vectors.
    std::vector<std::vector<Integer>> integer_annihilator() const;

    /// Canonical representative of f modulo the annihilator ideal: pivot
    /// variables are eliminated, the result only involves free variables.
    Polynomial reduce(const Polynomial& f) const;
    bool restrictions_equal(const Polynomial& f, const Polynomial& g) const;
    /// True when the form vanishes on this subalgebra.
    bool annihilates(const LinForm& form) const;

    /// this ⊇ other as subalgebras of t.
    bool contains(const Subtorus& other) const;
    Subtorus intersection(const Subtorus& other) const;

    bool operator==(const Subtorus& other) const;

private:
    Subtorus(std::size_t rank, const linalg::Matrix& rows);

    std::size_t rank_ = 0;
    linalg::Echelon echelon_;
    std::vector<Polynomial> images_;  ///< x_i -> its representative mod the ideal
};

Polynomial reduce_mod_subtorus(const Polynomial& f, const Subtorus& h);
bool restrictions_equal(const Polynomial& f, const Polynomial& g, const Subtorus& h);

} // namespace tassign
