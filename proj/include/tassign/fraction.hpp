#pragma once

// Rational functions whose denominators are products of linear forms: the
// only kind of fraction that appears in fixed-point localization sums.

#include "tassign/poly.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tassign {

struct DenominatorFactor {
    LinForm form; ///< primitive, positive-normalized
    int multiplicity = 1;
    bool operator==(const DenominatorFactor&) const = default;
};

/// numerator / prod(form^multiplicity). Always kept reduced: the
/// denominator forms are pairwise non-proportional and none divides the
/// numerator. The zero fraction has an empty denominator.
class LinFraction {
public:
    LinFraction() = default;
    explicit LinFraction(Polynomial numerator);
    LinFraction(Polynomial numerator, std::vector<DenominatorFactor> denominator);

    /// numerator / prod(weights), with arbitrary (nonzero, possibly
    /// non-primitive) integer weights.
    static LinFraction over_weights(const Polynomial& numerator, std::span<const LinForm> weights);

    const Polynomial& numerator() const { return numerator_; }
    const std::vector<DenominatorFactor>& denominator() const { return denominator_; }
    std::size_t rank() const { return numerator_.rank(); }
    bool is_zero() const { return numerator_.is_zero(); }
    bool is_polynomial() const { return denominator_.empty(); }
    int denominator_degree() const;
    /// deg(numerator) - sum of multiplicities; meaningless for zero.
    int formal_degree() const { return numerator_.degree() - denominator_degree(); }

    /// Multiply by a polynomial and re-reduce.
    LinFraction times(const Polynomial& p) const;

    std::string to_string() const;
    bool operator==(const LinFraction& other) const;

private:
    void reduce();

    Polynomial numerator_;
    std::vector<DenominatorFactor> denominator_;
};

/// Exact sum over a common denominator, reduced.
LinFraction fraction_sum(std::span<const LinFraction> terms);

/// Certificate that a reduced fraction is not a polynomial: its surviving
/// denominator.
struct NotPolynomial {
    std::vector<DenominatorFactor> denominator;
};

std::variant<Polynomial, NotPolynomial> fraction_as_polynomial(const LinFraction& f);

std::string denominator_to_string(const std::vector<DenominatorFactor>& d);

} // namespace tassign
