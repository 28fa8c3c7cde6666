#pragma once

// Polynomial assignments: maps from fixed points to S(t*) satisfying the
// restriction congruences of every declared stratum. Under equivariant
// formality the fixed-point values determine the whole assignment.

#include "tassign/errors.hpp"
#include "tassign/space.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace tassign {

struct Assignment {
    int degree = 0;                   ///< polynomial degree k (cohomological degree 2k)
    std::vector<Polynomial> values;   ///< indexed like TSpace::fixed_points

    int cohomological_degree() const { return 2 * degree; }
    bool is_zero() const;
    bool operator==(const Assignment& other) const;
};

struct CongruenceFailure {
    std::string stratum;
    std::string p;
    std::string q;
    Polynomial residue;  ///< reduction of f(p) - f(q) modulo the stratum's stabilizer
};

class CongruenceViolation : public Error {
public:
    explicit CongruenceViolation(std::vector<CongruenceFailure> failures);
    const std::vector<CongruenceFailure>& failures() const { return failures_; }

private:
    std::vector<CongruenceFailure> failures_;
};

std::vector<CongruenceFailure> find_violations(const TSpace& s, const Assignment& a);

/// Validate and wrap. Throws CongruenceViolation listing every failed
/// congruence.
Assignment make_assignment(const TSpace& s, int degree, std::vector<Polynomial> values);
Assignment make_assignment(const TSpace& s, int degree, const std::map<std::string, Polynomial>& values);

/// Echelon basis of A^{2k}: one coordinate block per fixed point, each
/// block the graded-lex monomial basis of S^k(t*).
std::vector<Assignment> assignment_basis(const TSpace& s, int k);
std::size_t assignment_dimension(const TSpace& s, int k);

Assignment add(const TSpace& s, const Assignment& a, const Assignment& b);
Assignment multiply(const TSpace& s, const Assignment& a, const Assignment& b);
Assignment scale(const TSpace& s, const Assignment& a, const Rational& c);

Assignment constant_assignment(const TSpace& s, const Rational& c);
/// Product of the distinct primitive weight directions at p, zero elsewhere.
Assignment delta_class(const TSpace& s, std::size_t p);
/// m-th elementary symmetric polynomial of the weights at each point.
Assignment chern_assignment(const TSpace& s, int m);
/// Product of normal weights on the stratum closure, zero off it.
Assignment thom_assignment(const TSpace& s, StratumRef x);
/// For spaces whose weights all lie on one line and n >= 3: an assignment
/// that integrates to zero but whose square does not integrate to a
/// polynomial. Throws NotApplicable otherwise.
Assignment collinear_counterexample(const TSpace& s);

/// Restrict a space to the circle generated by an integral generic xi.
/// The result has rank 1, weights <w, xi> x and a single component.
TSpace circle_reduction(const TSpace& s, const Xi& xi);
/// Pull an assignment back along the same circle: x_i -> xi_i x.
Assignment restrict_to_circle(const Assignment& a, const Xi& xi);

} // namespace tassign
