#pragma once

// Fixed-point localization sums and the cohomologicality criteria built on
// them: integrality over low-dimensional components, moment conditions on
// components with the minimal number of fixed points, canonical classes
// for circle actions, and defect/torsion diagnostics.

#include "tassign/assignment.hpp"
#include "tassign/fraction.hpp"
#include "tassign/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tassign {

/// sum over p in Y^T of f(p) eta(p) / e_Y(p), exact and reduced.
LinFraction localization_sum(const TSpace& s, StratumRef y, const Assignment& f, const Assignment* eta = nullptr);

struct LocalizationReport {
    std::string stratum;
    LinFraction sum;
    bool polynomial = false;
    std::vector<DenominatorFactor> certificate;  ///< empty iff polynomial
};

LocalizationReport localization_report(const TSpace& s, StratumRef y, const Assignment& f,
                                       const Assignment* eta = nullptr);

/// Integrality of the plain localization sum over a component of half
/// dimension <= 2. Throws HypothesisViolation on larger components.
LocalizationReport check_low_dim_integrality(const TSpace& s, std::size_t component, const Assignment& f);

/// First Chern class of a component restricted to its fixed points:
/// c1(p) = m_p * beta, with beta oriented so that <beta, xi> > 0.
struct ComponentChern {
    LinForm beta;
    std::vector<Integer> multiples;   ///< aligned with the component's points
    std::vector<Polynomial> values;
    std::vector<int> indices;         ///< lambda^X at each point
    bool ordering_ok = true;          ///< c1 strictly decreasing in lambda^X
    std::vector<std::string> violations;
};

ComponentChern component_chern_class(const TSpace& s, std::size_t component, const Xi& xi);

/// |X^T| = d + 1 and lambda^X is a bijection onto {0, ..., d}.
bool has_minimal_fixed_points(const TSpace& s, std::size_t component, const Xi& xi);

struct CanonicalClass {
    int k = 0;
    std::size_t point = 0;                 ///< fixed-point index of p_k
    Rational normalizer;                   ///< C_k
    std::vector<Polynomial> restrictions;  ///< aligned with the component's points
};

/// Closed-form canonical class at the index-k point of a component
/// satisfying has_minimal_fixed_points. The result is checked to restrict
/// to Lambda^- at its own point and to vanish at the other points of
/// index <= k.
CanonicalClass closed_form_canonical(const TSpace& s, std::size_t component, int k, const Xi& xi);

struct MomentCheck {
    bool passed = true;
    int failed_moment = -1;       ///< first i with a nonzero sum
    std::optional<LinFraction> sum;
};

/// sum_p f(p) (c1^X(p))^i / e_X(p) == 0 for all i < d - k.
MomentCheck check_condition_moments(const TSpace& s, std::size_t component, const Assignment& f, const Xi& xi);

// --- circle actions --------------------------------------------------------

/// Canonical classes indexed by fixed point: classes[q] restricts to
/// tau_q at every fixed point.
struct CanonicalFamily {
    std::vector<Assignment> classes;
};

/// Canonical classes of a rank-1 space whose single component is the
/// whole space with n + 1 fixed points.
CanonicalFamily closed_form_family(const TSpace& s, const Xi& xi);

/// Checks that the class at q restricts to Lambda^-_q at q and vanishes
/// at every other point of index <= lambda_q. Throws MissingClasses or
/// HypothesisViolation.
void verify_canonical_family(const TSpace& s, const CanonicalFamily& family, const Xi& xi);

struct CanonicalSumResult {
    bool passed = true;
    std::vector<LinFraction> coefficients;  ///< q-sums, indexed by q
};

CanonicalSumResult check_canonical_sums(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi);
bool check_refined(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi);

/// Smallest N with x^N f passing check_canonical_sums. Throws CapExceeded.
int torsion_exponent(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi, int cap);

// --- decision procedure -----------------------------------------------------

/// Finite set of classes used as eta in the necessary integrality checks.
struct EtaLibrary {
    bool one = true;
    bool self = true;   ///< eta = f, i.e. the integral of f^2
    bool chern = true;
    bool thom = true;
    bool delta = true;  ///< only used on GKM spaces, where delta classes are cohomological

    static EtaLibrary parse(const std::string& spec);
    std::string to_string() const;
};

struct EtaClass {
    std::string name;
    Assignment value;
};

std::vector<EtaClass> eta_classes(const TSpace& s, const Assignment& f, const EtaLibrary& library);

struct NecessaryCheck {
    std::string stratum;
    std::string eta;
    LinFraction sum;
    bool polynomial = true;
};

std::vector<NecessaryCheck> necessary_checks(const TSpace& s, const Assignment& f, const EtaLibrary& library);

enum class Criterion { LowDimIntegrality, Moments, None };
enum class Verdict { Cohomological, NotCohomological, Undecidable };

std::string to_string(Criterion c);
std::string to_string(Verdict v);

struct ComponentVerdict {
    std::string component;
    Criterion criterion = Criterion::None;
    bool passed = false;
    std::optional<LinFraction> certificate;
    int failed_moment = -1;
};

struct Witness {
    std::string stratum;
    std::string condition;
    LinFraction certificate;
};

struct CohomologyVerdict {
    Verdict verdict = Verdict::Undecidable;
    std::vector<ComponentVerdict> components;
    std::vector<NecessaryCheck> necessary;
    std::optional<Witness> witness;
    std::vector<std::string> undecided;
};

struct DecideOptions {
    std::optional<Xi> xi;
    EtaLibrary library;
};

CohomologyVerdict decide_cohomological(const TSpace& s, const Assignment& f, const DecideOptions& options = {});

/// dim A^{2k} - dim H_T^{2k}. Throws NegativeDefect if negative.
long defect_dimension(const TSpace& s, int k, const Xi& xi);

/// Compares the restriction to t_Z of the localized integral of c_n * f
/// over Z with chi_Z * (c_l f)(Z), l = n - d.
struct IntegralFormula {
    Polynomial lhs;
    Polynomial rhs;
    bool equal = false;
};

IntegralFormula integral_formula_check(const TSpace& s, StratumRef z, const Assignment& f);

} // namespace tassign
