#include "tassign/localize.hpp"

#include <algorithm>
#include <sstream>

namespace tassign {

LinFraction localization_sum(const TSpace& s, StratumRef y, const Assignment& f, const Assignment* eta) {
    if (f.values.size() != s.fixed_points.size() || (eta && eta->values.size() != s.fixed_points.size()))
        throw ValidationError("assignment does not belong to this space");
    std::vector<LinFraction> terms;
    for (auto p : s.stratum_points(y)) {
        Polynomial num = eta ? f.values[p] * eta->values[p] : f.values[p];
        const auto tangent = s.tangent_weights(y, p);
        if (static_cast<int>(tangent.size()) != s.stratum_half_dim(y))
            throw ZeroEulerClass("Euler class of " + s.stratum_name(y) + " at " + s.fixed_points[p].name +
                                 " is degenerate");
        terms.push_back(LinFraction::over_weights(num, tangent));
    }
    if (terms.empty()) return LinFraction(Polynomial::zero(s.rank, 0));
    return fraction_sum(terms);
}

LocalizationReport localization_report(const TSpace& s, StratumRef y, const Assignment& f, const Assignment* eta) {
    LocalizationReport r{s.stratum_name(y), localization_sum(s, y, f, eta), false, {}};
    r.polynomial = r.sum.is_polynomial();
    r.certificate = r.sum.denominator();
    return r;
}

LocalizationReport check_low_dim_integrality(const TSpace& s, std::size_t component, const Assignment& f) {
    const auto& c = s.one_skeleton.at(component);
    if (c.half_dim > 2)
        throw HypothesisViolation("component " + c.name + " has dimension " + std::to_string(2 * c.half_dim) +
                                  " > 4; plain integrality is not sufficient there");
    return localization_report(s, StratumRef::component(component), f);
}

// ---------------------------------------------------------------------------

ComponentChern component_chern_class(const TSpace& s, std::size_t component, const Xi& xi) {
    const auto& c = s.one_skeleton.at(component);
    ComponentChern out;
    out.beta = c.direction.pair(xi) < 0 ? -c.direction : c.direction;
    const auto ref = StratumRef::component(component);
    for (auto p : c.points) {
        Integer m = 0;
        int index = 0;
        for (const auto& w : s.tangent_weights(ref, p)) {
            m += Integer(static_cast<long>(*w.multiple_of(out.beta)));
            if (w.pair(xi) < 0) ++index;
            else if (w.pair(xi) == 0) throw NonGenericXi("xi pairs to zero with weight " + w.to_string());
        }
        out.values.push_back(out.beta.to_polynomial().scaled(Rational(m)));
        out.multiples.push_back(m);
        out.indices.push_back(index);
    }
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = 0; j < c.points.size(); ++j)
            if (out.indices[i] < out.indices[j] && !(out.multiples[i] > out.multiples[j])) {
                out.ordering_ok = false;
                out.violations.push_back("c1(" + s.fixed_points[c.points[i]].name + ") = " + out.values[i].to_string() +
                                         " is not above c1(" + s.fixed_points[c.points[j]].name +
                                         ") = " + out.values[j].to_string());
            }
    return out;
}

bool has_minimal_fixed_points(const TSpace& s, std::size_t component, const Xi& xi) {
    const auto& c = s.one_skeleton.at(component);
    if (c.points.size() != static_cast<std::size_t>(c.half_dim) + 1) return false;
    const auto chern = component_chern_class(s, component, xi);
    std::vector<int> sorted = chern.indices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

void require_minimal_fixed_points(const TSpace& s, std::size_t component, const Xi& xi) {
    if (!has_minimal_fixed_points(s, component, xi)) {
        const auto& c = s.one_skeleton.at(component);
        throw HypothesisViolation("component " + c.name + " has " + std::to_string(c.points.size()) +
                                  " fixed points and half_dim " + std::to_string(c.half_dim) +
                                  "; the closed-form canonical classes need exactly d + 1 points with indices 0..d");
    }
}

} // namespace

CanonicalClass closed_form_canonical(const TSpace& s, std::size_t component, int k, const Xi& xi) {
    require_minimal_fixed_points(s, component, xi);
    const auto& c = s.one_skeleton.at(component);
    if (k < 0 || k > c.half_dim) throw HypothesisViolation("canonical class index out of range");
    const auto chern = component_chern_class(s, component, xi);
    const auto ref = StratumRef::component(component);

    std::vector<std::size_t> by_index(c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) by_index[static_cast<std::size_t>(chern.indices[i])] = i;
    const std::size_t pk = by_index[static_cast<std::size_t>(k)];

    // Lambda_k^- = mu * beta^k
    const auto morse_k = point_morse(s.tangent_weights(ref, c.points[pk]), xi);
    Integer mu = 1;
    for (const auto& w : s.tangent_weights(ref, c.points[pk]))
        if (w.pair(xi) < 0) mu *= Integer(static_cast<long>(*w.multiple_of(chern.beta)));

    Integer prod = 1;
    for (int j = 0; j < k; ++j) prod *= chern.multiples[pk] - chern.multiples[by_index[static_cast<std::size_t>(j)]];
    CanonicalClass out;
    out.k = k;
    out.point = c.points[pk];
    out.normalizer = Rational(prod, mu);
    out.normalizer.canonicalize();
    if (out.normalizer == 0) throw HypothesisViolation("normalizing constant C_k vanishes on " + c.name);

    const Polynomial beta_k = chern.beta.to_polynomial().pow(k);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        Integer v = 1;
        for (int j = 0; j < k; ++j) v *= chern.multiples[i] - chern.multiples[by_index[static_cast<std::size_t>(j)]];
        Polynomial r = beta_k.scaled(Rational(v) / out.normalizer);
        out.restrictions.push_back(r.is_zero() ? Polynomial::zero(s.rank, k) : std::move(r));
    }

    if (out.restrictions[pk] != morse_k.negative_part)
        throw HypothesisViolation("canonical class tau_" + std::to_string(k) + " fails tau(p) = Lambda^-");
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (i != pk && chern.indices[i] <= k && !out.restrictions[i].is_zero())
            throw HypothesisViolation("canonical class tau_" + std::to_string(k) + " does not vanish at lower index");
    return out;
}

MomentCheck check_condition_moments(const TSpace& s, std::size_t component, const Assignment& f, const Xi& xi) {
    require_minimal_fixed_points(s, component, xi);
    const auto& c = s.one_skeleton.at(component);
    const auto chern = component_chern_class(s, component, xi);
    const auto ref = StratumRef::component(component);
    MomentCheck out;
    for (int i = 0; i < c.half_dim - f.degree; ++i) {
        std::vector<LinFraction> terms;
        for (std::size_t j = 0; j < c.points.size(); ++j) {
            const auto p = c.points[j];
            terms.push_back(LinFraction::over_weights(f.values[p] * chern.values[j].pow(i), s.tangent_weights(ref, p)));
        }
        LinFraction sum = fraction_sum(terms);
        if (!sum.is_zero()) {
            out.passed = false;
            out.failed_moment = i;
            out.sum = std::move(sum);
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

CanonicalFamily closed_form_family(const TSpace& s, const Xi& xi) {
    if (s.rank != 1) throw HypothesisViolation("canonical class families are built for circle actions (rank 1)");
    for (std::size_t ci = 0; ci < s.one_skeleton.size(); ++ci) {
        const auto& c = s.one_skeleton[ci];
        if (c.points.size() != s.fixed_points.size() || c.half_dim != s.half_dim) continue;
        require_minimal_fixed_points(s, ci, xi);
        CanonicalFamily family;
        family.classes.resize(s.fixed_points.size());
        for (int k = 0; k <= c.half_dim; ++k) {
            const auto tau = closed_form_canonical(s, ci, k, xi);
            std::vector<Polynomial> values(s.fixed_points.size(), Polynomial::zero(s.rank, k));
            for (std::size_t j = 0; j < c.points.size(); ++j) values[c.points[j]] = tau.restrictions[j];
            family.classes[tau.point] = make_assignment(s, k, std::move(values));
        }
        return family;
    }
    throw HypothesisViolation("no component spans the whole space; closed-form canonical classes need the minimal "
                              "fixed-point case");
}

void verify_canonical_family(const TSpace& s, const CanonicalFamily& family, const Xi& xi) {
    if (family.classes.size() != s.fixed_points.size())
        throw MissingClasses("expected one canonical class per fixed point (" + std::to_string(s.fixed_points.size()) +
                             "), got " + std::to_string(family.classes.size()));
    const auto md = morse_data(s, xi);
    for (std::size_t q = 0; q < family.classes.size(); ++q) {
        const auto& tau = family.classes[q];
        const auto& name = s.fixed_points[q].name;
        if (tau.values.size() != s.fixed_points.size()) throw MissingClasses("class at " + name + " is incomplete");
        if (tau.degree != md.points[q].index)
            throw HypothesisViolation("class at " + name + " has degree " + std::to_string(2 * tau.degree) +
                                      ", expected " + std::to_string(2 * md.points[q].index));
        if (tau.values[q] != md.points[q].negative_part)
            throw HypothesisViolation("class at " + name + " does not restrict to Lambda^- there");
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p)
            if (p != q && md.points[p].index <= md.points[q].index && !tau.values[p].is_zero())
                throw HypothesisViolation("class at " + name + " does not vanish at " + s.fixed_points[p].name);
    }
}

CanonicalSumResult check_canonical_sums(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi) {
    if (s.rank != 1) throw HypothesisViolation("the canonical-class criterion is stated for circle actions");
    verify_canonical_family(s, family, xi);
    CanonicalSumResult out;
    for (const auto& tau : family.classes) {
        out.coefficients.push_back(localization_sum(s, StratumRef::whole(), f, &tau));
        if (!out.coefficients.back().is_polynomial()) out.passed = false;
    }
    return out;
}

bool check_refined(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi) {
    if (s.rank != 1) throw HypothesisViolation("the canonical-class criterion is stated for circle actions");
    verify_canonical_family(s, family, xi);
    const auto md = morse_data(s, xi);
    for (std::size_t q = 0; q < family.classes.size(); ++q) {
        if (md.points[q].index >= s.half_dim - f.degree) continue;
        if (!localization_sum(s, StratumRef::whole(), f, &family.classes[q]).is_zero()) return false;
    }
    return true;
}

int torsion_exponent(const TSpace& s, const Assignment& f, const CanonicalFamily& family, const Xi& xi, int cap) {
    const auto sums = check_canonical_sums(s, f, family, xi);
    int n = 0;
    for (const auto& coef : sums.coefficients) n = std::max(n, coef.denominator_degree());
    if (n > cap) throw CapExceeded("torsion exponent " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    // x^N f must pass; the recheck goes through the full criterion
    const Polynomial xn = Polynomial::variable(1, 0).pow(n);
    Assignment shifted{f.degree + n, {}};
    for (const auto& v : f.values) shifted.values.push_back(v * xn);
    if (!check_canonical_sums(s, shifted, family, xi).passed) throw Error("torsion recheck failed");
    return n;
}

// ---------------------------------------------------------------------------

EtaLibrary EtaLibrary::parse(const std::string& spec) {
    EtaLibrary lib{false, false, false, false, false};
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "one") lib.one = true;
        else if (item == "self") lib.self = true;
        else if (item == "chern") lib.chern = true;
        else if (item == "thom") lib.thom = true;
        else if (item == "delta") lib.delta = true;
        else if (item == "all") lib = EtaLibrary{};
        else if (item == "none" || item.empty()) continue;
        else throw ParseError("unknown eta class family \"" + item + "\" (one, self, chern, thom, delta, all, none)");
    }
    return lib;
}

std::string EtaLibrary::to_string() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ',';
        out += name;
    };
    add(one, "one");
    add(self, "self");
    add(chern, "chern");
    add(thom, "thom");
    add(delta, "delta");
    return out.empty() ? "none" : out;
}

std::vector<EtaClass> eta_classes(const TSpace& s, const Assignment& f, const EtaLibrary& library) {
    std::vector<EtaClass> out;
    if (library.one) out.push_back({"1", constant_assignment(s, Rational(1))});
    if (library.self) out.push_back({"f", f});
    if (library.chern)
        for (int m = 1; m <= s.half_dim; ++m) out.push_back({"c" + std::to_string(m), chern_assignment(s, m)});
    if (library.thom) {
        for (auto ref : s.all_strata()) {
            if (ref.kind == StratumRef::Kind::Whole || s.stratum_half_dim(ref) == s.half_dim) continue;
            out.push_back({"thom(" + s.stratum_name(ref) + ")", thom_assignment(s, ref)});
        }
    }
    if (library.delta && is_gkm(s))
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p)
            out.push_back({"delta(" + s.fixed_points[p].name + ")", delta_class(s, p)});
    return out;
}

std::vector<NecessaryCheck> necessary_checks(const TSpace& s, const Assignment& f, const EtaLibrary& library) {
    const auto etas = eta_classes(s, f, library);
    std::vector<NecessaryCheck> out;
    for (auto ref : s.all_strata())
        for (const auto& eta : etas) {
            LinFraction sum = localization_sum(s, ref, f, &eta.value);
            const bool poly = sum.is_polynomial();
            out.push_back({s.stratum_name(ref), eta.name, std::move(sum), poly});
        }
    return out;
}

std::string to_string(Criterion c) {
    switch (c) {
    case Criterion::LowDimIntegrality: return "integrality";
    case Criterion::Moments: return "moments";
    case Criterion::None: return "none";
    }
    return {};
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Cohomological: return "Cohomological";
    case Verdict::NotCohomological: return "NotCohomological";
    case Verdict::Undecidable: return "Undecidable";
    }
    return {};
}

CohomologyVerdict decide_cohomological(const TSpace& s, const Assignment& f, const DecideOptions& options) {
    if (auto failures = find_violations(s, f); !failures.empty()) throw CongruenceViolation(std::move(failures));
    const Xi xi = options.xi ? *options.xi : effective_xi(s);
    CohomologyVerdict out;

    for (std::size_t ci = 0; ci < s.one_skeleton.size(); ++ci) {
        const auto& c = s.one_skeleton[ci];
        ComponentVerdict cv;
        cv.component = c.name;
        if (c.half_dim <= 2) {
            cv.criterion = Criterion::LowDimIntegrality;
            auto report = check_low_dim_integrality(s, ci, f);
            cv.passed = report.polynomial;
            if (!cv.passed) cv.certificate = report.sum;
        } else if (has_minimal_fixed_points(s, ci, xi)) {
            cv.criterion = Criterion::Moments;
            auto moments = check_condition_moments(s, ci, f, xi);
            cv.passed = moments.passed;
            cv.failed_moment = moments.failed_moment;
            cv.certificate = moments.sum;
        } else {
            out.undecided.push_back(c.name);
        }
        out.components.push_back(std::move(cv));
    }
    out.necessary = necessary_checks(s, f, options.library);

    for (const auto& cv : out.components) {
        if (cv.criterion == Criterion::None || cv.passed) continue;
        out.verdict = Verdict::NotCohomological;
        std::string condition = cv.criterion == Criterion::LowDimIntegrality
                                    ? "sum f/e_X is not a polynomial"
                                    : "moment i=" + std::to_string(cv.failed_moment) + " of f against c1^X is nonzero";
        out.witness = Witness{cv.component, condition, *cv.certificate};
        return out;
    }
    for (const auto& nc : out.necessary) {
        if (nc.polynomial) continue;
        out.verdict = Verdict::NotCohomological;
        out.witness = Witness{nc.stratum, "sum f*eta/e_Y is not a polynomial for eta = " + nc.eta, nc.sum};
        return out;
    }
    out.verdict = out.undecided.empty() ? Verdict::Cohomological : Verdict::Undecidable;
    return out;
}

long defect_dimension(const TSpace& s, int k, const Xi& xi) {
    const Integer a(static_cast<unsigned long>(assignment_dimension(s, k)));
    const Integer h = equivariant_dim(s, xi, k);
    const Integer d = a - h;
    if (d < 0)
        throw NegativeDefect("dim A^" + std::to_string(2 * k) + " = " + a.get_str() + " is smaller than dim H_T^" +
                             std::to_string(2 * k) + " = " + h.get_str() + "; the input cannot come from a formal space");
    return d.get_si();
}

IntegralFormula integral_formula_check(const TSpace& s, StratumRef z, const Assignment& f) {
    if (!find_violations(s, f).empty())
        throw HypothesisViolation("the restriction of f to " + s.stratum_name(z) + " is not well defined");
    const auto pts = s.stratum_points(z);
    const Subtorus stab = s.stratum_stabilizer(z);
    const int ell = s.half_dim - s.stratum_half_dim(z);
    const Assignment top = chern_assignment(s, s.half_dim);
    const Assignment c_ell = chern_assignment(s, ell);

    const LinFraction integral = localization_sum(s, z, f, &top);
    if (!integral.is_polynomial()) throw Error("c_n f localized over " + s.stratum_name(z) + " is not a polynomial");

    IntegralFormula out;
    out.lhs = stab.reduce(integral.numerator());
    std::optional<Polynomial> value;
    for (auto p : pts) {
        Polynomial v = stab.reduce(c_ell.values[p] * f.values[p]);
        if (value && *value != v)
            throw HypothesisViolation("(c_l f) does not restrict consistently to " + s.stratum_name(z));
        value = std::move(v);
    }
    out.rhs = value->scaled(Rational(static_cast<long>(pts.size())));
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace tassign
