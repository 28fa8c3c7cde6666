#include "tassign/assignment.hpp"

#include "tassign/linalg.hpp"

#include <algorithm>
#include <set>

namespace tassign {

bool Assignment::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool Assignment::operator==(const Assignment& other) const {
    return degree == other.degree && values == other.values;
}

namespace {

std::string describe(const std::vector<CongruenceFailure>& failures) {
    std::string out = "congruence violated";
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) {
        const auto& f = failures[i];
        out += (i ? "; " : ": ") + f.stratum + " (" + f.p + ", " + f.q + "), residue " + f.residue.to_string();
    }
    if (failures.size() > 3) out += "; ... (" + std::to_string(failures.size()) + " total)";
    return out;
}

// Strata carrying congruences: the one-skeleton and the higher strata.
std::vector<StratumRef> congruence_strata(const TSpace& s) {
    std::vector<StratumRef> out;
    for (std::size_t i = 0; i < s.one_skeleton.size(); ++i) out.push_back(StratumRef::component(i));
    for (std::size_t i = 0; i < s.higher_strata.size(); ++i) out.push_back(StratumRef::higher(i));
    return out;
}

} // namespace

CongruenceViolation::CongruenceViolation(std::vector<CongruenceFailure> failures)
    : Error(describe(failures)), failures_(std::move(failures)) {}

std::vector<CongruenceFailure> find_violations(const TSpace& s, const Assignment& a) {
    std::vector<CongruenceFailure> out;
    for (auto ref : congruence_strata(s)) {
        const auto pts = s.stratum_points(ref);
        if (pts.size() < 2) continue;
        const Subtorus stab = s.stratum_stabilizer(ref);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            Polynomial residue = stab.reduce(a.values[pts.front()] - a.values[pts[i]]);
            if (!residue.is_zero())
                out.push_back({s.stratum_name(ref), s.fixed_points[pts.front()].name, s.fixed_points[pts[i]].name,
                               std::move(residue)});
        }
    }
    return out;
}

Assignment make_assignment(const TSpace& s, int degree, std::vector<Polynomial> values) {
    if (degree < 0) throw DegreeMismatch("assignment degree must be non-negative");
    if (values.size() != s.fixed_points.size())
        throw ValidationError("assignment has " + std::to_string(values.size()) + " values for " +
                              std::to_string(s.fixed_points.size()) + " fixed points");
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto& v = values[i];
        if (v.rank() != s.rank) throw RankMismatch("value at " + s.fixed_points[i].name + " has the wrong rank");
        if (v.is_zero()) {
            v = Polynomial::zero(s.rank, degree);
        } else if (v.degree() != degree) {
            throw DegreeMismatch("value at " + s.fixed_points[i].name + " has degree " + std::to_string(v.degree()) +
                                 ", expected " + std::to_string(degree));
        }
    }
    Assignment a{degree, std::move(values)};
    if (auto failures = find_violations(s, a); !failures.empty()) throw CongruenceViolation(std::move(failures));
    return a;
}

Assignment make_assignment(const TSpace& s, int degree, const std::map<std::string, Polynomial>& values) {
    std::vector<Polynomial> ordered(s.fixed_points.size(), Polynomial::zero(s.rank, degree));
    std::vector<bool> seen(ordered.size(), false);
    for (const auto& [name, v] : values) {
        const auto i = s.point_index(name);
        ordered[i] = v;
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ValidationError("assignment has no value at " + s.fixed_points[i].name);
    return make_assignment(s, degree, std::move(ordered));
}

// ---------------------------------------------------------------------------

std::vector<Assignment> assignment_basis(const TSpace& s, int k) {
    if (k < 0) throw DegreeMismatch("degree must be non-negative");
    const auto monos = monomial_basis(s.rank, k);
    const std::size_t block = monos.size();
    const std::size_t cols = block * s.fixed_points.size();

    linalg::Matrix rows;
    for (auto ref : congruence_strata(s)) {
        const auto pts = s.stratum_points(ref);
        if (pts.size() < 2) continue;
        const Subtorus stab = s.stratum_stabilizer(ref);
        // reduced image of every basis monomial, keyed by reduced monomial
        std::map<Monomial, std::vector<std::pair<std::size_t, Rational>>, GradedLexGreater> image;
        for (std::size_t j = 0; j < block; ++j) {
            const auto reduced = stab.reduce(Polynomial::monomial(monos[j], Rational(1)));
            for (const auto& [m, c] : reduced.terms()) image[m].emplace_back(j, c);
        }
        for (std::size_t i = 1; i < pts.size(); ++i) {
            for (const auto& [m, entries] : image) {
                linalg::Row r(cols, Rational(0));
                for (const auto& [j, c] : entries) {
                    r[pts.front() * block + j] += c;
                    r[pts[i] * block + j] -= c;
                }
                rows.push_back(std::move(r));
            }
        }
    }

    std::vector<Assignment> basis;
    for (const auto& v : linalg::nullspace(rows, cols)) {
        Assignment a{k, {}};
        for (std::size_t p = 0; p < s.fixed_points.size(); ++p) {
            Polynomial val(s.rank, k);
            for (std::size_t j = 0; j < block; ++j) val.add_term(monos[j], v[p * block + j]);
            a.values.push_back(std::move(val));
        }
        basis.push_back(std::move(a));
    }
    return basis;
}

std::size_t assignment_dimension(const TSpace& s, int k) { return assignment_basis(s, k).size(); }

// ---------------------------------------------------------------------------

namespace {

void check_shape(const TSpace& s, const Assignment& a) {
    if (a.values.size() != s.fixed_points.size()) throw ValidationError("assignment does not belong to this space");
}

Assignment revalidated(const TSpace& s, Assignment a) {
    if (auto failures = find_violations(s, a); !failures.empty()) throw CongruenceViolation(std::move(failures));
    return a;
}

} // namespace

Assignment add(const TSpace& s, const Assignment& a, const Assignment& b) {
    check_shape(s, a);
    check_shape(s, b);
    if (a.degree != b.degree && !a.is_zero() && !b.is_zero())
        throw DegreeMismatch("cannot add assignments of degree " + std::to_string(2 * a.degree) + " and " +
                             std::to_string(2 * b.degree));
    const int degree = a.is_zero() ? b.degree : a.degree;
    Assignment out{degree, {}};
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        Polynomial v = a.values[i] + b.values[i];
        out.values.push_back(v.is_zero() ? Polynomial::zero(s.rank, degree) : std::move(v));
    }
    return revalidated(s, std::move(out));
}

Assignment multiply(const TSpace& s, const Assignment& a, const Assignment& b) {
    check_shape(s, a);
    check_shape(s, b);
    Assignment out{a.degree + b.degree, {}};
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    return revalidated(s, std::move(out));
}

Assignment scale(const TSpace& s, const Assignment& a, const Rational& c) {
    check_shape(s, a);
    Assignment out{a.degree, {}};
    for (const auto& v : a.values) out.values.push_back(v.scaled(c));
    return revalidated(s, std::move(out));
}

Assignment constant_assignment(const TSpace& s, const Rational& c) {
    return make_assignment(s, 0, std::vector<Polynomial>(s.fixed_points.size(), Polynomial::constant(s.rank, c)));
}

Assignment delta_class(const TSpace& s, std::size_t p) {
    const auto& weights = s.fixed_points.at(p).weights;
    std::set<LinForm> directions;
    for (const auto& w : weights) directions.insert(w.direction());
    Polynomial value = Polynomial::constant(s.rank, Rational(1));
    for (const auto& d : directions) value *= d.to_polynomial();
    const int k = static_cast<int>(directions.size());
    std::vector<Polynomial> values(s.fixed_points.size(), Polynomial::zero(s.rank, k));
    values[p] = std::move(value);
    return make_assignment(s, k, std::move(values));
}

Assignment chern_assignment(const TSpace& s, int m) {
    if (m < 0 || m > s.half_dim) throw DegreeMismatch("Chern index must lie in [0, n]");
    std::vector<Polynomial> values;
    for (const auto& p : s.fixed_points) {
        // e[j] = sigma_j of the weights processed so far
        std::vector<Polynomial> e{Polynomial::constant(s.rank, Rational(1))};
        for (const auto& w : p.weights) {
            const Polynomial wp = w.to_polynomial();
            e.push_back(Polynomial::zero(s.rank, static_cast<int>(e.size())));
            for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += wp * e[j - 1];
        }
        values.push_back(e[static_cast<std::size_t>(m)]);
    }
    return make_assignment(s, m, std::move(values));
}

Assignment thom_assignment(const TSpace& s, StratumRef x) {
    const int k = s.half_dim - s.stratum_half_dim(x);
    std::vector<Polynomial> values(s.fixed_points.size(), Polynomial::zero(s.rank, k));
    for (auto p : s.stratum_points(x)) {
        Polynomial v = Polynomial::constant(s.rank, Rational(1));
        for (const auto& w : s.normal_weights(x, p)) v *= w.to_polynomial();
        values[p] = std::move(v);
    }
    return make_assignment(s, k, std::move(values));
}

Assignment collinear_counterexample(const TSpace& s) {
    if (s.half_dim < 3) throw NotApplicable("collinear counterexample needs dimension 2n >= 6");
    std::optional<LinForm> dir;
    for (const auto& p : s.fixed_points)
        for (const auto& w : p.weights) {
            if (!dir) dir = w.direction();
            if (!w.proportional_to(*dir)) throw NotApplicable("weights are not collinear");
        }
    // e(p) = lambda_p * alpha^n
    std::vector<Integer> lambda;
    for (const auto& p : s.fixed_points) {
        Integer l = 1;
        for (const auto& w : p.weights) l *= Integer(static_cast<long>(*w.multiple_of(*dir)));
        lambda.push_back(l);
    }
    const Polynomial alpha = dir->to_polynomial();
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j) {
            if (lambda[i] + lambda[j] == 0) continue;
            std::vector<Polynomial> values(s.fixed_points.size(), Polynomial::zero(s.rank, 1));
            values[i] = alpha.scaled(Rational(lambda[i]));
            values[j] = alpha.scaled(Rational(-lambda[j]));
            return make_assignment(s, 1, std::move(values));
        }
    throw NotApplicable("no two fixed points with lambda_i + lambda_j != 0");
}

// ---------------------------------------------------------------------------

TSpace circle_reduction(const TSpace& s, const Xi& xi) {
    if (xi.size() != s.rank) throw RankMismatch("xi has wrong rank");
    TSpace out;
    out.rank = 1;
    out.half_dim = s.half_dim;
    out.formal = s.formal;
    out.xi = Xi{Integer(1)};
    for (const auto& p : s.fixed_points) {
        FixedPoint q{p.name, {}};
        for (const auto& w : p.weights) {
            const Integer v = w.pair(xi);
            if (v == 0) throw NonGenericXi("xi pairs to zero with weight " + w.to_string() + " at " + p.name);
            if (!v.fits_slong_p()) throw Error("circle weight overflows");
            q.weights.push_back(LinForm({v.get_si()}));
        }
        out.fixed_points.push_back(std::move(q));
    }
    if (s.half_dim > 0) {
        SkeletonComponent c{"S1", LinForm({1}), {}, s.half_dim};
        for (std::size_t i = 0; i < s.fixed_points.size(); ++i) c.points.push_back(i);
        out.one_skeleton.push_back(std::move(c));
    }
    validate_space(out);
    return out;
}

Assignment restrict_to_circle(const Assignment& a, const Xi& xi) {
    std::vector<Polynomial> images;
    for (const auto& c : xi) images.push_back(Polynomial::variable(1, 0).scaled(Rational(c)));
    Assignment out{a.degree, {}};
    for (const auto& v : a.values) {
        Polynomial r = v.substitute(images);
        out.values.push_back(r.is_zero() ? Polynomial::zero(1, a.degree) : std::move(r));
    }
    return out;
}

} // namespace tassign
