#include "tassign/space.hpp"

#include "tassign/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace tassign {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Lookup helpers

std::optional<std::size_t> TSpace::find_point(const std::string& name) const {
    for (std::size_t i = 0; i < fixed_points.size(); ++i)
        if (fixed_points[i].name == name) return i;
    return std::nullopt;
}

std::size_t TSpace::point_index(const std::string& name) const {
    auto i = find_point(name);
    if (!i) throw ValidationError("unknown fixed point \"" + name + "\"");
    return *i;
}

std::optional<StratumRef> TSpace::find_stratum(const std::string& name) const {
    if (name == "M") return StratumRef::whole();
    for (std::size_t i = 0; i < one_skeleton.size(); ++i)
        if (one_skeleton[i].name == name) return StratumRef::component(i);
    for (std::size_t i = 0; i < higher_strata.size(); ++i)
        if (higher_strata[i].name == name) return StratumRef::higher(i);
    return std::nullopt;
}

std::string TSpace::stratum_name(StratumRef s) const {
    switch (s.kind) {
    case StratumRef::Kind::Whole: return "M";
    case StratumRef::Kind::Component: return one_skeleton.at(s.index).name;
    case StratumRef::Kind::Higher: return higher_strata.at(s.index).name;
    }
    return {};
}

std::vector<std::size_t> TSpace::stratum_points(StratumRef s) const {
    switch (s.kind) {
    case StratumRef::Kind::Whole: {
        std::vector<std::size_t> all(fixed_points.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    case StratumRef::Kind::Component: return one_skeleton.at(s.index).points;
    case StratumRef::Kind::Higher: return higher_strata.at(s.index).points;
    }
    return {};
}

Subtorus TSpace::stratum_stabilizer(StratumRef s) const {
    switch (s.kind) {
    case StratumRef::Kind::Whole: {
        // generic stabilizer: the common kernel of every weight
        std::vector<LinForm> all;
        for (const auto& p : fixed_points) all.insert(all.end(), p.weights.begin(), p.weights.end());
        return Subtorus(rank, all);
    }
    case StratumRef::Kind::Component: return Subtorus::kernel(one_skeleton.at(s.index).direction);
    case StratumRef::Kind::Higher: return higher_strata.at(s.index).stabilizer;
    }
    return {};
}

std::vector<LinForm> TSpace::tangent_weights(StratumRef s, std::size_t p) const {
    const auto& w = fixed_points.at(p).weights;
    switch (s.kind) {
    case StratumRef::Kind::Whole: return w;
    case StratumRef::Kind::Component: {
        std::vector<LinForm> out;
        const auto& dir = one_skeleton.at(s.index).direction;
        for (const auto& a : w)
            if (a.proportional_to(dir)) out.push_back(a);
        return out;
    }
    case StratumRef::Kind::Higher: {
        std::vector<LinForm> out;
        const auto& stab = higher_strata.at(s.index).stabilizer;
        for (const auto& a : w)
            if (stab.annihilates(a)) out.push_back(a);
        return out;
    }
    }
    return {};
}

std::vector<LinForm> TSpace::normal_weights(StratumRef s, std::size_t p) const {
    const auto tangent = tangent_weights(s, p);
    std::vector<LinForm> out = fixed_points.at(p).weights;
    for (const auto& t : tangent) out.erase(std::find(out.begin(), out.end(), t));
    return out;
}

int TSpace::stratum_half_dim(StratumRef s) const {
    switch (s.kind) {
    case StratumRef::Kind::Whole: return half_dim;
    case StratumRef::Kind::Component: return one_skeleton.at(s.index).half_dim;
    case StratumRef::Kind::Higher: {
        const auto& pts = higher_strata.at(s.index).points;
        return pts.empty() ? 0 : static_cast<int>(tangent_weights(s, pts.front()).size());
    }
    }
    return 0;
}

std::vector<StratumRef> TSpace::all_strata() const {
    std::vector<StratumRef> out{StratumRef::whole()};
    for (std::size_t i = 0; i < one_skeleton.size(); ++i) out.push_back(StratumRef::component(i));
    for (std::size_t i = 0; i < higher_strata.size(); ++i) out.push_back(StratumRef::higher(i));
    return out;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where + ": expected a string");
    return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw SchemaError(where + ": expected an array");
    return v;
}

std::vector<std::int64_t> int_vector(const json& v, std::size_t rank, const std::string& where) {
    as_array(v, where);
    if (v.size() != rank)
        throw SchemaError(where + ": expected " + std::to_string(rank) + " entries, got " + std::to_string(v.size()));
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

LinForm nonzero_form(const json& v, std::size_t rank, const std::string& where) {
    auto coeffs = int_vector(v, rank, where);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; }))
        throw ValidationError(where + ": zero weight");
    return LinForm(std::move(coeffs));
}

std::vector<std::size_t> point_list(const json& v, const std::map<std::string, std::size_t>& index,
                                    const std::string& where) {
    as_array(v, where);
    std::vector<std::size_t> out;
    std::set<std::size_t> seen;
    for (const auto& e : v) {
        const auto name = as_string(e, where);
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError(where + ": unknown fixed point \"" + name + "\"");
        if (!seen.insert(it->second).second) throw ValidationError(where + ": fixed point \"" + name + "\" listed twice");
        out.push_back(it->second);
    }
    return out;
}

const std::set<std::string> kTopLevelKeys{"rank",        "half_dim",      "xi",     "fixed_points",
                                          "one_skeleton", "higher_strata", "formal", "name",
                                          "description"};

} // namespace

TSpace load_space(const json& doc) {
    if (!doc.is_object()) throw SchemaError("space document must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (!kTopLevelKeys.contains(key)) throw SchemaError("unknown key \"" + key + "\"");

    TSpace s;
    const auto rank = as_int(require(doc, "rank", "space"), "rank");
    if (rank < 1) throw SchemaError("rank must be at least 1");
    s.rank = static_cast<std::size_t>(rank);
    const auto n = as_int(require(doc, "half_dim", "space"), "half_dim");
    if (n < 0) throw SchemaError("half_dim must be non-negative");
    s.half_dim = static_cast<int>(n);

    const auto& formal = require(doc, "formal", "space");
    if (!formal.is_boolean()) throw SchemaError("formal: expected a boolean");
    s.formal = formal.get<bool>();
    if (!s.formal)
        throw ValidationError("formal: the space must be declared equivariantly formal; fixed-point values "
                              "only determine assignments under that assumption");

    const auto& fps = as_array(require(doc, "fixed_points", "space"), "fixed_points");
    if (fps.empty()) throw ValidationError("fixed_points: an equivariantly formal space has fixed points");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        const std::string where = "fixed_points[" + std::to_string(i) + "]";
        if (!fps[i].is_object()) throw SchemaError(where + ": expected an object");
        FixedPoint p;
        p.name = as_string(require(fps[i], "name", where), where + ".name");
        if (!index.emplace(p.name, i).second) throw ValidationError("duplicate fixed point name \"" + p.name + "\"");
        const auto& ws = as_array(require(fps[i], "weights", where), where + ".weights");
        for (std::size_t j = 0; j < ws.size(); ++j)
            p.weights.push_back(nonzero_form(ws[j], s.rank, p.name + ".weights[" + std::to_string(j) + "]"));
        s.fixed_points.push_back(std::move(p));
    }

    std::set<std::string> stratum_names{"M"};
    if (auto it = doc.find("one_skeleton"); it != doc.end()) {
        const auto& comps = as_array(*it, "one_skeleton");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::string where = "one_skeleton[" + std::to_string(i) + "]";
            if (!comps[i].is_object()) throw SchemaError(where + ": expected an object");
            SkeletonComponent c;
            c.name = as_string(require(comps[i], "name", where), where + ".name");
            if (!stratum_names.insert(c.name).second) throw ValidationError("duplicate stratum name \"" + c.name + "\"");
            c.direction = nonzero_form(require(comps[i], "direction", where), s.rank, c.name + ".direction").direction();
            c.points = point_list(require(comps[i], "fixed_points", where), index, c.name + ".fixed_points");
            const auto d = as_int(require(comps[i], "half_dim", where), c.name + ".half_dim");
            if (d < 0) throw SchemaError(c.name + ".half_dim must be non-negative");
            c.half_dim = static_cast<int>(d);
            s.one_skeleton.push_back(std::move(c));
        }
    } else {
        throw SchemaError("space: missing \"one_skeleton\"");
    }

    if (auto it = doc.find("higher_strata"); it != doc.end() && !it->is_null()) {
        const auto& hs = as_array(*it, "higher_strata");
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::string where = "higher_strata[" + std::to_string(i) + "]";
            if (!hs[i].is_object()) throw SchemaError(where + ": expected an object");
            HigherStratum h;
            h.name = as_string(require(hs[i], "name", where), where + ".name");
            if (!stratum_names.insert(h.name).second) throw ValidationError("duplicate stratum name \"" + h.name + "\"");
            const auto& ann = as_array(require(hs[i], "annihilator", where), h.name + ".annihilator");
            std::vector<LinForm> forms;
            for (std::size_t j = 0; j < ann.size(); ++j)
                forms.push_back(nonzero_form(ann[j], s.rank, h.name + ".annihilator[" + std::to_string(j) + "]"));
            h.stabilizer = Subtorus(s.rank, forms);
            if (h.stabilizer.codim() != forms.size())
                throw ValidationError(h.name + ": annihilator forms are linearly dependent");
            if (forms.size() < 2) throw ValidationError(h.name + ": higher strata need stabilizer codimension >= 2");
            h.points = point_list(require(hs[i], "fixed_points", where), index, h.name + ".fixed_points");
            s.higher_strata.push_back(std::move(h));
        }
    }

    if (auto it = doc.find("xi"); it != doc.end() && !it->is_null()) {
        Xi xi;
        for (auto c : int_vector(*it, s.rank, "xi")) xi.emplace_back(static_cast<long>(c));
        s.xi = std::move(xi);
    }

    validate_space(s);
    return s;
}

TSpace load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return load_space(doc);
}

void validate_space(const TSpace& s) {
    const auto n = static_cast<std::size_t>(s.half_dim);
    for (const auto& p : s.fixed_points) {
        if (p.weights.size() != n)
            throw ValidationError(p.name + " has " + std::to_string(p.weights.size()) + " weights but half_dim is " +
                                  std::to_string(n));
        for (const auto& w : p.weights)
            if (w.rank() != s.rank) throw ValidationError(p.name + " has a weight of the wrong rank");
    }

    for (const auto& c : s.one_skeleton) {
        if (c.half_dim >= 1 && c.points.size() < 2)
            throw ValidationError("component " + c.name + " has half_dim " + std::to_string(c.half_dim) +
                                  " but fewer than two fixed points");
        for (auto p : c.points) {
            const auto& fp = s.fixed_points[p];
            const auto count = std::count_if(fp.weights.begin(), fp.weights.end(),
                                             [&](const LinForm& w) { return w.proportional_to(c.direction); });
            if (count != c.half_dim)
                throw ValidationError(fp.name + " has " + std::to_string(count) + " weight" + (count == 1 ? "" : "s") +
                                      " ∝ " + c.direction.to_string() + " but component " + c.name + " declares d=" +
                                      std::to_string(c.half_dim));
        }
    }

    // every direction class at every point lies in exactly one component
    for (std::size_t p = 0; p < s.fixed_points.size(); ++p) {
        std::set<LinForm> classes;
        for (const auto& w : s.fixed_points[p].weights) classes.insert(w.direction());
        for (const auto& dir : classes) {
            int covering = 0;
            for (const auto& c : s.one_skeleton)
                if (c.direction == dir && std::find(c.points.begin(), c.points.end(), p) != c.points.end()) ++covering;
            if (covering != 1)
                throw ValidationError(s.fixed_points[p].name + ": weight direction " + dir.to_string() + " is covered by " +
                                      std::to_string(covering) + " one-skeleton components (expected exactly 1)");
        }
    }

    for (std::size_t h = 0; h < s.higher_strata.size(); ++h) {
        const auto& hs = s.higher_strata[h];
        if (hs.points.empty()) throw ValidationError(hs.name + ": a stratum closure contains fixed points");
        const auto d = s.tangent_weights(StratumRef::higher(h), hs.points.front()).size();
        for (auto p : hs.points)
            if (s.tangent_weights(StratumRef::higher(h), p).size() != d)
                throw ValidationError(hs.name + ": fixed points disagree on the number of tangent weights");
    }

    if (s.xi) {
        for (const auto& p : s.fixed_points)
            for (const auto& w : p.weights)
                if (w.pair(*s.xi) == 0)
                    throw ValidationError("xi is not generic: it pairs to zero with weight " + w.to_string() + " at " +
                                          p.name);
    }
}

// ---------------------------------------------------------------------------

bool is_gkm(const TSpace& s) {
    bool pairwise = true;
    for (const auto& p : s.fixed_points)
        for (std::size_t i = 0; i < p.weights.size() && pairwise; ++i)
            for (std::size_t j = i + 1; j < p.weights.size(); ++j)
                if (p.weights[i].proportional_to(p.weights[j])) {
                    pairwise = false;
                    break;
                }
    int max_d = 0;
    for (const auto& c : s.one_skeleton) max_d = std::max(max_d, c.half_dim);
    const bool spheres = max_d <= 1;
    if (pairwise != spheres)
        throw ValidationError(std::string("GKM cross-check failed: weights are ") +
                              (pairwise ? "pairwise independent" : "not pairwise independent") +
                              " but the largest one-skeleton component has half_dim " + std::to_string(max_d));
    return pairwise;
}

Xi choose_generic_xi(const TSpace& s) {
    for (long t = 1;; ++t) {
        Xi xi(s.rank);
        Integer v = 1;
        for (std::size_t i = 0; i < s.rank; ++i) {
            xi[i] = v;
            v *= t;
        }
        bool generic = true;
        for (const auto& p : s.fixed_points)
            for (const auto& w : p.weights)
                if (w.pair(xi) == 0) generic = false;
        if (generic) return xi;
    }
}

Xi effective_xi(const TSpace& s) { return s.xi ? *s.xi : choose_generic_xi(s); }

PointMorse point_morse(std::span<const LinForm> weights, std::span<const Integer> xi) {
    const std::size_t rank = xi.size();
    PointMorse m{0, Polynomial::constant(rank, Rational(1)), Polynomial::constant(rank, Rational(1))};
    for (const auto& w : weights) {
        const Integer v = w.pair(xi);
        if (v == 0) throw NonGenericXi("xi pairs to zero with weight " + w.to_string());
        const Polynomial wp = w.to_polynomial();
        if (v < 0) {
            ++m.index;
            m.negative_part *= wp;
        }
        m.euler *= wp;
    }
    return m;
}

MorseData morse_data(const TSpace& s, const Xi& xi) {
    if (xi.size() != s.rank) throw RankMismatch("xi has wrong rank");
    MorseData out;
    out.xi = xi;
    for (const auto& p : s.fixed_points) out.points.push_back(point_morse(p.weights, xi));
    for (std::size_t c = 0; c < s.one_skeleton.size(); ++c) {
        std::vector<PointMorse> per;
        for (auto p : s.one_skeleton[c].points)
            per.push_back(point_morse(s.tangent_weights(StratumRef::component(c), p), xi));
        out.components.push_back(std::move(per));
    }
    return out;
}

Integer symmetric_power_dim(std::size_t rank, int k) {
    if (k < 0) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k) + rank - 1, rank - 1);
    return out;
}

BettiData betti_and_dims(const TSpace& s, const Xi& xi, int max_degree) {
    const auto md = morse_data(s, xi);
    BettiData out;
    out.betti.assign(static_cast<std::size_t>(s.half_dim) + 1, 0);
    for (const auto& p : md.points) ++out.betti[static_cast<std::size_t>(p.index)];
    for (int k = 0; k <= max_degree; ++k) {
        Integer dim = 0;
        for (int i = 0; i <= std::min(k, s.half_dim); ++i)
            dim += Integer(out.betti[static_cast<std::size_t>(i)]) * symmetric_power_dim(s.rank, k - i);
        out.equivariant_dims.push_back(dim);
    }
    return out;
}

Integer equivariant_dim(const TSpace& s, const Xi& xi, int k) {
    return betti_and_dims(s, xi, k).equivariant_dims.back();
}

} // namespace tassign
