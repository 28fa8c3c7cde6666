#include "tassign/functorial.hpp"

#include <filesystem>
#include <fstream>

namespace tassign {

namespace {

Subtorus target_stabilizer(const TSpace& t, const StratumTarget& target) {
    if (target.point) return Subtorus::whole(t.rank);
    return t.stratum_stabilizer(*target.stratum);
}

std::vector<std::size_t> target_points(const TSpace& t, const StratumTarget& target) {
    if (target.point) return {*target.point};
    return t.stratum_points(*target.stratum);
}

std::string target_name(const TSpace& t, const StratumTarget& target) {
    if (target.point) return t.fixed_points[*target.point].name;
    return t.stratum_name(*target.stratum);
}

StratumTarget resolve_target(const TSpace& t, const std::string& name) {
    if (auto s = t.find_stratum(name)) return {s, std::nullopt};
    if (auto p = t.find_point(name)) return {std::nullopt, p};
    throw InvalidMapData("unknown target stratum \"" + name + "\"");
}

} // namespace

void validate_map(const EquivariantMap& m) {
    if (!m.source || !m.target) throw InvalidMapData("map needs a source and a target space");
    const auto& src = *m.source;
    const auto& tgt = *m.target;
    if (src.rank != tgt.rank) throw InvalidMapData("source and target carry tori of different rank");
    if (m.phi.size() != src.fixed_points.size()) throw InvalidMapData("fixed-point map is not total");
    for (auto q : m.phi)
        if (q >= tgt.fixed_points.size()) throw InvalidMapData("fixed-point map leaves the target");

    for (const auto& e : m.strata) {
        const auto src_name = src.stratum_name(e.source);
        const auto tgt_name = target_name(tgt, e.target);
        if (!target_stabilizer(tgt, e.target).contains(src.stratum_stabilizer(e.source)))
            throw InvalidMapData("stratum " + src_name + " maps to " + tgt_name +
                                 " but its stabilizer is not contained in the target's");
        const auto allowed = target_points(tgt, e.target);
        for (auto p : src.stratum_points(e.source))
            if (std::find(allowed.begin(), allowed.end(), m.phi[p]) == allowed.end())
                throw InvalidMapData("fixed point " + src.fixed_points[p].name + " of " + src_name + " maps to " +
                                     tgt.fixed_points[m.phi[p]].name + ", outside " + tgt_name);
    }
}

EquivariantMap make_map(std::shared_ptr<const TSpace> source, std::shared_ptr<const TSpace> target,
                        const std::map<std::string, std::string>& phi,
                        const std::map<std::string, std::string>& strata) {
    EquivariantMap m{std::move(source), std::move(target), {}, {}};
    if (!m.source || !m.target) throw InvalidMapData("map needs a source and a target space");
    m.phi.assign(m.source->fixed_points.size(), 0);
    std::vector<bool> seen(m.phi.size(), false);
    for (const auto& [from, to] : phi) {
        auto p = m.source->find_point(from);
        if (!p) throw InvalidMapData("phi: unknown source fixed point \"" + from + "\"");
        auto q = m.target->find_point(to);
        if (!q) throw InvalidMapData("phi: unknown target fixed point \"" + to + "\"");
        m.phi[*p] = *q;
        seen[*p] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw InvalidMapData("phi: no image for " + m.source->fixed_points[i].name);
    for (const auto& [from, to] : strata) {
        auto s = m.source->find_stratum(from);
        if (!s) throw InvalidMapData("strata: unknown source stratum \"" + from + "\"");
        m.strata.push_back({*s, resolve_target(*m.target, to)});
    }
    validate_map(m);
    return m;
}

EquivariantMap load_map(const nlohmann::json& doc, const std::string& base_dir) {
    if (!doc.is_object()) throw SchemaError("map document must be a JSON object");
    for (const char* key : {"source", "target", "phi"})
        if (!doc.contains(key)) throw SchemaError(std::string("map: missing \"") + key + "\"");
    auto path = [&](const char* key) {
        if (!doc[key].is_string()) throw SchemaError(std::string("map.") + key + ": expected a path");
        std::filesystem::path p = doc[key].get<std::string>();
        return (p.is_absolute() ? p : std::filesystem::path(base_dir) / p).string();
    };
    auto names = [&](const char* key) {
        std::map<std::string, std::string> out;
        if (!doc.contains(key)) return out;
        if (!doc[key].is_object()) throw SchemaError(std::string("map.") + key + ": expected an object");
        for (const auto& [k, v] : doc[key].items()) {
            if (!v.is_string()) throw SchemaError(std::string("map.") + key + "." + k + ": expected a name");
            out[k] = v.get<std::string>();
        }
        return out;
    };
    auto source = std::make_shared<const TSpace>(load_space_file(path("source")));
    auto target = std::make_shared<const TSpace>(load_space_file(path("target")));
    return make_map(std::move(source), std::move(target), names("phi"), names("strata"));
}

EquivariantMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return load_map(doc, std::filesystem::path(path).parent_path().string());
}

Assignment pullback(const EquivariantMap& m, const Assignment& a) {
    if (a.values.size() != m.target->fixed_points.size())
        throw ValidationError("assignment does not belong to the target space");
    std::vector<Polynomial> values;
    for (auto q : m.phi) values.push_back(a.values[q]);
    try {
        return make_assignment(*m.source, a.degree, std::move(values));
    } catch (const CongruenceViolation& e) {
        throw InvalidMapData(std::string("pullback is not an assignment on the source: ") + e.what());
    }
}

EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f) {
    auto same_points = [](const TSpace& a, const TSpace& b) {
        if (a.fixed_points.size() != b.fixed_points.size()) return false;
        for (std::size_t i = 0; i < a.fixed_points.size(); ++i)
            if (a.fixed_points[i].name != b.fixed_points[i].name || a.fixed_points[i].weights != b.fixed_points[i].weights)
                return false;
        return true;
    };
    if (!f.target || !g.source || (f.target != g.source && !same_points(*f.target, *g.source)))
        throw InvalidMapData("maps are not composable");
    EquivariantMap out{f.source, g.target, {}, {}};
    for (auto q : f.phi) out.phi.push_back(g.phi[q]);
    // a stratum correspondence survives when its image is itself mapped by g
    for (const auto& e : f.strata) {
        if (e.target.point) {
            out.strata.push_back({e.source, StratumTarget{std::nullopt, g.phi[*e.target.point]}});
            continue;
        }
        for (const auto& e2 : g.strata)
            if (e2.source == *e.target.stratum) out.strata.push_back({e.source, e2.target});
    }
    validate_map(out);
    return out;
}

EquivariantMap identity_map(std::shared_ptr<const TSpace> space) {
    EquivariantMap m{space, space, {}, {}};
    for (std::size_t i = 0; i < space->fixed_points.size(); ++i) m.phi.push_back(i);
    for (auto ref : space->all_strata()) m.strata.push_back({ref, StratumTarget{ref, std::nullopt}});
    validate_map(m);
    return m;
}

} // namespace tassign
