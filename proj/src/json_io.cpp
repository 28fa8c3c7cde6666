#include "tassign/json_io.hpp"

#include "tassign/errors.hpp"

#include <fstream>

namespace tassign::io {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

ordered_json assignment_to_json(const TSpace& s, const Assignment& a) {
    ordered_json values = ordered_json::object();
    for (std::size_t i = 0; i < s.fixed_points.size(); ++i) values[s.fixed_points[i].name] = a.values[i].to_string();
    ordered_json out;
    out["degree"] = a.cohomological_degree();
    out["values"] = std::move(values);
    return out;
}

Assignment assignment_from_json(const TSpace& s, const nlohmann::json& doc) {
    if (!doc.is_object()) throw SchemaError("assignment document must be a JSON object");
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw SchemaError("assignment: \"degree\" must be an integer");
    const auto degree = doc["degree"].get<long>();
    if (degree < 0 || degree % 2 != 0) throw SchemaError("assignment: degree must be even and non-negative");
    if (!doc.contains("values") || !doc["values"].is_object())
        throw SchemaError("assignment: \"values\" must map fixed-point names to polynomials");
    const int k = static_cast<int>(degree / 2);
    std::map<std::string, Polynomial> values;
    for (const auto& [name, v] : doc["values"].items()) {
        if (!v.is_string()) throw SchemaError("assignment.values." + name + ": expected a polynomial string");
        if (!s.find_point(name)) throw ValidationError("assignment names unknown fixed point \"" + name + "\"");
        values.emplace(name, parse_polynomial(v.get<std::string>(), s.rank, k));
    }
    return make_assignment(s, k, values);
}

Assignment load_assignment_file(const TSpace& s, const std::string& path) {
    return assignment_from_json(s, read_json_file(path));
}

ordered_json fraction_to_json(const LinFraction& f) {
    ordered_json out;
    out["text"] = f.to_string();
    out["numerator"] = f.numerator().to_string();
    ordered_json den = ordered_json::array();
    for (const auto& d : f.denominator()) {
        ordered_json e;
        e["form"] = d.form.to_string();
        e["coefficients"] = d.form.coefficients();
        e["multiplicity"] = d.multiplicity;
        den.push_back(std::move(e));
    }
    out["denominator"] = std::move(den);
    out["polynomial"] = f.is_polynomial();
    return out;
}

ordered_json verdict_to_json(const CohomologyVerdict& v) {
    ordered_json out;
    out["verdict"] = to_string(v.verdict);
    ordered_json comps = ordered_json::array();
    for (const auto& c : v.components) {
        ordered_json e;
        e["component"] = c.component;
        e["criterion"] = to_string(c.criterion);
        if (c.criterion == Criterion::None) {
            e["status"] = "undecided";
        } else {
            e["status"] = c.passed ? "pass" : "fail";
        }
        if (c.failed_moment >= 0) e["failed_moment"] = c.failed_moment;
        if (c.certificate) e["certificate"] = fraction_to_json(*c.certificate);
        comps.push_back(std::move(e));
    }
    out["components"] = std::move(comps);
    ordered_json nec = ordered_json::array();
    for (const auto& n : v.necessary) {
        ordered_json e;
        e["stratum"] = n.stratum;
        e["eta"] = n.eta;
        e["sum"] = n.sum.to_string();
        e["polynomial"] = n.polynomial;
        nec.push_back(std::move(e));
    }
    out["necessary"] = std::move(nec);
    if (v.witness) {
        ordered_json w;
        w["stratum"] = v.witness->stratum;
        w["condition"] = v.witness->condition;
        w["certificate"] = fraction_to_json(v.witness->certificate);
        out["witness"] = std::move(w);
    }
    out["undecided"] = v.undecided;
    return out;
}

ordered_json space_summary_json(const TSpace& s, const Xi& xi) {
    ordered_json out;
    out["rank"] = s.rank;
    out["half_dim"] = s.half_dim;
    out["gkm"] = is_gkm(s);
    ordered_json xij = ordered_json::array();
    for (const auto& c : xi) xij.push_back(c.get_si());
    out["xi"] = std::move(xij);
    const auto betti = betti_and_dims(s, xi, s.half_dim);
    out["betti"] = betti.betti;
    const auto md = morse_data(s, xi);
    ordered_json pts = ordered_json::array();
    for (std::size_t i = 0; i < s.fixed_points.size(); ++i) {
        ordered_json e;
        e["name"] = s.fixed_points[i].name;
        e["index"] = md.points[i].index;
        e["negative_weights"] = md.points[i].negative_part.to_string();
        e["euler"] = md.points[i].euler.to_string();
        pts.push_back(std::move(e));
    }
    out["morse"] = std::move(pts);
    ordered_json comps = ordered_json::array();
    for (const auto& c : s.one_skeleton) {
        ordered_json e;
        e["name"] = c.name;
        e["direction"] = c.direction.to_string();
        e["half_dim"] = c.half_dim;
        e["fixed_points"] = c.points.size();
        comps.push_back(std::move(e));
    }
    out["one_skeleton"] = std::move(comps);
    return out;
}

} // namespace tassign::io
