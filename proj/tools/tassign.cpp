// Command-line front end: validate spaces, list assignment bases, decide
// cohomologicality, print canonical classes, localization sums, defect
// tables and pullbacks.

#include "tassign/assignment.hpp"
#include "tassign/errors.hpp"
#include "tassign/functorial.hpp"
#include "tassign/json_io.hpp"
#include "tassign/localize.hpp"
#include "tassign/space.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tassign;

namespace {

struct RunConfig {
    std::string space_path;
    std::string second_path;  ///< assignment or map
    int degree = 0;
    std::string xi;
    bool json = false;
    std::string eta_library = "all";
    int cap = -1;
};

// Exit codes of `check`; every other command exits 0 on success and
// kInputError on bad input.
constexpr int kCohomological = 0;
constexpr int kNotCohomological = 1;
constexpr int kUndecidable = 2;
constexpr int kInputError = 2;
constexpr int kCheckInputError = 3;

Xi parse_xi(const std::string& text, const TSpace& s) {
    Xi xi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            xi.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw ParseError("--xi: \"" + item + "\" is not an integer");
        }
    }
    if (xi.size() != s.rank) throw ParseError("--xi needs " + std::to_string(s.rank) + " comma-separated integers");
    for (const auto& p : s.fixed_points)
        for (const auto& w : p.weights)
            if (w.pair(xi) == 0) throw NonGenericXi("--xi pairs to zero with " + w.to_string() + " at " + p.name);
    return xi;
}

Xi resolve_xi(const RunConfig& cfg, const TSpace& s) { return cfg.xi.empty() ? effective_xi(s) : parse_xi(cfg.xi, s); }

std::string xi_string(const Xi& xi) {
    std::string out = "(";
    for (std::size_t i = 0; i < xi.size(); ++i) out += (i ? ", " : "") + xi[i].get_str();
    return out + ")";
}

std::string point_list(const TSpace& s, const std::vector<std::size_t>& pts) {
    std::string out;
    for (auto p : pts) out += (out.empty() ? "" : " ") + s.fixed_points[p].name;
    return out;
}

void print_assignment(const TSpace& s, const Assignment& a, const std::string& indent = "  ") {
    for (std::size_t i = 0; i < s.fixed_points.size(); ++i)
        std::cout << indent << s.fixed_points[i].name << ": " << a.values[i].to_string() << '\n';
}

std::size_t weights_span(const TSpace& s) {
    std::vector<LinForm> all;
    for (const auto& p : s.fixed_points) all.insert(all.end(), p.weights.begin(), p.weights.end());
    return Subtorus(s.rank, all).codim();
}

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    const Xi xi = resolve_xi(cfg, s);
    if (cfg.json) {
        auto out = io::space_summary_json(s, xi);
        out["effective"] = weights_span(s) == s.rank;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    const auto md = morse_data(s, xi);
    const auto betti = betti_and_dims(s, xi, s.half_dim);
    std::cout << "rank: " << s.rank << "  half_dim: " << s.half_dim << "  fixed points: " << s.fixed_points.size()
              << '\n';
    std::cout << "GKM: " << (is_gkm(s) ? "yes" : "no") << '\n';
    const auto span = weights_span(s);
    std::cout << "effective: " << (span == s.rank ? "yes" : "no");
    if (span != s.rank) std::cout << " (weights span " << span << " of " << s.rank << " dimensions)";
    std::cout << '\n';
    std::cout << "xi: " << xi_string(xi) << '\n';
    std::cout << "betti:";
    for (std::size_t k = 0; k < betti.betti.size(); ++k) std::cout << " b" << 2 * k << "=" << betti.betti[k];
    std::cout << "\n\n";
    std::cout << std::left << std::setw(8) << "point" << std::setw(7) << "index" << std::setw(20) << "Lambda^-"
              << "e_M" << '\n';
    for (std::size_t i = 0; i < s.fixed_points.size(); ++i)
        std::cout << std::setw(8) << s.fixed_points[i].name << std::setw(7) << md.points[i].index << std::setw(20)
                  << md.points[i].negative_part.to_string() << md.points[i].euler.to_string() << '\n';
    std::cout << "\none-skeleton:\n";
    for (const auto& c : s.one_skeleton)
        std::cout << "  " << c.name << "  direction " << c.direction.to_string() << "  half_dim " << c.half_dim
                  << "  points " << point_list(s, c.points) << '\n';
    if (!s.higher_strata.empty()) {
        std::cout << "higher strata:\n";
        for (const auto& h : s.higher_strata)
            std::cout << "  " << h.name << "  codim " << h.stabilizer.codim() << "  points " << point_list(s, h.points)
                      << '\n';
    }
    return 0;
}

int cmd_basis(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    if (cfg.degree < 0) throw ParseError("--degree must be non-negative");
    const auto basis = assignment_basis(s, cfg.degree);
    if (cfg.json) {
        io::ordered_json out;
        out["degree"] = 2 * cfg.degree;
        out["dimension"] = basis.size();
        io::ordered_json items = io::ordered_json::array();
        for (const auto& a : basis) items.push_back(io::assignment_to_json(s, a));
        out["basis"] = std::move(items);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "dim A^" << 2 * cfg.degree << " = " << basis.size() << '\n';
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::cout << "[" << i << "]\n";
        print_assignment(s, basis[i]);
    }
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    const Assignment f = io::load_assignment_file(s, cfg.second_path);
    DecideOptions opts;
    opts.xi = resolve_xi(cfg, s);
    opts.library = EtaLibrary::parse(cfg.eta_library);
    const auto verdict = decide_cohomological(s, f, opts);

    // circle actions with closed-form canonical classes: report the torsion exponent
    std::optional<int> torsion;
    if (s.rank == 1) {
        try {
            const auto family = closed_form_family(s, *opts.xi);
            torsion = torsion_exponent(s, f, family, *opts.xi, cfg.cap < 0 ? s.half_dim : cfg.cap);
        } catch (const HypothesisViolation&) {
        }
    }

    if (cfg.json) {
        auto out = io::verdict_to_json(verdict);
        if (torsion) out["torsion_exponent"] = *torsion;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "verdict: " << to_string(verdict.verdict) << '\n';
        for (const auto& c : verdict.components) {
            std::cout << "  " << c.component << ": ";
            if (c.criterion == Criterion::None) {
                std::cout << "undecided (neither dim <= 4 nor d + 1 fixed points)\n";
                continue;
            }
            std::cout << to_string(c.criterion) << ' ' << (c.passed ? "pass" : "fail");
            if (c.certificate) std::cout << "  [" << c.certificate->to_string() << "]";
            std::cout << '\n';
        }
        std::size_t failures = 0;
        for (const auto& n : verdict.necessary)
            if (!n.polynomial) ++failures;
        std::cout << "necessary conditions: " << verdict.necessary.size() - failures << "/" << verdict.necessary.size()
                  << " integral\n";
        if (verdict.witness)
            std::cout << "witness: " << verdict.witness->stratum << ": " << verdict.witness->condition << "  ["
                      << verdict.witness->certificate.to_string() << "]\n";
        if (torsion) std::cout << "torsion exponent: " << *torsion << '\n';
    }
    switch (verdict.verdict) {
    case Verdict::Cohomological: return kCohomological;
    case Verdict::NotCohomological: return kNotCohomological;
    case Verdict::Undecidable: return kUndecidable;
    }
    return kUndecidable;
}

int cmd_canonical(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    const Xi xi = resolve_xi(cfg, s);
    io::ordered_json out = io::ordered_json::array();
    for (std::size_t ci = 0; ci < s.one_skeleton.size(); ++ci) {
        const auto& c = s.one_skeleton[ci];
        const auto chern = component_chern_class(s, ci, xi);
        const bool closed_form = has_minimal_fixed_points(s, ci, xi);
        io::ordered_json comp;
        comp["component"] = c.name;
        comp["c1"] = io::ordered_json::object();
        for (std::size_t j = 0; j < c.points.size(); ++j)
            comp["c1"][s.fixed_points[c.points[j]].name] = chern.values[j].to_string();
        comp["ordering_ok"] = chern.ordering_ok;
        comp["closed_form"] = closed_form;
        io::ordered_json classes = io::ordered_json::array();
        if (closed_form) {
            for (int k = 0; k <= c.half_dim; ++k) {
                if (cfg.degree > 0 && k != cfg.degree) continue;
                const auto tau = closed_form_canonical(s, ci, k, xi);
                io::ordered_json e;
                e["k"] = k;
                e["point"] = s.fixed_points[tau.point].name;
                e["C"] = rational_to_string(tau.normalizer);
                e["restrictions"] = io::ordered_json::object();
                for (std::size_t j = 0; j < c.points.size(); ++j)
                    e["restrictions"][s.fixed_points[c.points[j]].name] = tau.restrictions[j].to_string();
                classes.push_back(std::move(e));
            }
        }
        comp["classes"] = std::move(classes);
        out.push_back(std::move(comp));
    }
    if (cfg.json) {
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (const auto& comp : out) {
        std::cout << "component " << comp["component"].get<std::string>() << '\n';
        std::cout << "  c1:";
        for (const auto& [name, v] : comp["c1"].items()) std::cout << "  " << name << "=" << v.get<std::string>();
        std::cout << "\n  ordering: " << (comp["ordering_ok"].get<bool>() ? "ok" : "violated") << '\n';
        if (!comp["closed_form"].get<bool>()) {
            std::cout << "  no closed-form canonical classes (needs d + 1 fixed points)\n";
            continue;
        }
        for (const auto& e : comp["classes"]) {
            std::cout << "  tau_" << e["k"].get<int>() << " at " << e["point"].get<std::string>()
                      << "  C=" << e["C"].get<std::string>() << '\n';
            for (const auto& [name, v] : e["restrictions"].items())
                std::cout << "    " << name << ": " << v.get<std::string>() << '\n';
        }
    }
    return 0;
}

int cmd_localize(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    const Assignment f = io::load_assignment_file(s, cfg.second_path);
    const auto checks = necessary_checks(s, f, EtaLibrary::parse(cfg.eta_library));
    if (cfg.json) {
        io::ordered_json out = io::ordered_json::array();
        for (const auto& c : checks) {
            io::ordered_json e;
            e["stratum"] = c.stratum;
            e["eta"] = c.eta;
            e["sum"] = io::fraction_to_json(c.sum);
            out.push_back(std::move(e));
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (const auto& c : checks)
        std::cout << std::left << std::setw(10) << c.stratum << std::setw(14) << c.eta << c.sum.to_string()
                  << (c.polynomial ? "" : "   (not polynomial)") << '\n';
    return 0;
}

int cmd_defect(const RunConfig& cfg) {
    const TSpace s = load_space_file(cfg.space_path);
    const Xi xi = resolve_xi(cfg, s);
    if (cfg.degree < 0) throw ParseError("--degree must be non-negative");
    io::ordered_json rows = io::ordered_json::array();
    for (int k = 0; k <= cfg.degree; ++k) {
        const auto a = assignment_dimension(s, k);
        const auto h = equivariant_dim(s, xi, k);
        const long d = defect_dimension(s, k, xi);
        io::ordered_json r;
        r["degree"] = 2 * k;
        r["assignments"] = a;
        r["cohomology"] = h.get_si();
        r["defect"] = d;
        rows.push_back(std::move(r));
    }
    if (cfg.json) {
        std::cout << rows.dump(2) << '\n';
        return 0;
    }
    std::cout << std::left << std::setw(8) << "degree" << std::setw(8) << "dim A" << std::setw(8) << "dim H"
              << "defect" << '\n';
    for (const auto& r : rows)
        std::cout << std::setw(8) << r["degree"].get<int>() << std::setw(8) << r["assignments"].get<long>()
                  << std::setw(8) << r["cohomology"].get<long>() << r["defect"].get<long>() << '\n';
    return 0;
}

int cmd_pullback(const RunConfig& cfg) {
    const auto map = load_map_file(cfg.space_path);
    const Assignment a = io::load_assignment_file(*map.target, cfg.second_path);
    const Assignment pulled = pullback(map, a);
    if (cfg.json) {
        std::cout << io::assignment_to_json(*map.source, pulled).dump(2) << '\n';
        return 0;
    }
    std::cout << "pullback (degree " << pulled.cohomological_degree() << "):\n";
    print_assignment(*map.source, pulled);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial assignments of torus actions: bases, localization and cohomologicality checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_xi) {
        sub->add_flag("--json", cfg.json, "Emit JSON instead of a table");
        if (with_xi) sub->add_option("--xi", cfg.xi, "Generic element of t as comma-separated integers");
    };

    auto* validate = app.add_subcommand("validate", "Validate a space; print GKM verdict, Betti numbers and Morse data");
    validate->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    common(validate, true);

    auto* basis = app.add_subcommand("basis", "Echelon basis of the degree-2K assignments");
    basis->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    basis->add_option("--degree", cfg.degree, "Polynomial degree K (cohomological degree 2K)")->required();
    common(basis, false);

    auto* check = app.add_subcommand("check", "Decide whether an assignment is cohomological (exit 0/1/2)");
    check->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    check->add_option("assignment", cfg.second_path)->required()->check(CLI::ExistingFile);
    check->add_option("--eta-library", cfg.eta_library, "Classes used in necessary checks: one,self,chern,thom,delta");
    check->add_option("--cap", cfg.cap, "Largest torsion exponent searched (default n)");
    common(check, true);

    auto* canonical = app.add_subcommand("canonical", "First Chern class and closed-form canonical classes");
    canonical->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    canonical->add_option("--degree", cfg.degree, "Only print tau_K");
    common(canonical, true);

    auto* localize = app.add_subcommand("localize", "Localization sums of f*eta over every stratum closure");
    localize->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    localize->add_option("assignment", cfg.second_path)->required()->check(CLI::ExistingFile);
    localize->add_option("--eta-library", cfg.eta_library, "Classes used as eta: one,self,chern,thom,delta");
    common(localize, false);

    auto* defect = app.add_subcommand("defect", "Dimensions of assignments, cohomology and defect up to degree 2K");
    defect->add_option("space", cfg.space_path)->required()->check(CLI::ExistingFile);
    defect->add_option("--degree", cfg.degree, "Largest K")->required();
    common(defect, true);

    auto* pull = app.add_subcommand("pullback", "Pull an assignment back along a map of spaces");
    pull->add_option("map", cfg.space_path)->required()->check(CLI::ExistingFile);
    pull->add_option("assignment", cfg.second_path)->required()->check(CLI::ExistingFile);
    common(pull, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    const bool is_check = check->parsed();
    try {
        if (validate->parsed()) return cmd_validate(cfg);
        if (basis->parsed()) return cmd_basis(cfg);
        if (check->parsed()) return cmd_check(cfg);
        if (canonical->parsed()) return cmd_canonical(cfg);
        if (localize->parsed()) return cmd_localize(cfg);
        if (defect->parsed()) return cmd_defect(cfg);
        if (pull->parsed()) return cmd_pullback(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_check ? kCheckInputError : kInputError;
    }
    return kInputError;
}
