#include "tassign/errors.hpp"
#include "tassign/functorial.hpp"
#include "tassign/json_io.hpp"
#include "tassign/localize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace tassign;

namespace {

// Documents cross the boundary as JSON text; the Python layer decodes them.
Assignment parse_assignment(const TSpace& s, const std::string& doc) {
    return io::assignment_from_json(s, nlohmann::json::parse(doc));
}

std::optional<Xi> to_xi(const std::optional<std::vector<long>>& xi) {
    if (!xi) return std::nullopt;
    return Xi(xi->begin(), xi->end());
}

Xi xi_or_default(const TSpace& s, const std::optional<std::vector<long>>& xi) {
    auto v = to_xi(xi);
    return v ? *v : effective_xi(s);
}

StratumRef stratum_by_name(const TSpace& s, const std::optional<std::string>& name) {
    if (!name || *name == "M") return StratumRef::whole();
    auto ref = s.find_stratum(*name);
    if (!ref) throw ValidationError("unknown stratum " + *name);
    return *ref;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Assignments on torus-action fixed-point data: localization sums and cohomologicality checks.";

    static py::exception<Error> error(m, "TassignError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::class_<TSpace, std::shared_ptr<TSpace>>(m, "Space")
        .def_static("from_file", [](const std::string& path) { return std::make_shared<TSpace>(load_space_file(path)); })
        .def_static("from_json",
                    [](const std::string& doc) { return std::make_shared<TSpace>(load_space(nlohmann::json::parse(doc))); })
        .def_readonly("rank", &TSpace::rank)
        .def_readonly("half_dim", &TSpace::half_dim)
        .def_property_readonly("fixed_points",
                               [](const TSpace& s) {
                                   std::vector<std::string> names;
                                   for (const auto& p : s.fixed_points) names.push_back(p.name);
                                   return names;
                               })
        .def("is_gkm", &is_gkm)
        .def("xi",
             [](const TSpace& s) {
                 std::vector<long> out;
                 for (const auto& c : effective_xi(s)) out.push_back(c.get_si());
                 return out;
             })
        .def(
            "summary_json",
            [](const TSpace& s, const std::optional<std::vector<long>>& xi) {
                return io::space_summary_json(s, xi_or_default(s, xi)).dump();
            },
            py::arg("xi") = py::none());

    m.def(
        "basis_json",
        [](const TSpace& s, int k) {
            std::vector<std::string> out;
            for (const auto& b : assignment_basis(s, k)) out.push_back(io::assignment_to_json(s, b).dump());
            return out;
        },
        py::arg("space"), py::arg("k"));

    m.def(
        "check_json",
        [](const TSpace& s, const std::string& assignment, const std::string& eta_library,
           const std::optional<std::vector<long>>& xi) {
            DecideOptions options;
            options.library = EtaLibrary::parse(eta_library);
            options.xi = to_xi(xi);
            return io::verdict_to_json(decide_cohomological(s, parse_assignment(s, assignment), options)).dump();
        },
        py::arg("space"), py::arg("assignment"), py::arg("eta_library") = "all", py::arg("xi") = py::none());

    m.def(
        "localization_sum",
        [](const TSpace& s, const std::string& assignment, const std::optional<std::string>& stratum) {
            return localization_sum(s, stratum_by_name(s, stratum), parse_assignment(s, assignment)).to_string();
        },
        py::arg("space"), py::arg("assignment"), py::arg("stratum") = py::none());

    m.def(
        "defect",
        [](const TSpace& s, int k, const std::optional<std::vector<long>>& xi) {
            return defect_dimension(s, k, xi_or_default(s, xi));
        },
        py::arg("space"), py::arg("k"), py::arg("xi") = py::none());

    m.def(
        "pullback_json",
        [](const std::string& map_path, const std::string& assignment) {
            const auto map = load_map_file(map_path);
            return io::assignment_to_json(*map.source, pullback(map, parse_assignment(*map.target, assignment))).dump();
        },
        py::arg("map_path"), py::arg("assignment"));
}
