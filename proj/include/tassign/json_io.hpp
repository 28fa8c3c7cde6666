#pragma once

// JSON documents exchanged with the CLI and the Python module.

#include "tassign/assignment.hpp"
#include "tassign/fraction.hpp"
#include "tassign/localize.hpp"
#include "tassign/space.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace tassign::io {

using ordered_json = nlohmann::ordered_json;

/// {"degree": 2k, "values": {name: polynomial-string}} in fixed-point order.
ordered_json assignment_to_json(const TSpace& s, const Assignment& a);
Assignment assignment_from_json(const TSpace& s, const nlohmann::json& doc);
Assignment load_assignment_file(const TSpace& s, const std::string& path);

ordered_json fraction_to_json(const LinFraction& f);
ordered_json verdict_to_json(const CohomologyVerdict& v);
ordered_json space_summary_json(const TSpace& s, const Xi& xi);

nlohmann::json read_json_file(const std::string& path);

} // namespace tassign::io
