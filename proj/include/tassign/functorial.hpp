#pragma once

// Pullback of assignments along an equivariant map presented by its action
// on fixed points, plus optional stratum correspondences.

#include "tassign/assignment.hpp"
#include "tassign/space.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace tassign {

/// Target of a stratum correspondence: a stratum closure or a single fixed
/// point (whose stabilizer is all of t).
struct StratumTarget {
    std::optional<StratumRef> stratum;
    std::optional<std::size_t> point;
};

struct StratumMapEntry {
    StratumRef source;
    StratumTarget target;
};

struct EquivariantMap {
    std::shared_ptr<const TSpace> source;
    std::shared_ptr<const TSpace> target;
    std::vector<std::size_t> phi;             ///< source fixed point -> target fixed point
    std::vector<StratumMapEntry> strata;      ///< optional, validated
};

/// Checks totality, rank agreement, and that every declared stratum
/// correspondence is monotone and stabilizer-compatible.
void validate_map(const EquivariantMap& m);

EquivariantMap make_map(std::shared_ptr<const TSpace> source, std::shared_ptr<const TSpace> target,
                        const std::map<std::string, std::string>& phi,
                        const std::map<std::string, std::string>& strata = {});

/// Map document: {"source": path, "target": path, "phi": {name: name},
/// "strata": {name: name}?}. Paths are relative to `base_dir`.
EquivariantMap load_map(const nlohmann::json& doc, const std::string& base_dir);
EquivariantMap load_map_file(const std::string& path);

/// (f*A)(p) = A(phi(p)), validated on the source. Throws InvalidMapData
/// carrying the failed congruence.
Assignment pullback(const EquivariantMap& m, const Assignment& a);

/// Map M -> P from f: M -> N and g: N -> P.
EquivariantMap compose(const EquivariantMap& g, const EquivariantMap& f);

EquivariantMap identity_map(std::shared_ptr<const TSpace> space);

} // namespace tassign
