#pragma once

// Combinatorial model of a compact, equivariantly formal T-manifold with
// isolated fixed points: isotropy weights at each fixed point plus the
// declared one-skeleton (components of M^K for codimension-one K) and
// optional higher strata.

#include "tassign/poly.hpp"
#include "tassign/subtorus.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tassign {

struct FixedPoint {
    std::string name;
    std::vector<LinForm> weights;  ///< signed, as given in the input
};

struct SkeletonComponent {
    std::string name;
    LinForm direction;                ///< primitive, positive-normalized
    std::vector<std::size_t> points;  ///< indices into TSpace::fixed_points
    int half_dim = 0;
};

struct HigherStratum {
    std::string name;
    Subtorus stabilizer;
    std::vector<std::size_t> points;
};

using Xi = std::vector<Integer>;

/// A stratum closure that localization sums can run over: the whole
/// space, a one-skeleton component or a higher stratum.
struct StratumRef {
    enum class Kind { Whole, Component, Higher };
    Kind kind = Kind::Whole;
    std::size_t index = 0;

    static StratumRef whole() { return {}; }
    static StratumRef component(std::size_t i) { return {Kind::Component, i}; }
    static StratumRef higher(std::size_t i) { return {Kind::Higher, i}; }
    bool operator==(const StratumRef&) const = default;
};

class TSpace {
public:
    std::size_t rank = 0;
    int half_dim = 0;
    std::vector<FixedPoint> fixed_points;
    std::vector<SkeletonComponent> one_skeleton;
    std::vector<HigherStratum> higher_strata;
    std::optional<Xi> xi;
    bool formal = true;

    std::size_t point_index(const std::string& name) const;
    std::optional<std::size_t> find_point(const std::string& name) const;
    std::optional<StratumRef> find_stratum(const std::string& name) const;

    // Views of a stratum closure.
    std::string stratum_name(StratumRef s) const;
    std::vector<std::size_t> stratum_points(StratumRef s) const;
    Subtorus stratum_stabilizer(StratumRef s) const;
    int stratum_half_dim(StratumRef s) const;
    /// Weights at p tangent to the stratum (those vanishing on its
    /// stabilizer). All weights for the whole space.
    std::vector<LinForm> tangent_weights(StratumRef s, std::size_t p) const;
    std::vector<LinForm> normal_weights(StratumRef s, std::size_t p) const;
    std::vector<StratumRef> all_strata() const;
};

/// Parse and validate a space document. Throws SchemaError or
/// ValidationError naming the violated invariant.
TSpace load_space(const nlohmann::json& doc);
TSpace load_space_file(const std::string& path);
void validate_space(const TSpace& s);

bool is_gkm(const TSpace& s);

/// Deterministic search over (1, t, t^2, ...) for t = 1, 2, ...
Xi choose_generic_xi(const TSpace& s);
/// The input xi if present, otherwise choose_generic_xi.
Xi effective_xi(const TSpace& s);

struct PointMorse {
    int index = 0;              ///< lambda_p
    Polynomial negative_part;   ///< Lambda_p^-
    Polynomial euler;           ///< e(p)
};

struct MorseData {
    Xi xi;
    std::vector<PointMorse> points;  ///< whole space, in fixed-point order
    /// per component, aligned with SkeletonComponent::points
    std::vector<std::vector<PointMorse>> components;
};

PointMorse point_morse(std::span<const LinForm> weights, std::span<const Integer> xi);
MorseData morse_data(const TSpace& s, const Xi& xi);

struct BettiData {
    std::vector<long> betti;  ///< b_{2k}, k = 0..n
    /// dim H_T^{2k} for k = 0..max_degree
    std::vector<Integer> equivariant_dims;
};

/// dim S^k(t*) = C(k + r - 1, r - 1).
Integer symmetric_power_dim(std::size_t rank, int k);
BettiData betti_and_dims(const TSpace& s, const Xi& xi, int max_degree);
Integer equivariant_dim(const TSpace& s, const Xi& xi, int k);

} // namespace tassign
