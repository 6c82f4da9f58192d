#pragma once

#include "wahl/classt.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wahl::surface {

using hj::ChainWeights;

/// A curve on the ambient surface.  Everything in scope is a smooth
/// rational curve, so adjunction reads K.C = -2 - C^2 throughout.
struct Curve {
    std::string id;
    Int self_int;
    bool rational = true;
    std::optional<std::string> exceptional_of;  // label of the blowup that created it
};

/// A rational surface presented as a list of curves with an exact
/// intersection table.  Pairings store only nonzero values between
/// distinct curves; self-intersections are carried on the curves.
struct CurveConfig {
    std::vector<Curve> curves;
    std::map<std::pair<std::string, std::string>, Int> pairings;
    Int k_squared;
    Int picard_rank;

    const Curve& curve(const std::string& id) const;
    bool has_curve(const std::string& id) const;
    Int pairing(const std::string& a, const std::string& b) const;
    void set_pairing(const std::string& a, const std::string& b, const Int& v);
};

/// Point of a blowup: the curves through it with their multiplicities.
/// A node is a single curve with multiplicity 2; an ordinary point on a
/// single curve has multiplicity 1.
struct PointSpec {
    std::vector<std::pair<std::string, Int>> passes_through;
};

/// Blows up the point described by pt and names the new (-1)-curve
/// new_id.  Listed curves lose m^2 from their self-intersection and
/// m*m' from mutual pairings (which must stay >= 0), and meet the new
/// curve with multiplicity m.  K^2 drops by 1, the Picard rank grows by 1.
CurveConfig blow_up(const CurveConfig& cfg, const PointSpec& pt,
                    const std::string& new_id,
                    const std::optional<std::string>& blowup_label = std::nullopt);

/// Reads off the chain weights (-self_int per curve, in order) after
/// validating the linear-chain adjacency of ids inside cfg.  Any weight
/// <= 1 is rejected: resolution chains carry b_i >= 2.
ChainWeights extract_chain(const CurveConfig& cfg, const std::vector<std::string>& ids);

/// A disjoint union of linear chains selected for contraction.
struct ChainSelection {
    std::vector<std::vector<std::string>> chains;
};

struct ChainContraction {
    classt::ClassTTriple triple;
    Int delta;
    std::vector<Rat> coefficients;  // the c_i, in chain order
};

struct ContractionResult {
    std::vector<ChainContraction> per_chain;
    Int k_x_squared;
};

/// Contracts every selected chain to its class-T singularity.
/// K_X^2 = K_M^2 + sum of deltas; independently (K_M + Delta)^2 is
/// assembled from the full intersection table via adjunction and the two
/// routes are asserted equal, as is (K_M + Delta).E = 0 for every chain
/// component E.
ContractionResult contract_chains(const CurveConfig& cfg, const ChainSelection& sel);

/// Delta . curve for the discrepancy divisor of the selected chains:
/// sum over chain components E of c_E * pairing(curve, E).  The curve
/// must not itself lie in a chain.
Rat delta_dot(const CurveConfig& cfg, const ChainSelection& sel, const std::string& curve_id);

/// Determinant of the intersection matrix of the listed curves
/// (self-intersections on the diagonal), fraction-free exact elimination.
Int gram_determinant(const CurveConfig& cfg, const std::vector<std::string>& ids);

} // namespace wahl::surface
