#pragma once

#include "sft/heteroclinic.hpp"
#include "sft/periodic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sft {

/// One-block factor code between edge shifts: an edge map that respects
/// sources and targets (inducing a vertex map) and is surjective onto the
/// codomain edges.
struct OneBlockCode {
    Graph domain;
    Graph codomain;
    std::vector<EdgeIndex> edge_map;    // domain edge -> codomain edge
    std::vector<VertexIndex> vertex_map; // induced
};

OneBlockCode validate_code(Graph domain, Graph codomain,
                           const std::map<std::string, std::string>& edge_map);

/// The 2-block recoding code on higher_block_graph(g): (e,f) -> f. It is a
/// right-resolving conjugacy.
OneBlockCode make_higher_block_code(const Graph& g);

struct ResolvingType {
    bool left_resolving = false;  // injective on in-edges of every vertex (s-resolving)
    bool right_resolving = false; // injective on out-edges of every vertex (u-resolving)
};

ResolvingType resolving_type(const OneBlockCode& code);

/// Exact preimage of a centered cylinder: all domain words mapping letterwise
/// to the cylinder word.
std::vector<CenteredCylinder> cylinder_preimage(const OneBlockCode& code,
                                                const CenteredCylinder& e);

struct PushforwardRow {
    std::string cylinder;
    double codomain_mass = 0.0;
    double domain_mass_sum = 0.0;
    double abs_err = 0.0;
    int preimage_count = 0;
};

/// Compares the codomain Parry mass of E with the total domain Parry mass of
/// its preimage cylinders (equality is the cylinder-level content of the
/// measure pushforward under an almost one-to-one code).
PushforwardRow pushforward_check(const OneBlockCode& code, const PerronData& domain_pd,
                                 const PerronData& codomain_pd, const CenteredCylinder& e);

/// Preimage of a stable ray downstairs under a right-resolving code: a
/// disjoint union of stable rays, one per fiber vertex over the anchor whose
/// forward label-lift survives. m <= M where M is the anchor fiber size.
struct FiberDecomposition {
    RayCylinder downstairs;
    std::vector<RayCylinder> components;
    int bound = 0; // M
};

FiberDecomposition fiber_decomposition(const OneBlockCode& code, const RayCylinder& c);

/// Lifts of an unstable ray downstairs under a right-resolving code, one per
/// cycle of the one-period label-transfer map over the base's left cycle.
std::vector<RayCylinder> unstable_lifts(const OneBlockCode& code, const RayCylinder& b);

/// Ray masses on the two sides carry a free scale (c upstairs-unstable,
/// 1/c upstairs-stable) that the measure conditions do not fix. The scale is
/// calibrated once per code from the Perron data at the first domain vertex;
/// after calibration the transfer identities are exact.
double code_scale(const OneBlockCode& code, const PerronData& domain_pd,
                  const PerronData& codomain_pd);

struct SuMeasureRow {
    std::string check;
    double codomain_mass = 0.0;
    double domain_raw = 0.0;        // sum/lift mass under the domain's own normalization
    double scale = 1.0;             // calibration constant c
    double domain_calibrated = 0.0; // raw * c (unstable) or raw / c (stable)
    double abs_err = 0.0;           // |codomain_mass - domain_calibrated|
    int pieces = 0;
};

/// Stable-sum identity: mu^s(C) downstairs vs the calibrated sum of the fiber
/// component masses upstairs.
SuMeasureRow pushforward_stable_sum(const OneBlockCode& code, const PerronData& domain_pd,
                                    const PerronData& codomain_pd, const RayCylinder& c);

/// Unstable-lift identity: mu^u(B) downstairs vs the calibrated mass of the
/// (first) domain lift.
SuMeasureRow pushforward_unstable_lift(const OneBlockCode& code, const PerronData& domain_pd,
                                       const PerronData& codomain_pd, const RayCylinder& b);

/// Fiber cardinalities over every downstairs periodic point of least period
/// <= P. A minimum of 1 is evidence (not proof) that the code is almost
/// one-to-one; fibers can be infinite for entropy-collapsing codes.
struct FiberProbe {
    std::int64_t period_bound = 0;
    std::int64_t points_checked = 0;
    std::map<std::int64_t, std::int64_t> histogram; // fiber size -> #points; key -1 = infinite
    std::int64_t min_fiber = 0;
    bool any_infinite = false;
    bool almost_one_to_one_evidence = false;
};

FiberProbe almost_one_to_one_probe(const OneBlockCode& code, std::int64_t period_bound,
                                   std::uint64_t cap);

} // namespace sft
