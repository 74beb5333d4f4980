#pragma once

#include "sft/parry.hpp"
#include "sft/perron.hpp"
#include "sft/shift_space.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sft {

/// B = Sigma^u_n(x), C = Sigma^s_m(y); h^k is the set of points picked up by
/// shifting B forward and C backward k steps each. Anchors: i = target(x_n),
/// j = source(y_{-m+1}).
struct HeteroSpec {
    ShiftPoint x;
    ShiftPoint y;
    std::int64_t n = 0;
    std::int64_t m = 0;
    VertexIndex anchor_i = -1;
    VertexIndex anchor_j = -1;
};

HeteroSpec make_hetero_spec(const Graph& g, ShiftPoint x, ShiftPoint y, std::int64_t n,
                            std::int64_t m);

/// #h^k = entry (i, j) of A^{2k-(n+m)}. Exact; zero is allowed.
BigInt hetero_count(const Graph& g, const HeteroSpec& spec, std::int64_t k);

/// Explicit middle paths of h^k (coordinates n-k+1 .. k-m). Throws
/// cap_exceeded when the exact count is above `cap`.
struct HeteroEnumeration {
    std::int64_t k = 0;
    BigInt count;
    std::vector<std::vector<EdgeIndex>> middle_paths;
};

HeteroEnumeration hetero_enumerate(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                                   std::uint64_t cap);

/// The heteroclinic point of a given middle path: left ray of sigma^k x,
/// middle word, right ray of sigma^{-k} y.
ShiftPoint assemble_hetero_point(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                                 std::span<const EdgeIndex> middle);

/// mu^k_{B,C}(E) as an exact rational:
/// A^{k-(n+l)}_{i,i'} A^{k-(m+l)}_{j',j} / A^{2k-(n+m)}_{i,j}.
/// Requires k >= max(n+l, m+l); throws undefined_measure when h^k is empty.
BigRat empirical_cylinder_mass(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                               const CenteredCylinder& e);

struct SeriesRow {
    std::int64_t k = 0;
    BigInt count;
    double scaled = 0.0;  // lambda^{-2k} #h^k
    double target = 0.0;  // ray mass product mu^u(B) mu^s(C)
    double abs_err = 0.0;
    std::optional<double> entropy_est; // log(#h^k) / 2k, absent when the count is 0
};

struct ConvergenceSeries {
    std::vector<SeriesRow> rows;
    double target = 0.0;
    double entropy = 0.0;
};

/// Rows for k = 1..k_max (k with negative middle length are skipped).
ConvergenceSeries ratio_and_entropy_series(const Graph& g, const PerronData& pd,
                                           const HeteroSpec& spec, std::int64_t k_max);

/// Finite disjoint unions of rays: B = union of unstable rays, C = union of
/// stable rays. Counts and empirical masses add over the pieces.
struct HeteroFamily {
    std::vector<RayCylinder> unstable;
    std::vector<RayCylinder> stable;
};

/// Validates pairwise disjointness of the pieces on each side.
HeteroFamily make_hetero_family(const Graph& g, std::vector<RayCylinder> unstable,
                                std::vector<RayCylinder> stable);

HeteroFamily family_of(const HeteroSpec& spec, const Graph& g);

BigInt family_count(const Graph& g, const HeteroFamily& fam, std::int64_t k);

struct WeakStarRow {
    CenteredCylinder cylinder;
    BigRat empirical;
    double empirical_value = 0.0;
    double parry = 0.0;
    double abs_err = 0.0;
};

struct WeakStarReport {
    std::vector<WeakStarRow> rows;
    double sup_dev = 0.0;
    BigInt count;
    std::int64_t k = 0;
};

/// Empirical vs Parry masses over every centered cylinder of halfwidth
/// <= l_max. Requires k >= max piece parameter + l_max; throws
/// undefined_measure when h^k is empty.
WeakStarReport weak_star_report(const Graph& g, const PerronData& pd, const HeteroFamily& fam,
                                std::int64_t k, int l_max);

WeakStarReport weak_star_report(const Graph& g, const PerronData& pd, const HeteroSpec& spec,
                                std::int64_t k, int l_max);

/// Irreducible (period I) variant: h^k is the union of I pieces, piece i
/// being the (kI+i, kI-i)-shifted intersection. All pieces have the same
/// exact cardinality A^{2kI-(n+m)}_{i,j}.
struct IrreducibleCount {
    int period = 1;
    BigInt piece;
    BigInt total;
};

/// Requires x and y to lie in the same cyclic component.
IrreducibleCount irreducible_hetero_count(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                                          const SpectralDecomposition& decomp);

/// Component-system ray-mass product computed through power_recode and the
/// recoded graph's own Perron data. The scaled counts converge to
/// period * this value.
double component_ray_mass_product(const Graph& g, const SpectralDecomposition& decomp,
                                  const HeteroSpec& spec);

struct IrreducibleSeriesRow {
    std::int64_t k = 0;
    BigInt total;
    double scaled = 0.0;           // lambda^{-2kI} #h^k
    double target_component = 0.0; // I x component-level ray-mass product
    double target_xlevel = 0.0;    // I x X-level ray-mass product (differs; reported, not asserted)
    double abs_err = 0.0;          // against target_component
    std::optional<double> entropy_est; // log(#h^k) / (2kI)
};

struct IrreducibleSeries {
    std::vector<IrreducibleSeriesRow> rows;
    int period = 1;
    double target_component = 0.0;
    double target_xlevel = 0.0;
};

IrreducibleSeries irreducible_ratio_series(const Graph& g, const PerronData& pd,
                                           const HeteroSpec& spec, std::int64_t k_max,
                                           const SpectralDecomposition& decomp);

struct IrreducibleWeakStarReport {
    std::vector<WeakStarRow> rows;
    std::vector<BigRat> piece_weights; // exact; must converge to 1/I
    double sup_dev = 0.0;
    BigInt total;
    std::int64_t k = 0;
};

IrreducibleWeakStarReport irreducible_weak_star_report(const Graph& g, const PerronData& pd,
                                                       const HeteroSpec& spec, std::int64_t k,
                                                       int l_max,
                                                       const SpectralDecomposition& decomp);

/// The cyclic component a point sits in: class of the vertex between
/// coordinates 0 and 1.
int point_component(const Graph& g, const SpectralDecomposition& decomp, const ShiftPoint& z);

} // namespace sft
