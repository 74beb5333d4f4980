#pragma once

#include "sft/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sft {

/// Eventually-periodic bi-infinite edge sequence. Coordinate t holds
/// core[t - core_start] for core_start <= t < core_start + |core|, the left
/// cycle repeated below that range and the right cycle repeated above it,
/// aligned so that positions [core_start - |L|, core_start) carry one full
/// copy of the left cycle.
struct ShiftPoint {
    std::vector<EdgeIndex> left_cycle;
    std::vector<EdgeIndex> core;
    std::vector<EdgeIndex> right_cycle;
    std::int64_t core_start = 0;
};

/// Validates path consistency (cycle closures and junctions) and returns the
/// point.
ShiftPoint make_point(const Graph& g, ShiftPoint raw);

/// Id-based convenience overload.
ShiftPoint make_point(const Graph& g, const std::vector<std::string>& left_cycle,
                      const std::vector<std::string>& core,
                      const std::vector<std::string>& right_cycle, std::int64_t core_start);

EdgeIndex coordinate(const ShiftPoint& z, std::int64_t t);

/// sigma^s: coordinate(shift_point(z, s), t) == coordinate(z, t + s).
ShiftPoint shift_point(const ShiftPoint& z, std::int64_t s);

/// The vertex between coordinates t and t+1, i.e. target(z_t).
VertexIndex vertex_after(const Graph& g, const ShiftPoint& z, std::int64_t t);

/// Coordinatewise equality of the represented sequences (representations may
/// differ).
bool points_equal(const ShiftPoint& a, const ShiftPoint& b);

/// True when a_t == b_t for every t <= bound.
bool agree_on_past(const ShiftPoint& a, const ShiftPoint& b, std::int64_t bound);

/// True when a_t == b_t for every t >= bound.
bool agree_on_future(const ShiftPoint& a, const ShiftPoint& b, std::int64_t bound);

/// [x, y]: the point taking y's coordinates for t <= 0 and x's for t >= 1.
/// Defined iff target(y_0) == source(x_1).
std::optional<ShiftPoint> bracket(const Graph& g, const ShiftPoint& x, const ShiftPoint& y);

/// Point equal to `left` up to coordinate left_end, then `middle`, then
/// `right` from coordinate left_end + |middle| + 1 on. Junctions are
/// validated.
ShiftPoint splice_point(const Graph& g, const ShiftPoint& left, std::int64_t left_end,
                        std::span<const EdgeIndex> middle, const ShiftPoint& right);

/// Centered cylinder: the points matching `word` on the window
/// [-l+1, l], where |word| == 2l. Anchors are the source of the first and
/// the target of the last letter.
struct CenteredCylinder {
    std::vector<EdgeIndex> word;
    int halfwidth = 0;
    VertexIndex src_anchor = -1;
    VertexIndex dst_anchor = -1;
};

CenteredCylinder make_centered_cylinder(const Graph& g, std::span<const EdgeIndex> word);
CenteredCylinder make_centered_cylinder(const Graph& g, const std::vector<std::string>& word);

enum class RaySide { unstable, stable };

/// Unstable ray (parameter n): points agreeing with the base on every t <= n;
/// anchored at target(base_n). Stable ray (parameter m): agreement on every
/// t >= -m+1; anchored at source(base_{-m+1}).
struct RayCylinder {
    RaySide side = RaySide::unstable;
    ShiftPoint base;
    std::int64_t parameter = 0;
    VertexIndex anchor = -1;
};

RayCylinder make_ray_cylinder(const Graph& g, RaySide side, ShiftPoint base,
                              std::int64_t parameter);

/// sigma(R): an unstable ray loses one pinned coordinate (parameter n-1), a
/// stable ray gains one (parameter m+1); anchors are unchanged.
RayCylinder shift_ray(const Graph& g, const RayCylinder& r);

/// Bracket transport of a ray to a new base point: [R, to] for unstable rays,
/// [to, R] for stable rays. Empty when the junction vertices differ. The
/// parameter and the anchor are unchanged.
std::optional<RayCylinder> transport_ray(const Graph& g, const RayCylinder& r,
                                         const ShiftPoint& to);

/// The clopen set [B, C] made of points carrying C's base on [-m+1, 0] and
/// B's base on [1, n] (parameters n, m >= 0), junction vertex shared.
/// `empty` flags inconsistent junctions; otherwise `cylinders` is the exact
/// finite decomposition into centered cylinders of halfwidth max(1, n, m).
struct ProductSet {
    RayCylinder unstable;
    RayCylinder stable;
    bool empty = true;
    VertexIndex junction = -1;
    std::vector<CenteredCylinder> cylinders;
};

ProductSet product_set(const Graph& g, const RayCylinder& b, const RayCylinder& c);

/// All centered cylinders of halfwidth l that match every pin
/// (position -> edge) and pass through `junction` between coordinates 0 and
/// 1 when given. Pins must fit inside [-l+1, l].
std::vector<CenteredCylinder> cylinders_matching(
    const Graph& g, const std::vector<std::pair<std::int64_t, EdgeIndex>>& pins,
    std::optional<VertexIndex> junction, int halfwidth);

/// Every centered cylinder of halfwidth l, in lexicographic edge order.
std::vector<CenteredCylinder> all_cylinders(const Graph& g, int halfwidth);

} // namespace sft
