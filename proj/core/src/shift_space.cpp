#include "sft/shift_space.hpp"

#include <algorithm>
#include <numeric>

namespace sft {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Largest value <= bound congruent to ref modulo step (step > 0).
std::int64_t align_down(std::int64_t ref, std::int64_t step, std::int64_t bound) {
    return ref + step * floor_div(bound - ref, step);
}

std::int64_t core_end(const ShiftPoint& z) {
    return z.core_start + static_cast<std::int64_t>(z.core.size());
}

void validate_point(const Graph& g, const ShiftPoint& z) {
    if (z.left_cycle.empty() || z.right_cycle.empty())
        throw validation_error("shift point cycles must be nonempty");
    const std::int64_t lo = z.core_start - static_cast<std::int64_t>(z.left_cycle.size()) - 1;
    const std::int64_t hi = core_end(z) + static_cast<std::int64_t>(z.right_cycle.size()) + 1;
    for (std::int64_t t = lo; t < hi; ++t) {
        const EdgeIndex a = coordinate(z, t);
        const EdgeIndex b = coordinate(z, t + 1);
        if (g.target(a) != g.source(b))
            throw validation_error("path inconsistency at coordinate " + std::to_string(t) +
                                   ": " + g.edge(a).id + " cannot precede " + g.edge(b).id);
    }
}

} // namespace

ShiftPoint make_point(const Graph& g, ShiftPoint raw) {
    validate_point(g, raw);
    return raw;
}

ShiftPoint make_point(const Graph& g, const std::vector<std::string>& left_cycle,
                      const std::vector<std::string>& core,
                      const std::vector<std::string>& right_cycle, std::int64_t core_start) {
    return make_point(g, ShiftPoint{g.word_from_ids(left_cycle), g.word_from_ids(core),
                                    g.word_from_ids(right_cycle), core_start});
}

EdgeIndex coordinate(const ShiftPoint& z, std::int64_t t) {
    const std::int64_t s = z.core_start;
    const std::int64_t e = core_end(z);
    if (t >= s && t < e) return z.core[t - s];
    if (t < s) {
        const std::int64_t len = static_cast<std::int64_t>(z.left_cycle.size());
        const std::int64_t d = s - t;
        return z.left_cycle[(len - (d % len)) % len];
    }
    const std::int64_t len = static_cast<std::int64_t>(z.right_cycle.size());
    return z.right_cycle[(t - e) % len];
}

ShiftPoint shift_point(const ShiftPoint& z, std::int64_t s) {
    ShiftPoint out = z;
    out.core_start -= s;
    return out;
}

VertexIndex vertex_after(const Graph& g, const ShiftPoint& z, std::int64_t t) {
    return g.target(coordinate(z, t));
}

bool agree_on_past(const ShiftPoint& a, const ShiftPoint& b, std::int64_t bound) {
    const std::int64_t period =
        std::lcm(static_cast<std::int64_t>(a.left_cycle.size()),
                 static_cast<std::int64_t>(b.left_cycle.size()));
    const std::int64_t lo = std::min({bound, a.core_start, b.core_start}) - period;
    for (std::int64_t t = lo; t <= bound; ++t)
        if (coordinate(a, t) != coordinate(b, t)) return false;
    return true;
}

bool agree_on_future(const ShiftPoint& a, const ShiftPoint& b, std::int64_t bound) {
    const std::int64_t period =
        std::lcm(static_cast<std::int64_t>(a.right_cycle.size()),
                 static_cast<std::int64_t>(b.right_cycle.size()));
    const std::int64_t hi = std::max({bound, core_end(a), core_end(b)}) + period;
    for (std::int64_t t = bound; t <= hi; ++t)
        if (coordinate(a, t) != coordinate(b, t)) return false;
    return true;
}

bool points_equal(const ShiftPoint& a, const ShiftPoint& b) {
    const std::int64_t anchor = std::min(a.core_start, b.core_start);
    return agree_on_past(a, b, anchor) && agree_on_future(a, b, anchor);
}

ShiftPoint splice_point(const Graph& g, const ShiftPoint& left, std::int64_t left_end,
                        std::span<const EdgeIndex> middle, const ShiftPoint& right) {
    const std::int64_t right_start = left_end + 1 + static_cast<std::int64_t>(middle.size());
    // Core window: from left's aligned pure-cycle boundary through right's.
    const std::int64_t lsz = static_cast<std::int64_t>(left.left_cycle.size());
    const std::int64_t a = std::min(left.core_start,
                                    align_down(left.core_start, lsz, left_end + 1));
    const std::int64_t rsz = static_cast<std::int64_t>(right.right_cycle.size());
    std::int64_t b = core_end(right);
    if (b < right_start) b += rsz * floor_div(right_start - b + rsz - 1, rsz);

    std::vector<EdgeIndex> core;
    core.reserve(static_cast<std::size_t>(b - a));
    for (std::int64_t t = a; t <= left_end; ++t) core.push_back(coordinate(left, t));
    core.insert(core.end(), middle.begin(), middle.end());
    for (std::int64_t t = right_start; t < b; ++t) core.push_back(coordinate(right, t));

    return make_point(g, ShiftPoint{left.left_cycle, std::move(core), right.right_cycle, a});
}

std::optional<ShiftPoint> bracket(const Graph& g, const ShiftPoint& x, const ShiftPoint& y) {
    if (g.target(coordinate(y, 0)) != g.source(coordinate(x, 1))) return std::nullopt;
    return splice_point(g, y, 0, {}, x);
}

CenteredCylinder make_centered_cylinder(const Graph& g, std::span<const EdgeIndex> word) {
    if (word.empty() || word.size() % 2 != 0)
        throw validation_error("centered cylinder word must have positive even length");
    if (!g.is_path(word)) throw validation_error("centered cylinder word is not a path");
    CenteredCylinder e;
    e.halfwidth = static_cast<int>(word.size() / 2);
    e.src_anchor = g.source(word.front());
    e.dst_anchor = g.target(word.back());
    e.word.assign(word.begin(), word.end());
    return e;
}

CenteredCylinder make_centered_cylinder(const Graph& g, const std::vector<std::string>& word) {
    return make_centered_cylinder(g, g.word_from_ids(word));
}

RayCylinder make_ray_cylinder(const Graph& g, RaySide side, ShiftPoint base,
                              std::int64_t parameter) {
    validate_point(g, base);
    RayCylinder r;
    r.side = side;
    r.parameter = parameter;
    r.anchor = side == RaySide::unstable ? g.target(coordinate(base, parameter))
                                         : g.source(coordinate(base, -parameter + 1));
    r.base = std::move(base);
    return r;
}

RayCylinder shift_ray(const Graph& g, const RayCylinder& r) {
    const std::int64_t p =
        r.side == RaySide::unstable ? r.parameter - 1 : r.parameter + 1;
    return make_ray_cylinder(g, r.side, shift_point(r.base, 1), p);
}

std::optional<RayCylinder> transport_ray(const Graph& g, const RayCylinder& r,
                                         const ShiftPoint& to) {
    std::optional<ShiftPoint> moved = r.side == RaySide::unstable ? bracket(g, r.base, to)
                                                                  : bracket(g, to, r.base);
    if (!moved) return std::nullopt;
    return make_ray_cylinder(g, r.side, std::move(*moved), r.parameter);
}

std::vector<CenteredCylinder> cylinders_matching(
    const Graph& g, const std::vector<std::pair<std::int64_t, EdgeIndex>>& pins,
    std::optional<VertexIndex> junction, int halfwidth) {
    const std::int64_t lo = -static_cast<std::int64_t>(halfwidth) + 1;
    const std::int64_t hi = halfwidth;
    std::vector<EdgeIndex> pin_at(static_cast<std::size_t>(hi - lo + 1), -1);
    for (const auto& [pos, e] : pins) {
        if (pos < lo || pos > hi)
            throw validation_error("pin outside the cylinder window");
        pin_at[pos - lo] = e;
    }

    std::vector<CenteredCylinder> out;
    std::vector<EdgeIndex> word;
    auto dfs = [&](auto&& self, std::int64_t pos) -> void {
        if (pos > hi) {
            out.push_back(make_centered_cylinder(g, word));
            return;
        }
        auto try_edge = [&](EdgeIndex e) {
            if (!word.empty() && g.target(word.back()) != g.source(e)) return;
            if (pos == 0 && junction && g.target(e) != *junction) return;
            const EdgeIndex pinned = pin_at[pos - lo];
            if (pinned >= 0 && pinned != e) return;
            word.push_back(e);
            self(self, pos + 1);
            word.pop_back();
        };
        const EdgeIndex pinned = pin_at[pos - lo];
        if (pinned >= 0) {
            try_edge(pinned);
        } else if (word.empty()) {
            for (EdgeIndex e = 0; e < g.edge_count(); ++e) try_edge(e);
        } else {
            for (EdgeIndex e : g.out_edges(g.target(word.back()))) try_edge(e);
        }
    };
    dfs(dfs, lo);
    return out;
}

std::vector<CenteredCylinder> all_cylinders(const Graph& g, int halfwidth) {
    return cylinders_matching(g, {}, std::nullopt, halfwidth);
}

ProductSet product_set(const Graph& g, const RayCylinder& b, const RayCylinder& c) {
    if (b.side != RaySide::unstable || c.side != RaySide::stable)
        throw validation_error("product_set expects an unstable ray and a stable ray");
    if (b.parameter < 0 || c.parameter < 0)
        throw validation_error(
            "product_set supports parameters n, m >= 0 (rays local to the bracket junction)");

    ProductSet p;
    p.unstable = b;
    p.stable = c;
    const VertexIndex jb = g.target(coordinate(b.base, 0));
    const VertexIndex jc = g.target(coordinate(c.base, 0));
    if (jb != jc) {
        p.empty = true;
        return p;
    }
    p.empty = false;
    p.junction = jb;

    std::vector<std::pair<std::int64_t, EdgeIndex>> pins;
    for (std::int64_t t = -c.parameter + 1; t <= 0; ++t)
        pins.emplace_back(t, coordinate(c.base, t));
    for (std::int64_t t = 1; t <= b.parameter; ++t)
        pins.emplace_back(t, coordinate(b.base, t));
    const int l = static_cast<int>(std::max<std::int64_t>({1, b.parameter, c.parameter}));
    p.cylinders = cylinders_matching(g, pins, p.junction, l);
    return p;
}

} // namespace sft
