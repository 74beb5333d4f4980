#include "sft/resolving.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace sft {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t core_end(const ShiftPoint& z) {
    return z.core_start + static_cast<std::int64_t>(z.core.size());
}

// Unique out-edge of `v` mapping to `label` under a right-resolving code.
std::optional<EdgeIndex> label_step(const OneBlockCode& code, VertexIndex v, EdgeIndex label) {
    for (EdgeIndex e : code.domain.out_edges(v))
        if (code.edge_map[e] == label) return e;
    return std::nullopt;
}

std::vector<VertexIndex> vertex_fiber(const OneBlockCode& code, VertexIndex downstairs) {
    std::vector<VertexIndex> fiber;
    for (VertexIndex u = 0; u < code.domain.vertex_count(); ++u)
        if (code.vertex_map[u] == downstairs) fiber.push_back(u);
    return fiber;
}

// Arbitrary valid left-infinite continuation ending at `u`: a back cycle plus
// a connecting prefix (forward words).
void backward_closure(const Graph& g, VertexIndex u, std::vector<EdgeIndex>& cycle,
                      std::vector<EdgeIndex>& prefix) {
    std::vector<VertexIndex> verts{u};
    std::vector<EdgeIndex> back;
    VertexIndex cur = u;
    for (;;) {
        const EdgeIndex e = g.in_edges(cur)[0];
        cur = g.source(e);
        back.push_back(e);
        const auto it = std::find(verts.begin(), verts.end(), cur);
        if (it != verts.end()) {
            const std::size_t s = static_cast<std::size_t>(it - verts.begin());
            cycle.assign(back.rbegin(), back.rend() - s);
            prefix.assign(back.rend() - s, back.rend());
            return;
        }
        verts.push_back(cur);
    }
}

// Arbitrary valid right continuation from `u`.
void forward_closure(const Graph& g, VertexIndex u, std::vector<EdgeIndex>& suffix,
                     std::vector<EdgeIndex>& cycle) {
    std::vector<VertexIndex> verts{u};
    std::vector<EdgeIndex> fwd;
    VertexIndex cur = u;
    for (;;) {
        const EdgeIndex e = g.out_edges(cur)[0];
        cur = g.target(e);
        fwd.push_back(e);
        const auto it = std::find(verts.begin(), verts.end(), cur);
        if (it != verts.end()) {
            const std::size_t s = static_cast<std::size_t>(it - verts.begin());
            suffix.assign(fwd.begin(), fwd.begin() + s);
            cycle.assign(fwd.begin() + s, fwd.end());
            return;
        }
        verts.push_back(cur);
    }
}

} // namespace

OneBlockCode validate_code(Graph domain, Graph codomain,
                           const std::map<std::string, std::string>& edge_map) {
    OneBlockCode code;
    code.edge_map.assign(domain.edge_count(), -1);
    code.vertex_map.assign(domain.vertex_count(), -1);

    for (int e = 0; e < domain.edge_count(); ++e) {
        const auto it = edge_map.find(domain.edge(e).id);
        if (it == edge_map.end())
            throw validation_error("edge_map is not total: missing " + domain.edge(e).id);
        const auto image = codomain.find_edge(it->second);
        if (!image)
            throw validation_error("edge_map image is not a codomain edge: " + it->second);
        code.edge_map[e] = *image;
    }
    for (const auto& [key, value] : edge_map) {
        (void)value;
        if (!domain.find_edge(key))
            throw validation_error("edge_map key is not a domain edge: " + key);
    }

    auto assign = [&](VertexIndex v, VertexIndex image, const std::string& edge_id) {
        if (code.vertex_map[v] == -1) {
            code.vertex_map[v] = image;
        } else if (code.vertex_map[v] != image) {
            throw validation_error("edge_map does not respect sources/targets at edge " +
                                   edge_id);
        }
    };
    for (int e = 0; e < domain.edge_count(); ++e) {
        const EdgeIndex f = code.edge_map[e];
        assign(domain.source(e), codomain.source(f), domain.edge(e).id);
        assign(domain.target(e), codomain.target(f), domain.edge(e).id);
    }

    std::vector<char> hit(codomain.edge_count(), 0);
    for (EdgeIndex f : code.edge_map) hit[f] = 1;
    for (int f = 0; f < codomain.edge_count(); ++f)
        if (!hit[f])
            throw validation_error("edge_map is not surjective: codomain edge " +
                                   codomain.edge(f).id + " is never hit");

    code.domain = std::move(domain);
    code.codomain = std::move(codomain);
    return code;
}

OneBlockCode make_higher_block_code(const Graph& g) {
    std::map<std::string, std::string> edge_map;
    for (int e = 0; e < g.edge_count(); ++e)
        for (EdgeIndex f : g.out_edges(g.target(e)))
            edge_map["(" + g.edge(e).id + "," + g.edge(f).id + ")"] = g.edge(f).id;
    return validate_code(higher_block_graph(g), g, edge_map);
}

ResolvingType resolving_type(const OneBlockCode& code) {
    ResolvingType rt{true, true};
    for (VertexIndex v = 0; v < code.domain.vertex_count(); ++v) {
        std::set<EdgeIndex> out_images;
        for (EdgeIndex e : code.domain.out_edges(v))
            if (!out_images.insert(code.edge_map[e]).second) rt.right_resolving = false;
        std::set<EdgeIndex> in_images;
        for (EdgeIndex e : code.domain.in_edges(v))
            if (!in_images.insert(code.edge_map[e]).second) rt.left_resolving = false;
    }
    return rt;
}

std::vector<CenteredCylinder> cylinder_preimage(const OneBlockCode& code,
                                                const CenteredCylinder& e) {
    std::vector<std::vector<EdgeIndex>> candidates(e.word.size());
    for (std::size_t t = 0; t < e.word.size(); ++t)
        for (int d = 0; d < code.domain.edge_count(); ++d)
            if (code.edge_map[d] == e.word[t]) candidates[t].push_back(d);

    std::vector<CenteredCylinder> out;
    std::vector<EdgeIndex> word;
    auto dfs = [&](auto&& self, std::size_t t) -> void {
        if (t == e.word.size()) {
            out.push_back(make_centered_cylinder(code.domain, word));
            return;
        }
        for (EdgeIndex d : candidates[t]) {
            if (!word.empty() && code.domain.target(word.back()) != code.domain.source(d))
                continue;
            word.push_back(d);
            self(self, t + 1);
            word.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

PushforwardRow pushforward_check(const OneBlockCode& code, const PerronData& domain_pd,
                                 const PerronData& codomain_pd, const CenteredCylinder& e) {
    PushforwardRow row;
    row.cylinder = code.codomain.word_string(e.word);
    row.codomain_mass = centered_cylinder_mass(code.codomain, codomain_pd, e).value;
    const auto preimages = cylinder_preimage(code, e);
    row.preimage_count = static_cast<int>(preimages.size());
    for (const auto& pre : preimages)
        row.domain_mass_sum += centered_cylinder_mass(code.domain, domain_pd, pre).value;
    row.abs_err = std::abs(row.codomain_mass - row.domain_mass_sum);
    return row;
}

FiberDecomposition fiber_decomposition(const OneBlockCode& code, const RayCylinder& c) {
    if (c.side != RaySide::stable)
        throw validation_error("fiber_decomposition expects a stable ray downstairs");
    if (!resolving_type(code).right_resolving)
        throw validation_error("fiber_decomposition requires a right-resolving code");

    const Graph& up = code.domain;
    const ShiftPoint& y = c.base;
    const std::int64_t m = c.parameter;
    const std::int64_t t0 = -m + 1;
    const std::int64_t b0 = core_end(y);
    const std::int64_t rsz = static_cast<std::int64_t>(y.right_cycle.size());

    FiberDecomposition fd;
    fd.downstairs = c;
    const std::vector<VertexIndex> fiber = vertex_fiber(code, c.anchor);
    fd.bound = static_cast<int>(fiber.size());

    for (VertexIndex u : fiber) {
        // Deterministic forward lift of the pinned labels; state repetition in
        // the (vertex, cycle phase) space yields the lifted right cycle.
        std::vector<EdgeIndex> witness;
        std::map<std::pair<VertexIndex, std::int64_t>, std::size_t> seen;
        VertexIndex v = u;
        std::int64_t t = t0;
        bool died = false;
        std::vector<EdgeIndex> lift_core, lift_cycle;
        for (;;) {
            if (t >= b0) {
                const std::int64_t phase = ((t - b0) % rsz + rsz) % rsz;
                const auto [it, inserted] = seen.try_emplace({v, phase}, witness.size());
                if (!inserted) {
                    lift_core.assign(witness.begin(), witness.begin() + it->second);
                    lift_cycle.assign(witness.begin() + it->second, witness.end());
                    break;
                }
            }
            const auto e = label_step(code, v, coordinate(y, t));
            if (!e) {
                died = true;
                break;
            }
            witness.push_back(*e);
            v = up.target(*e);
            ++t;
        }
        if (died) continue;

        std::vector<EdgeIndex> back_cycle, back_prefix;
        backward_closure(up, u, back_cycle, back_prefix);
        std::vector<EdgeIndex> core = back_prefix;
        core.insert(core.end(), lift_core.begin(), lift_core.end());
        const std::int64_t start = t0 - static_cast<std::int64_t>(back_prefix.size());
        ShiftPoint base = make_point(up, ShiftPoint{back_cycle, std::move(core), lift_cycle, start});
        fd.components.push_back(make_ray_cylinder(up, RaySide::stable, std::move(base), m));
    }
    return fd;
}

std::vector<RayCylinder> unstable_lifts(const OneBlockCode& code, const RayCylinder& b) {
    if (b.side != RaySide::unstable)
        throw validation_error("unstable_lifts expects an unstable ray downstairs");
    if (!resolving_type(code).right_resolving)
        throw validation_error("unstable_lifts requires a right-resolving code");

    const Graph& up = code.domain;
    const Graph& down = code.codomain;
    const ShiftPoint& x = b.base;
    const std::int64_t n = b.parameter;
    const std::int64_t lsz = static_cast<std::int64_t>(x.left_cycle.size());

    // Aligned boundary: below `a` the pinned labels are pure repetitions of
    // the base's left cycle.
    std::int64_t a = x.core_start;
    if (a > n + 1) a += lsz * floor_div(n + 1 - a, lsz);

    // One-period transfer map on the fiber over the cycle's start vertex.
    // Left-infinite lifts correspond exactly to the cycles of this map.
    const VertexIndex v_star = down.source(x.left_cycle[0]);
    std::map<VertexIndex, VertexIndex> transfer;
    std::map<VertexIndex, std::vector<EdgeIndex>> transfer_witness;
    for (VertexIndex u : vertex_fiber(code, v_star)) {
        VertexIndex v = u;
        std::vector<EdgeIndex> w;
        bool ok = true;
        for (std::int64_t t = 0; t < lsz && ok; ++t) {
            const auto e = label_step(code, v, x.left_cycle[t]);
            if (!e) {
                ok = false;
                break;
            }
            w.push_back(*e);
            v = up.target(*e);
        }
        if (ok) {
            transfer[u] = v;
            transfer_witness[u] = std::move(w);
        }
    }

    // Vertices on transfer cycles.
    std::vector<VertexIndex> cycle_nodes;
    for (const auto& [u, unused] : transfer) {
        (void)unused;
        std::set<VertexIndex> walk;
        VertexIndex v = u;
        bool on_cycle = false;
        while (walk.insert(v).second) {
            const auto it = transfer.find(v);
            if (it == transfer.end()) break;
            v = it->second;
            if (v == u) {
                on_cycle = true;
                break;
            }
        }
        if (on_cycle) cycle_nodes.push_back(u);
    }

    std::vector<RayCylinder> lifts;
    for (VertexIndex u0 : cycle_nodes) {
        // Periodic left word around the cycle through u0, ending at u0.
        std::vector<EdgeIndex> cycle_word;
        VertexIndex v = u0;
        do {
            const auto& w = transfer_witness.at(v);
            cycle_word.insert(cycle_word.end(), w.begin(), w.end());
            v = transfer.at(v);
        } while (v != u0);

        // Deterministic forward lift of the remaining pinned labels [a, n].
        std::vector<EdgeIndex> core;
        VertexIndex cur = u0;
        bool died = false;
        for (std::int64_t t = a; t <= n; ++t) {
            const auto e = label_step(code, cur, coordinate(x, t));
            if (!e) {
                died = true;
                break;
            }
            core.push_back(*e);
            cur = up.target(*e);
        }
        if (died) continue;

        std::vector<EdgeIndex> suffix, fwd_cycle;
        forward_closure(up, cur, suffix, fwd_cycle);
        core.insert(core.end(), suffix.begin(), suffix.end());
        ShiftPoint base = make_point(up, ShiftPoint{cycle_word, std::move(core), fwd_cycle, a});
        lifts.push_back(make_ray_cylinder(up, RaySide::unstable, std::move(base), n));
    }
    return lifts;
}

double code_scale(const OneBlockCode& code, const PerronData& domain_pd,
                  const PerronData& codomain_pd) {
    return codomain_pd.u_r[code.vertex_map[0]] / domain_pd.u_r[0];
}

SuMeasureRow pushforward_stable_sum(const OneBlockCode& code, const PerronData& domain_pd,
                                    const PerronData& codomain_pd, const RayCylinder& c) {
    SuMeasureRow row;
    row.check = "stable_sum";
    row.codomain_mass = ray_cylinder_mass(code.codomain, codomain_pd, c).value;
    const FiberDecomposition fd = fiber_decomposition(code, c);
    row.pieces = static_cast<int>(fd.components.size());
    for (const auto& comp : fd.components)
        row.domain_raw += ray_cylinder_mass(code.domain, domain_pd, comp).value;
    row.scale = code_scale(code, domain_pd, codomain_pd);
    row.domain_calibrated = row.domain_raw / row.scale;
    row.abs_err = std::abs(row.codomain_mass - row.domain_calibrated);
    return row;
}

SuMeasureRow pushforward_unstable_lift(const OneBlockCode& code, const PerronData& domain_pd,
                                       const PerronData& codomain_pd, const RayCylinder& b) {
    SuMeasureRow row;
    row.check = "unstable_lift";
    row.codomain_mass = ray_cylinder_mass(code.codomain, codomain_pd, b).value;
    const auto lifts = unstable_lifts(code, b);
    if (lifts.empty())
        throw validation_error("pushforward_unstable_lift: no lift found "
                               "(code not surjective on the ray)");
    row.pieces = static_cast<int>(lifts.size());
    row.domain_raw = ray_cylinder_mass(code.domain, domain_pd, lifts.front()).value;
    row.scale = code_scale(code, domain_pd, codomain_pd);
    row.domain_calibrated = row.domain_raw * row.scale;
    row.abs_err = std::abs(row.codomain_mass - row.domain_calibrated);
    return row;
}

FiberProbe almost_one_to_one_probe(const OneBlockCode& code, std::int64_t period_bound,
                                   std::uint64_t cap) {
    FiberProbe probe;
    probe.period_bound = period_bound;
    const PeriodicEnsemble ens = enumerate_periodic(code.codomain, period_bound, cap);
    const Graph& up = code.domain;

    std::int64_t min_finite = -1;
    for (const auto& pt : ens.points) {
        const std::int64_t p = static_cast<std::int64_t>(pt.word.size());
        // Layered transition graph over Z/p: nodes (layer, domain edge over
        // the layer's label); bi-infinite paths through it are exactly the
        // fiber points.
        struct Node {
            std::int64_t layer;
            EdgeIndex e;
        };
        std::vector<Node> nodes;
        std::vector<std::vector<int>> by_layer(p);
        for (std::int64_t t = 0; t < p; ++t)
            for (int e = 0; e < up.edge_count(); ++e)
                if (code.edge_map[e] == pt.word[t]) {
                    by_layer[t].push_back(static_cast<int>(nodes.size()));
                    nodes.push_back({t, e});
                }
        const int nn = static_cast<int>(nodes.size());
        std::vector<std::vector<int>> succ(nn);
        std::vector<std::vector<int>> pred(nn);
        for (int a = 0; a < nn; ++a) {
            const std::int64_t next_layer = (nodes[a].layer + 1) % p;
            for (int bidx : by_layer[next_layer])
                if (up.target(nodes[a].e) == up.source(nodes[bidx].e)) {
                    succ[a].push_back(bidx);
                    pred[bidx].push_back(a);
                }
        }
        // Trim nodes that cannot continue forever in both directions.
        std::vector<char> alive(nn, 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < nn; ++a) {
                if (!alive[a]) continue;
                int outdeg = 0, indeg = 0;
                for (int bidx : succ[a]) outdeg += alive[bidx];
                for (int bidx : pred[a]) indeg += alive[bidx];
                if (outdeg == 0 || indeg == 0) {
                    alive[a] = 0;
                    changed = true;
                }
            }
        }
        bool branching = false;
        int alive_count = 0;
        for (int a = 0; a < nn; ++a) {
            if (!alive[a]) continue;
            ++alive_count;
            int outdeg = 0, indeg = 0;
            for (int bidx : succ[a]) outdeg += alive[bidx];
            for (int bidx : pred[a]) indeg += alive[bidx];
            if (outdeg > 1 || indeg > 1) branching = true;
        }

        std::int64_t fiber;
        if (alive_count == 0) {
            fiber = 0;
        } else if (branching) {
            fiber = -1; // infinite
            probe.any_infinite = true;
        } else {
            fiber = 0;
            for (int a : by_layer[0]) fiber += alive[a];
        }
        probe.histogram[fiber] += 1;
        ++probe.points_checked;
        if (fiber >= 0 && (min_finite < 0 || fiber < min_finite)) min_finite = fiber;
    }
    probe.min_fiber = min_finite < 0 ? -1 : min_finite;
    probe.almost_one_to_one_evidence = probe.min_fiber == 1;
    return probe;
}

} // namespace sft
