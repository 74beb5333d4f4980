#include "sft/periodic.hpp"

#include <algorithm>
#include <cmath>

namespace sft {

namespace {

// Moebius function for small arguments.
int moebius(std::int64_t n) {
    int factors = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

bool is_primitive(const std::vector<EdgeIndex>& w) {
    const std::size_t p = w.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (std::size_t t = d; t < p && repeats; ++t)
            if (w[t] != w[t % d]) repeats = false;
        if (repeats) return false;
    }
    return true;
}

// Enumerates every primitive closed path of length <= n (each one is a
// distinct periodic point; rotations appear as their own words).
template <typename Sink>
void enumerate_primitive_closed(const Graph& g, std::int64_t n, Sink&& sink) {
    std::vector<EdgeIndex> path;
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
        auto dfs = [&](auto&& self, VertexIndex v, std::int64_t depth) -> void {
            if (depth > 0 && v == start && is_primitive(path)) sink(path);
            if (depth == n) return;
            for (EdgeIndex e : g.out_edges(v)) {
                path.push_back(e);
                self(self, g.target(e), depth + 1);
                path.pop_back();
            }
        };
        dfs(dfs, start, 0);
    }
}

BigInt trace_estimate(const Graph& g, std::int64_t n) {
    const IntMatrix a = adjacency_matrix(g);
    IntMatrix p = IntMatrix::identity(g.vertex_count());
    BigInt total = 0;
    for (std::int64_t t = 1; t <= n; ++t) {
        p = p * a;
        total += p.trace();
    }
    return total;
}

} // namespace

PeriodicEnsemble enumerate_periodic(const Graph& g, std::int64_t n, std::uint64_t cap) {
    if (n < 1) throw validation_error("enumerate_periodic: n must be >= 1");
    const BigInt estimate = trace_estimate(g, n);
    if (estimate > BigInt(static_cast<unsigned long>(cap)))
        throw cap_exceeded("enumerate_periodic: trace-based estimate exceeds cap " +
                               std::to_string(cap),
                           estimate.get_str());

    PeriodicEnsemble ens;
    ens.n = n;
    ens.least_period_counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    enumerate_primitive_closed(g, n, [&](const std::vector<EdgeIndex>& w) {
        ens.points.push_back(PeriodicPoint{w});
        ens.least_period_counts[w.size()] += 1;
    });
    ens.total = BigInt(static_cast<unsigned long>(ens.points.size()));
    return ens;
}

std::vector<BigInt> periodic_census(const Graph& g, std::int64_t n) {
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
    enumerate_primitive_closed(g, n,
                               [&](const std::vector<EdgeIndex>& w) { counts[w.size()] += 1; });
    return counts;
}

BigInt mobius_trace_total(const Graph& g, std::int64_t n) {
    const IntMatrix a = adjacency_matrix(g);
    std::vector<BigInt> traces(static_cast<std::size_t>(n) + 1);
    IntMatrix p = IntMatrix::identity(g.vertex_count());
    for (std::int64_t t = 1; t <= n; ++t) {
        p = p * a;
        traces[t] = p.trace();
    }
    BigInt total = 0;
    for (std::int64_t period = 1; period <= n; ++period)
        for (std::int64_t d = 1; d <= period; ++d)
            if (period % d == 0) total += moebius(d) * traces[period / d];
    return total;
}

BigRat periodic_window_mass(const PeriodicEnsemble& ens, std::span<const EdgeIndex> word,
                            std::int64_t first_pos) {
    if (ens.points.empty()) throw undefined_measure("periodic measure on empty ensemble");
    unsigned long matches = 0;
    for (const auto& pt : ens.points) {
        const std::int64_t p = static_cast<std::int64_t>(pt.word.size());
        bool ok = true;
        for (std::size_t idx = 0; idx < word.size() && ok; ++idx) {
            const std::int64_t t = first_pos + static_cast<std::int64_t>(idx);
            const std::int64_t r = ((t % p) + p) % p;
            if (pt.word[r] != word[idx]) ok = false;
        }
        if (ok) ++matches;
    }
    return make_rat(BigInt(matches), ens.total);
}

BigRat periodic_measure_mass(const PeriodicEnsemble& ens, const CenteredCylinder& e) {
    return periodic_window_mass(ens, e.word, -static_cast<std::int64_t>(e.halfwidth) + 1);
}

CompareReport compare_constructions(const Graph& g, const PerronData& pd, const HeteroSpec& spec,
                                    std::int64_t k, const PeriodicEnsemble& ens, int l_max) {
    if (l_max < 1) throw validation_error("compare_constructions: l_max must be >= 1");
    if (k < std::max(spec.n, spec.m) + l_max)
        throw validation_error("compare_constructions: requires k >= max(n, m) + l_max");
    CompareReport rep;
    for (int l = 1; l <= l_max; ++l) {
        for (auto& e : all_cylinders(g, l)) {
            CompareRow row;
            row.mu_periodic = periodic_measure_mass(ens, e);
            row.mu_hetero = empirical_cylinder_mass(g, spec, k, e);
            row.parry = centered_cylinder_mass(g, pd, e).value;
            const double mp = row.mu_periodic.get_d();
            const double mh = row.mu_hetero.get_d();
            rep.sup_periodic_vs_parry =
                std::max(rep.sup_periodic_vs_parry, std::abs(mp - row.parry));
            rep.sup_hetero_vs_parry = std::max(rep.sup_hetero_vs_parry, std::abs(mh - row.parry));
            rep.sup_periodic_vs_hetero =
                std::max(rep.sup_periodic_vs_hetero, std::abs(mp - mh));
            row.cylinder = std::move(e);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

} // namespace sft
