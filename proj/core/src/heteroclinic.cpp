#include "sft/heteroclinic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sft {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Matrix powers keyed by exponent, local to one report computation.
class PowerCache {
public:
    explicit PowerCache(const Graph& g) : base_(adjacency_matrix(g)) {}
    const IntMatrix& get(std::int64_t n) {
        auto it = cache_.find(n);
        if (it == cache_.end()) it = cache_.emplace(n, base_.pow(n)).first;
        return it->second;
    }

private:
    IntMatrix base_;
    std::map<std::int64_t, IntMatrix> cache_;
};

double scaled_count(const BigInt& count, double lambda, std::int64_t power) {
    return to_double(count) * std::pow(lambda, -static_cast<double>(power));
}

} // namespace

HeteroSpec make_hetero_spec(const Graph& g, ShiftPoint x, ShiftPoint y, std::int64_t n,
                            std::int64_t m) {
    HeteroSpec spec;
    spec.anchor_i = g.target(coordinate(x, n));
    spec.anchor_j = g.source(coordinate(y, -m + 1));
    spec.x = std::move(x);
    spec.y = std::move(y);
    spec.n = n;
    spec.m = m;
    return spec;
}

BigInt hetero_count(const Graph& g, const HeteroSpec& spec, std::int64_t k) {
    const std::int64_t len = 2 * k - (spec.n + spec.m);
    if (len < 0) throw validation_error("hetero_count: negative middle path length");
    return adjacency_power(g, len).at(spec.anchor_i, spec.anchor_j);
}

HeteroEnumeration hetero_enumerate(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                                   std::uint64_t cap) {
    HeteroEnumeration out;
    out.k = k;
    out.count = hetero_count(g, spec, k);
    if (out.count > BigInt(static_cast<unsigned long>(cap)))
        throw cap_exceeded("hetero_enumerate: count exceeds cap " + std::to_string(cap),
                           out.count.get_str());
    const std::int64_t len = 2 * k - (spec.n + spec.m);
    std::vector<EdgeIndex> path;
    auto dfs = [&](auto&& self, VertexIndex v, std::int64_t depth) -> void {
        if (depth == len) {
            if (v == spec.anchor_j) out.middle_paths.push_back(path);
            return;
        }
        for (EdgeIndex e : g.out_edges(v)) {
            path.push_back(e);
            self(self, g.target(e), depth + 1);
            path.pop_back();
        }
    };
    dfs(dfs, spec.anchor_i, 0);
    return out;
}

ShiftPoint assemble_hetero_point(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                                 std::span<const EdgeIndex> middle) {
    return splice_point(g, shift_point(spec.x, k), spec.n - k, middle,
                        shift_point(spec.y, -k));
}

BigRat empirical_cylinder_mass(const Graph& g, const HeteroSpec& spec, std::int64_t k,
                               const CenteredCylinder& e) {
    const std::int64_t l = e.halfwidth;
    if (k < spec.n + l || k < spec.m + l)
        throw validation_error("empirical_cylinder_mass: window too wide for k");
    PowerCache powers(g);
    const BigInt den = powers.get(2 * k - (spec.n + spec.m)).at(spec.anchor_i, spec.anchor_j);
    if (den == 0)
        throw undefined_measure("empirical measure undefined: h^k is empty");
    const BigInt num = powers.get(k - (spec.n + l)).at(spec.anchor_i, e.src_anchor) *
                       powers.get(k - (spec.m + l)).at(e.dst_anchor, spec.anchor_j);
    return make_rat(num, den);
}

ConvergenceSeries ratio_and_entropy_series(const Graph& g, const PerronData& pd,
                                           const HeteroSpec& spec, std::int64_t k_max) {
    if (k_max < 1) throw validation_error("ratio_and_entropy_series: k_max must be >= 1");
    ConvergenceSeries series;
    const double mu_u = std::pow(pd.lambda, -static_cast<double>(spec.n)) * pd.u_r[spec.anchor_i];
    const double mu_s = std::pow(pd.lambda, -static_cast<double>(spec.m)) * pd.u_l[spec.anchor_j];
    series.target = mu_u * mu_s;
    series.entropy = std::log(pd.lambda);
    PowerCache powers(g);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t len = 2 * k - (spec.n + spec.m);
        if (len < 0) continue;
        SeriesRow row;
        row.k = k;
        row.count = powers.get(len).at(spec.anchor_i, spec.anchor_j);
        row.scaled = scaled_count(row.count, pd.lambda, 2 * k);
        row.target = series.target;
        row.abs_err = std::abs(row.scaled - row.target);
        if (row.count > 0) row.entropy_est = log_big(row.count) / static_cast<double>(2 * k);
        series.rows.push_back(std::move(row));
    }
    return series;
}

HeteroFamily make_hetero_family(const Graph& g, std::vector<RayCylinder> unstable,
                                std::vector<RayCylinder> stable) {
    (void)g;
    if (unstable.empty() || stable.empty())
        throw validation_error("hetero family needs at least one ray per side");
    for (const auto& r : unstable)
        if (r.side != RaySide::unstable)
            throw validation_error("hetero family: wrong side in unstable list");
    for (const auto& r : stable)
        if (r.side != RaySide::stable)
            throw validation_error("hetero family: wrong side in stable list");
    for (std::size_t a = 0; a < unstable.size(); ++a)
        for (std::size_t b = a + 1; b < unstable.size(); ++b)
            if (agree_on_past(unstable[a].base, unstable[b].base,
                              std::min(unstable[a].parameter, unstable[b].parameter)))
                throw validation_error("hetero family: unstable rays are not disjoint");
    for (std::size_t a = 0; a < stable.size(); ++a)
        for (std::size_t b = a + 1; b < stable.size(); ++b)
            if (agree_on_future(stable[a].base, stable[b].base,
                                std::max(-stable[a].parameter + 1, -stable[b].parameter + 1)))
                throw validation_error("hetero family: stable rays are not disjoint");
    return HeteroFamily{std::move(unstable), std::move(stable)};
}

HeteroFamily family_of(const HeteroSpec& spec, const Graph& g) {
    return HeteroFamily{{make_ray_cylinder(g, RaySide::unstable, spec.x, spec.n)},
                        {make_ray_cylinder(g, RaySide::stable, spec.y, spec.m)}};
}

BigInt family_count(const Graph& g, const HeteroFamily& fam, std::int64_t k) {
    PowerCache powers(g);
    BigInt total = 0;
    for (const auto& b : fam.unstable)
        for (const auto& c : fam.stable) {
            const std::int64_t len = 2 * k - (b.parameter + c.parameter);
            if (len < 0)
                throw validation_error("family_count: negative middle path length");
            total += powers.get(len).at(b.anchor, c.anchor);
        }
    return total;
}

WeakStarReport weak_star_report(const Graph& g, const PerronData& pd, const HeteroFamily& fam,
                                std::int64_t k, int l_max) {
    if (l_max < 1) throw validation_error("weak_star_report: l_max must be >= 1");
    std::int64_t max_param = 0;
    for (const auto& b : fam.unstable) max_param = std::max(max_param, b.parameter);
    for (const auto& c : fam.stable) max_param = std::max(max_param, c.parameter);
    if (k < max_param + l_max)
        throw validation_error("weak_star_report: requires k >= max parameter + l_max");

    PowerCache powers(g);
    BigInt den = 0;
    for (const auto& b : fam.unstable)
        for (const auto& c : fam.stable)
            den += powers.get(2 * k - (b.parameter + c.parameter)).at(b.anchor, c.anchor);
    if (den == 0) throw undefined_measure("weak_star_report: h^k is empty");

    WeakStarReport rep;
    rep.k = k;
    rep.count = den;
    for (int l = 1; l <= l_max; ++l) {
        for (auto& e : all_cylinders(g, l)) {
            BigInt num = 0;
            for (const auto& b : fam.unstable)
                for (const auto& c : fam.stable)
                    num += powers.get(k - (b.parameter + l)).at(b.anchor, e.src_anchor) *
                           powers.get(k - (c.parameter + l)).at(e.dst_anchor, c.anchor);
            WeakStarRow row;
            row.empirical = make_rat(num, den);
            row.empirical_value = row.empirical.get_d();
            row.parry = centered_cylinder_mass(g, pd, e).value;
            row.abs_err = std::abs(row.empirical_value - row.parry);
            row.cylinder = std::move(e);
            rep.sup_dev = std::max(rep.sup_dev, row.abs_err);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

WeakStarReport weak_star_report(const Graph& g, const PerronData& pd, const HeteroSpec& spec,
                                std::int64_t k, int l_max) {
    return weak_star_report(g, pd, family_of(spec, g), k, l_max);
}

int point_component(const Graph& g, const SpectralDecomposition& decomp, const ShiftPoint& z) {
    if (!decomp.irreducible)
        throw validation_error("point_component: graph is not irreducible");
    return decomp.class_of[g.target(coordinate(z, 0))];
}

IrreducibleCount irreducible_hetero_count(const Graph& g, const HeteroSpec& spec,
                                          std::int64_t k, const SpectralDecomposition& decomp) {
    if (!decomp.irreducible)
        throw validation_error("irreducible_hetero_count: graph is not irreducible");
    if (point_component(g, decomp, spec.x) != point_component(g, decomp, spec.y))
        throw validation_error("irreducible_hetero_count: x and y lie in different components");
    const std::int64_t len = 2 * k * decomp.period - (spec.n + spec.m);
    if (len < 0) throw validation_error("irreducible_hetero_count: negative middle path length");
    IrreducibleCount out;
    out.period = decomp.period;
    out.piece = adjacency_power(g, len).at(spec.anchor_i, spec.anchor_j);
    out.total = out.piece * decomp.period;
    return out;
}

double component_ray_mass_product(const Graph& g, const SpectralDecomposition& decomp,
                                  const HeteroSpec& spec) {
    const int period = decomp.period;
    const int comp = point_component(g, decomp, spec.x);
    if (comp != point_component(g, decomp, spec.y))
        throw validation_error("component_ray_mass_product: components mismatch");

    const Graph rec = power_recode(g, period, comp);
    const PerronData rec_pd = compute_perron(rec);

    // Unstable ray decomposed into component-level rays: extend the pinned
    // past to the next multiple of I by every path of the deficit length.
    const std::int64_t n_up = period * ceil_div(spec.n, period);
    const std::int64_t du = n_up - spec.n;
    double mu_u = 0.0;
    auto dfs_u = [&](auto&& self, VertexIndex v, std::int64_t depth) -> void {
        if (depth == du) {
            mu_u += rec_pd.u_r[rec.vertex_index(g.vertex_id(v))];
            return;
        }
        for (EdgeIndex e : g.out_edges(v)) self(self, g.target(e), depth + 1);
    };
    dfs_u(dfs_u, spec.anchor_i, 0);
    mu_u *= std::pow(rec_pd.lambda, -static_cast<double>(n_up / period));

    const std::int64_t m_up = period * ceil_div(spec.m, period);
    const std::int64_t ds = m_up - spec.m;
    double mu_s = 0.0;
    auto dfs_s = [&](auto&& self, VertexIndex v, std::int64_t depth) -> void {
        if (depth == ds) {
            mu_s += rec_pd.u_l[rec.vertex_index(g.vertex_id(v))];
            return;
        }
        for (EdgeIndex e : g.in_edges(v)) self(self, g.source(e), depth + 1);
    };
    dfs_s(dfs_s, spec.anchor_j, 0);
    mu_s *= std::pow(rec_pd.lambda, -static_cast<double>(m_up / period));

    return mu_u * mu_s;
}

IrreducibleSeries irreducible_ratio_series(const Graph& g, const PerronData& pd,
                                           const HeteroSpec& spec, std::int64_t k_max,
                                           const SpectralDecomposition& decomp) {
    if (k_max < 1) throw validation_error("irreducible_ratio_series: k_max must be >= 1");
    const int period = decomp.period;
    IrreducibleSeries series;
    series.period = period;
    series.target_component =
        period * component_ray_mass_product(g, decomp, spec);
    series.target_xlevel = period *
                           std::pow(pd.lambda, -static_cast<double>(spec.n + spec.m)) *
                           pd.u_r[spec.anchor_i] * pd.u_l[spec.anchor_j];
    PowerCache powers(g);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t len = 2 * k * period - (spec.n + spec.m);
        if (len < 0) continue;
        IrreducibleSeriesRow row;
        row.k = k;
        row.total = powers.get(len).at(spec.anchor_i, spec.anchor_j) * period;
        row.scaled = scaled_count(row.total, pd.lambda, 2 * k * period);
        row.target_component = series.target_component;
        row.target_xlevel = series.target_xlevel;
        row.abs_err = std::abs(row.scaled - row.target_component);
        if (row.total > 0)
            row.entropy_est = log_big(row.total) / static_cast<double>(2 * k * period);
        series.rows.push_back(std::move(row));
    }
    return series;
}

IrreducibleWeakStarReport irreducible_weak_star_report(const Graph& g, const PerronData& pd,
                                                       const HeteroSpec& spec, std::int64_t k,
                                                       int l_max,
                                                       const SpectralDecomposition& decomp) {
    if (l_max < 1) throw validation_error("irreducible_weak_star_report: l_max must be >= 1");
    const int period = decomp.period;
    if (point_component(g, decomp, spec.x) != point_component(g, decomp, spec.y))
        throw validation_error("irreducible_weak_star_report: components mismatch");
    const std::int64_t ki = k * period;
    if (ki < spec.n + l_max || ki - (period - 1) < spec.m + l_max)
        throw validation_error("irreducible_weak_star_report: k too small for l_max");

    PowerCache powers(g);
    const BigInt piece = powers.get(2 * ki - (spec.n + spec.m)).at(spec.anchor_i, spec.anchor_j);
    if (piece == 0) throw undefined_measure("irreducible_weak_star_report: empty pieces");
    const BigInt den = piece * period;

    IrreducibleWeakStarReport rep;
    rep.k = k;
    rep.total = den;
    for (int i = 0; i < period; ++i) rep.piece_weights.push_back(make_rat(piece, den));

    for (int l = 1; l <= l_max; ++l) {
        for (auto& e : all_cylinders(g, l)) {
            BigInt num = 0;
            for (int i = 0; i < period; ++i)
                num += powers.get(ki + i - (spec.n + l)).at(spec.anchor_i, e.src_anchor) *
                       powers.get(ki - i - (spec.m + l)).at(e.dst_anchor, spec.anchor_j);
            WeakStarRow row;
            row.empirical = make_rat(num, den);
            row.empirical_value = row.empirical.get_d();
            row.parry = centered_cylinder_mass(g, pd, e).value;
            row.abs_err = std::abs(row.empirical_value - row.parry);
            row.cylinder = std::move(e);
            rep.sup_dev = std::max(rep.sup_dev, row.abs_err);
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

} // namespace sft
