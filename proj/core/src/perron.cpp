#include "sft/perron.hpp"

#include <cmath>
#include <stdexcept>

namespace sft {

namespace {

constexpr double kTol = 1e-14;
constexpr int kMaxIter = 100000;

using Vec = std::vector<double>;
using Mat = std::vector<Vec>; // row-major dense

Mat dense_adjacency(const Graph& g) {
    Mat a(g.vertex_count(), Vec(g.vertex_count(), 0.0));
    for (int e = 0; e < g.edge_count(); ++e) a[g.source(e)][g.target(e)] += 1.0;
    return a;
}

Vec mat_vec(const Mat& a, const Vec& v) {
    Vec out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Vec vec_mat(const Vec& v, const Mat& a) {
    Vec out(a.empty() ? 0 : a[0].size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * a[i][j];
    return out;
}

Mat mat_mat(const Mat& a, const Mat& b) {
    Mat out(a.size(), Vec(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

// Sum-normalized power iteration; returns the eigenvalue estimate and leaves
// the eigenvector in v.
double iterate(const Mat& a, Vec& v, bool left) {
    double lambda = 0.0;
    v.assign(left ? a[0].size() : a.size(), 1.0 / static_cast<double>(a.size()));
    for (int it = 0; it < kMaxIter; ++it) {
        Vec w = left ? vec_mat(v, a) : mat_vec(a, v);
        double s = 0.0;
        for (double x : w) s += x;
        if (s <= 0.0) throw validation_error("power iteration collapsed (degenerate input)");
        for (double& x : w) x /= s;
        double diff = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) diff = std::max(diff, std::abs(w[i] - v[i]));
        v = std::move(w);
        lambda = s;
        if (diff < kTol) return lambda;
    }
    throw validation_error("power iteration did not converge (reducible or degenerate input)");
}

} // namespace

PerronData compute_perron(const Graph& g) {
    const SpectralDecomposition d = structure_analysis(g);
    if (!d.irreducible) throw validation_error("compute_perron: graph is not irreducible");

    const int n = g.vertex_count();
    const int period = d.period;
    PerronData pd;
    pd.u_r.assign(n, 0.0);
    pd.u_l.assign(n, 0.0);

    if (period == 1) {
        const Mat a = dense_adjacency(g);
        Vec r, l;
        const double lam_r = iterate(a, r, false);
        iterate(a, l, true);
        pd.lambda = lam_r;
        pd.u_r = std::move(r);
        pd.u_l = std::move(l);
    } else {
        // Plain iteration oscillates for period I > 1. Iterate the primitive
        // class-0 block of A^I, then propagate through the blocks
        // B_t : class t+1 -> class t vectors, using v_t = B_t v_{t+1} / lambda.
        std::vector<Mat> blocks(period);
        for (int t = 0; t < period; ++t) {
            const auto& rows = d.cyclic_classes[t];
            const auto& cols = d.cyclic_classes[(t + 1) % period];
            blocks[t].assign(rows.size(), Vec(cols.size(), 0.0));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (EdgeIndex e : g.out_edges(rows[i]))
                    for (std::size_t j = 0; j < cols.size(); ++j)
                        if (g.target(e) == cols[j]) blocks[t][i][j] += 1.0;
        }
        Mat m0 = blocks[0];
        for (int t = 1; t < period; ++t) m0 = mat_mat(m0, blocks[t]);

        Vec v0, w0;
        const double big = iterate(m0, v0, false);
        iterate(m0, w0, true);
        pd.lambda = std::pow(big, 1.0 / period);

        std::vector<Vec> v(period), w(period);
        v[0] = v0;
        for (int t = period - 1; t >= 1; --t) {
            const Vec& next = (t == period - 1) ? v[0] : v[t + 1];
            v[t] = mat_vec(blocks[t], next);
            for (double& x : v[t]) x /= pd.lambda;
        }
        w[0] = w0;
        for (int t = 0; t + 1 < period; ++t) {
            w[t + 1] = vec_mat(w[t], blocks[t]);
            for (double& x : w[t + 1]) x /= pd.lambda;
        }
        for (int t = 0; t < period; ++t)
            for (std::size_t i = 0; i < d.cyclic_classes[t].size(); ++i) {
                pd.u_r[d.cyclic_classes[t][i]] = v[t][i];
                pd.u_l[d.cyclic_classes[t][i]] = w[t][i];
            }
    }

    double sum = 0.0;
    for (double x : pd.u_r) sum += x;
    for (double& x : pd.u_r) x /= sum;
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += pd.u_l[i] * pd.u_r[i];
    for (double& x : pd.u_l) x /= dot;

    pd.projection.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pd.projection[static_cast<std::size_t>(i) * n + j] = pd.u_r[i] * pd.u_l[j];

    // Residual sanity check against the exact adjacency action.
    const Mat a = dense_adjacency(g);
    const Vec ar = mat_vec(a, pd.u_r);
    const Vec la = vec_mat(pd.u_l, a);
    for (int i = 0; i < n; ++i) {
        if (std::abs(ar[i] - pd.lambda * pd.u_r[i]) > 1e-9 * pd.lambda ||
            std::abs(la[i] - pd.lambda * pd.u_l[i]) > 1e-9 * pd.lambda)
            throw validation_error("compute_perron: eigendata residual too large");
    }
    return pd;
}

double entropy(const Graph& g) { return std::log(compute_perron(g).lambda); }

} // namespace sft
