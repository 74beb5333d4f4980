#pragma once

#include "sft/graph.hpp"

#include <vector>

namespace sft {

/// Perron-Frobenius eigendata of an irreducible adjacency matrix.
/// Normalization: entries of u_r sum to 1, then u_l is scaled so that
/// u_l . u_r == 1. `projection` is the rank-one limit matrix u_r u_l
/// (row-major).
struct PerronData {
    double lambda = 0.0;
    std::vector<double> u_r;
    std::vector<double> u_l;
    std::vector<double> projection;

    int dim() const noexcept { return static_cast<int>(u_r.size()); }
    double proj(int i, int j) const { return projection[static_cast<std::size_t>(i) * u_r.size() + j]; }
};

/// Power iteration with per-step sum normalization (successive-iterate max
/// difference < 1e-14, cap 100000 iterations). Period-I matrices are handled
/// by iterating the I-th power per cyclic class and reassembling, since plain
/// iteration oscillates.
PerronData compute_perron(const Graph& g);

/// Topological entropy of the edge shift, log(lambda).
double entropy(const Graph& g);

} // namespace sft
