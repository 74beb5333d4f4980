#pragma once

#include "sft/heteroclinic.hpp"

#include <cstdint>
#include <vector>

namespace sft {

/// One periodic point: z_t = word[t mod p], least period p = |word|. The
/// word is a primitive closed path; rotations are distinct points of the
/// same orbit and get their own entries.
struct PeriodicPoint {
    std::vector<EdgeIndex> word;
};

struct PeriodicEnsemble {
    std::int64_t n = 0;
    std::vector<PeriodicPoint> points;
    BigInt total;                              // == points.size()
    std::vector<BigInt> least_period_counts;   // index p = 1..n
};

/// All points of least period <= n, by explicit enumeration of primitive
/// closed paths. The trace-based size estimate must not exceed `cap`.
PeriodicEnsemble enumerate_periodic(const Graph& g, std::int64_t n, std::uint64_t cap);

/// Count-only census of least-period-p points for p = 1..n (same DFS, no
/// storage).
std::vector<BigInt> periodic_census(const Graph& g, std::int64_t n);

/// Moebius/trace cross-check:  sum_{p<=n} sum_{d|p} moebius(d) trace(A^{p/d}).
BigInt mobius_trace_total(const Graph& g, std::int64_t n);

/// mu_n(E): fraction of ensemble points whose window [-l+1, l] matches the
/// cylinder word, as an exact rational.
BigRat periodic_measure_mass(const PeriodicEnsemble& ens, const CenteredCylinder& e);

/// Fraction matching `word` placed at positions first_pos, first_pos+1, ...
BigRat periodic_window_mass(const PeriodicEnsemble& ens, std::span<const EdgeIndex> word,
                            std::int64_t first_pos);

struct CompareRow {
    CenteredCylinder cylinder;
    BigRat mu_periodic;
    BigRat mu_hetero;
    double parry = 0.0;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    double sup_periodic_vs_parry = 0.0;
    double sup_hetero_vs_parry = 0.0;
    double sup_periodic_vs_hetero = 0.0;
};

/// Side-by-side table of the periodic-point measure, the heteroclinic
/// empirical measure at k, and the Parry measure over all cylinders of
/// halfwidth <= l_max. Requires k >= max(n, m) + l_max.
CompareReport compare_constructions(const Graph& g, const PerronData& pd, const HeteroSpec& spec,
                                    std::int64_t k, const PeriodicEnsemble& ens, int l_max);

} // namespace sft
