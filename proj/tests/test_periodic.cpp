#include <doctest.h>

#include <sft/periodic.hpp>

#include "support/oracles.hpp"

#include <cmath>

using namespace sft;

TEST_CASE("small ensembles") {
    SUBCASE("golden mean n=2 has three points") {
        const auto ens = enumerate_periodic(oracle::golden_mean(), 2, 1000);
        CHECK(ens.total == 3);
        CHECK(ens.least_period_counts[1] == 1); // a^inf
        CHECK(ens.least_period_counts[2] == 2); // (bc)^inf in two phases
    }
    SUBCASE("full 2-shift n=1 has the two fixed points") {
        const auto ens = enumerate_periodic(oracle::full_two_shift(), 1, 1000);
        CHECK(ens.total == 2);
    }
    SUBCASE("golden mean #S_4 = 10") {
        const auto ens = enumerate_periodic(oracle::golden_mean(), 4, 1000);
        CHECK(ens.total == 10);
        CHECK(ens.least_period_counts[3] == 3);
        CHECK(ens.least_period_counts[4] == 4);
    }
    SUBCASE("every stored word is primitive and path-consistent") {
        const auto ens = enumerate_periodic(oracle::golden_mean(), 6, 10000);
        const Graph g = oracle::golden_mean();
        for (const auto& pt : ens.points) {
            CHECK(g.is_path(pt.word));
            CHECK(g.target(pt.word.back()) == g.source(pt.word.front()));
            for (std::size_t d = 1; d < pt.word.size(); ++d) {
                if (pt.word.size() % d != 0) continue;
                bool repeats = true;
                for (std::size_t t = d; t < pt.word.size() && repeats; ++t)
                    if (pt.word[t] != pt.word[t % d]) repeats = false;
                CHECK_FALSE(repeats);
            }
        }
    }
    SUBCASE("cap applies to the trace estimate") {
        CHECK_THROWS_AS(enumerate_periodic(oracle::golden_mean(), 25, 1000), cap_exceeded);
    }
}

TEST_CASE("ensemble totals match the Moebius/trace formula exactly") {
    for (const Graph& g : {oracle::golden_mean(), oracle::period_two(),
                           oracle::full_two_shift(),
                           oracle::random_strongly_connected(23, 4, 7)}) {
        const std::int64_t n_max = g.edge_count() > 6 ? 12 : 20;
        const auto census = periodic_census(g, n_max);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            BigInt total = 0;
            for (std::int64_t p = 1; p <= n; ++p) total += census[p];
            CHECK(total == mobius_trace_total(g, n));
        }
    }
}

TEST_CASE("periodic measure masses") {
    SUBCASE("full 2-shift n=2, E = 01 has mass 1/4") {
        const Graph g = oracle::full_two_shift();
        const auto ens = enumerate_periodic(g, 2, 1000);
        CHECK(ens.total == 4);
        CHECK(periodic_measure_mass(ens, make_centered_cylinder(g, {"0", "1"})) ==
              BigRat(1, 4));
    }
    SUBCASE("golden mean n=2, E = [a,a] has mass 1/3") {
        const Graph g = oracle::golden_mean();
        const auto ens = enumerate_periodic(g, 2, 1000);
        CHECK(periodic_measure_mass(ens, make_centered_cylinder(g, {"a", "a"})) ==
              BigRat(1, 3));
    }
    SUBCASE("inconsistent words cannot form cylinders at all") {
        const Graph g = oracle::golden_mean();
        CHECK_THROWS_AS(make_centered_cylinder(g, {"b", "b"}), validation_error);
    }
}

TEST_CASE("mu_n is exactly sigma-invariant") {
    const Graph g = oracle::golden_mean();
    const auto ens = enumerate_periodic(g, 8, 10000);
    for (int l = 1; l <= 2; ++l)
        for (const auto& e : all_cylinders(g, l)) {
            const BigRat direct = periodic_measure_mass(ens, e);
            // sigma^{-1} E pins the same word one position to the right
            const BigRat shifted = periodic_window_mass(ens, e.word, -l + 2);
            CHECK(direct == shifted);
        }
}

TEST_CASE("window sums to one") {
    const Graph g = oracle::golden_mean();
    const auto ens = enumerate_periodic(g, 10, 100000);
    for (int l = 1; l <= 3; ++l) {
        BigRat total(0);
        for (const auto& e : all_cylinders(g, l)) total += periodic_measure_mass(ens, e);
        CHECK(total == BigRat(1));
    }
}

TEST_CASE("compare_constructions") {
    SUBCASE("full 2-shift: exact columns, small periodic deviation") {
        const Graph g = oracle::full_two_shift();
        const PerronData pd = compute_perron(g);
        const ShiftPoint z = make_point(g, {"0"}, {}, {"0"}, 0);
        const auto ens = enumerate_periodic(g, 8, 100000);
        const auto rep = compare_constructions(g, pd, make_hetero_spec(g, z, z, 0, 0), 8,
                                               ens, 2);
        CHECK(rep.sup_hetero_vs_parry == 0.0);
        CHECK(rep.sup_periodic_vs_parry < 0.05);
    }
    SUBCASE("degenerate window request is rejected") {
        const Graph g = oracle::golden_mean();
        const PerronData pd = compute_perron(g);
        const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
        const auto ens = enumerate_periodic(g, 4, 1000);
        CHECK_THROWS_AS(
            compare_constructions(g, pd, make_hetero_spec(g, a, a, 0, 0), 2, ens, 3),
            validation_error);
    }
}

TEST_CASE("golden mean n=25: the ensemble approximates the Parry measure") {
    const Graph g = oracle::golden_mean();
    const PerronData pd = compute_perron(g);
    const auto ens = enumerate_periodic(g, 25, 1000000);
    // all points of least period <= 25; contains the 167761 points fixed by
    // sigma^25 plus the shorter-period ones not dividing 25
    CHECK(ens.total == 438222);
    CHECK(ens.total == mobius_trace_total(g, 25));
    BigInt fixed_by_25 = 0;
    for (std::int64_t p = 1; p <= 25; ++p)
        if (25 % p == 0) fixed_by_25 += ens.least_period_counts[p];
    CHECK(fixed_by_25 == 167761);
    double sup = 0.0;
    for (int l = 1; l <= 2; ++l)
        for (const auto& e : all_cylinders(g, l))
            sup = std::max(sup, std::abs(periodic_measure_mass(ens, e).get_d() -
                                         centered_cylinder_mass(g, pd, e).value));
    CHECK(sup < 1e-2);
}
