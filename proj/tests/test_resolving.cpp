#include <doctest.h>

#include <sft/resolving.hpp>

#include "support/oracles.hpp"

#include <cmath>

using namespace sft;

namespace {

OneBlockCode identity_code(const Graph& g) {
    std::map<std::string, std::string> m;
    for (int e = 0; e < g.edge_count(); ++e) m[g.edge(e).id] = g.edge(e).id;
    return validate_code(g, g, m);
}

// Two disjoint copies of the golden mean mapped onto one.
OneBlockCode doubling_code() {
    const Graph domain = make_graph({"1", "2", "1x", "2x"},
                                    {{"a", "1", "1"},
                                     {"b", "1", "2"},
                                     {"c", "2", "1"},
                                     {"ax", "1x", "1x"},
                                     {"bx", "1x", "2x"},
                                     {"cx", "2x", "1x"}});
    return validate_code(domain, oracle::golden_mean(),
                         {{"a", "a"},
                          {"b", "b"},
                          {"c", "c"},
                          {"ax", "a"},
                          {"bx", "b"},
                          {"cx", "c"}});
}

// Entropy-collapsing code onto the one-loop graph.
OneBlockCode collapse_code() {
    const Graph loop = make_graph({"v"}, {{"l", "v", "v"}});
    return validate_code(oracle::golden_mean(), loop, {{"a", "l"}, {"b", "l"}, {"c", "l"}});
}

// Fibonacci coding golden mean -> full 2-shift (a,c -> 0, b -> 1); the word
// "11" has no preimage.
OneBlockCode fibonacci_code() {
    return validate_code(oracle::golden_mean(), oracle::full_two_shift(),
                         {{"a", "0"}, {"b", "1"}, {"c", "0"}});
}

} // namespace

TEST_CASE("code validation") {
    const Graph g = oracle::golden_mean();
    SUBCASE("higher-block and identity codes are valid") {
        CHECK_NOTHROW(make_higher_block_code(g));
        CHECK_NOTHROW(identity_code(g));
    }
    SUBCASE("collapsing map is a valid code onto the 1-loop graph") {
        CHECK_NOTHROW(collapse_code());
    }
    SUBCASE("missing surjectivity is rejected") {
        const Graph two_loops = oracle::full_two_shift();
        CHECK_THROWS_AS(
            validate_code(g, two_loops, {{"a", "0"}, {"b", "0"}, {"c", "0"}}),
            validation_error);
    }
    SUBCASE("source/target incompatibility is rejected") {
        // b: 1->2 mapped to a loop while a: 1->1 maps identically
        CHECK_THROWS_AS(validate_code(g, g, {{"a", "a"}, {"b", "a"}, {"c", "c"}}),
                        validation_error);
    }
    SUBCASE("partial maps are rejected") {
        CHECK_THROWS_AS(validate_code(g, g, {{"a", "a"}}), validation_error);
    }
}

TEST_CASE("resolving types") {
    const Graph g = oracle::golden_mean();
    SUBCASE("(e,f) -> f is right-resolving only") {
        const auto rt = resolving_type(make_higher_block_code(g));
        CHECK(rt.right_resolving);
        CHECK_FALSE(rt.left_resolving);
    }
    SUBCASE("(e,f) -> e is left-resolving only") {
        const Graph hb = higher_block_graph(g);
        std::map<std::string, std::string> m;
        for (int e = 0; e < hb.edge_count(); ++e)
            m[hb.edge(e).id] = g.edge(hb.source(e)).id; // vertex ids of hb are edge ids of g
        const auto rt = resolving_type(validate_code(hb, g, m));
        CHECK(rt.left_resolving);
        CHECK_FALSE(rt.right_resolving);
    }
    SUBCASE("the identity is both") {
        const auto rt = resolving_type(identity_code(g));
        CHECK(rt.left_resolving);
        CHECK(rt.right_resolving);
    }
}

TEST_CASE("cylinder preimages") {
    const Graph g = oracle::golden_mean();
    SUBCASE("identity gives the cylinder back") {
        const auto code = identity_code(g);
        const auto pre = cylinder_preimage(code, make_centered_cylinder(g, {"a", "a"}));
        REQUIRE(pre.size() == 1);
        CHECK(g.word_string(pre[0].word) == "a,a");
    }
    SUBCASE("higher-block preimage of [a,a]") {
        const auto code = make_higher_block_code(g);
        const auto pre = cylinder_preimage(code, make_centered_cylinder(g, {"a", "a"}));
        REQUIRE(pre.size() == 2);
        CHECK(code.domain.word_string(pre[0].word) == "(a,a),(a,a)");
        CHECK(code.domain.word_string(pre[1].word) == "(c,a),(a,a)");
    }
    SUBCASE("word with empty preimage under the Fibonacci coding") {
        const auto code = fibonacci_code();
        const auto pre = cylinder_preimage(
            code, make_centered_cylinder(code.codomain, {"1", "1"}));
        CHECK(pre.empty());
    }
}

TEST_CASE("pushforward of the Parry measure") {
    const Graph g = oracle::golden_mean();
    SUBCASE("identity: zero deviation") {
        const auto code = identity_code(g);
        const PerronData pd = compute_perron(g);
        for (const auto& e : all_cylinders(g, 2))
            CHECK(pushforward_check(code, pd, pd, e).abs_err == 0.0);
    }
    SUBCASE("higher-block conjugacy preserves cylinder masses") {
        const auto code = make_higher_block_code(g);
        const PerronData pdd = compute_perron(code.domain);
        const PerronData pdc = compute_perron(code.codomain);
        const auto row =
            pushforward_check(code, pdd, pdc, make_centered_cylinder(g, {"a", "a"}));
        CHECK(row.codomain_mass == doctest::Approx(0.2763932).epsilon(1e-6));
        CHECK(row.abs_err < 1e-10);
        double sup = 0.0;
        for (int l = 1; l <= 3; ++l)
            for (const auto& e : all_cylinders(g, l))
                sup = std::max(sup, pushforward_check(code, pdd, pdc, e).abs_err);
        CHECK(sup < 1e-10);
    }
}

TEST_CASE("fiber decomposition of stable rays") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
    SUBCASE("identity: a single component") {
        const auto code = identity_code(g);
        const auto fd =
            fiber_decomposition(code, make_ray_cylinder(g, RaySide::stable, a, 0));
        CHECK(fd.components.size() == 1);
        CHECK(fd.bound == 1);
    }
    SUBCASE("higher-block, anchor vertex 1: components at a and c") {
        const auto code = make_higher_block_code(g);
        const auto fd =
            fiber_decomposition(code, make_ray_cylinder(g, RaySide::stable, a, 0));
        REQUIRE(fd.components.size() == 2);
        CHECK(fd.bound == 2);
        CHECK(code.domain.vertex_id(fd.components[0].anchor) == "a");
        CHECK(code.domain.vertex_id(fd.components[1].anchor) == "c");
        // components are pairwise disjoint: pinned futures differ at -m+1
        CHECK(coordinate(fd.components[0].base, 1) != coordinate(fd.components[1].base, 1));
        // each component maps letterwise onto the downstairs pins
        for (const auto& comp : fd.components)
            for (std::int64_t t = 1; t <= 12; ++t)
                CHECK(code.edge_map[coordinate(comp.base, t)] == coordinate(a, t));
    }
    SUBCASE("higher-block, anchor vertex 2: single component at b") {
        const auto code = make_higher_block_code(g);
        const ShiftPoint bc = make_point(g, {"b", "c"}, {}, {"b", "c"}, 0); // y_1 = c
        const auto fd =
            fiber_decomposition(code, make_ray_cylinder(g, RaySide::stable, bc, 0));
        REQUIRE(fd.components.size() == 1);
        CHECK(fd.bound == 1);
        CHECK(code.domain.vertex_id(fd.components[0].anchor) == "b");
    }
    SUBCASE("left-resolving-only codes are rejected") {
        const Graph hb = higher_block_graph(g);
        std::map<std::string, std::string> m;
        for (int e = 0; e < hb.edge_count(); ++e) m[hb.edge(e).id] = g.edge(hb.source(e)).id;
        const auto code = validate_code(hb, g, m);
        CHECK_THROWS_AS(
            fiber_decomposition(code, make_ray_cylinder(g, RaySide::stable, a, 0)),
            validation_error);
    }
}

TEST_CASE("stable-sum and unstable-lift transfer") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
    SUBCASE("identity: scale 1, zero deviation") {
        const auto code = identity_code(g);
        const PerronData pd = compute_perron(g);
        const auto s =
            pushforward_stable_sum(code, pd, pd, make_ray_cylinder(g, RaySide::stable, a, 0));
        CHECK(s.scale == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(s.abs_err < 1e-14);
        const auto u = pushforward_unstable_lift(code, pd, pd,
                                                 make_ray_cylinder(g, RaySide::unstable, a, 0));
        CHECK(u.abs_err < 1e-14);
    }
    SUBCASE("higher-block: calibrated identities match the reference values") {
        const auto code = make_higher_block_code(g);
        const PerronData pdd = compute_perron(code.domain);
        const PerronData pdc = compute_perron(code.codomain);
        const auto s =
            pushforward_stable_sum(code, pdd, pdc, make_ray_cylinder(g, RaySide::stable, a, 0));
        CHECK(s.pieces == 2);
        CHECK(s.codomain_mass == doctest::Approx(1.1708204).epsilon(1e-6));
        CHECK(s.abs_err < 1e-10);
        const auto u = pushforward_unstable_lift(code, pdd, pdc,
                                                 make_ray_cylinder(g, RaySide::unstable, a, 0));
        CHECK(u.pieces == 1);
        CHECK(u.codomain_mass == doctest::Approx(0.6180340).epsilon(1e-6));
        CHECK(u.abs_err < 1e-10);
    }
    SUBCASE("transfer holds across parameters and base points") {
        const auto code = make_higher_block_code(g);
        const PerronData pdd = compute_perron(code.domain);
        const PerronData pdc = compute_perron(code.codomain);
        const ShiftPoint bc = make_point(g, {"b", "c"}, {}, {"b", "c"}, 0);
        for (const ShiftPoint& base : {a, bc, shift_point(bc, 1)})
            for (std::int64_t par = 0; par <= 2; ++par) {
                const auto s = pushforward_stable_sum(
                    code, pdd, pdc, make_ray_cylinder(g, RaySide::stable, base, par));
                CHECK(s.abs_err < 1e-10);
                const auto u = pushforward_unstable_lift(
                    code, pdd, pdc, make_ray_cylinder(g, RaySide::unstable, base, par));
                CHECK(u.abs_err < 1e-10);
            }
    }
}

TEST_CASE("hetero counts transfer exactly through the code") {
    const Graph g = oracle::golden_mean();
    const auto code = make_higher_block_code(g);
    const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
    const ShiftPoint bc = make_point(g, {"b", "c"}, {}, {"b", "c"}, 0);
    for (const ShiftPoint& x : {a, bc})
        for (const ShiftPoint& y : {a, shift_point(bc, 1)})
            for (std::int64_t n = 0; n <= 2; ++n)
                for (std::int64_t m = 0; m <= 2; ++m) {
                    const auto b = make_ray_cylinder(g, RaySide::unstable, x, n);
                    const auto c = make_ray_cylinder(g, RaySide::stable, y, m);
                    const auto lifts = unstable_lifts(code, b);
                    REQUIRE(lifts.size() == 1);
                    const auto fd = fiber_decomposition(code, c);
                    CHECK(static_cast<int>(fd.components.size()) <= fd.bound);
                    const HeteroSpec down = make_hetero_spec(g, x, y, n, m);
                    for (std::int64_t k = 3; k <= 8; ++k) {
                        BigInt up_total = 0;
                        for (const auto& comp : fd.components)
                            up_total += hetero_count(
                                code.domain,
                                make_hetero_spec(code.domain, lifts[0].base, comp.base, n, m),
                                k);
                        CHECK(hetero_count(g, down, k) == up_total);
                    }
                }
}

TEST_CASE("almost one-to-one probe") {
    const Graph g = oracle::golden_mean();
    SUBCASE("identity: all fibers are singletons") {
        const auto probe = almost_one_to_one_probe(identity_code(g), 4, 100000);
        CHECK(probe.min_fiber == 1);
        CHECK(probe.almost_one_to_one_evidence);
        CHECK(probe.histogram.size() == 1);
        CHECK(probe.histogram.at(1) == probe.points_checked);
    }
    SUBCASE("higher-block conjugacy: all fibers are singletons") {
        const auto probe = almost_one_to_one_probe(make_higher_block_code(g), 4, 100000);
        CHECK(probe.min_fiber == 1);
        CHECK(probe.almost_one_to_one_evidence);
    }
    SUBCASE("doubling code: all fibers have two points") {
        const auto probe = almost_one_to_one_probe(doubling_code(), 4, 100000);
        CHECK(probe.min_fiber == 2);
        CHECK_FALSE(probe.almost_one_to_one_evidence);
        CHECK(probe.histogram.at(2) == probe.points_checked);
    }
    SUBCASE("entropy-collapsing code: fibers are infinite") {
        const auto probe = almost_one_to_one_probe(collapse_code(), 3, 100000);
        CHECK(probe.any_infinite);
        CHECK_FALSE(probe.almost_one_to_one_evidence);
    }
}
