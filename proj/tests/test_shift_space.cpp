#include <doctest.h>

#include <sft/shift_space.hpp>

#include "support/oracles.hpp"

#include <random>

using namespace sft;

namespace {

ShiftPoint golden_a_fixed(const Graph& g) { return make_point(g, {"a"}, {}, {"a"}, 0); }

// (bc)^infinity with z_0 = b.
ShiftPoint golden_bc(const Graph& g) { return make_point(g, {"b", "c"}, {}, {"b", "c"}, 0); }

// (bc)^infinity with z_0 = c.
ShiftPoint golden_cb(const Graph& g) { return make_point(g, {"c", "b"}, {}, {"c", "b"}, 0); }

} // namespace

TEST_CASE("make_point validates junctions and closures") {
    const Graph g = oracle::golden_mean();
    CHECK_NOTHROW(golden_a_fixed(g));
    CHECK_NOTHROW(golden_bc(g));
    // b:1->2 cannot follow b
    CHECK_THROWS_AS(make_point(g, {"a"}, {"b", "b"}, {"a"}, 1), validation_error);
    // left cycle does not close
    CHECK_THROWS_AS(make_point(g, {"b"}, {}, {"a"}, 0), validation_error);
    CHECK_THROWS_AS(make_point(g, {}, {}, {"a"}, 0), validation_error);
}

TEST_CASE("coordinate reads the representation") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint bc = golden_bc(g);
    CHECK(g.edge(coordinate(bc, 0)).id == "b");
    CHECK(g.edge(coordinate(bc, 3)).id == "c");
    CHECK(g.edge(coordinate(bc, -1)).id == "c");
    CHECK(g.edge(coordinate(bc, -2)).id == "b");

    const ShiftPoint a = golden_a_fixed(g);
    CHECK(g.edge(coordinate(a, -1000000)).id == "a");

    const ShiftPoint with_core = make_point(g, {"a"}, {"b"}, {"c", "b"}, 0);
    CHECK(g.edge(coordinate(with_core, 0)).id == "b");
    CHECK(g.edge(coordinate(with_core, 1)).id == "c");
    CHECK(g.edge(coordinate(with_core, -1)).id == "a");
}

TEST_CASE("shift_point acts by sigma") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint a = golden_a_fixed(g);
    CHECK(points_equal(shift_point(a, 5), a));

    const ShiftPoint bc = golden_bc(g);
    const ShiftPoint shifted = shift_point(bc, 1);
    CHECK(g.edge(coordinate(shifted, 0)).id == "c");
    CHECK(points_equal(shifted, golden_cb(g)));

    for (std::int64_t s = -20; s <= 20; ++s) {
        CHECK(points_equal(shift_point(shift_point(bc, s), -s), bc));
        for (std::int64_t t = -5; t <= 5; ++t)
            CHECK(coordinate(shift_point(bc, s), t) == coordinate(bc, t + s));
    }
}

TEST_CASE("bracket combines past of y with future of x") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint a = golden_a_fixed(g);
    const ShiftPoint y_c = golden_cb(g); // y_0 = c, target vertex 1

    const auto z = bracket(g, a, y_c);
    REQUIRE(z.has_value());
    for (std::int64_t t = -30; t <= 0; ++t) CHECK(coordinate(*z, t) == coordinate(y_c, t));
    for (std::int64_t t = 1; t <= 30; ++t) CHECK(coordinate(*z, t) == coordinate(a, t));

    // idempotence on the diagonal
    const auto aa = bracket(g, a, a);
    REQUIRE(aa.has_value());
    CHECK(points_equal(*aa, a));

    // y_0 = b has target vertex 2, mismatching source(a) = 1
    CHECK_FALSE(bracket(g, a, golden_bc(g)).has_value());
}

TEST_CASE("random points: validation matches a direct window check") {
    const Graph g = oracle::golden_mean();
    std::mt19937_64 rng(2024);
    const auto points = oracle::sample_points(g, 6);
    int built = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto& lp = points[rng() % points.size()];
        const auto& rp = points[rng() % points.size()];
        // random core: a path sampled from coordinates of a third point
        const auto& mid = points[rng() % points.size()];
        const int core_len = static_cast<int>(rng() % 4);
        std::vector<EdgeIndex> core;
        const std::int64_t off = static_cast<std::int64_t>(rng() % 7) - 3;
        for (int t = 0; t < core_len; ++t) core.push_back(coordinate(mid, off + t));
        const std::int64_t cs = static_cast<std::int64_t>(rng() % 11) - 5;
        ShiftPoint candidate{lp.left_cycle, core, rp.right_cycle, cs};
        bool valid = true;
        try {
            candidate = make_point(g, ShiftPoint{lp.left_cycle, core, rp.right_cycle, cs});
        } catch (const validation_error&) {
            valid = false;
        }
        // direct coordinate-by-coordinate check on [-50, 50]
        bool window_ok = true;
        for (std::int64_t t = -50; t < 50; ++t)
            if (g.target(coordinate(candidate, t)) != g.source(coordinate(candidate, t + 1)))
                window_ok = false;
        CHECK(valid == window_ok);
        built += valid;
    }
    CHECK(built > 0);
}

TEST_CASE("centered cylinders and anchors") {
    const Graph g = oracle::golden_mean();
    const CenteredCylinder aa = make_centered_cylinder(g, {"a", "a"});
    CHECK(aa.halfwidth == 1);
    CHECK(g.vertex_id(aa.src_anchor) == "1");
    CHECK(g.vertex_id(aa.dst_anchor) == "1");

    CHECK_THROWS_AS(make_centered_cylinder(g, {"b", "b"}), validation_error);
    CHECK_THROWS_AS(make_centered_cylinder(g, {"a"}), validation_error);
    CHECK_THROWS_AS(make_centered_cylinder(g, std::vector<std::string>{}), validation_error);
}

TEST_CASE("ray cylinders and anchors") {
    const Graph g = oracle::golden_mean();
    const RayCylinder u0 = make_ray_cylinder(g, RaySide::unstable, golden_a_fixed(g), 0);
    CHECK(g.vertex_id(u0.anchor) == "1");

    // stable ray on (bc)^infinity with y_1 = c: anchor source(c) = 2
    const RayCylinder s0 = make_ray_cylinder(g, RaySide::stable, golden_bc(g), 0);
    CHECK(g.vertex_id(s0.anchor) == "2");
}

TEST_CASE("all_cylinders enumerates path words") {
    const Graph g = oracle::golden_mean();
    CHECK(all_cylinders(g, 1).size() == 5);                     // aa ab bc ca cb
    CHECK(all_cylinders(oracle::full_two_shift(), 1).size() == 4); // 00 01 10 11
}

TEST_CASE("product sets") {
    SUBCASE("full 2-shift, aligned rays cover the whole space") {
        const Graph g = oracle::full_two_shift();
        const ShiftPoint z = make_point(g, {"0"}, {}, {"0"}, 0);
        const auto p = product_set(g, make_ray_cylinder(g, RaySide::unstable, z, 0),
                                   make_ray_cylinder(g, RaySide::stable, z, 0));
        REQUIRE_FALSE(p.empty);
        CHECK(p.cylinders.size() == all_cylinders(g, 1).size());
    }
    SUBCASE("period-2 graph, junction vertex 2") {
        const Graph g = oracle::period_two();
        const ShiftPoint x = make_point(g, {"p", "r"}, {}, {"p", "r"}, 0);
        const auto p = product_set(g, make_ray_cylinder(g, RaySide::unstable, x, 0),
                                   make_ray_cylinder(g, RaySide::stable, x, 0));
        REQUIRE_FALSE(p.empty);
        CHECK(g.vertex_id(p.junction) == "2");
        CHECK(p.cylinders.size() == 4); // {p,q} x {r,s}
    }
    SUBCASE("mismatched junctions flag an empty set") {
        const Graph g = oracle::golden_mean();
        const auto b = make_ray_cylinder(g, RaySide::unstable, golden_a_fixed(g), 0);
        const auto c = make_ray_cylinder(g, RaySide::stable, golden_bc(g), 0);
        // b's junction is vertex 1, c's is vertex 2
        CHECK(product_set(g, b, c).empty);
    }
    SUBCASE("negative parameters are rejected") {
        const Graph g = oracle::golden_mean();
        const auto b = make_ray_cylinder(g, RaySide::unstable, golden_a_fixed(g), -1);
        const auto c = make_ray_cylinder(g, RaySide::stable, golden_a_fixed(g), 0);
        CHECK_THROWS_AS(product_set(g, b, c), validation_error);
    }
}

TEST_CASE("splice_point stitches three pieces") {
    const Graph g = oracle::golden_mean();
    const ShiftPoint bc = golden_cb(g);
    const ShiftPoint a = golden_a_fixed(g);
    // past of (cb)..., then edge b at position 1, then a^inf shifted so it
    // continues from vertex 2: b ends at 2, so right point must start with c.
    const ShiftPoint right = make_point(g, {"c", "b"}, {}, {"c", "b"}, 2);
    const std::vector<EdgeIndex> middle{g.edge_index("b")};
    const ShiftPoint z = splice_point(g, bc, 0, middle, right);
    for (std::int64_t t = -10; t <= 0; ++t) CHECK(coordinate(z, t) == coordinate(bc, t));
    CHECK(g.edge(coordinate(z, 1)).id == "b");
    for (std::int64_t t = 2; t <= 10; ++t) CHECK(coordinate(z, t) == coordinate(right, t));
    (void)a;
}
