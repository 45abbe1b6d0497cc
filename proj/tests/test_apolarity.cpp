#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lef;
using namespace lef::testing;

TEST_CASE("fat point systems") {
    const RingContext ctx(3);

    SECTION("three simple coordinate points on conics") {
        const FatPointScheme<Q> z(
            ctx, {{point(1, 0, 0), 1}, {point(0, 1, 0), 1}, {point(0, 0, 1), 1}});
        CHECK(fat_point_system_dim(z, 2) == 3);
    }
    SECTION("one point of multiplicity t+1 kills everything") {
        for (int t = 1; t <= 4; ++t) {
            const FatPointScheme<Q> z(ctx, {{point(2, 3, -1), t + 1}});
            CHECK(fat_point_system_dim(z, t) == 0);
        }
    }
    SECTION("the empty scheme imposes nothing") {
        const FatPointScheme<Q> z(ctx, {});
        CHECK(fat_point_system_dim(z, 3) == 10);
    }
    SECTION("duplicate points are rejected, not merged") {
        CHECK_THROWS_AS(FatPointScheme<Q>(ctx, {{point(1, 2, 3), 1},
                                                {point(2, 4, 6), 1}}),
                        input_error);
    }
    SECTION("dimension is non-increasing in any multiplicity") {
        Sampler sampler(808, 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto p1 = sampler.point_all_nonzero<Q>(3);
            const auto p2 = sampler.point_all_nonzero<Q>(3);
            if (p1 == p2) continue;
            const int t = 3 + trial % 3;
            long long prev = fat_point_system_dim(
                FatPointScheme<Q>(ctx, {{p1, 1}, {p2, 2}}), t);
            for (int m = 2; m <= t + 1; ++m) {
                const long long cur = fat_point_system_dim(
                    FatPointScheme<Q>(ctx, {{p1, m}, {p2, 2}}), t);
                CHECK(cur <= prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("Emsalem-Iarrobino duality on fixed ideals") {
    const RingContext ctx(3);

    SECTION("three coordinate squares at j = 2") {
        const auto rep = ei_duality_report(
            power_ideal_from({linear(1, 0, 0), linear(0, 1, 0), linear(0, 0, 1)}, 2),
            2);
        CHECK(rep.algebra_side == 3);
        CHECK(rep.fat_point_side == 3);
        CHECK(rep.holds());
    }
    SECTION("CHMN at j = 8: both sides are 33") {
        const auto rep = ei_duality_report(chmn_power_ideal(), 8);
        CHECK(rep.algebra_side == 33);
        CHECK(rep.fat_point_side == 33);
    }
    SECTION("a single power: one condition") {
        for (int d = 2; d <= 5; ++d) {
            const auto rep =
                ei_duality_report(power_ideal_from({linear(1, -2, 4)}, d), d);
            CHECK(rep.algebra_side == ctx.dim_of_degree(d) - 1);
            CHECK(rep.holds());
        }
    }
    SECTION("j below the largest exponent is rejected") {
        CHECK_THROWS_AS(ei_duality_check(chmn_power_ideal(), 7),
                        hypothesis_violation);
    }
}

TEST_CASE("Emsalem-Iarrobino duality on random power ideals") {
    Sampler sampler(1234, 1);
    const RingContext ctx(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + static_cast<int>(sampler.int_in(0, 7));
        auto lines = random_distinct_lines(sampler, r);
        std::vector<std::pair<LinearForm<Q>, int>> gens;
        int dmax = 1;
        for (auto& l : lines) {
            const int e = 1 + static_cast<int>(sampler.int_in(0, 4));
            dmax = std::max(dmax, e);
            gens.emplace_back(std::move(l), e);
        }
        const PowerIdeal<Q> ideal(ctx, std::move(gens));
        for (long long j = dmax; j <= dmax + 3; ++j)
            CHECK(ei_duality_check(ideal, j));
    }
}

TEST_CASE("unexpected curves") {
    const RingContext ctx(3);
    Sampler sampler(5150, 3);

    SECTION("three generic points admit no unexpected conic") {
        const auto z = FatPointScheme<Q>::reduced(
            ctx, {point(1, 1, 1), point(1, -2, 3), point(5, 1, -1)});
        const auto rep = unexpected_curve_check(z, 1, sampler);
        CHECK(rep.actual == rep.expected);
        CHECK_FALSE(rep.has_unexpected);
    }
    SECTION("generic configurations of 2d+1 points stay expected") {
        for (int d = 2; d <= 4; ++d) {
            const auto pts = duals_of(random_distinct_lines(sampler, 2 * d + 1));
            const auto z = FatPointScheme<Q>::reduced(ctx, pts);
            const auto rep = unexpected_curve_check(z, d - 1, sampler);
            CHECK_FALSE(rep.has_unexpected);
        }
    }
    SECTION("CHMN duals at j = 7: singular curves exist but are expected") {
        const auto z =
            FatPointScheme<Q>::reduced(ctx, duals_of(chmn_lines()));
        const auto rep = unexpected_curve_check(z, 7, sampler);
        CHECK(rep.expected == 5);
        CHECK(rep.actual == 5);
        CHECK_FALSE(rep.has_unexpected);
    }
    SECTION("j = 0 is the trivial boundary") {
        const auto z = FatPointScheme<Q>::reduced(
            ctx, {point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)});
        const auto rep = unexpected_curve_check(z, 0, sampler);
        CHECK_FALSE(rep.has_unexpected);
    }
}

TEST_CASE("N_minus equals the unexpected-curve count bound") {
    // the identity right before the corollary: for 2d+1 points, i=0, k=2,
    // N^-_s = max(h^0(I_Z(d)) - C(d,2), 0), with s the number of
    // 0-syzygies of the d-th powers
    Sampler sampler(17, 1);
    const RingContext ctx(3);
    for (int d = 2; d <= 8; ++d) {
        for (int rep_count = 0; rep_count < 4; ++rep_count) {
            std::vector<LinearForm<Q>> lines;
            if (rep_count % 2 == 0) {
                lines = random_distinct_lines(sampler, 2 * d + 1);
            } else {
                // plant d+2 collinear duals to force 0-syzygies
                lines = random_distinct_lines(sampler, d - 1);
                for (int j = 0; static_cast<int>(lines.size()) < 2 * d + 1; ++j) {
                    LinearForm<Q> cand({Q(0), Q(1), Q(j)});
                    bool fresh = true;
                    for (const auto& o : lines)
                        fresh = fresh &&
                                !(Point<Q>(o.coeffs) == Point<Q>(cand.coeffs));
                    if (fresh) lines.push_back(std::move(cand));
                }
            }
            const auto ideal = power_ideal_from(lines, d).as_equigenerated();
            const long long s = syzygy_dimension(ideal, 0);
            const auto ns = ns_triple(ctx, 2 * d + 1, 0, 2, d, s);
            const auto z = FatPointScheme<Q>::reduced(ctx, duals_of(lines));
            const long long h0 = fat_point_system_dim(z, d);
            CHECK(ns.n_minus == std::max(h0 - binomial_ll(d, 2), 0LL));
        }
    }
}

TEST_CASE("the three-way equivalence on explicit configurations") {
    Sampler sampler(90210, 3);

    SECTION("generic 2d+1 points, d = 3: all three routes say no") {
        const auto pts = duals_of(random_distinct_lines(sampler, 7));
        const auto rep = cor_unexp_equivalence(pts, 3, sampler);
        CHECK_FALSE(rep.unexpected_curve);
        CHECK_FALSE(rep.slp_fails);
        CHECK_FALSE(rep.laplace_positive);
        CHECK(rep.consistent());
    }
    SECTION("duals of the B3 reflection arrangement, d = 4: all three say yes") {
        const auto pts = duals_of(b3_lines());
        REQUIRE(max_aligned_points(pts) == 4); // <= d+1 = 5
        const auto rep = cor_unexp_equivalence(pts, 4, sampler);
        CHECK(rep.unexpected_curve);
        CHECK(rep.slp_fails);
        CHECK(rep.laplace_positive);
        CHECK(rep.consistent());
    }
    SECTION("d = 1 boundary: three non-collinear points") {
        const std::vector<Point<Q>> pts = {point(1, 0, 0), point(0, 1, 0),
                                           point(0, 0, 1)};
        const auto rep = cor_unexp_equivalence(pts, 1, sampler);
        CHECK_FALSE(rep.unexpected_curve);
        CHECK_FALSE(rep.slp_fails);
        CHECK_FALSE(rep.laplace_positive);
    }
    SECTION("too many aligned points violate the hypothesis") {
        std::vector<Point<Q>> pts;
        for (int j = 0; j <= 4; ++j) pts.push_back(point(0, 1, j)); // 5 aligned
        pts.push_back(point(1, 1, 1));
        pts.push_back(point(1, -1, 2));
        CHECK_THROWS_AS(cor_unexp_equivalence(pts, 3, sampler),
                        hypothesis_violation);
    }
}
