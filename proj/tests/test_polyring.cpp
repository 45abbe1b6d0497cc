#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lef;
using lef::testing::Q;
using lef::testing::linear;
using lef::testing::point;

TEST_CASE("graded piece dimensions and the negative-degree convention") {
    const RingContext ctx(3);
    CHECK(ctx.dim_of_degree(2) == 6);
    CHECK(ctx.monomial_basis(2).size() == 6);
    CHECK(ctx.monomial_basis(-1).empty());
    CHECK(ctx.dim_of_degree(-1) == 0);
    CHECK(ctx.monomial_basis(8).size() == 45); // r_8 in the plane
}

TEST_CASE("monomial counts match an iterative Pascal recurrence") {
    // pascal[v][t] = dim of degree-t monomials in v variables, built by
    // additions only: pascal[v][t] = pascal[v-1][t] + pascal[v][t-1]
    constexpr int max_vars = 4, max_deg = 12;
    long long pascal[max_vars + 1][max_deg + 1] = {};
    for (int t = 0; t <= max_deg; ++t) pascal[1][t] = 1;
    for (int v = 2; v <= max_vars; ++v) {
        pascal[v][0] = 1;
        for (int t = 1; t <= max_deg; ++t)
            pascal[v][t] = pascal[v - 1][t] + pascal[v][t - 1];
    }
    for (int v = 2; v <= max_vars; ++v) {
        const RingContext ctx(v);
        for (int t = 0; t <= max_deg; ++t) {
            CHECK(static_cast<long long>(ctx.monomial_basis(t).size()) ==
                  pascal[v][t]);
            CHECK(ctx.dim_of_degree(t) == pascal[v][t]);
        }
    }
}

TEST_CASE("index_of inverts the monomial enumeration") {
    for (int num_vars = 2; num_vars <= 4; ++num_vars) {
        const RingContext ctx(num_vars);
        for (int t = 0; t <= 7; ++t) {
            const auto basis = ctx.monomial_basis(t);
            for (std::size_t i = 0; i < basis.size(); ++i)
                CHECK(ctx.index_of(basis[i]) == i);
        }
    }
}

TEST_CASE("powers of linear forms expand multinomially") {
    const RingContext ctx(3);

    const auto x3 = power_of_linear(ctx, linear(1, 0, 0), 3);
    for (std::size_t i = 0; i < x3.coeffs.size(); ++i)
        CHECK(x3.coeffs[i] == (i == ctx.index_of({3, 0, 0}) ? Q(1) : Q(0)));

    const auto sq = power_of_linear(ctx, linear(1, 1, 0), 2);
    CHECK(sq.coeffs[ctx.index_of({2, 0, 0})] == Q(1));
    CHECK(sq.coeffs[ctx.index_of({1, 1, 0})] == Q(2));
    CHECK(sq.coeffs[ctx.index_of({0, 2, 0})] == Q(1));
    CHECK(sq.coeffs[ctx.index_of({0, 0, 2})] == Q(0));

    // (x + 2z)^8: the x^5 z^3 coefficient is C(8,3) 2^3 = 448
    const auto p8 = power_of_linear(ctx, linear(1, 0, 2), 8);
    CHECK(p8.coeffs[ctx.index_of({5, 0, 3})] == Q(448));
}

TEST_CASE("power_of_linear agrees with repeated multiplication") {
    const RingContext ctx(3);
    Sampler sampler(31, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto l = sampler.linear_form<Q>(3);
        const int d = 2 + trial % 4;
        HomogeneousForm<Q> iterated = linear_as_form(ctx, l);
        for (int j = 1; j < d; ++j)
            iterated = multiply(ctx, iterated, linear_as_form(ctx, l));
        const auto direct = power_of_linear(ctx, l, d);
        CHECK(direct.coeffs == iterated.coeffs);
    }
}

TEST_CASE("multiplication matrices") {
    const RingContext ctx(3);

    // multiplication by a scalar is the identity on each graded piece
    HomogeneousForm<Q> one(ctx, 0);
    one.coeffs[0] = Q(1);
    CHECK(multiplication_matrix(ctx, one, 2) == Matrix<Q>::identity(6));

    // n = 1: multiplication by x as the coefficient shift R_1 -> R_2
    const RingContext line(2);
    HomogeneousForm<Q> x(line, 1);
    x.coeffs[line.index_of({1, 0})] = Q(1);
    const auto shift = multiplication_matrix(line, x, 1);
    CHECK(shift.rows() == 3);
    CHECK(shift.cols() == 2);
    CHECK(rank(shift) == 2);

    // multiplication by xyz out of degree 0 picks the xyz coordinate
    HomogeneousForm<Q> xyz(ctx, 3);
    xyz.coeffs[ctx.index_of({1, 1, 1})] = Q(1);
    const auto col = multiplication_matrix(ctx, xyz, 0);
    CHECK(col.cols() == 1);
    CHECK(col.rows() == 10);
    for (std::size_t i = 0; i < col.rows(); ++i)
        CHECK(col(i, 0) == (i == ctx.index_of({1, 1, 1}) ? Q(1) : Q(0)));
}

TEST_CASE("multiplication matrices compose") {
    const RingContext ctx(3);
    Sampler sampler(77, 1);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = power_of_linear(ctx, sampler.linear_form<Q>(3), 1 + trial % 2);
        const auto g = power_of_linear(ctx, sampler.linear_form<Q>(3), 1);
        const int a = trial % 3;
        const auto lhs = matmul(multiplication_matrix(ctx, g, a + f.degree),
                                multiplication_matrix(ctx, f, a));
        const auto rhs = multiplication_matrix(ctx, multiply(ctx, f, g), a);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("vanishing conditions at a point") {
    const RingContext ctx(3);

    // simple point (1:0:0) on conics: the single condition reads off x^2
    const auto m = vanishing_conditions_matrix(ctx, point(1, 0, 0), 1, 2);
    REQUIRE(m.rows() == 1);
    for (std::size_t j = 0; j < 6; ++j)
        CHECK(m(0, j) == (j == ctx.index_of({2, 0, 0}) ? Q(1) : Q(0)));

    // no nonzero form of degree t has a point of multiplicity t+1
    for (int t = 1; t <= 4; ++t) {
        const auto conditions =
            vanishing_conditions_matrix(ctx, point(1, -2, 3), t + 1, t);
        CHECK(kernel_basis(conditions).rows() == 0);
    }

    // conics singular at (1:1:1) form a net
    const auto sing = vanishing_conditions_matrix(ctx, point(1, 1, 1), 2, 2);
    CHECK(sing.rows() == 3);
    CHECK(kernel_basis(sing).rows() == 3);
}

TEST_CASE("a general fat point imposes independent conditions") {
    const RingContext ctx(3);
    Sampler sampler(101, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = sampler.point_all_nonzero<Q>(3);
        const int t = 1 + trial % 5;
        const int m = 1 + trial % (t + 1);
        const auto conditions = vanishing_conditions_matrix(ctx, p, m, t);
        const long long expected_conditions = binomial_ll(m + 1, 2);
        const long long kernel =
            static_cast<long long>(kernel_basis(conditions).rows());
        if (m <= t + 1)
            CHECK(kernel == ctx.dim_of_degree(t) - expected_conditions);
        else
            CHECK(kernel == ctx.dim_of_degree(t) -
                                static_cast<long long>(rank(conditions)));
    }
}

TEST_CASE("points normalize to a leading 1 and reject zero") {
    const Point<Q> p({Q(0), Q(3), Q(6)});
    CHECK(p.coords == std::vector<Q>{Q(0), Q(1), Q(2)});
    CHECK(p == point(0, 2, 4));
    CHECK_THROWS_AS(Point<Q>({Q(0), Q(0), Q(0)}), input_error);
    CHECK_THROWS_AS(LinearForm<Q>({Q(0), Q(0), Q(0)}), input_error);
}
