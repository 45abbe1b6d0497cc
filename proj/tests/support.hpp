#ifndef LEF_TESTS_SUPPORT_HPP
#define LEF_TESTS_SUPPORT_HPP

#include "lef/arrangements.hpp"
#include "lef/io.hpp"

#include <vector>

namespace lef::testing {

using Q = Rational;

inline LinearForm<Q> linear(long long a, long long b, long long c) {
    return LinearForm<Q>({Q(a), Q(b), Q(c)});
}

inline Point<Q> point(long long a, long long b, long long c) {
    return Point<Q>({Q(a), Q(b), Q(c)});
}

/// Togliatti's ideal (x^3, y^3, z^3, xyz).
inline EquigeneratedIdeal<Q> togliatti_ideal() {
    const RingContext ctx(3);
    std::vector<HomogeneousForm<Q>> gens;
    gens.push_back(power_of_linear(ctx, linear(1, 0, 0), 3));
    gens.push_back(power_of_linear(ctx, linear(0, 1, 0), 3));
    gens.push_back(power_of_linear(ctx, linear(0, 0, 1), 3));
    HomogeneousForm<Q> xyz(ctx, 3);
    xyz.coeffs[ctx.index_of({1, 1, 1})] = Q(1);
    gens.push_back(xyz);
    return EquigeneratedIdeal<Q>(ctx, 3, std::move(gens));
}

/// The 17 lines x y z (x+z) (x+2z) prod (y+jz), j = 1..12.
inline std::vector<LinearForm<Q>> chmn_lines() {
    std::vector<LinearForm<Q>> lines = {linear(1, 0, 0), linear(0, 1, 0),
                                        linear(0, 0, 1), linear(1, 0, 1),
                                        linear(1, 0, 2)};
    for (int j = 1; j <= 12; ++j) lines.push_back(linear(0, 1, j));
    return lines;
}

inline PowerIdeal<Q> chmn_power_ideal() {
    const RingContext ctx(3);
    std::vector<std::pair<LinearForm<Q>, int>> gens;
    for (const auto& l : chmn_lines()) gens.emplace_back(l, 8);
    return PowerIdeal<Q>(ctx, std::move(gens));
}

inline EquigeneratedIdeal<Q> chmn_ideal() {
    return chmn_power_ideal().as_equigenerated();
}

/// The reflection arrangement x y z (x-y)(x+y)(y-z)(y+z)(x-z)(x+z):
/// free with exponents (3, 5), at most 4 concurrent lines.
inline std::vector<LinearForm<Q>> b3_lines() {
    return {linear(1, 0, 0),  linear(0, 1, 0),  linear(0, 0, 1),
            linear(1, -1, 0), linear(1, 1, 0),  linear(0, 1, -1),
            linear(0, 1, 1),  linear(1, 0, -1), linear(1, 0, 1)};
}

inline PowerIdeal<Q> power_ideal_from(const std::vector<LinearForm<Q>>& lines,
                                      int d) {
    const RingContext ctx(3);
    std::vector<std::pair<LinearForm<Q>, int>> gens;
    for (const auto& l : lines) gens.emplace_back(l, d);
    return PowerIdeal<Q>(ctx, std::move(gens));
}

inline std::vector<Point<Q>> duals_of(const std::vector<LinearForm<Q>>& lines) {
    std::vector<Point<Q>> pts;
    pts.reserve(lines.size());
    for (const auto& l : lines) pts.emplace_back(l.coeffs);
    return pts;
}

/// `count` pairwise distinct random lines.
inline std::vector<LinearForm<Q>> random_distinct_lines(Sampler& sampler,
                                                        std::size_t count) {
    std::vector<LinearForm<Q>> lines;
    while (lines.size() < count) {
        LinearForm<Q> l = sampler.linear_form<Q>(3);
        bool fresh = true;
        for (const auto& other : lines)
            fresh = fresh && !(Point<Q>(other.coeffs) == Point<Q>(l.coeffs));
        if (fresh) lines.push_back(std::move(l));
    }
    return lines;
}

/// Image of the lines under an invertible rational 3x3 substitution; the
/// incidence structure of the arrangement is preserved exactly.
inline std::vector<LinearForm<Q>>
transform_lines(const std::vector<LinearForm<Q>>& lines, Sampler& sampler) {
    while (true) {
        Matrix<Q> t(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                t(i, j) = Q(sampler.int_in(-9, 9));
        if (rank(t) != 3) continue;
        std::vector<LinearForm<Q>> out;
        out.reserve(lines.size());
        for (const auto& l : lines) out.emplace_back(mat_vec(t, l.coeffs));
        return out;
    }
}

} // namespace lef::testing

#endif // LEF_TESTS_SUPPORT_HPP
