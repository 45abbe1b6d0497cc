#ifndef LEF_APOLARITY_HPP
#define LEF_APOLARITY_HPP

#include "lef/laplace.hpp"

#include <algorithm>
#include <optional>

namespace lef {

/// Finite scheme of fat points: pairwise distinct normalized points, each
/// with a multiplicity >= 1.
template <class K>
struct FatPointScheme {
    RingContext ctx;
    std::vector<std::pair<Point<K>, int>> points;

    FatPointScheme(RingContext ctx_,
                   std::vector<std::pair<Point<K>, int>> pts)
        : ctx(ctx_), points(std::move(pts)) {
        for (const auto& [p, m] : points) {
            if (static_cast<int>(p.coords.size()) != ctx.num_vars())
                throw dimension_mismatch("point has wrong coordinate count");
            if (m < 1) throw input_error("multiplicities must be >= 1");
        }
        for (std::size_t a = 0; a < points.size(); ++a)
            for (std::size_t b = a + 1; b < points.size(); ++b)
                if (points[a].first == points[b].first)
                    throw input_error(
                        "duplicate points are rejected, not merged");
    }

    static FatPointScheme reduced(RingContext ctx_, std::vector<Point<K>> pts) {
        std::vector<std::pair<Point<K>, int>> fat;
        fat.reserve(pts.size());
        for (auto& p : pts) fat.emplace_back(std::move(p), 1);
        return FatPointScheme(ctx_, std::move(fat));
    }

    long long degree() const {
        long long deg = 0;
        for (const auto& [p, m] : points)
            deg += binomial_ll(m + ctx.num_vars() - 2, ctx.num_vars() - 1);
        return deg;
    }
};

/// h^0 of the ideal sheaf twist: the dimension of the space of degree-t
/// forms vanishing to order >= m_i at every P_i.
template <class K>
long long fat_point_system_dim(const FatPointScheme<K>& z, long long t) {
    if (t < 0) return 0;
    const RingContext& ctx = z.ctx;
    const std::size_t cols = static_cast<std::size_t>(ctx.dim_of_degree(t));
    Matrix<K> conditions(0, cols);
    for (const auto& [p, m] : z.points) {
        // multiplicity conditions beyond t+1 already force the zero form
        const int m_eff = static_cast<int>(std::min<long long>(m, t + 1));
        conditions = vstack(
            conditions,
            vanishing_conditions_matrix(ctx, p, m_eff, static_cast<int>(t)));
    }
    return static_cast<long long>(cols) -
           static_cast<long long>(rank(conditions));
}

/// Same system with one extra fat point appended (multiplicity 0 allowed
/// here, meaning no condition). Used for the "general point of
/// multiplicity j" constructions.
template <class K>
long long fat_point_system_dim_with(const FatPointScheme<K>& z,
                                    const Point<K>& extra, long long mult,
                                    long long t) {
    if (t < 0) return 0;
    const RingContext& ctx = z.ctx;
    const std::size_t cols = static_cast<std::size_t>(ctx.dim_of_degree(t));
    Matrix<K> conditions(0, cols);
    for (const auto& [p, m] : z.points) {
        const int m_eff = static_cast<int>(std::min<long long>(m, t + 1));
        conditions = vstack(
            conditions,
            vanishing_conditions_matrix(ctx, p, m_eff, static_cast<int>(t)));
    }
    if (mult >= 1) {
        const int m_eff = static_cast<int>(std::min<long long>(mult, t + 1));
        conditions = vstack(conditions,
                            vanishing_conditions_matrix(
                                ctx, extra, m_eff, static_cast<int>(t)));
    }
    return static_cast<long long>(cols) -
           static_cast<long long>(rank(conditions));
}

// ---------------------------------------------------------------------------
// collinearity of plane point configurations
// ---------------------------------------------------------------------------

/// Coefficients of the line through two distinct points of P^2.
template <class K>
std::vector<K> line_through(const Point<K>& p, const Point<K>& q) {
    const auto& a = p.coords;
    const auto& b = q.coords;
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

template <class K>
bool on_line(const Point<K>& p, const std::vector<K>& line) {
    K s(0);
    for (std::size_t v = 0; v < 3; ++v) s += p.coords[v] * line[v];
    return scalar_is_zero(s);
}

/// Indices of a maximum collinear subset of a plane configuration,
/// found by exact pair grouping (the line through every pair is tested
/// against all points).
template <class K>
std::vector<std::size_t>
maximal_collinear_subset(const std::vector<Point<K>>& pts) {
    if (pts.size() < 2)
        throw input_error("alignment analysis needs at least two points");
    if (pts.front().coords.size() != 3)
        throw unsupported_input("alignment analysis is specific to P^2");
    std::vector<std::size_t> best = {0, 1};
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const auto line = line_through(pts[a], pts[b]);
            std::vector<std::size_t> on;
            for (std::size_t c = 0; c < pts.size(); ++c)
                if (on_line(pts[c], line)) on.push_back(c);
            if (on.size() > best.size()) best = std::move(on);
        }
    }
    return best;
}

template <class K>
long long max_aligned_points(const std::vector<Point<K>>& pts) {
    return static_cast<long long>(maximal_collinear_subset(pts).size());
}

/// All maximal groups of >= 3 collinear points, for plotting and
/// incidence summaries.
template <class K>
std::vector<std::vector<std::size_t>>
collinearity_groups(const std::vector<Point<K>>& pts) {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const auto line = line_through(pts[a], pts[b]);
            std::vector<std::size_t> on;
            for (std::size_t c = 0; c < pts.size(); ++c)
                if (on_line(pts[c], line)) on.push_back(c);
            if (on.size() < 3) continue;
            if (on[0] != a || on[1] != b) continue; // count each line once
            groups.push_back(std::move(on));
        }
    }
    return groups;
}

// ---------------------------------------------------------------------------
// Emsalem-Iarrobino duality
// ---------------------------------------------------------------------------

struct EiReport {
    long long j = 0;
    long long algebra_side = 0;   // dim (R/I)_j
    long long fat_point_side = 0; // dim of the dual fat point system
    bool holds() const { return algebra_side == fat_point_side; }
};

/// dim (R/I)_j = dim of the degree-j forms with multiplicity >= j-d_i+1
/// at every dual point, for any j >= max d_i. Both sides are computed
/// independently (ideal-piece rank vs vanishing conditions).
template <class K>
EiReport ei_duality_report(const PowerIdeal<K>& ideal, long long j) {
    if (j < ideal.max_exponent())
        throw hypothesis_violation(
            "the apolarity duality needs j >= max exponent d_i");
    EiReport rep;
    rep.j = j;
    rep.algebra_side = hilbert(ideal, j);

    std::vector<std::pair<Point<K>, int>> fat;
    fat.reserve(ideal.generators.size());
    for (const auto& [l, d] : ideal.generators)
        fat.emplace_back(Point<K>(l.coeffs), static_cast<int>(j - d + 1));
    const FatPointScheme<K> z(ideal.ctx, std::move(fat));
    rep.fat_point_side = fat_point_system_dim(z, j);
    return rep;
}

template <class K>
bool ei_duality_check(const PowerIdeal<K>& ideal, long long j) {
    return ei_duality_report(ideal, j).holds();
}

// ---------------------------------------------------------------------------
// unexpected curves
// ---------------------------------------------------------------------------

struct UnexpectedCurveReport {
    long long j = 0;
    long long actual = 0;   // h^0((I_Z ox I_P^j)(j+1)) for general P
    long long expected = 0; // max(h^0(I_Z(j+1)) - C(j+1,2), 0)
    long long h0_without_point = 0;
    bool has_unexpected = false;
    int samples_used = 0;
};

/// Does a general point of multiplicity j fail to impose the expected
/// number of conditions on curves of degree j+1 through Z? h^0 is upper
/// semicontinuous in P, so the generic value is the min over samples.
template <class K>
UnexpectedCurveReport unexpected_curve_check(const FatPointScheme<K>& z,
                                             long long j, Sampler& sampler) {
    if (j < 0) throw input_error("unexpected-curve degree parameter j must be >= 0");
    UnexpectedCurveReport rep;
    rep.j = j;
    rep.h0_without_point = fat_point_system_dim(z, j + 1);
    rep.expected =
        std::max(rep.h0_without_point - binomial_ll(j + 1, 2), 0LL);

    if (j == 0) {
        // a multiplicity-0 point imposes nothing; boundary convention
        rep.actual = rep.h0_without_point;
        rep.has_unexpected = rep.actual > rep.expected;
        return rep;
    }

    long long best = -1;
    for (int t = 0; t < sampler.count(); ++t) {
        const Point<K> p =
            sampler.template point_all_nonzero<K>(z.ctx.num_vars());
        const long long dim = fat_point_system_dim_with(z, p, j, j + 1);
        best = best < 0 ? dim : std::min(best, dim);
        ++rep.samples_used;
    }
    rep.actual = best;
    rep.has_unexpected = rep.actual > rep.expected;
    return rep;
}

// ---------------------------------------------------------------------------
// the three-way equivalence behind unexpected curves
// ---------------------------------------------------------------------------

struct CorUnexpReport {
    long long d = 0;
    bool unexpected_curve = false; // route 1: Z has an unexpected curve of degree d
    bool slp_fails = false;        // route 2: I fails SLP at range 2, degree d-2
    bool laplace_positive = false; // route 3: >= 1 nontrivial Laplace equation
    UnexpectedCurveReport curve;
    LefschetzReport slp;
    OsculatingReport laplace;
    bool consistent() const {
        return unexpected_curve == slp_fails && slp_fails == laplace_positive;
    }
};

/// For 2d+1 points with at most d+1 aligned: unexpected curve of degree d
/// <=> SLP failure at range 2 in degree d-2 <=> a nontrivial Laplace
/// equation of order d-2. All three routes are computed independently;
/// disagreement is a defect, not a property of the input.
template <class K>
CorUnexpReport cor_unexp_equivalence(const std::vector<Point<K>>& z, long long d,
                                     Sampler& sampler) {
    if (d < 1) throw input_error("the equivalence needs d >= 1");
    if (static_cast<long long>(z.size()) != 2 * d + 1)
        throw input_error("the equivalence is about configurations of 2d+1 points");
    const RingContext ctx(3);
    if (max_aligned_points(z) > d + 1)
        throw hypothesis_violation(
            "more than d+1 aligned points: the corollary hypothesis fails "
            "(the ideal is not minimally generated in degree d)");

    CorUnexpReport rep;
    rep.d = d;

    const FatPointScheme<K> scheme = FatPointScheme<K>::reduced(ctx, z);
    rep.curve = unexpected_curve_check(scheme, d - 1, sampler);
    rep.unexpected_curve = rep.curve.has_unexpected;

    std::vector<std::pair<LinearForm<K>, int>> gens;
    gens.reserve(z.size());
    for (const auto& p : z)
        gens.emplace_back(LinearForm<K>(p.coords), static_cast<int>(d));
    const EquigeneratedIdeal<K> ideal =
        PowerIdeal<K>(ctx, std::move(gens)).as_equigenerated();

    rep.slp = slp_check(ideal, 0, 2, sampler);
    rep.slp_fails = rep.slp.fails;

    rep.laplace = laplace_count_via_lefschetz(ideal, 0, 2, sampler);
    rep.laplace_positive = rep.laplace.nontrivial_count >= 1;
    return rep;
}

} // namespace lef

#endif // LEF_APOLARITY_HPP
