#ifndef LEF_LAPLACE_HPP
#define LEF_LAPLACE_HPP

#include "lef/lefschetz.hpp"

#include <algorithm>
#include <optional>

namespace lef {

/// Dimension sheet for the order-m osculating space of the projected
/// Veronese variety X = pi_{I_{d+i}}(v_{d+i}(P^n)) at a general point.
///
/// expected_dim = min(C(n+m,n) - 1, N). When the ambient dimension N is
/// smaller than C(n+m,n) - 1 there are unavoidable relations among the
/// partials; those are the trivial Laplace equations and are counted
/// separately from the delta nontrivial ones.
struct OsculatingReport {
    long long order_m = 0;
    long long ambient_dim = 0; // N: X lives in P^N
    long long expected_dim = 0;
    long long actual_dim = 0;
    long long delta_total = 0;      // expected_dim - actual_dim
    long long trivial_count = 0;    // max(0, C(n+m,n) - 1 - N)
    long long nontrivial_count = 0; // Laplace equations beyond the trivial ones
    int samples_used = 0;
};

namespace detail {

template <class K>
bool monomial_coeff_index(const HomogeneousForm<K>& f, std::size_t& idx) {
    bool found = false;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (scalar_is_zero(f.coeffs[i])) continue;
        if (found) return false;
        idx = i;
        found = true;
    }
    return found;
}

} // namespace detail

/// Osculating dimension by direct differentiation of the monomial
/// parametrization. Only monomial projection centers are supported: then
/// the surviving coordinates of X are themselves monomials and the
/// derivative matrix is exact. General centers go through the
/// Lefschetz-side identity instead.
template <class K>
OsculatingReport osculating_dim_direct(const EquigeneratedIdeal<K>& ideal,
                                       long long i, long long m,
                                       Sampler& sampler) {
    const RingContext& ctx = ideal.ctx;
    const long long d = ideal.gen_degree;
    const long long big = d + i;
    if (m < 1) throw input_error("osculating order m must be >= 1");
    if (big < 0) throw input_error("degree d+i must be >= 0");

    // the projection center must be spanned by monomials
    std::vector<std::size_t> gen_mono(ideal.num_generators());
    for (std::size_t g = 0; g < ideal.num_generators(); ++g) {
        if (!detail::monomial_coeff_index(ideal.generators[g], gen_mono[g]))
            throw unsupported_input(
                "direct osculating computation needs monomial generators; "
                "use the Lefschetz-side route for general ideals");
    }

    // monomials of degree d+i outside I_{d+i}
    const auto basis = ctx.monomial_basis(big);
    const auto bgen = ctx.monomial_basis(d);
    std::vector<bool> in_ideal(basis.size(), false);
    Exponents e(ctx.num_vars());
    for (std::size_t g = 0; g < ideal.num_generators(); ++g) {
        for (const auto& mon : ctx.monomial_basis(big - d)) {
            for (int v = 0; v < ctx.num_vars(); ++v)
                e[v] = mon[v] + bgen[gen_mono[g]][v];
            in_ideal[ctx.index_of(e)] = true;
        }
    }
    std::vector<Exponents> coords;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!in_ideal[j]) coords.push_back(basis[j]);

    OsculatingReport rep;
    rep.order_m = m;
    rep.ambient_dim = static_cast<long long>(coords.size()) - 1;
    rep.expected_dim =
        std::min(binomial_ll(ctx.projective_dim() + m, ctx.projective_dim()) - 1,
                 rep.ambient_dim);

    // all derivative operators of order <= m
    std::vector<Exponents> ops;
    for (long long q = 0; q <= m; ++q)
        for (const auto& op : ctx.monomial_basis(q)) ops.push_back(op);

    long long best_rank = 0;
    for (int t = 0; t < sampler.count(); ++t) {
        const Point<K> p = sampler.template point_all_nonzero<K>(ctx.num_vars());
        Matrix<K> deriv(ops.size(), coords.size());
        for (std::size_t a = 0; a < ops.size(); ++a) {
            for (std::size_t j = 0; j < coords.size(); ++j) {
                K entry(1);
                for (int v = 0; v < ctx.num_vars(); ++v) {
                    const int mu = coords[j][v], al = ops[a][v];
                    if (mu < al) { entry = K(0); break; }
                    entry =
                        entry * scalar_from_integer<K>(falling_factorial(mu, al));
                    for (int q = 0; q < mu - al; ++q) entry = entry * p.coords[v];
                }
                deriv(a, j) = entry;
            }
        }
        best_rank =
            std::max(best_rank, static_cast<long long>(rank(deriv)));
        ++rep.samples_used;
    }

    rep.actual_dim = best_rank - 1;
    rep.delta_total = rep.expected_dim - rep.actual_dim;
    rep.trivial_count = std::max(
        0LL,
        binomial_ll(ctx.projective_dim() + m, ctx.projective_dim()) - 1 -
            rep.ambient_dim);
    // relations beyond the ambient-dimension bookkeeping
    const long long total_drop =
        binomial_ll(ctx.projective_dim() + m, ctx.projective_dim()) - 1 -
        rep.actual_dim;
    rep.nontrivial_count = total_drop - rep.trivial_count;
    return rep;
}

/// Laplace-equation count through Theorem-side bookkeeping: with
/// m = d+i-k and no syzygies in degree i-k, the nontrivial count is
/// dim ker(x L^k) - N+_s and the trivial count is N+_s + dim I_{d+i-k}.
template <class K>
OsculatingReport laplace_count_via_lefschetz(const EquigeneratedIdeal<K>& ideal,
                                             long long i, long long k,
                                             Sampler& sampler) {
    if (k < 1) throw input_error("range k must be >= 1");
    if (syzygy_dimension(ideal, i - k) != 0)
        throw hypothesis_violation(
            "Laplace count via the multiplication map needs h^0(K(i-k)) = 0");
    const RingContext& ctx = ideal.ctx;
    const long long d = ideal.gen_degree;
    const long long m = d + i - k;

    OsculatingReport rep;
    rep.order_m = m;
    rep.ambient_dim = hilbert(ideal, d + i) - 1;
    if (m < 1) {
        // no osculating order to speak of; counts are all zero
        rep.expected_dim = rep.actual_dim = rep.ambient_dim >= 0 ? 0 : -1;
        return rep;
    }

    const LefschetzReport slp = slp_check(ideal, i, k, sampler);
    rep.samples_used = slp.samples_used;
    const long long dim_ideal_m =
        ctx.dim_of_degree(m) - hilbert(ideal, m);
    rep.nontrivial_count = slp.dim_ker - slp.ns.n_plus;
    rep.trivial_count = slp.ns.n_plus + dim_ideal_m;
    rep.expected_dim = std::min(
        binomial_ll(ctx.projective_dim() + m, ctx.projective_dim()) - 1,
        rep.ambient_dim);
    // dim T^m = H(m) - 1 - N+_s - delta: the osculating space of the
    // Veronese meets the projection center along a P^{N+_s + delta - 1}
    rep.actual_dim = hilbert(ideal, m) - 1 - slp.ns.n_plus - slp.delta;
    rep.delta_total = rep.expected_dim - rep.actual_dim;
    return rep;
}

/// The five quantities Theorem-equivalent to the failure amount delta,
/// each computed along an independent route.
struct ThgenReport {
    long long delta_rank = 0;         // min(H, H') - generic rank
    long long delta_ker = 0;          // dim ker - N+_s
    long long delta_coker = 0;        // dim coker - N-_s
    long long delta_laplace = 0;      // nontrivial Laplace equations
    bool laplace_route_direct = false; // measured osculating rank vs bookkeeping
    long long delta_intersection = 0; // dim((I_perp)* cap fat point system) - N-_s
    bool agree = false;
};

/// Intersection dimension entering route (5): the apolar complement of
/// I_{d+i} meets the system of degree-(d+i) forms with a point of
/// multiplicity d+i-k+1 at the dual point of a sampled general linear
/// form. The apolar complement is computed as the kernel of the pairing
/// <x^mu, d^nu> = mu! delta_{mu nu} against the rows of I_{d+i}.
template <class K>
long long apolar_fat_intersection_dim(const EquigeneratedIdeal<K>& ideal,
                                      long long i, long long k,
                                      Sampler& sampler) {
    const RingContext& ctx = ideal.ctx;
    const long long d = ideal.gen_degree;
    const long long big = d + i;
    const long long mult = d + i - k + 1;
    if (mult < 1 || big < 0) return 0;

    const auto basis = ctx.monomial_basis(big);
    const Matrix<K> piece = ideal_piece(ideal, big);

    // scale column mu by mu! = prod_v e_v!; the kernel rows of the scaled
    // piece are a basis of the apolar space I_perp in degree d+i
    std::vector<K> factorials(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Integer f = 1;
        for (int v = 0; v < ctx.num_vars(); ++v)
            f *= falling_factorial(basis[j][v], basis[j][v]);
        factorials[j] = scalar_from_integer<K>(f);
    }
    Matrix<K> pairing(piece.rows(), piece.cols());
    for (std::size_t r0 = 0; r0 < piece.rows(); ++r0)
        for (std::size_t j = 0; j < piece.cols(); ++j)
            pairing(r0, j) = piece(r0, j) * factorials[j];

    const Matrix<K> apolar = kernel_basis(pairing);

    long long best = -1;
    for (int t = 0; t < sampler.count(); ++t) {
        const Point<K> dual =
            sampler.template point_all_nonzero<K>(ctx.num_vars());
        const Matrix<K> fat = kernel_basis(vanishing_conditions_matrix(
            ctx, dual, static_cast<int>(std::min(mult, big + 1)),
            static_cast<int>(big)));
        const auto [sum, inter] =
            row_space_dim_sum_and_intersection(apolar, fat);
        (void)sum;
        const long long dim = static_cast<long long>(inter);
        best = best < 0 ? dim : std::min(best, dim);
    }
    return best;
}

template <class K>
ThgenReport thgen_equivalence_check(const EquigeneratedIdeal<K>& ideal,
                                    long long i, long long k,
                                    Sampler& sampler) {
    if (k < 1) throw input_error("range k must be >= 1");
    if (syzygy_dimension(ideal, i - k) != 0)
        throw hypothesis_violation(
            "the five-route equivalence requires no syzygy of degree i-k");

    ThgenReport rep;
    const LefschetzReport slp = slp_check(ideal, i, k, sampler);
    rep.delta_rank = slp.delta;
    rep.delta_ker = slp.dim_ker - slp.ns.n_plus;
    rep.delta_coker = slp.dim_coker - slp.ns.n_minus;

    bool monomial = true;
    std::size_t idx;
    for (const auto& g : ideal.generators)
        monomial = monomial && detail::monomial_coeff_index(g, idx);
    if (monomial && ideal.gen_degree + i - k >= 1) {
        rep.laplace_route_direct = true;
        rep.delta_laplace =
            osculating_dim_direct(ideal, i, ideal.gen_degree + i - k, sampler)
                .nontrivial_count;
    } else {
        rep.delta_laplace =
            laplace_count_via_lefschetz(ideal, i, k, sampler).nontrivial_count;
    }

    rep.delta_intersection =
        apolar_fat_intersection_dim(ideal, i, k, sampler) - slp.ns.n_minus;

    rep.agree = rep.delta_rank == rep.delta_ker &&
                rep.delta_rank == rep.delta_coker &&
                rep.delta_rank == rep.delta_laplace &&
                rep.delta_rank == rep.delta_intersection;
    return rep;
}

} // namespace lef

#endif // LEF_LAPLACE_HPP
