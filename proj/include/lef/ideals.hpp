#ifndef LEF_IDEALS_HPP
#define LEF_IDEALS_HPP

#include "lef/matrix.hpp"
#include "lef/ring.hpp"

#include <vector>

namespace lef {

/// Ideal generated by r forms of one degree d.
template <class K>
struct EquigeneratedIdeal {
    RingContext ctx;
    int gen_degree;
    std::vector<HomogeneousForm<K>> generators;

    EquigeneratedIdeal(RingContext ctx_, int gen_degree_,
                       std::vector<HomogeneousForm<K>> gens)
        : ctx(ctx_), gen_degree(gen_degree_), generators(std::move(gens)) {
        if (generators.empty())
            throw input_error("ideal needs at least one generator");
        if (gen_degree < 1) throw input_error("generator degree must be >= 1");
        for (const auto& g : generators) {
            if (g.degree != gen_degree)
                throw input_error("all generators must have the common degree");
            if (g.is_zero()) throw input_error("zero generator");
        }
    }

    std::size_t num_generators() const { return generators.size(); }
};

/// Ideal generated by powers of linear forms, one exponent per form.
/// Exponents may differ; when they are all equal the ideal is also
/// available as an EquigeneratedIdeal.
template <class K>
struct PowerIdeal {
    RingContext ctx;
    std::vector<std::pair<LinearForm<K>, int>> generators;

    PowerIdeal(RingContext ctx_, std::vector<std::pair<LinearForm<K>, int>> gens)
        : ctx(ctx_), generators(std::move(gens)) {
        if (generators.empty())
            throw input_error("ideal needs at least one generator");
        for (const auto& [l, d] : generators) {
            if (static_cast<int>(l.coeffs.size()) != ctx.num_vars())
                throw dimension_mismatch("linear form has wrong variable count");
            if (d < 1) throw input_error("power exponents must be >= 1");
        }
    }

    int max_exponent() const {
        int m = 0;
        for (const auto& [l, d] : generators) m = std::max(m, d);
        return m;
    }

    bool is_equigenerated() const {
        for (const auto& [l, d] : generators)
            if (d != generators.front().second) return false;
        return true;
    }

    EquigeneratedIdeal<K> as_equigenerated() const {
        if (!is_equigenerated())
            throw input_error("power ideal has mixed exponents");
        std::vector<HomogeneousForm<K>> gens;
        gens.reserve(generators.size());
        for (const auto& [l, d] : generators)
            gens.push_back(power_of_linear(ctx, l, d));
        return EquigeneratedIdeal<K>(ctx, generators.front().second,
                                     std::move(gens));
    }
};

/// Row-space matrix of the graded piece I_t, rows {m F_j : deg m = t - d}.
/// Zero rows x r_t for t < d.
template <class K>
Matrix<K> ideal_piece(const EquigeneratedIdeal<K>& ideal, long long t) {
    const RingContext& ctx = ideal.ctx;
    const std::size_t cols =
        static_cast<std::size_t>(ctx.dim_of_degree(t));
    const long long shift = t - ideal.gen_degree;
    if (shift < 0 || cols == 0) return Matrix<K>(0, cols);
    const auto mons = ctx.monomial_basis(shift);
    const auto target = ctx.monomial_basis(t);
    Matrix<K> rows(ideal.num_generators() * mons.size(), cols);
    const auto bgen = ctx.monomial_basis(ideal.gen_degree);
    Exponents e(ctx.num_vars());
    std::size_t row = 0;
    for (const auto& g : ideal.generators) {
        for (const auto& m : mons) {
            for (std::size_t i = 0; i < bgen.size(); ++i) {
                if (scalar_is_zero(g.coeffs[i])) continue;
                for (int v = 0; v < ctx.num_vars(); ++v) e[v] = m[v] + bgen[i][v];
                rows(row, ctx.index_of(e)) += g.coeffs[i];
            }
            ++row;
        }
    }
    return rows;
}

template <class K>
Matrix<K> ideal_piece(const PowerIdeal<K>& ideal, long long t) {
    const RingContext& ctx = ideal.ctx;
    const std::size_t cols = static_cast<std::size_t>(ctx.dim_of_degree(t));
    std::vector<std::vector<K>> rows;
    Exponents e(ctx.num_vars());
    for (const auto& [l, d] : ideal.generators) {
        const long long shift = t - d;
        if (shift < 0 || cols == 0) continue;
        const HomogeneousForm<K> f = power_of_linear(ctx, l, d);
        const auto bgen = ctx.monomial_basis(d);
        for (const auto& m : ctx.monomial_basis(shift)) {
            std::vector<K> row(cols, K(0));
            for (std::size_t i = 0; i < bgen.size(); ++i) {
                if (scalar_is_zero(f.coeffs[i])) continue;
                for (int v = 0; v < ctx.num_vars(); ++v) e[v] = m[v] + bgen[i][v];
                row[ctx.index_of(e)] += f.coeffs[i];
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Matrix<K>(0, cols);
    return Matrix<K>::from_rows(rows);
}

/// Hilbert function H_{R/I}(t) = r_t - dim I_t.
template <class I>
long long hilbert(const I& ideal, long long t) {
    if (t < 0) return 0;
    return ideal.ctx.dim_of_degree(t) -
           static_cast<long long>(rank(ideal_piece(ideal, t)));
}

/// s = h^0(K(i)): the dimension of the space of degree-i syzygies
/// (G_1,...,G_r) with sum G_j F_j = 0, computed as the kernel dimension of
/// the stacked multiplication matrices R_i^r -> R_{d+i}. Zero for i < 0.
template <class K>
long long syzygy_dimension(const EquigeneratedIdeal<K>& ideal, long long i) {
    if (i < 0) return 0;
    const RingContext& ctx = ideal.ctx;
    const long long ri = ctx.dim_of_degree(i);
    Matrix<K> phi(
        static_cast<std::size_t>(ctx.dim_of_degree(ideal.gen_degree + i)), 0);
    for (const auto& g : ideal.generators)
        phi = hstack(phi, multiplication_matrix(ctx, g, static_cast<int>(i)));
    return static_cast<long long>(ideal.num_generators()) * ri -
           static_cast<long long>(rank(phi));
}

/// Minimal generation in degree d is exactly the absence of 0-syzygies.
template <class K>
bool is_minimally_generated(const EquigeneratedIdeal<K>& ideal) {
    return syzygy_dimension(ideal, 0) == 0;
}

/// Spot-check of artinianness: H_{R/I}(t) must vanish somewhere in
/// [0, t_bound]. Cheap sanity check for hypotheses, not a proof.
template <class K>
bool hilbert_vanishes_by(const EquigeneratedIdeal<K>& ideal, long long t_bound) {
    for (long long t = 0; t <= t_bound; ++t)
        if (hilbert(ideal, t) == 0) return true;
    return false;
}

} // namespace lef

#endif // LEF_IDEALS_HPP
