#ifndef LEF_RING_HPP
#define LEF_RING_HPP

#include "lef/combin.hpp"
#include "lef/errors.hpp"
#include "lef/matrix.hpp"
#include "lef/scalar.hpp"

#include <algorithm>
#include <vector>

namespace lef {

/// Exponent tuple of a monomial, one entry per variable.
using Exponents = std::vector<int>;

/// Bookkeeping for the graded ring K[x_0..x_n]: which monomials span each
/// graded piece R_t and in what order.
///
/// Monomials of a fixed degree are ordered graded-lexicographically with
/// x_0 > x_1 > ... > x_n (largest first). The same order is used by every
/// module so that all matrices share one layout. dim R_t = C(t+n, n), and
/// 0 for t < 0 — the negative-degree convention several formulas rely on.
class RingContext {
public:
    explicit RingContext(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw input_error("ring needs at least one variable");
    }

    int num_vars() const { return num_vars_; }
    int projective_dim() const { return num_vars_ - 1; }

    long long dim_of_degree(long long t) const {
        if (t < 0) return 0;
        return binomial_ll(t + num_vars_ - 1, num_vars_ - 1);
    }

    /// All exponent tuples of total degree t, lexicographically largest
    /// first. Empty for t < 0.
    std::vector<Exponents> monomial_basis(long long t) const {
        std::vector<Exponents> out;
        if (t < 0) return out;
        out.reserve(static_cast<std::size_t>(dim_of_degree(t)));
        Exponents cur(num_vars_, 0);
        emit(cur, 0, static_cast<int>(t), out);
        return out;
    }

    /// Position of an exponent tuple within monomial_basis(sum of exps).
    std::size_t index_of(const Exponents& e) const {
        long long t = 0;
        for (int x : e) t += x;
        std::size_t idx = 0;
        long long rem = t;
        for (int v = 0; v + 1 < num_vars_; ++v) {
            // tuples with a larger exponent in slot v come first
            const int vars_left = num_vars_ - v - 1;
            for (long long a = rem; a > e[v]; --a)
                idx += static_cast<std::size_t>(
                    binomial_ll(rem - a + vars_left - 1, vars_left - 1));
            rem -= e[v];
        }
        return idx;
    }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.num_vars_ == b.num_vars_;
    }

private:
    void emit(Exponents& cur, int pos, int remaining,
              std::vector<Exponents>& out) const {
        if (pos == num_vars_ - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            cur[pos] = a;
            emit(cur, pos + 1, remaining - a, out);
        }
        cur[pos] = 0;
    }

    int num_vars_;
};

/// Nonzero linear form sum c_i x_i.
template <class K>
struct LinearForm {
    std::vector<K> coeffs;

    explicit LinearForm(std::vector<K> c) : coeffs(std::move(c)) {
        bool nonzero = false;
        for (const K& x : coeffs) nonzero = nonzero || !scalar_is_zero(x);
        if (!nonzero) throw input_error("linear form must be nonzero");
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs;
    }
};

/// Homogeneous form of a fixed degree, stored as its coefficient vector in
/// the monomial basis of R_degree.
template <class K>
struct HomogeneousForm {
    int degree = 0;
    std::vector<K> coeffs;

    HomogeneousForm() = default;
    HomogeneousForm(const RingContext& ctx, int degree_)
        : degree(degree_),
          coeffs(static_cast<std::size_t>(ctx.dim_of_degree(degree_)), K(0)) {}

    bool is_zero() const {
        for (const K& c : coeffs)
            if (!scalar_is_zero(c)) return false;
        return true;
    }
};

/// L^d by multinomial expansion.
template <class K>
HomogeneousForm<K> power_of_linear(const RingContext& ctx,
                                   const LinearForm<K>& l, int d) {
    if (d < 1) throw input_error("power_of_linear requires exponent >= 1");
    if (static_cast<int>(l.coeffs.size()) != ctx.num_vars())
        throw dimension_mismatch("linear form has wrong variable count");
    HomogeneousForm<K> f(ctx, d);
    const auto basis = ctx.monomial_basis(d);
    std::vector<int> e(ctx.num_vars());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        K c = scalar_from_integer<K>(multinomial(basis[m]));
        bool zero = false;
        for (int v = 0; v < ctx.num_vars() && !zero; ++v) {
            for (int j = 0; j < basis[m][v]; ++j) c = c * l.coeffs[v];
            zero = scalar_is_zero(c);
        }
        f.coeffs[m] = zero ? K(0) : c;
    }
    return f;
}

template <class K>
HomogeneousForm<K> linear_as_form(const RingContext& ctx,
                                  const LinearForm<K>& l) {
    HomogeneousForm<K> f(ctx, 1);
    f.coeffs = l.coeffs;
    return f;
}

/// Exact product of two homogeneous forms.
template <class K>
HomogeneousForm<K> multiply(const RingContext& ctx, const HomogeneousForm<K>& f,
                            const HomogeneousForm<K>& g) {
    HomogeneousForm<K> h(ctx, f.degree + g.degree);
    const auto bf = ctx.monomial_basis(f.degree);
    const auto bg = ctx.monomial_basis(g.degree);
    Exponents e(ctx.num_vars());
    for (std::size_t i = 0; i < bf.size(); ++i) {
        if (scalar_is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < bg.size(); ++j) {
            if (scalar_is_zero(g.coeffs[j])) continue;
            for (int v = 0; v < ctx.num_vars(); ++v) e[v] = bf[i][v] + bg[j][v];
            h.coeffs[ctx.index_of(e)] += f.coeffs[i] * g.coeffs[j];
        }
    }
    return h;
}

template <class K>
HomogeneousForm<K> form_add(const HomogeneousForm<K>& f,
                            const HomogeneousForm<K>& g) {
    if (f.degree != g.degree)
        throw dimension_mismatch("cannot add forms of different degrees");
    HomogeneousForm<K> h = f;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i)
        h.coeffs[i] += g.coeffs[i];
    return h;
}

template <class K>
HomogeneousForm<K> form_sub(const HomogeneousForm<K>& f,
                            const HomogeneousForm<K>& g) {
    if (f.degree != g.degree)
        throw dimension_mismatch("cannot subtract forms of different degrees");
    HomogeneousForm<K> h = f;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i)
        h.coeffs[i] -= g.coeffs[i];
    return h;
}

/// Partial derivative with respect to one variable (degree drops by one).
template <class K>
HomogeneousForm<K> differentiate(const RingContext& ctx,
                                 const HomogeneousForm<K>& f, int var) {
    HomogeneousForm<K> g(ctx, f.degree - 1);
    if (f.degree == 0) return g;
    const auto basis = ctx.monomial_basis(f.degree);
    Exponents e(ctx.num_vars());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (scalar_is_zero(f.coeffs[i]) || basis[i][var] == 0) continue;
        e = basis[i];
        e[var] -= 1;
        g.coeffs[ctx.index_of(e)] += K(basis[i][var]) * f.coeffs[i];
    }
    return g;
}

/// Matrix of multiplication by f from R_source_degree to
/// R_{source_degree + deg f}: columns indexed by source monomials, rows by
/// target monomials, so the map acts as x |-> M x on coefficient columns.
template <class K>
Matrix<K> multiplication_matrix(const RingContext& ctx,
                                const HomogeneousForm<K>& f,
                                int source_degree) {
    const long long src = ctx.dim_of_degree(source_degree);
    const long long tgt = ctx.dim_of_degree(source_degree + f.degree);
    Matrix<K> m(static_cast<std::size_t>(tgt), static_cast<std::size_t>(src));
    if (src == 0 || tgt == 0) return m;
    const auto bsrc = ctx.monomial_basis(source_degree);
    const auto bf = ctx.monomial_basis(f.degree);
    Exponents e(ctx.num_vars());
    for (std::size_t j = 0; j < bsrc.size(); ++j) {
        for (std::size_t i = 0; i < bf.size(); ++i) {
            if (scalar_is_zero(f.coeffs[i])) continue;
            for (int v = 0; v < ctx.num_vars(); ++v) e[v] = bsrc[j][v] + bf[i][v];
            m(ctx.index_of(e), j) += f.coeffs[i];
        }
    }
    return m;
}

/// Projective point, stored normalized: the first nonzero coordinate is 1.
template <class K>
struct Point {
    std::vector<K> coords;

    explicit Point(std::vector<K> c) : coords(std::move(c)) {
        std::size_t lead = coords.size();
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!scalar_is_zero(coords[i])) { lead = i; break; }
        if (lead == coords.size())
            throw input_error("projective point must have a nonzero coordinate");
        const K inv = K(1) / coords[lead];
        for (K& x : coords) x = x * inv;
    }

    friend bool operator==(const Point& a, const Point& b) {
        return a.coords == b.coords;
    }
};

/// Linear conditions on R_t imposed by "all partial derivatives of order
/// < mult vanish at P". Euler's relation makes the top order mult-1
/// sufficient in characteristic 0, so there is one row per derivative
/// operator of order exactly mult-1 (rows may be dependent; callers use
/// the rank). For a degree-t form F and operator d^alpha, the condition is
///     sum_mu  coeff_mu(F) * (mu falling alpha) * P^(mu - alpha) = 0.
template <class K>
Matrix<K> vanishing_conditions_matrix(const RingContext& ctx,
                                      const Point<K>& p, int mult, int t) {
    if (mult < 1) throw input_error("multiplicity must be >= 1");
    if (t < 0) throw input_error("vanishing conditions need degree t >= 0");
    const auto ops = ctx.monomial_basis(mult - 1);
    const auto basis = ctx.monomial_basis(t);
    Matrix<K> m(ops.size(), basis.size());
    for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            K entry(1);
            for (int v = 0; v < ctx.num_vars(); ++v) {
                const int mu = basis[j][v], al = ops[a][v];
                if (mu < al) { entry = K(0); break; }
                entry = entry * scalar_from_integer<K>(falling_factorial(mu, al));
                for (int q = 0; q < mu - al && !scalar_is_zero(entry); ++q)
                    entry = entry * p.coords[v];
                if (scalar_is_zero(entry)) break;
            }
            m(a, j) = entry;
        }
    }
    return m;
}

} // namespace lef

#endif // LEF_RING_HPP
