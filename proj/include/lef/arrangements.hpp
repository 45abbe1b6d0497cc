#ifndef LEF_ARRANGEMENTS_HPP
#define LEF_ARRANGEMENTS_HPP

#include "lef/apolarity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace lef {

/// Collection of at least three pairwise distinct lines in P^2.
template <class K>
struct LineArrangement {
    RingContext ctx{3};
    std::vector<LinearForm<K>> lines;

    explicit LineArrangement(std::vector<LinearForm<K>> lines_)
        : lines(std::move(lines_)) {
        if (lines.size() < 3)
            throw invalid_arrangement("an arrangement needs at least 3 lines");
        for (const auto& l : lines)
            if (l.coeffs.size() != 3)
                throw invalid_arrangement("arrangement lines live in P^2");
        for (std::size_t a = 0; a < lines.size(); ++a)
            for (std::size_t b = a + 1; b < lines.size(); ++b)
                if (Point<K>(lines[a].coeffs) == Point<K>(lines[b].coeffs))
                    throw invalid_arrangement(
                        "proportional lines: the arrangement must consist of "
                        "distinct lines");
    }

    std::size_t size() const { return lines.size(); }

    /// Product of the defining linear forms.
    HomogeneousForm<K> defining_form() const {
        HomogeneousForm<K> f = linear_as_form(ctx, lines[0]);
        for (std::size_t i = 1; i < lines.size(); ++i)
            f = multiply(ctx, f, linear_as_form(ctx, lines[i]));
        return f;
    }
};

/// The lines of an arrangement, reread as distinct points of the dual
/// plane (coefficient vectors, normalized).
template <class K>
struct DualPointSet {
    std::vector<Point<K>> points;
};

template <class K>
DualPointSet<K> dual_points(const LineArrangement<K>& arr) {
    DualPointSet<K> z;
    z.points.reserve(arr.size());
    for (const auto& l : arr.lines) z.points.emplace_back(l.coeffs);
    return z;
}

/// Maximum number of points of Z on a common line.
template <class K>
long long max_aligned(const DualPointSet<K>& z) {
    return max_aligned_points(z.points);
}

// ---------------------------------------------------------------------------
// the aligned-points criterion for 0-syzygies
// ---------------------------------------------------------------------------

struct AlignedCriterionReport {
    long long power_rank = 0;     // rank of the 2d+1 power vectors in R_d
    bool rank_deficient = false;  // power_rank < 2d+1
    long long max_aligned = 0;    // most collinear dual points
    bool too_many_aligned = false; // max_aligned >= d+2
    bool biconditional_holds() const {
        return rank_deficient == too_many_aligned;
    }
};

/// dim (l_1^d,...,l_{2d+1}^d)_d < 2d+1 iff at least d+2 of the dual
/// points are aligned; both sides computed independently.
template <class K>
AlignedCriterionReport aligned_criterion_report(
    const std::vector<LinearForm<K>>& forms, long long d) {
    if (static_cast<long long>(forms.size()) != 2 * d + 1)
        throw input_error("the alignment criterion is about 2d+1 forms");
    const RingContext ctx(3);

    std::vector<std::vector<K>> rows;
    rows.reserve(forms.size());
    for (const auto& l : forms)
        rows.push_back(power_of_linear(ctx, l, static_cast<int>(d)).coeffs);

    AlignedCriterionReport rep;
    rep.power_rank = static_cast<long long>(rank(Matrix<K>::from_rows(rows)));
    rep.rank_deficient = rep.power_rank < 2 * d + 1;

    std::vector<Point<K>> duals;
    duals.reserve(forms.size());
    for (const auto& l : forms) duals.emplace_back(l.coeffs);
    rep.max_aligned = max_aligned_points(duals);
    rep.too_many_aligned = rep.max_aligned >= d + 2;
    return rep;
}

template <class K>
bool aligned_criterion_check(const std::vector<LinearForm<K>>& forms,
                             long long d) {
    return aligned_criterion_report(forms, d).biconditional_holds();
}

// ---------------------------------------------------------------------------
// numerical character
// ---------------------------------------------------------------------------

/// Degree sequence (n_0 >= ... >= n_{s-1}) of a plane point set: s is the
/// minimal degree of a curve through Z, and the entries are pinned by
///   h^1(I_Z(n)) = sum (n_i - n - 1)_+ - sum (i - n - 1)_+  for all n.
struct NumericalCharacter {
    long long s = 0;
    std::vector<long long> entries;

    long long degree() const {
        long long deg = 0;
        for (std::size_t i = 0; i < entries.size(); ++i)
            deg += entries[i] - static_cast<long long>(i);
        return deg;
    }

    /// h^1 predicted by the entries via the displayed formula.
    long long h1(long long n) const {
        long long acc = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            acc += std::max(entries[i] - n - 1, 0LL);
            acc -= std::max(static_cast<long long>(i) - n - 1, 0LL);
        }
        return acc;
    }
};

template <class K>
NumericalCharacter numerical_character(const std::vector<Point<K>>& pts,
                                       long long t_max) {
    if (pts.empty()) throw input_error("numerical character of an empty set");
    const RingContext ctx(3);
    const FatPointScheme<K> z = FatPointScheme<K>::reduced(ctx, pts);
    const long long deg_z = static_cast<long long>(pts.size());

    std::vector<long long> h0(t_max + 1), h1(t_max + 1);
    long long s = -1;
    for (long long t = 0; t <= t_max; ++t) {
        h0[t] = fat_point_system_dim(z, t);
        h1[t] = deg_z - (ctx.dim_of_degree(t) - h0[t]);
        if (s < 0 && h0[t] > 0) s = t;
    }
    if (s < 1 || h1[t_max] != 0)
        throw insufficient_bound(
            "t_max too small: the Hilbert function of Z has not stabilized");

    // g(n) = h^1(n) + sum_(i<s) (i-n-1)_+ = sum (n_i - n - 1)_+, so the
    // first difference counts entries >= n+2
    const auto g = [&](long long n) -> long long {
        long long v = (n < 0) ? deg_z : (n <= t_max ? h1[n] : 0);
        for (long long i = 0; i < s; ++i) v += std::max(i - n - 1, 0LL);
        return v;
    };
    const auto count_ge = [&](long long n) { return g(n) - g(n + 1); };

    NumericalCharacter ch;
    ch.s = s;
    for (long long m = t_max + 1; m >= 1; --m) {
        const long long cnt = count_ge(m - 2) - count_ge(m - 1);
        for (long long c = 0; c < cnt; ++c) ch.entries.push_back(m);
    }

    const bool size_ok = static_cast<long long>(ch.entries.size()) == s;
    bool entries_ok = size_ok && ch.degree() == deg_z;
    for (const long long ni : ch.entries) entries_ok = entries_ok && ni >= s;
    for (long long n = 0; n <= t_max && entries_ok; ++n)
        entries_ok = ch.h1(n) == h1[n];
    if (!entries_ok)
        throw internal_inconsistency(
            "numerical character inversion produced an invalid sequence");
    return ch;
}

/// The t = 1 case of the gap lemma: when n_0 > n_1 + 1, the n_0 points of
/// Z on a line form the degree-1 subscheme the lemma promises.
template <class K>
std::vector<Point<K>> character_gap_subscheme(const std::vector<Point<K>>& pts,
                                              long long t) {
    if (t != 1)
        throw unsupported_input(
            "only the t = 1 gap subscheme is implemented (the degree-1 case "
            "is the only one the alignment theorem needs)");
    const NumericalCharacter ch =
        numerical_character(pts, static_cast<long long>(pts.size()) + 1);
    if (ch.s < 2 || ch.entries[0] <= ch.entries[1] + 1)
        throw hypothesis_violation(
            "no gap n_0 > n_1 + 1 in the numerical character");
    const auto idx = maximal_collinear_subset(pts);
    if (static_cast<long long>(idx.size()) != ch.entries[0])
        throw internal_inconsistency(
            "maximal collinear subset does not have n_0 points");
    std::vector<Point<K>> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(pts[i]);
    return out;
}

// ---------------------------------------------------------------------------
// splitting type of the derivation bundle on a general line
// ---------------------------------------------------------------------------

/// Generic splitting type (a, b), a <= b, a + b + 1 = |Z|.
struct SplittingType {
    long long a = 0;
    long long b = 0;
};

/// a is the unique value with curves of degree a+1 through Z having
/// multiplicity a at a general point, but none of degree a with
/// multiplicity a-1. h^0 is upper semicontinuous in the point, so each
/// candidate takes the min over samples.
template <class K>
SplittingType splitting_type(const std::vector<Point<K>>& pts,
                             Sampler& sampler) {
    if (pts.size() < 3)
        throw input_error("splitting type needs at least 3 points");
    const RingContext ctx(3);
    if (max_aligned_points(pts) == static_cast<long long>(pts.size()))
        throw hypothesis_violation(
            "all points collinear (a pencil of lines): the splitting-type "
            "lemma assumes 1 <= a <= b");

    const FatPointScheme<K> z = FatPointScheme<K>::reduced(ctx, pts);
    const long long n_pts = static_cast<long long>(pts.size());
    for (long long a = 1; 2 * a <= n_pts - 1; ++a) {
        long long best = -1;
        for (int t = 0; t < sampler.count(); ++t) {
            const Point<K> p = sampler.template point_all_nonzero<K>(3);
            const long long dim = fat_point_system_dim_with(z, p, a, a + 1);
            best = best < 0 ? dim : std::min(best, dim);
        }
        if (best > 0) return SplittingType{a, n_pts - 1 - a};
    }
    throw internal_inconsistency(
        "no splitting degree found below (|Z|-1)/2; the splitting type "
        "always exists");
}

template <class K>
SplittingType splitting_type(const DualPointSet<K>& z, Sampler& sampler) {
    return splitting_type(z.points, sampler);
}

// ---------------------------------------------------------------------------
// Saito freeness
// ---------------------------------------------------------------------------

struct SaitoReport {
    bool free = false;
    long long a = -1; // minimal degree of a Jacobian syzygy
    long long b = -1; // |A| - 1 - a
    std::vector<long long> kernel_dims; // dim (D_0)_t for t = 0..t_max
    bool pattern_ok = false;     // dims match r'_{t-a} + r'_{t-b} throughout
    bool determinant_ok = false; // Saito: det(theta_E, theta_1, theta_2) = c f
    std::optional<std::pair<long long, long long>> exponents() const {
        if (!free) return std::nullopt;
        return std::make_pair(a, b);
    }
};

namespace detail {

/// Matrix of (g_1,g_2,g_3) |-> g_1 f_x + g_2 f_y + g_3 f_z on degree-t
/// triples; its kernel is the graded piece (D_0)_t.
template <class K>
Matrix<K> jacobian_syzygy_matrix(const RingContext& ctx,
                                 const std::vector<HomogeneousForm<K>>& partials,
                                 long long t) {
    Matrix<K> m(
        static_cast<std::size_t>(ctx.dim_of_degree(t + partials[0].degree)), 0);
    for (const auto& p : partials)
        m = hstack(m, multiplication_matrix(ctx, p, static_cast<int>(t)));
    return m;
}

/// Reassembles a kernel row of the stacked matrix into its three
/// component forms of degree t.
template <class K>
std::vector<HomogeneousForm<K>> split_derivation(const RingContext& ctx,
                                                 const std::vector<K>& row,
                                                 long long t) {
    const std::size_t rt = static_cast<std::size_t>(ctx.dim_of_degree(t));
    std::vector<HomogeneousForm<K>> comps(3, HomogeneousForm<K>(ctx, static_cast<int>(t)));
    for (int v = 0; v < 3; ++v)
        for (std::size_t j = 0; j < rt; ++j)
            comps[v].coeffs[j] = row[v * rt + j];
    return comps;
}

/// det of the 3x3 matrix with rows (x,y,z), theta_1, theta_2; a form of
/// degree 1 + deg theta_1 + deg theta_2.
template <class K>
HomogeneousForm<K> saito_determinant(const RingContext& ctx,
                                     const std::vector<HomogeneousForm<K>>& t1,
                                     const std::vector<HomogeneousForm<K>>& t2) {
    std::vector<HomogeneousForm<K>> euler;
    for (int v = 0; v < 3; ++v) {
        std::vector<K> c(3, K(0));
        c[v] = K(1);
        euler.push_back(linear_as_form(ctx, LinearForm<K>(std::move(c))));
    }
    const auto minor = [&](int p, int q) {
        return form_sub(multiply(ctx, t1[p], t2[q]), multiply(ctx, t1[q], t2[p]));
    };
    HomogeneousForm<K> det = multiply(ctx, euler[0], minor(1, 2));
    det = form_sub(det, multiply(ctx, euler[1], minor(0, 2)));
    det = form_add(det, multiply(ctx, euler[2], minor(0, 1)));
    return det;
}

/// Is g a nonzero scalar multiple of f?
template <class K>
bool proportional_forms(const HomogeneousForm<K>& g,
                        const HomogeneousForm<K>& f) {
    if (g.degree != f.degree) return false;
    std::size_t lead = f.coeffs.size();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (!scalar_is_zero(f.coeffs[i])) { lead = i; break; }
    if (lead == f.coeffs.size() || scalar_is_zero(g.coeffs[lead])) return false;
    const K c = g.coeffs[lead] / f.coeffs[lead];
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (g.coeffs[i] != c * f.coeffs[i]) return false;
    return true;
}

} // namespace detail

/// Freeness of the derivation bundle D_0 with exponents (a, b).
///
/// Two certificates are combined: the graded kernel dimensions of the
/// Jacobian map must match r'_{t-a} + r'_{t-b} for all t <= t_max, and a
/// minimal-degree derivation theta_1 together with a degree-b derivation
/// theta_2 outside R theta_1 must satisfy Saito's criterion
/// det(theta_E, theta_1, theta_2) = c f with c != 0. The determinant side
/// is decisive in both directions; the dimension pattern is reported for
/// the record.
template <class K>
SaitoReport saito_freeness(const LineArrangement<K>& arr, long long t_max) {
    const RingContext& ctx = arr.ctx;
    const HomogeneousForm<K> f = arr.defining_form();
    std::vector<HomogeneousForm<K>> partials;
    for (int v = 0; v < 3; ++v) partials.push_back(differentiate(ctx, f, v));

    SaitoReport rep;
    rep.kernel_dims.resize(t_max + 1, 0);
    for (long long t = 0; t <= t_max; ++t) {
        const Matrix<K> m = detail::jacobian_syzygy_matrix(ctx, partials, t);
        rep.kernel_dims[t] =
            static_cast<long long>(m.cols()) - static_cast<long long>(rank(m));
        if (rep.a < 0 && rep.kernel_dims[t] > 0) rep.a = t;
    }
    if (rep.a < 0)
        throw insufficient_bound(
            "no derivation found up to t_max; raise the degree bound");
    rep.b = static_cast<long long>(arr.size()) - 1 - rep.a;
    if (t_max < rep.b)
        throw insufficient_bound(
            "t_max is below the expected second exponent b = |A| - 1 - a");

    rep.pattern_ok = true;
    for (long long t = 0; t <= t_max; ++t)
        rep.pattern_ok = rep.pattern_ok &&
                         rep.kernel_dims[t] == ctx.dim_of_degree(t - rep.a) +
                                                   ctx.dim_of_degree(t - rep.b);
    if (!rep.pattern_ok) return rep;

    const Matrix<K> ker_a =
        kernel_basis(detail::jacobian_syzygy_matrix(ctx, partials, rep.a));
    const auto theta1 = detail::split_derivation(ctx, ker_a.row(0), rep.a);

    // theta_2: a degree-b derivation outside R_{b-a} theta_1
    const Matrix<K> ker_b =
        kernel_basis(detail::jacobian_syzygy_matrix(ctx, partials, rep.b));
    const auto mons = ctx.monomial_basis(rep.b - rep.a);
    const std::size_t rb = static_cast<std::size_t>(ctx.dim_of_degree(rep.b));
    Matrix<K> span(mons.size(), 3 * rb);
    for (std::size_t mi = 0; mi < mons.size(); ++mi) {
        HomogeneousForm<K> mono(ctx, static_cast<int>(rep.b - rep.a));
        mono.coeffs[ctx.index_of(mons[mi])] = K(1);
        for (int v = 0; v < 3; ++v) {
            const HomogeneousForm<K> prod = multiply(ctx, mono, theta1[v]);
            for (std::size_t j = 0; j < rb; ++j)
                span(mi, v * rb + j) = prod.coeffs[j];
        }
    }
    const QuotientBasis<K> trivial_span(span, 3 * rb);
    std::optional<std::vector<K>> theta2_row;
    for (std::size_t r0 = 0; r0 < ker_b.rows(); ++r0) {
        if (!trivial_span.contains(ker_b.row(r0))) {
            theta2_row = ker_b.row(r0);
            break;
        }
    }
    if (!theta2_row)
        throw internal_inconsistency(
            "kernel dimensions match the free pattern but every degree-b "
            "derivation is a multiple of theta_1");
    const auto theta2 = detail::split_derivation(ctx, *theta2_row, rep.b);

    const HomogeneousForm<K> det = detail::saito_determinant(ctx, theta1, theta2);
    rep.determinant_ok = detail::proportional_forms(det, f);
    rep.free = rep.pattern_ok && rep.determinant_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// intersection lattice fingerprint
// ---------------------------------------------------------------------------

/// Canonical fingerprint of the incidence structure (points of pairwise
/// intersection together with the lines through them). Two arrangements
/// get the same strong fingerprint exactly when their lattices are
/// isomorphic up to line relabeling.
///
/// Exact canonicalization minimizes the incidence description over line
/// relabelings, pruned by an iterated structural refinement of the lines.
/// That search is factorial in the worst case, so it is attempted only
/// for arrangements of at most 12 lines whose refinement classes stay
/// small; otherwise the fingerprint degrades to the multiset of point
/// multiplicities and per-line profiles and is flagged as weak.
struct LatticeFingerprint {
    bool weak = false;
    std::string value;
    std::vector<long long> point_multiplicities; // sorted descending

    friend bool operator==(const LatticeFingerprint& a,
                           const LatticeFingerprint& b) {
        return a.weak == b.weak && a.value == b.value;
    }
};

namespace detail {

struct IncidenceStructure {
    std::size_t num_lines = 0;
    std::vector<std::vector<std::size_t>> edges; // point -> sorted line indices
};

template <class K>
IncidenceStructure incidence_of(const LineArrangement<K>& arr) {
    IncidenceStructure inc;
    inc.num_lines = arr.size();
    std::vector<Point<K>> seen;
    for (std::size_t a = 0; a < arr.size(); ++a) {
        for (std::size_t b = a + 1; b < arr.size(); ++b) {
            const auto cross = line_through(Point<K>(arr.lines[a].coeffs),
                                            Point<K>(arr.lines[b].coeffs));
            const Point<K> p(cross);
            bool duplicate = false;
            for (const auto& q : seen) duplicate = duplicate || q == p;
            if (duplicate) continue;
            seen.push_back(p);
            std::vector<std::size_t> through;
            for (std::size_t c = 0; c < arr.size(); ++c) {
                K s(0);
                for (int v = 0; v < 3; ++v)
                    s += arr.lines[c].coeffs[v] * p.coords[v];
                if (scalar_is_zero(s)) through.push_back(c);
            }
            inc.edges.push_back(std::move(through));
        }
    }
    std::sort(inc.edges.begin(), inc.edges.end());
    return inc;
}

/// Iterated refinement: lines start colored by their profile (sorted edge
/// sizes through them) and are recolored by the colors they meet until
/// stable. Color names are structural strings, comparable across
/// arrangements.
inline std::vector<std::string> refine_line_colors(const IncidenceStructure& inc) {
    std::vector<std::string> color(inc.num_lines, "");
    for (std::size_t round = 0; round <= inc.num_lines; ++round) {
        std::vector<std::string> next(inc.num_lines);
        for (std::size_t i = 0; i < inc.num_lines; ++i) {
            std::vector<std::string> parts;
            for (const auto& e : inc.edges) {
                if (std::find(e.begin(), e.end(), i) == e.end()) continue;
                std::vector<std::string> others;
                for (std::size_t j : e)
                    if (j != i) others.push_back(color[j]);
                std::sort(others.begin(), others.end());
                std::string part = "(" + std::to_string(e.size()) + ":";
                for (const auto& o : others) part += o + ",";
                part += ")";
                parts.push_back(std::move(part));
            }
            std::sort(parts.begin(), parts.end());
            next[i] = "[" + color[i] + "|";
            for (const auto& p : parts) next[i] += p;
            next[i] += "]";
        }
        // compress names to keep strings short but canonical
        std::map<std::string, std::size_t> ids;
        for (const auto& s : next) ids.emplace(s, 0);
        std::size_t id = 0;
        for (auto& [sig, val] : ids) val = id++;
        std::vector<std::string> compressed(inc.num_lines);
        for (std::size_t i = 0; i < inc.num_lines; ++i)
            compressed[i] = std::to_string(ids[next[i]]) + "#" +
                            std::to_string(ids.size());
        if (compressed == color) break;
        color = std::move(compressed);
    }
    return color;
}

/// The row a newly placed line contributes to the canonical description:
/// for each edge through it, the edge size and the placed positions it
/// meets.
inline std::vector<std::vector<long long>>
placement_row(const IncidenceStructure& inc, const std::vector<long long>& pos,
              std::size_t line) {
    std::vector<std::vector<long long>> row;
    for (const auto& e : inc.edges) {
        if (std::find(e.begin(), e.end(), line) == e.end()) continue;
        std::vector<long long> desc = {static_cast<long long>(e.size())};
        std::vector<long long> met;
        for (std::size_t j : e)
            if (j != line && pos[j] >= 0) met.push_back(pos[j]);
        std::sort(met.begin(), met.end());
        desc.insert(desc.end(), met.begin(), met.end());
        row.push_back(std::move(desc));
    }
    std::sort(row.begin(), row.end());
    return row;
}

struct CanonicalSearch {
    const IncidenceStructure& inc;
    const std::vector<std::vector<std::size_t>>& class_blocks;
    std::vector<long long> pos;
    std::vector<bool> used;
    std::vector<std::vector<std::vector<long long>>> current, best;
    bool have_best = false;

    void run(std::size_t depth) {
        if (depth == inc.num_lines) {
            if (!have_best || current < best) {
                best = current;
                have_best = true;
            }
            return;
        }
        // the class block this depth draws from
        std::size_t offset = 0, block = 0;
        while (offset + class_blocks[block].size() <= depth)
            offset += class_blocks[block++].size();
        for (std::size_t cand : class_blocks[block]) {
            if (used[cand]) continue;
            auto row = placement_row(inc, pos, cand);
            current.push_back(row);
            // prefix pruning against the best complete description
            if (have_best) {
                const auto cmp = std::lexicographical_compare_three_way(
                    current.begin(), current.end(), best.begin(),
                    best.begin() + current.size());
                if (cmp > 0) {
                    current.pop_back();
                    continue;
                }
            }
            used[cand] = true;
            pos[cand] = static_cast<long long>(depth);
            run(depth + 1);
            pos[cand] = -1;
            used[cand] = false;
            current.pop_back();
        }
    }
};

} // namespace detail

template <class K>
LatticeFingerprint intersection_lattice(const LineArrangement<K>& arr) {
    const auto inc = detail::incidence_of(arr);

    LatticeFingerprint fp;
    for (const auto& e : inc.edges)
        fp.point_multiplicities.push_back(static_cast<long long>(e.size()));
    std::sort(fp.point_multiplicities.rbegin(), fp.point_multiplicities.rend());

    const auto colors = detail::refine_line_colors(inc);
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < inc.num_lines; ++i)
        classes[colors[i]].push_back(i);
    std::size_t max_class = 0;
    for (const auto& [sig, members] : classes)
        max_class = std::max(max_class, members.size());

    if (inc.num_lines > 12 || max_class > 8) {
        // exact canonicalization is factorial; fall back to invariants
        std::ostringstream os;
        os << "weak;lines=" << inc.num_lines << ";mults=";
        for (long long m : fp.point_multiplicities) os << m << ",";
        os << ";classes=";
        for (const auto& [sig, members] : classes)
            os << members.size() << ",";
        fp.weak = true;
        fp.value = os.str();
        return fp;
    }

    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& [sig, members] : classes) blocks.push_back(members);

    detail::CanonicalSearch search{
        inc, blocks, std::vector<long long>(inc.num_lines, -1),
        std::vector<bool>(inc.num_lines, false), {}, {}, false};
    search.run(0);

    std::ostringstream os;
    os << "lines=" << inc.num_lines << ";blocks=";
    for (const auto& b : blocks) os << b.size() << ",";
    os << ";rows=";
    for (const auto& row : search.best) {
        os << "{";
        for (const auto& desc : row) {
            os << "(";
            for (long long v : desc) os << v << " ";
            os << ")";
        }
        os << "}";
    }
    fp.value = os.str();
    return fp;
}

// ---------------------------------------------------------------------------
// the bundle-splitting / SLP-failure equivalence
// ---------------------------------------------------------------------------

struct PropBundleReport {
    long long d = 0;
    long long n = 0; // number of generators minus (2d+1)
    bool fails_slp = false;
    SplittingType split;
    long long splitting_gap = 0; // b - a
    bool non_balanced = false;   // gap >= 2
    bool chern_even = false;     // a + b even: "unstable" label equivalent
    bool consistent = false;     // fails_slp == (a <= d-1)
    LefschetzReport slp;
};

/// For 2d+1+n powers of distinct linear forms, minimally generated in
/// degree d: SLP failure at range 2 in degree d-2 is equivalent to a
/// non-balanced splitting type (d-s, d+s+n) with s >= 1.
template <class K>
PropBundleReport prop_bundle_equivalence(const LineArrangement<K>& arr,
                                         long long d, Sampler& sampler) {
    const long long n =
        static_cast<long long>(arr.size()) - (2 * d + 1);
    if (n < 0)
        throw input_error("prop_bundle needs at least 2d+1 lines");

    std::vector<std::pair<LinearForm<K>, int>> gens;
    for (const auto& l : arr.lines)
        gens.emplace_back(l, static_cast<int>(d));
    const EquigeneratedIdeal<K> ideal =
        PowerIdeal<K>(arr.ctx, std::move(gens)).as_equigenerated();

    if (!is_minimally_generated(ideal))
        throw hypothesis_violation(
            "the ideal is not minimally generated in degree d: the dual "
            "points contain at least d+2 aligned ones (alignment "
            "criterion), so the equivalence does not apply");

    PropBundleReport rep;
    rep.d = d;
    rep.n = n;
    rep.slp = slp_check(ideal, 0, 2, sampler);
    rep.fails_slp = rep.slp.fails;
    rep.split = splitting_type(dual_points(arr), sampler);
    rep.splitting_gap = rep.split.b - rep.split.a;
    rep.non_balanced = rep.splitting_gap >= 2;
    rep.chern_even = (rep.split.a + rep.split.b) % 2 == 0;
    rep.consistent = rep.fails_slp == (rep.split.a <= d - 1);
    return rep;
}

} // namespace lef

#endif // LEF_ARRANGEMENTS_HPP
