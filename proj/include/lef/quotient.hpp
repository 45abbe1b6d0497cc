#ifndef LEF_QUOTIENT_HPP
#define LEF_QUOTIENT_HPP

#include "lef/matrix.hpp"

#include <cstddef>
#include <vector>

namespace lef {

/// Quotient of a coordinate space K^N by a row space W.
///
/// The quotient basis is the set of non-pivot coordinates of the RREF of
/// W — for graded pieces this means the quotient is spanned by monomials,
/// chosen greedily in the fixed monomial order. Only ranks computed
/// through a QuotientBasis are contractual; the particular complement is
/// a debugging convenience.
template <class K>
class QuotientBasis {
public:
    QuotientBasis(const Matrix<K>& subspace_rows, std::size_t ambient)
        : ambient_(ambient), ech_(reduced_echelon(subspace_rows)) {
        if (subspace_rows.rows() > 0 && subspace_rows.cols() != ambient)
            throw dimension_mismatch("subspace rows have wrong ambient dimension");
        std::vector<bool> is_pivot(ambient_, false);
        for (std::size_t c : ech_.pivot_cols) is_pivot[c] = true;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!is_pivot[c]) complement_.push_back(c);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t subspace_dim() const { return ech_.rank; }
    std::size_t dim() const { return ambient_ - ech_.rank; }
    const std::vector<std::size_t>& complement_coords() const {
        return complement_;
    }

    /// Coordinates of the class of v in the quotient basis.
    std::vector<K> reduce(std::vector<K> v) const {
        if (v.size() != ambient_)
            throw dimension_mismatch("vector has wrong ambient dimension");
        for (std::size_t s = 0; s < ech_.rank; ++s) {
            const std::size_t pc = ech_.pivot_cols[s];
            if (scalar_is_zero(v[pc])) continue;
            const K f = v[pc];
            for (std::size_t j = pc; j < ambient_; ++j)
                v[j] = v[j] - f * ech_.rref(s, j);
        }
        std::vector<K> out(complement_.size());
        for (std::size_t i = 0; i < complement_.size(); ++i)
            out[i] = v[complement_[i]];
        return out;
    }

    /// Membership of v in the subspace W.
    bool contains(const std::vector<K>& v) const {
        for (const K& c : reduce(v))
            if (!scalar_is_zero(c)) return false;
        return true;
    }

private:
    std::size_t ambient_;
    RowEchelon<K> ech_;
    std::vector<std::size_t> complement_;
};

} // namespace lef

#endif // LEF_QUOTIENT_HPP
