#ifndef L2Q_MAT2_HPP
#define L2Q_MAT2_HPP

#include <vector>

#include "l2q/finitefield.hpp"
#include "l2q/words.hpp"

namespace l2q {

struct Mat2 {
    FqElem a, b, c, d;  // row major

    static Mat2 identity(const FqCtx* F);
    static Mat2 from_ints(const FqCtx* F, const Int& a, const Int& b, const Int& c,
                          const Int& d);

    const FqCtx* field() const { return a.field(); }

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const;
    FqElem trace() const { return a + d; }
    FqElem det() const { return a * d - b * c; }
    /// Inverse for determinant-one matrices: [[d,-b],[-c,a]].
    Mat2 sl2_inverse() const;
    Mat2 embedded(const FqCtx* target) const;

    bool operator==(const Mat2& o) const;
    bool operator<(const Mat2& o) const;  // coordinate order, for canonical sets

    /// Scalar-normalized representative of {M, -M}: negates if needed so the
    /// first nonzero entry is at most (p-1)/2 (any fixed rule works; this one
    /// is stable under field embedding of subfield matrices only if entries
    /// stay put, so compare within one field).
    Mat2 proj_normalized() const;

    std::uint64_t hash() const;
    std::string str() const;
};

/// Product of the tuple's matrices along the word; inverses via sl2_inverse,
/// so the tuple must consist of determinant-one matrices.
Mat2 evaluate_word(const Word& w, const std::vector<Mat2>& tuple);

}  // namespace l2q

#endif
