#include "l2q/mat2.hpp"

namespace l2q {

Mat2 Mat2::identity(const FqCtx* F) {
    return {FqElem::one(F), FqElem::zero(F), FqElem::zero(F), FqElem::one(F)};
}

Mat2 Mat2::from_ints(const FqCtx* F, const Int& a, const Int& b, const Int& c, const Int& d) {
    return {FqElem::from_int(F, a), FqElem::from_int(F, b), FqElem::from_int(F, c),
            FqElem::from_int(F, d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::operator-() const { return {-a, -b, -c, -d}; }

Mat2 Mat2::sl2_inverse() const { return {d, -b, -c, a}; }

Mat2 Mat2::embedded(const FqCtx* target) const {
    return {embed(a, target), embed(b, target), embed(c, target), embed(d, target)};
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

bool Mat2::operator<(const Mat2& o) const {
    if (!(a == o.a)) return a < o.a;
    if (!(b == o.b)) return b < o.b;
    if (!(c == o.c)) return c < o.c;
    return d < o.d;
}

Mat2 Mat2::proj_normalized() const {
    const FqElem* entries[4] = {&a, &b, &c, &d};
    for (auto* e : entries) {
        if (e->is_zero()) continue;
        FqElem neg = -*e;
        if (neg < *e) return -*this;
        return *this;
    }
    return *this;
}

std::uint64_t Mat2::hash() const {
    std::uint64_t h = a.hash();
    h = hash_combine(h, b.hash());
    h = hash_combine(h, c.hash());
    h = hash_combine(h, d.hash());
    return h;
}

std::string Mat2::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 evaluate_word(const Word& w, const std::vector<Mat2>& tuple) {
    if (tuple.empty()) throw error("evaluate_word: empty tuple");
    Mat2 acc = Mat2::identity(tuple[0].field());
    for (int x : w.letters()) {
        size_t i = std::abs(x);
        if (i == 0 || i > tuple.size()) throw error("evaluate_word: generator out of range");
        acc = acc * (x > 0 ? tuple[i - 1] : tuple[i - 1].sl2_inverse());
    }
    return acc;
}

}  // namespace l2q
