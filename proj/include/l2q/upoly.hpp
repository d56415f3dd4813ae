#ifndef L2Q_UPOLY_HPP
#define L2Q_UPOLY_HPP

#include <vector>

#include "l2q/finitefield.hpp"

namespace l2q {

/// Dense univariate polynomial over F_{p^k}. Coefficients ascending; the
/// top coefficient of a nonzero polynomial is nonzero.
class UPoly {
public:
    UPoly() : F_(nullptr) {}
    explicit UPoly(const FqCtx* F) : F_(F) {}
    UPoly(const FqCtx* F, std::vector<FqElem> coeffs);

    static UPoly x(const FqCtx* F);
    static UPoly constant(const FqElem& c);
    /// Builds c0 + c1 X + ... from integer coefficients.
    static UPoly from_ints(const FqCtx* F, const std::vector<Int>& coeffs);

    const FqCtx* field() const { return F_; }
    const std::vector<FqElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const FqElem& lead() const;
    FqElem coeff(int i) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const FqElem& c) const;
    UPoly shifted(int e) const;  // * X^e
    UPoly monic() const;
    UPoly derivative() const;
    FqElem eval(const FqElem& at) const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    const FqCtx* F_;
    std::vector<FqElem> c_;
};

/// quotient/remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic (or zero)
/// base^e mod f, e arbitrary precision.
UPoly powmod(const UPoly& base, const Int& e, const UPoly& f);
/// Coefficient-wise embedding into an extension field of the same p.
UPoly embed(const UPoly& f, const FqCtx* target);

bool is_irreducible(const UPoly& f);

/// All roots of f in its own coefficient field, sorted, each once.
std::vector<FqElem> upoly_roots(const UPoly& f);

struct UFactor {
    UPoly factor;  // monic irreducible
    unsigned multiplicity;
};

/// Full factorization into monic irreducibles with multiplicities;
/// factors sorted by (degree, coefficients). The leading unit is dropped.
/// Squarefree split by gcd with the derivative (with p-th roots in the
/// inseparable case), then distinct-degree and equal-degree splitting; the
/// equal-degree stage draws from a generator seeded by the polynomial.
std::vector<UFactor> upoly_factor(const UPoly& f);

}  // namespace l2q

#endif
