#ifndef L2Q_FINITEFIELD_HPP
#define L2Q_FINITEFIELD_HPP

#include <string>
#include <vector>

#include "l2q/intutil.hpp"

namespace l2q {

/// Field context for F_{p^k} = F_p[x]/(modulus). One canonical context per
/// (p, k) exists per session: the modulus for k >= 2 is the least monic
/// irreducible of degree k, coefficient vectors compared from the top
/// coefficient down. Contexts live in a global registry and never move, so
/// elements can hold plain pointers.
class FqCtx {
public:
    Int p;
    int k = 1;
    std::vector<Int> modulus;  // monic, size k+1 (size 0 when k == 1)

    Int order() const;  // p^k

    bool operator==(const FqCtx& o) const { return p == o.p && k == o.k; }

    std::string str() const;
};

/// Registry lookup; creates (and caches) the canonical context.
const FqCtx* field(const Int& p, int k = 1);

class FqElem {
public:
    FqElem() : F_(nullptr) {}
    FqElem(const FqCtx* F, std::vector<Int> coords);
    static FqElem zero(const FqCtx* F);
    static FqElem one(const FqCtx* F);
    static FqElem from_int(const FqCtx* F, const Int& n);
    /// The residue class of x (the canonical ring generator; for k = 1 this
    /// is just p's image of 0... use from_int instead).
    static FqElem gen(const FqCtx* F);

    const FqCtx* field() const { return F_; }
    const std::vector<Int>& coords() const { return c_; }
    bool is_zero() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inv() const;  // throws on zero
    FqElem pow(const Int& e) const;
    FqElem frobenius(int j = 1) const;  // x -> x^(p^j)

    /// Degree of the subfield generated by this element: least d with
    /// x^(p^d) = x. Always divides k.
    int subfield_degree() const;

    /// Norm down to F_{p^j} (j must divide k), returned in the canonical
    /// F_{p^j} context.
    FqElem norm_to(int j) const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }
    /// Arbitrary total order on elements of one field (coordinate lex).
    bool operator<(const FqElem& o) const;

    std::uint64_t hash() const;
    std::string str() const;

private:
    const FqCtx* F_;
    std::vector<Int> c_;  // size k, residues in [0, p)
};

/// Canonical embedding F_{p^j} -> F_{p^a} for j | a: sends the generator of
/// F_{p^j} to the least root of its modulus in F_{p^a}. Cached per (p, j, a).
FqElem embed(const FqElem& e, const FqCtx* target);

/// Inverse of embed on the image: e must be fixed by Frobenius^j; returns the
/// corresponding element of the canonical F_{p^j}.
FqElem section(const FqElem& e, int j);

/// Re-expresses e in the canonical field of its own subfield degree.
FqElem minimize_field(const FqElem& e);

/// Coefficient ring wrapper so Poly<FqRing> works where extension-field
/// coefficients are needed.
struct FqRing {
    const FqCtx* F = nullptr;
    using Elem = FqElem;
    static constexpr bool is_field = true;
    Elem zero() const { return FqElem::zero(F); }
    Elem one() const { return FqElem::one(F); }
    Elem from_int(const Int& n) const { return FqElem::from_int(F, n); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.str(); }
    bool same(const FqRing& o) const { return F == o.F; }
};

}  // namespace l2q

#endif
