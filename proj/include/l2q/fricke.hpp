#ifndef L2Q_FRICKE_HPP
#define L2Q_FRICKE_HPP

#include <array>
#include <map>
#include <mutex>
#include <unordered_map>

#include "l2q/polyring.hpp"
#include "l2q/words.hpp"

namespace l2q {

/// Subsets of {1..m} as bitmasks, bit i-1 for generator i.
std::string subset_name(std::uint32_t mask);  // "123" for {1,2,3}

/// The distinguished index family: singletons, pairs {i,j} with i <= 2, and
/// triples {1,2,k}.
bool in_index_family(std::uint32_t mask, int m);

/// Trace coordinate ring bookkeeping for m generators.
///
/// Two polynomial rings are maintained: the full ring Z[x_J] over all
/// nonempty subsets J (where trace polynomials of words live), and the
/// coordinate ring Z[x_I] over the distinguished family (where ideals live).
/// normal_form rewrites the former into the latter at the cost of a power of
/// rho = x1^2 + x2^2 + x12^2 - x1*x2*x12 - 4.
class TraceRing {
public:
    explicit TraceRing(int m);

    int m() const { return m_; }

    const PolyCtxPtr& full_ctx() const { return full_ctx_; }
    const PolyCtxPtr& im_ctx() const { return im_ctx_; }

    /// Masks of the distinguished family in coordinate order: singletons
    /// ascending, pairs {1,j}, pairs {2,j}, triples {1,2,k}.
    const std::vector<std::uint32_t>& im_masks() const { return im_masks_; }

    std::uint32_t full_var(std::uint32_t mask) const { return mask - 1; }
    std::uint32_t im_var(std::uint32_t mask) const;          // throws if absent
    std::uint32_t im_mask(std::uint32_t var) const { return im_masks_[var]; }

    /// Trace polynomial of a word, over the full ring. Memoized on the
    /// canonical cyclic key, so conjugates and inverses share one entry.
    PolyZ tau(const Word& w) const;

    /// Rewrites f into coordinate-ring variables; returns (g, e) with
    /// f = g / rho^e wherever rho does not vanish.
    std::pair<PolyZ, unsigned> normal_form(const PolyZ& f) const;

    /// tau followed by normal_form.
    std::pair<PolyZ, unsigned> tau_nf(const Word& w) const;

    PolyZ rho() const { return rho_im_; }
    /// The Fricke relation tying x1, x2, xi, x12, x1i, x2i, x12i; 3 <= i <= m.
    PolyZ phi(int i) const;
    /// Reconstruction coefficients (lambda^i_0, _1, _2, _12).
    std::array<PolyZ, 4> lambda(int i) const;

    /// rho evaluated at arbitrary ring elements.
    template <class R>
    static typename R::Elem rho_at(const R& r, const typename R::Elem& t1,
                                   const typename R::Elem& t2, const typename R::Elem& t12) {
        auto s = r.add(r.add(r.mul(t1, t1), r.mul(t2, t2)), r.mul(t12, t12));
        s = r.sub(s, r.mul(r.mul(t1, t2), t12));
        return r.sub(s, r.from_int(4));
    }

    /// phi evaluated at (t1, t2, ti, t12, t1i, t2i, t12i).
    template <class R>
    static typename R::Elem phi_at(const R& r, const std::array<typename R::Elem, 7>& t) {
        const auto &x1 = t[0], &x2 = t[1], &x3 = t[2], &x12 = t[3], &x13 = t[4], &x23 = t[5],
                   &x123 = t[6];
        auto lin = r.sub(r.sub(r.sub(r.mul(r.mul(x1, x2), x3), r.mul(x1, x23)), r.mul(x2, x13)),
                         r.mul(x3, x12));
        auto v = r.add(r.mul(x123, x123), r.mul(lin, x123));
        v = r.add(v, r.mul(x1, x1));
        v = r.add(v, r.mul(x2, x2));
        v = r.add(v, r.mul(x3, x3));
        v = r.add(v, r.mul(x12, x12));
        v = r.add(v, r.mul(x13, x13));
        v = r.add(v, r.mul(x23, x23));
        v = r.sub(v, r.mul(r.mul(x1, x2), x12));
        v = r.sub(v, r.mul(r.mul(x1, x3), x13));
        v = r.sub(v, r.mul(r.mul(x2, x3), x23));
        v = r.add(v, r.mul(r.mul(x12, x13), x23));
        return r.sub(v, r.from_int(4));
    }

private:
    PolyZ full_variable(std::uint32_t mask) const;
    PolyZ tau_impl(const std::vector<int>& canon) const;
    /// rho * x_J = (rewrite RHS); valid for any J with |J - {1,2}| >= 2.
    const PolyZ& rewrite_rhs(std::uint32_t mask) const;
    std::array<PolyZ, 4> lambda_full(int i) const;

    int m_;
    PolyCtxPtr full_ctx_, im_ctx_;
    std::vector<std::uint32_t> im_masks_;
    std::map<std::uint32_t, std::uint32_t> im_var_of_mask_;
    PolyZ rho_im_, rho_full_;

    mutable std::mutex mu_;
    mutable std::map<std::vector<int>, PolyZ> tau_memo_;
    mutable std::map<std::uint32_t, PolyZ> rewrite_memo_;
};

}  // namespace l2q

#endif
