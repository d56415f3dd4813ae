#ifndef L2Q_POLYRING_HPP
#define L2Q_POLYRING_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "l2q/intutil.hpp"
#include "l2q/monomial.hpp"

namespace l2q {

// ---------------------------------------------------------------------------
// Coefficient rings. A ring type provides Elem plus the usual operations;
// instances are carried by value (they are empty or hold a shared modulus).
// ---------------------------------------------------------------------------

struct ZZRing {
    using Elem = Int;
    static constexpr bool is_field = false;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_int(const Int& n) const { return n; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
    bool same(const ZZRing&) const { return true; }
};

struct QQRing {
    using Elem = Rat;
    static constexpr bool is_field = true;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(const Int& n) const { return Rat(n); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw error("division by zero");
        return 1 / a;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
    bool same(const QQRing&) const { return true; }
};

/// Prime field F_p, elements as residues in [0, p).
struct GFpRing {
    Int p;
    using Elem = Int;
    static constexpr bool is_field = true;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_int(const Int& n) const { return mod_pos(n, p); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a + b;
        if (r >= p) r -= p;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a - b;
        if (r < 0) r += p;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
    Elem neg(const Elem& a) const { return a == 0 ? a : Elem(p - a); }
    Elem inv(const Elem& a) const { return invmod(a, p); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
    bool same(const GFpRing& o) const { return p == o.p; }
};

// ---------------------------------------------------------------------------
// Sparse distributed polynomials, terms kept sorted descending under the
// ring context's monomial order. Immutable value semantics.
// ---------------------------------------------------------------------------

template <class R>
class Poly {
public:
    using Elem = typename R::Elem;
    struct Term {
        Monomial mono;
        Elem coeff;
    };

    Poly() = default;
    Poly(PolyCtxPtr ctx, R ring) : ctx_(std::move(ctx)), ring_(std::move(ring)) {}

    static Poly zero(PolyCtxPtr ctx, R ring) { return Poly(std::move(ctx), std::move(ring)); }

    static Poly constant(PolyCtxPtr ctx, R ring, Elem c) {
        Poly f(std::move(ctx), std::move(ring));
        if (!f.ring_.is_zero(c)) f.terms_.push_back({Monomial(), std::move(c)});
        return f;
    }

    static Poly variable(PolyCtxPtr ctx, R ring, std::uint32_t v) {
        Poly f(std::move(ctx), std::move(ring));
        f.terms_.push_back({Monomial::var(v), f.ring_.one()});
        return f;
    }

    static Poly from_terms(PolyCtxPtr ctx, R ring, std::vector<Term> terms) {
        Poly f(std::move(ctx), std::move(ring));
        std::map<Monomial, Elem, MonoLess> acc{MonoLess{f.ctx_.get()}};
        for (auto& t : terms) {
            auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second = f.ring_.add(it->second, t.coeff);
        }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!f.ring_.is_zero(it->second)) f.terms_.push_back({it->first, it->second});
        return f;
    }

    const PolyCtxPtr& ctx() const { return ctx_; }
    const R& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    Elem constant_value() const {
        return terms_.empty() ? ring_.zero() : terms_[0].coeff;
    }

    const Monomial& lead_mono() const {
        if (terms_.empty()) throw error("lead of zero polynomial");
        return terms_[0].mono;
    }
    const Elem& lead_coeff() const {
        if (terms_.empty()) throw error("lead of zero polynomial");
        return terms_[0].coeff;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    std::uint32_t degree_in(std::uint32_t v) const {
        std::uint32_t d = 0;
        for (auto& t : terms_) d = std::max(d, t.mono.exponent(v));
        return d;
    }

    bool uses_var(std::uint32_t v) const {
        for (auto& t : terms_)
            if (t.mono.exponent(v)) return true;
        return false;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
        return r;
    }

    Poly operator+(const Poly& o) const { return axpy(ring_.one(), Monomial(), o); }
    Poly operator-(const Poly& o) const { return axpy(ring_.neg(ring_.one()), Monomial(), o); }

    /// *this + c * x^m * o, single merge pass.
    Poly axpy(const Elem& c, const Monomial& m, const Poly& o) const {
        check_compat(o);
        Poly r(ctx_, ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j >= o.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
                continue;
            }
            Monomial om = o.terms_[j].mono * m;
            if (i >= terms_.size()) {
                Elem cc = ring_.mul(c, o.terms_[j].coeff);
                if (!ring_.is_zero(cc)) r.terms_.push_back({std::move(om), std::move(cc)});
                ++j;
                continue;
            }
            int cmp = mon_cmp(terms_[i].mono, om, ctx_->order, ctx_->nvars);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                Elem cc = ring_.mul(c, o.terms_[j].coeff);
                if (!ring_.is_zero(cc)) r.terms_.push_back({std::move(om), std::move(cc)});
                ++j;
            } else {
                Elem cc = ring_.add(terms_[i].coeff, ring_.mul(c, o.terms_[j].coeff));
                if (!ring_.is_zero(cc)) r.terms_.push_back({terms_[i].mono, std::move(cc)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_compat(o);
        std::map<Monomial, Elem, MonoLess> acc{MonoLess{ctx_.get()}};
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                Elem c = ring_.mul(a.coeff, b.coeff);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = ring_.add(it->second, c);
            }
        Poly r(ctx_, ring_);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!ring_.is_zero(it->second)) r.terms_.push_back({it->first, it->second});
        return r;
    }

    Poly scaled(const Elem& c) const {
        Poly r(ctx_, ring_);
        if (ring_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem cc = ring_.mul(t.coeff, c);
            if (!ring_.is_zero(cc)) r.terms_.push_back({t.mono, std::move(cc)});
        }
        return r;
    }

    Poly mono_scaled(const Elem& c, const Monomial& m) const {
        Poly r(ctx_, ring_);
        if (ring_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem cc = ring_.mul(t.coeff, c);
            if (!ring_.is_zero(cc)) r.terms_.push_back({t.mono * m, std::move(cc)});
        }
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(ctx_, ring_, ring_.one());
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = e > 1 ? b * b : b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono ||
                !ring_.equal(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Evaluate with a coefficient coercion into another ring S.
    template <class S, class Coerce>
    typename S::Elem eval(const S& s, const std::vector<typename S::Elem>& point,
                          Coerce coerce) const {
        typename S::Elem acc = s.zero();
        for (auto& t : terms_) {
            typename S::Elem v = coerce(t.coeff);
            for (auto& [var, e] : t.mono.exps()) {
                if (var >= point.size()) throw error("eval: point too short");
                for (std::uint32_t i = 0; i < e; ++i) v = s.mul(v, point[var]);
            }
            acc = s.add(acc, v);
        }
        return acc;
    }

    /// Coefficient-wise image in another ring (zero images dropped). The term
    /// order is preserved, so the target ctx must share this ctx's order.
    template <class S, class Coerce>
    Poly<S> map_coeffs(PolyCtxPtr tctx, S s, Coerce coerce) const {
        Poly<S> r(std::move(tctx), std::move(s));
        std::vector<typename Poly<S>::Term> ts;
        for (auto& t : terms_) {
            typename S::Elem c = coerce(t.coeff);
            if (!r.ring().is_zero(c)) ts.push_back({t.mono, std::move(c)});
        }
        r.set_terms_sorted(std::move(ts));
        return r;
    }

    void set_terms_sorted(std::vector<Term> ts) { terms_ = std::move(ts); }

    /// Re-sorts the terms for a context with a different monomial order.
    Poly with_ctx(const PolyCtxPtr& tctx) const {
        Poly r(tctx, ring_);
        std::vector<Term> ts = terms_;
        std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
            return mon_cmp(a.mono, b.mono, tctx->order, tctx->nvars) > 0;
        });
        r.terms_ = std::move(ts);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& t : terms_) {
            std::string c = ring_.str(t.coeff);
            bool neg = !c.empty() && c[0] == '-';
            if (first) {
                if (neg) s += "-", c = c.substr(1);
            } else {
                s += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            first = false;
            std::string mono;
            for (auto& [v, e] : t.mono.exps()) {
                if (!mono.empty()) mono += "*";
                mono += ctx_->name(v);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty())
                s += c;
            else if (c == "1")
                s += mono;
            else
                s += c + "*" + mono;
        }
        return s;
    }

private:
    struct MonoLess {
        const PolyCtx* ctx;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return mon_cmp(a, b, ctx->order, ctx->nvars) < 0;
        }
    };

    void check_compat(const Poly& o) const {
        if (!ring_.same(o.ring_)) throw error("polynomial domain mismatch");
        if (ctx_.get() != o.ctx_.get() &&
            !(ctx_ && o.ctx_ && ctx_->nvars == o.ctx_->nvars && ctx_->order == o.ctx_->order))
            throw error("polynomial ring context mismatch");
    }

    PolyCtxPtr ctx_;
    R ring_;
    std::vector<Term> terms_;
};

using PolyZ = Poly<ZZRing>;
using PolyQ = Poly<QQRing>;
using PolyP = Poly<GFpRing>;

// ---------------------------------------------------------------------------
// Domain changes
// ---------------------------------------------------------------------------

inline PolyQ to_rational(const PolyZ& f) {
    return f.map_coeffs(f.ctx(), QQRing{}, [](const Int& c) { return Rat(c); });
}

inline PolyP to_prime_field(const PolyZ& f, const Int& p) {
    GFpRing r{p};
    return f.map_coeffs(f.ctx(), r, [&](const Int& c) { return mod_pos(c, p); });
}

/// Clears denominators: returns (g, d) with g integral primitive-free and
/// g = d * f as rational polynomials. d is the lcm of denominators.
std::pair<PolyZ, Int> clear_denominators(const PolyQ& f);

inline PolyP to_prime_field(const PolyQ& f, const Int& p) {
    GFpRing r{p};
    return f.map_coeffs(f.ctx(), r, [&](const Rat& c) {
        Int den = mod_pos(c.get_den(), p);
        if (den == 0) throw error("reduction mod " + p.get_str() + ": denominator vanishes");
        return mod_pos(c.get_num(), p) * invmod(den, p) % p;
    });
}

/// Content of an integer polynomial (gcd of coefficients, nonnegative).
Int content(const PolyZ& f);
/// f / content(f), sign-normalized so the leading coefficient is positive.
PolyZ primitive_part(const PolyZ& f);

}  // namespace l2q

#endif
