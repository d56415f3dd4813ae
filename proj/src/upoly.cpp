#include "l2q/upoly.hpp"

#include <algorithm>

namespace l2q {

UPoly::UPoly(const FqCtx* F, std::vector<FqElem> coeffs) : F_(F), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x(const FqCtx* F) {
    return UPoly(F, {FqElem::zero(F), FqElem::one(F)});
}

UPoly UPoly::constant(const FqElem& c) {
    return UPoly(c.field(), {c});
}

UPoly UPoly::from_ints(const FqCtx* F, const std::vector<Int>& coeffs) {
    std::vector<FqElem> cs;
    cs.reserve(coeffs.size());
    for (auto& c : coeffs) cs.push_back(FqElem::from_int(F, c));
    return UPoly(F, std::move(cs));
}

const FqElem& UPoly::lead() const {
    if (c_.empty()) throw error("lead of zero polynomial");
    return c_.back();
}

FqElem UPoly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return FqElem::zero(F_);
    return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), FqElem::zero(F_));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r[i] = c_[i];
        else
            r[i] = o.c_[i];
    }
    return UPoly(F_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), FqElem::zero(F_));
    for (size_t i = 0; i < r.size(); ++i) {
        FqElem a = i < c_.size() ? c_[i] : FqElem::zero(F_);
        FqElem b = i < o.c_.size() ? o.c_[i] : FqElem::zero(F_);
        r[i] = a - b;
    }
    return UPoly(F_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(F_);
    std::vector<FqElem> r(c_.size() + o.c_.size() - 1, FqElem::zero(F_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
    }
    return UPoly(F_, std::move(r));
}

UPoly UPoly::scaled(const FqElem& c) const {
    std::vector<FqElem> r;
    r.reserve(c_.size());
    for (auto& x : c_) r.push_back(x * c);
    return UPoly(F_, std::move(r));
}

UPoly UPoly::shifted(int e) const {
    if (is_zero()) return *this;
    std::vector<FqElem> r(c_.size() + e, FqElem::zero(F_));
    for (size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
    return UPoly(F_, std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly(F_);
    std::vector<FqElem> r(c_.size() - 1, FqElem::zero(F_));
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * FqElem::from_int(F_, Int(i));
    return UPoly(F_, std::move(r));
}

FqElem UPoly::eval(const FqElem& at) const {
    FqElem acc = FqElem::zero(F_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i >= 1) s += "*X" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw error("poly division by zero");
    const FqCtx* F = a.field();
    std::vector<FqElem> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(F), a};
    FqElem lcinv = b.lead().inv();
    std::vector<FqElem> q(a.degree() - db + 1, FqElem::zero(F));
    for (int i = (int)r.size() - 1; i >= db; --i) {
        if (r[i].is_zero()) continue;
        FqElem c = r[i] * lcinv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b.coeff(j);
    }
    return {UPoly(F, std::move(q)), UPoly(F, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UPoly powmod(const UPoly& base, const Int& e, const UPoly& f) {
    if (e < 0) throw error("powmod: negative exponent");
    UPoly acc = UPoly::constant(FqElem::one(base.field()));
    UPoly b = divrem(base, f).second;
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = divrem(acc * b, f).second;
        if (i + 1 < bits) b = divrem(b * b, f).second;
    }
    return acc;
}

UPoly embed(const UPoly& f, const FqCtx* target) {
    std::vector<FqElem> cs;
    cs.reserve(f.coeffs().size());
    for (auto& c : f.coeffs()) cs.push_back(embed(c, target));
    return UPoly(target, std::move(cs));
}

bool is_irreducible(const UPoly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FqCtx* F = f.field();
    Int q = F->order();
    UPoly g = f.monic();
    // x^(q^n) == x mod f, and gcd(x^(q^(n/l)) - x, f) == 1 for prime l | n
    UPoly xp = UPoly::x(F);
    Int qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
    if (!(powmod(xp, qn, g) == divrem(xp, g).second)) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_probable_prime(Int(l))) continue;
        Int qd;
        mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), n / l);
        UPoly t = powmod(xp, qd, g) - divrem(xp, g).second;
        if (gcd(t, g).degree() != 0) return false;
    }
    return true;
}

namespace {

// p-th root of an element of F_{p^k}: c -> c^(p^(k-1))
FqElem pth_root(const FqElem& c) {
    return c.frobenius(c.field()->k - 1);
}

// f assumed to be of the form g(X^p); returns g with p-th-rooted coefficients
UPoly depress(const UPoly& f) {
    const FqCtx* F = f.field();
    unsigned long p = mpz_get_ui(F->p.get_mpz_t());
    std::vector<FqElem> g;
    for (int i = 0; i <= f.degree(); i += (int)p) g.push_back(pth_root(f.coeff(i)));
    return UPoly(F, std::move(g));
}

// squarefree decomposition: returns (g, multiplicity) with the g squarefree,
// pairwise coprime, and f = lead * prod g^mult
void squarefree(const UPoly& f, unsigned mult, std::vector<std::pair<UPoly, unsigned>>& out) {
    if (f.degree() <= 0) return;
    UPoly fp = f.derivative();
    if (fp.is_zero()) {
        unsigned long p = mpz_get_ui(f.field()->p.get_mpz_t());
        squarefree(depress(f), mult * (unsigned)p, out);
        return;
    }
    UPoly g = gcd(f, fp);
    UPoly w = divrem(f, g).first;  // squarefree part of the separable piece
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, g);
        UPoly piece = divrem(w, y).first;  // factors of exact multiplicity i
        if (piece.degree() > 0) out.emplace_back(piece.monic(), mult * i);
        g = divrem(g, y).first;
        w = std::move(y);
        ++i;
    }
    if (g.degree() > 0) squarefree(g, mult, out);  // leftover is h(X^p)
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// irreducibles all of degree d.
void equal_degree(const UPoly& f, int d, Rng& rng, std::vector<UPoly>& out) {
    int n = f.degree();
    if (n == d) {
        out.push_back(f.monic());
        return;
    }
    const FqCtx* F = f.field();
    Int q = F->order();
    UPoly split(F);
    while (split.is_zero() || split.degree() == 0 || split.degree() == n) {
        // random element of the quotient ring
        std::vector<FqElem> cs;
        for (int i = 0; i < n; ++i) {
            std::vector<Int> coords;
            for (int j = 0; j < F->k; ++j) coords.push_back(rng.below(F->p));
            cs.emplace_back(F, std::move(coords));
        }
        UPoly a(F, std::move(cs));
        if (a.degree() < 1) continue;
        UPoly t(F);
        if (F->p == 2) {
            // trace map over F_2: a + a^2 + a^4 + ... (k*d summands)
            t = divrem(a, f).second;
            UPoly acc = t;
            for (int i = 1; i < F->k * d; ++i) {
                t = divrem(t * t, f).second;
                acc = acc + t;
            }
            t = std::move(acc);
        } else {
            Int qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
            t = powmod(a, (qd - 1) / 2, f) - UPoly::constant(FqElem::one(F));
        }
        split = gcd(t, f);
    }
    equal_degree(split, d, rng, out);
    equal_degree(divrem(f, split).first, d, rng, out);
}

std::uint64_t upoly_seed(const UPoly& f) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto& c : f.coeffs()) h = hash_combine(h, c.hash());
    return h;
}

}  // namespace

std::vector<UFactor> upoly_factor(const UPoly& f) {
    if (f.degree() < 1) throw error("factor: polynomial must be nonconstant");
    std::vector<std::pair<UPoly, unsigned>> sqf;
    squarefree(f.monic(), 1, sqf);
    Rng rng(upoly_seed(f));
    std::vector<UFactor> out;
    for (auto& [part, mult] : sqf) {
        // distinct degree
        const FqCtx* F = part.field();
        Int q = F->order();
        UPoly rest = part;
        UPoly h = divrem(UPoly::x(F), rest).second;  // X^(q^d) mod rest as d grows
        int d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (2 * d > rest.degree()) {
                out.push_back({rest.monic(), mult});  // what is left is irreducible
                break;
            }
            h = powmod(h, q, rest);
            UPoly g = gcd(h - divrem(UPoly::x(F), rest).second, rest);
            if (g.degree() > 0) {
                std::vector<UPoly> irr;
                equal_degree(g, d, rng, irr);
                for (auto& u : irr) out.push_back({u, mult});
                rest = divrem(rest, g).first;
                if (rest.degree() > 0) h = divrem(h, rest).second;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UFactor& a, const UFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            if (a.factor.coeff(i) == b.factor.coeff(i)) continue;
            return a.factor.coeff(i) < b.factor.coeff(i);
        }
        return false;
    });
    return out;
}

std::vector<FqElem> upoly_roots(const UPoly& f) {
    if (f.is_zero()) throw error("roots of the zero polynomial");
    const FqCtx* F = f.field();
    std::vector<FqElem> roots;
    UPoly g = f.monic();
    // strip zero roots
    while (g.degree() > 0 && g.coeff(0).is_zero()) {
        roots.push_back(FqElem::zero(F));
        std::vector<FqElem> cs(g.coeffs().begin() + 1, g.coeffs().end());
        g = UPoly(F, std::move(cs));
        break;  // multiplicities don't matter for the root set
    }
    if (g.degree() >= 1) {
        UPoly xq = powmod(UPoly::x(F), F->order(), g);
        UPoly lin = gcd(xq - divrem(UPoly::x(F), g).second, g);
        if (lin.degree() >= 1) {
            if (lin.degree() == 1) {
                roots.push_back(-(lin.coeff(0) * lin.coeff(1).inv()));
            } else {
                Rng rng(upoly_seed(f));
                std::vector<UPoly> irr;
                equal_degree(lin, 1, rng, irr);
                for (auto& u : irr) roots.push_back(-(u.coeff(0) * u.coeff(1).inv()));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace l2q
