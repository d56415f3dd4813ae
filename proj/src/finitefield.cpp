#include "l2q/finitefield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "l2q/upoly.hpp"

namespace l2q {

// --- raw polynomial helpers over F_p (coefficient vectors, ascending) --------

namespace {

using Vec = std::vector<Int>;

void vtrim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec vmul(const Vec& a, const Vec& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    vtrim(r);
    return r;
}

// remainder of a modulo monic m
Vec vmod(Vec a, const Vec& m, const Int& p) {
    vtrim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Int c = a.back();
        size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = mod_pos(a[shift + i] - c * m[i], p);
        a.pop_back();
        vtrim(a);
    }
    return a;
}

std::pair<Vec, Vec> vdivrem(Vec a, Vec b, const Int& p) {
    vtrim(a);
    vtrim(b);
    if (b.empty()) throw error("poly division by zero");
    Int lcinv = invmod(b.back(), p);
    if (a.size() < b.size()) return {{}, a};
    Vec q(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back() * lcinv % p;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        if (c != 0)
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = mod_pos(a[shift + i] - c * b[i], p);
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < b.size()) break;
    }
    vtrim(q);
    return {q, a};
}

// inverse of a modulo monic m (extended Euclid); a nonzero mod m
Vec vinvmod(Vec a, const Vec& m, const Int& p) {
    Vec r0 = m, r1 = vmod(std::move(a), m, p);
    Vec t0 = {}, t1 = {Int(1)};
    while (!r1.empty()) {
        auto [q, r2] = vdivrem(r0, r1, p);
        Vec t2 = t0;  // t0 - q*t1
        Vec qt = vmul(q, t1, p);
        if (t2.size() < qt.size()) t2.resize(qt.size(), Int(0));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = mod_pos(t2[i] - qt[i], p);
        vtrim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw error("element not invertible");
    Int s = invmod(r0[0], p);
    for (auto& c : t0) c = c * s % p;
    vtrim(t0);
    return vmod(std::move(t0), m, p);
}

}  // namespace

// --- context registry ---------------------------------------------------------

Int FqCtx::order() const {
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), k);
    return q;
}

std::string FqCtx::str() const {
    if (k == 1) return "GF(" + p.get_str() + ")";
    return "GF(" + p.get_str() + "^" + std::to_string(k) + ")";
}

namespace {

struct Registry {
    std::mutex mu;
    std::map<std::pair<Int, int>, std::unique_ptr<FqCtx>> fields;
    // (p, j, a) -> image of the F_{p^j} generator inside F_{p^a}
    std::map<std::tuple<Int, int, int>, FqElem> roots;
};

Registry& registry() {
    static Registry r;
    return r;
}

std::vector<Int> least_irreducible(const Int& p, int k) {
    const FqCtx* Fp = field(p, 1);
    for (Int n = 1;; ++n) {
        // digits of n in base p give (a_0, a_1, ..., a_{k-1}) from the least
        // significant digit; enumeration therefore minimizes top coefficients
        // first, which keeps the modulus sparse for large p.
        std::vector<Int> mod(k + 1, Int(0));
        Int t = n;
        for (int i = k - 1; i >= 0 && t != 0; --i) {
            mod[i] = mod_pos(t, p);
            t /= p;
        }
        if (t != 0) throw error("no irreducible of requested degree found");
        mod[k] = 1;
        std::vector<FqElem> cs;
        for (int i = 0; i <= k; ++i) cs.push_back(FqElem::from_int(Fp, mod[i]));
        if (is_irreducible(UPoly(Fp, std::move(cs)))) return mod;
    }
}

}  // namespace

const FqCtx* field(const Int& p, int k) {
    if (k < 1) throw error("field: degree must be positive");
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.fields.find({p, k});
        if (it != reg.fields.end()) return it->second.get();
    }
    // build outside the lock (degree-k modulus search may itself need F_p)
    auto ctx = std::make_unique<FqCtx>();
    ctx->p = p;
    ctx->k = k;
    if (k > 1) ctx->modulus = least_irreducible(p, k);
    std::lock_guard lock(reg.mu);
    auto [it, fresh] = reg.fields.emplace(std::make_pair(p, k), std::move(ctx));
    return it->second.get();
}

// --- elements -----------------------------------------------------------------

FqElem::FqElem(const FqCtx* F, std::vector<Int> coords) : F_(F), c_(std::move(coords)) {
    c_.resize(F->k, Int(0));
    for (auto& x : c_) x = mod_pos(x, F->p);
}

FqElem FqElem::zero(const FqCtx* F) { return FqElem(F, {}); }

FqElem FqElem::one(const FqCtx* F) { return from_int(F, 1); }

FqElem FqElem::from_int(const FqCtx* F, const Int& n) {
    std::vector<Int> c(F->k, Int(0));
    c[0] = mod_pos(n, F->p);
    return FqElem(F, std::move(c));
}

FqElem FqElem::gen(const FqCtx* F) {
    if (F->k == 1) return from_int(F, 0);
    std::vector<Int> c(F->k, Int(0));
    c[1] = 1;
    return FqElem(F, std::move(c));
}

bool FqElem::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

namespace {
void check_same(const FqElem& a, const FqElem& b) {
    if (a.field() != b.field()) throw error("field mismatch");
}
}  // namespace

FqElem FqElem::operator+(const FqElem& o) const {
    check_same(*this, o);
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] + o.c_[i];
        if (r[i] >= F_->p) r[i] -= F_->p;
    }
    FqElem e;
    e.F_ = F_;
    e.c_ = std::move(r);
    return e;
}

FqElem FqElem::operator-(const FqElem& o) const {
    check_same(*this, o);
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] - o.c_[i];
        if (r[i] < 0) r[i] += F_->p;
    }
    FqElem e;
    e.F_ = F_;
    e.c_ = std::move(r);
    return e;
}

FqElem FqElem::operator-() const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] == 0 ? Int(0) : Int(F_->p - c_[i]);
    FqElem e;
    e.F_ = F_;
    e.c_ = std::move(r);
    return e;
}

FqElem FqElem::operator*(const FqElem& o) const {
    check_same(*this, o);
    if (F_->k == 1) {
        FqElem e;
        e.F_ = F_;
        e.c_ = {c_[0] * o.c_[0] % F_->p};
        return e;
    }
    Vec prod = vmul(c_, o.c_, F_->p);
    Vec red = vmod(std::move(prod), F_->modulus, F_->p);
    red.resize(F_->k, Int(0));
    FqElem e;
    e.F_ = F_;
    e.c_ = std::move(red);
    return e;
}

FqElem FqElem::inv() const {
    if (is_zero()) throw error("division by zero in " + F_->str());
    if (F_->k == 1) {
        FqElem e;
        e.F_ = F_;
        e.c_ = {invmod(c_[0], F_->p)};
        return e;
    }
    Vec r = vinvmod(c_, F_->modulus, F_->p);
    r.resize(F_->k, Int(0));
    FqElem e;
    e.F_ = F_;
    e.c_ = std::move(r);
    return e;
}

FqElem FqElem::pow(const Int& e) const {
    if (e < 0) return inv().pow(-e);
    FqElem base = *this;
    FqElem acc = one(F_);
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * base;
        if (i + 1 < bits) base = base * base;
    }
    return acc;
}

FqElem FqElem::frobenius(int j) const {
    j %= F_->k;
    if (j < 0) j += F_->k;
    if (j == 0 || F_->k == 1) return *this;
    Int e;
    mpz_pow_ui(e.get_mpz_t(), F_->p.get_mpz_t(), j);
    return pow(e);
}

int FqElem::subfield_degree() const {
    for (int d = 1; d <= F_->k; ++d) {
        if (F_->k % d != 0) continue;
        if (frobenius(d) == *this) return d;
    }
    return F_->k;
}

FqElem FqElem::norm_to(int j) const {
    if (F_->k % j != 0) throw error("norm: target degree must divide field degree");
    if (is_zero()) return zero(l2q::field(F_->p, j));
    Int qk = F_->order();
    Int qj;
    mpz_pow_ui(qj.get_mpz_t(), F_->p.get_mpz_t(), j);
    FqElem v = pow((qk - 1) / (qj - 1));
    return section(v, j);
}

bool FqElem::operator==(const FqElem& o) const {
    return F_ == o.F_ && c_ == o.c_;
}

bool FqElem::operator<(const FqElem& o) const {
    check_same(*this, o);
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::uint64_t FqElem::hash() const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (auto& x : c_) h = hash_combine(h, mpz_get_ui(x.get_mpz_t()));
    return h;
}

std::string FqElem::str() const {
    if (F_->k == 1) return c_[0].get_str();
    std::string s = "[";
    for (int i = 0; i < F_->k; ++i) {
        if (i) s += ",";
        s += c_[i].get_str();
    }
    return s + "]";
}

// --- embeddings ----------------------------------------------------------------

FqElem embed(const FqElem& e, const FqCtx* target) {
    const FqCtx* src = e.field();
    if (src == target) return e;
    if (src->p != target->p || target->k % src->k != 0)
        throw error("embed: not a subfield");
    if (src->k == 1) return FqElem::from_int(target, e.coords()[0]);

    FqElem root;
    {
        auto& reg = registry();
        std::lock_guard lock(reg.mu);
        auto it = reg.roots.find({src->p, src->k, target->k});
        if (it != reg.roots.end()) root = it->second;
    }
    if (root.field() == nullptr) {
        std::vector<FqElem> cs;
        for (auto& c : src->modulus) cs.push_back(FqElem::from_int(target, c));
        auto roots = upoly_roots(UPoly(target, std::move(cs)));
        if (roots.empty()) throw error("embed: modulus has no root in target (bug)");
        root = roots.front();  // roots come back sorted; least is canonical
        auto& reg = registry();
        std::lock_guard lock(reg.mu);
        reg.roots.emplace(std::make_tuple(src->p, src->k, target->k), root);
    }
    FqElem acc = FqElem::zero(target);
    for (size_t i = e.coords().size(); i-- > 0;)
        acc = acc * root + FqElem::from_int(target, e.coords()[i]);
    return acc;
}

FqElem section(const FqElem& e, int j) {
    const FqCtx* src = e.field();
    if (src->k == j) return e;
    if (src->k % j != 0 || !(e.frobenius(j) == e))
        throw error("section: element not in the requested subfield");
    const FqCtx* sub = field(src->p, j);
    // Solve e = sum_i c_i * r^i over F_p where r = image of sub's generator.
    FqElem r = embed(FqElem::gen(sub), src);
    int k = src->k;
    const Int& p = src->p;
    // columns: r^0, ..., r^{j-1}; rows: coordinates in F_{p^k}
    std::vector<std::vector<Int>> M(k, std::vector<Int>(j + 1, Int(0)));
    FqElem pow = FqElem::one(src);
    for (int col = 0; col < j; ++col) {
        for (int row = 0; row < k; ++row) M[row][col] = pow.coords()[row];
        pow = pow * r;
    }
    for (int row = 0; row < k; ++row) M[row][j] = e.coords()[row];
    // Gaussian elimination
    int rank = 0;
    std::vector<int> pivot_col(j, -1);
    for (int col = 0; col < j && rank < k; ++col) {
        int piv = -1;
        for (int row = rank; row < k; ++row)
            if (M[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        Int inv = invmod(M[rank][col], p);
        for (int c2 = col; c2 <= j; ++c2) M[rank][c2] = M[rank][c2] * inv % p;
        for (int row = 0; row < k; ++row) {
            if (row == rank || M[row][col] == 0) continue;
            Int f = M[row][col];
            for (int c2 = col; c2 <= j; ++c2)
                M[row][c2] = mod_pos(M[row][c2] - f * M[rank][c2], p);
        }
        pivot_col[col] = rank;
        ++rank;
    }
    std::vector<Int> coords(j, Int(0));
    for (int col = 0; col < j; ++col)
        if (pivot_col[col] >= 0) coords[col] = M[pivot_col[col]][j];
    // consistency: rows beyond rank must be zero
    for (int row = rank; row < k; ++row)
        if (M[row][j] != 0) throw error("section: inconsistent system (bug)");
    return FqElem(sub, std::move(coords));
}

FqElem minimize_field(const FqElem& e) {
    int d = e.subfield_degree();
    if (d == e.field()->k) return e;
    return section(e, d);
}

}  // namespace l2q
