#include "l2q/polyring.hpp"

namespace l2q {

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Pair> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end());
    size_t w = 0;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i].second == 0) continue;
        if (w && exps_[w - 1].first == exps_[i].first)
            exps_[w - 1].second += exps_[i].second;
        else
            exps_[w++] = exps_[i];
    }
    exps_.resize(w);
    for (auto& [v, e] : exps_) deg_ += e;
}

Monomial Monomial::var(std::uint32_t v, std::uint32_t e) {
    Monomial m;
    if (e) {
        m.exps_.push_back({v, e});
        m.deg_ = e;
    }
    return m;
}

std::uint32_t Monomial::exponent(std::uint32_t v) const {
    for (auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j >= o.exps_.size())
            r.exps_.push_back(exps_[i++]);
        else if (i >= exps_.size())
            r.exps_.push_back(o.exps_[j++]);
        else if (exps_[i].first < o.exps_[j].first)
            r.exps_.push_back(exps_[i++]);
        else if (exps_[i].first > o.exps_[j].first)
            r.exps_.push_back(o.exps_[j++]);
        else {
            r.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
            ++i, ++j;
        }
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
        if (j >= o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : exps_) {
        std::uint32_t sub = 0;
        while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
        if (j < o.exps_.size() && o.exps_[j].first == v) sub = o.exps_[j].second;
        if (sub > e) throw error("monomial division is not exact");
        if (e > sub) {
            r.exps_.push_back({v, e - sub});
            r.deg_ += e - sub;
        }
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j >= o.exps_.size())
            r.exps_.push_back(exps_[i++]);
        else if (i >= exps_.size())
            r.exps_.push_back(o.exps_[j++]);
        else if (exps_[i].first < o.exps_[j].first)
            r.exps_.push_back(exps_[i++]);
        else if (exps_[i].first > o.exps_[j].first)
            r.exps_.push_back(o.exps_[j++]);
        else {
            r.exps_.push_back({exps_[i].first, std::max(exps_[i].second, o.exps_[j].second)});
            ++i, ++j;
        }
    }
    for (auto& [v, e] : r.exps_) r.deg_ += e;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
        if (exps_[i].first < o.exps_[j].first)
            ++i;
        else if (exps_[i].first > o.exps_[j].first)
            ++j;
        else
            return false;
    }
    return true;
}

std::uint64_t Monomial::hash() const {
    std::uint64_t h = 0x5bd1e995;
    for (auto& [v, e] : exps_) {
        h = hash_combine(h, v);
        h = hash_combine(h, e);
    }
    return h;
}

// --- Orders ------------------------------------------------------------------

namespace {

// All comparisons ignore variables with id >= bound, so the elimination
// block order can reuse them without copying monomials.

int cmp_lex(const Monomial& a, const Monomial& b, std::uint32_t bound) {
    // variable 0 strongest: first (lowest id) differing exponent decides
    size_t i = 0, j = 0;
    const auto& ae = a.exps();
    const auto& be = b.exps();
    while (true) {
        std::uint32_t va = i < ae.size() ? ae[i].first : UINT32_MAX;
        std::uint32_t vb = j < be.size() ? be[j].first : UINT32_MAX;
        if (va >= bound && vb >= bound) return 0;
        if (va < vb) return 1;  // a has an extra low variable
        if (vb < va) return -1;
        if (ae[i].second != be[j].second) return ae[i].second > be[j].second ? 1 : -1;
        ++i, ++j;
    }
}

int cmp_lexrev(const Monomial& a, const Monomial& b, std::uint32_t bound) {
    // last variable strongest: compare from the highest id downward
    const auto& ae = a.exps();
    const auto& be = b.exps();
    auto i = ae.size(), j = be.size();
    while (i > 0 && ae[i - 1].first >= bound) --i;
    while (j > 0 && be[j - 1].first >= bound) --j;
    while (i > 0 || j > 0) {
        bool ha = i > 0, hb = j > 0;
        std::uint32_t va = ha ? ae[i - 1].first : 0;
        std::uint32_t vb = hb ? be[j - 1].first : 0;
        if (ha && hb && va == vb) {
            if (ae[i - 1].second != be[j - 1].second)
                return ae[i - 1].second > be[j - 1].second ? 1 : -1;
            --i, --j;
        } else if (ha && (!hb || va > vb)) {
            return 1;
        } else {
            return -1;
        }
    }
    return 0;
}

std::uint64_t degree_below(const Monomial& m, std::uint32_t bound) {
    if (bound == UINT32_MAX) return m.degree();
    std::uint64_t d = 0;
    for (auto& [v, e] : m.exps())
        if (v < bound) d += e;
    return d;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, std::uint32_t bound) {
    std::uint64_t da = degree_below(a, bound), db = degree_below(b, bound);
    if (da != db) return da > db ? 1 : -1;
    // reverse lex: highest id with differing exponent; smaller exponent wins
    const auto& ae = a.exps();
    const auto& be = b.exps();
    auto i = ae.size(), j = be.size();
    while (i > 0 && ae[i - 1].first >= bound) --i;
    while (j > 0 && be[j - 1].first >= bound) --j;
    while (i > 0 || j > 0) {
        bool ha = i > 0, hb = j > 0;
        std::uint32_t va = ha ? ae[i - 1].first : 0;
        std::uint32_t vb = hb ? be[j - 1].first : 0;
        if (ha && hb && va == vb) {
            if (ae[i - 1].second != be[j - 1].second)
                return ae[i - 1].second < be[j - 1].second ? 1 : -1;
            --i, --j;
        } else if (ha && (!hb || va > vb)) {
            return -1;  // a has the extra high variable, so a is smaller
        } else {
            return 1;
        }
    }
    return 0;
}

int cmp_kind(const Monomial& a, const Monomial& b, OrderKind kind, std::uint32_t bound) {
    switch (kind) {
        case OrderKind::Lex: return cmp_lex(a, b, bound);
        case OrderKind::LexRev: return cmp_lexrev(a, b, bound);
        case OrderKind::GrevLex: return cmp_grevlex(a, b, bound);
    }
    return 0;
}

}  // namespace

int mon_cmp(const Monomial& a, const Monomial& b, const MonOrder& ord, int nvars) {
    if (ord.elim_last > 0) {
        std::uint32_t split = (std::uint32_t)(nvars - ord.elim_last);
        for (std::uint32_t v = (std::uint32_t)nvars; v-- > split;) {
            std::uint32_t ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return cmp_kind(a, b, ord.kind, split);
    }
    return cmp_kind(a, b, ord.kind, UINT32_MAX);
}

PolyCtxPtr make_ctx(std::vector<std::string> names, MonOrder order) {
    auto ctx = std::make_shared<PolyCtx>();
    ctx->nvars = (int)names.size();
    ctx->order = order;
    ctx->var_names = std::move(names);
    return ctx;
}

PolyCtxPtr with_order(const PolyCtxPtr& ctx, MonOrder order) {
    if (ctx->order == order) return ctx;
    return make_ctx(ctx->var_names, order);
}

PolyCtxPtr with_aux_var(const PolyCtxPtr& ctx, const std::string& name) {
    auto names = ctx->var_names;
    names.push_back(name);
    MonOrder ord = ctx->order;
    ord.elim_last = 1;
    return make_ctx(std::move(names), ord);
}

// --- Domain changes ----------------------------------------------------------

std::pair<PolyZ, Int> clear_denominators(const PolyQ& f) {
    Int den = 1;
    for (auto& t : f.terms()) den = lcm(den, t.coeff.get_den());
    PolyZ g = f.map_coeffs(f.ctx(), ZZRing{}, [&](const Rat& c) {
        return Int(c.get_num() * (den / c.get_den()));
    });
    return {std::move(g), den};
}

Int content(const PolyZ& f) {
    Int g = 0;
    for (auto& t : f.terms()) {
        g = gcd(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

PolyZ primitive_part(const PolyZ& f) {
    if (f.is_zero()) return f;
    Int c = content(f);
    if (f.lead_coeff() < 0) c = -c;
    if (c == 1) return f;
    return f.map_coeffs(f.ctx(), ZZRing{}, [&](const Int& a) { return Int(a / c); });
}

}  // namespace l2q
