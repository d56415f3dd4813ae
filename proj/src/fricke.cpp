#include "l2q/fricke.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace l2q {

std::string subset_name(std::uint32_t mask) {
    std::string s;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) s += std::to_string(i + 1);
    return s;
}

bool in_index_family(std::uint32_t mask, int m) {
    (void)m;
    int size = __builtin_popcount(mask);
    if (size == 1) return true;
    if (size == 2) return (mask & 3u) != 0;        // {i,j} with i <= 2
    if (size == 3) return (mask & 3u) == 3u;       // {1,2,k}
    return false;
}

TraceRing::TraceRing(int m) : m_(m) {
    if (m < 2) throw error("TraceRing: need at least 2 generators");
    if (m > 16) throw error("TraceRing: too many generators");

    std::uint32_t full = (1u << m) - 1;
    std::vector<std::string> full_names;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        full_names.push_back("x" + subset_name(mask));
    full_ctx_ = make_ctx(std::move(full_names), MonOrder{OrderKind::GrevLex, 0});

    for (int i = 1; i <= m; ++i) im_masks_.push_back(1u << (i - 1));
    for (int j = 2; j <= m; ++j) im_masks_.push_back(1u | (1u << (j - 1)));
    for (int j = 3; j <= m; ++j) im_masks_.push_back(2u | (1u << (j - 1)));
    for (int k = 3; k <= m; ++k) im_masks_.push_back(3u | (1u << (k - 1)));
    std::vector<std::string> im_names;
    for (std::uint32_t i = 0; i < im_masks_.size(); ++i) {
        im_var_of_mask_[im_masks_[i]] = i;
        im_names.push_back("x" + subset_name(im_masks_[i]));
    }
    im_ctx_ = make_ctx(std::move(im_names), MonOrder{OrderKind::GrevLex, 0});

    auto build_rho = [&](const PolyCtxPtr& ctx, auto var_of) {
        ZZRing zz;
        auto v = [&](std::uint32_t mask) { return PolyZ::variable(ctx, zz, var_of(mask)); };
        PolyZ x1 = v(1), x2 = v(2), x12 = v(3);
        return x1 * x1 + x2 * x2 + x12 * x12 - x1 * x2 * x12 -
               PolyZ::constant(ctx, zz, Int(4));
    };
    rho_im_ = build_rho(im_ctx_, [&](std::uint32_t mask) { return im_var(mask); });
    rho_full_ = build_rho(full_ctx_, [&](std::uint32_t mask) { return full_var(mask); });
}

std::uint32_t TraceRing::im_var(std::uint32_t mask) const {
    auto it = im_var_of_mask_.find(mask);
    if (it == im_var_of_mask_.end())
        throw error("subset x" + subset_name(mask) + " is not a coordinate variable");
    return it->second;
}

PolyZ TraceRing::full_variable(std::uint32_t mask) const {
    return PolyZ::variable(full_ctx_, ZZRing{}, full_var(mask));
}

// --- trace polynomials --------------------------------------------------------

PolyZ TraceRing::tau(const Word& w) const {
    for (int x : w.letters())
        if (std::abs(x) > m_) throw error("tau: word uses generator beyond the ring");
    std::vector<int> key = w.canonical_cyclic_key();
    {
        std::lock_guard lock(mu_);
        auto it = tau_memo_.find(key);
        if (it != tau_memo_.end()) return it->second;
    }
    // Recurse on the raw cyclic reduction, not the canonical key: the key
    // may swap in the inverse word, which can grow the negative-letter count
    // the recursion is inducting on.
    PolyZ val = tau_impl(w.cyclically_reduced().letters());
    std::lock_guard lock(mu_);
    auto [it, fresh] = tau_memo_.emplace(std::move(key), std::move(val));
    return it->second;
}

PolyZ TraceRing::tau_impl(const std::vector<int>& w) const {
    ZZRing zz;
    auto cst = [&](long n) { return PolyZ::constant(full_ctx_, zz, Int(n)); };
    auto T = [&](std::vector<int> v) { return tau(Word(std::move(v))); };
    auto rotate = [&](size_t r) {
        std::vector<int> v;
        v.reserve(w.size());
        v.insert(v.end(), w.begin() + r, w.end());
        v.insert(v.end(), w.begin(), w.begin() + r);
        return v;
    };

    if (w.empty()) return cst(2);
    if (w.size() == 1) return full_variable(1u << (std::abs(w[0]) - 1));

    // strip a negative exponent: w ~ g_i^-1 w', and
    // tr(g_i^-1 w') = tr(g_i) tr(w') - tr(g_i w')
    for (size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx] >= 0) continue;
        std::vector<int> rot = rotate(idx);
        int i = -rot[0];
        std::vector<int> rest(rot.begin() + 1, rot.end());
        std::vector<int> grest = rest;
        grest.insert(grest.begin(), i);
        return T({i}) * T(std::move(rest)) - T(std::move(grest));
    }

    // split a repeated generator: w ~ g_i w' g_i w'', and
    // tr = tr(g_i w') tr(g_i w'') + tr(w' w'') - tr(w') tr(w'')
    {
        size_t a = w.size(), b = w.size();
        for (size_t p = 0; p < w.size() && a == w.size(); ++p)
            for (size_t q = p + 1; q < w.size(); ++q)
                if (w[q] == w[p]) {
                    a = p;
                    b = q;
                    break;
                }
        if (a < w.size()) {
            std::vector<int> rot = rotate(a);
            size_t cut = b - a;  // rot[0] == g_i == rot[cut]
            int i = rot[0];
            std::vector<int> w1(rot.begin() + 1, rot.begin() + cut);
            std::vector<int> w2(rot.begin() + cut + 1, rot.end());
            std::vector<int> gw1 = w1, gw2 = w2, w1w2 = w1;
            gw1.insert(gw1.begin(), i);
            gw2.insert(gw2.begin(), i);
            w1w2.insert(w1w2.end(), w2.begin(), w2.end());
            return T(std::move(gw1)) * T(std::move(gw2)) + T(std::move(w1w2)) -
                   T(w1) * T(w2);
        }
    }

    // distinct positive letters: rotate the least to the front, then either we
    // are sorted (a coordinate variable) or we transpose the first descent:
    // tr(w1 g w3) = -tr(w1 w3 g) + tr(w1)tr(g w3) + tr(g)tr(w1 w3)
    //               + tr(w3)tr(w1 g) - tr(w1)tr(g)tr(w3)
    size_t least = 0;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[least]) least = i;
    std::vector<int> rot = rotate(least);
    bool sorted = std::is_sorted(rot.begin(), rot.end());
    if (sorted) {
        std::uint32_t mask = 0;
        for (int x : rot) mask |= 1u << (x - 1);
        return full_variable(mask);
    }
    size_t j = 0;
    while (j + 1 < rot.size() && rot[j] < rot[j + 1]) ++j;
    std::vector<int> w1(rot.begin(), rot.begin() + j);
    int g = rot[j];
    std::vector<int> w3(rot.begin() + j + 1, rot.end());
    std::vector<int> w1w3g = w1, gw3 = w3, w1w3 = w1, w1g = w1;
    w1w3g.insert(w1w3g.end(), w3.begin(), w3.end());
    w1w3g.push_back(g);
    gw3.insert(gw3.begin(), g);
    w1w3.insert(w1w3.end(), w3.begin(), w3.end());
    w1g.push_back(g);
    return -T(std::move(w1w3g)) + T(w1) * T(std::move(gw3)) + T({g}) * T(std::move(w1w3)) +
           T(w3) * T(std::move(w1g)) - T(w1) * T({g}) * T(w3);
}

// --- reconstruction coefficients -----------------------------------------------

namespace {

// Shared construction of the four lambda polynomials in terms of variable
// lookups; vf maps subset masks to variables in the desired ring.
std::array<PolyZ, 4> build_lambda(const PolyCtxPtr& ctx, int i,
                                  const std::function<std::uint32_t(std::uint32_t)>& vf) {
    ZZRing zz;
    auto v = [&](std::uint32_t mask) { return PolyZ::variable(ctx, zz, vf(mask)); };
    std::uint32_t bi = 1u << (i - 1);
    PolyZ x1 = v(1), x2 = v(2), x12 = v(3);
    PolyZ xi = v(bi), x1i = v(1u | bi), x2i = v(2u | bi), x12i = v(3u | bi);
    PolyZ two = PolyZ::constant(ctx, zz, Int(2));
    PolyZ l0 = (x1 * x1 + x2 * x2 + x12 * x12 - x1 * x2 * x12 - two) * xi - x1 * x1i -
               x2 * x2i + (x1 * x2 - x12) * x12i;
    PolyZ l1 = -(x1 * xi) - x2 * x12i + x12 * x2i + two * x1i;
    PolyZ l2 = -(x2 * xi) - x1 * x12i + x12 * x1i + two * x2i;
    PolyZ l12 = -(x1 * x2i) - x2 * x1i - xi * x12 + x1 * x2 * xi + two * x12i;
    return {l0, l1, l2, l12};
}

}  // namespace

std::array<PolyZ, 4> TraceRing::lambda(int i) const {
    if (i < 3 || i > m_) throw error("lambda: index out of range");
    return build_lambda(im_ctx_, i, [&](std::uint32_t mask) { return im_var(mask); });
}

std::array<PolyZ, 4> TraceRing::lambda_full(int i) const {
    return build_lambda(full_ctx_, i, [&](std::uint32_t mask) { return full_var(mask); });
}

PolyZ TraceRing::phi(int i) const {
    if (i < 3 || i > m_) throw error("phi: index out of range");
    ZZRing zz;
    auto v = [&](std::uint32_t mask) { return PolyZ::variable(im_ctx_, zz, im_var(mask)); };
    std::uint32_t bi = 1u << (i - 1);
    PolyZ x1 = v(1), x2 = v(2), xi = v(bi), x12 = v(3), x1i = v(1u | bi), x2i = v(2u | bi),
          x12i = v(3u | bi);
    PolyZ four = PolyZ::constant(im_ctx_, zz, Int(4));
    return x12i * x12i + (x1 * x2 * xi - x1 * x2i - x2 * x1i - xi * x12) * x12i + x1 * x1 +
           x2 * x2 + xi * xi + x12 * x12 + x1i * x1i + x2i * x2i - x1 * x2 * x12 -
           x1 * xi * x1i - x2 * xi * x2i + x12 * x1i * x2i - four;
}

// --- normal form ----------------------------------------------------------------

const PolyZ& TraceRing::rewrite_rhs(std::uint32_t mask) const {
    {
        std::lock_guard lock(mu_);
        auto it = rewrite_memo_.find(mask);
        if (it != rewrite_memo_.end()) return it->second;
    }
    std::uint32_t part = mask & 3u;
    std::uint32_t tail = mask & ~3u;
    int i = __builtin_ctz(tail) + 1;  // least generator >= 3 in the subset
    std::uint32_t bi = 1u << (i - 1);
    std::uint32_t j = tail & ~bi;     // nonempty by construction
    auto l = lambda_full(i);
    auto v = [&](std::uint32_t msk) { return full_variable(msk); };
    PolyZ x1 = v(1), x2 = v(2), x12 = v(3);
    PolyZ xj = v(j), x1j = v(1u | j), x2j = v(2u | j), x12j = v(3u | j);
    PolyZ rhs(full_ctx_, ZZRing{});
    switch (part) {
        case 0:
            rhs = l[0] * xj + l[1] * x1j + l[2] * x2j + l[3] * x12j;
            break;
        case 1:
            rhs = l[0] * x1j + l[1] * (x1 * x1j - xj) + l[2] * x12j +
                  l[3] * (x1 * x12j - x2j);
            break;
        case 2:
            rhs = l[0] * x2j +
                  l[1] * (-x12j + x1 * x2j + x2 * x1j + xj * x12 - x1 * x2 * xj) +
                  l[2] * (x2 * x2j - xj) + l[3] * (x12 * x2j - x1 * xj + x1j);
            break;
        default:
            rhs = l[0] * x12j + l[1] * (x12 * x1j - x2 * xj + x2j) +
                  l[2] * (x2 * x12j - x1j) + l[3] * (x12 * x12j - xj);
            break;
    }
    std::lock_guard lock(mu_);
    auto [it, fresh] = rewrite_memo_.emplace(mask, std::move(rhs));
    return it->second;
}

namespace {

/// Exact division f / g; nullopt if not divisible.
std::optional<PolyZ> exact_divide(const PolyZ& f, const PolyZ& g) {
    if (g.is_zero()) return std::nullopt;
    PolyZ rem = f;
    PolyZ quot(f.ctx(), f.ring());
    ZZRing zz;
    while (!rem.is_zero()) {
        if (!g.lead_mono().divides(rem.lead_mono())) return std::nullopt;
        Int c = rem.lead_coeff();
        if (c % g.lead_coeff() != 0) return std::nullopt;
        Int q = c / g.lead_coeff();
        Monomial mq = rem.lead_mono().div(g.lead_mono());
        quot = quot.axpy(q, mq, PolyZ::constant(f.ctx(), zz, Int(1)));
        rem = rem.axpy(-q, mq, g);
    }
    return quot;
}

}  // namespace

std::pair<PolyZ, unsigned> TraceRing::normal_form(const PolyZ& f) const {
    PolyZ g = f;
    unsigned e = 0;
    for (;;) {
        // pick the offending variable with the largest tail beyond {1,2};
        // rewriting it only introduces subsets with strictly smaller tails
        std::uint32_t pick = 0;
        int pick_tail = -1;
        for (auto& t : g.terms())
            for (auto& [var, exp] : t.mono.exps()) {
                std::uint32_t mask = var + 1;
                if (in_index_family(mask, m_)) continue;
                int tail = __builtin_popcount(mask & ~3u);
                if (tail > pick_tail || (tail == pick_tail && mask > pick)) {
                    pick = mask;
                    pick_tail = tail;
                }
            }
        if (pick_tail < 0) break;
        const PolyZ& rhs = rewrite_rhs(pick);
        std::uint32_t var = full_var(pick);
        unsigned dmax = g.degree_in(var);
        // substitute x_J = rhs / rho: group by x_J-degree d, multiply by
        // rhs^d rho^(dmax-d), and add
        std::vector<std::vector<PolyZ::Term>> bucket(dmax + 1);
        for (auto& t : g.terms()) {
            unsigned d = t.mono.exponent(var);
            std::vector<Monomial::Pair> rest;
            for (auto& [v2, e2] : t.mono.exps())
                if (v2 != var) rest.push_back({v2, e2});
            bucket[d].push_back({Monomial(std::move(rest)), t.coeff});
        }
        PolyZ acc(full_ctx_, ZZRing{});
        for (unsigned d = 0; d <= dmax; ++d) {
            if (bucket[d].empty()) continue;
            PolyZ part = PolyZ::from_terms(full_ctx_, ZZRing{}, std::move(bucket[d]));
            acc = acc + part * rhs.pow(d) * rho_full_.pow(dmax - d);
        }
        g = std::move(acc);
        e += dmax;
    }
    // cancel surplus rho factors
    while (e > 0) {
        auto q = exact_divide(g, rho_full_);
        if (!q) break;
        g = std::move(*q);
        --e;
    }
    // rename into coordinate variables
    PolyZ out(im_ctx_, ZZRing{});
    std::vector<PolyZ::Term> ts;
    for (auto& t : g.terms()) {
        std::vector<Monomial::Pair> mapped;
        for (auto& [var, exp] : t.mono.exps()) mapped.push_back({im_var(var + 1), exp});
        ts.push_back({Monomial(std::move(mapped)), t.coeff});
    }
    out = PolyZ::from_terms(im_ctx_, ZZRing{}, std::move(ts));
    return {std::move(out), e};
}

std::pair<PolyZ, unsigned> TraceRing::tau_nf(const Word& w) const {
    return normal_form(tau(w));
}

}  // namespace l2q
