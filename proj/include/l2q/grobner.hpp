#ifndef L2Q_GROBNER_HPP
#define L2Q_GROBNER_HPP

#include <atomic>
#include <chrono>
#include <optional>
#include <set>

#include "l2q/polyring.hpp"
#include "l2q/upoly.hpp"

namespace l2q {

/// Cooperative resource limits, shared across worker threads. tick() throws
/// resource_limit once the deadline or step budget is exhausted.
struct Budget {
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::size_t max_steps = 0;  // 0: unlimited
    mutable std::atomic<std::size_t> steps{0};

    static Budget seconds(double s) {
        Budget b;
        b.has_deadline = true;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::milliseconds((long)(s * 1000));
        return b;
    }
    void tick() const {
        std::size_t n = ++steps;
        if (max_steps && n > max_steps) throw resource_limit("step budget exhausted");
        if (has_deadline && (n & 0x3f) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw resource_limit("time budget exhausted");
    }
};

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace gb_detail {

template <class K>
void normalize_entry(Poly<K>& f) {
    if constexpr (std::is_same_v<K, QQRing>) {
        // primitive integer form keeps rational arithmetic lean
        if (f.is_zero()) return;
        Int num_gcd = 0, den_lcm = 1;
        for (auto& t : f.terms()) {
            num_gcd = gcd(num_gcd, Int(t.coeff.get_num()));
            den_lcm = lcm(den_lcm, Int(t.coeff.get_den()));
        }
        Rat scale(den_lcm, num_gcd);
        if (f.lead_coeff() < 0) scale = -scale;
        if (scale != 1) f = f.scaled(scale);
    } else {
        if (!f.is_zero() && !f.ring().equal(f.lead_coeff(), f.ring().one()))
            f = f.scaled(f.ring().inv(f.lead_coeff()));
    }
}

}  // namespace gb_detail

/// Full normal form of f against a list of polynomials (reducers win by list
/// order). Works for any coefficient field.
template <class K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& basis, const Budget* budget = nullptr) {
    if (f.is_zero() || basis.empty()) return f;
    const auto& ctx = f.ctx();
    const K& ring = f.ring();
    std::vector<typename Poly<K>::Term> done;
    while (!f.is_zero()) {
        if (budget) budget->tick();
        bool reduced = false;
        for (auto& g : basis) {
            if (g.is_zero()) continue;
            if (!g.lead_mono().divides(f.lead_mono())) continue;
            auto c = ring.neg(ring.mul(f.lead_coeff(), ring.inv(g.lead_coeff())));
            f = f.axpy(c, f.lead_mono().div(g.lead_mono()), g);
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(f.terms()[0]);
            f = f.axpy(ring.neg(ring.one()), Monomial(),
                       Poly<K>::from_terms(ctx, ring, {f.terms()[0]}));
        }
    }
    Poly<K> out(ctx, ring);
    out.set_terms_sorted(std::move(done));
    return out;
}

/// Buchberger with the sugar selection strategy and both classical criteria.
/// Returns the reduced basis, monic, sorted ascending by leading monomial.
/// When `cofactors` is non-null, every output element g additionally gets a
/// representation g = sum_i cof[i] * gens[i] (gens as passed in).
template <class K>
std::vector<Poly<K>> groebner(const std::vector<Poly<K>>& gens, const Budget* budget = nullptr,
                              std::vector<std::vector<Poly<K>>>* cofactors = nullptr,
                              std::uint64_t* path_sig = nullptr) {
    struct Entry {
        Poly<K> p;
        std::uint64_t sugar;
        std::vector<Poly<K>> cof;
    };
    std::uint64_t sig = 0xcbf29ce484222325ULL;
    auto note = [&](std::uint64_t v) { sig = hash_combine(sig, v); };

    PolyCtxPtr ctx;
    std::optional<K> ring;
    for (auto& g : gens)
        if (!g.is_zero()) {
            ctx = g.ctx();
            ring = g.ring();
            break;
        }
    std::vector<Poly<K>> out;
    if (!ring) {
        if (cofactors) cofactors->clear();
        return out;
    }
    const bool track = cofactors != nullptr;
    const int nvars = ctx->nvars;
    const MonOrder& ord = ctx->order;

    std::vector<Entry> basis;
    auto make_cof_unit = [&](size_t i) {
        std::vector<Poly<K>> cof;
        if (track) {
            cof.assign(gens.size(), Poly<K>(ctx, *ring));
            cof[i] = Poly<K>::constant(ctx, *ring, ring->one());
        }
        return cof;
    };

    // scale entry so its polynomial is normalized; cofactors follow
    auto normalize = [&](Entry& e) {
        if (e.p.is_zero()) return;
        if constexpr (std::is_same_v<K, QQRing>) {
            if (!track) {
                gb_detail::normalize_entry(e.p);
                return;
            }
        }
        auto lc = e.p.lead_coeff();
        if (!ring->equal(lc, ring->one())) {
            auto inv = ring->inv(lc);
            e.p = e.p.scaled(inv);
            if (track)
                for (auto& c : e.cof) c = c.scaled(inv);
        }
    };

    // full reduction of an entry against the current basis
    auto reduce_entry = [&](Entry& f) {
        std::vector<typename Poly<K>::Term> done;
        while (!f.p.is_zero()) {
            if (budget) budget->tick();
            bool hit = false;
            for (size_t gi = 0; gi < basis.size(); ++gi) {
                auto& g = basis[gi];
                if (g.p.is_zero()) continue;
                if (!g.p.lead_mono().divides(f.p.lead_mono())) continue;
                auto c = ring->neg(ring->mul(f.p.lead_coeff(), ring->inv(g.p.lead_coeff())));
                Monomial m = f.p.lead_mono().div(g.p.lead_mono());
                f.sugar = std::max(f.sugar, g.sugar + m.degree());
                f.p = f.p.axpy(c, m, g.p);
                if (track)
                    for (size_t k = 0; k < f.cof.size(); ++k)
                        if (!g.cof[k].is_zero()) f.cof[k] = f.cof[k].axpy(c, m, g.cof[k]);
                note(0x11 + gi);
                hit = true;
                break;
            }
            if (!hit) {
                done.push_back(f.p.terms()[0]);
                f.p = f.p.axpy(ring->neg(ring->one()), Monomial(),
                               Poly<K>::from_terms(ctx, *ring, {f.p.terms()[0]}));
                note(0x3);
            }
        }
        Poly<K> head(ctx, *ring);
        head.set_terms_sorted(std::move(done));
        f.p = std::move(head);
    };

    for (size_t i = 0; i < gens.size(); ++i) {
        Entry e{gens[i], gens[i].total_degree(), make_cof_unit(i)};
        reduce_entry(e);
        if (e.p.is_zero()) continue;
        normalize(e);
        note(0x1000 + e.p.size());
        basis.push_back(std::move(e));
    }

    struct PairRec {
        size_t i, j;
        Monomial lcm;
        std::uint64_t sugar;
    };
    auto pair_less = [&](const PairRec& a, const PairRec& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = mon_cmp(a.lcm, b.lcm, ord, nvars);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PairRec> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            if (basis[i].p.is_zero()) continue;
            Monomial l = basis[i].p.lead_mono().lcm(basis[t].p.lead_mono());
            std::uint64_t sug =
                std::max(basis[i].sugar + l.degree() - basis[i].p.lead_mono().degree(),
                         basis[t].sugar + l.degree() - basis[t].p.lead_mono().degree());
            queue.push_back({i, t, std::move(l), sug});
        }
    };
    for (size_t t = 1; t < basis.size(); ++t) push_pairs_for(t);

    while (!queue.empty()) {
        if (budget) budget->tick();
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        PairRec pr = std::move(*it);
        queue.erase(it);
        handled.insert({pr.i, pr.j});
        note(0x10000 + pr.i * 131 + pr.j);

        const auto &gi = basis[pr.i], &gj = basis[pr.j];
        if (gi.p.is_zero() || gj.p.is_zero()) continue;
        // product criterion
        if (gi.p.lead_mono().coprime(gj.p.lead_mono())) continue;
        // chain criterion: an already-handled pair through k settles this one
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || basis[k].p.is_zero()) continue;
            if (!basis[k].p.lead_mono().divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        Monomial mi = pr.lcm.div(gi.p.lead_mono());
        Monomial mj = pr.lcm.div(gj.p.lead_mono());
        auto ci = ring->inv(gi.p.lead_coeff());
        auto cj = ring->neg(ring->inv(gj.p.lead_coeff()));
        Entry s{Poly<K>(ctx, *ring), pr.sugar, {}};
        s.p = gi.p.mono_scaled(ci, mi).axpy(cj, mj, gj.p);
        if (track) {
            s.cof.assign(gens.size(), Poly<K>(ctx, *ring));
            for (size_t k = 0; k < gens.size(); ++k) {
                if (!gi.cof[k].is_zero()) s.cof[k] = gi.cof[k].mono_scaled(ci, mi);
                if (!gj.cof[k].is_zero()) s.cof[k] = s.cof[k].axpy(cj, mj, gj.cof[k]);
            }
        }
        reduce_entry(s);
        if (s.p.is_zero()) continue;
        normalize(s);
        note(0x100000 + s.p.size());
        basis.push_back(std::move(s));
        push_pairs_for(basis.size() - 1);
        // a unit settles everything
        if (basis.back().p.is_constant()) break;
    }

    // interreduce: drop elements whose lead is divisible by another lead,
    // then tail-reduce each survivor against the others
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].p.is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].p.is_zero()) continue;
            if (basis[j].p.lead_mono().divides(basis[i].p.lead_mono())) {
                if (!basis[i].p.lead_mono().divides(basis[j].p.lead_mono()) || j < i)
                    redundant = true;
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Entry> reduced;
    for (size_t idx = 0; idx < keep.size(); ++idx) {
        Entry e = std::move(basis[keep[idx]]);
        // reduce tail against all other survivors
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < keep.size(); ++j)
            if (j != idx) others.push_back(j < idx ? reduced[j].p : basis[keep[j]].p);
        if (track) {
            // re-run tracked reduction against the final reducers
            std::vector<Entry> tmp_basis;
            for (size_t j = 0; j < keep.size(); ++j)
                if (j != idx)
                    tmp_basis.push_back(j < idx ? reduced[j]
                                                : Entry{basis[keep[j]].p, basis[keep[j]].sugar,
                                                        basis[keep[j]].cof});
            std::swap(tmp_basis, basis);
            reduce_entry(e);
            std::swap(tmp_basis, basis);
        } else {
            e.p = normal_form(e.p, others, budget);
        }
        normalize(e);
        reduced.push_back(std::move(e));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Entry& a, const Entry& b) {
        return mon_cmp(a.p.lead_mono(), b.p.lead_mono(), ord, nvars) < 0;
    });
    if (cofactors) cofactors->clear();
    for (auto& e : reduced) {
        if constexpr (std::is_same_v<K, QQRing>) {
            if (!track && !e.p.is_zero() && !ring->equal(e.p.lead_coeff(), ring->one()))
                e.p = e.p.scaled(ring->inv(e.p.lead_coeff()));
        }
        out.push_back(std::move(e.p));
        if (cofactors) cofactors->push_back(std::move(e.cof));
    }
    if (path_sig) *path_sig = sig;
    return out;
}

template <class K>
bool is_unit_ideal(const std::vector<Poly<K>>& gb) {
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

// ---------------------------------------------------------------------------
// Ideal operations
// ---------------------------------------------------------------------------

template <class K>
std::vector<Poly<K>> lift_to_aux(const std::vector<Poly<K>>& polys, const PolyCtxPtr& aux_ctx) {
    std::vector<Poly<K>> out;
    for (auto& f : polys) out.push_back(f.with_ctx(aux_ctx));
    return out;
}

template <class K>
std::vector<Poly<K>> drop_aux(const std::vector<Poly<K>>& gb, const PolyCtxPtr& base_ctx) {
    std::uint32_t aux = (std::uint32_t)base_ctx->nvars;
    std::vector<Poly<K>> out;
    for (auto& f : gb) {
        if (f.is_zero() || f.uses_var(aux)) continue;
        out.push_back(f.with_ctx(base_ctx));
    }
    return out;
}

/// Saturation (I : f^inf) by the extra-variable method.
template <class K>
std::vector<Poly<K>> saturate(const std::vector<Poly<K>>& gens, const Poly<K>& f,
                              const Budget* budget = nullptr) {
    if (f.is_zero()) throw error("saturate by zero");
    PolyCtxPtr base = f.ctx();
    PolyCtxPtr aux = with_aux_var(base, "t#");
    auto lifted = lift_to_aux(gens, aux);
    const K& ring = f.ring();
    Poly<K> t = Poly<K>::variable(aux, ring, (std::uint32_t)base->nvars);
    Poly<K> one = Poly<K>::constant(aux, ring, ring.one());
    lifted.push_back(one - t * f.with_ctx(aux));
    auto gb = groebner(lifted, budget);
    return drop_aux(gb, base);
}

/// Ideal intersection by the extra-variable method.
template <class K>
std::vector<Poly<K>> intersect(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                               const PolyCtxPtr& base, K ring, const Budget* budget = nullptr) {
    PolyCtxPtr aux = with_aux_var(base, "t#");
    Poly<K> t = Poly<K>::variable(aux, ring, (std::uint32_t)base->nvars);
    Poly<K> one_minus_t =
        Poly<K>::constant(aux, ring, ring.one()) - t;
    std::vector<Poly<K>> gens;
    for (auto& f : a) gens.push_back(t * f.with_ctx(aux));
    for (auto& g : b) gens.push_back(one_minus_t * g.with_ctx(aux));
    auto gb = groebner(gens, budget);
    return drop_aux(gb, base);
}

/// Exact division of every generator of (I cap <f>) by f: the colon ideal
/// (I : f).
template <class K>
std::vector<Poly<K>> colon(const std::vector<Poly<K>>& gens, const Poly<K>& f,
                           const Budget* budget = nullptr) {
    if (f.is_zero()) throw error("colon by zero");
    auto inter = intersect(gens, std::vector<Poly<K>>{f}, f.ctx(), f.ring(), budget);
    std::vector<Poly<K>> out;
    for (auto& g : inter) {
        // g is divisible by f; divide via one-reducer normal form
        Poly<K> q(g.ctx(), g.ring());
        Poly<K> r = g;
        const K& ring = g.ring();
        while (!r.is_zero()) {
            if (!f.lead_mono().divides(r.lead_mono()))
                throw error("colon: division not exact (bug)");
            auto c = ring.mul(r.lead_coeff(), ring.inv(f.lead_coeff()));
            Monomial m = r.lead_mono().div(f.lead_mono());
            q = q.axpy(ring.one(), Monomial(),
                       Poly<K>::from_terms(g.ctx(), ring, {{m, c}}));
            r = r.axpy(ring.neg(c), m, f);
        }
        out.push_back(std::move(q));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dimension and solving
// ---------------------------------------------------------------------------

/// Krull dimension of R/I from the leading terms of a Groebner basis:
/// the largest independent variable set (no leading monomial supported
/// inside it). Returns nvars for the zero ideal.
int ideal_dimension(const std::vector<Monomial>& leads, int nvars);

/// Vector-space dimension of R/I over the base field (number of standard
/// monomials); -1 when infinite.
long quotient_rank(const std::vector<Monomial>& leads, int nvars);

template <class K>
std::vector<Monomial> lead_monomials(const std::vector<Poly<K>>& gb) {
    std::vector<Monomial> out;
    for (auto& g : gb)
        if (!g.is_zero()) out.push_back(g.lead_mono());
    return out;
}

struct VarietyOptions {
    int k_max = 6;
    /// cap on field size enumerated per free variable of a positive-
    /// dimensional ideal; above it enumeration is abandoned and flagged
    unsigned long free_branch_cap = 100000;
    const Budget* budget = nullptr;
};

struct VarietyPoint {
    std::vector<FqElem> coords;  // all in the canonical minimal field
    int degree = 1;              // [F_p[point] : F_p]
};

struct VarietyResult {
    bool is_empty_ideal = false;  // ideal was (1)
    int dimension = 0;
    bool complete = true;  // false when a free-variable branch was abandoned
    std::vector<VarietyPoint> points;
};

/// All zeroes of the ideal with coordinates of compositum degree <= k_max,
/// each in its minimal field of definition. Positive-dimensional ideals are
/// enumerated by substituting every admissible field element for free
/// variables, subject to free_branch_cap.
VarietyResult variety_over_prime_field(const std::vector<PolyP>& gens,
                                       const VarietyOptions& opt);

// ---------------------------------------------------------------------------
// Unit certificates
// ---------------------------------------------------------------------------

struct UnitCertificate {
    bool is_unit = false;   // 1 in the rational ideal
    Int modulus = 0;        // nonzero: integer multiple of every bad prime
    bool exact = true;      // false when the tracked run hit its fallback
};

/// For integer generators with 1 in the rational ideal: finds d > 0 such
/// that d lies in the integer ideal generated by gens, via a cofactor
/// representation 1 = sum f_i g_i over Q. Any prime p at which the ideal
/// stays proper mod p divides d. Cofactors are recovered by Chinese
/// remaindering tracked runs over word-size primes and verified exactly;
/// a direct rational tracked run is the fallback.
UnitCertificate unit_certificate_modulus(const std::vector<PolyZ>& gens,
                                         const Budget* budget = nullptr);

}  // namespace l2q

#endif
