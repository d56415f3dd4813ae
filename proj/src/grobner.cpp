#include "l2q/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace l2q {

// --- dimension ------------------------------------------------------------------

namespace {

// supports of leading monomials as variable bitmasks
std::vector<std::uint32_t> lead_supports(const std::vector<Monomial>& leads) {
    std::vector<std::uint32_t> out;
    for (auto& m : leads) {
        if (m.is_one()) return {0};  // unit ideal marker
        std::uint32_t s = 0;
        for (auto& [v, e] : m.exps()) s |= 1u << v;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// largest independent set: no support contained in the chosen set
int best_independent(const std::vector<std::uint32_t>& supports, std::uint32_t chosen,
                     int var, int nvars, int count, int& best) {
    if (count + (nvars - var) <= best) return best;  // cannot beat best
    if (var == nvars) {
        best = std::max(best, count);
        return best;
    }
    // try including var
    std::uint32_t with = chosen | (1u << var);
    bool ok = true;
    for (auto s : supports)
        if ((s & ~with) == 0) {
            ok = false;
            break;
        }
    if (ok) best_independent(supports, with, var + 1, nvars, count + 1, best);
    best_independent(supports, chosen, var + 1, nvars, count, best);
    return best;
}

}  // namespace

int ideal_dimension(const std::vector<Monomial>& leads, int nvars) {
    auto supports = lead_supports(leads);
    if (!supports.empty() && supports[0] == 0) return -1;  // unit ideal: empty variety
    int best = -1;
    best_independent(supports, 0, 0, nvars, 0, best);
    return best;
}

long quotient_rank(const std::vector<Monomial>& leads, int nvars) {
    if (!leads.empty()) {
        auto supports = lead_supports(leads);
        if (!supports.empty() && supports[0] == 0) return 0;  // unit ideal
    }
    // per-variable degree bound from pure-power leads
    std::vector<long> bound(nvars, -1);
    for (auto& m : leads)
        if (m.exps().size() == 1) {
            auto [v, e] = m.exps()[0];
            if (bound[v] < 0 || (long)e < bound[v]) bound[v] = e;
        }
    for (int v = 0; v < nvars; ++v)
        if (bound[v] < 0) return -1;  // some variable is free: infinite rank

    long count = 0;
    std::vector<std::uint32_t> expo(nvars, 0);
    // DFS over exponent vectors below the bounds, skipping multiples of leads
    std::function<void(int)> walk = [&](int v) {
        if (v == nvars) {
            ++count;
            return;
        }
        for (long e = 0; e < bound[v]; ++e) {
            expo[v] = (std::uint32_t)e;
            bool divisible = false;
            for (auto& m : leads) {
                bool div = true;
                for (auto& [mv, me] : m.exps())
                    if ((int)mv > v || expo[mv] < me) {
                        div = false;
                        break;
                    }
                if (div) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) walk(v + 1);
        }
        expo[v] = 0;
    };
    walk(0);
    return count;
}

// --- variety --------------------------------------------------------------------

namespace {

// coefficients of x_v after substituting vals for all variables of id < v
UPoly eval_partial(const PolyP& f, const std::vector<FqElem>& vals, std::uint32_t v,
                   const FqCtx* F) {
    std::vector<FqElem> coeffs(f.degree_in(v) + 1, FqElem::zero(F));
    for (auto& t : f.terms()) {
        FqElem c = FqElem::from_int(F, t.coeff);
        std::uint32_t dv = 0;
        for (auto& [var, e] : t.mono.exps()) {
            if (var == v) {
                dv = e;
            } else if (var < v) {
                c = c * vals[var].pow(e);
            } else {
                throw error("eval_partial: unexpected variable (bug)");
            }
        }
        coeffs[dv] = coeffs[dv] + c;
    }
    return UPoly(F, std::move(coeffs));
}

struct Solver {
    const std::vector<PolyP>& gens;
    const VarietyOptions& opt;
    int nvars;
    Int p;
    std::vector<std::vector<const PolyP*>> by_level;  // basis polys by max var
    VarietyResult* result;
    std::set<std::pair<int, std::string>> seen;

    void record(const std::vector<FqElem>& vals, const FqCtx* F) {
        // verify against the original generators
        FqRing ring{F};
        for (auto& g : gens) {
            FqElem v = g.eval(ring, vals, [&](const Int& c) { return FqElem::from_int(F, c); });
            if (!v.is_zero()) return;
        }
        int j = 1;
        for (auto& e : vals) j = (int)std::lcm((long)j, (long)e.subfield_degree());
        VarietyPoint pt;
        pt.degree = j;
        const FqCtx* Fj = field(p, j);
        std::string key;
        for (auto& e : vals) {
            FqElem down = j == F->k ? e : section(e, j);
            if (down.field() != Fj) down = embed(down, Fj);
            key += down.str() + "|";
            pt.coords.push_back(std::move(down));
        }
        if (seen.insert({j, key}).second) result->points.push_back(std::move(pt));
    }

    void solve(std::uint32_t v, std::vector<FqElem> vals, const FqCtx* F) {
        if (opt.budget) opt.budget->tick();
        if ((int)v == nvars) {
            record(vals, F);
            return;
        }
        UPoly g(F);
        bool have_constraint = false;
        for (const PolyP* f : by_level[v]) {
            UPoly u = eval_partial(*f, vals, v, F);
            if (u.is_zero()) continue;
            have_constraint = true;
            g = g.is_zero() ? u : gcd(g, u);
            if (g.degree() == 0) return;  // contradictory branch
        }
        if (!have_constraint || g.is_zero()) {
            // free variable: substitute every admissible field element
            for (int D = F->k; D <= opt.k_max; D += F->k) {
                Int size = field(p, D)->order();
                if (size > (long)opt.free_branch_cap) {
                    result->complete = false;
                    continue;
                }
                const FqCtx* FD = field(p, D);
                std::vector<FqElem> lifted;
                for (auto& e : vals) lifted.push_back(D == F->k ? e : embed(e, FD));
                unsigned long n = mpz_get_ui(size.get_mpz_t());
                for (unsigned long idx = 0; idx < n; ++idx) {
                    std::vector<Int> coords(FD->k);
                    unsigned long t = idx;
                    unsigned long pp = mpz_get_ui(p.get_mpz_t());
                    for (int i = 0; i < FD->k; ++i) {
                        coords[i] = (long)(t % pp);
                        t /= pp;
                    }
                    FqElem val(FD, coords);
                    if (std::lcm((long)F->k, (long)val.subfield_degree()) != D) continue;
                    auto next = lifted;
                    next.push_back(val);
                    solve(v + 1, std::move(next), FD);
                }
            }
            return;
        }
        if (g.degree() == 0) return;
        for (auto& [h, mult] : upoly_factor(g)) {
            int d = h.degree();
            int D = F->k * d;
            if (D > opt.k_max) continue;
            const FqCtx* FD = d == 1 ? F : field(p, D);
            UPoly hD = d == 1 ? h : embed(h, FD);
            auto roots = upoly_roots(hD);
            for (auto& r : roots) {
                std::vector<FqElem> next;
                for (auto& e : vals) next.push_back(d == 1 ? e : embed(e, FD));
                next.push_back(r);
                solve(v + 1, std::move(next), FD);
            }
        }
    }
};

}  // namespace

VarietyResult variety_over_prime_field(const std::vector<PolyP>& gens, const VarietyOptions& opt) {
    VarietyResult res;
    if (gens.empty()) throw error("variety: no generators");
    PolyCtxPtr base = gens.front().ctx();
    Int p = gens.front().ring().p;
    PolyCtxPtr lex = with_order(base, MonOrder{OrderKind::LexRev, 0});
    std::vector<PolyP> lifted;
    for (auto& g : gens) lifted.push_back(g.with_ctx(lex));
    auto gb = groebner(lifted, opt.budget);
    if (is_unit_ideal(gb)) {
        res.is_empty_ideal = true;
        return res;
    }
    res.dimension = ideal_dimension(lead_monomials(gb), lex->nvars);
    Solver solver{gens, opt, lex->nvars, p, {}, &res, {}};
    solver.by_level.resize(lex->nvars);
    for (auto& g : gb) {
        if (g.is_zero()) continue;
        std::uint32_t maxv = 0;
        for (auto& t : g.terms())
            for (auto& [v, e] : t.mono.exps()) maxv = std::max(maxv, v);
        solver.by_level[maxv].push_back(&g);
    }
    solver.solve(0, {}, field(p, 1));
    std::sort(res.points.begin(), res.points.end(), [](const VarietyPoint& a, const VarietyPoint& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] == b.coords[i]) continue;
            return a.coords[i] < b.coords[i];
        }
        return false;
    });
    return res;
}

// --- unit certificates ------------------------------------------------------------

namespace {

/// Rational reconstruction: a/b = r mod M with |a|, b <= sqrt(M/2).
std::optional<Rat> rational_reconstruct(const Int& r, const Int& M) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
    Int r0 = M, r1 = mod_pos(r, M);
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    Int a = r1, b = t1;
    if (b < 0) {
        a = -a;
        b = -b;
    }
    if (b > bound || gcd(a, b) != 1) return std::nullopt;
    Rat out(a, b);
    out.canonicalize();
    return out;
}

struct ModularRun {
    Int prime;
    std::uint64_t sig;
    std::vector<std::vector<PolyP>> cof;  // cofactors of the constant element
    bool unit = false;
};

std::optional<ModularRun> run_mod_prime(const std::vector<PolyZ>& gens, const Int& prime,
                                        const Budget* budget) {
    ModularRun run;
    run.prime = prime;
    GFpRing ring{prime};
    std::vector<PolyP> gp;
    for (auto& g : gens) gp.push_back(to_prime_field(g, prime));
    std::vector<std::vector<PolyP>> cof;
    std::uint64_t sig = 0;
    auto gb = groebner(gp, budget, &cof, &sig);
    run.sig = sig;
    if (!is_unit_ideal(gb)) return run;  // proper mod p: p is itself a bad prime
    run.unit = true;
    // scale the representation so the constant is exactly 1
    Int c = gb[0].constant_value();
    Int cinv = invmod(c, prime);
    run.cof.push_back({});
    for (auto& f : cof[0]) run.cof.back().push_back(f.scaled(cinv));
    return run;
}

Int denominator_lcm(const std::vector<PolyQ>& cof) {
    Int d = 1;
    for (auto& f : cof)
        for (auto& t : f.terms()) d = lcm(d, Int(t.coeff.get_den()));
    return d;
}

}  // namespace

UnitCertificate unit_certificate_modulus(const std::vector<PolyZ>& gens, const Budget* budget) {
    UnitCertificate cert;
    if (gens.empty()) return cert;
    PolyCtxPtr ctx = gens.front().ctx();
    // deterministic stream of word-size primes
    Int prime = Int(1) << 62;
    std::vector<ModularRun> cohort;
    std::map<std::uint64_t, int> sig_votes;
    std::set<std::string> mandatory;  // primes where the ideal is proper mod p
    const int max_primes = 96;
    for (int it = 0; it < max_primes; ++it) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        auto run = run_mod_prime(gens, prime, budget);
        if (!run) continue;
        if (!run->unit) {
            mandatory.insert(prime.get_str());
            continue;
        }
        sig_votes[run->sig]++;
        cohort.push_back(std::move(*run));
        // try reconstruction with the runs sharing the most common signature
        std::uint64_t best_sig = 0;
        int best_votes = 0;
        for (auto& [s, v] : sig_votes)
            if (v > best_votes) {
                best_votes = v;
                best_sig = s;
            }
        if (best_votes < 2) continue;
        std::vector<const ModularRun*> use;
        for (auto& r : cohort)
            if (r.sig == best_sig) use.push_back(&r);
        // CRT each cofactor coefficient over the cohort, then reconstruct
        Int M = 1;
        for (auto* r : use) M *= r->prime;
        size_t ngens = gens.size();
        std::vector<PolyQ> cof_q(ngens, PolyQ(ctx, QQRing{}));
        bool ok = true;
        for (size_t gi = 0; gi < ngens && ok; ++gi) {
            // union of supports
            std::map<std::vector<Monomial::Pair>, std::vector<std::pair<Int, Int>>> residues;
            for (auto* r : use) {
                const PolyP& f = r->cof[0][gi];
                for (auto& t : f.terms())
                    residues[t.mono.exps()].push_back({t.coeff, r->prime});
            }
            std::vector<PolyQ::Term> terms;
            for (auto& [mono_exps, rs] : residues) {
                // CRT over all cohort primes (missing residues are zero)
                Int x = 0, m = 1;
                size_t ri = 0;
                for (auto* r : use) {
                    Int residue = 0;
                    if (ri < rs.size() && rs[ri].second == r->prime) residue = rs[ri++].first;
                    // x' = x mod m, residue mod prime
                    Int minv = invmod(m % r->prime, r->prime);
                    Int k = mod_pos((residue - x) * minv, r->prime);
                    x = x + m * k;
                    m *= r->prime;
                }
                auto rec = rational_reconstruct(x, M);
                if (!rec) {
                    ok = false;
                    break;
                }
                if (*rec != 0) terms.push_back({Monomial(mono_exps), *rec});
            }
            if (ok) cof_q[gi] = PolyQ::from_terms(ctx, QQRing{}, std::move(terms));
        }
        if (!ok) continue;
        // exact verification over Q
        PolyQ acc(ctx, QQRing{});
        for (size_t gi = 0; gi < ngens; ++gi)
            if (!cof_q[gi].is_zero()) acc = acc + cof_q[gi] * to_rational(gens[gi]);
        if (acc.is_constant() && acc.constant_value() == 1) {
            cert.is_unit = true;
            cert.modulus = denominator_lcm(cof_q);
            for (auto& s : mandatory) cert.modulus = lcm(cert.modulus, Int(s));
            return cert;
        }
    }
    // fallback: direct tracked run over Q
    std::vector<PolyQ> gq;
    for (auto& g : gens) gq.push_back(to_rational(g));
    std::vector<std::vector<PolyQ>> cof;
    auto gb = groebner(gq, budget, &cof);
    if (!is_unit_ideal(gb)) {
        cert.is_unit = false;
        return cert;
    }
    cert.is_unit = true;
    Rat c = gb[0].constant_value();
    Int d = 1;
    for (auto& f : cof[0])
        for (auto& t : f.terms()) d = lcm(d, Int(Rat(t.coeff / c).get_den()));
    cert.modulus = d;
    for (auto& s : mandatory) cert.modulus = lcm(cert.modulus, Int(s));
    return cert;
}

}  // namespace l2q
