#include "l2q/intutil.hpp"

#include <algorithm>

namespace l2q {

Int Rng::below(const Int& n) {
    if (n <= 0) throw error("Rng::below: n must be positive");
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int r;
    for (;;) {
        r = 0;
        for (size_t produced = 0; produced < bits; produced += 32) {
            r <<= 32;
            r += static_cast<unsigned long>(next() & 0xffffffffULL);
        }
        r >>= (((bits + 31) / 32) * 32 - bits);
        if (r < n) return r;
    }
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw error("invmod: element not invertible");
    return r;
}

Int powmod(Int base, Int exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Pollard-Brent with batched gcds. Returns a nontrivial factor or 1.
Int rho_brent(const Int& n, unsigned long budget, Rng& rng) {
    if (n % 2 == 0) return 2;
    for (int attempt = 0; attempt < 16; ++attempt) {
        Int y = rng.below(n - 1) + 1;
        Int c = rng.below(n - 1) + 1;
        Int x, ys, q = 1, g = 1;
        unsigned long r = 1, spent = 0;
        const unsigned long batch = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1 && spent < budget) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += lim;
                spent += lim;
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
        if (spent >= budget) break;
    }
    return 1;
}

void factor_rec(const Int& n, unsigned long rho_budget, Rng& rng, Factorization& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes.emplace_back(n, 1);
        return;
    }
    // perfect powers split for free
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                Factorization sub;
                factor_rec(root, rho_budget, rng, sub);
                if (sub.unfactored == 1) {
                    for (auto& [p, m] : sub.primes) out.primes.emplace_back(p, m * e);
                    return;
                }
                break;
            }
        }
    }
    Int g = rho_brent(n, rho_budget, rng);
    if (g == 1) {
        out.unfactored *= n;
        return;
    }
    factor_rec(g, rho_budget, rng, out);
    factor_rec(n / g, rho_budget, rng, out);
}

}  // namespace

Factorization factor_integer(Int n, unsigned long trial_bound, unsigned long rho_budget) {
    Factorization out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (unsigned long d = 2; d <= trial_bound && Int(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
        unsigned m = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            ++m;
        }
        if (m) out.primes.emplace_back(d, m);
    }
    if (n > 1) {
        Rng rng(0x7d0c4fa1c0ffee11ULL);
        factor_rec(n, rho_budget, rng, out);
    }
    // merge duplicates (rho may rediscover a prime)
    std::sort(out.primes.begin(), out.primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Int, unsigned>> merged;
    for (auto& pm : out.primes) {
        if (!merged.empty() && merged.back().first == pm.first)
            merged.back().second += pm.second;
        else
            merged.push_back(pm);
    }
    out.primes = std::move(merged);
    return out;
}

}  // namespace l2q
