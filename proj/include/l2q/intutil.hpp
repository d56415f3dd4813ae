#ifndef L2Q_INTUTIL_HPP
#define L2Q_INTUTIL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace l2q {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_limit : error {
    explicit resource_limit(const std::string& what) : error(what) {}
};

/// Deterministic 64-bit generator (splitmix64). All randomized subroutines
/// take one of these so a fixed seed reproduces runs bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform value in [0, n), n > 0, n arbitrary precision.
    Int below(const Int& n);

private:
    std::uint64_t state_;
};

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int mod_pos(const Int& a, const Int& m);  // representative in [0, m)
Int invmod(const Int& a, const Int& m);   // throws on non-invertible
Int powmod(Int base, Int exp, const Int& m);

bool is_probable_prime(const Int& n);

struct Factorization {
    std::vector<std::pair<Int, unsigned>> primes;  // sorted ascending
    Int unfactored = 1;                            // composite cofactor the budget did not split
    bool complete() const { return unfactored == 1; }
};

/// Trial division to `trial_bound`, then Pollard-Brent rho with an iteration
/// budget per composite, recursing on split parts. Prime cofactors of any
/// size are recognized and reported; only a composite that rho fails to split
/// within budget ends up in `unfactored`.
Factorization factor_integer(Int n, unsigned long trial_bound = 1000000,
                             unsigned long rho_budget = 30000000);

}  // namespace l2q

#endif
