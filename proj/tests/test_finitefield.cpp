#include <doctest.h>

#include <set>

#include "l2q/upoly.hpp"

using namespace l2q;

TEST_CASE("prime field arithmetic") {
    const FqCtx* F = field(7);
    FqElem a = FqElem::from_int(F, 3), b = FqElem::from_int(F, 5);
    CHECK(a + b == FqElem::from_int(F, 1));
    CHECK(a * b == FqElem::from_int(F, 1));
    CHECK(a.inv() == b);
    CHECK(FqElem::one(F).inv() == FqElem::one(F));
}

TEST_CASE("extension field axioms, random") {
    const FqCtx* F = field(3, 4);
    Rng rng(23);
    auto random_elem = [&]() {
        std::vector<Int> c;
        for (int i = 0; i < F->k; ++i) c.push_back(rng.below(F->p));
        return FqElem(F, c);
    };
    for (int trial = 0; trial < 60; ++trial) {
        FqElem a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inv() == FqElem::one(F));
    }
}

TEST_CASE("frobenius fixes exactly the prime field") {
    const FqCtx* F = field(5, 2);
    int fixed = 0;
    // scan all 25 elements
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            FqElem e(F, {Int(i), Int(j)});
            FqElem img = e.frobenius();
            CHECK(img == e.pow(5));
            if (img == e) ++fixed;
        }
    CHECK(fixed == 5);
}

TEST_CASE("norm from F_9 to F_3 of a unit generator generates F_3^*") {
    const FqCtx* F9 = field(3, 2);
    // brute-force a multiplicative generator of F_9^*
    std::vector<FqElem> units;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FqElem e(F9, {Int(i), Int(j)});
            if (!e.is_zero()) units.push_back(e);
        }
    FqElem gen = FqElem::zero(F9);
    for (auto& u : units) {
        std::set<std::string> powers;
        FqElem x = FqElem::one(F9);
        for (int e = 0; e < 8; ++e) {
            x = x * u;
            powers.insert(x.str());
        }
        if (powers.size() == 8) {
            gen = u;
            break;
        }
    }
    REQUIRE(!gen.is_zero());
    FqElem nm = gen.norm_to(1);
    CHECK(nm == gen.pow(4).norm_to(1) * gen.pow(-3).norm_to(1));  // multiplicative
    CHECK(nm.field()->k == 1);
    CHECK(nm.coords()[0] == 2);  // generator of F_3^*
}

TEST_CASE("norm surjectivity onto subfield units, p^k <= 729") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}, {2, 4}, {3, 6}}) {
        const FqCtx* F = field(p, k);
        for (int j = 1; j < k; ++j) {
            if (k % j) continue;
            const FqCtx* S = field(p, j);
            // collect norms of random elements until the whole unit group shows up
            std::set<std::string> seen;
            Rng rng(99 + p + k + j);
            Int order_s;
            mpz_pow_ui(order_s.get_mpz_t(), Int(p).get_mpz_t(), j);
            size_t want = mpz_get_ui(order_s.get_mpz_t()) - 1;
            for (int trial = 0; trial < 4000 && seen.size() < want; ++trial) {
                std::vector<Int> c;
                for (int i = 0; i < F->k; ++i) c.push_back(rng.below(F->p));
                FqElem e(F, c);
                if (e.is_zero()) continue;
                seen.insert(e.norm_to(j).str());
            }
            CHECK(seen.size() == want);
        }
    }
}

TEST_CASE("embed and section round-trip") {
    const FqCtx* F4 = field(2, 2);
    const FqCtx* F16 = field(2, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            FqElem e(F4, {Int(i), Int(j)});
            FqElem big = embed(e, F16);
            CHECK(section(big, 2) == e);
            CHECK(big.subfield_degree() == e.subfield_degree());
        }
}

TEST_CASE("quadratic roots: residues and non-residues") {
    // X^2 - 1 over F_7
    auto f = UPoly::from_ints(field(7), {Int(-1), Int(0), Int(1)});
    auto roots = upoly_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == FqElem::from_int(field(7), 1));
    CHECK(roots[1] == FqElem::from_int(field(7), 6));

    // X^2 - 2 over F_5: no roots (2 is a non-residue)
    auto g = UPoly::from_ints(field(5), {Int(-2), Int(0), Int(1)});
    CHECK(upoly_roots(g).empty());

    // X^2 - 2 over F_25: exactly two roots, negatives of each other
    const FqCtx* F25 = field(5, 2);
    auto h = UPoly::from_ints(F25, {Int(-2), Int(0), Int(1)});
    auto r25 = upoly_roots(h);
    REQUIRE(r25.size() == 2);
    CHECK(r25[0] == -r25[1]);
    CHECK(r25[0] * r25[0] == FqElem::from_int(F25, 2));
    // exhaustive cross-check
    int found = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            FqElem e(F25, {Int(i), Int(j)});
            if (e * e == FqElem::from_int(F25, 2)) ++found;
        }
    CHECK(found == 2);
}

TEST_CASE("factorization of the degree-six resolvent at two primes") {
    // X^6 - 4X^4 + 3X^2 + 1
    std::vector<Int> coeffs{Int(1), Int(0), Int(3), Int(0), Int(-4), Int(0), Int(1)};
    {
        auto f = UPoly::from_ints(field(65537), coeffs);
        auto fac = upoly_factor(f);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].factor.degree() == 3);
        CHECK(fac[1].factor.degree() == 3);
    }
    {
        auto f = UPoly::from_ints(field(8388617), coeffs);
        auto fac = upoly_factor(f);
        REQUIRE(fac.size() == 4);
        CHECK(fac[0].factor.degree() == 1);
        CHECK(fac[1].factor.degree() == 1);
        CHECK(fac[2].factor.degree() == 2);
        CHECK(fac[3].factor.degree() == 2);
    }
}

TEST_CASE("factorization: product equals input, factors irreducible (small fields)") {
    Rng rng(31);
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const FqCtx* F = field(p);
        for (int trial = 0; trial < 10; ++trial) {
            int deg = 1 + (int)(rng.next() % 8);
            std::vector<FqElem> cs;
            for (int i = 0; i < deg; ++i) cs.push_back(FqElem::from_int(F, rng.below(p)));
            cs.push_back(FqElem::one(F));
            UPoly f(F, cs);
            if (f.degree() < 1) continue;
            auto fac = upoly_factor(f);
            UPoly prod = UPoly::constant(FqElem::one(F));
            for (auto& [g, mult] : fac) {
                CHECK(is_irreducible(g));
                for (unsigned i = 0; i < mult; ++i) prod = prod * g;
            }
            CHECK(prod == f.monic());
        }
    }
}

TEST_CASE("X^2 + X over F_2") {
    auto f = UPoly::from_ints(field(2), {Int(0), Int(1), Int(1)});
    auto fac = upoly_factor(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].factor.degree() == 1);
    CHECK(fac[1].factor.degree() == 1);
}

TEST_CASE("roots agree with exhaustive evaluation for p^k <= 2401") {
    Rng rng(41);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{7, 2}, {2, 5}, {3, 4}, {7, 4}}) {
        const FqCtx* F = field(p, k);
        // random polynomial of degree <= 4
        std::vector<FqElem> cs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Int> c;
            for (int d = 0; d < k; ++d) c.push_back(rng.below(p));
            cs.emplace_back(F, c);
        }
        cs.push_back(FqElem::one(F));
        UPoly f(F, cs);
        auto roots = upoly_roots(f);
        // exhaustive check
        std::vector<Int> idx(k, Int(0));
        size_t count = 0;
        std::vector<Int> digits(k, 0);
        size_t total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (size_t n = 0; n < total; ++n) {
            size_t t = n;
            std::vector<Int> c(k);
            for (int i = 0; i < k; ++i) {
                c[i] = Int((long)(t % p));
                t /= p;
            }
            FqElem e(F, c);
            if (f.eval(e).is_zero()) ++count;
        }
        CHECK(roots.size() == count);
        for (auto& r : roots) CHECK(f.eval(r).is_zero());
    }
}
