#include <doctest.h>

#include "l2q/fricke.hpp"
#include "l2q/mat2.hpp"

using namespace l2q;

namespace {

PolyZ X(const TraceRing& R, std::uint32_t mask) {
    return PolyZ::variable(R.full_ctx(), ZZRing{}, R.full_var(mask));
}

Mat2 random_sl2(const FqCtx* F, Rng& rng) {
    for (;;) {
        FqElem a = FqElem(F, [&] {
            std::vector<Int> c;
            for (int i = 0; i < F->k; ++i) c.push_back(rng.below(F->p));
            return c;
        }());
        FqElem b = FqElem(F, [&] {
            std::vector<Int> c;
            for (int i = 0; i < F->k; ++i) c.push_back(rng.below(F->p));
            return c;
        }());
        FqElem c = FqElem(F, [&] {
            std::vector<Int> cc;
            for (int i = 0; i < F->k; ++i) cc.push_back(rng.below(F->p));
            return cc;
        }());
        if (!a.is_zero()) {
            FqElem d = (FqElem::one(F) + b * c) * a.inv();
            return Mat2{a, b, c, d};
        }
        if (!b.is_zero()) {
            // det = -bc = 1
            FqElem cc = -b.inv();
            FqElem d = FqElem(F, [&] {
                std::vector<Int> v;
                for (int i = 0; i < F->k; ++i) v.push_back(rng.below(F->p));
                return v;
            }());
            return Mat2{a, b, cc, d};
        }
    }
}

Word random_word(int m, int maxlen, Rng& rng) {
    std::vector<int> ls;
    int len = 1 + (int)(rng.next() % maxlen);
    for (int i = 0; i < len; ++i) {
        int g = 1 + (int)(rng.next() % m);
        ls.push_back(rng.next() & 1 ? g : -g);
    }
    return Word(ls);
}

/// Evaluate a full-ring polynomial at the trace point of an SL2 tuple.
FqElem eval_traces(const TraceRing& R, const PolyZ& f, const std::vector<Mat2>& tuple) {
    const FqCtx* F = tuple[0].field();
    std::uint32_t full = (1u << R.m()) - 1;
    std::vector<FqElem> point;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Mat2 prod = Mat2::identity(F);
        for (int i = 0; i < R.m(); ++i)
            if (mask & (1u << i)) prod = prod * tuple[i];
        point.push_back(prod.trace());
    }
    FqRing ring{F};
    return f.eval(ring, point, [&](const Int& c) { return FqElem::from_int(F, c); });
}

FqElem eval_im(const TraceRing& R, const PolyZ& f, const std::vector<Mat2>& tuple) {
    const FqCtx* F = tuple[0].field();
    std::vector<FqElem> point;
    for (auto mask : R.im_masks()) {
        Mat2 prod = Mat2::identity(F);
        for (int i = 0; i < R.m(); ++i)
            if (mask & (1u << i)) prod = prod * tuple[i];
        point.push_back(prod.trace());
    }
    FqRing ring{F};
    return f.eval(ring, point, [&](const Int& c) { return FqElem::from_int(F, c); });
}

}  // namespace

TEST_CASE("pinned trace polynomials") {
    TraceRing R(3);
    CHECK(R.tau(Word({1})) == X(R, 1));
    CHECK(R.tau(Word({1, 1})) == X(R, 1) * X(R, 1) - PolyZ::constant(R.full_ctx(), ZZRing{}, 2));
    CHECK(R.tau(Word({-1, 2})) == X(R, 1) * X(R, 2) - X(R, 3));
    // g1 g2 g1 g3
    CHECK(R.tau(Word({1, 2, 1, 3})) == X(R, 3) * X(R, 5) + X(R, 6) - X(R, 2) * X(R, 4));
    // g1 g3 g2
    CHECK(R.tau(Word({1, 3, 2})) ==
          -X(R, 7) + X(R, 1) * X(R, 6) + X(R, 2) * X(R, 5) + X(R, 4) * X(R, 3) -
              X(R, 1) * X(R, 2) * X(R, 4));
}

TEST_CASE("trace polynomial evaluation matches matrix traces (F_101 and F_8)") {
    Rng rng(2024);
    for (const FqCtx* F : {field(101), field(2, 3)}) {
        for (int m : {2, 3, 4}) {
            TraceRing R(m);
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Mat2> tuple;
                for (int i = 0; i < m; ++i) tuple.push_back(random_sl2(F, rng));
                Word w = random_word(m, 12, rng);
                FqElem lhs = eval_traces(R, R.tau(w), tuple);
                FqElem rhs = evaluate_word(w, tuple).trace();
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("tau is a class function on values") {
    Rng rng(77);
    TraceRing R(3);
    const FqCtx* F = field(101);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Mat2> tuple{random_sl2(F, rng), random_sl2(F, rng), random_sl2(F, rng)};
        Word w = random_word(3, 8, rng);
        Word u = random_word(3, 4, rng);
        Word conj = u * w * u.inverse();
        CHECK(eval_traces(R, R.tau(w), tuple) == eval_traces(R, R.tau(conj), tuple));
        CHECK(eval_traces(R, R.tau(w), tuple) == eval_traces(R, R.tau(w.inverse()), tuple));
    }
}

TEST_CASE("phi vanishes on traces of SL2 triples") {
    TraceRing R(3);
    // spot value over Z
    const FqCtx* F = field(1000003);
    std::vector<Mat2> tuple{Mat2::from_ints(F, 0, 1, -1, 0), Mat2::from_ints(F, 1, 1, 0, 1),
                            Mat2::from_ints(F, 1, 0, 1, 1)};
    CHECK(eval_im(R, R.phi(3), tuple).is_zero());

    Rng rng(5);
    for (const FqCtx* K : {field(101), field(2, 3), field(5, 2)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Mat2> t{random_sl2(K, rng), random_sl2(K, rng), random_sl2(K, rng)};
            CHECK(eval_im(R, R.phi(3), t).is_zero());
        }
    }
}

TEST_CASE("phi special values") {
    TraceRing R(3);
    ZZRing zz;
    std::array<Int, 7> zeros{};
    // phi(0,0,0,0,0,0,x123) = x123^2 - 4 as a function of the last slot
    for (long v : {-3L, 0L, 1L, 5L}) {
        std::array<Int, 7> t{};
        t[6] = v;
        struct IntRing {
            using Elem = Int;
            Elem add(const Elem& a, const Elem& b) const { return a + b; }
            Elem sub(const Elem& a, const Elem& b) const { return a - b; }
            Elem mul(const Elem& a, const Elem& b) const { return a * b; }
            Elem from_int(const Int& n) const { return n; }
        } ring;
        std::array<Int, 7> args = t;
        CHECK(TraceRing::phi_at(ring, args) == Int(v) * v - 4);
        std::array<Int, 7> twos;
        twos.fill(Int(2));
        CHECK(TraceRing::phi_at(ring, twos) == 0);
    }
    (void)zeros;
}

TEST_CASE("normal form: coordinate variables pass through") {
    TraceRing R(3);
    auto [g, e] = R.normal_form(X(R, 5));  // x13
    CHECK(e == 0);
    CHECK(g == PolyZ::variable(R.im_ctx(), ZZRing{}, R.im_var(5)));
}

TEST_CASE("normal form of x34 for m=4 is the displayed linear relation") {
    TraceRing R(4);
    std::uint32_t m34 = (1u << 2) | (1u << 3);
    auto [g, e] = R.normal_form(X(R, m34));
    CHECK(e == 1);
    ZZRing zz;
    auto v = [&](std::uint32_t mask) { return PolyZ::variable(R.im_ctx(), zz, R.im_var(mask)); };
    auto l = R.lambda(3);
    std::uint32_t b4 = 1u << 3;
    PolyZ expect = l[0] * v(b4) + l[1] * v(1u | b4) + l[2] * v(2u | b4) + l[3] * v(3u | b4);
    CHECK(g == expect);
}

TEST_CASE("normal form evaluation matches direct traces when rho is a unit") {
    Rng rng(4242);
    TraceRing R(4);
    const FqCtx* F = field(101);
    int done = 0;
    while (done < 30) {
        std::vector<Mat2> tuple;
        for (int i = 0; i < 4; ++i) tuple.push_back(random_sl2(F, rng));
        FqElem rho = eval_im(R, R.rho(), tuple);
        if (rho.is_zero()) continue;
        ++done;
        Word w = random_word(4, 10, rng);
        auto [g, e] = R.tau_nf(w);
        FqElem lhs = eval_im(R, g, tuple);
        FqElem rhs = evaluate_word(w, tuple).trace() * rho.pow(e);
        CHECK(lhs == rhs);
        // and specifically tr(A3 A4) via x34
        std::uint32_t m34 = (1u << 2) | (1u << 3);
        auto [g34, e34] = R.normal_form(X(R, m34));
        CHECK(eval_im(R, g34, tuple) == (tuple[2] * tuple[3]).trace() * rho.pow(e34));
    }
}

TEST_CASE("lambda coefficients: identity reconstruction and Gram system") {
    TraceRing R(3);
    auto l = R.lambda(3);
    // At the point where A_3 = I: x3 = 2, x13 = x1, x23 = x2, x123 = x12 the
    // coefficient of A_1 must vanish; substitute and compare.
    // lambda1 = -x1*x3 - x2*x123 + x12*x23 + 2*x13
    //        -> -2x1 - x2*x12 + x12*x2 + 2x1 = 0
    ZZRing zz;
    const FqCtx* F = field(101);
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        // random (t1,t2,t12) and the A_i = I specialization of the rest
        std::vector<FqElem> pt;
        auto rnd = [&]() { return FqElem::from_int(F, rng.below(101)); };
        FqElem t1 = rnd(), t2 = rnd(), t12 = rnd();
        std::vector<FqElem> point(R.im_masks().size(), FqElem::zero(F));
        auto set = [&](std::uint32_t mask, const FqElem& v) { point[R.im_var(mask)] = v; };
        set(1, t1);
        set(2, t2);
        set(3, t12);
        set(4, FqElem::from_int(F, 2));  // x3 = 2
        set(5, t1);                      // x13 = x1
        set(6, t2);                      // x23 = x2
        set(7, t12);                     // x123 = x12
        FqRing ring{F};
        auto ev = [&](const PolyZ& f) {
            return f.eval(ring, point, [&](const Int& c) { return FqElem::from_int(F, c); });
        };
        CHECK(ev(l[1]).is_zero());
        CHECK(ev(l[2]).is_zero());
        CHECK(ev(l[3]).is_zero());
        CHECK(ev(l[0]) == TraceRing::rho_at(ring, t1, t2, t12));
    }

    // random evaluation matches the 4x4 Gram-system solution
    int done = 0;
    Rng rng2(10);
    while (done < 25) {
        std::vector<Mat2> tuple{random_sl2(F, rng2), random_sl2(F, rng2), random_sl2(F, rng2)};
        FqElem rho = eval_im(R, R.rho(), tuple);
        if (rho.is_zero()) continue;
        ++done;
        // Solve G mu = (t3, t13, t23, t123) and check mu_i = lambda_i / rho.
        FqElem t1 = tuple[0].trace(), t2 = tuple[1].trace(), t12 = (tuple[0] * tuple[1]).trace();
        FqElem t3 = tuple[2].trace(), t13 = (tuple[0] * tuple[2]).trace(),
               t23 = (tuple[1] * tuple[2]).trace(), t123 = (tuple[0] * tuple[1] * tuple[2]).trace();
        FqElem two = FqElem::from_int(F, 2);
        FqElem G[4][5] = {
            {two, t1, t2, t12, t3},
            {t1, t1 * t1 - two, t12, t1 * t12 - t2, t13},
            {t2, t12, t2 * t2 - two, t2 * t12 - t1, t23},
            {t12, t1 * t12 - t2, t2 * t12 - t1, t12 * t12 - two, t123},
        };
        // Gaussian elimination over F
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int row = col; row < 4; ++row)
                if (!G[row][col].is_zero()) {
                    piv = row;
                    break;
                }
            REQUIRE(piv >= 0);
            std::swap(G[col], G[piv]);
            FqElem inv = G[col][col].inv();
            for (int c2 = col; c2 < 5; ++c2) G[col][c2] = G[col][c2] * inv;
            for (int row = 0; row < 4; ++row) {
                if (row == col || G[row][col].is_zero()) continue;
                FqElem f = G[row][col];
                for (int c2 = col; c2 < 5; ++c2) G[row][c2] = G[row][c2] - f * G[col][c2];
            }
        }
        auto ev = [&](const PolyZ& f) { return eval_im(R, f, tuple); };
        FqElem rinv = rho.inv();
        CHECK(G[0][4] == ev(l[0]) * rinv);
        CHECK(G[1][4] == ev(l[1]) * rinv);
        CHECK(G[2][4] == ev(l[2]) * rinv);
        CHECK(G[3][4] == ev(l[3]) * rinv);
    }
}
