#include <doctest.h>

#include "l2q/mat2.hpp"
#include "l2q/words.hpp"

using namespace l2q;

TEST_CASE("parse basic presentations") {
    auto p = parse_presentation("<a,b | a^3, b^7, (a*b)^2>");
    CHECK(p.m == 2);
    REQUIRE(p.relators.size() == 3);
    CHECK(p.relators[0] == Word({1, 1, 1}));
    CHECK(p.relators[1] == Word({2, 2, 2, 2, 2, 2, 2}));
    CHECK(p.relators[2] == Word({1, 2, 1, 2}));
}

TEST_CASE("commutator sugar") {
    auto p = parse_presentation("<a,b | [a,b]>");
    CHECK(p.relators[0] == Word({-1, -2, 1, 2}));
}

TEST_CASE("empty relator is rejected") {
    CHECK_THROWS_AS(parse_presentation("<a,b,c | a^3, (a*c)^2*(a*c)^-2>"), error);
}

TEST_CASE("syntax and scope errors") {
    CHECK_THROWS_AS(parse_presentation("<a,b | c>"), error);
    CHECK_THROWS_AS(parse_presentation("<a,b | a^3"), error);
    CHECK_THROWS_AS(parse_presentation("<a | a^2>"), error);
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> letters;
        int len = (int)(rng.next() % 12);
        for (int i = 0; i < len; ++i) {
            int g = 1 + (int)(rng.next() % 3);
            letters.push_back(rng.next() & 1 ? g : -g);
        }
        Word w{letters};
        Word r = w.reduced();
        CHECK(r.size() <= w.size());
        CHECK(r.reduced() == r);
    }
}

TEST_CASE("word evaluation: identities and an F_7 product") {
    const FqCtx* F7 = field(7);
    std::vector<Mat2> tuple{Mat2::from_ints(F7, 0, 1, -1, 0), Mat2::from_ints(F7, 1, 1, 0, 1)};
    CHECK(evaluate_word(Word(), tuple) == Mat2::identity(F7));
    CHECK(evaluate_word(Word({1, -1}), tuple) == Mat2::identity(F7));
    Mat2 prod = evaluate_word(Word({1, 2}), tuple);
    CHECK(prod == Mat2::from_ints(F7, 0, 1, 6, 6));
}

TEST_CASE("evaluation is a homomorphism over F_101") {
    const FqCtx* F = field(101);
    Rng rng(11);
    auto random_word = [&](int m, int len) {
        std::vector<int> ls;
        for (int i = 0; i < len; ++i) {
            int g = 1 + (int)(rng.next() % m);
            ls.push_back(rng.next() & 1 ? g : -g);
        }
        return Word(ls);
    };
    auto random_sl2 = [&]() {
        // random [[a,b],[c,d]] with det 1: draw a,b,c until solvable for d
        for (;;) {
            Int a = rng.below(101), b = rng.below(101), c = rng.below(101);
            // a*d - b*c = 1
            if (a == 0) {
                if (b == 0 || c == 0) continue;
                Int d = rng.below(101);
                // -bc = 1 => c = -b^{-1}
                c = mod_pos(-invmod(b, 101), Int(101));
                return Mat2::from_ints(F, a, b, c, d);
            }
            Int d = mod_pos((1 + b * c) * invmod(a, 101), Int(101));
            return Mat2::from_ints(F, a, b, c, d);
        }
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Mat2> tuple{random_sl2(), random_sl2(), random_sl2()};
        for (auto& M : tuple) REQUIRE(M.det() == FqElem::one(F));
        Word u = random_word(3, 5), v = random_word(3, 6);
        CHECK(evaluate_word(u * v, tuple) == evaluate_word(u, tuple) * evaluate_word(v, tuple));
    }
}

TEST_CASE("sign of a word depends only on exponent parities") {
    Word a3({1, 1, 1});
    CHECK(a3.sign_at({-1, 1}) == -1);
    Word abab({1, 2, 1, 2});
    CHECK(abab.sign_at({-1, 1}) == 1);
    CHECK(abab.sign_at({-1, -1}) == 1);
    Word comm({-1, -2, 1, 2});
    CHECK(comm.sign_at({-1, -1}) == 1);
    CHECK(comm.sign_at({1, -1}) == 1);

    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> ls;
        int len = (int)(rng.next() % 10);
        for (int i = 0; i < len; ++i) {
            int g = 1 + (int)(rng.next() % 3);
            ls.push_back(rng.next() & 1 ? g : -g);
        }
        Word w{ls};
        std::vector<int> sigma{rng.next() & 1 ? 1 : -1, rng.next() & 1 ? 1 : -1,
                               rng.next() & 1 ? 1 : -1};
        CHECK(w.sign_at(sigma) == w.reduced().sign_at(sigma));
        if (!ls.empty()) {
            std::rotate(ls.begin(), ls.begin() + (rng.next() % ls.size()), ls.end());
            CHECK(w.sign_at(sigma) == Word(ls).sign_at(sigma));
        }
    }
}

TEST_CASE("substitution composes with inverses") {
    // images of a Nielsen move and its inverse
    std::vector<Word> fwd{Word({1}), Word({2, 3}), Word({3})};
    std::vector<Word> bwd{Word({1}), Word({2, -3}), Word({3})};
    Word w({1, 2, -3, 2});
    Word round = substitute(substitute(w, fwd), bwd);
    CHECK(round == w.reduced());
}
