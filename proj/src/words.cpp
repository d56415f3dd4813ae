#include "l2q/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "l2q/intutil.hpp"

namespace l2q {

Word Word::operator*(const Word& rhs) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

Word Word::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& x : out) x = -x;
    return Word(std::move(out));
}

Word Word::pow(long e) const {
    Word base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    std::vector<int> out;
    out.reserve(base.size() * n);
    for (unsigned long i = 0; i < n; ++i)
        out.insert(out.end(), base.letters_.begin(), base.letters_.end());
    return Word(std::move(out));
}

Word Word::reduced() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (int x : letters_) {
        if (x == 0) throw error("Word: zero letter");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
    std::vector<int> v = reduced().letters_;
    size_t a = 0, b = v.size();
    while (b - a >= 2 && v[a] == -v[b - 1]) {
        ++a;
        --b;
    }
    return Word(std::vector<int>(v.begin() + a, v.begin() + b));
}

int Word::max_generator() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, std::abs(x));
    return m;
}

std::vector<int> Word::canonical_cyclic_key() const {
    std::vector<int> w = cyclically_reduced().letters_;
    if (w.empty()) return w;
    std::vector<int> best;
    auto consider = [&best](const std::vector<int>& v) {
        size_t n = v.size();
        for (size_t r = 0; r < n; ++r) {
            std::vector<int> rot;
            rot.reserve(n);
            rot.insert(rot.end(), v.begin() + r, v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + r);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    };
    consider(w);
    consider(Word(w).inverse().letters());
    return best;
}

int Word::sign_at(const std::vector<int>& sigma) const {
    int s = 1;
    for (int x : letters_) {
        size_t i = std::abs(x);
        if (i <= sigma.size() && sigma[i - 1] < 0) s = -s;
    }
    return s;
}

std::uint64_t Word::exponent_parities(int m) const {
    std::uint64_t bits = 0;
    for (int x : letters_) {
        int i = std::abs(x);
        if (i >= 1 && i <= m) bits ^= (1ULL << (i - 1));
    }
    return bits;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        s += (letters_[i] > 0 ? "g" : "g-");
        s += std::to_string(std::abs(letters_[i]));
    }
    return s;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
    std::vector<int> out;
    for (int x : w.letters()) {
        size_t i = std::abs(x);
        if (i == 0 || i > images.size()) throw error("substitute: generator out of range");
        const Word& img = x > 0 ? images[i - 1] : images[i - 1].inverse();
        out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return Word(std::move(out)).reduced();
}

std::string Presentation::str() const {
    std::string s = "<";
    for (int i = 0; i < m; ++i) {
        if (i) s += ",";
        s += names[i];
    }
    s += " | ";
    for (size_t i = 0; i < relators.size(); ++i) {
        if (i) s += ", ";
        s += relators[i].str();
    }
    return s + ">";
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::vector<std::string> names;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw error("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int gen_index() {
        skip_ws();
        if (pos >= s.size() || !std::isalpha((unsigned char)s[pos])) fail("expected generator name");
        std::string name(1, s[pos]);
        ++pos;
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return (int)i + 1;
        fail("unknown generator '" + name + "'");
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    Word atom() {
        skip_ws();
        if (eat('(')) {
            Word w = relator();
            expect(')');
            return w;
        }
        if (eat('[')) {
            Word x = relator();
            expect(',');
            Word y = relator();
            expect(']');
            return x.inverse() * y.inverse() * x * y;
        }
        return Word::generator(gen_index());
    }

    Word term() {
        Word a = atom();
        skip_ws();
        if (eat('^')) return a.pow(integer());
        return a;
    }

    Word relator() {
        Word w = term();
        while (true) {
            skip_ws();
            if (eat('*'))
                w = w * term();
            else
                break;
        }
        return w;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Parser p(text);
    p.expect('<');
    do {
        p.skip_ws();
        if (p.pos >= p.s.size() || !std::isalpha((unsigned char)p.s[p.pos]))
            p.fail("expected generator name");
        std::string name(1, p.s[p.pos]);
        for (auto& n : p.names)
            if (n == name) p.fail("duplicate generator '" + name + "'");
        p.names.push_back(name);
        ++p.pos;
    } while (p.eat(','));
    p.expect('|');

    Presentation pres;
    pres.names = p.names;
    pres.m = (int)p.names.size();
    if (pres.m < 2) throw error("presentation needs at least 2 generators");

    do {
        size_t at = p.pos;
        Word w = p.relator().reduced();
        if (w.empty()) {
            p.pos = at;
            p.fail("relator reduces to the empty word");
        }
        pres.relators.push_back(w);
    } while (p.eat(','));
    p.expect('>');
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return pres;
}

}  // namespace l2q
