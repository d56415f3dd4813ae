#ifndef L2Q_WORDS_HPP
#define L2Q_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace l2q {

/// A word in the free group on generators g_1, ..., g_m, stored as signed
/// generator indices: +i for g_i, -i for g_i^{-1}. The stored letter list is
/// not necessarily reduced; call reduced() / cyclically_reduced() as needed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    static Word generator(int i) { return Word({i}); }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(long e) const;

    /// Free reduction: cancel adjacent i, -i pairs. Idempotent.
    Word reduced() const;
    /// Free + cyclic reduction (conjugacy class representative up to rotation).
    Word cyclically_reduced() const;

    int max_generator() const;  // 0 for the empty word

    /// Canonical key for the conjugacy class closed under inversion: the
    /// lexicographically least rotation of the cyclically reduced word or of
    /// its inverse.
    std::vector<int> canonical_cyclic_key() const;

    /// Evaluate at a sign vector: product of sigma_{|i|} over all letters,
    /// i.e. the parity of the exponent sums. sigma is indexed from generator 1.
    int sign_at(const std::vector<int>& sigma) const;

    /// Exponent sum of each generator mod 2; bit k-1 set when g_k is odd.
    std::uint64_t exponent_parities(int m) const;

    std::string str() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
    std::vector<int> letters_;
};

/// Substitute images[i-1] for g_i (and its inverse for g_i^{-1}); result is
/// freely reduced.
Word substitute(const Word& w, const std::vector<Word>& images);

struct Presentation {
    int m = 0;                        // number of generators, >= 2
    std::vector<std::string> names;   // declared generator names, size m
    std::vector<Word> relators;       // freely reduced, nonempty

    std::string str() const;
};

/// Parse "<a,b | a^3, b^7, (a*b)^2, [a,b]>" style presentations.
/// Grammar: pres := "<" names "|" relator ("," relator)* ">"
///          relator := term ("*" term)*
///          term := atom ("^" integer)?
///          atom := name | "(" relator ")" | "[" relator "," relator "]"
/// [x,y] is the commutator x^-1 y^-1 x y. Throws l2q::error with a position
/// on bad syntax, unknown generators, or a relator that reduces to the
/// empty word.
Presentation parse_presentation(const std::string& text);

}  // namespace l2q

#endif
