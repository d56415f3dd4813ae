#ifndef L2Q_MONOMIAL_HPP
#define L2Q_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "l2q/intutil.hpp"

namespace l2q {

/// Sparse exponent vector: (variable id, exponent) pairs sorted by variable,
/// zero exponents never stored.
class Monomial {
public:
    using Pair = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Pair> exps);

    static Monomial var(std::uint32_t v, std::uint32_t e = 1);

    const std::vector<Pair>& exps() const { return exps_; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return exps_.empty(); }
    std::uint32_t exponent(std::uint32_t v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial div(const Monomial& o) const;  // *this / o, requires divisibility
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::uint64_t hash() const;

private:
    std::vector<Pair> exps_;
    std::uint64_t deg_ = 0;
};

enum class OrderKind {
    Lex,      // variable 0 has highest priority
    LexRev,   // last variable has highest priority (solving order)
    GrevLex,  // total degree, ties broken reverse-lex from the last variable
};

/// elim_last > 0 turns the last elim_last variables into a front block that
/// is compared first (used for saturation / intersection with an auxiliary
/// variable appended at the end of the ring).
struct MonOrder {
    OrderKind kind = OrderKind::GrevLex;
    int elim_last = 0;

    bool operator==(const MonOrder& o) const {
        return kind == o.kind && elim_last == o.elim_last;
    }
};

/// Three-way comparison of monomials under `ord`; > 0 when a comes before b.
int mon_cmp(const Monomial& a, const Monomial& b, const MonOrder& ord, int nvars);

struct PolyCtx {
    int nvars = 0;
    MonOrder order;
    std::vector<std::string> var_names;

    std::string name(std::uint32_t v) const {
        return v < var_names.size() ? var_names[v] : "v" + std::to_string(v);
    }
};

using PolyCtxPtr = std::shared_ptr<const PolyCtx>;

PolyCtxPtr make_ctx(std::vector<std::string> names, MonOrder order);
/// Same variables, different order.
PolyCtxPtr with_order(const PolyCtxPtr& ctx, MonOrder order);
/// Appends one auxiliary variable (for saturation/intersection), block-first.
PolyCtxPtr with_aux_var(const PolyCtxPtr& ctx, const std::string& name);

}  // namespace l2q

#endif
