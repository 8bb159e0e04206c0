#pragma once

#include <string>
#include <vector>

#include "ftex/monomial.hpp"

namespace ftex {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Monomial orders: lex, grevlex, and a two-block elimination order.
// A block order compares the front-variable projection first, so any
// monomial touching a front variable beats every back-block monomial.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    // front[i] == true marks variable i as an elimination (front block) variable.
    static MonomialOrder block(std::vector<bool> front,
                               Kind front_kind = Kind::Grevlex,
                               Kind back_kind = Kind::Grevlex);

    Kind kind() const { return kind_; }
    const std::vector<bool>& front_mask() const { return front_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

    // Stable textual signature, used as the GB cache key.
    std::string signature() const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<bool> front_;
    Kind front_kind_ = Kind::Grevlex;
    Kind back_kind_ = Kind::Grevlex;
};

}  // namespace ftex
