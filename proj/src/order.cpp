#include "ftex/order.hpp"

#include <stdexcept>

namespace ftex {

namespace {

Cmp cmp_lex(const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

Cmp cmp_grevlex(const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    // same degree: rightmost differing exponent, smaller wins
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

Cmp cmp_plain(MonomialOrder::Kind k, const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    return k == MonomialOrder::Kind::Lex ? cmp_lex(a, b, n) : cmp_grevlex(a, b, n);
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<bool> front, Kind front_kind, Kind back_kind)
{
    if (front_kind == Kind::Block || back_kind == Kind::Block)
        throw std::invalid_argument("block order components must be lex or grevlex");
    MonomialOrder o(Kind::Block);
    o.front_ = std::move(front);
    o.front_kind_ = front_kind;
    o.back_kind_ = back_kind;
    return o;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial_compare: variable count mismatch");
    const std::size_t n = a.nvars();
    if (kind_ != Kind::Block) return cmp_plain(kind_, a.e.data(), b.e.data(), n);

    if (front_.size() != n)
        throw std::invalid_argument("block order mask does not match variable count");
    std::vector<std::uint64_t> fa, fb, ba, bb;
    fa.reserve(n);
    fb.reserve(n);
    ba.reserve(n);
    bb.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        (front_[i] ? fa : ba).push_back(a.e[i]);
        (front_[i] ? fb : bb).push_back(b.e[i]);
    }
    Cmp c = cmp_plain(front_kind_, fa.data(), fb.data(), fa.size());
    if (c != Cmp::EQ) return c;
    return cmp_plain(back_kind_, ba.data(), bb.data(), ba.size());
}

std::string MonomialOrder::signature() const
{
    switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: {
        std::string s = "block:";
        for (bool f : front_) s += f ? '1' : '0';
        s += front_kind_ == Kind::Lex ? ":lex" : ":grevlex";
        s += back_kind_ == Kind::Lex ? ":lex" : ":grevlex";
        return s;
    }
    }
    return "?";
}

}  // namespace ftex
