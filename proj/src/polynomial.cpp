#include "ftex/polynomial.hpp"

#include <algorithm>

namespace ftex {

int Ring::var_index(const std::string& name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return static_cast<int>(i);
    return -1;
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.nvars() != ring_->nvars())
            throw std::invalid_argument("monomial arity does not match ring");
        it->second %= ring_->field.p();
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c)
{
    Polynomial f(ring);
    std::uint64_t r = ring->field.reduce(c);
    if (r) f.terms_.emplace(Monomial(ring->nvars()), r);
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, std::uint64_t exp)
{
    Monomial m(ring->nvars());
    m.e.at(i) = exp;
    return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::uint64_t c)
{
    Polynomial f(ring);
    c %= ring->field.p();
    if (c) f.terms_.emplace(std::move(m), c);
    return f;
}

std::uint64_t Polynomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::has_constant_term() const
{
    return coeff(Monomial(ring_->nvars())) != 0;
}

std::uint64_t Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::set_coeff(const Monomial& m, std::uint64_t c)
{
    c %= ring_->field.p();
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

std::pair<Monomial, std::uint64_t> Polynomial::leading_term(const MonomialOrder& order) const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

void Polynomial::check_same_ring(const Polynomial& o) const
{
    if (!ring_->same_as(*o.ring_)) throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    check_same_ring(o);
    const auto& F = ring_->field;
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.emplace(m, c);
        if (!fresh) {
            it->second = F.add(it->second, c);
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    check_same_ring(o);
    const auto& F = ring_->field;
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = r.terms_.emplace(m, F.neg(c));
        if (!fresh) {
            it->second = F.sub(it->second, c);
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    check_same_ring(o);
    const auto& F = ring_->field;
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = mul(ma, mb);
            std::uint64_t c = F.mul(ca, cb);
            auto [it, fresh] = r.terms_.emplace(std::move(m), c);
            if (!fresh) {
                it->second = F.add(it->second, c);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = ring_->field.neg(c);
    return r;
}

Polynomial Polynomial::scaled(std::uint64_t c) const
{
    c %= ring_->field.p();
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, ring_->field.mul(cc, c));
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint64_t c) const
{
    c %= ring_->field.p();
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mul(mm, m), ring_->field.mul(cc, c));
    return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const
{
    auto [lm, lc] = leading_term(order);
    return lc == 1 ? *this : scaled(ring_->field.inv(lc));
}

Polynomial Polynomial::frobenius_substitute(std::uint64_t q) const
{
    if (!is_power_of(q, ring_->field.p()))
        throw std::invalid_argument("frobenius_substitute: q is not a power of p");
    Polynomial r(ring_);
    // coefficients are fixed by Frobenius over F_p
    for (const auto& [m, c] : terms_) r.terms_.emplace(pow_scale(m, q), c);
    return r;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op)
{
    switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    }
    throw std::logic_error("bad PolyOp");
}

Cmp monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b)
{
    return order.compare(a, b);
}

bool is_power_of(std::uint64_t q, std::uint64_t p)
{
    if (q == 0) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace ftex
