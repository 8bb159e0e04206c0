#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ftex {

// Bracket powers multiply exponents by p^e; anything past this cap is
// treated as overflow rather than silently wrapping.
inline constexpr std::uint64_t kExponentCap = std::uint64_t(1) << 32;

struct ExponentOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector, one entry per ambient variable.
struct Monomial {
    std::vector<std::uint64_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint64_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    std::uint64_t degree() const { return std::accumulate(e.begin(), e.end(), std::uint64_t(0)); }

    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    // operator<=> gives the order-agnostic storage key, not a monomial order.
    auto operator<=>(const Monomial&) const = default;
};

inline Monomial mul(const Monomial& a, const Monomial& b)
{
    Monomial r(a.e);
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] += b.e[i];
        if (r.e[i] >= kExponentCap) throw ExponentOverflow("monomial exponent overflow");
    }
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, requires divides(a, b)
inline Monomial quotient(const Monomial& b, const Monomial& a)
{
    Monomial r(b.e);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial r(a.e);
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline Monomial pow_scale(const Monomial& a, std::uint64_t q)
{
    Monomial r(a.e);
    for (auto& x : r.e) {
        if (x && q >= kExponentCap / x + 1) throw ExponentOverflow("bracket power exponent overflow");
        x *= q;
        if (x >= kExponentCap) throw ExponentOverflow("bracket power exponent overflow");
    }
    return r;
}

}  // namespace ftex
