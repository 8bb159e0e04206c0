#include "ftex/field.hpp"

#include <string>

namespace ftex {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (std::uint64_t(1) << 31))
        throw std::invalid_argument("field characteristic out of range [2, 2^31): " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t n) const
{
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const
{
    if (a % p_ == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p_ - 2);
}

}  // namespace ftex
