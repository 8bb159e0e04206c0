#pragma once

#include <cstdint>
#include <stdexcept>

namespace ftex {

// Prime field F_p, 2 <= p < 2^31. Residues live in [0, p) as uint64_t,
// so products fit in 64 bits without any fancy reduction.
class FieldSpec {
public:
    explicit FieldSpec(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t n) const;
    std::uint64_t inv(std::uint64_t a) const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// Trial division; p < 2^31 keeps this instant.
bool is_prime(std::uint64_t n);

}  // namespace ftex
