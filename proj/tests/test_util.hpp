#pragma once

#include <random>

#include "ftex/ideal.hpp"
#include "ftex/parse.hpp"

namespace ftex::testing {

inline RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars)
{
    return std::make_shared<Ring>(FieldSpec(p), std::move(vars));
}

inline Polynomial pp(const RingPtr& ring, const std::string& text)
{
    return parse_polynomial(text, ring);
}

inline std::vector<Polynomial> pl(const RingPtr& ring, const std::string& text)
{
    return parse_polynomial_list(text, ring);
}

inline IdealHandle ideal(const RingPtr& ring, const std::string& text)
{
    return IdealHandle(ring, parse_polynomial_list(text, ring));
}

// random sparse polynomial of total degree <= maxdeg
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, std::uint64_t maxdeg,
                              int extra_terms = 4)
{
    std::size_t n = ring->nvars();
    Polynomial::TermMap tm;
    int nterms = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(extra_terms + 1));
    for (int t = 0; t < nterms; ++t) {
        Monomial m(n);
        std::uint64_t budget = maxdeg;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t e = rng() % (budget + 1);
            m.e[i] = e;
            budget -= e;
        }
        std::uint64_t c = rng() % ring->field.p();
        if (c) tm[m] = ring->field.add(tm.count(m) ? tm[m] : 0, c);
    }
    for (auto it = tm.begin(); it != tm.end();) {
        if (it->second == 0)
            it = tm.erase(it);
        else
            ++it;
    }
    return Polynomial(ring, std::move(tm));
}

inline Monomial random_monomial(std::size_t n, std::mt19937_64& rng, std::uint64_t maxdeg)
{
    Monomial m(n);
    std::uint64_t budget = maxdeg;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t e = rng() % (budget + 1);
        m.e[i] = e;
        budget -= e;
    }
    return m;
}

}  // namespace ftex::testing
