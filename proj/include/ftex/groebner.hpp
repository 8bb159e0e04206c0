#pragma once

#include <optional>
#include <vector>

#include "ftex/polynomial.hpp"

namespace ftex {

// Safety valves: blowing past them raises LimitExceeded rather than
// silently truncating a computation.
struct GroebnerLimits {
    std::size_t max_reduction_steps = 4'000'000;  // per division call
    std::size_t max_basis = 4000;
};

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced Groebner basis: monic, interreduced, sorted by leading monomial.
// The unique canonical generating set of its ideal for the given order.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> gens;
    std::vector<Monomial> leads;  // parallel to gens

    bool is_unit() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
    bool is_zero() const { return gens.empty(); }
};

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerLimits& limits = {});

// Multivariate division remainder; quotients (parallel to divisors) optional.
Polynomial divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order,
                  std::vector<Polynomial>* quotients = nullptr, const GroebnerLimits& limits = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const GroebnerLimits& limits = {});

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                      const GroebnerLimits& limits = {});

// Generators of I ∩ F_p[back variables]; front_mask marks the variables to
// eliminate. Results are polynomials in the full ring supported on the back
// block only.
std::vector<Polynomial> eliminate(RingPtr ring, const std::vector<Polynomial>& gens,
                                  const std::vector<bool>& front_mask, const GroebnerLimits& limits = {});

bool ideal_equal(RingPtr ring, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                 const MonomialOrder& order, const GroebnerLimits& limits = {});

}  // namespace ftex
