#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ftex/ideal.hpp"

namespace ftex {

struct FrobeniusConfig {
    int max_exponent = 8;
    int lookahead = 2;
    // randomized late-entrant guard run before certifying a plateau
    int probe_count = 3;
    int probe_degree = 2;
    std::uint64_t probe_seed = 20260823;
};

enum class CertStatus { Certified, CappedInconclusive };

// Ascending chain of Frobenius kernels Φ_e = {f : f^{p^e} ∈ I^{[p^e]} + A},
// whose union is the preimage in S of I^F ⊆ R.
struct ClosureResult {
    IdealHandle closure;
    std::vector<std::pair<int, IdealHandle>> chain;
    int stabilized_at = -1;
    CertStatus status = CertStatus::CappedInconclusive;
};

struct FteWitness {
    Polynomial generator;  // generator of the closure ideal
    int exponent;          // smallest e with generator^{p^e} ∈ I^{[p^e]} + A
};

struct FteResult {
    int fte = -1;  // valid when Certified; otherwise see lower_bound
    int lower_bound = 0;
    ClosureResult closure;
    std::vector<FteWitness> witnesses;
    CertStatus status() const { return closure.status; }
};

struct Hsl0Result {
    int value = -1;
    CertStatus status = CertStatus::CappedInconclusive;
};

// p^e with the bracket-power overflow guard applied.
std::uint64_t frobenius_power(const FieldSpec& field, int e);

// ( g^{p^e} : g ∈ gens I ); independent of the chosen generating set.
IdealHandle bracket_power(const IdealHandle& I, int e);

// {f ∈ S : f^{p^e} ∈ J}, via the graph ideal J + (y_i - x_i^{p^e}) and
// elimination of the original variables.
IdealHandle frobenius_preimage(const IdealHandle& J, int e);

ClosureResult frobenius_closure(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg = {});

FteResult fte(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg = {});

// Preimage in S of ker(F^e_R : H^0_m(R/I) → H^0_m(R/I^{[p^e]})).
IdealHandle relative_kernel_h0(const RingSpec& ring, const IdealHandle& I, int e);

Hsl0Result hsl0(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg = {});

}  // namespace ftex
