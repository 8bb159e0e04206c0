#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftex/ideal.hpp"

namespace ftex {

// Ordered sequence x_1, ..., x_t of elements of m, given as polynomials
// in the ambient ring.
struct ElementSequence {
    std::vector<Polynomial> elements;

    std::size_t length() const { return elements.size(); }

    // prefix ideal (x_1, ..., x_i); i = 0 gives the zero ideal
    IdealHandle prefix_ideal(const RingPtr& ring, std::size_t i) const;
};

enum class SequenceKind { FilterRegular, Regular, ParameterPart };

struct StepDiagnostic {
    int index;  // 1-based step
    std::string note;
};

struct SequenceVerdict {
    SequenceKind kind_checked;
    bool ok = false;
    std::optional<int> failing_index;  // first violated step, 1-based
    std::vector<StepDiagnostic> diagnostics;
};

// Each colon quotient ((x_1..x_{i-1}) : x_i)/(x_1..x_{i-1}) has finite
// length, tested in R = S/A as colon ⊆ saturation.
SequenceVerdict is_filter_regular(const RingSpec& ring, const ElementSequence& seq);

// Each x_i is a nonzerodivisor modulo the prefix: colon equals the prefix.
SequenceVerdict is_regular_sequence(const RingSpec& ring, const ElementSequence& seq);

// Each prefix drops dim R by exactly one.
SequenceVerdict is_parameter_part(const RingSpec& ring, const ElementSequence& seq);

struct SamplerExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Random homogeneous forms, degree-1-first, each accepted only if the
// prefix stays filter regular. Deterministic for a fixed seed.
ElementSequence sample_filter_regular(const RingSpec& ring, int t, int max_degree, std::uint64_t seed,
                                      int max_retries = 100);

}  // namespace ftex
