#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftex/frobenius.hpp"
#include "ftex/sequences.hpp"

namespace ftex {

enum class Verdict { PASS, FAIL, INCONCLUSIVE, SKIPPED };

std::string to_string(Verdict v);
std::string to_string(CertStatus s);

struct SampleRecord {
    int index;
    ElementSequence sequence;
    int fte = -1;
    int hsl0 = -1;
    CertStatus status = CertStatus::CappedInconclusive;
};

struct BoundInfo {
    long long value;  // (d - t) * h + c
    int h;
    std::string h_provenance;  // "user" or "estimated"
    int c;
};

struct SurveyReport {
    std::string ring_id;
    int t = 0;
    int d = 0;
    std::vector<SampleRecord> samples;
    int max_fte = -1;  // over Certified samples
    std::optional<BoundInfo> claimed_bound;
    bool all_certified = false;
    Verdict verdict = Verdict::INCONCLUSIVE;
};

struct SweepPoint {
    std::vector<int> exponents;
    int fte = -1;
    CertStatus status = CertStatus::CappedInconclusive;
};

struct SweepReport {
    std::string ring_id;
    ElementSequence base;
    int max_n = 0;
    std::vector<SweepPoint> points;
    int max_fte = -1;  // the empirical C_x
    Verdict verdict = Verdict::INCONCLUSIVE;
};

struct ExperimentConfig {
    std::uint64_t seed = 42;
    int max_degree = 2;
    int threads = 1;
    FrobeniusConfig frob;
    std::optional<int> h;
    std::string h_provenance = "user";
    std::optional<int> c;
};

// Samples n filter regular sequences of length t and aggregates their
// Frobenius test exponents; checks the uniform bound when h and c are given.
SurveyReport uniform_bound_survey(const RingSpec& ring, int t, int n_samples, const ExperimentConfig& cfg);

// Fte over the grid (x_1^{n_1}, ..., x_t^{n_t}), 1 <= n_i <= max_n.
SweepReport power_family_sweep(const RingSpec& ring, const ElementSequence& seq, int max_n,
                               const ExperimentConfig& cfg);

// For a regular sequence: hsl0((x_1..x_t)) <= h, with h the HSL number of
// the top local cohomology of R (user-supplied or estimated).
bool regular_case_check(const RingSpec& ring, const ElementSequence& seq, int h,
                        const ExperimentConfig& cfg);

struct PrefixCheck {
    int prefix;  // i
    bool holds;
};

// For each prefix I_i (i < t): m^{2^i n0} · (I_i + A : m^∞) ⊆ closure(I_i).
std::vector<PrefixCheck> nilpotent_annihilation_check(const RingSpec& ring, const ElementSequence& seq,
                                                      int n0, const ExperimentConfig& cfg);

struct BoundCheck {
    Verdict verdict = Verdict::SKIPPED;
    long long bound = -1;
    int max_fte = -1;
};

BoundCheck bound_report(const RingSpec& ring, int t, std::optional<int> h, std::optional<int> c,
                        const SurveyReport& survey);

// max Fte over sampled full-length filter regular sequences cutting down to
// dimension zero; for a Cohen-Macaulay ring this estimates HSL(R) = Fte(R).
int estimate_hsl_via_parameter_ideals(const RingSpec& ring, int n_samples, const ExperimentConfig& cfg);

}  // namespace ftex
