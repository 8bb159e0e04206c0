#include "ftex/experiments.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ftex {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    case Verdict::SKIPPED: return "SKIPPED";
    }
    return "?";
}

std::string to_string(CertStatus s)
{
    return s == CertStatus::Certified ? "Certified" : "CappedInconclusive";
}

namespace {

SampleRecord run_sample(const RingSpec& ring, int index, const ElementSequence& seq,
                        const FrobeniusConfig& frob)
{
    SampleRecord rec;
    rec.index = index;
    rec.sequence = seq;
    IdealHandle I(ring.ambient(), seq.elements);
    FteResult f = fte(ring, I, frob);
    rec.status = f.status();
    if (rec.status == CertStatus::Certified) {
        rec.fte = f.fte;
        Hsl0Result h = hsl0(ring, I, frob);
        rec.hsl0 = h.value;
        if (rec.hsl0 > rec.fte) throw std::logic_error("survey sample violated hsl0 <= fte");
    }
    return rec;
}

}  // namespace

SurveyReport uniform_bound_survey(const RingSpec& ring, int t, int n_samples, const ExperimentConfig& cfg)
{
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    SurveyReport rep;
    rep.ring_id = ring.name();
    rep.t = t;
    rep.d = ring.dim();
    rep.samples.resize(static_cast<std::size_t>(n_samples));

    // sequences drawn serially so sampling is deterministic, fte/hsl0 in parallel
    std::vector<ElementSequence> seqs(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i)
        seqs[static_cast<std::size_t>(i)] =
            sample_filter_regular(ring, t, cfg.max_degree, cfg.seed + static_cast<std::uint64_t>(i));

    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.threads))
#endif
    for (int i = 0; i < n_samples; ++i) {
        try {
            rep.samples[static_cast<std::size_t>(i)] =
                run_sample(ring, i, seqs[static_cast<std::size_t>(i)], cfg.frob);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    rep.all_certified = true;
    for (const auto& s : rep.samples) {
        if (s.status == CertStatus::Certified)
            rep.max_fte = std::max(rep.max_fte, s.fte);
        else
            rep.all_certified = false;
    }

    if (cfg.h && cfg.c) {
        BoundInfo b;
        b.h = *cfg.h;
        b.c = *cfg.c;
        b.h_provenance = cfg.h_provenance;
        b.value = static_cast<long long>(rep.d - t) * b.h + b.c;
        rep.claimed_bound = b;
    }

    if (!rep.all_certified) {
        rep.verdict = Verdict::INCONCLUSIVE;  // one capped sample taints the survey
    } else if (rep.claimed_bound) {
        bool every = true;
        for (const auto& s : rep.samples) every = every && s.fte <= rep.claimed_bound->value;
        rep.verdict = every ? Verdict::PASS : Verdict::FAIL;
    } else {
        rep.verdict = Verdict::PASS;
    }
    return rep;
}

SweepReport power_family_sweep(const RingSpec& ring, const ElementSequence& seq, int max_n,
                               const ExperimentConfig& cfg)
{
    if (max_n < 1) throw std::invalid_argument("need max_n >= 1");
    if (!is_filter_regular(ring, seq).ok)
        throw std::invalid_argument("base sequence is not filter regular");

    SweepReport rep;
    rep.ring_id = ring.name();
    rep.base = seq;
    rep.max_n = max_n;

    const int t = static_cast<int>(seq.length());
    std::vector<std::vector<int>> grid;
    std::vector<int> cur(static_cast<std::size_t>(t), 1);
    while (true) {
        grid.push_back(cur);
        int i = 0;
        while (i < t) {
            if (++cur[static_cast<std::size_t>(i)] <= max_n) break;
            cur[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == t) break;
    }
    rep.points.resize(grid.size());

    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.threads))
#endif
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(grid.size()); ++g) {
        try {
            ElementSequence powered;
            for (int i = 0; i < t; ++i) {
                Polynomial x = seq.elements[static_cast<std::size_t>(i)];
                Polynomial acc = x;
                for (int k = 1; k < grid[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)]; ++k)
                    acc = acc * x;
                powered.elements.push_back(acc);
            }
            // powers of a filter regular sequence stay filter regular
            if (!is_filter_regular(ring, powered).ok)
                throw std::logic_error("power sequence unexpectedly failed the filter regular check");
            SweepPoint pt;
            pt.exponents = grid[static_cast<std::size_t>(g)];
            FteResult f = fte(ring, IdealHandle(ring.ambient(), powered.elements), cfg.frob);
            pt.status = f.status();
            if (pt.status == CertStatus::Certified) pt.fte = f.fte;
            rep.points[static_cast<std::size_t>(g)] = std::move(pt);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    bool all = true;
    for (const auto& pt : rep.points) {
        if (pt.status == CertStatus::Certified)
            rep.max_fte = std::max(rep.max_fte, pt.fte);
        else
            all = false;
    }
    rep.verdict = all ? Verdict::PASS : Verdict::INCONCLUSIVE;
    return rep;
}

bool regular_case_check(const RingSpec& ring, const ElementSequence& seq, int h,
                        const ExperimentConfig& cfg)
{
    if (!is_regular_sequence(ring, seq).ok)
        throw std::invalid_argument("regular_case_check requires a regular sequence");
    Hsl0Result r = hsl0(ring, IdealHandle(ring.ambient(), seq.elements), cfg.frob);
    if (r.status != CertStatus::Certified)
        throw LimitExceeded("hsl0 computation hit the exponent cap");
    return r.value <= h;
}

std::vector<PrefixCheck> nilpotent_annihilation_check(const RingSpec& ring, const ElementSequence& seq,
                                                      int n0, const ExperimentConfig& cfg)
{
    if (n0 < 0) throw std::invalid_argument("need n0 >= 0");
    if (!is_filter_regular(ring, seq).ok)
        throw std::invalid_argument("sequence is not filter regular");

    std::vector<PrefixCheck> out;
    IdealHandle m = ring.maximal_ideal();
    const int t = static_cast<int>(seq.length());
    for (int i = 0; i < t; ++i) {
        IdealHandle Ii = seq.prefix_ideal(ring.ambient(), static_cast<std::size_t>(i));
        IdealHandle sat = saturate(ring.lift(Ii), m).ideal;

        // m^{2^i * n0} · sat
        long long k = static_cast<long long>(n0) << i;
        IdealHandle lhs = sat;
        for (long long j = 0; j < k; ++j) lhs = ideal_product(lhs, m);

        ClosureResult cl = frobenius_closure(ring, Ii, cfg.frob);
        if (cl.status != CertStatus::Certified)
            throw LimitExceeded("closure of prefix " + std::to_string(i) + " hit the exponent cap");
        out.push_back({i, cl.closure.contains_ideal(lhs)});
    }
    return out;
}

BoundCheck bound_report(const RingSpec& ring, int t, std::optional<int> h, std::optional<int> c,
                        const SurveyReport& survey)
{
    BoundCheck out;
    out.max_fte = survey.max_fte;
    if (!h || !c) return out;  // SKIPPED
    if (!survey.all_certified) {
        out.verdict = Verdict::INCONCLUSIVE;
        return out;
    }
    out.bound = static_cast<long long>(ring.dim() - t) * *h + *c;
    out.verdict = survey.max_fte <= out.bound ? Verdict::PASS : Verdict::FAIL;
    return out;
}

int estimate_hsl_via_parameter_ideals(const RingSpec& ring, int n_samples, const ExperimentConfig& cfg)
{
    int best = -1;
    for (int i = 0; i < n_samples; ++i) {
        ElementSequence seq = sample_filter_regular(ring, ring.dim(), cfg.max_degree,
                                                    cfg.seed + static_cast<std::uint64_t>(i));
        if (!is_parameter_part(ring, seq).ok) continue;
        FteResult f = fte(ring, IdealHandle(ring.ambient(), seq.elements), cfg.frob);
        if (f.status() != CertStatus::Certified)
            throw LimitExceeded("parameter-ideal fte hit the exponent cap during estimation");
        best = std::max(best, f.fte);
    }
    if (best < 0) throw SamplerExhausted("no parameter ideals sampled for the HSL estimate");
    return best;
}

}  // namespace ftex
