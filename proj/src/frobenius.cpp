#include "ftex/frobenius.hpp"

#include <random>

namespace ftex {

std::uint64_t frobenius_power(const FieldSpec& field, int e)
{
    if (e < 0) throw std::invalid_argument("Frobenius exponent must be non-negative");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > kExponentCap / field.p())
            throw ExponentOverflow("p^" + std::to_string(e) + " exceeds the exponent cap");
        q *= field.p();
    }
    return q;
}

IdealHandle bracket_power(const IdealHandle& I, int e)
{
    std::uint64_t q = frobenius_power(I.ring()->field, e);
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.frobenius_substitute(q));
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle frobenius_preimage(const IdealHandle& J, int e)
{
    if (e == 0) return J;
    const RingPtr& R = J.ring();
    std::uint64_t q = frobenius_power(R->field, e);
    const std::size_t n = R->nvars();

    std::vector<std::string> ynames;
    for (const auto& v : R->variables) {
        std::string name = v + "@pre";
        ynames.push_back(name);
    }
    RingPtr E = extend_ring(R, ynames);

    std::vector<int> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);

    std::vector<Polynomial> gens;
    for (const auto& g : J.gens()) gens.push_back(map_variables(g, E, up));
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(E, n + i) - Polynomial::variable(E, i, q));

    std::vector<bool> front(2 * n, false);
    for (std::size_t i = 0; i < n; ++i) front[i] = true;
    std::vector<Polynomial> elim = eliminate(E, gens, front, J.limits);

    std::vector<int> down(2 * n, -1);
    for (std::size_t i = 0; i < n; ++i) down[n + i] = static_cast<int>(i);
    std::vector<Polynomial> out;
    for (const auto& g : elim) out.push_back(map_variables(g, R, down));
    return IdealHandle(R, std::move(out));
}

namespace {

// all monomials of total degree <= d
void enumerate_monomials(std::size_t n, std::uint64_t d, Monomial& cur, std::size_t pos,
                         std::vector<Monomial>& out)
{
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (std::uint64_t k = 0; k <= d; ++k) {
        cur.e[pos] = k;
        enumerate_monomials(n, d - k, cur, pos + 1, out);
    }
    cur.e[pos] = 0;
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint64_t d)
{
    std::vector<Monomial> out;
    Monomial cur(n);
    enumerate_monomials(n, d, cur, 0, out);
    return out;
}

struct Pipeline {
    const RingSpec& R;
    const IdealHandle& I;
    const FrobeniusConfig& cfg;
    std::vector<IdealHandle> J;  // J[e] = I^{[p^e]} + A

    const IdealHandle& bracket_sum(int e)
    {
        while (static_cast<int>(J.size()) <= e)
            J.push_back(ideal_sum(bracket_power(I, static_cast<int>(J.size())), R.quotient()));
        return J[static_cast<std::size_t>(e)];
    }

    bool member_at(const Polynomial& g, int e)
    {
        std::uint64_t q = frobenius_power(R.field(), e);
        return bracket_sum(e).contains(g.frobenius_substitute(q));
    }

    bool ideal_member_at(const IdealHandle& W, int e)
    {
        for (const auto& g : W.gens())
            if (!member_at(g, e)) return false;
        return true;
    }

    // Probe for a late entrant: an element outside the candidate closure
    // whose p^e-th power nevertheless lands in J_e for some e past the
    // verified plateau. Finding one falsifies the plateau.
    bool plateau_survives_probes(const IdealHandle& candidate, int from_e)
    {
        if (candidate.is_unit_ideal() || cfg.probe_count <= 0) return true;
        std::mt19937_64 rng(cfg.probe_seed);
        const auto& gb = candidate.groebner();
        std::vector<Monomial> monos = monomials_up_to(R.ambient()->nvars(),
                                                      static_cast<std::uint64_t>(cfg.probe_degree));
        std::vector<Polynomial> probes;
        for (int tries = 0; tries < cfg.probe_count * 8 && static_cast<int>(probes.size()) < cfg.probe_count;
             ++tries) {
            Polynomial::TermMap tm;
            for (const auto& m : monos) {
                std::uint64_t c = rng() % R.field().p();
                if (c) tm.emplace(m, c);
            }
            Polynomial g(R.ambient(), std::move(tm));
            if (g.is_zero()) continue;
            Polynomial r = normal_form(g, gb);
            if (!r.is_zero()) probes.push_back(std::move(r));
        }
        for (int e = from_e; e <= cfg.max_exponent; ++e) {
            for (const auto& g : probes) {
                try {
                    if (member_at(g, e)) return false;
                } catch (const ExponentOverflow&) {
                    return true;  // chain could not be extended this far either
                }
            }
        }
        return true;
    }
};

}  // namespace

static FteResult closure_and_fte(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg)
{
    if (!I.ring()->same_as(*ring.ambient())) throw RingMismatch("ideal not in the ring's ambient ring");
    if (cfg.max_exponent < 1 || cfg.lookahead < 1)
        throw std::invalid_argument("need max_exponent >= 1 and lookahead >= 1");

    FteResult res;
    Pipeline pipe{ring, I, cfg, {}};

    IdealHandle phi0 = ring.lift(I);
    if (phi0.is_unit_ideal()) {
        res.closure.closure = phi0;
        res.closure.chain.emplace_back(0, phi0);
        res.closure.stabilized_at = 0;
        res.closure.status = CertStatus::Certified;
        res.fte = 0;
        return res;
    }

    std::vector<IdealHandle> phi{phi0};
    res.closure.chain.emplace_back(0, phi0);
    int plateau = 0;
    int last_growth = 0;

    for (int e = 1; e <= cfg.max_exponent; ++e) {
        IdealHandle next = frobenius_preimage(pipe.bracket_sum(e), e);
        if (!next.contains_ideal(phi.back()))
            throw std::logic_error("Frobenius kernel chain failed to ascend");
        bool same = ideal_equal(next, phi.back());
        phi.push_back(next);
        res.closure.chain.emplace_back(e, next);
        if (same) {
            ++plateau;
        } else {
            plateau = 0;
            last_growth = e;
        }
        if (plateau < cfg.lookahead) continue;

        int stabilized = e - plateau;
        const IdealHandle& candidate = phi[static_cast<std::size_t>(stabilized)];

        // linear scan for the least exponent absorbing the closure
        int found = -1;
        for (int e2 = 0; e2 <= stabilized; ++e2) {
            bool in = pipe.ideal_member_at(candidate, e2);
            if (in && found < 0) found = e2;
            if (!in && found >= 0)
                throw std::logic_error("bracket containment failed to be monotone in e");
        }
        if (found < 0) throw std::logic_error("closure candidate not absorbed at its own plateau");

        // cross-check: the chain at the Fte candidate must already equal the closure
        if (!ideal_equal(phi[static_cast<std::size_t>(found)], candidate))
            throw std::logic_error("Fte cross-check failed: chain at fte differs from closure");

        if (!pipe.plateau_survives_probes(candidate, e + 1)) continue;

        res.closure.closure = candidate;
        res.closure.stabilized_at = stabilized;
        res.closure.status = CertStatus::Certified;
        res.fte = found;
        for (const auto& g : candidate.gens()) {
            for (int e2 = 0; e2 <= found; ++e2) {
                if (pipe.member_at(g, e2)) {
                    res.witnesses.push_back({g, e2});
                    break;
                }
            }
        }
        return res;
    }

    res.closure.closure = phi.back();
    res.closure.stabilized_at = -1;
    res.closure.status = CertStatus::CappedInconclusive;
    res.lower_bound = last_growth;
    return res;
}

ClosureResult frobenius_closure(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg)
{
    return closure_and_fte(ring, I, cfg).closure;
}

FteResult fte(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg)
{
    return closure_and_fte(ring, I, cfg);
}

IdealHandle relative_kernel_h0(const RingSpec& ring, const IdealHandle& I, int e)
{
    IdealHandle lifted = ring.lift(I);
    IdealHandle sat = saturate(lifted, ring.maximal_ideal()).ideal;
    IdealHandle Je = ideal_sum(bracket_power(I, e), ring.quotient());
    return intersect(frobenius_preimage(Je, e), sat);
}

Hsl0Result hsl0(const RingSpec& ring, const IdealHandle& I, const FrobeniusConfig& cfg)
{
    FteResult f = closure_and_fte(ring, I, cfg);
    Hsl0Result out;
    out.status = f.status();
    if (out.status != CertStatus::Certified) return out;

    IdealHandle sat = saturate(ring.lift(I), ring.maximal_ideal()).ideal;
    IdealHandle W = intersect(f.closure.closure, sat);
    Pipeline pipe{ring, I, cfg, {}};
    for (int e = 0; e <= f.fte; ++e) {
        if (pipe.ideal_member_at(W, e)) {
            out.value = e;
            return out;
        }
    }
    throw std::logic_error("hsl0 exceeded fte; invariant hsl0 <= fte violated");
}

}  // namespace ftex
