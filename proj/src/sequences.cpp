#include "ftex/sequences.hpp"

#include <random>

namespace ftex {

IdealHandle ElementSequence::prefix_ideal(const RingPtr& ring, std::size_t i) const
{
    std::vector<Polynomial> gens(elements.begin(), elements.begin() + static_cast<std::ptrdiff_t>(i));
    return IdealHandle(ring, std::move(gens));
}

namespace {

void validate_sequence(const RingSpec& ring, const ElementSequence& seq)
{
    if (seq.elements.empty()) throw std::invalid_argument("sequence must have at least one element");
    for (const auto& x : seq.elements) {
        if (!x.ring()->same_as(*ring.ambient())) throw RingMismatch("sequence element in wrong ring");
        if (x.has_constant_term())
            throw std::invalid_argument("sequence elements must lie in the maximal ideal");
    }
}

std::string poly_summary(const IdealHandle& I)
{
    return std::to_string(I.groebner().gens.size()) + " GB generators";
}

// finite length of (prev : x)/prev, as colon ⊆ (prev : m^∞)
bool filter_regular_step(const RingSpec& ring, const IdealHandle& prev, const IdealHandle& m,
                         const Polynomial& x)
{
    IdealHandle quot = x.is_zero() ? IdealHandle::unit(ring.ambient())
                                   : colon(prev, IdealHandle(ring.ambient(), {x}));
    return saturate(prev, m).ideal.contains_ideal(quot);
}

}  // namespace

SequenceVerdict is_filter_regular(const RingSpec& ring, const ElementSequence& seq)
{
    validate_sequence(ring, seq);
    SequenceVerdict v{SequenceKind::FilterRegular};
    IdealHandle m = ring.maximal_ideal();
    for (std::size_t i = 1; i <= seq.length(); ++i) {
        IdealHandle prev = ring.lift(seq.prefix_ideal(ring.ambient(), i - 1));
        const Polynomial& x = seq.elements[i - 1];
        IdealHandle quot = x.is_zero() ? IdealHandle::unit(ring.ambient())
                                       : colon(prev, IdealHandle(ring.ambient(), {x}));
        IdealHandle sat = saturate(prev, m).ideal;
        bool ok = sat.contains_ideal(quot);
        v.diagnostics.push_back({static_cast<int>(i),
                                 "colon: " + poly_summary(quot) + ", saturation: " + poly_summary(sat) +
                                     (ok ? " (finite length)" : " (infinite length)")});
        if (!ok) {
            v.failing_index = static_cast<int>(i);
            v.ok = false;
            return v;
        }
    }
    v.ok = true;
    return v;
}

SequenceVerdict is_regular_sequence(const RingSpec& ring, const ElementSequence& seq)
{
    validate_sequence(ring, seq);
    SequenceVerdict v{SequenceKind::Regular};
    for (std::size_t i = 1; i <= seq.length(); ++i) {
        IdealHandle prev = ring.lift(seq.prefix_ideal(ring.ambient(), i - 1));
        const Polynomial& x = seq.elements[i - 1];
        bool ok = false;
        if (!x.is_zero()) {
            IdealHandle quot = colon(prev, IdealHandle(ring.ambient(), {x}));
            ok = ideal_equal(quot, prev);
        }
        v.diagnostics.push_back({static_cast<int>(i), ok ? "nonzerodivisor" : "zerodivisor"});
        if (!ok) {
            v.failing_index = static_cast<int>(i);
            v.ok = false;
            return v;
        }
    }
    v.ok = true;
    return v;
}

SequenceVerdict is_parameter_part(const RingSpec& ring, const ElementSequence& seq)
{
    validate_sequence(ring, seq);
    if (static_cast<int>(seq.length()) > ring.dim())
        throw std::invalid_argument("sequence longer than dim R");
    SequenceVerdict v{SequenceKind::ParameterPart};
    int d = ring.dim();
    for (std::size_t i = 1; i <= seq.length(); ++i) {
        IdealHandle Ji = ring.lift(seq.prefix_ideal(ring.ambient(), i));
        int dim_i = krull_dimension(Ji);
        bool ok = dim_i == d - static_cast<int>(i);
        v.diagnostics.push_back({static_cast<int>(i), "dim drops to " + std::to_string(dim_i)});
        if (!ok) {
            v.failing_index = static_cast<int>(i);
            v.ok = false;
            return v;
        }
    }
    v.ok = true;
    return v;
}

namespace {

// all monomials of exact degree d in n variables
void exact_degree_monomials(std::size_t n, std::uint64_t d, Monomial& cur, std::size_t pos,
                            std::vector<Monomial>& out)
{
    if (pos + 1 == n) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (std::uint64_t k = 0; k <= d; ++k) {
        cur.e[pos] = k;
        exact_degree_monomials(n, d - k, cur, pos + 1, out);
    }
    cur.e[pos] = 0;
}

Polynomial random_form(const RingSpec& ring, int degree, std::mt19937_64& rng)
{
    std::vector<Monomial> monos;
    Monomial cur(ring.ambient()->nvars());
    exact_degree_monomials(ring.ambient()->nvars(), static_cast<std::uint64_t>(degree), cur, 0, monos);
    Polynomial::TermMap tm;
    for (const auto& m : monos) {
        std::uint64_t c = rng() % ring.field().p();
        if (c) tm.emplace(m, c);
    }
    return Polynomial(ring.ambient(), std::move(tm));
}

}  // namespace

ElementSequence sample_filter_regular(const RingSpec& ring, int t, int max_degree, std::uint64_t seed,
                                      int max_retries)
{
    if (t < 1) throw std::invalid_argument("need t >= 1");
    if (t > ring.dim()) throw std::invalid_argument("t exceeds dim R");
    if (max_degree < 1) throw std::invalid_argument("need max_degree >= 1");
    if (!ring.homogeneous())
        throw std::invalid_argument("sampling requires a homogeneous quotient ideal");

    std::mt19937_64 rng(seed);
    IdealHandle m = ring.maximal_ideal();
    ElementSequence seq;
    for (int k = 0; k < t; ++k) {
        IdealHandle prev = ring.lift(seq.prefix_ideal(ring.ambient(), seq.length()));
        bool found = false;
        for (int degree = 1; degree <= max_degree && !found; ++degree) {
            for (int attempt = 0; attempt < max_retries && !found; ++attempt) {
                Polynomial candidate = random_form(ring, degree, rng);
                if (candidate.is_zero()) continue;
                if (filter_regular_step(ring, prev, m, candidate)) {
                    seq.elements.push_back(std::move(candidate));
                    found = true;
                }
            }
        }
        if (!found)
            throw SamplerExhausted("no filter regular element found at position " + std::to_string(k + 1) +
                                   " within the retry budget");
    }
    return seq;
}

}  // namespace ftex
