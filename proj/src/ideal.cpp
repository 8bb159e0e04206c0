#include "ftex/ideal.hpp"

#include <algorithm>
#include <bit>

namespace ftex {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : st_(std::make_shared<State>())
{
    st_->ring = std::move(ring);
    for (auto& g : gens) {
        if (!g.ring()->same_as(*st_->ring)) throw RingMismatch("ideal generator in wrong ring");
        if (!g.is_zero()) st_->gens.push_back(std::move(g));
    }
}

IdealHandle IdealHandle::unit(RingPtr ring)
{
    Polynomial one = Polynomial::constant(ring, 1);
    return IdealHandle(std::move(ring), {one});
}

const GroebnerBasis& IdealHandle::groebner(const MonomialOrder& order) const
{
    std::string key = order.signature();
    std::scoped_lock lock(st_->mu);
    auto it = st_->cache.find(key);
    if (it != st_->cache.end()) return it->second;
    GroebnerBasis gb = buchberger(st_->ring, st_->gens, order, limits);
    return st_->cache.emplace(std::move(key), std::move(gb)).first->second;
}

bool IdealHandle::contains(const Polynomial& f) const
{
    if (f.is_zero()) return true;
    return normal_form(f, groebner(), limits).is_zero();
}

bool IdealHandle::contains_ideal(const IdealHandle& J) const
{
    for (const auto& g : J.gens())
        if (!contains(g)) return false;
    return true;
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J, const MonomialOrder& order)
{
    if (!I.ring()->same_as(*J.ring())) throw RingMismatch("ideal_equal: ring mismatch");
    return I.groebner(order).gens == J.groebner(order).gens;
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J)
{
    if (!I.ring()->same_as(*J.ring())) throw RingMismatch("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J)
{
    if (!I.ring()->same_as(*J.ring())) throw RingMismatch("ideal_product: ring mismatch");
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f * g);
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_combine(const IdealHandle& I, const IdealHandle& J, IdealOp op)
{
    return op == IdealOp::Sum ? ideal_sum(I, J) : ideal_product(I, J);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra)
{
    std::vector<std::string> vars = ring->variables;
    for (const auto& v : extra) vars.push_back(v);
    return std::make_shared<Ring>(ring->field, std::move(vars));
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map)
{
    Polynomial::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        Monomial t(target->nvars());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (index_map[i] < 0) throw std::logic_error("map_variables: dropped variable has nonzero exponent");
            t.e[static_cast<std::size_t>(index_map[i])] = m.e[i];
        }
        out.emplace(std::move(t), c);
    }
    return Polynomial(target, std::move(out));
}

namespace {

std::string fresh_name(const Ring& ring, std::string base)
{
    while (ring.var_index(base) >= 0) base += "_";
    return base;
}

}  // namespace

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J)
{
    if (!I.ring()->same_as(*J.ring())) throw RingMismatch("intersect: ring mismatch");
    if (I.gens().empty() || J.gens().empty()) return IdealHandle::zero(I.ring());

    const RingPtr& R = I.ring();
    const std::size_t n = R->nvars();
    RingPtr E = extend_ring(R, {fresh_name(*R, "t@elim")});

    std::vector<int> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);

    Polynomial t = Polynomial::variable(E, n);
    Polynomial one_minus_t = Polynomial::constant(E, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(t * map_variables(f, E, up));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * map_variables(g, E, up));

    std::vector<bool> front(n + 1, false);
    front[n] = true;
    std::vector<Polynomial> elim = eliminate(E, gens, front, I.limits);

    std::vector<int> down(n + 1, -1);
    for (std::size_t i = 0; i < n; ++i) down[i] = static_cast<int>(i);
    std::vector<Polynomial> out;
    for (const auto& g : elim) out.push_back(map_variables(g, R, down));
    return IdealHandle(R, std::move(out));
}

IdealHandle colon(const IdealHandle& I, const IdealHandle& J)
{
    if (!I.ring()->same_as(*J.ring())) throw RingMismatch("colon: ring mismatch");
    std::vector<Polynomial> divs;
    for (const auto& g : J.gens())
        if (!g.is_zero()) divs.push_back(g);
    if (divs.empty()) throw std::invalid_argument("colon: J must be nonzero");

    bool first = true;
    IdealHandle acc = IdealHandle::unit(I.ring());
    for (const auto& g : divs) {
        IdealHandle cap = intersect(I, IdealHandle(I.ring(), {g}));
        std::vector<Polynomial> qs;
        for (const auto& h : cap.gens()) {
            std::vector<Polynomial> quot;
            Polynomial r = divide(h, {g}, MonomialOrder::grevlex(), &quot, I.limits);
            if (!r.is_zero()) throw std::logic_error("colon: exact division left a remainder");
            qs.push_back(quot[0]);
        }
        IdealHandle part(I.ring(), std::move(qs));
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

SaturationResult saturate(const IdealHandle& I, const IdealHandle& J, int max_steps)
{
    IdealHandle cur = I;
    for (int s = 0; s < max_steps; ++s) {
        IdealHandle next = colon(cur, J);
        if (ideal_equal(next, cur)) return {cur, s};
        cur = next;
    }
    throw LimitExceeded("saturation did not stabilize within the step cap");
}

int krull_dimension(const IdealHandle& I)
{
    const GroebnerBasis& gb = I.groebner();
    if (gb.is_unit()) return -1;
    const std::size_t n = I.ring()->nvars();
    if (n > 24) throw std::invalid_argument("krull_dimension: too many variables for subset search");

    std::vector<std::uint32_t> supports;
    for (const auto& lm : gb.leads) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.e[i]) s |= (1u << i);
        supports.push_back(s);
    }

    int best = 0;
    for (std::uint32_t U = 0; U < (1u << n); ++U) {
        int size = std::popcount(U);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t s : supports) {
            if ((s & ~U) == 0) {  // support contained in U
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

namespace {

// degree of the minimal pure power of variable i among the leads, or 0 if none
std::uint64_t pure_power_bound(const GroebnerBasis& gb, std::size_t i)
{
    std::uint64_t best = 0;
    for (const auto& lm : gb.leads) {
        bool pure = lm.e[i] > 0;
        for (std::size_t j = 0; j < lm.e.size() && pure; ++j)
            if (j != i && lm.e[j]) pure = false;
        if (pure && (best == 0 || lm.e[i] < best)) best = lm.e[i];
    }
    return best;
}

}  // namespace

bool is_finite_colength(const IdealHandle& I)
{
    const GroebnerBasis& gb = I.groebner();
    if (gb.is_unit()) return true;
    if (gb.is_zero()) return I.ring()->nvars() == 0;
    for (std::size_t i = 0; i < I.ring()->nvars(); ++i)
        if (pure_power_bound(gb, i) == 0) return false;
    return true;
}

std::vector<Monomial> standard_monomials(const IdealHandle& I)
{
    if (!is_finite_colength(I)) throw std::invalid_argument("standard_monomials: quotient is not finite dimensional");
    const GroebnerBasis& gb = I.groebner();
    const std::size_t n = I.ring()->nvars();
    if (gb.is_unit()) return {};

    std::vector<std::uint64_t> bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = pure_power_bound(gb, i);

    std::vector<Monomial> out;
    Monomial cur(n);
    // odometer over the box below the pure-power bounds
    while (true) {
        bool in_lt_ideal = false;
        for (const auto& lm : gb.leads) {
            if (divides(lm, cur)) {
                in_lt_ideal = true;
                break;
            }
        }
        if (!in_lt_ideal) out.push_back(cur);

        std::size_t i = 0;
        while (i < n) {
            if (++cur.e[i] < bound[i]) break;
            cur.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

RingSpec::RingSpec(RingPtr ring, std::vector<Polynomial> quotient_gens, std::string name)
    : ring_(ring), quotient_(ring, std::move(quotient_gens)), name_(std::move(name))
{
    if (quotient_.is_unit_ideal()) throw std::invalid_argument("quotient ideal is the unit ideal; R would be zero");
    homogeneous_ = true;
    bool in_m = true;
    for (const auto& g : quotient_.gens()) {
        homogeneous_ = homogeneous_ && g.is_homogeneous();
        in_m = in_m && !g.has_constant_term();
    }
    if (!in_m) throw std::invalid_argument("quotient generators must vanish at the origin (lie in m)");
    dim_ = krull_dimension(quotient_);
}

IdealHandle RingSpec::maximal_ideal() const
{
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) vars.push_back(Polynomial::variable(ring_, i));
    return IdealHandle(ring_, std::move(vars));
}

}  // namespace ftex
