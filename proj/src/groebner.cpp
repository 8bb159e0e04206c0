#include "ftex/groebner.hpp"

#include <algorithm>
#include <map>

namespace ftex {

namespace {

struct OrdGreater {
    const MonomialOrder* o;
    bool operator()(const Monomial& a, const Monomial& b) const { return o->greater(a, b); }
};

// working representation sorted leading-term-first
using WorkPoly = std::map<Monomial, std::uint64_t, OrdGreater>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& order)
{
    WorkPoly w(OrdGreater{&order});
    for (const auto& [m, c] : f.terms()) w.emplace(m, c);
    return w;
}

void work_sub_multiple(WorkPoly& w, const Polynomial& g, const Monomial& u, std::uint64_t c,
                       const FieldSpec& F)
{
    // w -= c * u * g
    for (const auto& [m, cc] : g.terms()) {
        Monomial key = mul(m, u);
        std::uint64_t sub = F.mul(cc, c);
        auto it = w.find(key);
        if (it == w.end()) {
            if (sub) w.emplace(std::move(key), F.neg(sub));
        } else {
            it->second = F.sub(it->second, sub);
            if (it->second == 0) w.erase(it);
        }
    }
}

struct CritPair {
    std::size_t i, j;
    Monomial lcm_;
    std::uint64_t deg;
};

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& lf, const Monomial& lg,
                 const MonomialOrder& order)
{
    const FieldSpec& F = f.ring()->field;
    Monomial l = lcm(lf, lg);
    std::uint64_t cf = f.terms().at(lf);
    std::uint64_t cg = g.terms().at(lg);
    Polynomial a = f.times_term(quotient(l, lf), F.inv(cf));
    Polynomial b = g.times_term(quotient(l, lg), F.inv(cg));
    (void)order;
    return a - b;
}

// Gebauer-Moller style pair update.
void update_pairs(std::vector<CritPair>& pairs, const std::vector<Monomial>& leads, std::size_t k)
{
    const Monomial& t = leads[k];

    // prune old pairs made redundant by the new leading term
    std::erase_if(pairs, [&](const CritPair& p) {
        if (!divides(t, p.lcm_)) return false;
        Monomial lik = lcm(leads[p.i], t);
        Monomial ljk = lcm(leads[p.j], t);
        return lik != p.lcm_ && ljk != p.lcm_;
    });

    struct Cand {
        std::size_t i;
        Monomial l;
        bool cop;
    };
    std::vector<Cand> cands;
    cands.reserve(k);
    for (std::size_t i = 0; i < k; ++i) cands.push_back({i, lcm(leads[i], t), coprime(leads[i], t)});

    // drop candidates whose lcm is a proper multiple of another candidate's lcm
    std::vector<bool> keep(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a]) continue;
        for (std::size_t b = 0; b < cands.size(); ++b) {
            if (a == b || !keep[a]) continue;
            if (cands[b].l != cands[a].l && divides(cands[b].l, cands[a].l)) keep[a] = false;
        }
    }
    // equal-lcm classes: if any member is coprime the class dies, else keep one
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!keep[a]) continue;
        bool class_coprime = cands[a].cop;
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
            if (keep[b] && cands[b].l == cands[a].l) {
                class_coprime = class_coprime || cands[b].cop;
                keep[b] = false;
            }
        }
        if (class_coprime) keep[a] = false;
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (keep[a]) pairs.push_back({cands[a].i, k, cands[a].l, cands[a].l.degree()});
    }
}

}  // namespace

Polynomial divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order,
                  std::vector<Polynomial>* quotients, const GroebnerLimits& limits)
{
    const FieldSpec& F = f.ring()->field;
    std::vector<Monomial> dl;
    std::vector<std::uint64_t> dinv;
    dl.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor polynomial");
        auto [m, c] = g.leading_term(order);
        dl.push_back(m);
        dinv.push_back(F.inv(c));
    }
    if (quotients) quotients->assign(divisors.size(), Polynomial::zero(f.ring()));

    WorkPoly w = to_work(f, order);
    Polynomial::TermMap rem;
    std::size_t steps = 0;
    while (!w.empty()) {
        auto lead = w.begin();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(dl[i], lead->first)) continue;
            Monomial u = quotient(lead->first, dl[i]);
            std::uint64_t c = F.mul(lead->second, dinv[i]);
            if (quotients) (*quotients)[i] = (*quotients)[i] + Polynomial::term(f.ring(), u, c);
            work_sub_multiple(w, divisors[i], u, c, F);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.emplace(lead->first, lead->second);
            w.erase(lead);
        }
        if (++steps > limits.max_reduction_steps)
            throw LimitExceeded("division exceeded max reduction steps");
    }
    return Polynomial(f.ring(), std::move(rem));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const GroebnerLimits& limits)
{
    if (!f.ring()->same_as(*gb.ring)) throw RingMismatch("normal_form: ring mismatch");
    if (gb.gens.empty()) return f;
    return divide(f, gb.gens, gb.order, nullptr, limits);
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& input, const MonomialOrder& order,
                         const GroebnerLimits& limits)
{
    const FieldSpec& F = ring->field;
    (void)F;
    std::vector<Polynomial> G;
    std::vector<Monomial> leads;
    std::vector<CritPair> pairs;

    auto add = [&](Polynomial h) {
        h = h.monic(order);
        leads.push_back(h.leading_term(order).first);
        G.push_back(std::move(h));
        update_pairs(pairs, leads, G.size() - 1);
        if (G.size() > limits.max_basis) throw LimitExceeded("basis exceeded max size");
    };

    for (const auto& g : input) {
        if (!g.ring()->same_as(*ring)) throw RingMismatch("buchberger: ring mismatch");
        if (!g.is_zero()) add(g);
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first, ties by the order
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->deg < best->deg || (it->deg == best->deg && order.less(it->lcm_, best->lcm_)))
                best = it;
        }
        CritPair p = *best;
        pairs.erase(best);

        Polynomial s = spoly(G[p.i], G[p.j], leads[p.i], leads[p.j], order);
        if (s.is_zero()) continue;
        Polynomial h = divide(s, G, order, nullptr, limits);
        if (!h.is_zero()) add(std::move(h));
    }

    // minimize: drop generators whose lead is divisible by another kept lead
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (divides(leads[j], leads[i]) && (leads[j] != leads[i] || j < i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> M;
    std::vector<Monomial> ML;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (keep[i]) {
            M.push_back(G[i]);
            ML.push_back(leads[i]);
        }
    }

    // tail-reduce each generator against the others
    std::vector<Polynomial> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        Polynomial r = others.empty() ? M[i] : divide(M[i], others, order, nullptr, limits);
        R.push_back(r.monic(order));
    }

    std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });

    GroebnerBasis gb{std::move(ring), order, std::move(R), {}};
    gb.leads.reserve(gb.gens.size());
    for (const auto& g : gb.gens) gb.leads.push_back(g.leading_term(order).first);
    return gb;
}

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const GroebnerLimits& limits)
{
    if (f.is_zero()) return true;
    auto gb = buchberger(f.ring(), gens, MonomialOrder::grevlex(), limits);
    return normal_form(f, gb, limits).is_zero();
}

std::vector<Polynomial> eliminate(RingPtr ring, const std::vector<Polynomial>& gens,
                                  const std::vector<bool>& front_mask, const GroebnerLimits& limits)
{
    bool any = false;
    for (bool b : front_mask) any = any || b;
    MonomialOrder order = any ? MonomialOrder::block(front_mask) : MonomialOrder::grevlex();
    GroebnerBasis gb = buchberger(ring, gens, order, limits);
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens) {
        bool pure_back = true;
        for (const auto& [m, c] : g.terms()) {
            for (std::size_t i = 0; i < front_mask.size() && pure_back; ++i)
                if (front_mask[i] && m.e[i]) pure_back = false;
            if (!pure_back) break;
        }
        if (pure_back) out.push_back(g);
    }
    return out;
}

bool ideal_equal(RingPtr ring, const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                 const MonomialOrder& order, const GroebnerLimits& limits)
{
    GroebnerBasis a = buchberger(ring, I, order, limits);
    GroebnerBasis b = buchberger(std::move(ring), J, order, limits);
    return a.gens == b.gens;
}

}  // namespace ftex
