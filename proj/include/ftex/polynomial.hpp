#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ftex/field.hpp"
#include "ftex/monomial.hpp"
#include "ftex/order.hpp"

namespace ftex {

// Ambient polynomial ring S = F_p[variables].
struct Ring {
    FieldSpec field;
    std::vector<std::string> variables;

    Ring(FieldSpec f, std::vector<std::string> vars) : field(f), variables(std::move(vars)) {}

    std::size_t nvars() const { return variables.size(); }
    int var_index(const std::string& name) const;  // -1 if unknown

    bool same_as(const Ring& o) const { return field == o.field && variables == o.variables; }
};

using RingPtr = std::shared_ptr<const Ring>;

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Multivariate polynomial over F_p in canonical sparse form: a map from
// monomials to nonzero residues. Storage order is an arbitrary fixed key
// order; monomial orders are applied at iteration time by the callers.
class Polynomial {
public:
    using TermMap = std::map<Monomial, std::uint64_t>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, TermMap terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t i, std::uint64_t exp = 1);
    static Polynomial term(RingPtr ring, Monomial m, std::uint64_t c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;
    bool has_constant_term() const;

    // c*m coefficient access; 0 if absent
    std::uint64_t coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, std::uint64_t c);  // c reduced mod p; erases on 0

    std::pair<Monomial, std::uint64_t> leading_term(const MonomialOrder& order) const;  // requires nonzero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;

    Polynomial scaled(std::uint64_t c) const;
    Polynomial times_term(const Monomial& m, std::uint64_t c) const;
    Polynomial monic(const MonomialOrder& order) const;  // requires nonzero

    // f(x_1^q, ..., x_n^q), which equals f^q over F_p when q = p^e.
    Polynomial frobenius_substitute(std::uint64_t q) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    void check_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

Cmp monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// q must be a power of p (q = 1 allowed).
bool is_power_of(std::uint64_t q, std::uint64_t p);

}  // namespace ftex
