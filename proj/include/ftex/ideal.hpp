#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ftex/groebner.hpp"

namespace ftex {

// Finitely generated ideal of the ambient ring S, with lazily cached
// reduced Groebner bases (one per order). Copies share state; all
// mutation is behind the cache mutex, so concurrent reads are safe.
class IdealHandle {
public:
    IdealHandle() = default;  // unset handle; assign before use
    IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

    static IdealHandle zero(RingPtr ring) { return IdealHandle(std::move(ring), {}); }
    static IdealHandle unit(RingPtr ring);

    const RingPtr& ring() const { return st_->ring; }
    const std::vector<Polynomial>& gens() const { return st_->gens; }

    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;

    bool is_zero_ideal() const { return groebner().is_zero(); }
    bool is_unit_ideal() const { return groebner().is_unit(); }

    bool contains(const Polynomial& f) const;
    bool contains_ideal(const IdealHandle& J) const;

    GroebnerLimits limits;

private:
    struct State {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mu;
        mutable std::map<std::string, GroebnerBasis> cache;
    };
    std::shared_ptr<State> st_;
};

bool ideal_equal(const IdealHandle& I, const IdealHandle& J,
                 const MonomialOrder& order = MonomialOrder::grevlex());

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);

enum class IdealOp { Sum, Product };
IdealHandle ideal_combine(const IdealHandle& I, const IdealHandle& J, IdealOp op);

// I ∩ J via the auxiliary-variable trick: eliminate t from t·I + (1-t)·J.
IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);

// (I : J), via per-generator intersection followed by exact division.
IdealHandle colon(const IdealHandle& I, const IdealHandle& J);

struct SaturationResult {
    IdealHandle ideal;
    int steps;  // number of colon iterations until stable
};

// (I : J^∞) by iterated colon; steps records the stabilization index.
SaturationResult saturate(const IdealHandle& I, const IdealHandle& J, int max_steps = 512);

// dim S/I from leading-term combinatorics; unit ideal gives -1.
int krull_dimension(const IdealHandle& I);

bool is_finite_colength(const IdealHandle& I);

// Monomials outside the leading-term ideal; requires finite colength.
std::vector<Monomial> standard_monomials(const IdealHandle& I);

// --- ring extension plumbing (elimination, Frobenius preimage) ---

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

// Move f between rings; index_map[i] is the target position of source
// variable i, or -1 (in which case f must not involve that variable).
Polynomial map_variables(const Polynomial& f, const RingPtr& target, const std::vector<int>& index_map);

// Model of the local ring R = (S/A) localized at the ideal of all variables.
class RingSpec {
public:
    RingSpec(RingPtr ring, std::vector<Polynomial> quotient_gens, std::string name = "");

    const RingPtr& ambient() const { return ring_; }
    const IdealHandle& quotient() const { return quotient_; }
    bool homogeneous() const { return homogeneous_; }
    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return ring_->field; }

    int dim() const { return dim_; }  // Krull dimension of R

    IdealHandle maximal_ideal() const;  // (x_1, ..., x_n)

    // Î + A: the preimage in S of the ideal I generates in R.
    IdealHandle lift(const IdealHandle& I) const { return ideal_sum(I, quotient_); }

private:
    RingPtr ring_;
    IdealHandle quotient_;
    bool homogeneous_;
    std::string name_;
    int dim_;
};

}  // namespace ftex
