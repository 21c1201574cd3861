#pragma once

// H-comodule algebras that are free of finite rank over a commutative base C,
// with C-bilinear multiplication (so C is central by construction).

#include <string>
#include <vector>

#include "hopfgal/hopf.hpp"
#include "hopfgal/linalg.hpp"
#include "hopfgal/morphism.hpp"
#include "hopfgal/report.hpp"

namespace hopfgal {

using RVec = std::vector<BaseElement>;

struct ComodEntry {
    std::size_t i = 0, j = 0, k = 0;
    BaseElement c;
};

//   mult:     a_i a_j    contains c a_k
//   coaction: rho(a_i)   contains c a_j (x) h_k
struct ComoduleStructure {
    HopfPtr hopf;
    BaseRing base;
    std::vector<std::string> labels;
    std::vector<ComodEntry> mult;
    RVec unit;
    std::vector<ComodEntry> coaction;
};

class ComoduleAlgebra {
public:
    // Validates shapes and rings only; axioms are checked by
    // verify_comodule_algebra. Throws DimensionMismatch, RingMismatch.
    explicit ComoduleAlgebra(ComoduleStructure s);

    const HopfAlgebra& hopf() const noexcept { return *hopf_; }
    const HopfPtr& hopf_ptr() const noexcept { return hopf_; }
    const BaseRing& base() const noexcept { return base_; }
    std::size_t rank() const noexcept { return labels_.size(); }
    std::size_t hopf_dim() const noexcept { return hopf_->dim(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index(std::string_view label) const;  // throws UnresolvedReference

    // a_i a_j, dense over the basis of A.
    const RVec& product(std::size_t i, std::size_t j) const { return mult_[i * rank() + j]; }
    const RVec& unit() const noexcept { return unit_; }
    // rho(a_i), dense of length n*d indexed j*d + k.
    const RVec& coaction(std::size_t i) const { return coaction_[i]; }

    RVec zero() const { return RVec(rank(), base_.zero()); }
    RVec basis(std::size_t i) const;
    RVec multiply(const RVec& a, const RVec& b) const;
    RVec coact(const RVec& a) const;
    // Product in A (x) H; both factors of length n*d.
    RVec multiply_tensor(const RVec& u, const RVec& v) const;

    bool is_commutative() const;

    ComoduleStructure structure() const;
    bool operator==(const ComoduleAlgebra& o) const;
    bool operator!=(const ComoduleAlgebra& o) const { return !(*this == o); }

    std::string describe(const RVec& a) const;
    std::string describe_tensor(const RVec& u) const;

private:
    HopfPtr hopf_;
    BaseRing base_;
    std::vector<std::string> labels_;
    std::vector<RVec> mult_;
    RVec unit_;
    std::vector<RVec> coaction_;
};

// Associativity, unit, coaction coassociativity and counit, rho
// multiplicative, rho(1) = 1 (x) 1, coinvariance of C.1.
Report verify_comodule_algebra(const ComoduleAlgebra& a);

// C (x) H with coaction id (x) Delta.
ComoduleAlgebra trivial_bundle(const BaseRing& c, const HopfPtr& h);

// f_*A: all structure constants mapped through f. Throws RingMismatch.
ComoduleAlgebra push_forward(const BaseMorphism& f, const ComoduleAlgebra& a);

// Basis of {a : rho(a) = a (x) 1} when the base is the ground field.
// Throws BaseNotField otherwise.
std::vector<Vec> coinvariants_over_field(const ComoduleAlgebra& a);

// phi: A -> B given by columns phi(a_j) in B-coordinates. Checks invertibility
// (unit determinant), unit, multiplicativity and coaction intertwining.
// Throws RankMismatch, BaseMismatch.
Report check_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const Matrix& phi);

// Entrywise image of a matrix under a base morphism.
Matrix map_matrix(const BaseMorphism& f, const Matrix& m);

}  // namespace hopfgal
