#pragma once

// Convolution in Hom_k(H, A), cleaving maps, the cocycle of a cleft bundle,
// and twisted / crossed products on C (x) H.

#include <functional>
#include <optional>
#include <vector>

#include "hopfgal/comod.hpp"

namespace hopfgal {

// A k-linear map H -> A; values[i] holds the A-coordinates of f(h_i).
struct HModuleMap {
    std::vector<RVec> values;

    bool operator==(const HModuleMap& o) const { return values == o.values; }
};

// h |-> eps(h) 1_A
HModuleMap convolution_unit(const ComoduleAlgebra& a);
HModuleMap convolve(const ComoduleAlgebra& a, const HModuleMap& f, const HModuleMap& g);
// Solves f * g = unit as a linear system over C; throws NotInvertible if the
// operator determinant is not a unit or the inverse is one-sided.
HModuleMap convolution_invert(const ComoduleAlgebra& a, const HModuleMap& f);

struct CleavingMap {
    HModuleMap gamma;
    HModuleMap inverse;
};

// Throws NotComoduleMap (naming the failing basis element) or NotInvertible.
CleavingMap check_cleaving(const ComoduleAlgebra& a, const HModuleMap& gamma);

// Coordinates c with v = c.1_A, if v lies in C.1_A.
std::optional<BaseElement> as_base_element(const ComoduleAlgebra& a, const RVec& v);

struct Cocycle {
    HopfPtr hopf;
    BaseRing base;
    Matrix sigma;  // sigma(h_i, h_j) at (i, j)
    // h_i . c for c in {1, generators of C}; all equal eps(h_i) c for bundles.
    std::vector<std::vector<BaseElement>> quasi_action;
};

// sigma(g, h) = sum gamma(g1) gamma(h1) gamma'(g2 h2) and the quasi-action
// h . c = sum gamma(h1) c gamma'(h2). Throws NonCentralDatum if a value leaves
// C.1_A or the quasi-action is not eps(h) c.
Cocycle extract_cocycle(const ComoduleAlgebra& a, const CleavingMap& cm);

// C (x) H with (c (x) g)(d (x) h) = sum cd sigma(g1, h1) (x) g2 h2 and coaction
// id (x) Delta. Throws BadNormalization, NotAssociative.
ComoduleAlgebra twisted_product(const BaseRing& c, const HopfPtr& h, const Matrix& sigma);

// Crossed product with a (possibly nontrivial) quasi-action. The product is
// only left C-linear, so it is kept apart from ComoduleAlgebra.
class CrossedProduct {
public:
    // action(i, c) = h_i . c, k-linear in c.
    using Action = std::function<BaseElement(std::size_t, const BaseElement&)>;

    CrossedProduct(BaseRing c, HopfPtr h, Action action, Matrix sigma);

    const BaseRing& base() const noexcept { return base_; }
    const HopfAlgebra& hopf() const noexcept { return *hopf_; }

    // Elements are sums of c_i (x) h_i, stored as the C-coefficients c_i.
    RVec multiply(const RVec& x, const RVec& y) const;
    RVec one() const;

    // Associativity and unit on all triples c_i (x) h_i with c_i drawn from
    // `coefficients`. Throws NotAssociative, BadNormalization.
    void verify(const std::vector<BaseElement>& coefficients) const;

private:
    RVec mul_basis(const BaseElement& c, std::size_t g, const BaseElement& d, std::size_t h) const;

    BaseRing base_;
    HopfPtr hopf_;
    Action action_;
    Matrix sigma_;
};

}  // namespace hopfgal
