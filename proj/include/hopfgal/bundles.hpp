#pragma once

// Concrete bundles: the (alpha, beta, gamma / C) family over Sweedler's H4 and
// the cyclic Kummer bundle k[z, z^-1] in k[z^{1/N}, z^{-1/N}].

#include <optional>

#include "hopfgal/cleft.hpp"

namespace hopfgal {

// Shared, cached H4 over k (so bundles built separately compare equal cheaply).
HopfPtr sweedler_h4_shared(const Field& k);

struct AbgParams {
    BaseElement alpha, beta, gamma;

    const BaseRing& base() const { return alpha.ring(); }
};

// Rewriting system x x -> alpha, y y -> beta, y x -> gamma - x y on words in
// x, y. Reduces a word to C-coordinates on the normal words 1, x, y, xy.
RVec abg_reduce_word(const AbgParams& p, std::string_view word);
// All critical pairs (xxx, yyy, yyx, yxx) resolve.
bool abg_locally_confluent(const AbgParams& p);

// Basis 1, x, y, xy; coaction x |-> x(x)X, y |-> 1(x)Y + y(x)X. Throws NonUnitAlpha.
ComoduleAlgebra abg_bundle(const AbgParams& p);

// gamma(1) = 1, gamma(X) = x, gamma(Y) = y, gamma(XY) = xy.
HModuleMap abg_cleaving_map(const ComoduleAlgebra& a);
CleavingMap abg_cleaving(const ComoduleAlgebra& a);

// Matrix of the algebra map x |-> img_x, y |-> img_y from one abg bundle to
// another (images in B-coordinates); xy |-> img_x img_y.
Matrix abg_generator_map(const ComoduleAlgebra& b, const RVec& img_x, const RVec& img_y);

// Exhaustive search over all generator images x |-> img_x, y |-> img_y (q^8
// candidates over F_q) for an isomorphism a -> b certified by check_iso.
// Throws BaseNotField, Unsupported (infinite field).
std::optional<Matrix> abg_search_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b);

struct CriterionResult {
    bool trivial = false;
    std::optional<Scalar> s, t;
};

// Over a field of characteristic != 2: (alpha, beta, gamma / k) is trivial iff
// alpha = s^2, beta = t^2, gamma = 2st. Roots are tried in square_roots order.
// Throws CharTwo, BaseNotField, NonUnitAlpha.
CriterionResult abg_triviality_criterion(const AbgParams& p);

// Candidate isomorphism (alpha, beta, gamma) -> (1, 0, 0): x |-> s x', y |-> y' + t x'.
Matrix abg_criterion_iso(const ComoduleAlgebra& trivial_target, const BaseElement& s, const BaseElement& t);

struct SqrtReduction {
    ComoduleAlgebra target;  // (1, beta, gamma/s)
    Matrix iso;              // x |-> s x', y |-> y'
};
// Throws BadRoot unless s^2 = alpha (s is then automatically a unit).
SqrtReduction sqrt_reduction(const AbgParams& p, const BaseElement& s);

struct KummerBundle {
    ComoduleAlgebra algebra;  // over k[z, z^-1], basis w^0..w^{N-1}, w^N = z
    BaseElement z;
    int n;
};
// H is the dual of the group algebra of C_N; rho(w^j) = sum_g q^{gj} w^j (x) p_g.
// Throws CharDivides, BadRootOfUnity.
KummerBundle kummer_bundle(int n, const Scalar& q);

}  // namespace hopfgal
