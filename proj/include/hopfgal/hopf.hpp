#pragma once

// Finite-dimensional Hopf algebras over a field, stored as sparse structure
// constants on a fixed basis h_0..h_{d-1}.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfgal/linalg.hpp"
#include "hopfgal/report.hpp"
#include "hopfgal/scalar.hpp"

namespace hopfgal {

using Vec = std::vector<Scalar>;

struct TensorEntry {
    std::size_t i = 0, j = 0, k = 0;
    Scalar c;
};

// Raw structure data, as read from a document or produced by a constructor.
//   mult:   h_i h_j   contains c h_k
//   comult: Delta(h_i) contains c h_j (x) h_k
//   antipode: column j holds the coordinates of S(h_j); solved for when absent
struct HopfStructure {
    Field field;
    std::vector<std::string> labels;
    std::vector<TensorEntry> mult;
    Vec unit;
    std::vector<TensorEntry> comult;
    Vec counit;
    std::optional<ScalarMatrix> antipode;
};

class HopfAlgebra {
public:
    struct Coterm {
        std::size_t left, right;
        Scalar c;
    };

    // Throws DimensionMismatch on malformed data and NoAntipode when the
    // antipode is absent and cannot be solved for.
    explicit HopfAlgebra(HopfStructure s);

    const Field& field() const noexcept { return k_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index(std::string_view label) const;  // throws UnresolvedReference

    // h_i h_j as sparse (k, c) pairs.
    const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const {
        return mult_[i * dim() + j];
    }
    const Vec& unit() const noexcept { return unit_; }
    const std::vector<Coterm>& coproduct(std::size_t i) const { return comult_[i]; }
    const Scalar& counit(std::size_t i) const { return counit_[i]; }
    const ScalarMatrix& antipode() const noexcept { return antipode_; }

    Vec basis(std::size_t i) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    // Delta(a) as a dense d*d vector indexed j*d + k.
    Vec comultiply(const Vec& a) const;
    Scalar counit(const Vec& a) const;
    Vec antipode(const Vec& a) const;

    HopfStructure structure() const;

    bool operator==(const HopfAlgebra& o) const;
    bool operator!=(const HopfAlgebra& o) const { return !(*this == o); }

    std::string describe(const Vec& a) const;

private:
    friend ScalarMatrix solve_antipode(const HopfStructure& bialgebra);
    struct NoAntipodeTag {};
    HopfAlgebra(HopfStructure s, NoAntipodeTag);
    void load(HopfStructure& s);

    Field k_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> mult_;
    Vec unit_;
    std::vector<std::vector<Coterm>> comult_;
    Vec counit_;
    ScalarMatrix antipode_{Field(), 0, 0};
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Axiom report: associativity, unit, coassociativity, counit, bialgebra,
// antipode (left and right), antipode bijective.
Report verify_hopf(const HopfAlgebra& h);

// Solves sum S(h_(1)) h_(2) = eps(h) 1 = sum h_(1) S(h_(2)) for S. Throws
// NoAntipode if the system has no solution or more than one.
ScalarMatrix solve_antipode(const HopfStructure& bialgebra);

// Taft algebra: X^N = 1, Y^N = 0, YX = qXY, Delta(X) = X(x)X,
// Delta(Y) = 1(x)Y + Y(x)X. Basis X^i Y^j at index i + N*j.
// Throws BadRootOfUnity unless q has order exactly N, CharDivides if N = 0 in k.
HopfAlgebra taft(int n, const Scalar& q);
HopfAlgebra sweedler_h4(const Field& k);  // taft(2, -1)
HopfAlgebra group_algebra_cyclic(const Field& k, int n);
HopfAlgebra dual_hopf(const HopfAlgebra& h);

inline HopfPtr share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

}  // namespace hopfgal
