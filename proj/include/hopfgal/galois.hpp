#pragma once

// The canonical map A (x)_C A -> A (x) H, a (x) b |-> (a (x) 1) rho(b), as a
// matrix over C, and the bundle verdict built on it.

#include <optional>
#include <string>

#include "hopfgal/comod.hpp"

namespace hopfgal {

// Rows (i, k) -> i*d + k for a_i (x) h_k; columns (i, j) -> i*n + j for a_i (x) a_j.
Matrix canonical_matrix(const ComoduleAlgebra& a);

struct GaloisVerdict {
    enum class Kind { Galois, RankMismatch, NotBijective };
    Kind kind = Kind::NotBijective;
    std::optional<BaseElement> det;
    std::string reason;

    bool galois() const noexcept { return kind == Kind::Galois; }
};

GaloisVerdict is_galois(const ComoduleAlgebra& a);

// Comodule algebra axioms, the Galois condition, and freeness (structural).
Report verify_bundle(const ComoduleAlgebra& a);

}  // namespace hopfgal
