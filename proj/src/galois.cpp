#include "hopfgal/galois.hpp"

namespace hopfgal {

Matrix canonical_matrix(const ComoduleAlgebra& a) {
    const std::size_t n = a.rank(), d = a.hopf_dim();
    Matrix m(a.base(), n * d, n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const RVec& rho = a.coaction(j);
        for (std::size_t p = 0; p < n * d; ++p) {
            if (rho[p].is_zero()) continue;
            const std::size_t l = p / d, k = p % d;
            for (std::size_t i = 0; i < n; ++i) {
                const RVec& prod = a.product(i, l);
                for (std::size_t r = 0; r < n; ++r)
                    if (!prod[r].is_zero()) m(r * d + k, i * n + j) += prod[r] * rho[p];
            }
        }
    }
    return m;
}

GaloisVerdict is_galois(const ComoduleAlgebra& a) {
    GaloisVerdict v;
    if (a.rank() != a.hopf_dim()) {
        v.kind = GaloisVerdict::Kind::RankMismatch;
        v.reason = "rank " + std::to_string(a.rank()) + " differs from dim H = " + std::to_string(a.hopf_dim()) +
                   "; no bijection between free modules of different rank";
        return v;
    }
    const BaseElement det = determinant(canonical_matrix(a));
    v.det = det;
    if (is_unit(det)) {
        v.kind = GaloisVerdict::Kind::Galois;
        v.reason = "determinant is a unit";
    } else {
        v.kind = GaloisVerdict::Kind::NotBijective;
        v.reason = "determinant " + det.to_string() + " is not a unit of " + a.base().describe();
    }
    return v;
}

Report verify_bundle(const ComoduleAlgebra& a) {
    Report r = verify_comodule_algebra(a);
    const GaloisVerdict g = is_galois(a);
    r.add("galois", g.galois(), g.det ? "det = " + g.det->to_string() + (g.galois() ? "" : "; " + g.reason) : g.reason);
    r.add("free of finite rank", true, "basis of size " + std::to_string(a.rank()));
    return r;
}

}  // namespace hopfgal
