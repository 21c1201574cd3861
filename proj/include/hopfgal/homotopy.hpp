#pragma once

// Homotopy-equivalence certificates. A witness for A ~ A' over C consists of an
// admissible etale step i: C -> Cbar, a bundle B over Cbar[t], and
// isomorphisms iso0: i_*A -> [0]_*B and iso1: i_*A' -> [1]_*B.

#include <string_view>
#include <vector>

#include "hopfgal/bundles.hpp"
#include "hopfgal/galois.hpp"

namespace hopfgal {

// Identity or a tower of root adjunctions r^n = u (u a unit, n invertible in k).
class EtaleStep {
public:
    struct Adjunction {
        int n;
        BaseElement u;  // in the ring reached before this adjunction
    };

    static EtaleStep identity(const BaseRing& c);
    // Throws NonUnit, CharDivides.
    EtaleStep then_adjoin(const BaseElement& u, int n, std::string_view stem = "s") const;
    // Steps compose: `second` must start where this one ends.
    EtaleStep then(const EtaleStep& second) const;

    const BaseRing& source() const noexcept { return source_; }
    const BaseRing& target() const noexcept { return target_; }
    const BaseMorphism& map() const noexcept { return map_; }
    const std::vector<Adjunction>& adjunctions() const noexcept { return adj_; }
    BaseElement root(std::size_t i) const { return target_.gen(source_.num_generators() + i); }

    std::string describe() const;

private:
    EtaleStep(BaseRing source, BaseRing target, std::vector<Adjunction> adj);

    BaseRing source_, target_;
    BaseMorphism map_;
    std::vector<Adjunction> adj_;
};

struct HomotopyWitness {
    EtaleStep step;
    ComoduleAlgebra bundle;  // over step.target()[t]
    Matrix iso0, iso1;
};

// Re-derives i_*A, i_*A', [0]_*B and [1]_*B and certifies B and both isos.
// Throws BaseMismatch if the bases do not line up.
Report verify_witness(const HomotopyWitness& w, const ComoduleAlgebra& a, const ComoduleAlgebra& a2);

// Witness for A' ~ A from one for A ~ A': B pushed along t |-> 1 - t, isos swapped.
HomotopyWitness reverse(const HomotopyWitness& w);

struct ChainLink {
    HomotopyWitness witness;
    bool reversed = false;  // witness proves bundles[i+1] ~ bundles[i]
};

struct WitnessChain {
    std::vector<ComoduleAlgebra> bundles;
    std::vector<ChainLink> links;  // links[i] joins bundles[i] and bundles[i+1]
};

Report verify_chain(const WitnessChain& chain);

// (alpha, beta, gamma / C) ~ (1, 0, 0 / C): adjoin s = sqrt(alpha), reduce to
// (1, beta, gamma/s), and deform with (1, t beta, t gamma / s over Cbar[t]).
// Throws CharTwo, NonUnitAlpha.
WitnessChain cleft_trivialization_witness(const AbgParams& p);

struct GradingWitness {
    HomotopyWitness witness;       // proves projected ~ A
    ComoduleAlgebra projected;     // iota_* pi_* A
    BaseMorphism phi;              // g |-> t^deg(g) g
};
// Throws NotGraded if a LAURENT or ROOT generator has nonzero degree or a
// degree is negative.
GradingWitness grading_witness(const Grading& grading, const ComoduleAlgebra& a);

// [0] o phi = i' o f and [1] o phi = i' o g, checked generator by generator.
Report verify_morphism_homotopy(const BaseMorphism& f, const BaseMorphism& g, const EtaleStep& i2, const BaseMorphism& phi);
// B = phi_*A proves f_*A ~ g_*A. Throws BadMorphism if (f, g, phi) is not a homotopy.
HomotopyWitness morphism_homotopy_witness(const BaseMorphism& f, const BaseMorphism& g, const EtaleStep& i2,
                                          const BaseMorphism& phi, const ComoduleAlgebra& a);

// From a witness for A ~ A' over C and f: C -> C', a witness for f_*A ~ f_*A'.
HomotopyWitness transport(const HomotopyWitness& w, const BaseMorphism& f);

// A commutative bundle whose inclusion C -> A is the etale step `step`, with
// `identification[j]` the element of step.target() corresponding to a_j.
// Proves A ~ C (x) H. Throws NotCommutative, NotEtaleInclusion.
HomotopyWitness etale_trivialization_witness(const ComoduleAlgebra& a, const EtaleStep& step,
                                             const std::vector<BaseElement>& identification);

// Kummer bundle data packaged for the witness above: step adjoins w^N = z.
HomotopyWitness kummer_trivialization_witness(const KummerBundle& k);

}  // namespace hopfgal
