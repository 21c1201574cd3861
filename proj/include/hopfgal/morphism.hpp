#pragma once

// k-algebra homomorphisms between base rings, given by generator images.

#include <string>
#include <vector>

#include "hopfgal/base_ring.hpp"

namespace hopfgal {

class BaseMorphism {
public:
    BaseMorphism() = default;
    // Throws BadMorphism if the images violate a ROOT relation or a LAURENT
    // image is not a unit; FieldMismatch if the ground fields differ.
    BaseMorphism(BaseRing source, BaseRing target, std::vector<BaseElement> images);

    static BaseMorphism identity(const BaseRing& ring);
    // source must be a prefix of target (generators map to themselves).
    static BaseMorphism inclusion(const BaseRing& source, const BaseRing& target);

    const BaseRing& source() const noexcept { return source_; }
    const BaseRing& target() const noexcept { return target_; }
    const std::vector<BaseElement>& images() const noexcept { return images_; }
    const BaseElement& image(std::size_t gen) const { return images_.at(gen); }

    BaseElement operator()(const BaseElement& a) const;

    bool is_identity() const;
    bool operator==(const BaseMorphism& o) const;
    bool operator!=(const BaseMorphism& o) const { return !(*this == o); }

    // "x -> t*x, z -> z"
    std::string describe() const;

private:
    BaseRing source_, target_;
    std::vector<BaseElement> images_;
    std::vector<BaseElement> inverse_images_;  // for LAURENT generators, else zero
};

// g after f.
BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f);

// C[t] with the evaluations at 0 and 1 and the inclusion C -> C[t].
struct TExtension {
    BaseRing ring;
    std::size_t t_index = 0;
    BaseMorphism at0, at1, inclusion;

    BaseElement t() const { return ring.gen(t_index); }
};
TExtension extend_with_t(const BaseRing& c, std::string_view stem = "t");

// f_t: C[t] -> C'[t] with f_t(t) = t.
BaseMorphism lift_to_t(const BaseMorphism& f, const TExtension& source, const TExtension& target);

// C -> C[r]/(r^n - u). Throws NonUnit, CharDivides.
struct RootAdjunction {
    BaseRing ring;
    BaseMorphism inclusion;
    BaseElement root;
};
RootAdjunction adjoin_root(const BaseRing& c, const BaseElement& u, int n, std::string_view stem = "T");

}  // namespace hopfgal
