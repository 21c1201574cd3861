#include "hopfgal/morphism.hpp"

namespace hopfgal {

BaseMorphism::BaseMorphism(BaseRing source, BaseRing target, std::vector<BaseElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (source_.field() != target_.field())
        throw Error(ErrorKind::FieldMismatch, "morphism between rings over " + source_.field().name() + " and " +
                                                  target_.field().name());
    if (images_.size() != source_.num_generators())
        throw Error(ErrorKind::DimensionMismatch, "morphism needs one image per generator of " + source_.describe());
    for (const BaseElement& e : images_)
        if (e.ring() != target_) throw Error(ErrorKind::RingMismatch, "image " + e.to_string() + " outside " + target_.describe());
    inverse_images_.assign(images_.size(), target_.zero());
    // Relations only involve earlier generators, so checking in order is enough.
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Generator& g = source_.generator(i);
        if (g.kind == GeneratorKind::Laurent) {
            auto inv = try_inverse(images_[i]);
            if (!inv)
                throw Error(ErrorKind::BadMorphism, "image of the invertible generator " + g.name + " is not a unit");
            inverse_images_[i] = std::move(*inv);
        } else if (g.kind == GeneratorKind::Root) {
            const BaseElement u = (*this)(BaseElement::from_terms(source_, g.relation));
            if (images_[i].pow(g.order) != u)
                throw Error(ErrorKind::BadMorphism, "image of " + g.name + " violates " + g.name + "^" +
                                                        std::to_string(g.order) + " = " + u.to_string());
        }
    }
}

BaseMorphism BaseMorphism::identity(const BaseRing& ring) { return inclusion(ring, ring); }

BaseMorphism BaseMorphism::inclusion(const BaseRing& source, const BaseRing& target) {
    if (target.prefix(source.num_generators()) != source)
        throw Error(ErrorKind::RingMismatch, source.describe() + " is not a subring tower of " + target.describe());
    std::vector<BaseElement> images;
    for (std::size_t i = 0; i < source.num_generators(); ++i) images.push_back(target.gen(i));
    return BaseMorphism(source, target, std::move(images));
}

BaseElement BaseMorphism::operator()(const BaseElement& a) const {
    if (a.ring() != source_)
        throw Error(ErrorKind::RingMismatch, "cannot apply a morphism from " + source_.describe() + " to an element of " +
                                                 a.ring().describe());
    BaseElement out = target_.zero();
    for (const Term& t : a.terms()) {
        BaseElement piece = target_.constant(t.coef);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            const int e = t.mono[i];
            if (e > 0) piece *= images_[i].pow(e);
            else if (e < 0) piece *= inverse_images_[i].pow(-e);
        }
        out += piece;
    }
    return out;
}

bool BaseMorphism::is_identity() const {
    if (source_ != target_) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != target_.gen(i)) return false;
    return true;
}

bool BaseMorphism::operator==(const BaseMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
}

std::string BaseMorphism::describe() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ", ";
        out += source_.generator(i).name + " -> " + images_[i].to_string();
    }
    return out.empty() ? "(identity on " + source_.field().name() + ")" : out;
}

BaseMorphism compose(const BaseMorphism& g, const BaseMorphism& f) {
    if (f.target() != g.source())
        throw Error(ErrorKind::RingMismatch, "cannot compose: " + f.target().describe() + " vs " + g.source().describe());
    std::vector<BaseElement> images;
    for (const BaseElement& e : f.images()) images.push_back(g(e));
    return BaseMorphism(f.source(), g.target(), std::move(images));
}

TExtension extend_with_t(const BaseRing& c, std::string_view stem) {
    TExtension ext;
    ext.ring = c.with_free(c.fresh_name(stem));
    ext.t_index = c.num_generators();
    ext.inclusion = BaseMorphism::inclusion(c, ext.ring);
    std::vector<BaseElement> zero_images, one_images;
    for (std::size_t i = 0; i < c.num_generators(); ++i) {
        zero_images.push_back(c.gen(i));
        one_images.push_back(c.gen(i));
    }
    zero_images.push_back(c.zero());
    one_images.push_back(c.one());
    ext.at0 = BaseMorphism(ext.ring, c, std::move(zero_images));
    ext.at1 = BaseMorphism(ext.ring, c, std::move(one_images));
    return ext;
}

BaseMorphism lift_to_t(const BaseMorphism& f, const TExtension& source, const TExtension& target) {
    if (source.inclusion.source() != f.source() || target.inclusion.source() != f.target())
        throw Error(ErrorKind::RingMismatch, "t-extensions do not match the morphism");
    std::vector<BaseElement> images;
    for (const BaseElement& e : f.images()) images.push_back(target.inclusion(e));
    images.push_back(target.t());
    return BaseMorphism(source.ring, target.ring, std::move(images));
}

RootAdjunction adjoin_root(const BaseRing& c, const BaseElement& u, int n, std::string_view stem) {
    RootAdjunction out;
    out.ring = c.with_root(c.fresh_name(stem), n, u);
    out.inclusion = BaseMorphism::inclusion(c, out.ring);
    out.root = out.ring.gen(c.num_generators());
    return out;
}

}  // namespace hopfgal
