#include "hopfgal/homotopy.hpp"

namespace hopfgal {

// ---------------------------------------------------------------- EtaleStep

EtaleStep::EtaleStep(BaseRing source, BaseRing target, std::vector<Adjunction> adj)
    : source_(std::move(source)), target_(std::move(target)), adj_(std::move(adj)) {
    map_ = BaseMorphism::inclusion(source_, target_);
}

EtaleStep EtaleStep::identity(const BaseRing& c) { return EtaleStep(c, c, {}); }

EtaleStep EtaleStep::then_adjoin(const BaseElement& u, int n, std::string_view stem) const {
    if (u.ring() != target_) throw Error(ErrorKind::RingMismatch, "root datum outside " + target_.describe());
    const RootAdjunction r = adjoin_root(target_, u, n, stem);
    std::vector<Adjunction> adj = adj_;
    adj.push_back(Adjunction{n, u});
    return EtaleStep(source_, r.ring, std::move(adj));
}

EtaleStep EtaleStep::then(const EtaleStep& second) const {
    if (second.source_ != target_) throw Error(ErrorKind::RingMismatch, "etale steps do not compose");
    std::vector<Adjunction> adj = adj_;
    adj.insert(adj.end(), second.adj_.begin(), second.adj_.end());
    return EtaleStep(source_, second.target_, std::move(adj));
}

std::string EtaleStep::describe() const {
    if (adj_.empty()) return "identity on " + source_.describe();
    std::string out = source_.describe() + " -> " + target_.describe() + " (";
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (i) out += ", ";
        out += "adjoin " + target_.generator(source_.num_generators() + i).name + "^" + std::to_string(adj_[i].n) + " = " +
               adj_[i].u.to_string();
    }
    return out + ")";
}

// ---------------------------------------------------------------- witnesses

Report verify_witness(const HomotopyWitness& w, const ComoduleAlgebra& a, const ComoduleAlgebra& a2) {
    const EtaleStep& step = w.step;
    if (a.base() != step.source() || a2.base() != step.source())
        throw Error(ErrorKind::BaseMismatch, "witness step starts at " + step.source().describe() + ", bundles live over " +
                                                 a.base().describe() + " and " + a2.base().describe());
    const TExtension ext = extend_with_t(step.target());
    if (w.bundle.base() != ext.ring)
        throw Error(ErrorKind::BaseMismatch, "family must live over " + ext.ring.describe() + ", not " +
                                                 w.bundle.base().describe());
    Report r;
    r.add("etale step", true, step.describe());
    r.append(verify_bundle(w.bundle), "B: ");
    const ComoduleAlgebra ia = push_forward(step.map(), a);
    const ComoduleAlgebra ia2 = push_forward(step.map(), a2);
    const ComoduleAlgebra b0 = push_forward(ext.at0, w.bundle);
    const ComoduleAlgebra b1 = push_forward(ext.at1, w.bundle);
    r.append(check_iso(ia, b0, w.iso0), "iso0: ");
    r.append(check_iso(ia2, b1, w.iso1), "iso1: ");
    return r;
}

HomotopyWitness reverse(const HomotopyWitness& w) {
    const TExtension ext = extend_with_t(w.step.target());
    std::vector<BaseElement> images;
    for (std::size_t i = 0; i < ext.ring.num_generators(); ++i) images.push_back(ext.ring.gen(i));
    images[ext.t_index] = ext.ring.one() - ext.t();
    const BaseMorphism flip(ext.ring, ext.ring, std::move(images));
    return HomotopyWitness{w.step, push_forward(flip, w.bundle), w.iso1, w.iso0};
}

Report verify_chain(const WitnessChain& chain) {
    if (chain.bundles.size() != chain.links.size() + 1)
        throw Error(ErrorKind::SchemaError, "a chain of " + std::to_string(chain.links.size()) + " links needs " +
                                                std::to_string(chain.links.size() + 1) + " bundles");
    Report r;
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const ChainLink& link = chain.links[i];
        const ComoduleAlgebra& from = chain.bundles[link.reversed ? i + 1 : i];
        const ComoduleAlgebra& to = chain.bundles[link.reversed ? i : i + 1];
        r.append(verify_witness(link.witness, from, to), "link " + std::to_string(i) + ": ");
    }
    return r;
}

WitnessChain cleft_trivialization_witness(const AbgParams& p) {
    const BaseRing& c = p.base();
    if (!c.field().is_invertible_integer(2)) throw Error(ErrorKind::CharTwo, "2 is not invertible in " + c.describe());
    if (!is_unit(p.alpha)) throw Error(ErrorKind::NonUnitAlpha, "alpha = " + p.alpha.to_string() + " is not a unit");
    const ComoduleAlgebra a = abg_bundle(p);
    const ComoduleAlgebra trivial = abg_bundle(AbgParams{c.one(), c.zero(), c.zero()});

    const EtaleStep step = p.alpha.is_one() ? EtaleStep::identity(c) : EtaleStep::identity(c).then_adjoin(p.alpha, 2, "s");
    const BaseRing& cbar = step.target();
    const BaseMorphism& i = step.map();
    const BaseElement s = p.alpha.is_one() ? cbar.one() : step.root(0);
    const AbgParams pbar{i(p.alpha), i(p.beta), i(p.gamma)};
    const SqrtReduction red = sqrt_reduction(pbar, s);

    const TExtension ext = extend_with_t(cbar);
    const BaseElement t = ext.t();
    const BaseElement s_inv = inverse(s);
    ComoduleAlgebra family = abg_bundle(AbgParams{ext.ring.one(), t * ext.inclusion(pbar.beta),
                                                  t * ext.inclusion(pbar.gamma * s_inv)});
    HomotopyWitness w{step, std::move(family), Matrix::identity(cbar, 4), red.iso};
    return WitnessChain{{a, trivial}, {ChainLink{std::move(w), true}}};
}

GradingWitness grading_witness(const Grading& grading, const ComoduleAlgebra& a) {
    const BaseRing& c = a.base();
    if (grading.ring != c) throw Error(ErrorKind::BaseMismatch, "grading of " + grading.ring.describe());
    if (grading.degrees.size() != c.num_generators())
        throw Error(ErrorKind::DimensionMismatch, "grading needs one degree per generator");
    const TExtension ext = extend_with_t(c);
    std::vector<BaseElement> images;
    for (std::size_t g = 0; g < c.num_generators(); ++g) {
        const int deg = grading.degrees[g];
        const Generator& gen = c.generator(g);
        if (deg < 0) throw Error(ErrorKind::NotGraded, "negative degree for " + gen.name);
        if (deg != 0 && gen.kind != GeneratorKind::Free)
            throw Error(ErrorKind::NotGraded, gen.name + " is invertible or a root and must have degree 0");
        images.push_back(ext.t().pow(deg) * ext.inclusion(c.gen(g)));
    }
    BaseMorphism phi;
    try {
        phi = BaseMorphism(c, ext.ring, std::move(images));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BadMorphism) throw;
        throw Error(ErrorKind::NotGraded, std::string("relations are not homogeneous: ") + e.what());
    }
    const BaseMorphism projection = compose(ext.at0, phi);
    const std::size_t n = a.rank();
    HomotopyWitness w{EtaleStep::identity(c), push_forward(phi, a), Matrix::identity(c, n), Matrix::identity(c, n)};
    return GradingWitness{std::move(w), push_forward(projection, a), phi};
}

Report verify_morphism_homotopy(const BaseMorphism& f, const BaseMorphism& g, const EtaleStep& i2, const BaseMorphism& phi) {
    if (f.source() != g.source() || f.target() != g.target())
        throw Error(ErrorKind::RingMismatch, "f and g must share source and target");
    if (i2.source() != f.target()) throw Error(ErrorKind::RingMismatch, "etale step must start at the target of f");
    if (phi.source() != f.source()) throw Error(ErrorKind::RingMismatch, "phi must start at the source of f");
    const TExtension ext = extend_with_t(i2.target());
    if (phi.target() != ext.ring)
        throw Error(ErrorKind::RingMismatch, "phi must land in " + ext.ring.describe() + ", not " + phi.target().describe());
    Report r;
    auto compare = [&](const char* name, const BaseMorphism& lhs, const BaseMorphism& rhs) {
        std::string w;
        for (std::size_t i = 0; i < lhs.images().size(); ++i)
            if (lhs.image(i) != rhs.image(i)) {
                w = f.source().generator(i).name + ": " + lhs.image(i).to_string() + " vs " + rhs.image(i).to_string();
                break;
            }
        r.add(name, w.empty(), w);
    };
    compare("[0] o phi = i' o f", compose(ext.at0, phi), compose(i2.map(), f));
    compare("[1] o phi = i' o g", compose(ext.at1, phi), compose(i2.map(), g));
    return r;
}

HomotopyWitness morphism_homotopy_witness(const BaseMorphism& f, const BaseMorphism& g, const EtaleStep& i2,
                                          const BaseMorphism& phi, const ComoduleAlgebra& a) {
    const Report r = verify_morphism_homotopy(f, g, i2, phi);
    if (const Check* bad = r.first_failure())
        throw Error(ErrorKind::BadMorphism, "not a homotopy: " + bad->name + " fails at " + bad->detail);
    const std::size_t n = a.rank();
    return HomotopyWitness{i2, push_forward(phi, a), Matrix::identity(i2.target(), n), Matrix::identity(i2.target(), n)};
}

HomotopyWitness transport(const HomotopyWitness& w, const BaseMorphism& f) {
    const EtaleStep& step = w.step;
    if (f.source() != step.source()) throw Error(ErrorKind::RingMismatch, "morphism does not start at the witness base");
    EtaleStep step2 = EtaleStep::identity(f.target());
    BaseMorphism fbar = f;
    const std::size_t base_gens = step.source().num_generators();
    for (std::size_t k = 0; k < step.adjunctions().size(); ++k) {
        const EtaleStep::Adjunction& adj = step.adjunctions()[k];
        step2 = step2.then_adjoin(fbar(adj.u), adj.n, "s");
        const BaseMorphism grow = BaseMorphism::inclusion(fbar.target(), step2.target());
        std::vector<BaseElement> images;
        for (const BaseElement& e : fbar.images()) images.push_back(grow(e));
        images.push_back(step2.root(k));
        fbar = BaseMorphism(step.target().prefix(base_gens + k + 1), step2.target(), std::move(images));
    }
    const TExtension src = extend_with_t(step.target());
    const TExtension dst = extend_with_t(step2.target());
    const BaseMorphism ft = lift_to_t(fbar, src, dst);
    return HomotopyWitness{step2, push_forward(ft, w.bundle), map_matrix(fbar, w.iso0), map_matrix(fbar, w.iso1)};
}

HomotopyWitness etale_trivialization_witness(const ComoduleAlgebra& a, const EtaleStep& step,
                                             const std::vector<BaseElement>& identification) {
    if (!a.is_commutative()) throw Error(ErrorKind::NotCommutative, "the bundle is not commutative");
    if (step.source() != a.base()) throw Error(ErrorKind::BaseMismatch, "etale step does not start at the base");
    const std::size_t n = a.rank(), d = a.hopf_dim();
    const BaseRing& abar = step.target();
    const BaseMorphism& i = step.map();
    if (identification.size() != n) throw Error(ErrorKind::DimensionMismatch, "identification needs one image per basis element");
    for (const BaseElement& e : identification)
        if (e.ring() != abar) throw Error(ErrorKind::RingMismatch, "identification outside " + abar.describe());

    // The identification must be a C-algebra isomorphism A -> Abar.
    auto image = [&](const RVec& v) {
        BaseElement out = abar.zero();
        for (std::size_t l = 0; l < n; ++l)
            if (!v[l].is_zero()) out += i(v[l]) * identification[l];
        return out;
    };
    if (!image(a.unit()).is_one()) throw Error(ErrorKind::NotEtaleInclusion, "identification does not preserve 1");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (identification[p] * identification[q] != image(a.product(p, q)))
                throw Error(ErrorKind::NotEtaleInclusion, "identification is not multiplicative on (" + a.label(p) + ", " +
                                                              a.label(q) + ")");
    const std::size_t base_gens = step.source().num_generators();
    std::size_t abar_rank = 1;
    for (const auto& adj : step.adjunctions()) abar_rank *= static_cast<std::size_t>(adj.n);
    if (abar_rank != n)
        throw Error(ErrorKind::NotEtaleInclusion, "the etale extension has rank " + std::to_string(abar_rank) + ", A has rank " +
                                                      std::to_string(n));
    Matrix coords(a.base(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const Term& t : identification[j].terms()) {
            std::size_t idx = 0;
            for (std::size_t k = step.adjunctions().size(); k-- > 0;)
                idx = idx * static_cast<std::size_t>(step.adjunctions()[k].n) + static_cast<std::size_t>(t.mono[base_gens + k]);
            Monomial low = t.mono;
            for (std::size_t g = base_gens; g < kMaxGenerators; ++g) low[g] = 0;
            coords(idx, j) += BaseElement::from_terms(a.base(), {Term{low, t.coef}});
        }
    if (!is_unit(determinant(coords)))
        throw Error(ErrorKind::NotEtaleInclusion, "identification is not bijective");

    // beta: Abar (x)_C A -> Abar (x) H, 1 (x) a_j |-> sum_{l,k} rho_j^{lk} a_l (x) h_k
    Matrix beta(abar, d, n);
    for (std::size_t j = 0; j < n; ++j) {
        const RVec& rho = a.coaction(j);
        for (std::size_t q = 0; q < n * d; ++q)
            if (!rho[q].is_zero()) beta(q % d, j) += i(rho[q]) * identification[q / d];
    }
    const TExtension ext = extend_with_t(abar);
    return HomotopyWitness{step, trivial_bundle(ext.ring, a.hopf_ptr()), std::move(beta), Matrix::identity(abar, d)};
}

HomotopyWitness kummer_trivialization_witness(const KummerBundle& k) {
    const EtaleStep step = EtaleStep::identity(k.algebra.base()).then_adjoin(k.z, k.n, "r");
    std::vector<BaseElement> ident;
    for (int j = 0; j < k.n; ++j) ident.push_back(step.root(0).pow(j));
    return etale_trivialization_witness(k.algebra, step, ident);
}

}  // namespace hopfgal
