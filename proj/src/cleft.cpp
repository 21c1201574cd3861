#include "hopfgal/cleft.hpp"

namespace hopfgal {

namespace {

void check_shape(const ComoduleAlgebra& a, const HModuleMap& f) {
    if (f.values.size() != a.hopf_dim())
        throw Error(ErrorKind::DimensionMismatch, "map H -> A needs " + std::to_string(a.hopf_dim()) + " values");
    for (const RVec& v : f.values) {
        if (v.size() != a.rank()) throw Error(ErrorKind::DimensionMismatch, "value with wrong number of coordinates");
        for (const BaseElement& e : v)
            if (e.ring() != a.base()) throw Error(ErrorKind::RingMismatch, "value outside " + a.base().describe());
    }
}

void axpy(RVec& out, const BaseElement& c, const RVec& v) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[i] += c * v[i];
}

// f applied to an element of H given by scalar coordinates.
RVec apply(const ComoduleAlgebra& a, const HModuleMap& f, const Vec& h) {
    RVec out = a.zero();
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) axpy(out, a.base().constant(h[i]), f.values[i]);
    return out;
}

}  // namespace

HModuleMap convolution_unit(const ComoduleAlgebra& a) {
    HModuleMap u;
    for (std::size_t i = 0; i < a.hopf_dim(); ++i) {
        RVec v = a.unit();
        for (auto& e : v) e *= a.hopf().counit(i);
        u.values.push_back(std::move(v));
    }
    return u;
}

HModuleMap convolve(const ComoduleAlgebra& a, const HModuleMap& f, const HModuleMap& g) {
    check_shape(a, f);
    check_shape(a, g);
    HModuleMap out;
    for (std::size_t i = 0; i < a.hopf_dim(); ++i) {
        RVec v = a.zero();
        for (const auto& t : a.hopf().coproduct(i))
            axpy(v, a.base().constant(t.c), a.multiply(f.values[t.left], g.values[t.right]));
        out.values.push_back(std::move(v));
    }
    return out;
}

HModuleMap convolution_invert(const ComoduleAlgebra& a, const HModuleMap& f) {
    check_shape(a, f);
    const std::size_t n = a.rank(), d = a.hopf_dim();
    // unknown k*n + l is coordinate l of g(h_k); row i*n + m is coordinate m of (f*g)(h_i)
    Matrix op(a.base(), d * n, d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : a.hopf().coproduct(i))
            for (std::size_t l = 0; l < n; ++l) {
                const RVec fa = a.multiply(f.values[t.left], a.basis(l));
                for (std::size_t m = 0; m < n; ++m)
                    if (!fa[m].is_zero()) op(i * n + m, t.right * n + l) += fa[m] * t.c;
            }
    const HModuleMap unit = convolution_unit(a);
    RVec rhs;
    for (const RVec& v : unit.values) rhs.insert(rhs.end(), v.begin(), v.end());
    auto x = solve_unit_determinant(op, rhs);
    if (!x) throw Error(ErrorKind::NotInvertible, "left convolution operator has determinant " +
                                                      determinant(op).to_string() + ", not a unit");
    HModuleMap g;
    for (std::size_t k = 0; k < d; ++k) g.values.emplace_back(x->begin() + k * n, x->begin() + (k + 1) * n);
    if (convolve(a, f, g) != unit || convolve(a, g, f) != unit)
        throw Error(ErrorKind::NotInvertible, "convolution inverse is one-sided");
    return g;
}

CleavingMap check_cleaving(const ComoduleAlgebra& a, const HModuleMap& gamma) {
    check_shape(a, gamma);
    const std::size_t n = a.rank(), d = a.hopf_dim();
    for (std::size_t i = 0; i < d; ++i) {
        RVec rhs(n * d, a.base().zero());
        for (const auto& t : a.hopf().coproduct(i)) {
            const BaseElement c = a.base().constant(t.c);
            for (std::size_t l = 0; l < n; ++l)
                if (!gamma.values[t.left][l].is_zero()) rhs[l * d + t.right] += c * gamma.values[t.left][l];
        }
        const RVec lhs = a.coact(gamma.values[i]);
        if (lhs != rhs)
            throw Error(ErrorKind::NotComoduleMap, "on " + a.hopf().label(i) + ": rho(gamma(h)) = " + a.describe_tensor(lhs) +
                                                       " but (gamma (x) id) Delta(h) = " + a.describe_tensor(rhs));
    }
    return CleavingMap{gamma, convolution_invert(a, gamma)};
}

std::optional<BaseElement> as_base_element(const ComoduleAlgebra& a, const RVec& v) {
    for (std::size_t p = 0; p < a.rank(); ++p) {
        auto inv = try_inverse(a.unit()[p]);
        if (!inv) continue;
        const BaseElement c = v[p] * *inv;
        RVec cu = a.unit();
        for (auto& e : cu) e *= c;
        if (cu == v) return c;
        return std::nullopt;
    }
    return std::nullopt;
}

Cocycle extract_cocycle(const ComoduleAlgebra& a, const CleavingMap& cm) {
    const HopfAlgebra& h = a.hopf();
    const std::size_t d = h.dim();
    const BaseRing& base = a.base();
    Cocycle out{a.hopf_ptr(), base, Matrix(base, d, d), {}};

    std::vector<BaseElement> probes{base.one()};
    for (std::size_t g = 0; g < base.num_generators(); ++g) probes.push_back(base.gen(g));
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<BaseElement> row;
        for (const BaseElement& c : probes) {
            RVec c_one = a.unit();
            for (auto& e : c_one) e *= c;
            RVec v = a.zero();
            for (const auto& t : h.coproduct(i))
                axpy(v, base.constant(t.c), a.multiply(a.multiply(cm.gamma.values[t.left], c_one), cm.inverse.values[t.right]));
            auto value = as_base_element(a, v);
            if (!value || *value != c * base.constant(h.counit(i)))
                throw Error(ErrorKind::NonCentralDatum, h.label(i) + " . " + c.to_string() + " = " + a.describe(v) +
                                                            ", expected eps(h) c");
            row.push_back(*value);
        }
        out.quasi_action.push_back(std::move(row));
    }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RVec v = a.zero();
            for (const auto& s : h.coproduct(i))
                for (const auto& t : h.coproduct(j)) {
                    const RVec gg = a.multiply(cm.gamma.values[s.left], cm.gamma.values[t.left]);
                    const RVec inv = apply(a, cm.inverse, h.multiply(h.basis(s.right), h.basis(t.right)));
                    axpy(v, base.constant(s.c * t.c), a.multiply(gg, inv));
                }
            auto value = as_base_element(a, v);
            if (!value)
                throw Error(ErrorKind::NonCentralDatum, "sigma(" + h.label(i) + ", " + h.label(j) + ") = " + a.describe(v) +
                                                            " does not lie in C");
            out.sigma(i, j) = *value;
        }
    return out;
}

namespace {

BaseElement sigma_of(const Matrix& sigma, const Vec& u, const Vec& v) {
    BaseElement out = sigma.ring().zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero() && !sigma(i, j).is_zero()) out += sigma(i, j) * (u[i] * v[j]);
    }
    return out;
}

void check_normalized(const HopfAlgebra& h, const Matrix& sigma) {
    if (sigma.rows() != h.dim() || sigma.cols() != h.dim())
        throw Error(ErrorKind::DimensionMismatch, "cocycle must be " + std::to_string(h.dim()) + "x" + std::to_string(h.dim()));
    const BaseRing& c = sigma.ring();
    for (std::size_t j = 0; j < h.dim(); ++j) {
        const BaseElement expected = c.constant(h.counit(j));
        if (sigma_of(sigma, h.unit(), h.basis(j)) != expected)
            throw Error(ErrorKind::BadNormalization, "sigma(1, " + h.label(j) + ") != eps(" + h.label(j) + ")");
        if (sigma_of(sigma, h.basis(j), h.unit()) != expected)
            throw Error(ErrorKind::BadNormalization, "sigma(" + h.label(j) + ", 1) != eps(" + h.label(j) + ")");
    }
}

}  // namespace

ComoduleAlgebra twisted_product(const BaseRing& c, const HopfPtr& h, const Matrix& sigma) {
    if (sigma.ring() != c) throw Error(ErrorKind::RingMismatch, "cocycle over " + sigma.ring().describe());
    check_normalized(*h, sigma);
    const std::size_t d = h->dim();
    ComoduleStructure s;
    s.hopf = h;
    s.base = c;
    s.labels = h->labels();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            RVec prod(d, c.zero());
            for (const auto& x : h->coproduct(a))
                for (const auto& y : h->coproduct(b)) {
                    const BaseElement coeff = sigma(x.left, y.left) * (x.c * y.c);
                    if (coeff.is_zero()) continue;
                    for (const auto& [k, v] : h->product(x.right, y.right)) prod[k] += coeff * v;
                }
            for (std::size_t k = 0; k < d; ++k)
                if (!prod[k].is_zero()) s.mult.push_back(ComodEntry{a, b, k, prod[k]});
        }
    for (const Scalar& v : h->unit()) s.unit.push_back(c.constant(v));
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : h->coproduct(i)) s.coaction.push_back(ComodEntry{i, t.left, t.right, c.constant(t.c)});
    ComoduleAlgebra out(std::move(s));
    const Report r = verify_comodule_algebra(out);
    for (const Check& ch : r.checks) {
        if (ch.passed) continue;
        if (ch.name == "unit") throw Error(ErrorKind::BadNormalization, "1 (x) 1 is not a unit; fails on " + ch.detail);
        if (ch.name == "associativity") throw Error(ErrorKind::NotAssociative, "twisted product fails on " + ch.detail);
    }
    return out;
}

// ---------------------------------------------------------------- CrossedProduct

CrossedProduct::CrossedProduct(BaseRing c, HopfPtr h, Action action, Matrix sigma)
    : base_(std::move(c)), hopf_(std::move(h)), action_(std::move(action)), sigma_(std::move(sigma)) {
    if (sigma_.ring() != base_) throw Error(ErrorKind::RingMismatch, "cocycle over " + sigma_.ring().describe());
    check_normalized(*hopf_, sigma_);
}

RVec CrossedProduct::one() const {
    RVec v;
    for (const Scalar& s : hopf_->unit()) v.push_back(base_.constant(s));
    return v;
}

RVec CrossedProduct::mul_basis(const BaseElement& c, std::size_t g, const BaseElement& d, std::size_t h) const {
    // (c (x) g)(d (x) h) = sum c (g1 . d) sigma(g2, h1) (x) g3 h2
    const HopfAlgebra& H = *hopf_;
    RVec out(H.dim(), base_.zero());
    for (const auto& t : H.coproduct(g))
        for (const auto& u : H.coproduct(t.left)) {
            const BaseElement acted = c * action_(u.left, d) * base_.constant(t.c * u.c);
            if (acted.is_zero()) continue;
            for (const auto& w : H.coproduct(h)) {
                const BaseElement coeff = acted * sigma_(u.right, w.left) * base_.constant(w.c);
                if (coeff.is_zero()) continue;
                for (const auto& [k, v] : H.product(t.right, w.right)) out[k] += coeff * v;
            }
        }
    return out;
}

RVec CrossedProduct::multiply(const RVec& x, const RVec& y) const {
    RVec out(hopf_->dim(), base_.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            const RVec p = mul_basis(x[i], i, y[j], j);
            for (std::size_t k = 0; k < p.size(); ++k) out[k] += p[k];
        }
    }
    return out;
}

void CrossedProduct::verify(const std::vector<BaseElement>& coefficients) const {
    const std::size_t d = hopf_->dim();
    auto elem = [&](const BaseElement& c, std::size_t i) {
        RVec v(d, base_.zero());
        v[i] = c;
        return v;
    };
    const RVec unit = one();
    for (const BaseElement& c : coefficients)
        for (std::size_t i = 0; i < d; ++i) {
            const RVec x = elem(c, i);
            if (multiply(unit, x) != x || multiply(x, unit) != x)
                throw Error(ErrorKind::BadNormalization, "1 is not a unit on " + c.to_string() + " (x) " + hopf_->label(i));
        }
    for (const BaseElement& c1 : coefficients)
        for (const BaseElement& c2 : coefficients)
            for (const BaseElement& c3 : coefficients)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k) {
                            const RVec x = elem(c1, i), y = elem(c2, j), z = elem(c3, k);
                            if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
                                throw Error(ErrorKind::NotAssociative,
                                            "crossed product fails on (" + hopf_->label(i) + ", " + hopf_->label(j) + ", " +
                                                hopf_->label(k) + ")");
                        }
}

}  // namespace hopfgal
