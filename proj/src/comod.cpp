#include "hopfgal/comod.hpp"

namespace hopfgal {

namespace {

std::string coef_string(const BaseElement& c) {
    std::string s = c.to_string();
    return c.terms().size() > 1 || (c.terms().size() == 1 && c.terms()[0].coef.is_compound()) ? "(" + s + ")" : s;
}

void add_term(std::string& out, const BaseElement& c, const std::string& label) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    if (c.is_one()) out += label;
    else out += coef_string(c) + "*" + label;
}

}  // namespace

ComoduleAlgebra::ComoduleAlgebra(ComoduleStructure s)
    : hopf_(std::move(s.hopf)), base_(std::move(s.base)), labels_(std::move(s.labels)), unit_(std::move(s.unit)) {
    if (!hopf_) throw Error(ErrorKind::SchemaError, "comodule algebra without a Hopf algebra");
    if (base_.field() != hopf_->field())
        throw Error(ErrorKind::FieldMismatch, "base over " + base_.field().name() + ", Hopf algebra over " +
                                                  hopf_->field().name());
    const std::size_t n = labels_.size(), d = hopf_->dim();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "comodule algebras must have positive rank");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j]) throw Error(ErrorKind::SchemaError, "duplicate basis label '" + labels_[i] + "'");
    if (unit_.size() != n) throw Error(ErrorKind::DimensionMismatch, "unit must have length " + std::to_string(n));
    for (const BaseElement& e : unit_)
        if (e.ring() != base_) throw Error(ErrorKind::RingMismatch, "unit coordinate outside " + base_.describe());
    mult_.assign(n * n, zero());
    for (const ComodEntry& e : s.mult) {
        if (e.i >= n || e.j >= n || e.k >= n) throw Error(ErrorKind::DimensionMismatch, "multiplication index out of range");
        if (e.c.ring() != base_) throw Error(ErrorKind::RingMismatch, "multiplication constant outside " + base_.describe());
        mult_[e.i * n + e.j][e.k] += e.c;
    }
    coaction_.assign(n, RVec(n * d, base_.zero()));
    for (const ComodEntry& e : s.coaction) {
        if (e.i >= n || e.j >= n || e.k >= d) throw Error(ErrorKind::DimensionMismatch, "coaction index out of range");
        if (e.c.ring() != base_) throw Error(ErrorKind::RingMismatch, "coaction constant outside " + base_.describe());
        coaction_[e.i][e.j * d + e.k] += e.c;
    }
}

std::size_t ComoduleAlgebra::index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw Error(ErrorKind::UnresolvedReference, "no basis element '" + std::string(label) + "'");
}

RVec ComoduleAlgebra::basis(std::size_t i) const {
    RVec v = zero();
    v.at(i) = base_.one();
    return v;
}

RVec ComoduleAlgebra::multiply(const RVec& a, const RVec& b) const {
    const std::size_t n = rank();
    RVec out = zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const BaseElement ab = a[i] * b[j];
            const RVec& p = product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!p[k].is_zero()) out[k] += ab * p[k];
        }
    }
    return out;
}

RVec ComoduleAlgebra::coact(const RVec& a) const {
    const std::size_t n = rank(), d = hopf_dim();
    RVec out(n * d, base_.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t p = 0; p < n * d; ++p)
            if (!coaction_[i][p].is_zero()) out[p] += a[i] * coaction_[i][p];
    }
    return out;
}

RVec ComoduleAlgebra::multiply_tensor(const RVec& u, const RVec& v) const {
    const std::size_t n = rank(), d = hopf_dim();
    RVec out(n * d, base_.zero());
    for (std::size_t p = 0; p < n * d; ++p) {
        if (u[p].is_zero()) continue;
        for (std::size_t r = 0; r < n * d; ++r) {
            if (v[r].is_zero()) continue;
            const auto& hq = hopf_->product(p % d, r % d);
            if (hq.empty()) continue;
            const BaseElement c = u[p] * v[r];
            const RVec& ap = product(p / d, r / d);
            for (std::size_t l = 0; l < n; ++l) {
                if (ap[l].is_zero()) continue;
                const BaseElement cl = c * ap[l];
                for (const auto& [m, cm] : hq) out[l * d + m] += cl * cm;
            }
        }
    }
    return out;
}

bool ComoduleAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

ComoduleStructure ComoduleAlgebra::structure() const {
    ComoduleStructure s;
    s.hopf = hopf_;
    s.base = base_;
    s.labels = labels_;
    const std::size_t n = rank(), d = hopf_dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!product(i, j)[k].is_zero()) s.mult.push_back(ComodEntry{i, j, k, product(i, j)[k]});
    s.unit = unit_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n * d; ++p)
            if (!coaction_[i][p].is_zero()) s.coaction.push_back(ComodEntry{i, p / d, p % d, coaction_[i][p]});
    return s;
}

bool ComoduleAlgebra::operator==(const ComoduleAlgebra& o) const {
    return (hopf_ == o.hopf_ || *hopf_ == *o.hopf_) && base_ == o.base_ && rank() == o.rank() && mult_ == o.mult_ &&
           unit_ == o.unit_ && coaction_ == o.coaction_;
}

std::string ComoduleAlgebra::describe(const RVec& a) const {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) add_term(out, a[i], labels_[i]);
    return out.empty() ? "0" : out;
}

std::string ComoduleAlgebra::describe_tensor(const RVec& u) const {
    const std::size_t d = hopf_dim();
    std::string out;
    for (std::size_t p = 0; p < u.size(); ++p) add_term(out, u[p], labels_[p / d] + "(x)" + hopf_->label(p % d));
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- verification

Report verify_comodule_algebra(const ComoduleAlgebra& a) {
    const std::size_t n = a.rank(), d = a.hopf_dim();
    const HopfAlgebra& h = a.hopf();
    const BaseRing& c = a.base();
    Report r;

    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i)
            for (std::size_t j = 0; j < n && w.empty(); ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (a.multiply(a.product(i, j), a.basis(k)) != a.multiply(a.basis(i), a.product(j, k))) {
                        w = "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ")";
                        break;
                    }
        r.add("associativity", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i) {
            const RVec b = a.basis(i);
            if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) w = a.label(i);
        }
        r.add("unit", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i) {
            RVec left(n * d * d, c.zero()), right(n * d * d, c.zero());
            const RVec& rho = a.coaction(i);
            for (std::size_t p = 0; p < n * d; ++p) {
                if (rho[p].is_zero()) continue;
                const std::size_t j = p / d, k = p % d;
                const RVec& rj = a.coaction(j);
                for (std::size_t q = 0; q < n * d; ++q)
                    if (!rj[q].is_zero()) left[q * d + k] += rho[p] * rj[q];
                for (const auto& t : h.coproduct(k)) right[(j * d + t.left) * d + t.right] += rho[p] * t.c;
            }
            if (left != right) w = a.label(i);
        }
        r.add("coaction coassociativity", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i) {
            RVec v = a.zero();
            const RVec& rho = a.coaction(i);
            for (std::size_t p = 0; p < n * d; ++p)
                if (!rho[p].is_zero()) v[p / d] += rho[p] * h.counit(p % d);
            if (v != a.basis(i)) w = a.label(i) + ": (id (x) eps) rho = " + a.describe(v);
        }
        r.add("coaction counit", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const RVec lhs = a.coact(a.product(i, j));
                const RVec rhs = a.multiply_tensor(a.coaction(i), a.coaction(j));
                if (lhs != rhs) {
                    w = "(" + a.label(i) + ", " + a.label(j) + "): rho(ab) = " + a.describe_tensor(lhs) +
                        ", rho(a)rho(b) = " + a.describe_tensor(rhs);
                    break;
                }
            }
        r.add("coaction multiplicative", w.empty(), w);
    }
    bool unit_ok = false;
    {
        RVec one_one(n * d, c.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (!a.unit()[i].is_zero() && !h.unit()[k].is_zero()) one_one[i * d + k] = a.unit()[i] * h.unit()[k];
        const RVec rho1 = a.coact(a.unit());
        unit_ok = rho1 == one_one;
        r.add("coaction unital", unit_ok, unit_ok ? "" : "rho(1) = " + a.describe_tensor(rho1));
    }
    r.add("base coinvariant", unit_ok,
          unit_ok ? "rho(c.1) = c.rho(1) = c.1 (x) 1 by C-linearity" : "rho(1) != 1 (x) 1");
    return r;
}

ComoduleAlgebra trivial_bundle(const BaseRing& c, const HopfPtr& h) {
    if (c.field() != h->field()) throw Error(ErrorKind::FieldMismatch, "base and Hopf algebra over different fields");
    ComoduleStructure s;
    s.hopf = h;
    s.base = c;
    s.labels = h->labels();
    const std::size_t d = h->dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, v] : h->product(i, j)) s.mult.push_back(ComodEntry{i, j, k, c.constant(v)});
    for (const Scalar& v : h->unit()) s.unit.push_back(c.constant(v));
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : h->coproduct(i)) s.coaction.push_back(ComodEntry{i, t.left, t.right, c.constant(t.c)});
    return ComoduleAlgebra(std::move(s));
}

ComoduleAlgebra push_forward(const BaseMorphism& f, const ComoduleAlgebra& a) {
    if (f.source() != a.base())
        throw Error(ErrorKind::RingMismatch, "morphism from " + f.source().describe() + " applied to a bundle over " +
                                                 a.base().describe());
    ComoduleStructure s = a.structure();
    s.base = f.target();
    for (auto& e : s.mult) e.c = f(e.c);
    for (auto& e : s.unit) e = f(e);
    for (auto& e : s.coaction) e.c = f(e.c);
    return ComoduleAlgebra(std::move(s));
}

std::vector<Vec> coinvariants_over_field(const ComoduleAlgebra& a) {
    if (!a.base().is_field())
        throw Error(ErrorKind::BaseNotField, "coinvariants are only computed over the ground field, not " +
                                                 a.base().describe());
    const std::size_t n = a.rank(), d = a.hopf_dim();
    const Field& k = a.base().field();
    ScalarMatrix m(k, n * d, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t p = 0; p < n * d; ++p) m(p, j) = *a.coaction(j)[p].constant_value();
        for (std::size_t q = 0; q < d; ++q) m(j * d + q, j) -= a.hopf().unit()[q];
    }
    return kernel_basis(std::move(m));
}

Matrix map_matrix(const BaseMorphism& f, const Matrix& m) {
    if (m.ring() != f.source()) throw Error(ErrorKind::RingMismatch, "matrix over " + m.ring().describe());
    Matrix out(f.target(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
    return out;
}

Report check_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const Matrix& phi) {
    if (a.rank() != b.rank())
        throw Error(ErrorKind::RankMismatch, "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
    if (a.base() != b.base())
        throw Error(ErrorKind::BaseMismatch, "bases " + a.base().describe() + " and " + b.base().describe());
    if (a.hopf() != b.hopf()) throw Error(ErrorKind::BaseMismatch, "comodule algebras over different Hopf algebras");
    const std::size_t n = a.rank(), d = a.hopf_dim();
    if (phi.rows() != n || phi.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "isomorphism matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (phi.ring() != a.base()) throw Error(ErrorKind::RingMismatch, "isomorphism matrix over " + phi.ring().describe());

    Report r;
    const BaseElement det = determinant(phi);
    const bool invertible = is_unit(det);
    r.add("invertible", invertible, invertible ? "det = " + det.to_string() : "det = " + det.to_string() + " is not a unit");

    const RVec one = phi * a.unit();
    r.add("unit", one == b.unit(), one == b.unit() ? "" : "phi(1) = " + b.describe(one));

    std::vector<RVec> images;
    for (std::size_t j = 0; j < n; ++j) images.push_back(phi.column(j));
    {
        std::string w;
        for (std::size_t i = 0; i < n && w.empty(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const RVec lhs = phi * a.product(i, j);
                const RVec rhs = b.multiply(images[i], images[j]);
                if (lhs != rhs) {
                    w = "phi(" + a.label(i) + "*" + a.label(j) + ") = " + b.describe(lhs) + " but phi(" + a.label(i) +
                        ")phi(" + a.label(j) + ") = " + b.describe(rhs);
                    break;
                }
            }
        r.add("multiplicative", w.empty(), w);
    }
    {
        std::string w;
        for (std::size_t j = 0; j < n && w.empty(); ++j) {
            RVec lhs(n * d, a.base().zero());
            const RVec& rho = a.coaction(j);
            for (std::size_t p = 0; p < n * d; ++p) {
                if (rho[p].is_zero()) continue;
                const RVec& img = images[p / d];
                for (std::size_t l = 0; l < n; ++l)
                    if (!img[l].is_zero()) lhs[l * d + p % d] += rho[p] * img[l];
            }
            const RVec rhs = b.coact(images[j]);
            if (lhs != rhs)
                w = a.label(j) + ": (phi (x) id) rho = " + b.describe_tensor(lhs) + " but rho(phi) = " + b.describe_tensor(rhs);
        }
        r.add("intertwines coaction", w.empty(), w);
    }
    return r;
}

}  // namespace hopfgal
