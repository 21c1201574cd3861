#include "hopfgal/hopf.hpp"

#include <map>

namespace hopfgal {

namespace {

void check_len(const Vec& v, std::size_t d, const char* what) {
    if (v.size() != d) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have length " + std::to_string(d));
}

std::string vec_string(const std::vector<std::string>& labels, const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].to_string();
        if (v[i].is_compound()) c = "(" + c + ")";
        if (!out.empty()) out += " + ";
        if (c == "1") out += labels[i];
        else if (c == "-1") out += "-" + labels[i];
        else out += c + "*" + labels[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(HopfStructure s) {
    load(s);
    if (s.antipode) {
        if (s.antipode->rows() != dim() || s.antipode->cols() != dim() || s.antipode->field() != k_)
            throw Error(ErrorKind::DimensionMismatch, "antipode must be a " + std::to_string(dim()) + "x" +
                                                          std::to_string(dim()) + " matrix over " + k_.name());
        antipode_ = std::move(*s.antipode);
    } else {
        antipode_ = solve_antipode(s);
    }
}

HopfAlgebra::HopfAlgebra(HopfStructure s, NoAntipodeTag) { load(s); }

void HopfAlgebra::load(HopfStructure& s) {
    k_ = s.field;
    labels_ = s.labels;
    const std::size_t d = labels_.size();
    if (d == 0) throw Error(ErrorKind::DimensionMismatch, "a Hopf algebra needs at least one basis element");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j]) throw Error(ErrorKind::SchemaError, "duplicate basis label '" + labels_[i] + "'");
    check_len(s.unit, d, "unit");
    check_len(s.counit, d, "counit");
    for (const Scalar& c : s.unit)
        if (c.field() != k_) throw Error(ErrorKind::FieldMismatch, "unit coordinate over " + c.field().name());
    for (const Scalar& c : s.counit)
        if (c.field() != k_) throw Error(ErrorKind::FieldMismatch, "counit coordinate over " + c.field().name());
    unit_ = s.unit;
    counit_ = s.counit;

    std::vector<Vec> dense_mult(d * d, Vec(d, k_.zero()));
    for (const TensorEntry& e : s.mult) {
        if (e.i >= d || e.j >= d || e.k >= d) throw Error(ErrorKind::DimensionMismatch, "multiplication index out of range");
        if (e.c.field() != k_) throw Error(ErrorKind::FieldMismatch, "multiplication constant over " + e.c.field().name());
        dense_mult[e.i * d + e.j][e.k] += e.c;
    }
    mult_.assign(d * d, {});
    for (std::size_t p = 0; p < d * d; ++p)
        for (std::size_t k = 0; k < d; ++k)
            if (!dense_mult[p][k].is_zero()) mult_[p].emplace_back(k, dense_mult[p][k]);

    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> co(d);
    for (const TensorEntry& e : s.comult) {
        if (e.i >= d || e.j >= d || e.k >= d) throw Error(ErrorKind::DimensionMismatch, "comultiplication index out of range");
        if (e.c.field() != k_) throw Error(ErrorKind::FieldMismatch, "comultiplication constant over " + e.c.field().name());
        auto [it, fresh] = co[e.i].try_emplace({e.j, e.k}, e.c);
        if (!fresh) it->second += e.c;
    }
    comult_.assign(d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& [jk, c] : co[i])
            if (!c.is_zero()) comult_[i].push_back(Coterm{jk.first, jk.second, c});
}

std::optional<std::size_t> HopfAlgebra::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::size_t HopfAlgebra::index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::UnresolvedReference, "no basis element '" + std::string(label) + "'");
}

Vec HopfAlgebra::basis(std::size_t i) const {
    Vec v(dim(), k_.zero());
    v.at(i) = k_.one();
    return v;
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    const std::size_t d = dim();
    Vec out(d, k_.zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar ab = a[i] * b[j];
            for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
        }
    }
    return out;
}

Vec HopfAlgebra::comultiply(const Vec& a) const {
    const std::size_t d = dim();
    Vec out(d * d, k_.zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (const Coterm& t : comult_[i]) out[t.left * d + t.right] += a[i] * t.c;
    }
    return out;
}

Scalar HopfAlgebra::counit(const Vec& a) const {
    Scalar out = k_.zero();
    for (std::size_t i = 0; i < dim(); ++i)
        if (!a[i].is_zero()) out += a[i] * counit_[i];
    return out;
}

Vec HopfAlgebra::antipode(const Vec& a) const {
    const std::size_t d = dim();
    Vec out(d, k_.zero());
    for (std::size_t j = 0; j < d; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            if (!antipode_(i, j).is_zero()) out[i] += antipode_(i, j) * a[j];
    }
    return out;
}

HopfStructure HopfAlgebra::structure() const {
    HopfStructure s;
    s.field = k_;
    s.labels = labels_;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : product(i, j)) s.mult.push_back(TensorEntry{i, j, k, c});
    s.unit = unit_;
    for (std::size_t i = 0; i < d; ++i)
        for (const Coterm& t : comult_[i]) s.comult.push_back(TensorEntry{i, t.left, t.right, t.c});
    s.counit = counit_;
    s.antipode = antipode_;
    return s;
}

bool HopfAlgebra::operator==(const HopfAlgebra& o) const {
    if (this == &o) return true;
    if (k_ != o.k_ || labels_ != o.labels_ || unit_ != o.unit_ || counit_ != o.counit_) return false;
    for (std::size_t p = 0; p < mult_.size(); ++p) {
        if (mult_[p].size() != o.mult_[p].size()) return false;
        for (std::size_t q = 0; q < mult_[p].size(); ++q)
            if (mult_[p][q].first != o.mult_[p][q].first || mult_[p][q].second != o.mult_[p][q].second) return false;
    }
    for (std::size_t i = 0; i < comult_.size(); ++i) {
        if (comult_[i].size() != o.comult_[i].size()) return false;
        for (std::size_t q = 0; q < comult_[i].size(); ++q) {
            const Coterm &a = comult_[i][q], &b = o.comult_[i][q];
            if (a.left != b.left || a.right != b.right || a.c != b.c) return false;
        }
    }
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (antipode_(i, j) != o.antipode_(i, j)) return false;
    return true;
}

std::string HopfAlgebra::describe(const Vec& a) const { return vec_string(labels_, a); }

// ---------------------------------------------------------------- verification

Report verify_hopf(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    const Field& k = h.field();
    Report r;
    auto pair_name = [&](std::size_t i, std::size_t j) { return "(" + h.label(i) + ", " + h.label(j) + ")"; };

    {
        std::string witness;
        for (std::size_t i = 0; i < d && witness.empty(); ++i)
            for (std::size_t j = 0; j < d && witness.empty(); ++j) {
                const Vec ij = h.multiply(h.basis(i), h.basis(j));
                for (std::size_t l = 0; l < d; ++l) {
                    const Vec left = h.multiply(ij, h.basis(l));
                    const Vec right = h.multiply(h.basis(i), h.multiply(h.basis(j), h.basis(l)));
                    if (left != right) {
                        witness = "(" + h.label(i) + ", " + h.label(j) + ", " + h.label(l) + ")";
                        break;
                    }
                }
            }
        r.add("associativity", witness.empty(), witness);
    }
    {
        std::string witness;
        for (std::size_t i = 0; i < d; ++i) {
            const Vec b = h.basis(i);
            if (h.multiply(h.unit(), b) != b || h.multiply(b, h.unit()) != b) {
                witness = h.label(i);
                break;
            }
        }
        r.add("unit", witness.empty(), witness);
    }
    {
        std::string witness;
        for (std::size_t i = 0; i < d && witness.empty(); ++i) {
            Vec left(d * d * d, k.zero()), right(d * d * d, k.zero());
            for (const auto& t : h.coproduct(i)) {
                for (const auto& u : h.coproduct(t.left)) left[(u.left * d + u.right) * d + t.right] += t.c * u.c;
                for (const auto& u : h.coproduct(t.right)) right[(t.left * d + u.left) * d + u.right] += t.c * u.c;
            }
            if (left != right) witness = h.label(i);
        }
        r.add("coassociativity", witness.empty(), witness);
    }
    {
        std::string witness;
        for (std::size_t i = 0; i < d && witness.empty(); ++i) {
            Vec left(d, k.zero()), right(d, k.zero());
            for (const auto& t : h.coproduct(i)) {
                left[t.right] += h.counit(t.left) * t.c;
                right[t.left] += h.counit(t.right) * t.c;
            }
            if (left != h.basis(i) || right != h.basis(i)) witness = h.label(i);
        }
        r.add("counit", witness.empty(), witness);
    }
    {
        std::string witness;
        Vec unit_unit(d * d, k.zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) unit_unit[i * d + j] = h.unit()[i] * h.unit()[j];
        if (h.comultiply(h.unit()) != unit_unit) witness = "Delta(1) != 1 (x) 1";
        else if (!h.counit(h.unit()).is_one()) witness = "eps(1) != 1";
        for (std::size_t i = 0; i < d && witness.empty(); ++i)
            for (std::size_t j = 0; j < d && witness.empty(); ++j) {
                const Vec prod = h.multiply(h.basis(i), h.basis(j));
                if (h.counit(prod) != h.counit(i) * h.counit(j)) {
                    witness = "eps on " + pair_name(i, j);
                    break;
                }
                Vec rhs(d * d, k.zero());
                for (const auto& a : h.coproduct(i))
                    for (const auto& b : h.coproduct(j)) {
                        const Scalar c = a.c * b.c;
                        for (const auto& [l, cl] : h.product(a.left, b.left))
                            for (const auto& [m, cm] : h.product(a.right, b.right)) rhs[l * d + m] += c * cl * cm;
                    }
                if (h.comultiply(prod) != rhs) witness = "Delta on " + pair_name(i, j);
            }
        r.add("bialgebra", witness.empty(), witness);
    }
    {
        std::string left_w, right_w;
        for (std::size_t i = 0; i < d; ++i) {
            const Vec target = [&] {
                Vec v = h.unit();
                for (auto& c : v) c *= h.counit(i);
                return v;
            }();
            Vec left(d, k.zero()), right(d, k.zero());
            for (const auto& t : h.coproduct(i)) {
                Vec sl = h.antipode(h.basis(t.left));
                for (auto& c : sl) c *= t.c;
                const Vec l = h.multiply(sl, h.basis(t.right));
                Vec sr = h.antipode(h.basis(t.right));
                for (auto& c : sr) c *= t.c;
                const Vec rr = h.multiply(h.basis(t.left), sr);
                for (std::size_t m = 0; m < d; ++m) {
                    left[m] += l[m];
                    right[m] += rr[m];
                }
            }
            if (left_w.empty() && left != target)
                left_w = h.label(i) + ": sum S(h1)h2 = " + h.describe(left) + ", expected " + h.describe(target);
            if (right_w.empty() && right != target)
                right_w = h.label(i) + ": sum h1 S(h2) = " + h.describe(right) + ", expected " + h.describe(target);
        }
        r.add("antipode (left)", left_w.empty(), left_w);
        r.add("antipode (right)", right_w.empty(), right_w);
    }
    {
        const std::size_t rk = rank(h.antipode());
        r.add("antipode bijective", rk == d, rk == d ? "" : "rank " + std::to_string(rk) + " < " + std::to_string(d));
    }
    return r;
}

ScalarMatrix solve_antipode(const HopfStructure& bialgebra) {
    const HopfAlgebra h(bialgebra, HopfAlgebra::NoAntipodeTag{});
    const std::size_t d = h.dim();
    const Field& k = h.field();
    // unknown a + d*b is coordinate a of S(h_b)
    ScalarMatrix m(k, 2 * d * d, d * d);
    std::vector<Scalar> rhs(2 * d * d, k.zero());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t c = 0; c < d; ++c) {
            rhs[i * d + c] = h.counit(i) * h.unit()[c];
            rhs[d * d + i * d + c] = rhs[i * d + c];
        }
        for (const auto& t : h.coproduct(i))
            for (std::size_t a = 0; a < d; ++a) {
                for (const auto& [c, mc] : h.product(a, t.right)) m(i * d + c, a + d * t.left) += t.c * mc;
                for (const auto& [c, mc] : h.product(t.left, a)) m(d * d + i * d + c, a + d * t.right) += t.c * mc;
            }
    }
    if (rank(m) != d * d) throw Error(ErrorKind::NoAntipode, "antipode equations do not determine S uniquely");
    auto x = solve(m, rhs);
    if (!x) throw Error(ErrorKind::NoAntipode, "antipode equations are inconsistent");
    ScalarMatrix s(k, d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) s(a, b) = (*x)[a + d * b];
    return s;
}

// ---------------------------------------------------------------- constructors

namespace {

std::string power_label(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

HopfAlgebra taft(int n, const Scalar& q) {
    const Field& k = q.field();
    if (n < 2) throw Error(ErrorKind::SchemaError, "Taft algebras need N >= 2");
    if (!k.is_invertible_integer(n)) throw Error(ErrorKind::CharDivides, std::to_string(n) + " is zero in " + k.name());
    const auto order = multiplicative_order(q, n);
    if (!order || *order != n)
        throw Error(ErrorKind::BadRootOfUnity, q.to_string() + " does not have multiplicative order " + std::to_string(n) +
                                                   " in " + k.name());
    const std::size_t N = n, d = N * N;
    auto idx = [N](std::size_t i, std::size_t j) { return i % N + N * j; };

    HopfStructure s;
    s.field = k;
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) {
            std::string l = power_label("X", static_cast<int>(i)) + power_label("Y", static_cast<int>(j));
            s.labels.push_back(l.empty() ? "1" : l);
        }
    // (X^a Y^b)(X^c Y^e) = q^{bc} X^{a+c} Y^{b+e}
    std::vector<Scalar> qpow(N);
    qpow[0] = k.one();
    for (std::size_t i = 1; i < N; ++i) qpow[i] = qpow[i - 1] * q;
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t e = 0; e < N; ++e)
                for (std::size_t c = 0; c < N; ++c)
                    if (b + e < N) s.mult.push_back(TensorEntry{idx(a, b), idx(c, e), idx(a + c, b + e), qpow[(b * c) % N]});
    s.unit.assign(d, k.zero());
    s.unit[0] = k.one();
    s.counit.assign(d, k.zero());
    for (std::size_t a = 0; a < N; ++a) s.counit[idx(a, 0)] = k.one();

    // Delta(X^a Y^b) = Delta(X)^a Delta(Y)^b, computed in H (x) H.
    const HopfStructure algebra_only = [&] {
        HopfStructure t = s;
        for (std::size_t i = 0; i < d; ++i) t.comult.push_back(TensorEntry{i, i, i, k.one()});
        t.antipode = ScalarMatrix(k, d, d);
        return t;
    }();
    const HopfAlgebra alg(algebra_only);
    auto tensor_mul = [&](const Vec& u, const Vec& v) {
        Vec out(d * d, k.zero());
        for (std::size_t p = 0; p < d * d; ++p) {
            if (u[p].is_zero()) continue;
            for (std::size_t r = 0; r < d * d; ++r) {
                if (v[r].is_zero()) continue;
                const Scalar c = u[p] * v[r];
                for (const auto& [l, cl] : alg.product(p / d, r / d))
                    for (const auto& [m, cm] : alg.product(p % d, r % d)) out[l * d + m] += c * cl * cm;
            }
        }
        return out;
    };
    Vec dx(d * d, k.zero()), dy(d * d, k.zero()), one(d * d, k.zero());
    dx[idx(1, 0) * d + idx(1, 0)] = k.one();
    dy[idx(0, 0) * d + idx(0, 1)] = k.one();
    dy[idx(0, 1) * d + idx(1, 0)] = k.one();
    one[0] = k.one();
    std::vector<Vec> xpow{one};
    for (std::size_t a = 1; a < N; ++a) xpow.push_back(tensor_mul(xpow.back(), dx));
    for (std::size_t b = 0; b < N; ++b) {
        Vec yb = one;
        for (std::size_t e = 0; e < b; ++e) yb = tensor_mul(yb, dy);
        for (std::size_t a = 0; a < N; ++a) {
            const Vec delta = tensor_mul(xpow[a], yb);
            for (std::size_t p = 0; p < d * d; ++p)
                if (!delta[p].is_zero()) s.comult.push_back(TensorEntry{idx(a, b), p / d, p % d, delta[p]});
        }
    }
    return HopfAlgebra(std::move(s));
}

HopfAlgebra sweedler_h4(const Field& k) { return taft(2, -k.one()); }

HopfAlgebra group_algebra_cyclic(const Field& k, int n) {
    if (n < 1) throw Error(ErrorKind::SchemaError, "cyclic group order must be positive");
    const std::size_t N = n;
    HopfStructure s;
    s.field = k;
    for (std::size_t i = 0; i < N; ++i) {
        const std::string l = power_label("g", static_cast<int>(i));
        s.labels.push_back(l.empty() ? "1" : l);
    }
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) s.mult.push_back(TensorEntry{i, j, (i + j) % N, k.one()});
        s.comult.push_back(TensorEntry{i, i, i, k.one()});
    }
    s.unit.assign(N, k.zero());
    s.unit[0] = k.one();
    s.counit.assign(N, k.one());
    return HopfAlgebra(std::move(s));
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    const std::size_t d = h.dim();
    HopfStructure s;
    s.field = h.field();
    for (const std::string& l : h.labels()) s.labels.push_back("p_" + l);
    for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : h.coproduct(k)) s.mult.push_back(TensorEntry{t.left, t.right, k, t.c});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : h.product(i, j)) s.comult.push_back(TensorEntry{k, i, j, c});
    s.unit = Vec(d, h.field().zero());
    for (std::size_t i = 0; i < d; ++i) s.unit[i] = h.counit(i);
    s.counit = h.unit();
    ScalarMatrix st(h.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) st(i, j) = h.antipode()(j, i);
    s.antipode = std::move(st);
    return HopfAlgebra(std::move(s));
}

}  // namespace hopfgal
