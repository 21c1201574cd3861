#include <doctest.h>

#include "support.hpp"

using namespace hopfgal;
using testing::Gen;

namespace {

const BaseRing& Q() {
    static const BaseRing q(Field::rationals());
    return q;
}

AbgParams abg(const BaseRing& r, const char* a, const char* b, const char* c) { return {r.parse(a), r.parse(b), r.parse(c)}; }

RVec neg(RVec v) {
    for (auto& e : v) e = -e;
    return v;
}

// c (x) h |-> c gamma(h)
Matrix cleaving_iso(const ComoduleAlgebra& a, const HModuleMap& gamma) {
    Matrix m(a.base(), a.rank(), a.hopf_dim());
    for (std::size_t i = 0; i < a.hopf_dim(); ++i) m.set_column(i, gamma.values[i]);
    return m;
}

HModuleMap random_map(Gen& g, const ComoduleAlgebra& a) {
    HModuleMap f;
    for (std::size_t i = 0; i < a.hopf_dim(); ++i) {
        RVec v;
        for (std::size_t j = 0; j < a.rank(); ++j) v.push_back(g.element(a.base(), 2, 1));
        f.values.push_back(std::move(v));
    }
    return f;
}

}  // namespace

TEST_CASE("convolution unit and associativity") {
    Gen g(40);
    const BaseRing qx = Q().with_free("x");
    const ComoduleAlgebra a = abg_bundle(abg(qx, "2", "x", "1-x"));
    const HModuleMap e = convolution_unit(a);
    CHECK(convolution_invert(a, e) == e);
    for (int i = 0; i < 10; ++i) {
        const HModuleMap f = random_map(g, a), h = random_map(g, a), k = random_map(g, a);
        CHECK(convolve(a, convolve(a, f, h), k) == convolve(a, f, convolve(a, h, k)));
        CHECK(convolve(a, e, f) == f);
        CHECK(convolve(a, f, e) == f);
    }
}

TEST_CASE("the standard cleaving of (1,0,0/Q)") {
    const ComoduleAlgebra a = abg_bundle(abg(Q(), "1", "0", "0"));
    const CleavingMap cm = abg_cleaving(a);
    const RVec x = a.basis(1), y = a.basis(2);
    CHECK(cm.inverse.values[1] == x);
    CHECK(cm.inverse.values[2] == neg(a.multiply(y, x)));
    CHECK(convolve(a, cm.gamma, cm.inverse) == convolution_unit(a));
    CHECK(convolve(a, cm.inverse, cm.gamma) == convolution_unit(a));
}

TEST_CASE("maps that are not cleavings") {
    const ComoduleAlgebra a = abg_bundle(abg(Q(), "1", "0", "0"));
    HModuleMap zero_x = abg_cleaving_map(a);
    zero_x.values[1] = a.zero();
    CHECK_THROWS_WITH_AS(convolution_invert(a, zero_x), doctest::Contains("NotInvertible"), Error);
    HModuleMap wrong = abg_cleaving_map(a);
    wrong.values[1] = a.basis(2);
    CHECK_THROWS_WITH_AS(check_cleaving(a, wrong), doctest::Contains("NotComoduleMap"), Error);
}

TEST_CASE("trivial bundles are cleft by h |-> 1 (x) h with inverse 1 (x) S(h)") {
    const HopfPtr h = sweedler_h4_shared(Field::rationals());
    const ComoduleAlgebra t = trivial_bundle(Q(), h);
    HModuleMap gamma;
    for (std::size_t i = 0; i < 4; ++i) gamma.values.push_back(t.basis(i));
    const CleavingMap cm = check_cleaving(t, gamma);
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec s = h->antipode(h->basis(i));
        RVec expected;
        for (const Scalar& c : s) expected.push_back(Q().constant(c));
        CHECK(cm.inverse.values[i] == expected);
    }
    const Cocycle coc = extract_cocycle(t, cm);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(coc.sigma(i, j) == Q().constant(h->counit(i) * h->counit(j)));
    CHECK(twisted_product(Q(), h, coc.sigma) == t);
}

TEST_CASE("cocycle of an abg bundle") {
    const BaseRing qz = Q().with_laurent("z");
    const AbgParams p = abg(qz, "3*z", "z^2-1", "5");
    const ComoduleAlgebra a = abg_bundle(p);
    const Cocycle coc = extract_cocycle(a, abg_cleaving(a));
    CHECK(coc.sigma(1, 1) == p.alpha);
    // quasi-action is eps(h) c
    const HopfAlgebra& h = a.hopf();
    const std::vector<BaseElement> probes = {qz.one(), qz.gen("z")};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t c = 0; c < probes.size(); ++c) CHECK(coc.quasi_action[i][c] == qz.constant(h.counit(i)) * probes[c]);
}

TEST_CASE("cleft round trip") {
    Gen g(41);
    for (const Field& k : {Field::rationals(), Field::prime(7)})
        for (int i = 0; i < 6; ++i) {
            const BaseRing c = BaseRing(k);
            const AbgParams p = g.abg(c);
            const ComoduleAlgebra a = abg_bundle(p);
            const CleavingMap cm = abg_cleaving(a);
            const Cocycle coc = extract_cocycle(a, cm);
            CHECK(coc.sigma(1, 1) == p.alpha);
            const ComoduleAlgebra tw = twisted_product(c, a.hopf_ptr(), coc.sigma);
            CHECK(verify_bundle(tw).passed());
            CHECK(check_iso(tw, a, cleaving_iso(a, cm.gamma)).passed());
        }
}

TEST_CASE("push-forward commutes with twisting") {
    const BaseRing qx = Q().with_free("x");
    const ComoduleAlgebra a = abg_bundle(abg(qx, "1", "x", "x^2"));
    const Cocycle coc = extract_cocycle(a, abg_cleaving(a));
    const BaseMorphism f(qx, Q(), {Q().from_int(2)});
    const ComoduleAlgebra lhs = push_forward(f, twisted_product(qx, a.hopf_ptr(), coc.sigma));
    CHECK(lhs == twisted_product(Q(), a.hopf_ptr(), map_matrix(f, coc.sigma)));
}

TEST_CASE("bad cocycles") {
    const HopfPtr h = sweedler_h4_shared(Field::rationals());
    Matrix sigma(Q(), 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        sigma(0, i) = Q().constant(h->counit(i));
        sigma(i, 0) = Q().constant(h->counit(i));
    }
    Matrix plain = sigma;
    plain(1, 1) = Q().one();
    plain(1, 2) = Q().one();
    CHECK_THROWS_WITH_AS(twisted_product(Q(), h, plain), doctest::Contains("NotAssociative"), Error);
    Matrix unnormal = sigma;
    unnormal(1, 1) = Q().one();
    unnormal(0, 0) = Q().from_int(2);
    CHECK_THROWS_WITH_AS(twisted_product(Q(), h, unnormal), doctest::Contains("BadNormalization"), Error);
}

TEST_CASE("crossed product with a genuine action") {
    // C2 acting on Q[z, z^-1] by z |-> z^-1: the skew group algebra
    const BaseRing qz = Q().with_laurent("z");
    const HopfPtr c2 = share(group_algebra_cyclic(Field::rationals(), 2));
    const BaseMorphism flip(qz, qz, {qz.parse("z^-1")});
    Matrix trivial(qz, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) trivial(i, j) = qz.one();
    const CrossedProduct skew(qz, c2, [&](std::size_t i, const BaseElement& c) { return i == 0 ? c : flip(c); }, trivial);
    const std::vector<BaseElement> coeffs = {qz.one(), qz.parse("z"), qz.parse("z^-1+2")};
    CHECK_NOTHROW(skew.verify(coeffs));
    // (1 (x) g)(z (x) 1) = z^-1 (x) g
    RVec g(2, qz.zero()), z(2, qz.zero());
    g[1] = qz.one();
    z[0] = qz.parse("z");
    const RVec prod = skew.multiply(g, z);
    CHECK(prod[1] == qz.parse("z^-1"));
    CHECK(prod[0].is_zero());

    const CrossedProduct doubling(qz, c2, [&](std::size_t i, const BaseElement& c) { return i == 0 ? c : c * Scalar(Field::rationals(), 2); },
                                  trivial);
    CHECK_THROWS_WITH_AS(doubling.verify(coeffs), doctest::Contains("BadNormalization"), Error);
}
