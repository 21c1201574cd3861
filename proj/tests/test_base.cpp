#include <doctest.h>

#include "support.hpp"

using namespace hopfgal;
using testing::Gen;

namespace {

const BaseRing& Q() {
    static const BaseRing q(Field::rationals());
    return q;
}

std::vector<BaseRing> sample_rings() {
    const Field q = Field::rationals(), f7 = Field::prime(7);
    const Field qa = Field::parse("Q[a]/(a^2-3)");
    const BaseRing z = BaseRing(q).with_laurent("z");
    const BaseRing zx = BaseRing(q).with_free("x").with_laurent("z");
    return {
        BaseRing(q).with_free("x"),
        z,
        zx.with_root("T", 2, zx.gen("z")),
        BaseRing(f7).with_free("x").with_root("r", 3, BaseRing(f7).with_free("x").from_int(2)),
        BaseRing(qa).with_free("x"),
        BaseRing(q).with_root("T", 2, Q().from_int(4)),
    };
}

}  // namespace

TEST_CASE("fields and scalars parse in their documented spellings") {
    const Field f7 = Field::parse("F7");
    CHECK(f7 == Field::prime(7));
    CHECK(Field::parse("GF(7)") == f7);
    CHECK(Scalar::parse(f7, "2 mod 7") == f7.from_int(2));
    CHECK(Scalar::parse(f7, "1/2") == f7.from_int(4));
    const Field qa = Field::parse("Q[a]/(a^2-3)");
    const Scalar a = qa.generator();
    CHECK(Scalar::parse(qa, "a+1 in Q[a]/(a^2-3)") == a + qa.one());
    CHECK(a * a == qa.from_int(3));
    CHECK((a + qa.one()).inverse() * (a + qa.one()) == qa.one());
    CHECK(Scalar::parse(Field::rationals(), "3/4").to_string() == "3/4");
    CHECK_THROWS_AS(Scalar::parse(f7, "2 mod 5"), Error);
    CHECK_THROWS_AS(Scalar::parse(f7, "1/0"), Error);
}

TEST_CASE("square roots and orders") {
    const Field q = Field::rationals(), f7 = Field::prime(7);
    const auto r = square_roots(q.from_int(4));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == q.from_int(2));
    CHECK(square_roots(q.from_int(2)).empty());
    CHECK(square_roots(Scalar::parse(q, "9/25")).front() == Scalar::parse(q, "3/5"));
    const auto r7 = square_roots(f7.from_int(2));
    REQUIRE(r7.size() == 2);
    CHECK(r7[0] == f7.from_int(3));
    CHECK(multiplicative_order(f7.from_int(2), 10) == 3);
    CHECK(multiplicative_order(f7.from_int(3), 10) == 6);
}

TEST_CASE("scalar text round-trips") {
    Gen g(11);
    for (const Field& k : {Field::rationals(), Field::prime(5), Field::parse("Q[a]/(a^2-3)"), Field::parse("F5[a]/(a^2-2)")})
        for (int i = 0; i < 50; ++i) {
            const Scalar s = g.scalar(k);
            CHECK(Scalar::parse(k, s.to_string()) == s);
        }
}

TEST_CASE("is_unit examples") {
    const BaseRing qx = Q().with_free("x");
    CHECK(is_unit(qx.from_int(5)));
    CHECK_FALSE(is_unit(qx.gen("x")));
    const BaseRing qz = Q().with_laurent("z");
    CHECK(is_unit(qz.parse("3*z^2")));
    CHECK(inverse(qz.parse("3*z^2")) == qz.parse("1/3*z^-2"));
    CHECK_FALSE(is_unit(qz.parse("1+z")));
    const BaseRing qt = Q().with_root("T", 2, Q().from_int(4));
    const BaseElement t = qt.gen("T");
    REQUIRE(is_unit(t));
    CHECK(inverse(t) == qt.parse("T/4"));
    // T^2 = 4 splits: T - 2 is a zero divisor
    CHECK_FALSE(is_unit(t - qt.from_int(2)));
    CHECK((t - qt.from_int(2)) * (t + qt.from_int(2)) == qt.zero());
}

TEST_CASE("adjoin_root") {
    const RootAdjunction s3 = adjoin_root(Q(), Q().from_int(3), 2);
    CHECK(s3.ring.describe() == "Q[T:T^2=3]");
    CHECK(s3.root * s3.root == s3.ring.from_int(3));
    CHECK(is_unit(s3.root));
    const BaseRing qx = Q().with_free("x");
    CHECK_THROWS_WITH_AS(adjoin_root(qx, qx.gen("x"), 2), doctest::Contains("NonUnit"), Error);
    const BaseRing f7(Field::prime(7));
    const RootAdjunction r = adjoin_root(f7, f7.from_int(2), 3);
    CHECK(r.root * r.root * r.root == r.ring.from_int(2));
    CHECK(inverse(r.root) == r.root * r.root * Field::prime(7).from_int(4));
    const BaseRing f3(Field::prime(3));
    CHECK_THROWS_WITH_AS(adjoin_root(f3, f3.one(), 3), doctest::Contains("CharDivides"), Error);
}

TEST_CASE("evaluations and composition on C[t]") {
    const TExtension ext = extend_with_t(Q());
    const BaseElement p = ext.ring.parse("t^2+3*t+5");
    CHECK(ext.at0(p) == Q().from_int(5));
    CHECK(ext.at1(p) == Q().from_int(9));

    const BaseRing qx = Q().with_free("x");
    const TExtension xt = extend_with_t(qx);
    const BaseMorphism phi(qx, xt.ring, {xt.ring.parse("t*x")});
    CHECK(compose(xt.at0, phi) == BaseMorphism(qx, qx, {qx.zero()}));
    CHECK(compose(xt.at1, phi).is_identity());
    CHECK(compose(BaseMorphism::identity(xt.ring), phi) == phi);

    // [0] o f_t = f o [0]
    const BaseRing qy = Q().with_free("y");
    const BaseMorphism f(qx, qy, {qy.parse("y^2+1")});
    const TExtension yt = extend_with_t(qy);
    const BaseMorphism ft = lift_to_t(f, xt, yt);
    CHECK(compose(yt.at0, ft) == compose(f, xt.at0));
    CHECK(compose(yt.at1, ft) == compose(f, xt.at1));
}

TEST_CASE("morphisms respect relations") {
    const BaseRing qz = Q().with_laurent("z");
    CHECK_THROWS_WITH_AS(BaseMorphism(qz, qz, {qz.parse("1+z")}), doctest::Contains("BadMorphism"), Error);
    const BaseRing qt = Q().with_root("T", 2, Q().from_int(4));
    CHECK_NOTHROW(BaseMorphism(qt, Q(), {Q().from_int(-2)}));
    CHECK_THROWS_WITH_AS(BaseMorphism(qt, Q(), {Q().from_int(3)}), doctest::Contains("BadMorphism"), Error);
}

TEST_CASE("ring axioms on random samples") {
    Gen g(1);
    int pairs = 0;
    for (const BaseRing& r : sample_rings())
        for (int i = 0; i < 200; ++i, ++pairs) {
            const BaseElement a = g.element(r), b = g.element(r), c = g.element(r);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(r.parse(a.to_string()) == a);
        }
    CHECK(pairs >= 1000);
}

TEST_CASE("units have inverses and is_unit is multiplicative") {
    Gen g(2);
    for (const BaseRing& r : sample_rings())
        for (int i = 0; i < 60; ++i) {
            const BaseElement u = g.unit(r);
            REQUIRE(is_unit(u));
            CHECK(u * inverse(u) == r.one());
            const BaseElement a = g.element(r), b = g.element(r);
            const auto ia = try_inverse(a);
            if (ia) CHECK(a * *ia == r.one());
            CHECK(is_unit(a * b) == (is_unit(a) && is_unit(b)));
            CHECK(is_unit(a * u) == is_unit(a));
        }
}

TEST_CASE("morphism application is a ring homomorphism") {
    Gen g(3);
    const BaseRing qxz = Q().with_free("x").with_laurent("z");
    const BaseRing qw = Q().with_laurent("w").with_free("v");
    const BaseMorphism f(qxz, qw, {qw.parse("w+v^2"), qw.parse("-2*w^3")});
    const RootAdjunction adj = adjoin_root(qw, qw.parse("w"), 2, "s");
    const BaseMorphism h = compose(adj.inclusion, f);
    for (int i = 0; i < 200; ++i) {
        const BaseElement a = g.element(qxz), b = g.element(qxz);
        CHECK(f(a * b) == f(a) * f(b));
        CHECK(f(a + b) == f(a) + f(b));
        CHECK(h(a) == adj.inclusion(f(a)));
    }
    CHECK(f(qxz.one()) == qw.one());
}

TEST_CASE("adjoined roots are units") {
    Gen g(4);
    for (const BaseRing& r : sample_rings())
        for (int i = 0; i < 5; ++i) {
            const BaseElement u = g.unit(r);
            const int n = static_cast<int>(g.range(2, 4));
            if (!r.field().is_invertible_integer(n)) continue;
            const RootAdjunction adj = adjoin_root(r, u, n);
            CHECK(is_unit(adj.root));
            CHECK(adj.root.pow(n) == adj.inclusion(u));
        }
}
