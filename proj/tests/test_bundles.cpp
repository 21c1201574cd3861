#include <doctest.h>

#include <set>
#include <tuple>

#include "support.hpp"

using namespace hopfgal;
using testing::Gen;

namespace {

const BaseRing& Q() {
    static const BaseRing q(Field::rationals());
    return q;
}

AbgParams abg(const BaseRing& r, const char* a, const char* b, const char* c) { return {r.parse(a), r.parse(b), r.parse(c)}; }

RVec coords(const BaseRing& r, const char* one, const char* x, const char* y, const char* xy) {
    return {r.parse(one), r.parse(x), r.parse(y), r.parse(xy)};
}

}  // namespace

TEST_CASE("normal forms of words") {
    const BaseRing c = Q().with_free("a").with_free("b").with_free("g");
    const AbgParams p = abg(c, "a", "b", "g");
    CHECK(abg_reduce_word(p, "yx") == coords(c, "g", "0", "0", "-1"));
    CHECK(abg_reduce_word(p, "xyx") == coords(c, "0", "g", "-a", "0"));
    CHECK(abg_reduce_word(p, "xxy") == coords(c, "0", "0", "a", "0"));
    CHECK(abg_reduce_word(p, "xyxy") == coords(c, "-a*b", "0", "0", "g"));
    CHECK(abg_reduce_word(p, "") == coords(c, "1", "0", "0", "0"));
    CHECK(abg_locally_confluent(p));
}

TEST_CASE("confluence for random parameters") {
    Gen g(50);
    const BaseRing c = Q().with_free("x").with_laurent("z");
    for (int i = 0; i < 20; ++i) CHECK(abg_locally_confluent(AbgParams{g.element(c), g.element(c), g.element(c)}));
}

TEST_CASE("abg multiplication table") {
    const ComoduleAlgebra a = abg_bundle(abg(Q(), "3", "5", "7"));
    const RVec x = a.basis(1), y = a.basis(2), xy = a.basis(3);
    CHECK(a.multiply(y, x) == coords(Q(), "7", "0", "0", "-1"));
    CHECK(a.multiply(x, xy) == coords(Q(), "0", "0", "3", "0"));
    CHECK(a.multiply(xy, xy) == coords(Q(), "-15", "0", "0", "7"));
    CHECK(a.multiply(xy, x) == coords(Q(), "0", "7", "-3", "0"));
    CHECK(verify_bundle(a).passed());
}

TEST_CASE("(1,0,0/C) is the trivial bundle") {
    const BaseRing qx = Q().with_free("x");
    const ComoduleAlgebra a = abg_bundle(abg(qx, "1", "0", "0"));
    const ComoduleAlgebra t = trivial_bundle(qx, sweedler_h4_shared(Field::rationals()));
    CHECK(check_iso(a, t, Matrix::identity(qx, 4)).passed());
}

TEST_CASE("abg cleavings") {
    const ComoduleAlgebra a = abg_bundle(abg(Q(), "4", "1", "4"));
    const CleavingMap cm = abg_cleaving(a);
    CHECK(convolve(a, cm.gamma, cm.inverse) == convolution_unit(a));
    // Delta_A(xy) = x (x) XY + xy (x) 1
    RVec expected(16, Q().zero());
    expected[1 * 4 + 3] = Q().one();
    expected[3 * 4 + 0] = Q().one();
    CHECK(a.coaction(3) == expected);
    Gen g(51);
    for (const Field& k : {Field::rationals(), Field::prime(5)}) {
        const BaseRing c = BaseRing(k).with_laurent("z");
        for (int i = 0; i < 5; ++i) {
            const ComoduleAlgebra b = abg_bundle(g.abg(c));
            CHECK(verify_bundle(b).passed());
            CHECK_NOTHROW(abg_cleaving(b));
        }
    }
}

TEST_CASE("triviality criterion examples") {
    auto crit = [](const Field& k, long a, long b, long c) {
        const BaseRing r(k);
        return abg_triviality_criterion(AbgParams{r.from_int(a), r.from_int(b), r.from_int(c)});
    };
    const Field q = Field::rationals(), f7 = Field::prime(7);
    CriterionResult r = crit(q, 1, 0, 0);
    REQUIRE(r.trivial);
    CHECK(*r.s == q.one());
    CHECK(r.t->is_zero());
    for (long gamma = 1; gamma <= 5; ++gamma) CHECK_FALSE(crit(q, 1, 0, gamma).trivial);
    r = crit(q, 4, 1, 4);
    REQUIRE(r.trivial);
    CHECK(*r.s == q.from_int(2));
    CHECK(*r.t == q.from_int(1));
    CHECK_FALSE(crit(q, 2, 0, 0).trivial);
    r = crit(f7, 2, 0, 0);
    REQUIRE(r.trivial);
    CHECK(*r.s == f7.from_int(3));
    CHECK(r.t->is_zero());
    CHECK_THROWS_WITH_AS(crit(Field::prime(2), 1, 0, 0), doctest::Contains("CharTwo"), Error);
    const BaseRing qx = Q().with_free("x");
    CHECK_THROWS_WITH_AS(abg_triviality_criterion(abg(qx, "1", "x", "0")), doctest::Contains("BaseNotField"), Error);
}

TEST_CASE("criterion isomorphisms are certified") {
    Gen g(52);
    for (const Field& k : {Field::rationals(), Field::prime(7), Field::prime(11)}) {
        const BaseRing r(k);
        const ComoduleAlgebra t = abg_bundle(AbgParams{r.one(), r.zero(), r.zero()});
        for (int i = 0; i < 10; ++i) {
            const Scalar s = g.nonzero_scalar(k), tt = g.scalar(k);
            const AbgParams p{r.constant(s * s), r.constant(tt * tt), r.constant(k.from_int(2) * s * tt)};
            const CriterionResult res = abg_triviality_criterion(p);
            REQUIRE(res.trivial);
            const Matrix iso = abg_criterion_iso(t, r.constant(*res.s), r.constant(*res.t));
            CHECK(check_iso(abg_bundle(p), t, iso).passed());
        }
    }
}

TEST_CASE("census over F3 against exhaustive search") {
    const Field f3 = Field::prime(3);
    const BaseRing k(f3);
    // (s^2, t^2, 2st) for s != 0
    std::set<std::tuple<long, long, long>> oracle;
    for (long s = 1; s < 3; ++s)
        for (long t = 0; t < 3; ++t) oracle.emplace(s * s % 3, t * t % 3, 2 * s * t % 3);
    CHECK(oracle == std::set<std::tuple<long, long, long>>{{1, 0, 0}, {1, 1, 1}, {1, 1, 2}});
    const ComoduleAlgebra t = abg_bundle(AbgParams{k.one(), k.zero(), k.zero()});
    for (long a = 1; a <= 2; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c) {
                const AbgParams p{k.from_int(a), k.from_int(b), k.from_int(c)};
                const bool expected = oracle.count({a, b, c}) == 1;
                CHECK(abg_triviality_criterion(p).trivial == expected);
                CHECK(abg_search_iso(abg_bundle(p), t).has_value() == expected);
            }
}

TEST_CASE("square-root reduction") {
    const SqrtReduction red = sqrt_reduction(abg(Q(), "4", "1", "4"), Q().from_int(2));
    CHECK(red.target == abg_bundle(abg(Q(), "1", "1", "2")));
    CHECK(check_iso(abg_bundle(abg(Q(), "4", "1", "4")), red.target, red.iso).passed());

    const RootAdjunction s3 = adjoin_root(Q(), Q().from_int(3), 2, "s");
    const BaseRing& c = s3.ring;
    const AbgParams p = abg(c, "3", "5", "7");
    const SqrtReduction r2 = sqrt_reduction(p, s3.root);
    CHECK(r2.target == abg_bundle(AbgParams{c.one(), c.from_int(5), c.from_int(7) * inverse(s3.root)}));
    CHECK(check_iso(abg_bundle(p), r2.target, r2.iso).passed());

    const AbgParams one = abg(Q(), "1", "2", "3");
    const SqrtReduction id = sqrt_reduction(one, Q().one());
    CHECK(id.iso == Matrix::identity(Q(), 4));
    CHECK_THROWS_WITH_AS(sqrt_reduction(one, Q().from_int(2)), doctest::Contains("BadRoot"), Error);
}

TEST_CASE("Kummer bundles") {
    const KummerBundle k2 = kummer_bundle(2, Field::rationals().from_int(-1));
    CHECK(k2.algebra.rank() == 2);
    CHECK(k2.algebra.base().describe() == "Q[z,z^-1]");
    CHECK(verify_bundle(k2.algebra).passed());
    CHECK(k2.algebra.is_commutative());
    const RVec w = k2.algebra.basis(1);
    CHECK(k2.algebra.multiply(w, w) == RVec{k2.z, k2.algebra.base().zero()});

    const Field f7 = Field::prime(7);
    const KummerBundle k3 = kummer_bundle(3, f7.from_int(2));
    CHECK(k3.algebra.rank() == 3);
    CHECK(verify_bundle(k3.algebra).passed());
    CHECK(k3.algebra.is_commutative());

    // specialize z |-> 1 and take coinvariants over k
    const BaseRing k(f7);
    const ComoduleAlgebra fibre = push_forward(BaseMorphism(k3.algebra.base(), k, {k.one()}), k3.algebra);
    CHECK(coinvariants_over_field(fibre).size() == 1);

    CHECK_THROWS_WITH_AS(kummer_bundle(3, f7.from_int(3)), doctest::Contains("BadRootOfUnity"), Error);
    CHECK_THROWS_WITH_AS(kummer_bundle(3, Field::prime(3).one()), doctest::Contains("CharDivides"), Error);
}
