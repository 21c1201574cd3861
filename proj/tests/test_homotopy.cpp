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

HomotopyWitness constant_witness(const ComoduleAlgebra& a) {
    const TExtension ext = extend_with_t(a.base());
    const Matrix id = Matrix::identity(a.base(), a.rank());
    return HomotopyWitness{EtaleStep::identity(a.base()), push_forward(ext.inclusion, a), id, id};
}

bool fails_at(const Report& r, const std::string& prefix) {
    const Check* f = r.first_failure();
    return f && f->name.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("constant families prove reflexivity") {
    const ComoduleAlgebra a = abg_bundle(abg(Q(), "3", "5", "7"));
    CHECK(verify_witness(constant_witness(a), a, a).passed());
    const BaseRing qx = Q().with_free("x");
    CHECK_THROWS_WITH_AS(verify_witness(constant_witness(a), abg_bundle(abg(qx, "1", "0", "0")), a),
                         doctest::Contains("BaseMismatch"), Error);
}

TEST_CASE("cleft trivialization of (3,5,7/Q)") {
    const AbgParams p = abg(Q(), "3", "5", "7");
    const WitnessChain chain = cleft_trivialization_witness(p);
    REQUIRE(chain.links.size() == 1);
    CHECK(verify_chain(chain).passed());
    const HomotopyWitness& w = chain.links[0].witness;
    REQUIRE(w.step.adjunctions().size() == 1);
    const BaseElement s = w.step.root(0);
    const BaseRing& cbar = w.step.target();
    CHECK(s * s == cbar.from_int(3));
    const TExtension ext = extend_with_t(cbar);
    CHECK(push_forward(ext.at1, w.bundle) == abg_bundle(AbgParams{cbar.one(), cbar.from_int(5), cbar.from_int(7) * inverse(s)}));
    CHECK(push_forward(ext.at0, w.bundle) == abg_bundle(abg(cbar, "1", "0", "0")));

    // the reversed witness proves the other direction
    CHECK(verify_witness(reverse(w), chain.bundles[0], chain.bundles[1]).passed());

    // corrupting iso1 is caught by check_iso
    HomotopyWitness bad = w;
    bad.iso1 = Matrix::identity(cbar, 4);
    bad.iso1(1, 1) = cbar.zero();
    bad.iso1(2, 1) = cbar.one();
    CHECK(fails_at(verify_witness(bad, chain.bundles[1], chain.bundles[0]), "iso1: "));
}

TEST_CASE("alpha = 1 needs no root") {
    const BaseRing qx = Q().with_free("x");
    const WitnessChain chain = cleft_trivialization_witness(abg(qx, "1", "x", "x+2"));
    CHECK(chain.links[0].witness.step.adjunctions().empty());
    CHECK(verify_chain(chain).passed());
    const WitnessChain triv = cleft_trivialization_witness(abg(Q(), "1", "0", "0"));
    CHECK(verify_chain(triv).passed());
    CHECK_THROWS_WITH_AS(cleft_trivialization_witness(abg(BaseRing(Field::prime(2)), "1", "0", "0")),
                         doctest::Contains("CharTwo"), Error);
}

TEST_CASE("cleft trivialization for random parameters") {
    Gen g(60);
    for (const Field& k : {Field::rationals(), Field::prime(5), Field::prime(7)})
        for (int i = 0; i < 100; ++i) {
            const BaseRing c(k);
            AbgParams p = g.abg(c);
            const WitnessChain chain = cleft_trivialization_witness(p);
            const Report r = verify_chain(chain);
            CHECK(r.passed());
        }
    const BaseRing qz = Q().with_laurent("z").with_free("x");
    for (int i = 0; i < 10; ++i) CHECK(verify_chain(cleft_trivialization_witness(g.abg(qz))).passed());
}

TEST_CASE("grading witnesses") {
    const BaseRing qx = Q().with_free("x");
    const ComoduleAlgebra a = abg_bundle(abg(qx, "1", "x", "0"));
    const GradingWitness gw = grading_witness(Grading{qx, {1}}, a);
    CHECK(gw.projected == abg_bundle(abg(qx, "1", "0", "0")));
    CHECK(verify_witness(gw.witness, gw.projected, a).passed());

    const ComoduleAlgebra b = abg_bundle(abg(Q(), "2", "3", "4"));
    const GradingWitness flat = grading_witness(Grading{Q(), {}}, b);
    CHECK(flat.projected == b);
    CHECK(verify_witness(flat.witness, b, b).passed());

    const BaseRing q2 = Q().with_free("x1").with_free("x2");
    const ComoduleAlgebra t = trivial_bundle(q2, sweedler_h4_shared(Field::rationals()));
    const GradingWitness tw = grading_witness(Grading{q2, {1, 2}}, t);
    CHECK(tw.projected == t);
    CHECK(verify_witness(tw.witness, t, t).passed());

    const BaseRing qz = Q().with_laurent("z");
    CHECK_THROWS_WITH_AS(grading_witness(Grading{qz, {1}}, abg_bundle(abg(qz, "z", "0", "0"))), doctest::Contains("NotGraded"),
                         Error);
}

TEST_CASE("homotopic morphisms") {
    const BaseRing qx = Q().with_free("x");
    const TExtension ext = extend_with_t(qx);
    const EtaleStep id = EtaleStep::identity(qx);
    const BaseMorphism zero(qx, qx, {qx.zero()});
    const BaseMorphism ident = BaseMorphism::identity(qx);
    const BaseMorphism phi(qx, ext.ring, {ext.ring.parse("t*x")});
    CHECK(verify_morphism_homotopy(zero, ident, id, phi).passed());
    CHECK(verify_morphism_homotopy(ident, ident, id, ext.inclusion).passed());
    const BaseMorphism square(qx, ext.ring, {ext.ring.parse("t^2")});
    const Report r = verify_morphism_homotopy(zero, ident, id, square);
    CHECK(fails_at(r, "[1]"));

    const ComoduleAlgebra a = abg_bundle(abg(qx, "1+0*x", "x", "x^2"));
    const HomotopyWitness w = morphism_homotopy_witness(zero, ident, id, phi, a);
    CHECK(verify_witness(w, push_forward(zero, a), push_forward(ident, a)).passed());
    CHECK_THROWS_WITH_AS(morphism_homotopy_witness(zero, ident, id, square, a), doctest::Contains("BadMorphism"), Error);
}

TEST_CASE("witnesses transport along base morphisms") {
    Gen g(61);
    const BaseRing qx = Q().with_free("x");
    const BaseRing qy = Q().with_laurent("y");
    for (int i = 0; i < 8; ++i) {
        const AbgParams p = g.abg(qx);
        const WitnessChain chain = cleft_trivialization_witness(p);
        const HomotopyWitness& w = chain.links[0].witness;  // proves trivial ~ A
        const BaseMorphism f(qx, qy, {g.element(qy)});
        const HomotopyWitness moved = transport(w, f);
        CHECK(verify_witness(moved, push_forward(f, chain.bundles[1]), push_forward(f, chain.bundles[0])).passed());
    }
}

TEST_CASE("etale trivializations") {
    const KummerBundle k2 = kummer_bundle(2, Field::rationals().from_int(-1));
    const HomotopyWitness w2 = kummer_trivialization_witness(k2);
    const ComoduleAlgebra t2 = trivial_bundle(k2.algebra.base(), k2.algebra.hopf_ptr());
    CHECK(verify_witness(w2, k2.algebra, t2).passed());

    const KummerBundle k3 = kummer_bundle(3, Field::prime(7).from_int(2));
    const HomotopyWitness w3 = kummer_trivialization_witness(k3);
    CHECK(verify_witness(w3, k3.algebra, trivial_bundle(k3.algebra.base(), k3.algebra.hopf_ptr())).passed());

    CHECK_THROWS_WITH_AS(etale_trivialization_witness(abg_bundle(abg(Q(), "1", "0", "1")), EtaleStep::identity(Q()), {}),
                         doctest::Contains("NotCommutative"), Error);
    const EtaleStep step = EtaleStep::identity(k2.algebra.base()).then_adjoin(k2.z, 2, "r");
    const BaseElement one = step.target().one();
    CHECK_THROWS_WITH_AS(etale_trivialization_witness(k2.algebra, step, {one, one}), doctest::Contains("NotEtaleInclusion"),
                         Error);
}

TEST_CASE("etale steps compose") {
    const EtaleStep a = EtaleStep::identity(Q()).then_adjoin(Q().from_int(2), 2, "s");
    const EtaleStep b = EtaleStep::identity(a.target()).then_adjoin(a.root(0), 2, "u");
    const EtaleStep ab = a.then(b);
    CHECK(ab.adjunctions().size() == 2);
    CHECK(ab.root(1).pow(4) == ab.target().from_int(2));
    CHECK_THROWS_WITH_AS(b.then(a), doctest::Contains("RingMismatch"), Error);
}
