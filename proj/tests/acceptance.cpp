// Acceptance suite: one line per criterion, exact arithmetic, pinned time limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "hopfgal/document.hpp"
#include "support.hpp"

using namespace hopfgal;
using testing::Gen;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int n, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= limit) {
        out.ok = false;
        out.detail = "time limit exceeded";
    }
    if (!out.ok) ++failures;
    std::printf("criterion %d: %s  %.3fs (limit %gs)%s%s\n", n, out.ok ? "PASS" : "FAIL", secs, limit,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

const BaseRing& Q() {
    static const BaseRing q(Field::rationals());
    return q;
}

AbgParams abg(const BaseRing& r, long a, long b, long c) { return {r.from_int(a), r.from_int(b), r.from_int(c)}; }

// ---- Hopf axioms from dense tables ----------------------------------------

bool hopf_axioms_oracle(const HopfAlgebra& h, std::string& why) {
    const std::size_t d = h.dim();
    const Field& k = h.field();
    std::vector<std::vector<Vec>> m(d, std::vector<Vec>(d, Vec(d, k.zero())));
    std::vector<Vec> delta(d, Vec(d * d, k.zero()));
    const HopfStructure s = h.structure();
    for (const TensorEntry& e : s.mult) m[e.i][e.j][e.k] += e.c;
    for (const TensorEntry& e : s.comult) delta[e.i][e.j * d + e.k] += e.c;
    auto mul = [&](const Vec& a, const Vec& b) {
        Vec out(d, k.zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!a[i].is_zero() && !b[j].is_zero())
                    for (std::size_t l = 0; l < d; ++l) out[l] += a[i] * b[j] * m[i][j][l];
        return out;
    };
    auto e = [&](std::size_t i) {
        Vec v(d, k.zero());
        v[i] = k.one();
        return v;
    };
    std::vector<Vec> antipode(d);
    for (std::size_t i = 0; i < d; ++i) antipode[i] = h.antipode(e(i));
    for (std::size_t a = 0; a < d; ++a) {
        if (mul(s.unit, e(a)) != e(a) || mul(e(a), s.unit) != e(a)) return why = "unit", false;
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (mul(mul(e(a), e(b)), e(c)) != mul(e(a), mul(e(b), e(c)))) return why = "associativity", false;
        // counit and coassociativity on a
        Vec left(d, k.zero()), right(d, k.zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                left[j] += s.counit[i] * delta[a][i * d + j];
                right[i] += s.counit[j] * delta[a][i * d + j];
            }
        if (left != e(a) || right != e(a)) return why = "counit", false;
        std::vector<Scalar> l3(d * d * d, k.zero()), r3(d * d * d, k.zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Scalar& c = delta[a][i * d + j];
                if (c.is_zero()) continue;
                for (std::size_t p = 0; p < d * d; ++p) {
                    l3[(p / d) * d * d + (p % d) * d + j] += c * delta[i][p];
                    r3[i * d * d + p] += c * delta[j][p];
                }
            }
        if (l3 != r3) return why = "coassociativity", false;
        // antipode: S(a1) a2 = a1 S(a2) = eps(a) 1
        Vec sl(d, k.zero()), sr(d, k.zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Scalar& c = delta[a][i * d + j];
                if (c.is_zero()) continue;
                const Vec x = mul(antipode[i], e(j)), y = mul(e(i), antipode[j]);
                for (std::size_t l = 0; l < d; ++l) {
                    sl[l] += c * x[l];
                    sr[l] += c * y[l];
                }
            }
        Vec target = s.unit;
        for (auto& t : target) t *= s.counit[a];
        if (sl != target || sr != target) return why = "antipode on " + h.label(a), false;
        // Delta multiplicative and eps multiplicative
        for (std::size_t b = 0; b < d; ++b) {
            const Vec ab = mul(e(a), e(b));
            Vec lhs(d * d, k.zero());
            Scalar eps = k.zero();
            for (std::size_t l = 0; l < d; ++l) {
                eps += ab[l] * s.counit[l];
                if (!ab[l].is_zero())
                    for (std::size_t p = 0; p < d * d; ++p) lhs[p] += ab[l] * delta[l][p];
            }
            if (eps != s.counit[a] * s.counit[b]) return why = "counit multiplicative", false;
            Vec rhs(d * d, k.zero());
            for (std::size_t p = 0; p < d * d; ++p)
                for (std::size_t q = 0; q < d * d; ++q) {
                    const Scalar c = delta[a][p] * delta[b][q];
                    if (c.is_zero()) continue;
                    const Vec& u = m[p / d][q / d];
                    const Vec& v = m[p % d][q % d];
                    for (std::size_t x = 0; x < d; ++x)
                        if (!u[x].is_zero())
                            for (std::size_t y = 0; y < d; ++y) rhs[x * d + y] += c * u[x] * v[y];
                }
            if (lhs != rhs) return why = "bialgebra", false;
        }
    }
    return true;
}

// ---- determinant over Q by elimination ------------------------------------

mpq_class rational_det(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto c = a(i, j).constant_value();
            if (!c) throw std::runtime_error("non-constant entry");
            m[i][j] = c->rational();
        }
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const mpq_class f = m[r][c] / m[c][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

// 4x4 determinant by cofactor expansion over a finite field
Scalar det4(const std::array<std::array<Scalar, 4>, 4>& a) {
    std::function<Scalar(std::vector<std::size_t>, std::size_t)> minor = [&](std::vector<std::size_t> cols, std::size_t row) {
        if (cols.size() == 1) return a[row][cols[0]];
        Scalar sum = a[row][cols[0]].field().zero();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::vector<std::size_t> rest = cols;
            rest.erase(rest.begin() + static_cast<long>(i));
            const Scalar term = a[row][cols[i]] * minor(rest, row + 1);
            sum = i % 2 == 0 ? sum + term : sum - term;
        }
        return sum;
    };
    return minor({0, 1, 2, 3}, 0);
}

ComoduleAlgebra with_coaction(const ComoduleAlgebra& a, std::vector<ComodEntry> coaction) {
    ComoduleStructure s = a.structure();
    s.coaction = std::move(coaction);
    return ComoduleAlgebra(std::move(s));
}

struct Run {
    int code;
    std::string output;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(HOPFGAL_EXE) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string str(const Scalar& s) { return s.to_string(); }

}  // namespace

int main() {
    criterion(1, 1.0, [](Outcome& o) {
        std::vector<std::pair<std::string, HopfAlgebra>> algebras;
        algebras.emplace_back("H4/Q", sweedler_h4(Field::rationals()));
        algebras.emplace_back("taft(3,2,F7)", taft(3, Field::prime(7).from_int(2)));
        algebras.emplace_back("taft(4,2,F5)", taft(4, Field::prime(5).from_int(2)));
        for (int n = 1; n <= 6; ++n)
            algebras.emplace_back("dual k[C" + std::to_string(n) + "]", dual_hopf(group_algebra_cyclic(Field::rationals(), n)));
        for (const auto& [name, h] : algebras) {
            const Report r = verify_hopf(h);
            o.require(r.passed(), name + " fails " + (r.first_failure() ? r.first_failure()->name : ""));
            std::string why;
            o.require(hopf_axioms_oracle(h, why), name + ": oracle rejects " + why);
        }
        o.detail = o.ok ? std::to_string(algebras.size()) + " algebras" : o.detail;
    });

    criterion(2, 5.0, [](Outcome& o) {
        const ComoduleAlgebra triv = trivial_bundle(Q(), sweedler_h4_shared(Field::rationals()));
        std::vector<ComoduleAlgebra> cases = {triv};
        Gen g(2001);
        for (int i = 0; i < 50; ++i) {
            const Field& k = Field::rationals();
            cases.push_back(abg_bundle(AbgParams{Q().constant(g.nonzero_scalar(k)), Q().constant(g.scalar(k)), Q().constant(g.scalar(k))}));
        }
        for (const ComoduleAlgebra& a : cases) {
            const Matrix m = canonical_matrix(a);
            o.require(m.rows() == 16 && m.cols() == 16, "canonical matrix is not 16x16");
            const mpq_class det = rational_det(m);
            const GaloisVerdict v = is_galois(a);
            o.require(v.galois() && v.det && v.det->constant_value() && v.det->constant_value()->rational() == det && det != 0,
                      "determinant disagrees with elimination or is not a unit");
            o.require(verify_bundle(a).passed(), "verify_bundle rejects a Galois bundle");
        }
        // rho(y) = y (x) X: the grading puts y with the group-like
        const ComoduleAlgebra base = abg_bundle(abg(Q(), 1, 0, 0));
        const ComoduleAlgebra bad = with_coaction(base, {{0, 0, 0, Q().one()}, {1, 1, 1, Q().one()}, {2, 2, 1, Q().one()},
                                                         {3, 3, 0, Q().one()}});
        o.require(verify_comodule_algebra(bad).passed(), "mis-graded control is not a comodule algebra");
        o.require(rational_det(canonical_matrix(bad)) == 0, "mis-graded determinant is nonzero");
        o.require(!is_galois(bad).galois() && !verify_bundle(bad).passed(), "mis-graded coaction accepted");
    });

    criterion(3, 10.0, [](Outcome& o) {
        Gen g(3001);
        int done = 0;
        for (const Field& k : {Field::rationals(), Field::prime(7)}) {
            const BaseRing c(k);
            for (int i = 0; i < 25; ++i) {
                const AbgParams p{c.constant(g.nonzero_scalar(k)), c.constant(g.scalar(k)), c.constant(g.scalar(k))};
                const ComoduleAlgebra a = abg_bundle(p);
                const CleavingMap cm = abg_cleaving(a);
                const HModuleMap unit = convolution_unit(a);
                o.require(convolve(a, cm.gamma, cm.inverse) == unit && convolve(a, cm.inverse, cm.gamma) == unit,
                          "cleaving inverse is one-sided");
                const Cocycle coc = extract_cocycle(a, cm);
                o.require(coc.sigma(1, 1) == p.alpha, "sigma(X,X) != alpha");
                const ComoduleAlgebra tw = twisted_product(c, a.hopf_ptr(), coc.sigma);
                RVec alpha_one = tw.zero();
                alpha_one[0] = p.alpha;
                o.require(tw.multiply(tw.basis(1), tw.basis(1)) == alpha_one, "(1#X)^2 != alpha in the twisted product");
                Matrix phi(c, 4, 4);
                for (std::size_t j = 0; j < 4; ++j) phi.set_column(j, cm.gamma.values[j]);
                o.require(check_iso(tw, a, phi).passed(), "c#h -> c gamma(h) is not an isomorphism");
                ++done;
            }
        }
        if (o.ok) o.detail = std::to_string(done) + " round trips";
    });

    criterion(4, 1.0, [](Outcome& o) {
        for (long gamma = 1; gamma <= 5; ++gamma)
            o.require(!abg_triviality_criterion(abg(Q(), 1, 0, gamma)).trivial, "(1,0," + std::to_string(gamma) + ") reported trivial");
        const AbgParams p = abg(Q(), 4, 1, 4);
        const CriterionResult r = abg_triviality_criterion(p);
        o.require(r.trivial && r.s && r.t && *r.s == Field::rationals().from_int(2) && *r.t == Field::rationals().one(),
                  "(4,1,4) not reported trivial with (s,t) = (2,1)");
        // 4 = 2^2, 1 = 1^2, 4 = 2*2*1
        const ComoduleAlgebra t = abg_bundle(abg(Q(), 1, 0, 0));
        o.require(check_iso(abg_bundle(p), t, abg_criterion_iso(t, Q().from_int(2), Q().one())).passed(), "iso not certified");
    });

    criterion(5, 60.0, [](Outcome& o) {
        const Field f3 = Field::prime(3);
        const BaseRing k(f3);
        const ComoduleAlgebra t = abg_bundle(abg(k, 1, 0, 0));
        std::vector<Vec> vectors;
        for (int code = 0; code < 81; ++code) {
            Vec v;
            for (int c = code, i = 0; i < 4; ++i, c /= 3) v.push_back(f3.from_int(c % 3));
            vectors.push_back(v);
        }
        auto lift = [&](const Vec& v) {
            RVec r;
            for (const Scalar& s : v) r.push_back(k.constant(s));
            return r;
        };
        auto coact = [&](const RVec& v) {
            RVec out(16, k.zero());
            for (std::size_t i = 0; i < 4; ++i) {
                const RVec r = t.coaction(i);
                for (std::size_t p = 0; p < 16; ++p) out[p] += v[i] * r[p];
            }
            return out;
        };
        auto tensor = [&](const RVec& a, std::size_t h) {
            RVec out(16, k.zero());
            for (std::size_t i = 0; i < 4; ++i) out[i * 4 + h] = a[i];
            return out;
        };
        int trivial = 0;
        for (long a = 1; a <= 2; ++a)
            for (long b = 0; b < 3; ++b)
                for (long c = 0; c < 3; ++c) {
                    const AbgParams p = abg(k, a, b, c);
                    bool found = false;
                    for (const Vec& vx : vectors) {
                        const RVec x = lift(vx);
                        if (t.multiply(x, x) != RVec{p.alpha, k.zero(), k.zero(), k.zero()}) continue;
                        if (coact(x) != tensor(x, 1)) continue;
                        for (const Vec& vy : vectors) {
                            const RVec y = lift(vy);
                            if (t.multiply(y, y) != RVec{p.beta, k.zero(), k.zero(), k.zero()}) continue;
                            RVec anti = t.multiply(x, y);
                            const RVec yx = t.multiply(y, x);
                            for (std::size_t i = 0; i < 4; ++i) anti[i] += yx[i];
                            if (anti != RVec{p.gamma, k.zero(), k.zero(), k.zero()}) continue;
                            RVec expect = tensor(t.basis(0), 2);
                            const RVec yX = tensor(y, 1);
                            for (std::size_t i = 0; i < 16; ++i) expect[i] += yX[i];
                            if (coact(y) != expect) continue;
                            const RVec xy = t.multiply(x, y);
                            std::array<std::array<Scalar, 4>, 4> m;
                            for (std::size_t r = 0; r < 4; ++r) {
                                m[r][0] = r == 0 ? f3.one() : f3.zero();
                                m[r][1] = *x[r].constant_value();
                                m[r][2] = *y[r].constant_value();
                                m[r][3] = *xy[r].constant_value();
                            }
                            if (!det4(m).is_zero()) found = true;
                        }
                    }
                    const bool verdict = abg_triviality_criterion(p).trivial;
                    const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                    o.require(verdict == found, name + ": criterion disagrees with brute force");
                    o.require(abg_search_iso(abg_bundle(p), t).has_value() == found, name + ": library search disagrees");
                    trivial += found;
                }
        if (o.ok) o.detail = std::to_string(trivial) + " of 18 trivial";
    });

    criterion(6, 10.0, [](Outcome& o) {
        const AbgParams p = abg(Q(), 3, 5, 7);
        const WitnessChain chain = cleft_trivialization_witness(p);
        o.require(chain.links.size() == 1 && chain.bundles.size() == 2, "unexpected chain shape");
        const HomotopyWitness& w = chain.links[0].witness;
        o.require(w.step.adjunctions().size() == 1, "expected one root adjunction");
        const BaseRing& cbar = w.step.target();
        const BaseElement s = w.step.root(0);
        o.require(s * s == cbar.from_int(3), "adjoined root does not square to 3");
        const AbgParams pbar{cbar.from_int(3), cbar.from_int(5), cbar.from_int(7)};
        const SqrtReduction red = sqrt_reduction(pbar, s);
        o.require(red.target == abg_bundle(AbgParams{cbar.one(), cbar.from_int(5), cbar.from_int(7) * inverse(s)}),
                  "reduction target is not (1,5,7/s)");
        o.require(check_iso(abg_bundle(pbar), red.target, red.iso).passed(), "reduction iso not certified");
        const TExtension ext = extend_with_t(cbar);
        o.require(push_forward(ext.at1, w.bundle) == red.target, "[1]_* of the family is not (1,5,7/s)");
        o.require(push_forward(ext.at0, w.bundle) == abg_bundle(abg(cbar, 1, 0, 0)), "[0]_* of the family is not (1,0,0)");
        o.require(verify_witness(w, chain.bundles[1], chain.bundles[0]).passed(), "witness rejected");
        o.require(verify_chain(chain).passed(), "chain rejected");
        o.require(chain.bundles[1] == abg_bundle(abg(Q(), 1, 0, 0)), "chain does not end at the trivial bundle");
    });

    criterion(7, 5.0, [](Outcome& o) {
        const std::vector<KummerBundle> ks = {kummer_bundle(2, Field::rationals().from_int(-1)),
                                              kummer_bundle(3, Field::prime(7).from_int(2))};
        for (const KummerBundle& kb : ks) {
            const std::string name = "N=" + std::to_string(kb.n);
            o.require(verify_bundle(kb.algebra).passed(), name + ": verify_bundle rejects");
            const HomotopyWitness w = kummer_trivialization_witness(kb);
            o.require(w.step.adjunctions().size() == 1, name + ": expected one root adjunction");
            o.require(w.step.root(0).pow(kb.n) == w.step.map()(kb.z), name + ": adjoined root is not an N-th root of z");
            const ComoduleAlgebra t = trivial_bundle(kb.algebra.base(), kb.algebra.hopf_ptr());
            o.require(verify_witness(w, kb.algebra, t).passed(), name + ": witness rejected");
        }
    });

    criterion(8, 30.0, [](Outcome& o) {
        Gen g(8001);
        const char* kinds[] = {"[0]", "[1]", "root", "x->tx", "random"};
        int counts[5] = {};
        for (int i = 0; i < 50; ++i) {
            const Field k = (i / 5) % 2 == 0 ? Field::rationals() : Field::prime(7);
            const BaseRing kx = BaseRing(k).with_free("x");
            const int kind = i % 5;
            BaseRing source = kx;
            std::optional<BaseMorphism> f;
            if (kind <= 1) {
                const TExtension ext = extend_with_t(kx);
                source = ext.ring;
                f = kind == 0 ? ext.at0 : ext.at1;
            } else if (kind == 2) {
                const RootAdjunction adj = adjoin_root(kx, kx.constant(g.nonzero_scalar(k)), g.coin() ? 2 : 3, "s");
                f = adj.inclusion;
            } else if (kind == 3) {
                const TExtension ext = extend_with_t(kx);
                f = BaseMorphism(kx, ext.ring, {ext.t() * ext.inclusion(kx.gen("x"))});
            } else {
                const BaseRing target = BaseRing(k).with_free("y").with_laurent("z");
                f = BaseMorphism(kx, target, {g.element(target)});
            }
            const AbgParams p = g.abg(source);
            const ComoduleAlgebra a = abg_bundle(p);
            const ComoduleAlgebra b = push_forward(*f, a);
            const std::string name = std::string(kinds[kind]) + " #" + std::to_string(i);
            o.require(verify_bundle(b).passed(), name + ": push-forward is not a verified bundle");
            const GaloisVerdict va = is_galois(a), vb = is_galois(b);
            o.require(va.det && vb.det && *vb.det == (*f)(*va.det), name + ": det' != f(det)");
            const WitnessChain chain = cleft_trivialization_witness(p);
            const HomotopyWitness moved = transport(chain.links[0].witness, *f);
            o.require(verify_witness(moved, push_forward(*f, chain.bundles[1]), b).passed(), name + ": transported witness rejected");
            ++counts[kind];
        }
        if (o.ok) {
            std::ostringstream s;
            for (int j = 0; j < 5; ++j) s << (j ? ", " : "") << kinds[j] << " x" << counts[j];
            o.detail = s.str();
        }
    });

    criterion(9, 20.0, [](Outcome& o) {
        const std::string data = HOPFGAL_TEST_DATA;
        // altered antipode
        Run r = run_cli("verify-hopf " + data + "/bad_antipode.json H4");
        o.require(r.code == 1 && r.output.find("FAIL  antipode") != std::string::npos, "altered antipode: exit " + std::to_string(r.code));
        // non-invertible cleaving: gamma(h) = f(h1) h2 with f = X^*, so gamma(1) = 0
        r = run_cli("cleft check " + data + "/noninvertible_cleaving.json g");
        o.require(r.code == 1 && r.output.find("NotInvertible") != std::string::npos,
                  "non-invertible cleaving: exit " + std::to_string(r.code));
        // non-associative sigma: sigma(X,X) = sigma(X,Y) = 1 breaks the cocycle identity
        const HopfPtr h = sweedler_h4_shared(Field::rationals());
        Matrix sigma(Q(), 4, 4);
        for (std::size_t i = 0; i < 4; ++i) sigma(0, i) = sigma(i, 0) = Q().constant(h->counit(i));
        sigma(1, 1) = sigma(1, 2) = Q().one();
        try {
            twisted_product(Q(), h, sigma);
            o.require(false, "non-associative sigma accepted");
        } catch (const Error& e) {
            o.require(e.kind() == ErrorKind::NotAssociative && is_mathematical(e.kind()), std::string("sigma: ") + e.what());
        }
        // corrupted witness iso in an emitted document
        const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hopfgal_acceptance";
        std::filesystem::create_directories(dir);
        const std::string good = (dir / "thm43.json").string(), bad = (dir / "corrupt.json").string();
        r = run_cli("demo thm43 --emit " + good);
        o.require(r.code == 0, "demo thm43 failed");
        r = run_cli("witness verify " + good);
        o.require(r.code == 0, "emitted witness rejected");
        Json doc;
        std::ifstream(good) >> doc;
        doc["witnesses"]["thm43"]["iso1"][1][1] = "2*s";
        std::ofstream(bad) << doc.dump(1);
        r = run_cli("witness verify " + bad);
        o.require(r.code == 1 && r.output.find("iso1") != std::string::npos, "corrupted witness: exit " + std::to_string(r.code));
        // bad reference is an input error, not a failed verification
        r = run_cli("verify-bundle " + data + "/bad_reference.json A");
        o.require(r.code == 2, "bad reference: exit " + std::to_string(r.code));
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
