#include "hopfgal/bundles.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hopfgal {

HopfPtr sweedler_h4_shared(const Field& k) {
    static std::mutex mutex;
    static std::map<const void*, HopfPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k.data()];
    if (!slot) slot = share(sweedler_h4(k));
    return slot;
}

namespace {

constexpr std::size_t kOne = 0, kX = 1, kY = 2, kXY = 3;
const char* const kWords[4] = {"", "x", "y", "xy"};

void check_params(const AbgParams& p) {
    if (p.beta.ring() != p.base() || p.gamma.ring() != p.base())
        throw Error(ErrorKind::RingMismatch, "alpha, beta, gamma must lie in one ring");
}

using WordPoly = std::map<std::string, BaseElement>;

void add(WordPoly& poly, const std::string& w, const BaseElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = poly.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) poly.erase(it);
    }
}

// One rewrite at position `pos` (which must start a left-hand side).
WordPoly rewrite_at(const AbgParams& p, const std::string& w, std::size_t pos, const BaseElement& c) {
    WordPoly out;
    const std::string pre = w.substr(0, pos), post = w.substr(pos + 2);
    const std::string lhs = w.substr(pos, 2);
    if (lhs == "xx") add(out, pre + post, c * p.alpha);
    else if (lhs == "yy") add(out, pre + post, c * p.beta);
    else {  // yx
        add(out, pre + post, c * p.gamma);
        add(out, pre + "xy" + post, -c);
    }
    return out;
}

std::optional<std::size_t> redex(const std::string& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const std::string s = w.substr(i, 2);
        if (s == "xx" || s == "yy" || s == "yx") return i;
    }
    return std::nullopt;
}

WordPoly normalize(const AbgParams& p, WordPoly poly) {
    for (;;) {
        auto it = std::find_if(poly.begin(), poly.end(), [](const auto& e) { return redex(e.first).has_value(); });
        if (it == poly.end()) return poly;
        const std::string w = it->first;
        const BaseElement c = it->second;
        poly.erase(it);
        for (const auto& [w2, c2] : rewrite_at(p, w, *redex(w), c)) add(poly, w2, c2);
    }
}

RVec to_coords(const AbgParams& p, const WordPoly& poly) {
    RVec v(4, p.base().zero());
    for (const auto& [w, c] : poly) {
        std::size_t i = 0;
        while (i < 4 && w != kWords[i]) ++i;
        if (i == 4) throw Error(ErrorKind::SchemaError, "word '" + w + "' is not reduced");
        v[i] += c;
    }
    return v;
}

}  // namespace

RVec abg_reduce_word(const AbgParams& p, std::string_view word) {
    check_params(p);
    for (char ch : word)
        if (ch != 'x' && ch != 'y') throw Error(ErrorKind::BadScalar, "words use only x and y");
    WordPoly poly;
    add(poly, std::string(word), p.base().one());
    return to_coords(p, normalize(p, std::move(poly)));
}

bool abg_locally_confluent(const AbgParams& p) {
    check_params(p);
    for (const char* overlap : {"xxx", "yyy", "yyx", "yxx"}) {
        const std::string w = overlap;
        const WordPoly left = normalize(p, rewrite_at(p, w, 0, p.base().one()));
        const WordPoly right = normalize(p, rewrite_at(p, w, 1, p.base().one()));
        if (to_coords(p, left) != to_coords(p, right)) return false;
    }
    return true;
}

ComoduleAlgebra abg_bundle(const AbgParams& p) {
    check_params(p);
    if (!is_unit(p.alpha))
        throw Error(ErrorKind::NonUnitAlpha, "alpha = " + p.alpha.to_string() + " is not a unit of " + p.base().describe());
    const BaseRing& c = p.base();
    ComoduleStructure s;
    s.hopf = sweedler_h4_shared(c.field());
    s.base = c;
    s.labels = {"1", "x", "y", "xy"};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const RVec v = abg_reduce_word(p, std::string(kWords[i]) + kWords[j]);
            for (std::size_t k = 0; k < 4; ++k)
                if (!v[k].is_zero()) s.mult.push_back(ComodEntry{i, j, k, v[k]});
        }
    s.unit = {c.one(), c.zero(), c.zero(), c.zero()};
    // H4 basis: 1, X, Y, XY
    s.coaction = {ComodEntry{kOne, kOne, 0, c.one()}, ComodEntry{kX, kX, 1, c.one()}, ComodEntry{kY, kOne, 2, c.one()},
                  ComodEntry{kY, kY, 1, c.one()}};
    // rho(xy) = rho(x) rho(y), computed in A (x) H
    const ComoduleAlgebra partial(s);
    const RVec rho_xy = partial.multiply_tensor(partial.coaction(kX), partial.coaction(kY));
    for (std::size_t q = 0; q < rho_xy.size(); ++q)
        if (!rho_xy[q].is_zero()) s.coaction.push_back(ComodEntry{kXY, q / 4, q % 4, rho_xy[q]});
    return ComoduleAlgebra(std::move(s));
}

HModuleMap abg_cleaving_map(const ComoduleAlgebra& a) {
    HModuleMap g;
    for (std::size_t i = 0; i < 4; ++i) g.values.push_back(a.basis(i));
    return g;
}

CleavingMap abg_cleaving(const ComoduleAlgebra& a) { return check_cleaving(a, abg_cleaving_map(a)); }

Matrix abg_generator_map(const ComoduleAlgebra& b, const RVec& img_x, const RVec& img_y) {
    Matrix m(b.base(), 4, 4);
    m.set_column(kOne, b.unit());
    m.set_column(kX, img_x);
    m.set_column(kY, img_y);
    m.set_column(kXY, b.multiply(img_x, img_y));
    return m;
}

std::optional<Matrix> abg_search_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
    const BaseRing& c = b.base();
    if (!c.is_field() || a.base() != c) throw Error(ErrorKind::BaseNotField, "search runs over a finite ground field");
    if (a.rank() != 4 || b.rank() != 4) throw Error(ErrorKind::RankMismatch, "abg bundles have rank 4");
    if (!c.field().size()) throw Error(ErrorKind::Unsupported, "search needs a finite field");
    RVec elements;
    for (const Scalar& s : c.field().elements()) elements.push_back(c.constant(s));
    const std::size_t q = elements.size();
    const RVec& xx = a.product(kX, kX);
    std::vector<RVec> candidates;
    for (std::size_t code = 0; code < q * q * q * q; ++code) {
        RVec v(4, c.zero());
        for (std::size_t i = 0, r = code; i < 4; ++i, r /= q) v[i] = elements[r % q];
        candidates.push_back(std::move(v));
    }
    // x^2 usually involves only 1 and x, so img_x can be filtered on its own.
    const bool x_only = xx[kY].is_zero() && xx[kXY].is_zero();
    for (const RVec& img_x : candidates) {
        if (x_only) {
            RVec want(4, c.zero());
            for (std::size_t i = 0; i < 4; ++i) want[i] = xx[kOne] * b.unit()[i] + xx[kX] * img_x[i];
            if (b.multiply(img_x, img_x) != want) continue;
        }
        for (const RVec& img_y : candidates) {
            Matrix m = abg_generator_map(b, img_x, img_y);
            if (m * xx != b.multiply(img_x, img_x)) continue;
            if (check_iso(a, b, m).passed()) return m;
        }
    }
    return std::nullopt;
}

CriterionResult abg_triviality_criterion(const AbgParams& p) {
    check_params(p);
    const BaseRing& c = p.base();
    if (!c.is_field()) throw Error(ErrorKind::BaseNotField, "the criterion applies over the ground field only");
    const Field& k = c.field();
    if (!k.is_invertible_integer(2)) throw Error(ErrorKind::CharTwo, "characteristic 2");
    const Scalar alpha = *p.alpha.constant_value(), beta = *p.beta.constant_value(), gamma = *p.gamma.constant_value();
    if (alpha.is_zero()) throw Error(ErrorKind::NonUnitAlpha, "alpha = 0");
    for (const Scalar& s : square_roots(alpha)) {
        const Scalar t = gamma / (k.from_int(2) * s);
        if (t * t == beta) return CriterionResult{true, s, t};
    }
    return CriterionResult{};
}

Matrix abg_criterion_iso(const ComoduleAlgebra& trivial_target, const BaseElement& s, const BaseElement& t) {
    const ComoduleAlgebra& b = trivial_target;
    RVec img_x = b.zero(), img_y = b.zero();
    img_x[kX] = s;
    img_y[kY] = b.base().one();
    img_y[kX] = t;
    return abg_generator_map(b, img_x, img_y);
}

SqrtReduction sqrt_reduction(const AbgParams& p, const BaseElement& s) {
    check_params(p);
    if (s.ring() != p.base() || s * s != p.alpha)
        throw Error(ErrorKind::BadRoot, s.to_string() + " is not a square root of " + p.alpha.to_string());
    const BaseElement s_inv = inverse(s);
    ComoduleAlgebra target = abg_bundle(AbgParams{p.base().one(), p.beta, p.gamma * s_inv});
    RVec img_x = target.zero(), img_y = target.zero();
    img_x[kX] = s;
    img_y[kY] = p.base().one();
    Matrix iso = abg_generator_map(target, img_x, img_y);
    return SqrtReduction{std::move(target), std::move(iso)};
}

KummerBundle kummer_bundle(int n, const Scalar& q) {
    const Field& k = q.field();
    if (n < 1) throw Error(ErrorKind::SchemaError, "N must be positive");
    if (!k.is_invertible_integer(n)) throw Error(ErrorKind::CharDivides, std::to_string(n) + " is zero in " + k.name());
    const auto order = multiplicative_order(q, n);
    if (!order || *order != n)
        throw Error(ErrorKind::BadRootOfUnity, q.to_string() + " does not have order " + std::to_string(n));
    const BaseRing c = BaseRing(k).with_laurent("z");
    const BaseElement z = c.gen(0);
    const std::size_t N = n;

    ComoduleStructure s;
    s.hopf = share(dual_hopf(group_algebra_cyclic(k, n)));
    s.base = c;
    for (std::size_t j = 0; j < N; ++j) s.labels.push_back(j == 0 ? "1" : j == 1 ? "w" : "w^" + std::to_string(j));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i + j < N) s.mult.push_back(ComodEntry{i, j, i + j, c.one()});
            else s.mult.push_back(ComodEntry{i, j, i + j - N, z});
        }
    s.unit.assign(N, c.zero());
    s.unit[0] = c.one();
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t g = 0; g < N; ++g) s.coaction.push_back(ComodEntry{j, j, g, c.constant(q.pow(static_cast<long>(g * j)))});
    return KummerBundle{ComoduleAlgebra(std::move(s)), z, n};
}

}  // namespace hopfgal
