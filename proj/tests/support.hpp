#pragma once

// Seeded random generators for the property tests.

#include <algorithm>
#include <random>

#include "hopfgal/homotopy.hpp"

namespace testing {

using namespace hopfgal;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))]; }

    Scalar scalar(const Field& k) {
        switch (k.kind()) {
        case FieldKind::Rational: return Scalar::make_rational(k, mpq_class(range(-9, 9), range(1, 4)));
        case FieldKind::Prime: return Scalar::make_residue(k, range(0, k.prime() - 1));
        default: {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < k.degree(); ++i) c.push_back(scalar(k.base()));
            return Scalar::make_extension(k, std::move(c));
        }
        }
    }

    Scalar nonzero_scalar(const Field& k) {
        for (;;) {
            Scalar s = scalar(k);
            if (!s.is_zero()) return s;
        }
    }

    Monomial monomial(const BaseRing& r, int max_deg) {
        Monomial m{};
        for (std::size_t g = 0; g < r.num_generators(); ++g) {
            const Generator& gen = r.generator(g);
            switch (gen.kind) {
            case GeneratorKind::Free: m[g] = static_cast<std::int32_t>(range(0, max_deg)); break;
            case GeneratorKind::Laurent: m[g] = static_cast<std::int32_t>(range(-max_deg, max_deg)); break;
            case GeneratorKind::Root: m[g] = static_cast<std::int32_t>(range(0, gen.order - 1)); break;
            }
        }
        return m;
    }

    BaseElement element(const BaseRing& r, int max_terms = 3, int max_deg = 2) {
        std::vector<Term> terms;
        const long n = range(0, max_terms);
        for (long i = 0; i < n; ++i) terms.push_back(Term{monomial(r, max_deg), scalar(r.field())});
        return BaseElement::from_terms(r, std::move(terms));
    }

    // Products of nonzero constants, Laurent monomials and root generators.
    BaseElement unit(const BaseRing& r) {
        BaseElement u = r.constant(nonzero_scalar(r.field()));
        for (std::size_t g = 0; g < r.num_generators(); ++g) {
            const Generator& gen = r.generator(g);
            if (gen.kind == GeneratorKind::Laurent) u *= r.gen(g).pow(range(-2, 2));
            else if (gen.kind == GeneratorKind::Root && coin()) u *= r.gen(g);
        }
        return u;
    }

    AbgParams abg(const BaseRing& r) { return AbgParams{unit(r), element(r), element(r)}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
