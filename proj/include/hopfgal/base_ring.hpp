#pragma once

// Commutative base rings presented as a tower over a ground field k:
//
//   k [g1] [g2] ... [gm]
//
// where each generator is FREE (polynomial variable), LAURENT (invertible
// variable, stored with signed exponents) or ROOT(n, u) with g^n = u for a
// unit u of the subring generated by the earlier generators and n invertible
// in k. Every element has a unique normal form: a sorted list of monomials
// with nonzero coefficients, ROOT exponents kept in [0, n).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

inline constexpr std::size_t kMaxGenerators = 10;

using Monomial = std::array<std::int32_t, kMaxGenerators>;

struct Term {
    Monomial mono{};
    Scalar coef;
};

enum class GeneratorKind { Free, Laurent, Root };

struct Generator {
    std::string name;
    GeneratorKind kind = GeneratorKind::Free;
    int order = 0;               // n, for ROOT
    std::vector<Term> relation;  // u in normal form, for ROOT
};

class BaseElement;

namespace detail {
struct RingData;
}

class BaseRing {
public:
    BaseRing();  // Q
    explicit BaseRing(const Field& k);

    const Field& field() const noexcept;
    std::size_t num_generators() const noexcept;
    const Generator& generator(std::size_t i) const;
    std::optional<std::size_t> find(std::string_view name) const;
    bool is_field() const noexcept { return num_generators() == 0; }

    BaseRing with_free(const std::string& name) const;
    BaseRing with_laurent(const std::string& name) const;
    // Throws NonUnit if u is not a unit, CharDivides if n is zero in k.
    BaseRing with_root(const std::string& name, int n, const BaseElement& u) const;
    // Subring generated by the first `depth` generators.
    BaseRing prefix(std::size_t depth) const;

    // A generator name not yet used by this ring or its field: stem, stem1, stem2, ...
    std::string fresh_name(std::string_view stem) const;

    BaseElement zero() const;
    BaseElement one() const;
    BaseElement constant(const Scalar& c) const;
    BaseElement from_int(long v) const;
    BaseElement gen(std::size_t i) const;
    BaseElement gen(std::string_view name) const;

    // Expressions such as "3/4*x^2 - z^-1 + 2(T+1)"; throws BadScalar.
    BaseElement parse(std::string_view text) const;

    // Canonical description, e.g. "Q[x][z,z^-1][T:T^2=3]".
    const std::string& describe() const noexcept;

    bool operator==(const BaseRing& o) const noexcept { return data_ == o.data_; }
    bool operator!=(const BaseRing& o) const noexcept { return data_ != o.data_; }

    const detail::RingData* data() const noexcept { return data_; }

private:
    explicit BaseRing(const detail::RingData* d) : data_(d) {}
    BaseRing extended(Generator g) const;
    const detail::RingData* data_;
};

class BaseElement {
public:
    BaseElement();  // zero of Q
    explicit BaseElement(const BaseRing& ring) : ring_(ring) {}

    // Normalizes arbitrary (possibly unreduced, repeated) terms.
    static BaseElement from_terms(const BaseRing& ring, std::vector<Term> terms);

    const BaseRing& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    // The coefficient if this element lies in k (zero included).
    std::optional<Scalar> constant_value() const;
    bool involves(std::size_t gen) const;
    // 1 + index of the last generator that occurs (0 for constants).
    std::size_t depth() const;

    BaseElement operator-() const;
    BaseElement& operator+=(const BaseElement& rhs);
    BaseElement& operator-=(const BaseElement& rhs);
    BaseElement& operator*=(const BaseElement& rhs);
    BaseElement& operator*=(const Scalar& rhs);
    friend BaseElement operator+(BaseElement a, const BaseElement& b) { return a += b; }
    friend BaseElement operator-(BaseElement a, const BaseElement& b) { return a -= b; }
    friend BaseElement operator*(const BaseElement& a, const BaseElement& b);
    friend BaseElement operator*(BaseElement a, const Scalar& s) { return a *= s; }
    friend BaseElement operator*(const Scalar& s, BaseElement a) { return a *= s; }

    // a^e; negative e requires a unit (throws NonUnit).
    BaseElement pow(long e) const;

    bool operator==(const BaseElement& o) const;
    bool operator!=(const BaseElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_ring(const BaseElement& o) const;

    BaseRing ring_;
    std::vector<Term> terms_;  // ascending by monomial
};

std::ostream& operator<<(std::ostream& os, const BaseElement& e);

// Inverse if `a` is a unit of its ring. Decision procedure by peeling the
// tower: FREE generators (units are constant in them), LAURENT generators
// (a = sum a_i g^i is a unit iff a_i a_j = 0 for i != j and sum a_i is a unit),
// ROOT generators (determinant of multiplication-by-a over the subring).
std::optional<BaseElement> try_inverse(const BaseElement& a);
bool is_unit(const BaseElement& a);
BaseElement inverse(const BaseElement& a);  // throws NonUnit

// Non-negative integer degrees per generator of a ring.
struct Grading {
    BaseRing ring;
    std::vector<int> degrees;
};

}  // namespace hopfgal
