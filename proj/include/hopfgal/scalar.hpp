#pragma once

// Exact ground-field arithmetic: the rationals, prime fields F_p and simple
// extensions k0[u]/(f) with f monic (irreducibility is trusted input).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hopfgal/error.hpp"

namespace hopfgal {

class Scalar;

namespace detail {
struct FieldData;
}

enum class FieldKind { Rational, Prime, Extension };

// Handle to an interned, immutable field description. Copies are cheap and
// equality is identity of the interned description.
class Field {
public:
    Field();  // the rationals

    static Field rationals();
    static Field prime(std::int64_t p);
    // modulus: coefficients of the monic polynomial f, lowest degree first,
    // including the leading 1; entries live in `base`.
    static Field extension(const Field& base, std::string variable, const std::vector<Scalar>& modulus);
    // "Q", "F7", "GF(7)", "Q[a]/(a^2-3)", "F5[a]/(a^2-2)"
    static Field parse(std::string_view text);

    FieldKind kind() const noexcept;
    std::int64_t characteristic() const noexcept;
    std::int64_t prime() const noexcept;  // characteristic for F_p towers, 0 for Q towers
    // extension accessors; only valid for FieldKind::Extension
    Field base() const;
    std::size_t degree() const;
    const std::string& variable() const;
    const std::vector<Scalar>& modulus() const;

    const std::string& name() const noexcept;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar generator() const;  // the adjoined u of an extension

    // Number of elements for finite fields.
    std::optional<std::uint64_t> size() const;
    // All elements of a finite field in a fixed order (0 first). Throws Unsupported
    // for infinite fields or fields with more than `limit` elements.
    std::vector<Scalar> elements(std::uint64_t limit = 1u << 20) const;

    // Whether the integer n maps to a unit of this field.
    bool is_invertible_integer(long n) const;

    bool operator==(const Field& other) const noexcept { return data_ == other.data_; }
    bool operator!=(const Field& other) const noexcept { return data_ != other.data_; }

    const detail::FieldData* data() const noexcept { return data_; }

private:
    explicit Field(const detail::FieldData* d) : data_(d) {}
    const detail::FieldData* data_;
};

class Scalar {
public:
    Scalar();  // rational zero
    Scalar(Field field, long v);

    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }
    // Arbitrary but fixed total order, used for canonical sorting only.
    bool less(const Scalar& other) const;

    Scalar inverse() const;  // throws DivisionByZero
    Scalar pow(long e) const;

    // Canonical text; parse(field, to_string()) == *this.
    std::string to_string() const;
    // True when to_string() needs parentheses as a coefficient.
    bool is_compound() const;

    // Representation access.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    const std::vector<Scalar>& coefficients() const { return std::get<std::vector<Scalar>>(value_); }

    static Scalar make_rational(const Field& f, mpq_class q);
    static Scalar make_residue(const Field& f, std::int64_t r);
    static Scalar make_extension(const Field& f, std::vector<Scalar> coeffs);

private:
    void check_same(const Scalar& other) const;

    Field field_;
    std::variant<std::int64_t, mpq_class, std::vector<Scalar>> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Multiplicative order of a nonzero scalar, searched up to `bound`; nullopt if
// no order <= bound exists.
std::optional<long> multiplicative_order(const Scalar& s, long bound);

// All square roots of `a` in its field (zero, one or two of them), smallest
// canonical representative first. Exact integer root extraction over Q,
// exhaustive search over finite fields. Throws Unsupported for infinite
// extension fields.
std::vector<Scalar> square_roots(const Scalar& a);

}  // namespace hopfgal
