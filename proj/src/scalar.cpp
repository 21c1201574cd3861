#include "hopfgal/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "hopfgal/detail/expr.hpp"

namespace hopfgal {

namespace detail {

struct FieldData {
    FieldKind kind = FieldKind::Rational;
    std::int64_t p = 0;  // characteristic
    const FieldData* base = nullptr;
    std::string variable;
    std::vector<Scalar> modulus;  // monic, lowest degree first
    std::string name;
};

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::unique_ptr<FieldData>>& registry() {
    static std::map<std::string, std::unique_ptr<FieldData>> r;
    return r;
}

}  // namespace

}  // namespace detail

namespace {

using detail::FieldData;

const FieldData* intern(std::unique_ptr<FieldData> d) {
    std::lock_guard lock(detail::registry_mutex());
    auto& reg = detail::registry();
    auto it = reg.find(d->name);
    if (it != reg.end()) return it->second.get();
    const FieldData* raw = d.get();
    reg.emplace(d->name, std::move(d));
    return raw;
}

const FieldData* rational_data() {
    static const FieldData* q = [] {
        auto d = std::make_unique<FieldData>();
        d->kind = FieldKind::Rational;
        d->p = 0;
        d->name = "Q";
        return intern(std::move(d));
    }();
    return q;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw Error(ErrorKind::DivisionByZero, "residue not invertible");
    return t < 0 ? t + p : t;
}

// Univariate polynomials over a field, lowest degree first, trimmed.
using Poly = std::vector<Scalar>;

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& k) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b, const Field& k) {
    if (a.size() < b.size()) a.resize(b.size(), k.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, const Field& k, Poly& q, Poly& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, k.zero());
    const Scalar lead_inv = b.back().inverse();
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Scalar c = r.back() * lead_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
    trim(q);
}

// Reduce a product modulo a monic modulus and pad to `deg` coefficients.
std::vector<Scalar> reduce_mod(Poly a, const Poly& modulus, const Field& k) {
    const std::size_t deg = modulus.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        const Scalar c = a[i];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * modulus[j];
    }
    a.resize(deg, k.zero());
    return a;
}

// Polynomial context for the expression parser (used for moduli).
struct UPoly {
    Field k;
    Poly c;

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r{a.k, a.c};
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), a.k.zero());
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        trim(r.c);
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) { return UPoly{a.k, poly_mul(a.c, b.c, a.k)}; }
};

struct UPolyContext {
    using value_type = UPoly;
    Field k;
    std::string var;

    UPoly integer(const mpz_class& v) const {
        Poly c{k.from_mpz(v)};
        trim(c);
        return UPoly{k, c};
    }
    UPoly identifier(std::string_view name) const {
        if (name == var) return UPoly{k, {k.zero(), k.one()}};
        // variables of the coefficient field
        UPoly constant{k, {Scalar::parse(k, name)}};
        trim(constant.c);
        return constant;
    }
    UPoly inverse(const UPoly& a) const {
        if (a.c.size() != 1) throw Error(ErrorKind::BadScalar, "only constants can be inverted in a modulus");
        return UPoly{k, {a.c[0].inverse()}};
    }
    UPoly power(const UPoly& a, long e) const {
        if (e < 0) return power(inverse(a), -e);
        UPoly r{k, {k.one()}};
        for (long i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

Scalar embed(const Field& target, const Scalar& s) {
    if (s.field() == target) return s;
    if (target.kind() != FieldKind::Extension)
        throw Error(ErrorKind::FieldMismatch, "cannot embed " + s.field().name() + " into " + target.name());
    std::vector<Scalar> coeffs(target.degree(), target.base().zero());
    coeffs[0] = embed(target.base(), s);
    return Scalar::make_extension(target, std::move(coeffs));
}

struct ScalarContext {
    using value_type = Scalar;
    Field k;

    Scalar integer(const mpz_class& v) const { return k.from_mpz(v); }
    Scalar identifier(std::string_view name) const {
        // walk the tower of extensions looking for the variable
        for (Field f = k; f.kind() == FieldKind::Extension; f = f.base())
            if (f.variable() == name) return embed(k, f.generator());
        throw Error(ErrorKind::BadScalar, "unknown identifier");
    }
    Scalar inverse(const Scalar& a) const { return a.inverse(); }
    Scalar power(const Scalar& a, long e) const { return a.pow(e); }
};

std::string trim_ws(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field() : data_(rational_data()) {}

Field Field::rationals() { return Field(rational_data()); }

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorKind::BadScalar, "F_p requires a prime p < 2^31, got " + std::to_string(p));
    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::Prime;
    d->p = p;
    d->name = "F" + std::to_string(p);
    return Field(intern(std::move(d)));
}

Field Field::extension(const Field& base, std::string variable, const std::vector<Scalar>& modulus) {
    if (modulus.size() < 2) throw Error(ErrorKind::BadScalar, "extension modulus must have degree >= 1");
    for (const auto& c : modulus)
        if (c.field() != base) throw Error(ErrorKind::FieldMismatch, "modulus coefficients must lie in the base field");
    if (!modulus.back().is_one()) throw Error(ErrorKind::BadScalar, "extension modulus must be monic");
    if (variable.empty() || !std::isalpha(static_cast<unsigned char>(variable[0])))
        throw Error(ErrorKind::BadScalar, "bad extension variable '" + variable + "'");
    for (Field f = base; f.kind() == FieldKind::Extension; f = f.base())
        if (f.variable() == variable) throw Error(ErrorKind::BadScalar, "extension variable reused: " + variable);

    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::Extension;
    d->p = base.characteristic();
    d->base = base.data();
    d->variable = variable;
    d->modulus = modulus;
    // canonical name: base[var]/(f)
    std::string poly;
    for (std::size_t i = modulus.size(); i-- > 0;) {
        const Scalar& c = modulus[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? variable : variable + "^" + std::to_string(i));
        std::string coeff = c.to_string();
        bool neg = false;
        if (!c.is_compound() && !coeff.empty() && coeff[0] == '-') {
            neg = true;
            coeff = coeff.substr(1);
        }
        if (c.is_compound()) coeff = "(" + coeff + ")";
        std::string piece;
        if (mono.empty()) piece = coeff;
        else if (coeff == "1") piece = mono;
        else piece = coeff + "*" + mono;
        if (poly.empty()) poly = (neg ? "-" : "") + piece;
        else poly += (neg ? "-" : "+") + piece;
    }
    d->name = base.name() + "[" + variable + "]/(" + poly + ")";
    return Field(intern(std::move(d)));
}

Field Field::parse(std::string_view raw) {
    const std::string text = trim_ws(raw);
    std::size_t pos = 0;
    Field f;
    if (text.rfind("GF(", 0) == 0) {
        const std::size_t close = text.find(')');
        if (close == std::string::npos) throw Error(ErrorKind::BadScalar, "bad field '" + text + "'");
        f = Field::prime(std::stoll(text.substr(3, close - 3)));
        pos = close + 1;
    } else if (!text.empty() && (text[0] == 'F')) {
        std::size_t end = 1;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == 1) throw Error(ErrorKind::BadScalar, "bad field '" + text + "'");
        f = Field::prime(std::stoll(text.substr(1, end - 1)));
        pos = end;
    } else if (!text.empty() && text[0] == 'Q') {
        f = Field::rationals();
        pos = 1;
    } else {
        throw Error(ErrorKind::BadScalar, "bad field '" + text + "'");
    }
    // extensions: [var]/(poly)
    while (pos < text.size()) {
        if (text[pos] != '[') throw Error(ErrorKind::BadScalar, "bad field '" + text + "'");
        const std::size_t close = text.find(']', pos);
        if (close == std::string::npos || close + 2 >= text.size() || text[close + 1] != '/' || text[close + 2] != '(')
            throw Error(ErrorKind::BadScalar, "bad field '" + text + "'");
        const std::string var = trim_ws(text.substr(pos + 1, close - pos - 1));
        int depth = 0;
        std::size_t end = close + 2;
        for (; end < text.size(); ++end) {
            if (text[end] == '(') ++depth;
            if (text[end] == ')' && --depth == 0) break;
        }
        if (end >= text.size()) throw Error(ErrorKind::BadScalar, "unbalanced parentheses in '" + text + "'");
        const std::string poly_text = text.substr(close + 3, end - close - 3);
        UPolyContext ctx{f, var};
        UPoly poly = detail::ExprParser<UPolyContext>(poly_text, ctx).parse();
        f = Field::extension(f, var, poly.c);
        pos = end + 1;
    }
    return f;
}

FieldKind Field::kind() const noexcept { return data_->kind; }
std::int64_t Field::characteristic() const noexcept { return data_->p; }
std::int64_t Field::prime() const noexcept { return data_->p; }

Field Field::base() const {
    if (kind() != FieldKind::Extension) throw Error(ErrorKind::Unsupported, name() + " is not an extension");
    return Field(data_->base);
}
std::size_t Field::degree() const { return kind() == FieldKind::Extension ? data_->modulus.size() - 1 : 1; }
const std::string& Field::variable() const { return data_->variable; }
const std::vector<Scalar>& Field::modulus() const { return data_->modulus; }
const std::string& Field::name() const noexcept { return data_->name; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Scalar Field::from_mpz(const mpz_class& v) const {
    switch (kind()) {
        case FieldKind::Rational: return Scalar::make_rational(*this, mpq_class(v));
        case FieldKind::Prime: {
            mpz_class r = v % data_->p;
            if (r < 0) r += data_->p;
            return Scalar::make_residue(*this, r.get_si());
        }
        case FieldKind::Extension: {
            std::vector<Scalar> c(degree(), base().zero());
            c[0] = base().from_mpz(v);
            return Scalar::make_extension(*this, std::move(c));
        }
    }
    return {};
}

Scalar Field::generator() const {
    if (kind() != FieldKind::Extension) throw Error(ErrorKind::Unsupported, name() + " has no generator");
    std::vector<Scalar> c(degree(), base().zero());
    if (degree() == 1) {
        // u = -f0
        c[0] = -data_->modulus[0];
    } else {
        c[1] = base().one();
    }
    return Scalar::make_extension(*this, std::move(c));
}

std::optional<std::uint64_t> Field::size() const {
    switch (kind()) {
        case FieldKind::Rational: return std::nullopt;
        case FieldKind::Prime: return static_cast<std::uint64_t>(data_->p);
        case FieldKind::Extension: {
            auto b = base().size();
            if (!b) return std::nullopt;
            std::uint64_t n = 1;
            for (std::size_t i = 0; i < degree(); ++i) {
                if (n > (std::uint64_t{1} << 40) / *b) return std::uint64_t{1} << 40;
                n *= *b;
            }
            return n;
        }
    }
    return std::nullopt;
}

std::vector<Scalar> Field::elements(std::uint64_t limit) const {
    const auto n = size();
    if (!n || *n > limit) throw Error(ErrorKind::Unsupported, "cannot enumerate the elements of " + name());
    std::vector<Scalar> out;
    out.reserve(*n);
    if (kind() == FieldKind::Prime) {
        for (std::int64_t r = 0; r < data_->p; ++r) out.push_back(Scalar::make_residue(*this, r));
        return out;
    }
    const std::vector<Scalar> base_elems = base().elements(limit);
    std::vector<std::size_t> digits(degree(), 0);
    for (std::uint64_t idx = 0; idx < *n; ++idx) {
        std::vector<Scalar> c;
        c.reserve(degree());
        for (std::size_t d : digits) c.push_back(base_elems[d]);
        out.push_back(Scalar::make_extension(*this, std::move(c)));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < base_elems.size()) break;
            digits[i] = 0;
        }
    }
    return out;
}

bool Field::is_invertible_integer(long n) const {
    if (characteristic() == 0) return n != 0;
    return n % characteristic() != 0;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(), value_(mpq_class(0)) {}

Scalar::Scalar(Field field, long v) : Scalar(field.from_int(v)) {}

Scalar Scalar::make_rational(const Field& f, mpq_class q) {
    Scalar s;
    s.field_ = f;
    q.canonicalize();
    s.value_ = std::move(q);
    return s;
}

Scalar Scalar::make_residue(const Field& f, std::int64_t r) {
    Scalar s;
    s.field_ = f;
    s.value_ = r;
    return s;
}

Scalar Scalar::make_extension(const Field& f, std::vector<Scalar> coeffs) {
    Scalar s;
    s.field_ = f;
    s.value_ = std::move(coeffs);
    return s;
}

void Scalar::check_same(const Scalar& other) const {
    if (field_ != other.field_)
        throw Error(ErrorKind::FieldMismatch, "scalars from " + field_.name() + " and " + other.field_.name());
}

bool Scalar::is_zero() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_) == 0;
        case 1: return sgn(std::get<1>(value_)) == 0;
        default:
            for (const auto& c : std::get<2>(value_))
                if (!c.is_zero()) return false;
            return true;
    }
}

bool Scalar::is_one() const {
    switch (value_.index()) {
        case 0: return std::get<0>(value_) == 1;
        case 1: return std::get<1>(value_) == 1;
        default: {
            const auto& c = std::get<2>(value_);
            if (!c[0].is_one()) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (!c[i].is_zero()) return false;
            return true;
        }
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (r.value_.index()) {
        case 0: {
            auto& v = std::get<0>(r.value_);
            if (v != 0) v = field_.prime() - v;
            break;
        }
        case 1: {
            auto& q = std::get<1>(r.value_);
            q = -q;
            break;
        }
        default:
            for (auto& c : std::get<2>(r.value_)) c = -c;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same(rhs);
    switch (value_.index()) {
        case 0: {
            auto& v = std::get<0>(value_);
            v += std::get<0>(rhs.value_);
            if (v >= field_.prime()) v -= field_.prime();
            break;
        }
        case 1: std::get<1>(value_) += std::get<1>(rhs.value_); break;
        default: {
            auto& c = std::get<2>(value_);
            const auto& d = std::get<2>(rhs.value_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same(rhs);
    switch (value_.index()) {
        case 0: {
            auto& v = std::get<0>(value_);
            v -= std::get<0>(rhs.value_);
            if (v < 0) v += field_.prime();
            break;
        }
        case 1: std::get<1>(value_) -= std::get<1>(rhs.value_); break;
        default: {
            auto& c = std::get<2>(value_);
            const auto& d = std::get<2>(rhs.value_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= d[i];
        }
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same(rhs);
    switch (value_.index()) {
        case 0: {
            auto& v = std::get<0>(value_);
            v = (v * std::get<0>(rhs.value_)) % field_.prime();
            break;
        }
        case 1: std::get<1>(value_) *= std::get<1>(rhs.value_); break;
        default: {
            const Field k = field_.base();
            Poly a = std::get<2>(value_), b = std::get<2>(rhs.value_);
            trim(a);
            trim(b);
            std::get<2>(value_) = reduce_mod(poly_mul(a, b, k), field_.modulus(), k);
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_.name());
    switch (value_.index()) {
        case 0: return make_residue(field_, mod_inverse(std::get<0>(value_), field_.prime()));
        case 1: return make_rational(field_, 1 / std::get<1>(value_));
        default: {
            // extended Euclid: s*a + t*f = g
            const Field k = field_.base();
            Poly a = std::get<2>(value_);
            trim(a);
            Poly r0 = field_.modulus(), r1 = a;
            Poly s0, s1{k.one()};
            while (!r1.empty()) {
                Poly q, r;
                poly_divmod(r0, r1, k, q, r);
                Poly s2 = poly_sub(s0, poly_mul(q, s1, k), k);
                r0 = std::move(r1);
                r1 = std::move(r);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            if (r0.size() != 1)
                throw Error(ErrorKind::DivisionByZero, "element not invertible: modulus of " + field_.name() + " is reducible");
            const Scalar g_inv = r0[0].inverse();
            for (auto& c : s0) c *= g_inv;
            return make_extension(field_, reduce_mod(s0, field_.modulus(), k));
        }
    }
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result = field_.one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& other) const {
    if (field_ != other.field_) return false;
    switch (value_.index()) {
        case 0: return std::get<0>(value_) == std::get<0>(other.value_);
        case 1: return std::get<1>(value_) == std::get<1>(other.value_);
        default: return std::get<2>(value_) == std::get<2>(other.value_);
    }
}

bool Scalar::less(const Scalar& other) const {
    check_same(other);
    switch (value_.index()) {
        case 0: return std::get<0>(value_) < std::get<0>(other.value_);
        case 1: return std::get<1>(value_) < std::get<1>(other.value_);
        default: {
            const auto& a = std::get<2>(value_);
            const auto& b = std::get<2>(other.value_);
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] == b[i]) continue;
                return a[i].less(b[i]);
            }
            return false;
        }
    }
}

std::string Scalar::to_string() const {
    switch (value_.index()) {
        case 0: return std::to_string(std::get<0>(value_));
        case 1: return std::get<1>(value_).get_str();
        default: {
            const auto& c = std::get<2>(value_);
            const std::string& var = field_.variable();
            std::string out;
            for (std::size_t i = c.size(); i-- > 0;) {
                if (c[i].is_zero()) continue;
                std::string coeff = c[i].to_string();
                bool neg = false;
                if (!c[i].is_compound() && coeff[0] == '-') {
                    neg = true;
                    coeff.erase(0, 1);
                }
                if (c[i].is_compound()) coeff = "(" + coeff + ")";
                const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
                std::string piece;
                if (mono.empty()) piece = coeff;
                else if (coeff == "1") piece = mono;
                else piece = coeff + "*" + mono;
                if (out.empty()) out = (neg ? "-" : "") + piece;
                else out += (neg ? " - " : " + ") + piece;
            }
            return out.empty() ? "0" : out;
        }
    }
}

bool Scalar::is_compound() const {
    if (value_.index() != 2) return false;
    int nonzero = 0;
    const auto& c = std::get<2>(value_);
    for (const auto& x : c) nonzero += x.is_zero() ? 0 : 1;
    if (nonzero > 1) return true;
    for (const auto& x : c)
        if (!x.is_zero()) return x.is_compound();
    return false;
}

Scalar Scalar::parse(const Field& field, std::string_view raw) {
    std::string text = trim_ws(raw);
    const auto in_pos = text.rfind(" in ");
    if (in_pos != std::string::npos) {
        const Field declared = Field::parse(text.substr(in_pos + 4));
        if (declared != field)
            throw Error(ErrorKind::FieldMismatch, "scalar declared in " + declared.name() + " but expected " + field.name());
        text = trim_ws(text.substr(0, in_pos));
    }
    const auto mod_pos = text.rfind(" mod ");
    if (mod_pos != std::string::npos) {
        const std::string p = trim_ws(text.substr(mod_pos + 5));
        if (field.kind() != FieldKind::Prime || std::to_string(field.prime()) != p)
            throw Error(ErrorKind::FieldMismatch, "scalar '" + text + "' does not live in " + field.name());
        text = trim_ws(text.substr(0, mod_pos));
    }
    ScalarContext ctx{field};
    try {
        return detail::ExprParser<ScalarContext>(text, ctx).parse();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::BadScalar, "division by zero in '" + text + "'");
        throw;
    }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::optional<long> multiplicative_order(const Scalar& s, long bound) {
    if (s.is_zero()) return std::nullopt;
    Scalar p = s;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= s;
    }
    return std::nullopt;
}

std::vector<Scalar> square_roots(const Scalar& a) {
    const Field& k = a.field();
    if (a.is_zero()) return {k.zero()};
    if (k.kind() == FieldKind::Rational) {
        const mpq_class& q = a.rational();
        if (sgn(q) < 0) return {};
        const mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return {};
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        const Scalar s = Scalar::make_rational(k, mpq_class(rn, rd));
        return {s, -s};
    }
    if (!k.size()) throw Error(ErrorKind::Unsupported, "square roots over " + k.name());
    std::vector<Scalar> roots;
    for (const Scalar& s : k.elements())
        if (s * s == a) roots.push_back(s);
    return roots;
}

}  // namespace hopfgal
