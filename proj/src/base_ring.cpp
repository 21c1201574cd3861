#include "hopfgal/base_ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "hopfgal/detail/expr.hpp"
#include "hopfgal/linalg.hpp"

namespace hopfgal {

namespace detail {

struct RingData {
    Field field;
    std::vector<Generator> gens;
    bool has_roots = false;
    std::string key;
};

}  // namespace detail

namespace {

using detail::RingData;

std::mutex& ring_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::unique_ptr<RingData>>& ring_registry() {
    static std::map<std::string, std::unique_ptr<RingData>> r;
    return r;
}

std::string monomial_string(const RingData& r, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < r.gens.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += r.gens[i].name;
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string terms_string(const RingData& r, const std::vector<Term>& terms) {
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string coeff = it->coef.to_string();
        const bool compound = it->coef.is_compound();
        bool neg = false;
        if (!compound && coeff[0] == '-') {
            neg = true;
            coeff.erase(0, 1);
        }
        if (compound) coeff = "(" + coeff + ")";
        const std::string mono = monomial_string(r, it->mono);
        std::string piece;
        if (mono.empty()) piece = coeff;
        else if (coeff == "1") piece = mono;
        else piece = coeff + "*" + mono;
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

const RingData* intern_ring(Field field, std::vector<Generator> gens) {
    std::string key = field.name();
    auto probe = std::make_unique<RingData>();
    probe->field = field;
    probe->gens = std::move(gens);
    for (std::size_t i = 0; i < probe->gens.size(); ++i) {
        const Generator& g = probe->gens[i];
        switch (g.kind) {
            case GeneratorKind::Free: key += "[" + g.name + "]"; break;
            case GeneratorKind::Laurent: key += "[" + g.name + "," + g.name + "^-1]"; break;
            case GeneratorKind::Root:
                probe->has_roots = true;
                key += "[" + g.name + ":" + g.name + "^" + std::to_string(g.order) + "=" +
                       terms_string(*probe, g.relation) + "]";
                break;
        }
    }
    probe->key = key;
    std::lock_guard lock(ring_mutex());
    auto& reg = ring_registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second.get();
    const RingData* raw = probe.get();
    reg.emplace(key, std::move(probe));
    return raw;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool field_uses_name(const Field& k, std::string_view name) {
    for (Field f = k; f.kind() == FieldKind::Extension; f = f.base())
        if (f.variable() == name) return true;
    return false;
}

void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Scalar c = terms[i].coef;
        while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coef;
        if (!c.is_zero()) {
            terms[out].mono = terms[i].mono;
            terms[out].coef = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Appends m*c rewritten with g^n -> u, highest ROOT generator first.
void emit_reduced(const RingData& r, Monomial m, const Scalar& c, std::vector<Term>& out) {
    for (std::size_t j = r.gens.size(); j-- > 0;) {
        const Generator& g = r.gens[j];
        if (g.kind == GeneratorKind::Root && m[j] >= g.order) {
            m[j] -= g.order;
            for (const Term& t : g.relation) {
                Monomial m2 = m;
                for (std::size_t i = 0; i < j; ++i) m2[i] += t.mono[i];
                emit_reduced(r, m2, c * t.coef, out);
            }
            return;
        }
    }
    out.push_back(Term{m, c});
}

struct ElementContext {
    using value_type = BaseElement;
    BaseRing ring;

    BaseElement integer(const mpz_class& v) const { return ring.constant(ring.field().from_mpz(v)); }
    BaseElement identifier(std::string_view name) const {
        if (auto i = ring.find(name)) return ring.gen(*i);
        if (field_uses_name(ring.field(), name)) return ring.constant(Scalar::parse(ring.field(), name));
        throw Error(ErrorKind::BadScalar, "unknown identifier");
    }
    BaseElement inverse(const BaseElement& a) const {
        auto inv = try_inverse(a);
        if (!inv) throw Error(ErrorKind::BadScalar, "division by the non-unit " + a.to_string());
        return *inv;
    }
    BaseElement power(const BaseElement& a, long e) const {
        if (e < 0) return inverse(a).pow(-e);
        return a.pow(e);
    }
};

}  // namespace

// ---------------------------------------------------------------- BaseRing

BaseRing::BaseRing() : BaseRing(Field::rationals()) {}

BaseRing::BaseRing(const Field& k) : data_(intern_ring(k, {})) {}

const Field& BaseRing::field() const noexcept { return data_->field; }
std::size_t BaseRing::num_generators() const noexcept { return data_->gens.size(); }

const Generator& BaseRing::generator(std::size_t i) const {
    if (i >= data_->gens.size()) throw Error(ErrorKind::DimensionMismatch, "generator index out of range");
    return data_->gens[i];
}

std::optional<std::size_t> BaseRing::find(std::string_view name) const {
    for (std::size_t i = 0; i < data_->gens.size(); ++i)
        if (data_->gens[i].name == name) return i;
    return std::nullopt;
}

BaseRing BaseRing::extended(Generator g) const {
    if (data_->gens.size() >= kMaxGenerators)
        throw Error(ErrorKind::Unsupported, "base rings are limited to " + std::to_string(kMaxGenerators) + " generators");
    if (!valid_identifier(g.name)) throw Error(ErrorKind::SchemaError, "bad generator name '" + g.name + "'");
    if (find(g.name) || field_uses_name(field(), g.name))
        throw Error(ErrorKind::SchemaError, "generator name '" + g.name + "' already in use");
    std::vector<Generator> gens = data_->gens;
    gens.push_back(std::move(g));
    return BaseRing(intern_ring(field(), std::move(gens)));
}

BaseRing BaseRing::with_free(const std::string& name) const {
    return extended(Generator{name, GeneratorKind::Free, 0, {}});
}

BaseRing BaseRing::with_laurent(const std::string& name) const {
    return extended(Generator{name, GeneratorKind::Laurent, 0, {}});
}

BaseRing BaseRing::with_root(const std::string& name, int n, const BaseElement& u) const {
    if (u.ring() != *this) throw Error(ErrorKind::RingMismatch, "root relation must lie in " + describe());
    if (n < 1) throw Error(ErrorKind::SchemaError, "root order must be positive");
    if (!field().is_invertible_integer(n))
        throw Error(ErrorKind::CharDivides, std::to_string(n) + " is zero in " + field().name());
    if (!is_unit(u)) throw Error(ErrorKind::NonUnit, u.to_string() + " is not a unit of " + describe());
    return extended(Generator{name, GeneratorKind::Root, n, u.terms()});
}

BaseRing BaseRing::prefix(std::size_t depth) const {
    if (depth >= num_generators()) return *this;
    return BaseRing(intern_ring(field(), std::vector<Generator>(data_->gens.begin(), data_->gens.begin() + depth)));
}

std::string BaseRing::fresh_name(std::string_view stem) const {
    std::string candidate(stem);
    for (int i = 1; find(candidate) || field_uses_name(field(), candidate); ++i)
        candidate = std::string(stem) + std::to_string(i);
    return candidate;
}

BaseElement BaseRing::zero() const { return BaseElement(*this); }
BaseElement BaseRing::one() const { return constant(field().one()); }
BaseElement BaseRing::from_int(long v) const { return constant(field().from_int(v)); }

BaseElement BaseRing::constant(const Scalar& c) const {
    if (c.field() != field()) throw Error(ErrorKind::FieldMismatch, "constant from " + c.field().name());
    return BaseElement::from_terms(*this, {Term{Monomial{}, c}});
}

BaseElement BaseRing::gen(std::size_t i) const {
    generator(i);
    Monomial m{};
    m[i] = 1;
    return BaseElement::from_terms(*this, {Term{m, field().one()}});
}

BaseElement BaseRing::gen(std::string_view name) const {
    auto i = find(name);
    if (!i) throw Error(ErrorKind::UnresolvedReference, "no generator '" + std::string(name) + "' in " + describe());
    return gen(*i);
}

BaseElement BaseRing::parse(std::string_view text) const {
    ElementContext ctx{*this};
    return detail::ExprParser<ElementContext>(text, ctx).parse();
}

const std::string& BaseRing::describe() const noexcept { return data_->key; }

// ---------------------------------------------------------------- BaseElement

BaseElement::BaseElement() = default;

BaseElement BaseElement::from_terms(const BaseRing& ring, std::vector<Term> terms) {
    const RingData& r = *ring.data();
    BaseElement e(ring);
    if (r.has_roots) {
        std::vector<Term> reduced;
        reduced.reserve(terms.size());
        for (const Term& t : terms) emit_reduced(r, t.mono, t.coef, reduced);
        terms = std::move(reduced);
    }
    normalize(terms);
    e.terms_ = std::move(terms);
    return e;
}

void BaseElement::check_ring(const BaseElement& o) const {
    if (ring_ != o.ring_)
        throw Error(ErrorKind::RingMismatch, "elements of " + ring_.describe() + " and " + o.ring_.describe());
}

bool BaseElement::is_one() const {
    return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coef.is_one();
}

std::optional<Scalar> BaseElement::constant_value() const {
    if (terms_.empty()) return ring_.field().zero();
    if (terms_.size() == 1 && terms_[0].mono == Monomial{}) return terms_[0].coef;
    return std::nullopt;
}

bool BaseElement::involves(std::size_t gen) const {
    return std::any_of(terms_.begin(), terms_.end(), [gen](const Term& t) { return t.mono[gen] != 0; });
}

std::size_t BaseElement::depth() const {
    std::size_t d = 0;
    for (const Term& t : terms_)
        for (std::size_t i = kMaxGenerators; i-- > d;)
            if (t.mono[i] != 0) {
                d = i + 1;
                break;
            }
    return d;
}

BaseElement BaseElement::operator-() const {
    BaseElement r = *this;
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

BaseElement& BaseElement::operator+=(const BaseElement& rhs) {
    check_ring(rhs);
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].mono < rhs.terms_[j].mono)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || rhs.terms_[j].mono < terms_[i].mono) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            Scalar c = terms_[i].coef + rhs.terms_[j].coef;
            if (!c.is_zero()) merged.push_back(Term{terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

BaseElement& BaseElement::operator-=(const BaseElement& rhs) { return *this += -rhs; }

BaseElement operator*(const BaseElement& a, const BaseElement& b) {
    a.check_ring(b);
    BaseElement r(a.ring_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const RingData& data = *a.ring_.data();
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& x : a.terms_)
        for (const Term& y : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kMaxGenerators; ++i) m[i] = x.mono[i] + y.mono[i];
            if (data.has_roots) emit_reduced(data, m, x.coef * y.coef, out);
            else out.push_back(Term{m, x.coef * y.coef});
        }
    normalize(out);
    r.terms_ = std::move(out);
    return r;
}

BaseElement& BaseElement::operator*=(const BaseElement& rhs) {
    *this = *this * rhs;
    return *this;
}

BaseElement& BaseElement::operator*=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coef *= rhs;
    return *this;
}

BaseElement BaseElement::pow(long e) const {
    if (e < 0) return inverse(*this).pow(-e);
    BaseElement result = ring_.one();
    BaseElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

bool BaseElement::operator==(const BaseElement& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

std::string BaseElement::to_string() const { return terms_string(*ring_.data(), terms_); }

std::ostream& operator<<(std::ostream& os, const BaseElement& e) { return os << e.to_string(); }

// ---------------------------------------------------------------- units

namespace {

// Coefficients of `a` with respect to powers of generator j.
std::map<int, BaseElement> split_by(const BaseElement& a, std::size_t j) {
    std::map<int, std::vector<Term>> parts;
    for (const Term& t : a.terms()) {
        Term s = t;
        s.mono[j] = 0;
        parts[t.mono[j]].push_back(std::move(s));
    }
    std::map<int, BaseElement> out;
    for (auto& [e, terms] : parts) out.emplace(e, BaseElement::from_terms(a.ring(), std::move(terms)));
    return out;
}

}  // namespace

std::optional<BaseElement> try_inverse(const BaseElement& a) {
    const BaseRing& ring = a.ring();
    const std::size_t depth = a.depth();
    if (depth == 0) {
        const auto c = a.constant_value();
        if (!c || c->is_zero()) return std::nullopt;
        return ring.constant(c->inverse());
    }
    const std::size_t j = depth - 1;
    const Generator& g = ring.generator(j);
    switch (g.kind) {
        case GeneratorKind::Free:
            // reduced ring: a unit of P[g] is constant in g
            return std::nullopt;
        case GeneratorKind::Laurent: {
            const auto parts = split_by(a, j);
            for (auto it = parts.begin(); it != parts.end(); ++it)
                for (auto jt = std::next(it); jt != parts.end(); ++jt)
                    if (!(it->second * jt->second).is_zero()) return std::nullopt;
            BaseElement s = ring.zero();
            for (const auto& [e, c] : parts) s += c;
            auto s_inv = try_inverse(s);
            if (!s_inv) return std::nullopt;
            // (sum a_i g^i)(s^-2 sum a_i g^-i) = s^-2 sum a_i^2 = 1
            BaseElement result = ring.zero();
            for (const auto& [e, c] : parts) {
                Monomial m{};
                m[j] = -e;
                result += c * BaseElement::from_terms(ring, {Term{m, ring.field().one()}});
            }
            return result * *s_inv * *s_inv;
        }
        case GeneratorKind::Root: {
            const int n = g.order;
            const BaseElement gj = ring.gen(j);
            Matrix mult(ring, n, n);
            BaseElement col = a;
            for (int c = 0; c < n; ++c) {
                const auto parts = split_by(col, j);
                for (const auto& [e, coeff] : parts) mult(static_cast<std::size_t>(e), c) = coeff;
                col *= gj;
            }
            std::vector<BaseElement> e0(n, ring.zero());
            e0[0] = ring.one();
            auto x = solve_unit_determinant(mult, e0);
            if (!x) return std::nullopt;
            BaseElement result = ring.zero();
            BaseElement power = ring.one();
            for (int i = 0; i < n; ++i) {
                result += (*x)[i] * power;
                power *= gj;
            }
            return result;
        }
    }
    return std::nullopt;
}

bool is_unit(const BaseElement& a) { return try_inverse(a).has_value(); }

BaseElement inverse(const BaseElement& a) {
    auto inv = try_inverse(a);
    if (!inv) throw Error(ErrorKind::NonUnit, a.to_string() + " is not a unit of " + a.ring().describe());
    return *inv;
}

}  // namespace hopfgal
