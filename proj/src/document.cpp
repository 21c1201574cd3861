#include "hopfgal/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hopfgal {

namespace {

std::string bare_message(const Error& e) {
    const std::string what = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    return what.compare(0, prefix.size(), prefix) == 0 ? what.substr(prefix.size()) : what;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& where, const std::string& msg) {
    throw Error(kind, where + ": " + msg);
}

// Runs f, attaching `where` to errors that do not carry a location yet.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        const std::string msg = bare_message(e);
        if (!msg.empty() && msg.front() == '/') throw;
        fail(e.kind(), where, msg);
    }
}

std::string key(const std::string& where, std::string_view k) { return where + "/" + std::string(k); }
std::string key(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& require(const Json& obj, const char* k, const std::string& where) {
    if (!obj.is_object()) fail(ErrorKind::SchemaError, where, "expected an object");
    auto it = obj.find(k);
    if (it == obj.end()) fail(ErrorKind::SchemaError, where, std::string("missing key '") + k + "'");
    return *it;
}

const Json& require_array(const Json& obj, const char* k, const std::string& where) {
    const Json& v = require(obj, k, where);
    if (!v.is_array()) fail(ErrorKind::SchemaError, key(where, k), "expected an array");
    return v;
}

std::string as_string(const Json& v, const std::string& where) {
    if (!v.is_string()) fail(ErrorKind::SchemaError, where, "expected a string");
    return v.get<std::string>();
}

long as_int(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(ErrorKind::SchemaError, where, "expected an integer");
    return v.get<long>();
}

// Scalars and elements may be written as strings or plain integers.
std::string scalar_text(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    if (!v.is_string()) fail(ErrorKind::SchemaError, where, "expected a scalar string");
    return v.get<std::string>();
}

Scalar parse_scalar(const Field& k, const Json& v, const std::string& where) {
    const std::string text = scalar_text(v, where);
    return located(where, [&] { return Scalar::parse(k, text); });
}

BaseElement parse_element(const BaseRing& r, const Json& v, const std::string& where) {
    const std::string text = scalar_text(v, where);
    return located(where, [&] { return r.parse(text); });
}

std::size_t parse_index(const Json& v, const std::vector<std::string>& labels, const std::string& where) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        fail(ErrorKind::UnresolvedReference, where, "no basis element '" + s + "'");
    }
    const long i = as_int(v, where);
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size())
        fail(ErrorKind::DimensionMismatch, where, "index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
}

std::vector<std::string> parse_labels(const Json& obj, const std::string& where) {
    const Json& arr = require_array(obj, "labels", where);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < arr.size(); ++i) labels.push_back(as_string(arr[i], key(key(where, "labels"), i)));
    if (labels.empty()) fail(ErrorKind::SchemaError, key(where, "labels"), "empty basis");
    return labels;
}

template <class T>
const T& lookup(const Section<T>& s, const Json& v, const std::string& where) {
    const std::string name = as_string(v, where);
    if (!s.contains(name)) fail(ErrorKind::UnresolvedReference, where, "undefined name '" + name + "'");
    return s.at(name);
}

Field field_of(const Document& doc, const Json& obj, const std::string& where) {
    auto it = obj.find("field");
    if (it == obj.end()) return doc.field;
    const std::string text = as_string(*it, key(where, "field"));
    return located(key(where, "field"), [&] { return Field::parse(text); });
}

BaseRing parse_ring(const Document& doc, const Json& obj, const std::string& where) {
    if (!obj.is_object()) fail(ErrorKind::SchemaError, where, "expected an object");
    BaseRing r;
    if (auto it = obj.find("extends"); it != obj.end()) {
        r = lookup(doc.rings, *it, key(where, "extends"));
        if (obj.contains("field")) fail(ErrorKind::SchemaError, where, "'extends' and 'field' are exclusive");
    } else {
        r = BaseRing(field_of(doc, obj, where));
    }
    const std::string gw = key(where, "generators");
    auto it = obj.find("generators");
    if (it == obj.end()) return r;
    if (!it->is_array()) fail(ErrorKind::SchemaError, gw, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const Json& g = (*it)[i];
        const std::string w = key(gw, i);
        const std::string name = as_string(require(g, "name", w), key(w, "name"));
        const std::string kind = g.contains("kind") ? as_string(g["kind"], key(w, "kind")) : "free";
        if (kind == "free") {
            r = located(w, [&] { return r.with_free(name); });
        } else if (kind == "laurent") {
            r = located(w, [&] { return r.with_laurent(name); });
        } else if (kind == "root") {
            const long n = as_int(require(g, "n", w), key(w, "n"));
            if (n < 2) fail(ErrorKind::SchemaError, key(w, "n"), "root order must be at least 2");
            const BaseElement u = parse_element(r, require(g, "u", w), key(w, "u"));
            r = located(w, [&] { return r.with_root(name, static_cast<int>(n), u); });
        } else {
            fail(ErrorKind::SchemaError, key(w, "kind"), "unknown generator kind '" + kind + "'");
        }
    }
    return r;
}

BaseMorphism parse_morphism(const Document& doc, const Json& obj, const std::string& where) {
    const BaseRing& src = lookup(doc.rings, require(obj, "source", where), key(where, "source"));
    const BaseRing& tgt = lookup(doc.rings, require(obj, "target", where), key(where, "target"));
    const Json& imgs = require(obj, "images", where);
    const std::string iw = key(where, "images");
    if (!imgs.is_object()) fail(ErrorKind::SchemaError, iw, "expected an object keyed by generator");
    std::vector<BaseElement> images;
    for (std::size_t g = 0; g < src.num_generators(); ++g) {
        const std::string& name = src.generator(g).name;
        auto it = imgs.find(name);
        if (it == imgs.end()) fail(ErrorKind::SchemaError, iw, "no image for generator '" + name + "'");
        images.push_back(parse_element(tgt, *it, key(iw, name)));
    }
    for (auto it = imgs.begin(); it != imgs.end(); ++it)
        if (!src.find(it.key())) fail(ErrorKind::UnresolvedReference, key(iw, it.key()), "not a generator of the source");
    return located(where, [&] { return BaseMorphism(src, tgt, std::move(images)); });
}

std::vector<TensorEntry> parse_scalar_tensor(const Json& arr, const Field& k, const std::vector<std::string>& labels,
                                             const std::string& where) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, where, "expected an array of [i, j, k, c] entries");
    std::vector<TensorEntry> out;
    for (std::size_t n = 0; n < arr.size(); ++n) {
        const std::string w = key(where, n);
        const Json& e = arr[n];
        if (!e.is_array() || e.size() != 4) fail(ErrorKind::SchemaError, w, "expected [i, j, k, c]");
        out.push_back(TensorEntry{parse_index(e[0], labels, key(w, 0)), parse_index(e[1], labels, key(w, 1)),
                                  parse_index(e[2], labels, key(w, 2)), parse_scalar(k, e[3], key(w, 3))});
    }
    return out;
}

Vec parse_scalar_vector(const Json& arr, const Field& k, std::size_t size, const std::string& where) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, where, "expected an array");
    if (arr.size() != size) fail(ErrorKind::DimensionMismatch, where, "expected " + std::to_string(size) + " entries");
    Vec out;
    for (std::size_t i = 0; i < size; ++i) out.push_back(parse_scalar(k, arr[i], key(where, i)));
    return out;
}

HopfPtr parse_hopf(const Document& doc, const Json& obj, const std::string& where) {
    const Field k = field_of(doc, obj, where);
    if (auto it = obj.find("builtin"); it != obj.end()) {
        const std::string kind = as_string(*it, key(where, "builtin"));
        auto order = [&] {
            const long n = as_int(require(obj, "n", where), key(where, "n"));
            if (n < 1 || n > 64) fail(ErrorKind::SchemaError, key(where, "n"), "order out of range");
            return static_cast<int>(n);
        };
        return located(where, [&]() -> HopfPtr {
            if (kind == "sweedler") return sweedler_h4_shared(k);
            if (kind == "taft") {
                const int n = order();
                return share(taft(n, parse_scalar(k, require(obj, "q", where), key(where, "q"))));
            }
            if (kind == "group_cyclic") return share(group_algebra_cyclic(k, order()));
            if (kind == "dual_group_cyclic") return share(dual_hopf(group_algebra_cyclic(k, order())));
            fail(ErrorKind::SchemaError, key(where, "builtin"), "unknown builtin '" + kind + "'");
        });
    }
    HopfStructure s;
    s.field = k;
    s.labels = parse_labels(obj, where);
    const std::size_t d = s.labels.size();
    s.mult = parse_scalar_tensor(require(obj, "mult", where), k, s.labels, key(where, "mult"));
    s.unit = parse_scalar_vector(require(obj, "unit", where), k, d, key(where, "unit"));
    s.comult = parse_scalar_tensor(require(obj, "comult", where), k, s.labels, key(where, "comult"));
    s.counit = parse_scalar_vector(require(obj, "counit", where), k, d, key(where, "counit"));
    if (auto it = obj.find("antipode"); it != obj.end()) {
        const std::string w = key(where, "antipode");
        if (!it->is_array()) fail(ErrorKind::SchemaError, w, "expected an array of [j, i, c] entries");
        ScalarMatrix m(k, d, d);
        for (std::size_t n = 0; n < it->size(); ++n) {
            const Json& e = (*it)[n];
            const std::string ew = key(w, n);
            if (!e.is_array() || e.size() != 3) fail(ErrorKind::SchemaError, ew, "expected [j, i, c]");
            const std::size_t j = parse_index(e[0], s.labels, key(ew, 0)), i = parse_index(e[1], s.labels, key(ew, 1));
            m(i, j) += parse_scalar(k, e[2], key(ew, 2));
        }
        s.antipode = std::move(m);
    }
    return located(where, [&] { return share(HopfAlgebra(std::move(s))); });
}

std::vector<ComodEntry> parse_element_tensor(const Json& arr, const BaseRing& r, const std::vector<std::string>& rows,
                                             const std::vector<std::string>& cols, const std::vector<std::string>& last,
                                             const std::string& where) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, where, "expected an array of [i, j, k, c] entries");
    std::vector<ComodEntry> out;
    for (std::size_t n = 0; n < arr.size(); ++n) {
        const std::string w = key(where, n);
        const Json& e = arr[n];
        if (!e.is_array() || e.size() != 4) fail(ErrorKind::SchemaError, w, "expected [i, j, k, c]");
        out.push_back(ComodEntry{parse_index(e[0], rows, key(w, 0)), parse_index(e[1], cols, key(w, 1)),
                                 parse_index(e[2], last, key(w, 2)), parse_element(r, e[3], key(w, 3))});
    }
    return out;
}

RVec parse_element_vector(const Json& arr, const BaseRing& r, std::size_t size, const std::string& where) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, where, "expected an array");
    if (arr.size() != size) fail(ErrorKind::DimensionMismatch, where, "expected " + std::to_string(size) + " entries");
    RVec out;
    for (std::size_t i = 0; i < size; ++i) out.push_back(parse_element(r, arr[i], key(where, i)));
    return out;
}

Matrix parse_matrix(const Json& arr, const BaseRing& r, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, where, "expected an array of rows");
    if (arr.size() != rows) fail(ErrorKind::DimensionMismatch, where, "expected " + std::to_string(rows) + " rows");
    Matrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const RVec row = parse_element_vector(arr[i], r, cols, key(where, i));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

ComoduleAlgebra parse_bundle(const Document& doc, const Json& obj, const std::string& where) {
    if (!obj.is_object()) fail(ErrorKind::SchemaError, where, "expected an object");
    if (auto it = obj.find("abg"); it != obj.end()) {
        const std::string w = key(where, "abg");
        const BaseRing& r = lookup(doc.rings, require(*it, "ring", w), key(w, "ring"));
        AbgParams p{parse_element(r, require(*it, "alpha", w), key(w, "alpha")),
                    parse_element(r, require(*it, "beta", w), key(w, "beta")),
                    parse_element(r, require(*it, "gamma", w), key(w, "gamma"))};
        return located(w, [&] { return abg_bundle(p); });
    }
    if (auto it = obj.find("kummer"); it != obj.end()) {
        const std::string w = key(where, "kummer");
        const Field k = field_of(doc, *it, w);
        const long n = as_int(require(*it, "n", w), key(w, "n"));
        if (n < 1 || n > 64) fail(ErrorKind::SchemaError, key(w, "n"), "order out of range");
        const Scalar q = parse_scalar(k, require(*it, "q", w), key(w, "q"));
        return located(w, [&] { return kummer_bundle(static_cast<int>(n), q).algebra; });
    }
    if (auto it = obj.find("trivial"); it != obj.end()) {
        const std::string w = key(where, "trivial");
        const BaseRing& r = lookup(doc.rings, require(*it, "ring", w), key(w, "ring"));
        const HopfPtr& h = lookup(doc.hopf_algebras, require(*it, "hopf", w), key(w, "hopf"));
        return located(w, [&] { return trivial_bundle(r, h); });
    }
    if (auto it = obj.find("pushforward"); it != obj.end()) {
        const std::string w = key(where, "pushforward");
        const ComoduleAlgebra& a = lookup(doc.bundles, require(*it, "bundle", w), key(w, "bundle"));
        const BaseMorphism& f = lookup(doc.morphisms, require(*it, "morphism", w), key(w, "morphism"));
        return located(w, [&] { return push_forward(f, a); });
    }
    ComoduleStructure s;
    s.base = lookup(doc.rings, require(obj, "ring", where), key(where, "ring"));
    s.hopf = lookup(doc.hopf_algebras, require(obj, "hopf", where), key(where, "hopf"));
    s.labels = parse_labels(obj, where);
    s.mult = parse_element_tensor(require(obj, "mult", where), s.base, s.labels, s.labels, s.labels, key(where, "mult"));
    s.unit = parse_element_vector(require(obj, "unit", where), s.base, s.labels.size(), key(where, "unit"));
    s.coaction = parse_element_tensor(require(obj, "coaction", where), s.base, s.labels, s.labels, s.hopf->labels(),
                                      key(where, "coaction"));
    return located(where, [&] { return ComoduleAlgebra(std::move(s)); });
}

CleavingEntry parse_cleaving(const Document& doc, const Json& obj, const std::string& where) {
    CleavingEntry c;
    c.bundle = as_string(require(obj, "bundle", where), key(where, "bundle"));
    const ComoduleAlgebra& a = lookup(doc.bundles, obj["bundle"], key(where, "bundle"));
    const std::size_t d = a.hopf_dim(), n = a.rank();
    const Json& values = require(obj, "values", where);
    const std::string w = key(where, "values");
    if (values.is_string() && values.get<std::string>() == "basis") {
        if (n != d) fail(ErrorKind::RankMismatch, w, "'basis' needs rank equal to dim H");
        for (std::size_t i = 0; i < d; ++i) c.gamma.values.push_back(a.basis(i));
        return c;
    }
    if (!values.is_array()) fail(ErrorKind::SchemaError, w, "expected \"basis\" or one coordinate vector per h_i");
    if (values.size() != d) fail(ErrorKind::DimensionMismatch, w, "expected " + std::to_string(d) + " values");
    for (std::size_t i = 0; i < d; ++i) c.gamma.values.push_back(parse_element_vector(values[i], a.base(), n, key(w, i)));
    return c;
}

WitnessEntry parse_witness(const Document& doc, const Json& obj, const std::string& where) {
    const Json& step_obj = require(obj, "step", where);
    const std::string sw = key(where, "step");
    EtaleStep step = EtaleStep::identity(lookup(doc.rings, require(step_obj, "source", sw), key(sw, "source")));
    if (auto it = step_obj.find("adjoin"); it != step_obj.end()) {
        const std::string aw = key(sw, "adjoin");
        if (!it->is_array()) fail(ErrorKind::SchemaError, aw, "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& a = (*it)[i];
            const std::string w = key(aw, i);
            const std::string name = a.contains("name") ? as_string(a["name"], key(w, "name")) : "s";
            const long n = as_int(require(a, "n", w), key(w, "n"));
            if (n < 2) fail(ErrorKind::SchemaError, key(w, "n"), "root order must be at least 2");
            const BaseElement u = parse_element(step.target(), require(a, "u", w), key(w, "u"));
            step = located(w, [&] { return step.then_adjoin(u, static_cast<int>(n), name); });
            if (step.target().generator(step.target().num_generators() - 1).name != name)
                fail(ErrorKind::SchemaError, key(w, "name"), "name '" + name + "' is already taken");
        }
    }
    const std::string from = as_string(require(obj, "from", where), key(where, "from"));
    const std::string to = as_string(require(obj, "to", where), key(where, "to"));
    const std::string bname = as_string(require(obj, "bundle", where), key(where, "bundle"));
    lookup(doc.bundles, obj["from"], key(where, "from"));
    lookup(doc.bundles, obj["to"], key(where, "to"));
    const ComoduleAlgebra& b = lookup(doc.bundles, obj["bundle"], key(where, "bundle"));
    const std::size_t n = doc.bundles.at(from).rank();
    const BaseRing& r = step.target();
    Matrix iso0 = parse_matrix(require(obj, "iso0", where), r, b.rank(), n, key(where, "iso0"));
    Matrix iso1 = parse_matrix(require(obj, "iso1", where), r, b.rank(), doc.bundles.at(to).rank(), key(where, "iso1"));
    return WitnessEntry{from, to, bname, HomotopyWitness{std::move(step), b, std::move(iso0), std::move(iso1)}};
}

template <class T, class F>
void parse_section(Document& doc, const Json& root, const char* name, Section<T>& section, F&& parse) {
    auto it = root.find(name);
    if (it == root.end()) return;
    const std::string where = std::string("/") + name;
    if (!it->is_object()) fail(ErrorKind::SchemaError, where, "expected an object of named definitions");
    for (auto e = it->begin(); e != it->end(); ++e) {
        const std::string w = key(where, e.key());
        section.add(e.key(), located(w, [&] { return parse(doc, e.value(), w); }));
    }
}

const char* const kSections[] = {"field", "rings", "morphisms", "hopf_algebras", "bundles", "cleavings", "witnesses"};

// ----------------------------------------------------------------- writing

class Writer {
public:
    explicit Writer(const Document& doc) : doc_(doc) {}

    Json write() {
        Json morphisms = Json::object(), hopfs = Json::object(), bundles = Json::object(), cleavings = Json::object(),
             witnesses = Json::object();
        for (const auto& name : doc_.witnesses.names()) witnesses[name] = witness(doc_.witnesses.at(name));
        for (const auto& name : doc_.cleavings.names()) cleavings[name] = cleaving(doc_.cleavings.at(name));
        for (const auto& name : doc_.bundles.names()) bundles[name] = bundle(doc_.bundles.at(name));
        for (const auto& name : doc_.morphisms.names()) morphisms[name] = morphism(doc_.morphisms.at(name));
        for (const auto& name : doc_.hopf_algebras.names()) hopfs[name] = hopf(*doc_.hopf_algebras.at(name));
        for (const auto& [name, h] : extra_hopf_) hopfs[name] = hopf(*h);
        Json rings = Json::object();
        for (const auto& name : doc_.rings.names()) rings[name] = ring(doc_.rings.at(name));
        for (std::size_t i = 0; i < extra_rings_.size(); ++i) rings[extra_rings_[i].first] = ring(extra_rings_[i].second);

        Json out = Json::object();
        out["field"] = doc_.field.name();
        out["rings"] = std::move(rings);
        out["morphisms"] = std::move(morphisms);
        out["hopf_algebras"] = std::move(hopfs);
        out["bundles"] = std::move(bundles);
        out["cleavings"] = std::move(cleavings);
        out["witnesses"] = std::move(witnesses);
        return out;
    }

private:
    bool taken(const std::string& name) const {
        if (doc_.rings.contains(name) || doc_.hopf_algebras.contains(name)) return true;
        for (const auto& e : extra_rings_)
            if (e.first == name) return true;
        for (const auto& e : extra_hopf_)
            if (e.first == name) return true;
        return false;
    }
    std::string fresh(const std::string& stem) const {
        for (int i = 1;; ++i)
            if (!taken(stem + std::to_string(i))) return stem + std::to_string(i);
    }

    std::string ring_name(const BaseRing& r) {
        for (const auto& name : doc_.rings.names())
            if (doc_.rings.at(name) == r) return name;
        for (const auto& e : extra_rings_)
            if (e.second == r) return e.first;
        extra_rings_.emplace_back(fresh("ring"), r);
        return extra_rings_.back().first;
    }

    std::string hopf_name(const HopfPtr& h) {
        for (const auto& name : doc_.hopf_algebras.names()) {
            const HopfPtr& g = doc_.hopf_algebras.at(name);
            if (g == h || *g == *h) return name;
        }
        for (const auto& e : extra_hopf_)
            if (e.second == h || *e.second == *h) return e.first;
        extra_hopf_.emplace_back(fresh("hopf"), h);
        return extra_hopf_.back().first;
    }

    Json ring(const BaseRing& r) const {
        Json out = Json::object();
        if (r.field() != doc_.field) out["field"] = r.field().name();
        Json gens = Json::array();
        for (std::size_t i = 0; i < r.num_generators(); ++i) {
            const Generator& g = r.generator(i);
            Json e = Json::object();
            e["name"] = g.name;
            switch (g.kind) {
            case GeneratorKind::Free: e["kind"] = "free"; break;
            case GeneratorKind::Laurent: e["kind"] = "laurent"; break;
            case GeneratorKind::Root:
                e["kind"] = "root";
                e["n"] = g.order;
                e["u"] = BaseElement::from_terms(r.prefix(i), g.relation).to_string();
                break;
            }
            gens.push_back(std::move(e));
        }
        out["generators"] = std::move(gens);
        return out;
    }

    Json morphism(const BaseMorphism& f) {
        Json out = Json::object();
        out["source"] = ring_name(f.source());
        out["target"] = ring_name(f.target());
        Json imgs = Json::object();
        for (std::size_t g = 0; g < f.source().num_generators(); ++g) imgs[f.source().generator(g).name] = f.image(g).to_string();
        out["images"] = std::move(imgs);
        return out;
    }

    Json hopf(const HopfAlgebra& h) const {
        const HopfStructure s = h.structure();
        Json out = Json::object();
        if (s.field != doc_.field) out["field"] = s.field.name();
        out["labels"] = s.labels;
        auto tensor = [](const std::vector<TensorEntry>& es) {
            Json arr = Json::array();
            for (const auto& e : es) arr.push_back(Json::array({e.i, e.j, e.k, e.c.to_string()}));
            return arr;
        };
        auto vec = [](const Vec& v) {
            Json arr = Json::array();
            for (const auto& c : v) arr.push_back(c.to_string());
            return arr;
        };
        out["mult"] = tensor(s.mult);
        out["unit"] = vec(s.unit);
        out["comult"] = tensor(s.comult);
        out["counit"] = vec(s.counit);
        Json anti = Json::array();
        const ScalarMatrix& m = h.antipode();
        for (std::size_t j = 0; j < h.dim(); ++j)
            for (std::size_t i = 0; i < h.dim(); ++i)
                if (!m(i, j).is_zero()) anti.push_back(Json::array({j, i, m(i, j).to_string()}));
        out["antipode"] = std::move(anti);
        return out;
    }

    Json bundle(const ComoduleAlgebra& a) {
        const ComoduleStructure s = a.structure();
        Json out = Json::object();
        out["ring"] = ring_name(s.base);
        out["hopf"] = hopf_name(s.hopf);
        out["labels"] = s.labels;
        auto tensor = [](const std::vector<ComodEntry>& es) {
            Json arr = Json::array();
            for (const auto& e : es) arr.push_back(Json::array({e.i, e.j, e.k, e.c.to_string()}));
            return arr;
        };
        out["mult"] = tensor(s.mult);
        Json unit = Json::array();
        for (const auto& c : s.unit) unit.push_back(c.to_string());
        out["unit"] = std::move(unit);
        out["coaction"] = tensor(s.coaction);
        return out;
    }

    Json cleaving(const CleavingEntry& c) const {
        Json out = Json::object();
        out["bundle"] = c.bundle;
        Json values = Json::array();
        for (const RVec& v : c.gamma.values) {
            Json row = Json::array();
            for (const auto& e : v) row.push_back(e.to_string());
            values.push_back(std::move(row));
        }
        out["values"] = std::move(values);
        return out;
    }

    Json witness(const WitnessEntry& w) {
        const EtaleStep& step = w.witness.step;
        Json s = Json::object();
        s["source"] = ring_name(step.source());
        Json adj = Json::array();
        for (std::size_t i = 0; i < step.adjunctions().size(); ++i) {
            Json a = Json::object();
            a["name"] = step.target().generator(step.source().num_generators() + i).name;
            a["n"] = step.adjunctions()[i].n;
            a["u"] = step.adjunctions()[i].u.to_string();
            adj.push_back(std::move(a));
        }
        s["adjoin"] = std::move(adj);
        Json out = Json::object();
        out["from"] = w.from;
        out["to"] = w.to;
        out["step"] = std::move(s);
        out["bundle"] = w.bundle;
        out["iso0"] = matrix_json(w.witness.iso0);
        out["iso1"] = matrix_json(w.witness.iso1);
        return out;
    }

    const Document& doc_;
    std::vector<std::pair<std::string, BaseRing>> extra_rings_;
    std::vector<std::pair<std::string, HopfPtr>> extra_hopf_;
};

}  // namespace

Document parse_document(std::string_view text) {
    Json root;
    // the parser keeps the last of repeated keys; a repeated name is an error here
    std::vector<std::set<std::string>> seen;
    std::string repeated;
    auto track = [&](int, Json::parse_event_t ev, Json& parsed) {
        if (ev == Json::parse_event_t::object_start) seen.emplace_back();
        else if (ev == Json::parse_event_t::object_end) seen.pop_back();
        else if (ev == Json::parse_event_t::key && !seen.back().insert(parsed.get<std::string>()).second && repeated.empty())
            repeated = parsed.get<std::string>();
        return true;
    };
    try {
        root = Json::parse(text, track);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    if (!repeated.empty()) throw Error(ErrorKind::SchemaError, "repeated key '" + repeated + "'");
    if (!root.is_object()) fail(ErrorKind::SchemaError, "", "document must be a JSON object");
    for (auto it = root.begin(); it != root.end(); ++it)
        if (std::find(std::begin(kSections), std::end(kSections), it.key()) == std::end(kSections))
            fail(ErrorKind::SchemaError, "/" + it.key(), "unknown top-level key");
    Document doc;
    if (auto it = root.find("field"); it != root.end()) {
        const std::string text = as_string(*it, "/field");
        doc.field = located("/field", [&] { return Field::parse(text); });
    }
    parse_section(doc, root, "rings", doc.rings, parse_ring);
    parse_section(doc, root, "morphisms", doc.morphisms, parse_morphism);
    parse_section(doc, root, "hopf_algebras", doc.hopf_algebras, parse_hopf);
    parse_section(doc, root, "bundles", doc.bundles, parse_bundle);
    parse_section(doc, root, "cleavings", doc.cleavings, parse_cleaving);
    parse_section(doc, root, "witnesses", doc.witnesses, parse_witness);
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::SchemaError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

Json to_json(const Document& doc) { return Writer(doc).write(); }

std::string print_document(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

Json report_json(const Report& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json e = Json::object();
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    Json out = Json::object();
    out["passed"] = r.passed();
    out["checks"] = std::move(checks);
    return out;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hopfgal
