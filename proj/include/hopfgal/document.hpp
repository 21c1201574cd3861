#pragma once

// JSON documents naming rings, morphisms, Hopf algebras, bundles, cleaving
// maps and homotopy witnesses. Scalars and ring elements are strings.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hopfgal/homotopy.hpp"

namespace hopfgal {

using Json = nlohmann::ordered_json;

// Name -> object, remembering insertion order.
template <class T>
class Section {
public:
    void add(const std::string& name, T value) {
        if (!items_.emplace(name, std::move(value)).second)
            throw Error(ErrorKind::SchemaError, "duplicate name '" + name + "'");
        order_.push_back(name);
    }
    bool contains(const std::string& name) const { return items_.count(name) != 0; }
    const T& at(const std::string& name) const {
        auto it = items_.find(name);
        if (it == items_.end()) throw Error(ErrorKind::UnresolvedReference, "undefined name '" + name + "'");
        return it->second;
    }
    const std::vector<std::string>& names() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }

private:
    std::vector<std::string> order_;
    std::map<std::string, T> items_;
};

struct CleavingEntry {
    std::string bundle;
    HModuleMap gamma;
};

// Claims from ~ to.
struct WitnessEntry {
    std::string from, to, bundle;
    HomotopyWitness witness;
};

struct Document {
    Field field;
    Section<BaseRing> rings;
    Section<BaseMorphism> morphisms;
    Section<HopfPtr> hopf_algebras;
    Section<ComoduleAlgebra> bundles;
    Section<CleavingEntry> cleavings;
    Section<WitnessEntry> witnesses;
};

// Errors carry a JSON pointer to the offending value. Throws SchemaError,
// UnresolvedReference, BadScalar (and whatever the constructors reject).
Document parse_document(std::string_view text);
Document load_document(const std::string& path);

// Explicit form of every object; rings and Hopf algebras that are used but not
// named get generated names. parse_document(print) reproduces the objects.
Json to_json(const Document& doc);
std::string print_document(const Document& doc);

Json report_json(const Report& r);
Json matrix_json(const Matrix& m);

}  // namespace hopfgal
