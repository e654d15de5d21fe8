#include "ghzcert/state_io.h"

#include <sstream>

#include <json.hpp>

namespace ghzcert {
namespace {

using nlohmann::json;

int read_int(const json& node, const std::string& where) {
    if (!node.is_number_integer()) {
        throw ParseError(where, "expected an integer");
    }
    return node.get<int>();
}

const json& field(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ParseError(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

}  // namespace

StateSet parse_state_set(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "syntax error: " + std::string(e.what()));
    }
    if (!doc.is_object()) {
        throw ParseError("document", "expected an object");
    }

    StateSet set;
    const auto& dims = field(doc, "dims", "document");
    if (!dims.is_array() || dims.size() != 3) {
        throw ParseError("dims", "expected an array of three integers");
    }
    set.dims = {read_int(dims[0], "dims[0]"), read_int(dims[1], "dims[1]"), read_int(dims[2], "dims[2]")};
    if (!set.dims.valid()) {
        throw ParseError("dims", "every local dimension must be at least 2");
    }

    const auto& tuples = field(doc, "tuples", "document");
    if (!tuples.is_array()) {
        throw ParseError("tuples", "expected an array");
    }
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const std::string where = "tuples[" + std::to_string(t) + "]";
        const auto& node = tuples[t];
        if (!node.is_object()) {
            throw ParseError(where, "expected an object");
        }
        GhzTuple tuple;
        if (auto it = node.find("label"); it != node.end()) {
            if (!it->is_string()) {
                throw ParseError(where + ".label", "expected a string");
            }
            tuple.label = it->get<std::string>();
        }
        const std::string name = where + (tuple.label ? " ('" + *tuple.label + "')" : "");
        const int weight = read_int(field(node, "weight", where), where + ".weight");
        const auto& kets = field(node, "kets", where);
        if (!kets.is_array()) {
            throw ParseError(where + ".kets", "expected an array");
        }
        if (static_cast<int>(kets.size()) != weight) {
            throw ParseError(name, "weight " + std::to_string(weight) + " but " + std::to_string(kets.size()) +
                                       " kets");
        }
        for (std::size_t m = 0; m < kets.size(); ++m) {
            const std::string kw = where + ".kets[" + std::to_string(m) + "]";
            if (!kets[m].is_array() || kets[m].size() != 3) {
                throw ParseError(kw, "expected [i, j, k]");
            }
            Ket ket{read_int(kets[m][0], kw), read_int(kets[m][1], kw), read_int(kets[m][2], kw)};
            if (!ket.in_bounds(set.dims)) {
                throw ParseError(kw, "ket " + to_string(ket) + " of " + name + " is out of bounds");
            }
            tuple.kets.push_back(ket);
        }
        try {
            validate_tuple(tuple, set.dims);
        } catch (const ValidationError& e) {
            throw ParseError(where, e.what());
        }
        set.tuples.push_back(std::move(tuple));
    }
    return set;
}

std::string write_state_set(const StateSet& set) {
    std::ostringstream out;
    out << "{\n  \"dims\": [" << set.dims.d1 << ", " << set.dims.d2 << ", " << set.dims.d3 << "],\n";
    out << "  \"tuples\": [";
    for (std::size_t t = 0; t < set.tuples.size(); ++t) {
        const auto& tuple = set.tuples[t];
        json node = json::object();
        node["weight"] = tuple.weight();
        json kets = json::array();
        for (const auto& k : tuple.kets) {
            kets.push_back({k.i, k.j, k.k});
        }
        node["kets"] = std::move(kets);
        if (tuple.label) {
            node["label"] = *tuple.label;
        }
        out << (t == 0 ? "\n    " : ",\n    ") << node.dump();
    }
    out << (set.tuples.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return out.str();
}

}  // namespace ghzcert
