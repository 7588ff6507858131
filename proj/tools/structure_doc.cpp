#include "structure_doc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gammafuzz::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DocError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t as_index(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer()) throw ShapeError(where + ": negative entry " + v.dump());
    throw DocError(where + ": expected a non-negative integer, got " + v.dump());
}

std::vector<std::size_t> as_index_row(const json& v, const std::string& where) {
    if (!v.is_array()) throw DocError(where + ": expected an array");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_index(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<std::size_t>> as_index_table(const json& v, const std::string& where) {
    if (!v.is_array()) throw DocError(where + ": expected an array");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_index_row(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<Membership> as_grades(const json& v, const std::string& where) {
    if (!v.is_array()) throw DocError(where + ": expected an array of \"p/q\" strings");
    std::vector<Membership> out;
    for (const auto& item : v) {
        if (!item.is_string()) throw DocError(where + ": memberships must be strings like \"1/2\", got " + item.dump());
        try {
            out.push_back(Membership::parse(item.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw DocError(where + ": " + e.what());
        }
    }
    return out;
}

json grades_json(const std::vector<Membership>& grades) {
    json arr = json::array();
    for (const auto& m : grades) arr.push_back(m.to_string());
    return arr;
}

} // namespace

StructureDoc parse_structure_doc(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw DocError("document must be a JSON object");

    StructureDoc doc;
    auto& t = doc.tables;
    const auto& name = require(root, "name");
    if (!name.is_string()) throw DocError("\"name\" must be a string");
    t.name = name.get<std::string>();
    t.s_size = as_index(require(root, "s_size"), "s_size");
    t.g_size = as_index(require(root, "gamma_size"), "gamma_size");
    t.s_add = as_index_table(require(root, "s_add"), "s_add");
    t.g_add = as_index_table(require(root, "gamma_add"), "gamma_add");
    const auto& product = require(root, "product");
    if (!product.is_array()) throw DocError("product: expected an array");
    for (std::size_t i = 0; i < product.size(); ++i) {
        t.product.push_back(as_index_table(product[i], "product[" + std::to_string(i) + "]"));
    }
    t.s_zero = as_index(require(root, "s_zero"), "s_zero");
    t.g_zero = as_index(require(root, "gamma_zero"), "gamma_zero");

    if (auto it = root.find("unities"); it != root.end()) {
        if (!it->is_array()) throw DocError("unities: expected an array");
        for (const auto& u : *it) {
            UnityDecl decl;
            const auto& side = require(u, "side");
            if (side == "left") {
                decl.side = Side::left;
            } else if (side == "right") {
                decl.side = Side::right;
            } else {
                throw DocError("unity side must be \"left\" or \"right\", got " + side.dump());
            }
            const auto& pairs = require(u, "pairs");
            if (!pairs.is_array()) throw DocError("unity pairs: expected an array");
            for (const auto& p : pairs) {
                if (!p.is_array() || p.size() != 2) throw DocError("unity pair must be [element, gamma]");
                decl.pairs.emplace_back(ElemS{as_index(p[0], "unity element")}, ElemG{as_index(p[1], "unity gamma")});
            }
            t.unities.push_back(std::move(decl));
        }
    }
    if (auto it = root.find("subsets"); it != root.end()) {
        if (!it->is_object()) throw DocError("subsets: expected an object");
        for (const auto& [key, value] : it->items()) doc.subsets[key] = as_grades(value, "subsets." + key);
    }
    if (auto it = root.find("default_chain"); it != root.end()) {
        doc.default_chain = as_grades(*it, "default_chain");
    }
    return doc;
}

std::string emit_structure_doc(const StructureDoc& doc) {
    const auto& t = doc.tables;
    std::vector<std::pair<std::string, std::string>> fields;
    fields.emplace_back("name", json(t.name).dump());
    fields.emplace_back("s_size", json(t.s_size).dump());
    fields.emplace_back("gamma_size", json(t.g_size).dump());
    fields.emplace_back("s_add", json(t.s_add).dump());
    fields.emplace_back("gamma_add", json(t.g_add).dump());
    fields.emplace_back("product", json(t.product).dump());
    fields.emplace_back("s_zero", json(t.s_zero).dump());
    fields.emplace_back("gamma_zero", json(t.g_zero).dump());
    if (!t.unities.empty()) {
        std::string rendered = "[";
        for (std::size_t i = 0; i < t.unities.size(); ++i) {
            json pairs = json::array();
            for (const auto& [e, d] : t.unities[i].pairs) pairs.push_back({e.index, d.index});
            if (i) rendered += ",";
            rendered += "{\"side\":" + json(to_string(t.unities[i].side)).dump() + ",\"pairs\":" + pairs.dump() + "}";
        }
        fields.emplace_back("unities", rendered + "]");
    }
    if (!doc.subsets.empty()) {
        json obj = json::object();
        for (const auto& [name, grades] : doc.subsets) obj[name] = grades_json(grades);
        fields.emplace_back("subsets", obj.dump());
    }
    if (doc.default_chain) fields.emplace_back("default_chain", grades_json(*doc.default_chain).dump());

    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += "  " + json(fields[i].first).dump() + ": " + fields[i].second;
        out += i + 1 < fields.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

LoadedStructure load_structure(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedStructure loaded;
    loaded.doc = parse_structure_doc(buf.str());
    loaded.structure = std::make_unique<GammaSemiring>(loaded.doc.tables);
    return loaded;
}

} // namespace gammafuzz::cli
