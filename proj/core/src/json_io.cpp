#include "multisieve/json_io.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

namespace multisieve {

namespace {

using nlohmann::json;

ExplicitSet from_json(const json& doc) {
    if (!doc.is_object()) throw validation_error("explicit set JSON: top level must be an object");
    for (const char* field : {"ground_set", "k", "tuples", "symmetrize"})
        if (!doc.contains(field))
            throw validation_error(std::string("explicit set JSON: missing field \"") + field +
                                   "\"");

    if (!doc["ground_set"].is_array())
        throw validation_error("explicit set JSON: \"ground_set\" must be an array of strings");
    std::vector<std::string> ground;
    std::map<std::string, unsigned> index;
    for (const auto& label : doc["ground_set"]) {
        if (!label.is_string())
            throw validation_error("explicit set JSON: ground set labels must be strings");
        std::string s = label.get<std::string>();
        if (!index.emplace(s, static_cast<unsigned>(ground.size())).second)
            throw validation_error("explicit set JSON: duplicate label \"" + s + "\"");
        ground.push_back(std::move(s));
    }

    if (!doc["k"].is_number_unsigned())
        throw validation_error("explicit set JSON: \"k\" must be a non-negative integer");
    const unsigned k = doc["k"].get<unsigned>();
    if (!doc["symmetrize"].is_boolean())
        throw validation_error("explicit set JSON: \"symmetrize\" must be a boolean");
    const bool symmetrize = doc["symmetrize"].get<bool>();

    if (!doc["tuples"].is_array())
        throw validation_error("explicit set JSON: \"tuples\" must be an array");
    std::vector<std::vector<unsigned>> tuples;
    for (const auto& jt : doc["tuples"]) {
        if (!jt.is_array())
            throw validation_error("explicit set JSON: each tuple must be an array of labels");
        std::vector<unsigned> t;
        for (const auto& label : jt) {
            if (!label.is_string())
                throw validation_error("explicit set JSON: tuple entries must be labels");
            auto it = index.find(label.get<std::string>());
            if (it == index.end())
                throw validation_error("explicit set JSON: tuple entry \"" +
                                       label.get<std::string>() + "\" is not in the ground set");
            t.push_back(it->second);
        }
        if (t.size() != k)
            throw validation_error("explicit set JSON: tuple length differs from k");
        tuples.push_back(std::move(t));
    }
    return ExplicitSet::make(std::move(ground), k, std::move(tuples), symmetrize);
}

} // namespace

ExplicitSet load_explicit_set_text(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw validation_error("explicit set JSON: parse error");
    return from_json(doc);
}

ExplicitSet load_explicit_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_explicit_set_text(text);
}

std::string dump_explicit_set_json(const ExplicitSet& X) {
    json doc;
    doc["ground_set"] = X.ground_set();
    doc["k"] = X.k();
    doc["symmetrize"] = false;
    json tuples = json::array();
    for (const auto& t : X.tuples()) {
        json jt = json::array();
        for (unsigned v : t) jt.push_back(X.ground_set()[v]);
        tuples.push_back(std::move(jt));
    }
    doc["tuples"] = std::move(tuples);
    return doc.dump(2) + "\n";
}

void dump_explicit_set_file(const ExplicitSet& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << dump_explicit_set_json(X);
}

} // namespace multisieve
