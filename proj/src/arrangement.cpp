#include "magicarr/arrangement.hpp"

#include <set>

#include <json.hpp>

namespace magicarr {

using nlohmann::json;
using nlohmann::ordered_json;

size_t Arrangement::label_at(const std::string& id) const {
    auto it = label_index.find(id);
    if (it == label_index.end()) throw ValidationError("labels", "unknown label '" + id + "'");
    return it->second;
}

size_t Arrangement::context_at(const std::string& id) const {
    auto it = context_index.find(id);
    if (it == context_index.end()) throw ValidationError("contexts", "unknown context '" + id + "'");
    return it->second;
}

bool is_restricted(const Arrangement& arr) {
    std::unordered_map<std::string, int> count;
    for (const auto& c : arr.contexts)
        for (const auto& e : c.elements) ++count[e.label];
    for (const auto& l : arr.labels)
        if (count[l] != 2) return false;
    return true;
}

Arrangement make_arrangement(int64_t d, std::vector<std::string> labels, std::vector<Context> contexts) {
    Arrangement arr;
    arr.d = d;
    arr.labels = std::move(labels);
    arr.contexts = std::move(contexts);

    if (arr.d < 2) throw ValidationError("d", "modulus must be at least 2");

    for (size_t i = 0; i < arr.labels.size(); ++i) {
        const std::string& l = arr.labels[i];
        std::string where = "labels[" + std::to_string(i) + "]";
        if (l.empty()) throw ValidationError(where, "empty label id");
        if (!arr.label_index.emplace(l, i).second)
            throw ValidationError(where, "duplicate label '" + l + "'");
    }

    std::unordered_map<std::string, int> occurrences;
    for (size_t ci = 0; ci < arr.contexts.size(); ++ci) {
        const Context& c = arr.contexts[ci];
        std::string where = "contexts[" + std::to_string(ci) + "]";
        if (c.id.empty()) throw ValidationError(where + ".id", "empty context id");
        if (!arr.context_index.emplace(c.id, ci).second)
            throw ValidationError(where + ".id", "duplicate context '" + c.id + "'");
        if (c.elements.empty()) throw ValidationError(where + ".elements", "context must be nonempty");
        if (c.tau < 0 || c.tau >= arr.d)
            throw ValidationError(where + ".tau", "tau out of range [0, d)");
        std::set<std::string> seen;
        for (size_t ei = 0; ei < c.elements.size(); ++ei) {
            const SignedLabel& e = c.elements[ei];
            std::string ewhere = where + ".elements[" + std::to_string(ei) + "]";
            if (!arr.label_index.count(e.label))
                throw ValidationError(ewhere, "unknown label '" + e.label + "'");
            if (e.sign != 1 && e.sign != -1) throw ValidationError(ewhere, "sign must be 1 or -1");
            if (!seen.insert(e.label).second)
                throw ValidationError(ewhere, "label '" + e.label + "' repeated in context");
            ++occurrences[e.label];
        }
    }
    // a label in zero contexts carries no constraint and would silently pad
    // the solution space, so it is rejected
    for (const auto& l : arr.labels)
        if (!occurrences.count(l))
            throw ValidationError("labels", "label '" + l + "' occurs in no context");

    arr.restricted = is_restricted(arr);
    return arr;
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ParseError(where, "unknown key '" + it.key() + "'");
    }
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    reject_unknown_keys(doc, {"d", "labels", "contexts"}, "$");
    if (!doc.contains("d") || !doc["d"].is_number_integer())
        throw ParseError("d", "missing or non-integer");
    if (!doc.contains("labels") || !doc["labels"].is_array())
        throw ParseError("labels", "missing or not an array");
    if (!doc.contains("contexts") || !doc["contexts"].is_array())
        throw ParseError("contexts", "missing or not an array");

    std::vector<std::string> labels;
    for (size_t i = 0; i < doc["labels"].size(); ++i) {
        const auto& l = doc["labels"][i];
        if (!l.is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "expected a string");
        labels.push_back(l.get<std::string>());
    }

    std::vector<Context> contexts;
    for (size_t ci = 0; ci < doc["contexts"].size(); ++ci) {
        const auto& c = doc["contexts"][ci];
        std::string where = "contexts[" + std::to_string(ci) + "]";
        if (!c.is_object()) throw ParseError(where, "expected an object");
        reject_unknown_keys(c, {"id", "elements", "tau"}, where);
        if (!c.contains("id") || !c["id"].is_string()) throw ParseError(where + ".id", "missing or not a string");
        if (!c.contains("elements") || !c["elements"].is_array())
            throw ParseError(where + ".elements", "missing or not an array");
        if (!c.contains("tau") || !c["tau"].is_number_integer())
            throw ParseError(where + ".tau", "missing or non-integer");
        Context ctx;
        ctx.id = c["id"].get<std::string>();
        ctx.tau = c["tau"].get<int64_t>();
        for (size_t ei = 0; ei < c["elements"].size(); ++ei) {
            const auto& e = c["elements"][ei];
            std::string ewhere = where + ".elements[" + std::to_string(ei) + "]";
            if (!e.is_object()) throw ParseError(ewhere, "expected an object");
            reject_unknown_keys(e, {"label", "sign"}, ewhere);
            if (!e.contains("label") || !e["label"].is_string())
                throw ParseError(ewhere + ".label", "missing or not a string");
            if (!e.contains("sign") || !e["sign"].is_number_integer())
                throw ParseError(ewhere + ".sign", "missing or non-integer");
            ctx.elements.push_back({e["label"].get<std::string>(), e["sign"].get<int>()});
        }
        contexts.push_back(std::move(ctx));
    }
    return make_arrangement(doc["d"].get<int64_t>(), std::move(labels), std::move(contexts));
}

std::string serialize_arrangement(const Arrangement& arr) {
    ordered_json doc;
    doc["d"] = arr.d;
    doc["labels"] = arr.labels;
    doc["contexts"] = ordered_json::array();
    for (const auto& c : arr.contexts) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["elements"] = ordered_json::array();
        for (const auto& e : c.elements) jc["elements"].push_back({{"label", e.label}, {"sign", e.sign}});
        jc["tau"] = c.tau;
        doc["contexts"].push_back(std::move(jc));
    }
    return doc.dump(2) + "\n";
}

}  // namespace magicarr
