#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "moddom/extended_nat.hpp"
#include "moddom/harness.hpp"

namespace moddom::detail {

using json = nlohmann::json;

inline json extended_to_json(const ExtendedNat& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

inline std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        q += "\"";
        return q;
    }
    return s;
}

inline std::string render_records(const std::vector<json>& records, RunConfig::Format format) {
    std::string out;
    if (format == RunConfig::Format::Jsonl) {
        for (const auto& r : records) {
            out += r.dump();
            out += '\n';
        }
        return out;
    }
    std::set<std::string> keys;
    for (const auto& r : records)
        for (auto it = r.begin(); it != r.end(); ++it) keys.insert(it.key());
    bool first = true;
    for (const auto& k : keys) {
        if (!first) out += ',';
        out += csv_cell(k);
        first = false;
    }
    out += '\n';
    for (const auto& r : records) {
        first = true;
        for (const auto& k : keys) {
            if (!first) out += ',';
            if (r.contains(k)) out += csv_cell(r.at(k));
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace moddom::detail
