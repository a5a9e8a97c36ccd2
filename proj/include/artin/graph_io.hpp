#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "artin/graph.hpp"

namespace artin {

/// Canonical text form: {"n":N,"edges":[[i,j,m],...]} with i < j, entries in
/// lexicographic (i,j) order, infinite pairs omitted. Emitted by hand so the
/// byte output is stable.
inline std::string encode(const DefiningGraph& g) {
    std::string out = "{\"n\":" + std::to_string(g.rank()) + ",\"edges\":[";
    bool first = true;
    const int n = g.rank();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Label l = g.label(i, j);
            if (l.is_infinite()) continue;
            if (!first) out += ',';
            first = false;
            out += '[' + std::to_string(i) + ',' + std::to_string(j) + ',' +
                   std::to_string(l.value()) + ']';
        }
    }
    out += "]}";
    return out;
}

/// Inverse of encode. Accepts any field order and explicit "inf" entries;
/// pairs absent from the list decode to infinity.
inline DefiningGraph decode(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("expected a JSON object", 0);
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing or non-integer \"n\"", 0);
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("missing or non-array \"edges\"", 0);
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "edges") throw ParseError("unknown key \"" + key + "\"", 0);

    const long long n = doc["n"].get<long long>();
    if (n < 1) throw ParseError("\"n\" must be >= 1", 0);

    std::vector<DefiningGraph::Assignment> assignments;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError("edge entries must be [i, j, m] triples", 0);
        if (!entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw ParseError("edge endpoints must be integers", 0);
        const long long i = entry[0].get<long long>();
        const long long j = entry[1].get<long long>();
        if (i >= j)
            throw ParseError("edge endpoints must satisfy i < j", 0);
        Label label = Label::infinite();
        if (entry[2].is_string()) {
            if (entry[2].get<std::string>() != "inf")
                throw ParseError("edge label must be an integer >= 2 or \"inf\"", 0);
        } else if (entry[2].is_number_integer()) {
            const long long mv = entry[2].get<long long>();
            if (mv < 2) throw BadLabel("finite labels start at 2, got " + std::to_string(mv));
            label = Label::finite(static_cast<std::uint64_t>(mv));
        } else {
            throw ParseError("edge label must be an integer >= 2 or \"inf\"", 0);
        }
        assignments.push_back({static_cast<int>(i), static_cast<int>(j), label});
    }
    return DefiningGraph(static_cast<int>(n),
                         std::span<const DefiningGraph::Assignment>(assignments));
}

}  // namespace artin
