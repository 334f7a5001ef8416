#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "digraph.hpp"
#include "zonemap.hpp"

namespace majority::io {

using json = nlohmann::ordered_json;

inline error parse_failure(int line, const std::string& what) {
    return error(error_code::parse_error, line > 0 ? "line " + std::to_string(line) + ": " + what : what);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(error_code::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// A digraph plus a display name per vertex (names[v-1]).
struct named_digraph {
    digraph graph;
    std::vector<std::string> names;

    const std::string& name(int v) const { return names.at(v - 1); }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool is_decimal(const std::string& s) {
    return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline bool is_label(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
    });
}

}  // namespace detail

/// Text format:
///   digraph n=<N>
///   u -> v        one edge per line
///   v             optional bare vertex declaration
/// '#' starts a comment. Labels are either all integers in 1..N, or names that
/// take indices 1, 2, ... in order of first appearance.
inline named_digraph parse_digraph(const std::string& text) {
    struct entry {
        int line;
        std::string from, to;  // `to` empty for declarations
    };
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<entry> entries;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (n < 0) {
            std::istringstream words(line);
            std::string head, size;
            if (!(words >> head >> size) || head != "digraph" || size.rfind("n=", 0) != 0 ||
                !detail::is_decimal(size.substr(2)) || (words >> raw)) {
                throw parse_failure(line_no, "expected header 'digraph n=<N>'");
            }
            n = std::stoi(size.substr(2));
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            if (!detail::is_label(line)) throw parse_failure(line_no, "expected 'u -> v' or a vertex label");
            entries.push_back({line_no, line, {}});
            continue;
        }
        std::string from = detail::trim(line.substr(0, arrow));
        std::string to = detail::trim(line.substr(arrow + 2));
        if (!detail::is_label(from) || !detail::is_label(to)) {
            throw parse_failure(line_no, "malformed edge, expected 'u -> v'");
        }
        entries.push_back({line_no, from, to});
    }
    if (n < 0) throw parse_failure(0, "missing header 'digraph n=<N>'");

    bool numeric = std::all_of(entries.begin(), entries.end(), [](const entry& e) {
        return detail::is_decimal(e.from) && (e.to.empty() || detail::is_decimal(e.to));
    });

    named_digraph out{digraph(n), {}};
    std::map<std::string, int> index;
    if (numeric) {
        for (int v = 1; v <= n; ++v) {
            out.names.push_back(std::to_string(v));
            index[out.names.back()] = v;
        }
    }
    auto resolve = [&](const std::string& label, int line) {
        if (numeric) {
            int v = std::stoi(label);
            if (v < 1 || v > n) throw parse_failure(line, "vertex " + label + " outside 1.." + std::to_string(n));
            return v;
        }
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        if (static_cast<int>(out.names.size()) == n) {
            throw parse_failure(line, "more than " + std::to_string(n) + " distinct vertex names");
        }
        out.names.push_back(label);
        return index[label] = static_cast<int>(out.names.size());
    };
    std::set<edge> seen;
    for (const auto& e : entries) {
        int u = resolve(e.from, e.line);
        if (e.to.empty()) continue;
        int v = resolve(e.to, e.line);
        if (u == v) throw parse_failure(e.line, "self-loop at " + e.from);
        if (!seen.insert({u, v}).second) throw parse_failure(e.line, "duplicate edge " + e.from + " -> " + e.to);
        out.graph.add_edge(u, v);
    }
    // Unnamed trailing vertices keep their index as a name.
    for (int v = static_cast<int>(out.names.size()) + 1; v <= n; ++v) {
        std::string name = std::to_string(v);
        while (index.count(name)) name = "_" + name;
        out.names.push_back(name);
        index[name] = v;
    }
    return out;
}

inline std::string format_digraph(const named_digraph& g) {
    std::string out = "digraph n=" + std::to_string(g.graph.n()) + "\n";
    for (auto [u, v] : g.graph.edges()) out += g.name(u) + " -> " + g.name(v) + "\n";
    return out;
}

inline named_digraph with_index_names(const digraph& g) {
    named_digraph out{g, {}};
    for (int v = 1; v <= g.n(); ++v) out.names.push_back(std::to_string(v));
    return out;
}

/// Witness: a zone map plus the threshold it is meant for.
struct witness {
    zone_map zones;
    rational alpha;
    std::string method;              // informational
    std::vector<std::string> names;  // optional vertex names
};

inline json big_to_json(const big_int& v) {
    if (v <= big_int(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
    return v.str();
}

inline json witness_to_json(const witness& w) {
    const zone_map& z = w.zones;
    json doc;
    doc["n"] = z.n();
    doc["alpha"] = to_fraction_string(w.alpha);
    if (!w.method.empty()) doc["method"] = w.method;
    if (!w.names.empty()) doc["vertices"] = w.names;
    json zones = json::object();
    for (const auto& [s, v] : z.entries()) zones[subset_key(s)] = big_to_json(v);
    doc["zones"] = zones;

    json derived;
    derived["total_points"] = big_to_json(total_points(z));
    json sizes = json::object();
    for (int i = 1; i <= z.n(); ++i) sizes[std::to_string(i)] = big_to_json(set_size(z, i));
    derived["set_sizes"] = sizes;
    json pairs = json::object();
    for (int i = 1; i <= z.n(); ++i) {
        for (int j = i + 1; j <= z.n(); ++j) pairs[subset_key(pair_of(i, j))] = big_to_json(pair_intersection(z, i, j));
    }
    derived["pair_intersections"] = pairs;
    doc["derived"] = derived;
    return doc;
}

/// Reads n, alpha, zones (and vertices if present); the derived block is
/// informational and recomputed on demand, never trusted.
inline witness parse_witness(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_failure(0, std::string("witness is not valid JSON: ") + e.what());
    }
    auto fail = [](const std::string& what) { return parse_failure(0, "witness: " + what); };
    if (!doc.is_object()) throw fail("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw fail("missing integer 'n'");
    int n = doc["n"].get<int>();
    if (n < 0 || n > max_indices) throw fail("n outside 0.." + std::to_string(max_indices));
    if (!doc.contains("alpha") || !doc["alpha"].is_string()) throw fail("missing 'alpha' fraction string");

    witness w;
    const std::string alpha_text = doc["alpha"].get<std::string>();
    w.alpha = parse_fraction(alpha_text);
    if (to_fraction_string(w.alpha) != alpha_text) throw fail("alpha must be a reduced fraction p/q");
    if (w.alpha <= 0 || w.alpha >= 1) throw fail("alpha must lie strictly between 0 and 1");
    if (doc.contains("method") && doc["method"].is_string()) w.method = doc["method"].get<std::string>();
    if (doc.contains("vertices")) {
        if (!doc["vertices"].is_array() || doc["vertices"].size() != static_cast<std::size_t>(n)) {
            throw fail("'vertices' must list n names");
        }
        for (const auto& v : doc["vertices"]) {
            if (!v.is_string()) throw fail("vertex names must be strings");
            w.names.push_back(v.get<std::string>());
        }
    }

    w.zones = zone_map(n);
    if (!doc.contains("zones") || !doc["zones"].is_object()) throw fail("missing 'zones' object");
    for (const auto& [key, value] : doc["zones"].items()) {
        subset s = 0;
        int last = 0;
        std::istringstream parts(key);
        std::string part;
        while (std::getline(parts, part, ',')) {
            part = detail::trim(part);
            if (!detail::is_decimal(part)) throw fail("bad zone key '" + key + "'");
            int i = std::stoi(part);
            if (i <= last || i > n) throw fail("zone key '" + key + "' must list ascending indices in 1..n");
            s |= singleton(i);
            last = i;
        }
        if (s == 0) throw fail("empty zone key");
        big_int count;
        if (value.is_number_unsigned() || value.is_number_integer()) {
            if (value.get<std::int64_t>() < 0) throw fail("negative zone size");
            count = value.get<std::int64_t>();
        } else if (value.is_string() && !value.get<std::string>().empty() &&
                   std::all_of(value.get<std::string>().begin(), value.get<std::string>().end(),
                               [](char c) { return c >= '0' && c <= '9'; })) {
            count = big_int(value.get<std::string>());
        } else {
            throw fail("zone '" + key + "' must be a nonnegative integer");
        }
        w.zones.set(s, count);
    }
    return w;
}

}  // namespace majority::io
