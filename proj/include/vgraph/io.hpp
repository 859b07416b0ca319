#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/finite_graph.hpp"
#include "vgraph/instance.hpp"
#include "vgraph/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vgraph {

struct LoadedGraph {
    FiniteGraph graph;
    std::optional<std::vector<int>> colors;
    int num_colors = 0;
};

namespace detail {

inline const std::array<const char*, 8>& color_palette() {
    static const std::array<const char*, 8> palette = {
        "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377", "#bbbbbb", "#222222"};
    return palette;
}

inline std::string format_px(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

inline void require_colors_fit(const FiniteGraph& g, const std::vector<int>& colors, int num_colors) {
    if (static_cast<int>(colors.size()) != g.n()) {
        throw ValidationError("color list length does not match the vertex count");
    }
    for (int c : colors) {
        if (c < 0 || c >= num_colors) {
            throw ValidationError("color " + std::to_string(c) + " is outside [0, " +
                                  std::to_string(num_colors) + ")");
        }
    }
}

} // namespace detail

// DIMACS: "p edge N M" then one 1-indexed "e i j" line per edge.
inline std::string to_dimacs(const FiniteGraph& g) {
    std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.edges.size()) + "\n";
    for (const auto& [i, j] : g.edges) {
        out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    }
    return out;
}

/*
 * JSON stores the instance name plus lattice coordinates and index pairs;
 * the exact embedding is reconstructed on read, so the round trip is
 * lossless. The float embedding field is advisory output only.
 */
inline std::string to_json(const FiniteGraph& g, const std::vector<int>* colors = nullptr,
                           int num_colors = 0) {
    nlohmann::json doc;
    doc["schema"] = "vgraph-1";
    doc["instance"] = g.instance.name;
    doc["rank"] = g.instance.rank;
    auto& verts = doc["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json tuple = nlohmann::json::array();
        for (int i = 0; i < v.rank(); ++i) tuple.push_back(v[i]);
        verts.push_back(std::move(tuple));
    }
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(nlohmann::json::array({i, j}));
    auto& embed = doc["embedding"] = nlohmann::json::array();
    for (const auto& p : g.embedding) {
        embed.push_back(nlohmann::json::array({to_double(p.x), to_double(p.y)}));
    }
    if (colors) {
        detail::require_colors_fit(g, *colors, num_colors);
        doc["colors"] = *colors;
        doc["num_colors"] = num_colors;
    }
    return doc.dump(2) + "\n";
}

inline LoadedGraph from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");
    for (const char* key : {"schema", "instance", "rank", "vertices", "edges"}) {
        if (!doc.contains(key)) throw ParseError(std::string("missing key: ") + key);
    }
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != "vgraph-1") {
        throw UnsupportedVersionError("unsupported schema version: " + doc["schema"].dump());
    }

    LoadedGraph loaded;
    loaded.graph.instance = instance_by_name(doc["instance"].get<std::string>());
    const int rank = loaded.graph.instance.rank;
    if (!doc["rank"].is_number_integer() || doc["rank"].get<int>() != rank) {
        throw ValidationError("rank does not match the named instance");
    }

    if (!doc["vertices"].is_array()) throw ParseError("vertices must be an array");
    for (const auto& tuple : doc["vertices"]) {
        if (!tuple.is_array() || static_cast<int>(tuple.size()) != rank) {
            throw ValidationError("each vertex must be a tuple of " + std::to_string(rank) + " integers");
        }
        std::vector<int> coords;
        coords.reserve(static_cast<std::size_t>(rank));
        for (const auto& c : tuple) {
            if (!c.is_number_integer()) throw ValidationError("vertex coordinates must be integers");
            coords.push_back(c.get<int>());
        }
        loaded.graph.vertices.emplace_back(std::move(coords));
    }
    if (!std::is_sorted(loaded.graph.vertices.begin(), loaded.graph.vertices.end()) ||
        std::adjacent_find(loaded.graph.vertices.begin(), loaded.graph.vertices.end()) !=
            loaded.graph.vertices.end()) {
        throw ValidationError("vertices must be distinct and in canonical order");
    }

    const int n = loaded.graph.n();
    if (!doc["edges"].is_array()) throw ParseError("edges must be an array");
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw ValidationError("each edge must be a pair of vertex indices");
        }
        const int i = pair[0].get<int>();
        const int j = pair[1].get<int>();
        if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
            throw ValidationError("edge indices must satisfy 0 <= i < j < n");
        }
        loaded.graph.edges.emplace_back(i, j);
    }
    // The stored edges must be exactly the instance adjacency on the stored
    // vertices; anything else cannot have come from this library.
    const FiniteGraph rebuilt = induced_subgraph(loaded.graph.instance, loaded.graph.vertices);
    if (loaded.graph.edges != rebuilt.edges) {
        throw ValidationError("stored edges do not match the instance adjacency");
    }
    loaded.graph.embedding = rebuilt.embedding;

    if (doc.contains("colors")) {
        if (!doc["colors"].is_array()) throw ParseError("colors must be an array");
        std::vector<int> colors;
        for (const auto& c : doc["colors"]) {
            if (!c.is_number_integer()) throw ValidationError("colors must be integers");
            colors.push_back(c.get<int>());
        }
        int num_colors = 0;
        if (doc.contains("num_colors")) {
            if (!doc["num_colors"].is_number_integer()) throw ParseError("num_colors must be an integer");
            num_colors = doc["num_colors"].get<int>();
        } else {
            for (int c : colors) num_colors = std::max(num_colors, c + 1);
        }
        detail::require_colors_fit(loaded.graph, colors, num_colors);
        loaded.colors = std::move(colors);
        loaded.num_colors = num_colors;
    }
    return loaded;
}

inline std::string to_dot(const FiniteGraph& g, const std::vector<int>* colors = nullptr) {
    const auto& palette = detail::color_palette();
    if (colors && static_cast<int>(colors->size()) != g.n()) {
        throw ValidationError("color list length does not match the vertex count");
    }
    std::string out = "graph vgraph {\n";
    for (int v = 0; v < g.n(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + to_string(g.vertices[static_cast<std::size_t>(v)]) +
               "\"";
        if (colors) {
            const int c = (*colors)[static_cast<std::size_t>(v)];
            out += ", style=filled, fillcolor=\"";
            out += palette[static_cast<std::size_t>(((c % 8) + 8) % 8)];
            out += "\"";
        }
        out += "];\n";
    }
    for (const auto& [i, j] : g.edges) {
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    }
    out += "}\n";
    return out;
}

/*
 * SVG at 100 px per unit, edges as lines under radius-4 vertex circles.
 * Screen y grows downward, so the mathematical y axis is negated.
 */
inline std::string to_svg(const FiniteGraph& g, const std::vector<int>* colors = nullptr) {
    const auto& palette = detail::color_palette();
    if (colors && static_cast<int>(colors->size()) != g.n()) {
        throw ValidationError("color list length does not match the vertex count");
    }
    std::vector<std::pair<double, double>> px;
    px.reserve(g.embedding.size());
    for (const auto& p : g.embedding) {
        px.emplace_back(100.0 * to_double(p.x), -100.0 * to_double(p.y));
    }
    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    if (!px.empty()) {
        min_x = max_x = px[0].first;
        min_y = max_y = px[0].second;
        for (const auto& [x, y] : px) {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double margin = 10.0;
    const auto fmt = detail::format_px;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x - margin) + " " +
                      fmt(min_y - margin) + " " + fmt(max_x - min_x + 2 * margin) + " " +
                      fmt(max_y - min_y + 2 * margin) + "\">\n";
    out += "<!-- screen coordinates: y grows downward, the mathematical y axis is flipped -->\n";
    for (const auto& [i, j] : g.edges) {
        const auto& a = px[static_cast<std::size_t>(i)];
        const auto& b = px[static_cast<std::size_t>(j)];
        out += "  <line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(a.second) + "\" x2=\"" + fmt(b.first) +
               "\" y2=\"" + fmt(b.second) + "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t v = 0; v < px.size(); ++v) {
        const char* fill = "#bbbbbb";
        if (colors) {
            const int c = (*colors)[v];
            fill = palette[static_cast<std::size_t>(((c % 8) + 8) % 8)];
        }
        out += "  <circle cx=\"" + fmt(px[v].first) + "\" cy=\"" + fmt(px[v].second) + "\" r=\"4\" fill=\"" +
               std::string(fill) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace vgraph
