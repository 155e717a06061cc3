#pragma once

// Edge-list and JSON graph formats.
//
// Edge list: first data line "n m", then m lines "u v" (0-based). Anything
// after '#' on a line is ignored, as are blank lines. A "# name: <label>"
// comment on the first line carries the graph name.
//
// JSON: {"name": str, "n": int, "edges": [[u, v], ...]}

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fraclocdim/graph.hpp"

namespace fraclocdim {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    if (!g.name().empty()) out << "# name: " << g.name() << '\n';
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Graph parse_edge_list(std::istream& in) {
    std::string line, name;
    std::vector<long long> values;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            const std::string comment = line.substr(hash + 1);
            const auto pos = comment.find("name:");
            if (values.empty() && name.empty() && pos != std::string::npos) {
                name = comment.substr(pos + 5);
                name.erase(0, name.find_first_not_of(" \t"));
                name.erase(name.find_last_not_of(" \t\r") + 1);
            }
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                throw FormatError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                  tok + "'");
            }
        }
    }
    if (values.size() < 2) throw FormatError("edge list missing 'n m' header");
    const auto n = static_cast<std::size_t>(values[0]);
    const auto m = static_cast<std::size_t>(values[1]);
    if (values.size() != 2 + 2 * m)
        throw FormatError("edge list declares " + std::to_string(m) + " edges but holds " +
                          std::to_string((values.size() - 2) / 2) + " complete pairs");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i)
        edges.emplace_back(static_cast<Vertex>(values[2 + 2 * i]), static_cast<Vertex>(values[3 + 2 * i]));
    return build_graph(n, edges, name);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"name", g.name()}, {"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a [u, v] pair");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        return build_graph(n, edges, j.value("name", std::string{}));
    } catch (const nlohmann::json::exception& ex) {
        throw FormatError(std::string("malformed graph JSON: ") + ex.what());
    }
}

/// Accepts either format; JSON is recognised by a leading '{'.
inline Graph parse_graph(const std::string& text) {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& ex) {
            throw FormatError(std::string("invalid JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(text);
}

}  // namespace fraclocdim
