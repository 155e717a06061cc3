#pragma once

// Rendering of invariant tables and theorem reports as CSV, JSON or aligned text.
// Rationals always appear as exact p/q; decimals are an optional extra column.

#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraclocdim/analysis.hpp"
#include "fraclocdim/harness.hpp"

namespace fraclocdim {

enum class OutputFormat { csv, json, table };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or table)");
}

/// One line of the invariant table. Empty optionals are values above a ceiling.
struct InvariantRow {
    std::string graph;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t r = 0;
    std::optional<std::size_t> ldim;
    std::optional<Rational> ldim_f;
    std::optional<Rational> dim_f;
};

inline InvariantRow invariant_row(GraphAnalysis& a) {
    InvariantRow row;
    row.graph = a.graph().name();
    row.n = a.n();
    row.m = a.graph().size();
    row.l = a.l();
    row.r = a.r();
    if (a.search_in_range()) row.ldim = a.ldim();
    if (a.lp_in_range()) {
        row.ldim_f = a.ldim_f();
        row.dim_f = a.dim_f();
    }
    return row;
}

namespace detail {

inline std::string decimal(const Rational& q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", q.to_double());
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string or_dash(const std::optional<Rational>& q) { return q ? q->to_string() : "-"; }
inline std::string or_dash(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

/// Left-aligned text grid; the first row is the header.
inline std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::ostringstream out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

inline nlohmann::json rational_or_null(const std::optional<Rational>& q) {
    return q ? nlohmann::json(q->to_string()) : nlohmann::json(nullptr);
}

}  // namespace detail

inline std::string emit_table(const std::vector<InvariantRow>& rows, OutputFormat format, bool with_decimal = false) {
    std::vector<std::string> header = {"graph", "n", "m", "l", "r", "ldim", "ldim_f", "dim_f"};
    if (with_decimal) {
        header.push_back("ldim_f_decimal");
        header.push_back("dim_f_decimal");
    }
    if (format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j = {{"graph", row.graph}, {"n", row.n}, {"m", row.m}, {"l", row.l}, {"r", row.r},
                                {"ldim", row.ldim ? nlohmann::json(*row.ldim) : nlohmann::json(nullptr)},
                                {"ldim_f", detail::rational_or_null(row.ldim_f)},
                                {"dim_f", detail::rational_or_null(row.dim_f)}};
            if (with_decimal) {
                j["ldim_f_decimal"] = row.ldim_f ? nlohmann::json(row.ldim_f->to_double()) : nlohmann::json(nullptr);
                j["dim_f_decimal"] = row.dim_f ? nlohmann::json(row.dim_f->to_double()) : nlohmann::json(nullptr);
            }
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells = {header};
    for (const auto& row : rows) {
        std::vector<std::string> c = {row.graph,
                                      std::to_string(row.n),
                                      std::to_string(row.m),
                                      std::to_string(row.l),
                                      std::to_string(row.r),
                                      detail::or_dash(row.ldim),
                                      detail::or_dash(row.ldim_f),
                                      detail::or_dash(row.dim_f)};
        if (with_decimal) {
            c.push_back(row.ldim_f ? detail::decimal(*row.ldim_f) : "-");
            c.push_back(row.dim_f ? detail::decimal(*row.dim_f) : "-");
        }
        cells.push_back(std::move(c));
    }
    if (format == OutputFormat::table) return detail::aligned(cells);
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_field(row[i]);
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : r.values) values[k] = v.to_string();
    return {{"claim", r.claim},
            {"graphs", r.graphs},
            {"status", to_string(r.status)},
            {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
            {"values", std::move(values)},
            {"note", r.note}};
}

inline std::string emit_report(const std::vector<TheoremReport>& reports, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    auto joined_graphs = [](const TheoremReport& r) {
        std::string s;
        for (const auto& g : r.graphs) s += (s.empty() ? "" : " ; ") + g;
        return s;
    };
    auto joined_values = [](const TheoremReport& r) {
        std::string s;
        for (const auto& [k, v] : r.values) s += (s.empty() ? "" : " ") + k + "=" + v.to_string();
        return s;
    };
    std::vector<std::vector<std::string>> cells = {{"claim", "graphs", "status", "witness", "values", "note"}};
    for (const auto& r : reports)
        cells.push_back({r.claim, joined_graphs(r), to_string(r.status), r.witness.value_or(""), joined_values(r), r.note});
    if (format == OutputFormat::table) {
        // Values and notes make the grid unreadable; the table view keeps the verdict columns.
        for (auto& row : cells) row.resize(4);
        return detail::aligned(cells);
    }
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_field(row[i]);
        out << '\n';
    }
    return out.str();
}

/// Pass/fail/skip counts, in the order pass, fail, skipped(hypothesis), skipped(ceiling).
inline std::array<std::size_t, 4> tally(const std::vector<TheoremReport>& reports) {
    std::array<std::size_t, 4> t{};
    for (const auto& r : reports) ++t[static_cast<std::size_t>(r.status)];
    return t;
}

}  // namespace fraclocdim
