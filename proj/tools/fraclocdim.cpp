// fraclocdim: command-line front end for the fraclocdim library.
//
// Every subcommand that takes a graph accepts a family string such as
// "lollipop(4,3)", a path to an edge-list or JSON file, or "-" for stdin.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fraclocdim/fraclocdim.hpp"

namespace fs = std::filesystem;
using namespace fraclocdim;

namespace {

constexpr const char* kVersion = "fraclocdim 1.0.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_stream(in);
}

Graph load_graph(const std::string& arg) {
    if (arg == "-") {
        Graph g = parse_graph(read_stream(std::cin));
        return g.name().empty() ? g.renamed("stdin") : g;
    }
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
        Graph g = parse_graph(read_file(arg));
        return g.name().empty() ? g.renamed(fs::path(arg).stem().string()) : g;
    }
    return make_family(arg);
}

std::vector<std::string> read_lines(const std::string& source) {
    std::string text = source == "-" ? read_stream(std::cin) : read_file(source);
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<FamilySpec> load_corpus(const std::string& source) {
    if (source == "builtin") return parse_corpus(builtin_corpus());
    return parse_corpus(read_lines(source));
}

Limits limits_from_env() {
    Limits limits;
    if (const char* env = std::getenv("FRACLOCDIM_MAX_N")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw UsageError("FRACLOCDIM_MAX_N must be a positive integer");
        limits.max_lp_order = v;
    }
    return limits;
}

void require_lp_order(const Graph& g, const Limits& limits) {
    if (g.order() > limits.max_lp_order)
        throw UsageError("graph order " + std::to_string(g.order()) + " exceeds the LP ceiling " +
                         std::to_string(limits.max_lp_order) + " (raise FRACLOCDIM_MAX_N)");
}

nlohmann::json set_to_json(const VertexSet& s) { return s.members(); }

struct FractionalOptions {
    std::string input;
    bool weights = false;
    bool json = false;
    bool decimal = false;
    std::string lp_out;
};

int run_fractional(const FractionalOptions& o, bool local) {
    const Limits limits = limits_from_env();
    const Graph g = load_graph(o.input);
    require_lp_order(g, limits);
    const DistMatrix d(g);
    const LinearProgram lp = local ? local_resolving_lp(g, d) : resolving_lp(g, d);
    if (!o.lp_out.empty()) {
        std::ofstream out(o.lp_out);
        if (!out) throw UsageError("cannot write '" + o.lp_out + "'");
        out << to_text(lp);
    }
    const LpSolution sol = checked_solve(lp);
    const std::string label = local ? "ldim_f" : "dim_f";
    if (o.json) {
        nlohmann::json j = {{"graph", g.name()}, {"n", g.order()}, {label, sol.value.to_string()},
                            {"rows", lp.rows.size()}, {"pivots", sol.pivots}};
        if (o.decimal) j["decimal"] = sol.value.to_double();
        if (o.weights) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& x : sol.assignment) w.push_back(x.to_string());
            j["weights"] = std::move(w);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << label << "(" << g.name() << ") = " << sol.value;
    if (o.decimal) std::cout << "  (" << detail::decimal(sol.value) << ")";
    std::cout << '\n';
    if (o.weights)
        for (Vertex v = 0; v < sol.assignment.size(); ++v)
            if (!sol.assignment[v].is_zero()) std::cout << "  f(" << v << ") = " << sol.assignment[v] << '\n';
    return 0;
}

int emit_graph(const Graph& g, const std::string& format) {
    if (format == "json") std::cout << to_json(g).dump(2) << '\n';
    else if (format == "edgelist") std::cout << to_edge_list(g);
    else throw UsageError("unknown graph format '" + format + "'");
    return 0;
}

int run_resolve(const std::string& input, bool pairs, bool json) {
    const Graph g = load_graph(input);
    const ResolveReport rep = resolve_report(g, pairs);
    if (json) {
        nlohmann::json local = nlohmann::json::array();
        for (const auto& [e, l] : rep.local) local.push_back({{"edge", {e.u, e.v}}, {"L", set_to_json(l)}});
        nlohmann::json j = {{"graph", rep.graph}, {"l", rep.l_G}, {"r", rep.r_G}, {"local", std::move(local)}};
        if (rep.pairs) {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& [e, r] : *rep.pairs) all.push_back({{"pair", {e.u, e.v}}, {"R", set_to_json(r)}});
            j["pairs"] = std::move(all);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "graph: " << rep.graph << "\nl(G) = " << rep.l_G << "\nr(G) = " << rep.r_G << '\n';
    for (const auto& [e, l] : rep.local) std::cout << "L" << e.to_string() << " = " << l.to_string() << '\n';
    if (rep.pairs)
        for (const auto& [e, r] : *rep.pairs) std::cout << "R" << e.to_string() << " = " << r.to_string() << '\n';
    return 0;
}

int run_ldim(const std::string& input, bool metric, bool json) {
    const Graph g = load_graph(input);
    const DistMatrix d(g);
    const VertexSet w = metric ? minimum_resolving_set(g, d) : minimum_local_resolving_set(g, d);
    const std::string label = metric ? "dim" : "ldim";
    if (json) {
        std::cout << nlohmann::json{{"graph", g.name()}, {label, w.count()}, {"set", set_to_json(w)}}.dump(2) << '\n';
        return 0;
    }
    std::cout << label << "(" << g.name() << ") = " << w.count() << "\nwitness: " << w.to_string() << '\n';
    return 0;
}

int run_orbits(const std::string& input, bool json) {
    const Graph g = load_graph(input);
    const OrbitPartition p = orbits(g);
    if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& o : p.orbits()) list.push_back(o);
        std::cout << nlohmann::json{{"graph", g.name()}, {"count", p.count}, {"vertex_transitive", p.transitive},
                                    {"orbits", std::move(list)}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "graph: " << g.name() << "\norbits: " << p.count
              << "\nvertex-transitive: " << (p.transitive ? "yes" : "no") << '\n';
    for (const auto& o : p.orbits()) {
        std::cout << "  {";
        for (std::size_t i = 0; i < o.size(); ++i) std::cout << (i ? "," : "") << o[i];
        std::cout << "}\n";
    }
    return 0;
}

int run_product(const std::string& kind, const std::string& a, const std::string& b, const std::string& format,
                bool check) {
    const Graph g = load_graph(a), h = load_graph(b);
    Graph p;
    if (kind == "strong") p = strong_product(g, h);
    else if (kind == "cartesian") p = cartesian_product(g, h);
    else throw UsageError("product kind must be 'strong' or 'cartesian'");
    if (check) {
        const auto r = kind == "strong" ? check_strong_distance(g, h) : check_cartesian_distance(g, h);
        std::cerr << r.claim << ": " << to_string(r.status) << (r.witness ? " " + *r.witness : "") << '\n';
        if (r.failed()) return 1;
    }
    return emit_graph(p, format);
}

int run_verify(const std::string& claims_arg, const std::string& corpus_arg, const std::string& format) {
    std::vector<std::string> claims;
    if (claims_arg == "all") {
        claims = all_claim_ids();
    } else {
        std::stringstream ss(claims_arg);
        for (std::string id; std::getline(ss, id, ',');)
            if (!id.empty()) claims.push_back(id);
        try {
            for (const auto& id : claims) claim_info(id);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const auto reports = run_suite(load_corpus(corpus_arg), claims, limits_from_env());
    std::cout << emit_report(reports, parse_output_format(format));
    const auto t = tally(reports);
    std::cerr << "pass " << t[0] << ", fail " << t[1] << ", skipped(hypothesis-unmet) " << t[2]
              << ", skipped(ceiling) " << t[3] << '\n';
    return t[1] == 0 ? 0 : 1;
}

int run_table(const std::string& corpus_arg, const std::string& format, bool decimal) {
    const Limits limits = limits_from_env();
    std::vector<InvariantRow> rows;
    for (const auto& spec : load_corpus(corpus_arg)) {
        GraphAnalysis a(make_family(spec), limits);
        rows.push_back(invariant_row(a));
    }
    std::cout << emit_table(rows, parse_output_format(format), decimal);
    return 0;
}

int list_claims() {
    for (const auto& c : claim_catalog()) {
        const char* scope = c.scope == ClaimScope::graph ? "graph" : c.scope == ClaimScope::pair ? "pair" : "global";
        std::cout << c.id << "  [" << scope << "]  " << c.statement << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional local metric dimension toolkit"};
    app.set_version_flag("--version", [] {
        std::cerr << kVersion << '\n';
        return std::string(kVersion);
    });
    app.require_subcommand(1);
    std::function<int()> action;
    const std::string input_help = "family string, edge-list/JSON file, or - for stdin";

    std::string input, format = "edgelist";
    auto* gen = app.add_subcommand("gen", "Print a graph as an edge list or JSON");
    gen->add_option("graph", input, input_help)->required();
    gen->add_option("--format", format, "edgelist or json")->check(CLI::IsMember({"edgelist", "json"}));
    gen->callback([&] { action = [&] { return emit_graph(load_graph(input), format); }; });

    bool pairs = false, json = false;
    auto* resolve = app.add_subcommand("resolve", "Local resolving neighbourhoods and the l, r parameters");
    resolve->add_option("graph", input, input_help)->required();
    resolve->add_flag("--pairs", pairs, "also list R(u,v) for every vertex pair");
    resolve->add_flag("--json", json, "JSON output");
    resolve->callback([&] { action = [&] { return run_resolve(input, pairs, json); }; });

    FractionalOptions frac;
    for (const bool local : {true, false}) {
        auto* sub = app.add_subcommand(local ? "ldimf" : "dimf",
                                       local ? "Fractional local metric dimension (exact)" : "Fractional metric dimension (exact)");
        sub->add_option("graph", frac.input, input_help)->required();
        sub->add_flag("--weights", frac.weights, "print the optimal vertex weights");
        sub->add_flag("--json", frac.json, "JSON output");
        sub->add_flag("--decimal", frac.decimal, "add an advisory decimal rendering");
        sub->add_option("--lp-out", frac.lp_out, "write the covering LP in text form to this file");
        sub->callback([&, local] { action = [&, local] { return run_fractional(frac, local); }; });
    }

    bool metric = false;
    auto* ldim = app.add_subcommand("ldim", "Exact local metric dimension with a witness set");
    ldim->add_option("graph", input, input_help)->required();
    ldim->add_flag("--metric", metric, "compute the (non-local) metric dimension instead");
    ldim->add_flag("--json", json, "JSON output");
    ldim->callback([&] { action = [&] { return run_ldim(input, metric, json); }; });

    auto* orb = app.add_subcommand("orbits", "Automorphism orbits and vertex-transitivity");
    orb->add_option("graph", input, input_help)->required();
    orb->add_flag("--json", json, "JSON output");
    orb->callback([&] { action = [&] { return run_orbits(input, json); }; });

    std::string kind, left, right;
    bool check = false;
    auto* product = app.add_subcommand("product", "Build a strong or cartesian product");
    product->add_option("kind", kind, "strong or cartesian")->required()->check(CLI::IsMember({"strong", "cartesian"}));
    product->add_option("left", left, input_help)->required();
    product->add_option("right", right, input_help)->required();
    product->add_option("--format", format, "edgelist or json")->check(CLI::IsMember({"edgelist", "json"}));
    product->add_flag("--check-distances", check, "verify the product distance law (report on stderr)");
    product->callback([&] { action = [&] { return run_product(kind, left, right, format, check); }; });

    std::string claims = "all", corpus = "builtin", report_format = "table";
    bool list = false;
    auto* verify = app.add_subcommand("verify", "Check claims over a corpus; exit 1 if any claim fails");
    verify->add_option("--claims", claims, "comma-separated claim ids or 'all'");
    verify->add_option("--corpus", corpus, "'builtin' or a file with one family string per line");
    verify->add_option("--format", report_format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    verify->add_flag("--list", list, "list claim ids and exit");
    verify->callback([&] { action = [&] { return list ? list_claims() : run_verify(claims, corpus, report_format); }; });

    std::string table_format = "csv";
    bool decimal = false;
    auto* table = app.add_subcommand("table", "Invariant table (graph,n,m,l,r,ldim,ldim_f,dim_f) over a corpus");
    table->add_option("--corpus", corpus, "'builtin' or a file with one family string per line");
    table->add_option("--format", table_format, "csv, json or table")->check(CLI::IsMember({"json", "csv", "table"}));
    table->add_flag("--decimal", decimal, "add advisory decimal columns");
    table->callback([&] { action = [&] { return run_table(corpus, table_format, decimal); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion&) {
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const FamilyError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const SearchCeilingError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const LpError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
