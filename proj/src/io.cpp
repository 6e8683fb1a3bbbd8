#include "wmkcis/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmkcis/hfree.hpp"
#include "wmkcis/mwis.hpp"
#include "wmkcis/oracles.hpp"
#include "wmkcis/solver.hpp"
#include "wmkcis/canvas.hpp"

namespace wmkcis {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

Weight parse_weight(const std::string& tok, int line) {
    if (tok.empty() || tok[0] == '-' || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        parse_fail(line, "weight must be a nonnegative integer, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        parse_fail(line, "weight out of range: '" + tok + "'");
    }
}

struct Builder {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    std::vector<Weight> weights;
    std::vector<bool> weight_set;
    std::vector<uint32_t> raw_lists;
    std::vector<std::string> warnings;
    std::map<std::pair<int, int>, bool> seen_edges;
    bool has_lists = false;
    int max_list_colour = 0;

    int vertex(const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        ids.emplace(name, id);
        names.push_back(name);
        weights.push_back(1);
        weight_set.push_back(false);
        raw_lists.push_back(0);
        return id;
    }

    void edge(const std::string& a, const std::string& b, int line) {
        int u = vertex(a), v = vertex(b);
        if (u == v) parse_fail(line, "self-loop at vertex '" + a + "'");
        auto key = std::minmax(u, v);
        if (seen_edges.count({key.first, key.second})) {
            warnings.push_back("line " + std::to_string(line) + ": duplicate edge " + a + " " + b +
                               " (deduplicated)");
            return;
        }
        seen_edges[{key.first, key.second}] = true;
        edges.emplace_back(u, v);
    }

    Instance finish() {
        Instance inst;
        inst.graph = WeightedGraph(static_cast<int>(names.size()), edges, weights);
        inst.names = std::move(names);
        inst.has_lists = has_lists;
        inst.raw_lists = std::move(raw_lists);
        inst.max_list_colour = max_list_colour;
        inst.warnings = std::move(warnings);
        return inst;
    }
};

Instance parse_edge_list(std::istream& in) {
    Builder b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "w") {
            if (tok.size() != 3) parse_fail(lineno, "weight line needs 'w <name> <int>'");
            int v = b.vertex(tok[1]);
            if (b.weight_set[static_cast<size_t>(v)])
                parse_fail(lineno, "duplicate weight line for vertex '" + tok[1] + "'");
            b.weights[static_cast<size_t>(v)] = parse_weight(tok[2], lineno);
            b.weight_set[static_cast<size_t>(v)] = true;
        } else if (tok[0] == "l") {
            if (tok.size() != 3) parse_fail(lineno, "list line needs 'l <name> c1,c2,...'");
            int v = b.vertex(tok[1]);
            if (b.raw_lists[static_cast<size_t>(v)])
                parse_fail(lineno, "duplicate list line for vertex '" + tok[1] + "'");
            uint32_t mask = 0;
            std::istringstream cs(tok[2]);
            std::string item;
            while (std::getline(cs, item, ',')) {
                if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) {
                        return std::isdigit(c);
                    }))
                    parse_fail(lineno, "bad colour '" + item + "'");
                int c = std::stoi(item);
                if (c < 1 || c > 30) parse_fail(lineno, "colour out of range 1..30: " + item);
                mask |= uint32_t{1} << (c - 1);
                b.max_list_colour = std::max(b.max_list_colour, c);
            }
            if (!mask) parse_fail(lineno, "empty colour list");
            b.raw_lists[static_cast<size_t>(v)] = mask;
            b.has_lists = true;
        } else if (tok.size() == 2) {
            b.edge(tok[0], tok[1], lineno);
        } else {
            parse_fail(lineno, "expected 'u v', 'w <name> <int>' or 'l <name> <colours>'");
        }
    }
    return b.finish();
}

Instance parse_dimacs(std::istream& in) {
    Builder b;
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared_m = -1, seen_m = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || n < 0)
                parse_fail(lineno, "bad problem line, expected 'p edge n m'");
            for (int v = 1; v <= n; ++v) b.vertex(std::to_string(v));
        } else if (kind == "e") {
            if (n < 0) parse_fail(lineno, "edge before problem line");
            long u, v;
            if (!(ls >> u >> v)) parse_fail(lineno, "bad edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(lineno, "edge endpoint out of range 1..n");
            b.edge(std::to_string(u), std::to_string(v), lineno);
            ++seen_m;
        } else {
            parse_fail(lineno, "unknown DIMACS line kind '" + kind + "'");
        }
    }
    if (n < 0) throw InputError("DIMACS input has no problem line");
    if (declared_m >= 0 && seen_m != declared_m)
        b.warnings.push_back("edge count mismatch: header says " + std::to_string(declared_m) +
                             ", file has " + std::to_string(seen_m));
    return b.finish();
}

} // namespace

Instance parse_instance(std::istream& in, InstanceFormat format) {
    if (format == InstanceFormat::Auto) {
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        std::istringstream probe(content);
        std::string line;
        format = InstanceFormat::EdgeList;
        auto numeric = [](const std::string& s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
                return std::isdigit(c);
            });
        };
        while (std::getline(probe, line)) {
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first)) continue;
            if (first == "c" || first == "#") continue;
            // only an actual problem line flips to DIMACS; everything else is
            // an edge list (vertex names may legitimately be "p" or "e")
            std::string fmt, a, b;
            if (first == "p" && ls >> fmt >> a >> b && fmt == "edge" && numeric(a) && numeric(b))
                format = InstanceFormat::Dimacs;
            break;
        }
        std::istringstream again(content);
        return format == InstanceFormat::Dimacs ? parse_dimacs(again) : parse_edge_list(again);
    }
    return format == InstanceFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Instance parse_instance_file(const std::string& path, InstanceFormat format) {
    if (path == "-") return parse_instance(std::cin, format);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_instance(in, format);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    int n = inst.graph.n();
    for (int v = 0; v < n; ++v)
        os << "w " << inst.names[static_cast<size_t>(v)] << " " << inst.graph.weight(v) << "\n";
    if (inst.has_lists)
        for (int v = 0; v < n; ++v) {
            uint32_t mask = inst.raw_lists[static_cast<size_t>(v)];
            if (!mask) continue;
            os << "l " << inst.names[static_cast<size_t>(v)] << " ";
            bool first = true;
            for (int c = 0; c < 30; ++c)
                if ((mask >> c) & 1) {
                    if (!first) os << ",";
                    os << (c + 1);
                    first = false;
                }
            os << "\n";
        }
    for (int u = 0; u < n; ++u) {
        VertexSet nb = inst.graph.neighbours(u);
        for (int v = nb.next(u); v >= 0; v = nb.next(v))
            os << inst.names[static_cast<size_t>(u)] << " " << inst.names[static_cast<size_t>(v)]
               << "\n";
    }
    return os.str();
}

ListAssignment lists_for_k(const Instance& inst, int k, bool use_lists) {
    ListAssignment la(k, inst.graph.n());
    if (!use_lists || !inst.has_lists) return la;
    uint32_t full = ListAssignment::full_mask(k);
    for (int v = 0; v < inst.graph.n(); ++v) {
        uint32_t mask = inst.raw_lists[static_cast<size_t>(v)];
        if (!mask) continue;
        if (mask & ~full)
            throw InputError("vertex '" + inst.names[static_cast<size_t>(v)] +
                             "' lists a colour above k");
        la.lists[static_cast<size_t>(v)] = mask;
    }
    return la;
}

namespace {

uint64_t rng_below(std::mt19937_64& rng, uint64_t m) {
    uint64_t lim = std::numeric_limits<uint64_t>::max() -
                   std::numeric_limits<uint64_t>::max() % m;
    uint64_t x;
    do {
        x = rng();
    } while (x >= lim);
    return x % m;
}

bool rng_chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Instance wrap_graph(int n, const std::vector<std::pair<int, int>>& edges,
                    std::vector<Weight> weights) {
    Instance inst;
    inst.graph = WeightedGraph(n, edges, std::move(weights));
    inst.names.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) inst.names.push_back(std::to_string(v));
    inst.raw_lists.assign(static_cast<size_t>(n), 0);
    return inst;
}

// Random cotree: leaves are single vertices, internal nodes alternate union
// and join at random. P4-free by construction, hence P5-free.
void cograph_edges(std::mt19937_64& rng, int lo, int hi,
                   std::vector<std::pair<int, int>>& edges) {
    int n = hi - lo;
    if (n <= 1) return;
    int left = lo + 1 + static_cast<int>(rng_below(rng, static_cast<uint64_t>(n - 1)));
    bool join = rng_chance(rng, 0.5);
    cograph_edges(rng, lo, left, edges);
    cograph_edges(rng, left, hi, edges);
    if (join)
        for (int u = lo; u < left; ++u)
            for (int v = left; v < hi; ++v) edges.emplace_back(u, v);
}

} // namespace

Instance generate_instance(const GeneratorParams& params) {
    if (params.n <= 0) throw InputError("generate: n must be positive");
    std::mt19937_64 rng(params.seed);
    int n = params.n;
    std::vector<std::pair<int, int>> edges;
    int check_r = 0;

    if (params.family == "split") {
        int clique = static_cast<int>(rng_below(rng, static_cast<uint64_t>(n) + 1));
        for (int u = 0; u < clique; ++u)
            for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
        for (int u = 0; u < clique; ++u)
            for (int v = clique; v < n; ++v)
                if (rng_chance(rng, params.p)) edges.emplace_back(u, v);
    } else if (params.family == "cograph") {
        cograph_edges(rng, 0, n, edges);
    } else if (params.family == "p5rk1-rejection") {
        check_r = params.r;
        bool found = false;
        for (int attempt = 0; attempt < params.max_tries && !found; ++attempt) {
            edges.clear();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng_chance(rng, params.p)) edges.emplace_back(u, v);
            WeightedGraph g(n, edges);
            found = !check_free(g, params.r).has_value();
        }
        if (!found) throw InputError("generate: rejection retry budget exhausted");
    } else {
        throw InputError("generate: unknown family '" + params.family +
                         "' (expected split, cograph or p5rk1-rejection)");
    }

    std::vector<Weight> weights(static_cast<size_t>(n), 1);
    if (params.max_weight > 0)
        for (int v = 0; v < n; ++v)
            weights[static_cast<size_t>(v)] = rng_below(rng, params.max_weight + 1);

    Instance inst = wrap_graph(n, edges, std::move(weights));
    if (check_free(inst.graph, check_r))
        throw std::logic_error("generate: family produced a non-free graph");
    return inst;
}

namespace {

// Numeric-aware deterministic name order: all-digit names sort as numbers.
bool name_less(const std::string& a, const std::string& b) {
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c);
        });
    };
    bool da = digits(a), db = digits(b);
    if (da && db) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    if (da != db) return da;
    return a < b;
}

json solution_json(const Instance& inst, const ColouredSolution& sol) {
    std::vector<std::string> verts;
    sol.vertices.for_each([&](int v) { verts.push_back(inst.names[static_cast<size_t>(v)]); });
    std::sort(verts.begin(), verts.end(), name_less);
    json colouring = json::object();
    sol.vertices.for_each([&](int v) {
        colouring[inst.names[static_cast<size_t>(v)]] = sol.colours[static_cast<size_t>(v)] + 1;
    });
    json j;
    j["weight"] = sol.total_weight;
    j["vertices"] = verts;
    j["colouring"] = colouring;
    return j;
}

json witness_json(const Instance& inst, const Witness& w) {
    json path = json::array();
    for (int v : w.path_vertices) path.push_back(inst.names[static_cast<size_t>(v)]);
    json iso = json::array();
    for (int v : w.isolated_vertices) iso.push_back(inst.names[static_cast<size_t>(v)]);
    return json{{"path", path}, {"isolated", iso}};
}

void print_warnings(const Instance& inst, std::ostream& err) {
    for (const std::string& w : inst.warnings) err << "warning: " << w << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solver for weighted maximum k-colourable induced subgraphs of "
                 "(P5+rK1)-free graphs"};
    app.require_subcommand(1);

    struct {
        int k = 1, r = 0, jobs = 1, cap = 16, tries = 10000, n = 0;
        uint64_t seed = 0;
        Weight max_weight = 0;
        double p = 0.5;
        bool use_lists = false, no_validate = false, memo = true, canonical = false,
             count = false;
        std::string file, family, format = "auto";
    } opt;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "instance file ('-' for stdin)")->required();
        cmd->add_option("--format", opt.format, "auto | edgelist | dimacs")
            ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve WMkCIS on a (P5+rK1)-free instance");
    solve_cmd->add_option("--k", opt.k, "number of colours")->required();
    solve_cmd->add_option("--r", opt.r, "pattern parameter r")->required();
    solve_cmd->add_flag("--lists", opt.use_lists, "use the colour lists from the file");
    solve_cmd->add_flag("--no-validate", opt.no_validate, "skip the input freeness check");
    solve_cmd->add_flag("--memo,!--no-memo", opt.memo, "memoize recursive subproblems (on by default)");
    solve_cmd->add_flag("--canonical", opt.canonical,
                        "experimental: one canonical ordering per dominating-set guess");
    solve_cmd->add_option("--jobs", opt.jobs, "worker threads for the canvas sweep");
    add_file(solve_cmd);

    CLI::App* free_cmd = app.add_subcommand("check-free", "test (P5+rK1)-freeness");
    free_cmd->add_option("--r", opt.r, "pattern parameter r")->required();
    add_file(free_cmd);

    CLI::App* mwis_cmd = app.add_subcommand("mwis", "maximum-weight independent set");
    mwis_cmd->add_option("--r", opt.r, "pattern parameter r")->required();
    mwis_cmd->add_flag("--no-validate", opt.no_validate, "skip the input freeness check");
    add_file(mwis_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive WMkCIS oracle (debugging)");
    oracle_cmd->add_option("--k", opt.k, "number of colours")->required();
    oracle_cmd->add_flag("--lists", opt.use_lists, "use the colour lists from the file");
    oracle_cmd->add_option("--cap", opt.cap, "vertex cap for the oracle");
    add_file(oracle_cmd);

    CLI::App* canvases_cmd = app.add_subcommand("canvases", "count valid canvases (debugging)");
    canvases_cmd->add_flag("--count", opt.count, "report the canvas count");
    canvases_cmd->add_option("--k", opt.k, "number of colours")->required();
    canvases_cmd->add_option("--r", opt.r, "pattern parameter r")->required();
    canvases_cmd->add_flag("--lists", opt.use_lists, "use the colour lists from the file");
    canvases_cmd->add_flag("--canonical", opt.canonical,
                           "experimental: one canonical ordering per dominating-set guess");
    add_file(canvases_cmd);

    CLI::App* gen_cmd = app.add_subcommand("generate", "emit a reproducible free instance");
    gen_cmd->add_option("--family", opt.family, "split | cograph | p5rk1-rejection")->required();
    gen_cmd->add_option("--n", opt.n, "vertex count")->required();
    gen_cmd->add_option("--seed", opt.seed, "RNG seed")->required();
    gen_cmd->add_option("--r", opt.r, "freeness parameter for p5rk1-rejection");
    gen_cmd->add_option("--p", opt.p, "edge probability");
    gen_cmd->add_option("--weights", opt.max_weight, "random weights in [0,W]; 0 keeps unit");
    gen_cmd->add_option("--tries", opt.tries, "rejection retry budget");

    std::vector<const char*> argv;
    argv.push_back("wmkcis");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << json{{"schema", 1}, {"error", e.what()}}.dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto format_of = [&] {
        if (opt.format == "edgelist") return InstanceFormat::EdgeList;
        if (opt.format == "dimacs") return InstanceFormat::Dimacs;
        return InstanceFormat::Auto;
    };

    std::optional<Instance> parsed_inst;
    try {
        if (gen_cmd->parsed()) {
            GeneratorParams gp;
            gp.family = opt.family;
            gp.n = opt.n;
            gp.r = opt.r;
            gp.p = opt.p;
            gp.seed = opt.seed;
            gp.max_weight = opt.max_weight;
            gp.max_tries = opt.tries;
            out << serialize_instance(generate_instance(gp));
            return 0;
        }

        parsed_inst = parse_instance_file(opt.file, format_of());
        Instance& inst = *parsed_inst;
        print_warnings(inst, err);

        if (free_cmd->parsed()) {
            auto w = check_free(inst.graph, opt.r);
            json j{{"schema", 1}, {"free", !w.has_value()}};
            if (w) j["witness"] = witness_json(inst, *w);
            out << j.dump() << "\n";
            err << (w ? "not (P5+" + std::to_string(opt.r) + "K1)-free: " + w->describe()
                      : "graph is (P5+" + std::to_string(opt.r) + "K1)-free")
                << "\n";
            return w ? 2 : 0;
        }

        if (mwis_cmd->parsed()) {
            if (!opt.no_validate) {
                if (auto w = check_free(inst.graph, opt.r)) throw FreenessError(*w);
            }
            VertexSet s = mwis_p5rk1(inst.graph, opt.r);
            std::vector<std::string> verts;
            s.for_each([&](int v) { verts.push_back(inst.names[static_cast<size_t>(v)]); });
            std::sort(verts.begin(), verts.end(), name_less);
            json j{{"schema", 1}, {"weight", inst.graph.set_weight(s)}, {"vertices", verts}};
            out << j.dump() << "\n";
            err << "mwis weight " << inst.graph.set_weight(s) << ", " << verts.size()
                << " vertices\n";
            return 0;
        }

        if (oracle_cmd->parsed()) {
            ListAssignment lists = lists_for_k(inst, opt.k, opt.use_lists);
            ColouredSolution sol = oracle_wmkcis(inst.graph, lists, opt.cap);
            json j = solution_json(inst, sol);
            j["schema"] = 1;
            j["verified"] = solution_is_valid(inst.graph, lists, sol);
            out << j.dump() << "\n";
            err << "oracle weight " << sol.total_weight << "\n";
            return 0;
        }

        if (canvases_cmd->parsed()) {
            ListAssignment lists = lists_for_k(inst, opt.k, opt.use_lists);
            EnumerateOptions eo;
            eo.canonical_orderings = opt.canonical;
            uint64_t count = count_canvases(inst.graph, lists, opt.k, opt.r, eo);
            out << json{{"schema", 1}, {"count", count}}.dump() << "\n";
            err << count << " canvases\n";
            return 0;
        }

        // solve
        ListAssignment lists = lists_for_k(inst, opt.k, opt.use_lists);
        SolverConfig cfg;
        cfg.k = opt.k;
        cfg.r = opt.r;
        cfg.validate_input = !opt.no_validate;
        cfg.canonical_orderings = opt.canonical;
        cfg.jobs = opt.jobs;
        cfg.memoize = opt.memo;
        SolveResult res = solve(inst.graph, lists, cfg);
        json j = solution_json(inst, res.solution);
        j["schema"] = 1;
        j["stats"] = {{"canvases", res.stats.canvases},
                      {"pool", res.stats.pool},
                      {"wall_ms", res.stats.wall_ms}};
        j["verified"] = solution_is_valid(inst.graph, lists, res.solution);
        out << j.dump() << "\n";
        err << "weight " << res.solution.total_weight << ", "
            << res.solution.vertices.count() << " vertices, " << res.stats.canvases
            << " canvases, pool " << res.stats.pool << ", " << res.stats.wall_ms << " ms\n";
        return 0;
    } catch (const FreenessError& e) {
        json j{{"schema", 1}, {"error", e.what()}};
        if (parsed_inst) j["witness"] = witness_json(*parsed_inst, e.witness);
        out << j.dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        out << json{{"schema", 1}, {"error", e.what()}}.dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        out << json{{"schema", 1}, {"error", e.what()}}.dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wmkcis
