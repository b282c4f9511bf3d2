#include <chromix/core.hpp>
#include <chromix/format.hpp>
#include <chromix/generators.hpp>
#include <chromix/rational.hpp>
#include <chromix/solver.hpp>
#include <chromix/sparsity.hpp>
#include <chromix/targets.hpp>
#include <chromix/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using std::string;
using std::vector;

namespace {

using namespace chromix;

struct Outcome {
    int exit_code = 0;
    string human;  // stdout payload without --json
    json result;   // "result" object with --json
};

struct InputRecord {
    string path;
    string digest;
};

vector<InputRecord> g_inputs;

auto fnv1a64(const string & data) -> string
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", (unsigned long long)h);
    return buffer;
}

auto read_input(const string & path) -> string
{
    string data;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        data = buffer.str();
    }
    else {
        std::ifstream in{ path, std::ios::binary };
        if (! in)
            throw Error{ ErrorKind::Domain, "cannot open '" + path + "'" };
        std::ostringstream buffer;
        buffer << in.rdbuf();
        data = buffer.str();
    }
    g_inputs.push_back({ path, fnv1a64(data) });
    return data;
}

auto load_nmgraph(const string & path) -> NmGraph
{
    return parse_nmgraph(read_input(path));
}

auto load_undirected(const string & path) -> UndirectedGraph
{
    return parse_undirected(read_input(path));
}

// coloring files: one "<vertex> <color>" pair per line, '#' comments
auto load_coloring(const string & path, int order) -> Coloring
{
    auto text = read_input(path);
    Coloring coloring;
    coloring.map.assign(order, -1);
    std::istringstream in{ text };
    string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != string::npos)
            line = line.substr(0, hash);
        std::istringstream fields{ line };
        long long v, c;
        if (! (fields >> v))
            continue;
        if (! (fields >> c) || v < 0 || v >= order || c < 0)
            throw Error{ ErrorKind::Syntax, "bad coloring entry", number };
        coloring.map[v] = int(c);
        coloring.palette = std::max(coloring.palette, int(c) + 1);
    }
    for (int v = 0; v < order; ++v)
        if (coloring.map[v] == -1)
            throw Error{ ErrorKind::Domain, "no color for vertex " + std::to_string(v) };
    return coloring;
}

auto map_to_json(const vector<int> & map) -> json
{
    return json(map);
}

auto map_to_text(const vector<int> & map) -> string
{
    std::ostringstream out;
    for (std::size_t i = 0; i < map.size(); ++i)
        out << (i ? " " : "") << map[i];
    return out.str();
}

struct SolverFlags {
    std::int64_t budget = 50'000'000;
    string var_order = "mrv";
    string propagation = "ac";
    std::uint64_t seed = 0;

    void attach(CLI::App * cmd)
    {
        cmd->add_option("--budget", budget, "node budget for the search");
        cmd->add_option("--var-order", var_order, "mrv|static")->check(CLI::IsMember({ "mrv", "static" }));
        cmd->add_option("--propagation", propagation, "ac|none")->check(CLI::IsMember({ "ac", "none" }));
        cmd->add_option("--seed", seed, "search seed (reserved)");
    }

    auto config() const -> SearchConfig
    {
        SearchConfig cfg;
        cfg.node_budget = budget;
        cfg.var_order = var_order == "static" ? VarOrder::Static : VarOrder::Mrv;
        cfg.propagation = propagation == "none" ? Propagation::None : Propagation::ArcConsistency;
        cfg.seed = seed;
        return cfg;
    }
};

auto describe_status(SearchStatus status) -> string
{
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    default: return "budget-exhausted";
    }
}

auto status_exit(SearchStatus status) -> int
{
    switch (status) {
    case SearchStatus::Found: return 0;
    case SearchStatus::None: return 1;
    default: return 3;
    }
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    auto started = std::chrono::steady_clock::now();

    CLI::App app{ "chromix: homomorphisms, universal targets and sparsity for (n,m)-graphs" };
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand; inherited by all subcommands
    bool use_json = false;
    int workers = 1;
    app.add_flag("--json", use_json, "emit a JSON run report on stdout");
    app.add_option("--workers", workers, "worker threads for subset enumeration")->check(CLI::PositiveNumber);

    // ---- target ----
    auto * target = app.add_subcommand("target", "emit a universal target");
    target->require_subcommand(1);
    int tn = 0, tm = 0;
    auto * tw = target->add_subcommand("walecki", "Walecki-style target on 2(2n+m)+1 vertices");
    tw->add_option("--n", tn, "arc types")->required();
    tw->add_option("--m", tm, "edge types")->required();
    target->add_subcommand("t03", "15-vertex (0,3) target");
    target->add_subcommand("t11", "21-vertex (1,1) target");

    // ---- check ----
    auto * check = app.add_subcommand("check", "verify a structural property");
    check->require_subcommand(1);
    string check_file, coloring_file;
    int reg_d = 0;
    auto * cp = check->add_subcommand("p21", "property P_{2,1}");
    cp->add_option("file", check_file, "(n,m)-graph file or -")->required();
    auto * ce = check->add_subcommand("expansion", "neighborhood expansion of all proper subsets");
    ce->add_option("file", check_file, "(n,m)-graph file or -")->required();
    auto * cr = check->add_subcommand("regular", "every vertex has exactly d alpha-neighbors");
    cr->add_option("file", check_file, "(n,m)-graph file or -")->required();
    cr->add_option("--d", reg_d, "required count per type")->required();
    auto * cf = check->add_subcommand("forbidden", "absence of the forbidden configuration");
    cf->add_option("file", check_file, "(n,m)-graph file or -")->required();
    auto * ca = check->add_subcommand("acyclic", "coloring is proper and acyclic");
    ca->add_option("graph", check_file, "undirected graph file or -")->required();
    ca->add_option("coloring", coloring_file, "coloring file: '<vertex> <color>' lines")->required();

    // ---- hom ----
    auto * hom = app.add_subcommand("hom", "homomorphism searches");
    hom->require_subcommand(1);
    string hom_g, hom_h;
    int circ_g = 0;
    SolverFlags find_flags, circ_flags;
    auto * hf = hom->add_subcommand("find", "search for a homomorphism G -> H");
    hf->add_option("source", hom_g, "(n,m)-graph file or -")->required();
    hf->add_option("target", hom_h, "(n,m)-graph file or -")->required();
    find_flags.attach(hf);
    auto * ht = hom->add_subcommand("two-tree", "greedy partial 2-tree embedding into a P_{2,1} target");
    ht->add_option("source", hom_g, "(n,m)-graph file or -")->required();
    ht->add_option("target", hom_h, "(n,m)-graph file or -")->required();
    auto * hc = hom->add_subcommand("circular", "homomorphism to the odd cycle C_{2g+1}");
    hc->add_option("source", hom_g, "undirected graph file or -")->required();
    hc->add_option("--g", circ_g, "half the odd girth target")->required();
    circ_flags.attach(hc);

    // ---- chrom ----
    string chrom_file;
    int max_k = 0;
    SolverFlags chrom_flags;
    auto * chrom = app.add_subcommand("chrom", "exact chromatic number");
    chrom->add_option("source", chrom_file, "(n,m)-graph file or -")->required();
    chrom->add_option("--max-k", max_k, "give up beyond this many classes")->required();
    chrom_flags.attach(chrom);

    // ---- sparsity ----
    string sparse_file;
    bool emit_forests = false;
    int an = 0, am = 0;
    auto * mad_cmd = app.add_subcommand("mad", "maximum average degree, exact");
    mad_cmd->add_option("graph", sparse_file, "undirected graph file or -")->required();
    auto * arb_cmd = app.add_subcommand("arboricity", "minimum forest decomposition");
    arb_cmd->add_option("graph", sparse_file, "undirected graph file or -")->required();
    arb_cmd->add_flag("--emit-forests", emit_forests, "include the edge -> forest assignment");
    auto * acol_cmd = app.add_subcommand("acyclic-color", "constructive acyclic coloring");
    acol_cmd->add_option("graph", sparse_file, "undirected graph file or -")->required();
    acol_cmd->add_option("--n", an, "arc types")->required();
    acol_cmd->add_option("--m", am, "edge types")->required();

    // ---- gen ----
    auto * gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    int gadget_k = 0, gen_nv = 0, gn = 0, gm = 2;
    std::uint64_t gen_seed = 0;
    double delete_prob = 0.2;
    int min_chain = 0;
    auto * gg = gen->add_subcommand("gadget", "clique gadget forcing k classes");
    gg->add_option("--k", gadget_k, "clique size")->required();
    gg->add_option("--n", gn, "arc types")->required();
    gg->add_option("--m", gm, "edge types")->required();
    auto * gp = gen->add_subcommand("p2t", "random partial 2-tree");
    gp->add_option("--nv", gen_nv, "vertex count")->required();
    gp->add_option("--seed", gen_seed, "random seed")->required();
    gp->add_option("--n", gn, "arc types");
    gp->add_option("--m", gm, "edge types");
    gp->add_option("--delete-prob", delete_prob, "chance a non-base edge is dropped");
    auto * gl = gen->add_subcommand("lowmad", "random graph with mad below 2 + 2/(4(2n+m)-1)");
    gl->add_option("--nv", gen_nv, "approximate vertex count")->required();
    gl->add_option("--seed", gen_seed, "random seed")->required();
    gl->add_option("--n", gn, "arc types");
    gl->add_option("--m", gm, "edge types");
    gl->add_option("--min-chain", min_chain, "minimum internal vertices per chain");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            std::cout << app.help();
            return 0;
        }
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    Outcome outcome;
    string command;
    try {
        if (tw->parsed()) {
            command = "target walecki";
            auto g = walecki_target(Signature{ tn, tm });
            outcome.human = serialize(g);
            outcome.result = { { "graph", serialize(g) } };
        }
        else if (target->get_subcommand("t03")->parsed()) {
            command = "target t03";
            outcome.human = serialize(t03());
            outcome.result = { { "graph", serialize(t03()) } };
        }
        else if (target->get_subcommand("t11")->parsed()) {
            command = "target t11";
            outcome.human = serialize(t11());
            outcome.result = { { "graph", serialize(t11()) } };
        }
        else if (cp->parsed()) {
            command = "check p21";
            auto r = has_p21(load_nmgraph(check_file));
            outcome.exit_code = r.ok ? 0 : 1;
            outcome.result = { { "property", "p21" }, { "holds", r.ok } };
            if (r.ok)
                outcome.human = "p21 holds\n";
            else {
                auto & w = *r.witness;
                outcome.human = "p21 fails: u=" + std::to_string(w.u) + " v=" + std::to_string(w.v)
                    + " alpha=" + std::to_string(w.alpha) + " beta=" + std::to_string(w.beta) + "\n";
                outcome.result["witness"] = { { "u", w.u }, { "v", w.v }, { "alpha", w.alpha }, { "beta", w.beta } };
            }
        }
        else if (ce->parsed()) {
            command = "check expansion";
            auto r = expansion_ok(load_nmgraph(check_file), workers);
            outcome.exit_code = r.ok ? 0 : 1;
            outcome.result = { { "property", "expansion" }, { "holds", r.ok } };
            if (r.ok)
                outcome.human = "expansion holds\n";
            else {
                auto & w = *r.witness;
                outcome.human = "expansion fails: S={" + map_to_text(w.subset) + "} alpha=" + std::to_string(w.alpha) + "\n";
                outcome.result["witness"] = { { "subset", w.subset }, { "alpha", w.alpha } };
            }
        }
        else if (cr->parsed()) {
            command = "check regular";
            auto r = regularity_check(load_nmgraph(check_file), reg_d);
            outcome.exit_code = r.ok ? 0 : 1;
            outcome.result = { { "property", "regular" }, { "d", reg_d }, { "holds", r.ok } };
            if (r.ok)
                outcome.human = "regularity holds\n";
            else {
                auto & w = *r.witness;
                outcome.human = "regularity fails: vertex=" + std::to_string(w.vertex) + " alpha=" + std::to_string(w.alpha)
                    + " count=" + std::to_string(w.count) + "\n";
                outcome.result["witness"] = { { "vertex", w.vertex }, { "alpha", w.alpha }, { "count", w.count } };
            }
        }
        else if (cf->parsed()) {
            command = "check forbidden";
            auto r = forbidden_config_free(load_nmgraph(check_file));
            outcome.exit_code = r.ok ? 0 : 1;
            outcome.result = { { "property", "forbidden" }, { "holds", r.ok } };
            if (r.ok)
                outcome.human = "no forbidden configuration\n";
            else {
                auto & w = *r.witness;
                outcome.human = "forbidden configuration: u=" + std::to_string(w.u) + " y=" + std::to_string(w.y)
                    + " alpha=" + std::to_string(w.alpha) + " gamma=" + std::to_string(w.gamma)
                    + " x=" + std::to_string(w.x) + " z=" + std::to_string(w.z) + "\n";
                outcome.result["witness"] = { { "u", w.u }, { "y", w.y }, { "alpha", w.alpha },
                    { "gamma", w.gamma }, { "x", w.x }, { "z", w.z } };
            }
        }
        else if (ca->parsed()) {
            command = "check acyclic";
            auto g = load_undirected(check_file);
            auto c = load_coloring(coloring_file, g.order());
            auto r = is_acyclic_coloring(g, c);
            outcome.exit_code = r.ok ? 0 : 1;
            outcome.result = { { "property", "acyclic" }, { "holds", r.ok } };
            if (r.ok)
                outcome.human = "coloring is acyclic\n";
            else {
                auto & w = *r.witness;
                if (w.improper_edge)
                    outcome.human = "improper edge: " + std::to_string(w.u) + " " + std::to_string(w.v) + "\n";
                else
                    outcome.human = "bichromatic cycle on colors " + std::to_string(w.color_a) + ","
                        + std::to_string(w.color_b) + ": " + map_to_text(w.cycle) + "\n";
                outcome.result["witness"] = { { "improper_edge", w.improper_edge }, { "u", w.u }, { "v", w.v },
                    { "color_a", w.color_a }, { "color_b", w.color_b }, { "cycle", w.cycle } };
            }
        }
        else if (hf->parsed()) {
            command = "hom find";
            auto g = load_nmgraph(hom_g);
            auto h = load_nmgraph(hom_h);
            auto r = find_hom(g, h, find_flags.config());
            outcome.exit_code = status_exit(r.status);
            outcome.result = { { "status", describe_status(r.status) }, { "nodes", r.nodes } };
            outcome.human = describe_status(r.status) + "\n";
            if (r.status == SearchStatus::Found) {
                outcome.human = "found: " + map_to_text(r.hom->map) + "\n";
                outcome.result["map"] = map_to_json(r.hom->map);
            }
        }
        else if (ht->parsed()) {
            command = "hom two-tree";
            auto g = load_nmgraph(hom_g);
            auto t = load_nmgraph(hom_h);
            auto r = two_tree_hom(g, t);
            outcome.human = "found: " + map_to_text(r.map) + "\n";
            outcome.result = { { "status", "found" }, { "map", map_to_json(r.map) } };
        }
        else if (hc->parsed()) {
            command = "hom circular";
            auto g = load_undirected(hom_g);
            auto r = circular_hom(g, circ_g, circ_flags.config());
            outcome.exit_code = status_exit(r.status);
            outcome.result = { { "status", describe_status(r.status) }, { "g", circ_g } };
            outcome.human = describe_status(r.status) + "\n";
            if (r.status == SearchStatus::Found) {
                outcome.human = "found: " + map_to_text(r.map) + "\n";
                outcome.result["map"] = map_to_json(r.map);
            }
        }
        else if (chrom->parsed()) {
            command = "chrom";
            auto g = load_nmgraph(chrom_file);
            auto r = exact_chromatic(g, max_k, chrom_flags.config());
            if (r.k.has_value()) {
                outcome.human = "k=" + std::to_string(*r.k) + "\npartition: " + map_to_text(r.certificate->partition) + "\n";
                outcome.result = { { "k", *r.k }, { "partition", map_to_json(r.certificate->partition) },
                    { "quotient", serialize(r.certificate->quotient) } };
            }
            else {
                outcome.exit_code = 1;
                outcome.human = "exceeds max-k\n";
                outcome.result = { { "status", "exceeds-max-k" }, { "max_k", max_k } };
            }
        }
        else if (mad_cmd->parsed()) {
            command = "mad";
            auto value = mad(load_undirected(sparse_file));
            outcome.human = value.str() + "\n";
            outcome.result = { { "mad", value.str() }, { "num", value.num }, { "den", value.den } };
        }
        else if (arb_cmd->parsed()) {
            command = "arboricity";
            auto g = load_undirected(sparse_file);
            auto r = arboricity(g);
            outcome.human = "r=" + std::to_string(r.r) + "\n";
            outcome.result = { { "r", r.r } };
            if (emit_forests) {
                outcome.human += "assignment: " + map_to_text(r.decomposition.assignment) + "\n";
                outcome.result["assignment"] = map_to_json(r.decomposition.assignment);
            }
        }
        else if (acol_cmd->parsed()) {
            command = "acyclic-color";
            auto g = load_undirected(sparse_file);
            auto r = acyclic_coloring_construct(g, Signature{ an, am });
            // loadable by `check acyclic`: one "vertex color" line each
            outcome.human = "# palette " + std::to_string(r.coloring.palette) + "\n";
            for (std::size_t v = 0; v < r.coloring.map.size(); ++v)
                outcome.human += std::to_string(v) + " " + std::to_string(r.coloring.map[v]) + "\n";
            outcome.result = { { "palette", r.coloring.palette }, { "colors", map_to_json(r.coloring.map) },
                { "b", r.b }, { "layer_k", json(r.layer_k) } };
        }
        else if (gg->parsed()) {
            command = "gen gadget";
            auto g = kclique_gadget(gadget_k, Signature{ gn, gm });
            outcome.human = serialize(g);
            outcome.result = { { "graph", serialize(g) } };
        }
        else if (gp->parsed()) {
            command = "gen p2t";
            GenSpec spec;
            spec.seed = gen_seed;
            spec.sig = Signature{ gn, gm };
            spec.delete_prob = delete_prob;
            auto g = random_partial_2tree(gen_nv, spec);
            outcome.human = serialize(g);
            outcome.result = { { "graph", serialize(g) } };
        }
        else if (gl->parsed()) {
            command = "gen lowmad";
            GenSpec spec;
            spec.seed = gen_seed;
            spec.sig = Signature{ gn, gm };
            spec.min_chain = min_chain;
            auto g = random_low_mad(gen_nv, spec);
            outcome.human = serialize(g);
            outcome.result = { { "graph", serialize(g) } };
        }
    }
    catch (const Error & e) {
        outcome.exit_code = 2;
        outcome.result = { { "error", e.what() } };
        std::cerr << "error: " << e.what() << "\n";
    }
    catch (const std::exception & e) {
        outcome.exit_code = 2;
        outcome.result = { { "error", e.what() } };
        std::cerr << "internal error: " << e.what() << "\n";
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    if (use_json) {
        json report;
        report["schema"] = "chromix-report/1";
        report["command"] = command;
        report["inputs"] = json::array();
        for (auto & input : g_inputs)
            report["inputs"].push_back({ { "path", input.path }, { "digest", input.digest } });
        report["result"] = outcome.result;
        report["time_ms"] = elapsed.count();
        report["exit"] = outcome.exit_code;
        std::cout << report.dump(2) << "\n";
    }
    else
        std::cout << outcome.human;
    return outcome.exit_code;
}
