#include "gdm/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdm/abelian.hpp"
#include "gdm/constructions.hpp"
#include "gdm/feasibility.hpp"
#include "gdm/graphs.hpp"
#include "gdm/labeling.hpp"
#include "gdm/search.hpp"

namespace gdm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNotCovered = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitTimeout = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string i128_str(__int128 x) {
    if (x == 0) return "0";
    bool negative = x < 0;
    auto u = negative ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

nlohmann::json residues_json(const Element& e) { return e.residues; }

struct GroupsArgs {
    std::int64_t order = 0;
    bool json = false;
};

struct ProductArgs {
    std::string gen;
    std::string graph_file;
    int cycle = 0;
    bool json = false;
};

struct ConstructArgs {
    std::string gen;
    int cycle = 0;
    std::string group;
    bool all_groups = false;
    bool json = false;
};

struct VerifyArgs {
    std::string labeling_file;
    bool json = false;
};

struct SearchArgs {
    std::string gen;
    std::string graph_file;
    int cycle = 1;
    std::string group;
    bool all = false;
    bool no_symmetry = false;
    std::uint64_t max_nodes = 0;
    double timeout = 0;
    int jobs = 1;
    int cap = 16;
    bool json = false;
};

struct FeasArgs {
    std::int64_t r = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::string group;
    bool json = false;
};

Graph load_graph(const std::string& gen, const std::string& graph_file) {
    if (gen.empty() == graph_file.empty())
        throw std::invalid_argument("give exactly one of --gen and --graph");
    return gen.empty() ? Graph::parse_edge_list(read_file(graph_file)) : Graph::generate(gen);
}

int run_groups(const GroupsArgs& a, std::ostream& out) {
    std::vector<GroupSpec> groups = enumerate_groups(a.order);
    if (a.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const GroupSpec& g : groups) arr.push_back(g.str());
        out << arr.dump(2) << "\n";
    } else {
        for (const GroupSpec& g : groups) out << g.str() << "\n";
    }
    return kExitOk;
}

int run_product(const ProductArgs& a, std::ostream& out) {
    Graph prod = load_graph(a.gen, a.graph_file).direct_product_with_cycle(a.cycle);
    if (a.json) {
        nlohmann::json j;
        j["n"] = prod.vertex_count();
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : prod.edges()) edges.push_back({u, v});
        j["edges"] = std::move(edges);
        out << j.dump(2) << "\n";
    } else {
        out << prod.edge_list_text();
    }
    return kExitOk;
}

void describe_report(const ConstructReport& rep, std::ostream& err) {
    switch (rep.outcome) {
        case ConstructReport::Outcome::Constructed:
            err << "constructed " << rep.construction << " for " << rep.requested_group
                << ": mu = " << to_string(*rep.magic) << "\n";
            break;
        case ConstructReport::Outcome::NotCovered:
            err << "not covered for " << rep.requested_group << ": " << rep.reason << "\n";
            break;
        case ConstructReport::Outcome::PreconditionFailed:
            err << "precondition failed for " << rep.requested_group << ": " << rep.reason << "\n";
            break;
    }
}

int aggregate_exit(const std::vector<ConstructReport>& reports) {
    bool any_pf = false;
    bool any_nc = false;
    for (const ConstructReport& rep : reports) {
        any_pf = any_pf || rep.outcome == ConstructReport::Outcome::PreconditionFailed;
        any_nc = any_nc || rep.outcome == ConstructReport::Outcome::NotCovered;
    }
    if (any_pf) return kExitFailure;
    if (any_nc) return kExitNotCovered;
    return kExitOk;
}

int run_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    if (a.cycle != 4 && a.cycle != 8) throw std::invalid_argument("cycle must be 4 or 8");
    if (a.group.empty() == !a.all_groups)
        throw std::invalid_argument("give exactly one of --group and --all-groups");

    std::vector<ConstructReport> reports;
    if (a.all_groups) {
        Graph base = Graph::generate(a.gen);
        std::int64_t order = static_cast<std::int64_t>(base.vertex_count()) * a.cycle;
        for (const GroupSpec& g : enumerate_groups(order))
            reports.push_back(construct_for_spec(a.gen, a.cycle, g));
    } else {
        reports.push_back(construct_for_spec(a.gen, a.cycle, GroupSpec::parse(a.group)));
    }

    for (const ConstructReport& rep : reports) describe_report(rep, err);
    if (a.all_groups) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ConstructReport& rep : reports) arr.push_back(rep.to_json());
        out << arr.dump(2) << "\n";
    } else {
        out << reports.front().to_json().dump(2) << "\n";
    }
    return aggregate_exit(reports);
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    nlohmann::json doc = nlohmann::json::parse(read_file(a.labeling_file));
    bool array_input = doc.is_array();
    std::vector<nlohmann::json> items;
    if (array_input)
        items.assign(doc.begin(), doc.end());
    else
        items.push_back(doc);

    nlohmann::json results = nlohmann::json::array();
    bool any_fail = false;
    for (const nlohmann::json& item : items) {
        // Accepts bare labelings, single construct reports, and report
        // entries; reports without a labeling (not constructed) are skipped.
        const nlohmann::json* lab_json = nullptr;
        if (item.contains("labels"))
            lab_json = &item;
        else if (item.contains("labeling"))
            lab_json = &item["labeling"];
        if (lab_json == nullptr) {
            results.push_back({{"skipped", true}});
            err << "skipped: no labeling in entry\n";
            continue;
        }
        Labeling lab = Labeling::from_json(*lab_json);
        VerifyReport vr = lab.verify();
        nlohmann::json r;
        r["ok"] = vr.ok();
        r["is_bijection"] = vr.is_bijection;
        r["is_constant_weight"] = vr.is_constant_weight;
        if (vr.magic_constant)
            r["magic"] = residues_json(*vr.magic_constant);
        else
            r["magic"] = nullptr;
        if (!vr.offending_vertices.empty()) r["offending_vertices"] = vr.offending_vertices;
        results.push_back(std::move(r));
        if (vr.ok()) {
            err << "OK mu = " << to_string(*vr.magic_constant) << "\n";
        } else {
            any_fail = true;
            err << "FAIL: " << (vr.is_bijection ? "weights not constant" : "not a bijection")
                << "\n";
        }
    }
    out << (array_input ? results : results.front()).dump(2) << "\n";
    return any_fail ? kExitFailure : kExitOk;
}

int run_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    Graph base = load_graph(a.gen, a.graph_file);
    GroupSpec group = GroupSpec::parse(a.group);
    SearchOptions opts;
    opts.max_nodes = a.max_nodes;
    opts.timeout_seconds = a.timeout;
    opts.symmetry_breaking = !a.no_symmetry;
    opts.find_all = a.all;
    opts.jobs = a.jobs;
    opts.vertex_cap = a.cap;

    SearchOutcome res = a.cycle == 1 ? exists_labeling(base, group, opts)
                                     : search_product(base, a.cycle, group, opts);

    nlohmann::json j;
    int code = kExitOk;
    switch (res.status) {
        case SearchStatus::Found:
            j["status"] = "found";
            code = kExitOk;
            break;
        case SearchStatus::ExhaustedNone:
            j["status"] = "exhausted_none";
            code = kExitFailure;
            break;
        case SearchStatus::Timeout:
            j["status"] = "timeout";
            code = kExitTimeout;
            break;
    }
    j["nodes_explored"] = res.nodes_explored;
    j["elapsed_seconds"] = res.elapsed_seconds;
    nlohmann::json mus = nlohmann::json::array();
    for (const Element& mu : res.magic_constants) mus.push_back(residues_json(mu));
    j["magic_constants"] = std::move(mus);
    if (res.labeling) j["labeling"] = res.labeling->to_json();
    if (a.all) {
        nlohmann::json sols = nlohmann::json::array();
        for (const Labeling& lab : res.solutions) sols.push_back(lab.to_json());
        j["solutions"] = std::move(sols);
    }
    out << j.dump(2) << "\n";

    if (res.status == SearchStatus::Found)
        err << "found after " << res.nodes_explored << " nodes, mu = "
            << to_string(*res.labeling->verify().magic_constant) << "\n";
    else if (res.status == SearchStatus::ExhaustedNone)
        err << "exhausted: no labeling exists (" << res.nodes_explored << " nodes)\n";
    else
        err << "budget exceeded after " << res.nodes_explored << " nodes\n";
    return code;
}

int emit_feasibility(const std::string& predicate, const std::string& verdict,
                     const std::string& witness, bool good, std::ostream& out,
                     std::ostream& err) {
    nlohmann::json j;
    j["predicate"] = predicate;
    j["verdict"] = verdict;
    j["witness"] = witness;
    out << j.dump(2) << "\n";
    err << predicate << ": " << verdict << " (" << witness << ")\n";
    return good ? kExitOk : kExitFailure;
}

int run_feas_regular(const FeasArgs& a, std::ostream& out, std::ostream& err) {
    RegularMagic rm = regular_magic_constant(a.r, a.n);
    std::string mu = std::to_string(rm.num) + (rm.den == 1 ? "" : "/" + std::to_string(rm.den));
    if (rm.feasible)
        return emit_feasibility("regular_magic_constant", "feasible", "mu = " + mu, true, out,
                                err);
    return emit_feasibility("regular_magic_constant", "infeasible",
                            "odd regularity r = " + std::to_string(a.r) + "; mu would be " + mu,
                            false, out, err);
}

int run_feas_involution(const FeasArgs& a, std::ostream& out, std::ostream& err) {
    GroupSpec group = GroupSpec::parse(a.group);
    auto ob = involution_obstruction_bipartite_c4(a.m, a.n, group);
    if (ob) return emit_feasibility("involution_obstruction_bipartite_c4", "obstruction",
                                    ob->detail, false, out, err);
    return emit_feasibility(
        "involution_obstruction_bipartite_c4", "none",
        "sum of all elements " + to_string(group.sum_all()) + " lies in 4*" + group.str(), true,
        out, err);
}

int run_feas_acg(const FeasArgs& a, std::ostream& out, std::ostream& err) {
    bool ok = acg_c4_distance_magic(a.m, a.n);
    std::string witness;
    if ((a.m + a.n) % 2 != 0) {
        witness = "m+n = " + std::to_string(a.m + a.n) + " is odd";
    } else {
        __int128 lhs = 8 * static_cast<__int128>(a.m + a.n) + 1;
        __int128 rhs = 2 * (8 * static_cast<__int128>(a.n) + 1) * (8 * static_cast<__int128>(a.n) + 1) - 1;
        witness = "(8m+8n+1)^2 = " + i128_str(lhs * lhs) + (ok ? " >= " : " < ") + i128_str(rhs) +
                  " = 2(8n+1)^2 - 1";
    }
    return emit_feasibility("acg_c4_distance_magic", ok ? "holds" : "violated", witness, ok, out,
                            err);
}

int run_feas_c8(const FeasArgs& a, std::ostream& out, std::ostream& err) {
    bool ok = c8_necessary(a.m, a.n);
    std::string witness;
    if ((a.m + a.n) % 2 != 0) {
        witness = "m+n = " + std::to_string(a.m + a.n) + " is odd";
    } else {
        __int128 lhs = 16 * static_cast<__int128>(a.m + a.n) + 1;
        __int128 rhs =
            2 * (16 * static_cast<__int128>(a.n) + 1) * (16 * static_cast<__int128>(a.n) + 1) - 1;
        witness = "(16m+16n+1)^2 = " + i128_str(lhs * lhs) + (ok ? " >= " : " < ") +
                  i128_str(rhs) + " = 2(16n+1)^2 - 1";
    }
    return emit_feasibility("c8_necessary", ok ? "holds" : "violated", witness, ok, out, err);
}

int run_feas_bipartite(const FeasArgs& a, std::ostream& out, std::ostream& err) {
    GroupSpec group = GroupSpec::parse(a.group);
    bool exists = bipartite_c4_characterization(a.m, a.n, group) == Characterization::Exists;
    std::string witness = exists ? "group " + group.str() + " has a Z2 x Z2 direct summand"
                                 : "group " + group.str() + " has no Z2 x Z2 direct summand";
    return emit_feasibility("bipartite_c4_characterization", exists ? "exists" : "not_exists",
                            witness, exists, out, err);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group distance magic labelings of direct products with cycles"};
    app.require_subcommand(1);

    GroupsArgs ga;
    CLI::App* groups = app.add_subcommand("groups", "List Abelian groups of a given order");
    groups->add_option("--order", ga.order, "group order")->required();
    groups->add_flag("--json", ga.json, "emit a JSON array");

    ProductArgs pa;
    CLI::App* product = app.add_subcommand("product", "Emit the edge list of (base) x C_k");
    product->add_option("--gen", pa.gen, "base graph generator spec");
    product->add_option("--graph", pa.graph_file, "base graph edge-list file");
    product->add_option("--cycle", pa.cycle, "cycle length k >= 3")->required();
    product->add_flag("--json", pa.json, "emit JSON instead of an edge list");

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "Build and verify a labeling");
    construct->add_option("--gen", ca.gen, "base graph generator spec")->required();
    construct->add_option("--cycle", ca.cycle, "cycle length, 4 or 8")->required();
    construct->add_option("--group", ca.group, "group spec, e.g. 2x2x3");
    construct->add_flag("--all-groups", ca.all_groups, "every group of the product order");
    construct->add_flag("--json", ca.json, "output is always JSON; accepted for symmetry");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "Verify labelings from a JSON file");
    verify->add_option("--labeling", va.labeling_file, "labeling or construct-report JSON file")
        ->required();
    verify->add_flag("--json", va.json, "output is always JSON; accepted for symmetry");

    SearchArgs sa;
    CLI::App* search = app.add_subcommand("search", "Exhaustive search for a labeling");
    search->add_option("--gen", sa.gen, "graph generator spec");
    search->add_option("--graph", sa.graph_file, "graph edge-list file");
    search->add_option("--cycle", sa.cycle, "take the product with C_k first (1 = as-is)");
    search->add_option("--group", sa.group, "group spec")->required();
    search->add_flag("--all", sa.all, "enumerate all labelings");
    search->add_flag("--no-symmetry", sa.no_symmetry, "disable negation symmetry breaking");
    search->add_option("--max-nodes", sa.max_nodes, "node budget (0 = unlimited)");
    search->add_option("--timeout", sa.timeout, "time budget in seconds (0 = unlimited)");
    search->add_option("--jobs", sa.jobs, "worker threads");
    search->add_option("--cap", sa.cap, "vertex-count cap");
    search->add_flag("--json", sa.json, "output is always JSON; accepted for symmetry");

    FeasArgs fa;
    CLI::App* feas = app.add_subcommand("feasibility", "Obstruction and necessary-condition checks");
    feas->require_subcommand(1);
    CLI::App* f_reg = feas->add_subcommand("regular", "magic constant of an r-regular graph");
    f_reg->add_option("--r", fa.r, "regularity")->required();
    f_reg->add_option("--n", fa.n, "vertex count")->required();
    CLI::App* f_inv = feas->add_subcommand("involution", "K_{m,n} x C4 involution-sum obstruction");
    f_inv->add_option("--m", fa.m, "odd side")->required();
    f_inv->add_option("--n", fa.n, "even side")->required();
    f_inv->add_option("--group", fa.group, "group spec")->required();
    CLI::App* f_acg = feas->add_subcommand("acg", "K_{m,n} integer-label distance magic test");
    f_acg->add_option("--m", fa.m, "smaller side")->required();
    f_acg->add_option("--n", fa.n, "larger side")->required();
    CLI::App* f_c8 = feas->add_subcommand("c8", "K_{m,n} x C8 necessary condition");
    f_c8->add_option("--m", fa.m, "smaller side")->required();
    f_c8->add_option("--n", fa.n, "larger side")->required();
    CLI::App* f_bip = feas->add_subcommand("bipartite", "K_{m,n} x C4 existence dichotomy");
    f_bip->add_option("--m", fa.m, "odd side")->required();
    f_bip->add_option("--n", fa.n, "even side")->required();
    f_bip->add_option("--group", fa.group, "group spec")->required();
    for (CLI::App* sub : {f_reg, f_inv, f_acg, f_c8, f_bip})
        sub->add_flag("--json", fa.json, "output is always JSON; accepted for symmetry");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (app.got_subcommand(groups)) return run_groups(ga, out);
        if (app.got_subcommand(product)) return run_product(pa, out);
        if (app.got_subcommand(construct)) return run_construct(ca, out, err);
        if (app.got_subcommand(verify)) return run_verify(va, out, err);
        if (app.got_subcommand(search)) return run_search(sa, out, err);
        if (app.got_subcommand(feas)) {
            if (feas->got_subcommand(f_reg)) return run_feas_regular(fa, out, err);
            if (feas->got_subcommand(f_inv)) return run_feas_involution(fa, out, err);
            if (feas->got_subcommand(f_acg)) return run_feas_acg(fa, out, err);
            if (feas->got_subcommand(f_c8)) return run_feas_c8(fa, out, err);
            if (feas->got_subcommand(f_bip)) return run_feas_bipartite(fa, out, err);
        }
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    err << "error: no subcommand given\n";
    return kExitInvalid;
}

}  // namespace gdm
