// rainbow-forge: generation, transforms, cycle search, structural analysis
// and the verification battery for edge-colored and oriented graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/constructions.hpp"
#include "rainbow/io.hpp"
#include "rainbow/json_reports.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/suite.hpp"
#include "rainbow/transforms.hpp"

namespace {

using nlohmann::json;
using namespace rainbow;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RAINBOW_FORGE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw input_error("RAINBOW_FORGE_BUDGET is not a number");
        }
    }
    return SearchBudget::kDefault;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content << (content.empty() || content.back() == '\n' ? "" : "\n");
    else
        save_text(path, content);
}

struct GenerateArgs {
    std::string kind;
    int n = 9;
    std::vector<int> sizes;
    std::string out;
    std::string partition_out;
    std::string format = "text";
};

int run_generate(const GenerateArgs& args) {
    std::array<int, 3> sizes{2, 2, 2};
    if (!args.sizes.empty()) {
        if (args.sizes.size() != 3) throw input_error("--sizes needs exactly three values");
        sizes = {args.sizes[0], args.sizes[1], args.sizes[2]};
    }

    std::optional<ColoredConstruction> colored;
    std::optional<OrientedConstruction> oriented;
    if (args.kind == "cplus")
        colored = build_cplus(args.n);
    else if (args.kind == "matching")
        colored = build_matching(args.n);
    else if (args.kind == "hard")
        colored = build_hard(args.n);
    else if (args.kind == "canonical") {
        ColoredConstruction c = build_cplus(args.n);
        c.graph = build_canonical(c.parts);
        colored = std::move(c);
    } else if (args.kind == "blowup")
        oriented = build_blowup(sizes[0], sizes[1], sizes[2]);
    else if (args.kind == "appendix-g1")
        oriented = build_appendix_g1(sizes[0], sizes[1], sizes[2]);
    else if (args.kind == "appendix-g2")
        oriented = build_appendix_g2(sizes[0], sizes[1], sizes[2]);
    else
        throw input_error("unknown construction kind: " + args.kind);

    const TriPartition& parts = colored ? colored->parts : oriented->parts;
    if (args.format == "text") {
        emit(args.out, colored ? write_text(colored->graph) : write_text(oriented->graph));
    } else if (args.format == "json") {
        json j = json::parse(colored ? write_json(colored->graph) : write_json(oriented->graph));
        j["partition"] = parts.assignment();
        json meta = json::object();
        if (colored && !colored->matching.empty()) {
            json m = json::array();
            for (auto [a, b] : colored->matching) m.push_back({a, b});
            meta["matching"] = m;
        }
        if (colored && colored->star) meta["star"] = *colored->star;
        if (colored && colored->x) meta["x"] = *colored->x;
        if (colored && colored->y) meta["y"] = *colored->y;
        if (oriented && oriented->x) meta["x"] = *oriented->x;
        if (oriented && oriented->y) meta["y"] = *oriented->y;
        if (!meta.empty()) j["meta"] = meta;
        emit(args.out, j.dump(2));
    } else {
        throw input_error("format must be text or json");
    }
    if (!args.partition_out.empty()) emit(args.partition_out, write_text(parts));
    return kExitOk;
}

int run_transform(const std::string& in, const std::string& out, const std::string& policy_name,
                  std::uint64_t seed, const std::string& format) {
    RepresentativePolicy policy;
    if (policy_name == "lowest")
        policy.mode = RepresentativeMode::LowestNeighbor;
    else if (policy_name == "random") {
        policy.mode = RepresentativeMode::RandomNeighbor;
        policy.seed = seed;
    } else
        throw input_error("policy must be lowest or random");

    AnyGraph g = load_graph(in);
    if (std::holds_alternative<EdgeColoredGraph>(g)) {
        Digraph a = associated_digraph(std::get<EdgeColoredGraph>(g), policy);
        emit(out, format == "json" ? write_json(a) : write_text(a));
    } else {
        EdgeColoredGraph det = determined_colored_graph(std::get<Digraph>(g));
        emit(out, format == "json" ? write_json(det) : write_text(det));
    }
    return kExitOk;
}

int run_search(const std::string& in, const std::string& kind, int length, bool count_mode,
               std::uint64_t budget_limit) {
    AnyGraph g = load_graph(in);
    SearchBudget budget(budget_limit);
    json out;
    out["kind"] = kind;
    out["length"] = length;

    if (kind == "walk") {
        if (!std::holds_alternative<Digraph>(g)) throw input_error("walk search needs a digraph");
        ClosedWalk walk = has_closed_walk(std::get<Digraph>(g), length);
        out["exists"] = walk.exists;
        if (walk.exists) out["witness"] = json{{"vertices", walk.vertices}};
    } else if (kind == "directed") {
        if (!std::holds_alternative<Digraph>(g))
            throw input_error("directed cycle search needs a digraph");
        const Digraph& d = std::get<Digraph>(g);
        if (count_mode)
            out["count"] = count_directed_cycles(d, length, &budget);
        else if (auto w = find_directed_cycle(d, length, &budget))
            out["witness"] = to_json(*w);
        else
            out["witness"] = nullptr;
    } else {
        if (!std::holds_alternative<EdgeColoredGraph>(g))
            throw input_error(kind + " search needs an edge-colored graph");
        const EdgeColoredGraph& ecg = std::get<EdgeColoredGraph>(g);
        ColorConstraint cc;
        if (kind == "rainbow")
            cc = ColorConstraint::Rainbow;
        else if (kind == "proper")
            cc = ColorConstraint::ProperlyColored;
        else if (kind == "any")
            cc = ColorConstraint::None;
        else
            throw input_error("search kind must be rainbow, proper, any, directed or walk");
        if (count_mode) {
            std::int64_t count = 0;
            enumerate_cycles(ecg, length, cc, budget, [&](const CycleWitness&) {
                ++count;
                return true;
            });
            out["count"] = count;
        } else {
            std::optional<CycleWitness> found;
            enumerate_cycles(ecg, length, cc, budget, [&](const CycleWitness& w) {
                found = w;
                return false;
            });
            if (found)
                out["witness"] = to_json(*found);
            else
                out["witness"] = nullptr;
        }
    }
    out["expansions"] = budget.used;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_analyze(const std::string& in, const std::string& partition_path, bool search_partition,
                const std::string& lambda_text, const std::string& mode_name,
                std::uint64_t budget_limit, std::uint64_t seed) {
    Rational lambda = Rational::parse(lambda_text);
    AnyGraph g = load_graph(in);
    PartitionSearchMode mode = mode_name == "local" ? PartitionSearchMode::LocalSearch
                                                    : PartitionSearchMode::Exhaustive;

    if (std::holds_alternative<Digraph>(g)) {
        const Digraph& d = std::get<Digraph>(g);
        json out;
        if (search_partition) {
            PartitionSearchResult r = find_extremal_partition(d, lambda, mode, budget_limit, seed);
            out["complete"] = r.complete;
            out["evaluated"] = r.evaluated;
            out["found"] = r.found ? to_json(*r.found) : json(nullptr);
            if (!r.found && !r.complete) out["note"] = "absence is inconclusive in local-search mode";
        } else {
            TriPartition parts = partition_path.empty() ? TriPartition::index_blocks(d.vertex_count())
                                                        : load_partition(partition_path);
            auto [ok, result] = is_lambda_extremal(d, parts, lambda);
            out["lambda"] = lambda.str();
            out["is_lambda_extremal"] = ok;
            out["result"] = to_json(result);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    const EdgeColoredGraph& ecg = std::get<EdgeColoredGraph>(g);
    TriPartition parts;
    json note;
    if (!partition_path.empty()) {
        parts = load_partition(partition_path);
    } else if (search_partition) {
        // Definition of colored-graph extremality quantifies over associated
        // digraphs; the verdict below is relative to the fixed policy.
        Digraph assoc = associated_digraph(ecg);
        PartitionSearchResult r = find_extremal_partition(assoc, lambda, mode, budget_limit, seed);
        if (!r.found)
            throw input_error(r.complete
                                  ? "no lambda-extremal partition exists for the associated digraph"
                                  : "no lambda-extremal partition found (inconclusive)");
        parts = r.found->partition;
        note = "partition found on the fixed-policy associated digraph";
    } else {
        throw input_error("analyze needs --partition FILE or --search");
    }
    StructureReport report = structure_report(ecg, parts, lambda);
    json out = to_json(report);
    if (!note.is_null()) out["note"] = note;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_suite_cmd(int max_n, std::vector<int> lengths, std::uint64_t budget, std::uint64_t seed,
                  const std::string& format) {
    if (lengths.empty()) lengths = {3, 4, 5, 6, 7, 8};
    VerificationSuite suite = run_paper_suite(max_n, lengths, budget, seed);
    if (format == "json") {
        std::cout << to_json(suite).dump(2) << "\n";
    } else {
        for (const auto& c : suite.checks) {
            std::printf("[%-12s] %s%s\n", c.status.c_str(), c.name.c_str(),
                        c.detail.empty() ? "" : ("  -- " + c.detail).c_str());
        }
        std::printf("pass %d  fail %d  vacuous %d  inconclusive %d\n", suite.count("pass"),
                    suite.count("fail"), suite.count("vacuous"), suite.count("inconclusive"));
    }
    return suite.any_fail() ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow-forge: constructions, transforms and cycle searches "
                 "for edge-colored and oriented graphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "emit a construction");
    generate->add_option("--kind", gen.kind,
                         "cplus|matching|hard|canonical|blowup|appendix-g1|appendix-g2")
        ->required();
    generate->add_option("--n", gen.n, "vertex count (colored kinds)");
    generate->add_option("--sizes", gen.sizes, "part sizes a,b,c (digraph kinds)")
        ->delimiter(',');
    generate->add_option("--out", gen.out, "output path ('-' for stdout)");
    generate->add_option("--partition-out", gen.partition_out, "also write the partition");
    generate->add_option("--format", gen.format, "text|json");

    std::string t_in, t_out, t_policy = "lowest", t_format = "text";
    std::uint64_t t_seed = 0;
    auto* transform = app.add_subcommand("transform", "edge-colored <-> digraph transforms");
    transform->add_option("--in", t_in)->required();
    transform->add_option("--out", t_out, "output path ('-' for stdout)");
    transform->add_option("--policy", t_policy, "lowest|random");
    transform->add_option("--seed", t_seed, "seed for the random policy");
    transform->add_option("--format", t_format, "text|json");

    std::string s_in, s_kind = "rainbow";
    int s_length = 4;
    bool s_count = false, s_first = false;
    std::uint64_t s_budget = default_budget();
    auto* search = app.add_subcommand("search", "cycle and walk searches");
    search->add_option("--graph", s_in)->required();
    search->add_option("--kind", s_kind, "rainbow|proper|any|directed|walk");
    search->add_option("--length", s_length)->required();
    search->add_flag("--count", s_count, "count all cycles");
    search->add_flag("--first", s_first, "stop at the first witness (default)");
    search->add_option("--budget", s_budget, "node expansion budget");

    std::string a_in, a_partition, a_lambda = "0.01", a_mode = "exhaustive";
    bool a_search = false;
    std::uint64_t a_budget = default_budget(), a_seed = 0;
    auto* analyze = app.add_subcommand("analyze", "structure report / extremality");
    analyze->add_option("--graph", a_in)->required();
    analyze->add_option("--partition", a_partition, "partition file");
    analyze->add_flag("--search", a_search, "search for an extremal partition");
    analyze->add_option("--lambda", a_lambda, "rational or decimal, default 0.01");
    analyze->add_option("--mode", a_mode, "exhaustive|local");
    analyze->add_option("--budget", a_budget);
    analyze->add_option("--seed", a_seed);

    std::string c_in;
    auto* core = app.add_subcommand("core", "positive in-degree core of a digraph");
    core->add_option("--graph", c_in)->required();

    std::string v_in, v_beta = "0";
    auto* vhigh = app.add_subcommand("vhigh", "high in-degree vertex set");
    vhigh->add_option("--graph", v_in)->required();
    vhigh->add_option("--beta", v_beta, "rational or decimal");

    std::string vc_spec, vc_kind;
    int vc_n = 0;
    std::vector<int> vc_sizes, vc_lengths;
    std::uint64_t vc_budget = default_budget();
    auto* verify = app.add_subcommand("verify-construction", "run a construction's checklist");
    verify->add_option("--spec", vc_spec, "JSON spec file {kind, n, sizes}");
    verify->add_option("--kind", vc_kind, "inline spec: construction kind");
    verify->add_option("--n", vc_n, "inline spec: vertex count");
    verify->add_option("--sizes", vc_sizes, "inline spec: part sizes")->delimiter(',');
    verify->add_option("--lengths", vc_lengths, "cycle lengths, e.g. 4,5,7,8")->delimiter(',');
    verify->add_option("--budget", vc_budget);

    int su_max_n = 11;
    std::vector<int> su_lengths;
    std::uint64_t su_budget = default_budget(), su_seed = 2023;
    std::string su_format = "text";
    auto* suite = app.add_subcommand("suite", "run the whole verification battery");
    suite->add_option("--max-n", su_max_n);
    suite->add_option("--lengths", su_lengths)->delimiter(',');
    suite->add_option("--budget", su_budget);
    suite->add_option("--seed", su_seed);
    suite->add_option("--format", su_format, "text|json");

    int e_n = 9, e_length = 4, e_trials = 100;
    std::uint64_t e_seed = 1;
    auto* explore = app.add_subcommand("explore", "sample random colorings at the degree bound");
    explore->add_option("--n", e_n);
    explore->add_option("--length", e_length);
    explore->add_option("--trials", e_trials);
    explore->add_option("--seed", e_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return run_generate(gen);
        if (transform->parsed()) return run_transform(t_in, t_out, t_policy, t_seed, t_format);
        if (search->parsed()) return run_search(s_in, s_kind, s_length, s_count && !s_first, s_budget);
        if (analyze->parsed())
            return run_analyze(a_in, a_partition, a_search, a_lambda, a_mode, a_budget, a_seed);
        if (core->parsed()) {
            AnyGraph g = load_graph(c_in);
            if (!std::holds_alternative<Digraph>(g)) throw input_error("core needs a digraph");
            CoreResult r = positive_indegree_core(std::get<Digraph>(g));
            json out{{"kept", r.kept},
                     {"core_n", r.core.vertex_count()},
                     {"core_arcs", r.core.arcs()},
                     {"out_degrees_preserved", r.out_degrees_preserved}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (vhigh->parsed()) {
            AnyGraph g = load_graph(v_in);
            if (!std::holds_alternative<Digraph>(g)) throw input_error("vhigh needs a digraph");
            Bitset set = v_high(std::get<Digraph>(g), Rational::parse(v_beta));
            json out{{"beta", v_beta}, {"vertices", set.to_vector()}};
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            ConstructionSpecDesc spec;
            if (!vc_spec.empty()) {
                std::ifstream in(vc_spec);
                if (!in) throw input_error("cannot open spec file: " + vc_spec);
                json j = json::parse(in, nullptr, false);
                if (j.is_discarded()) throw input_error("bad JSON in spec file");
                spec.kind = j.value("kind", "");
                spec.n = j.value("n", 0);
                auto sizes = j.value("sizes", std::vector<int>{});
                for (std::size_t i = 0; i < sizes.size() && i < 3; ++i) spec.sizes[i] = sizes[i];
            } else {
                spec.kind = vc_kind;
                spec.n = vc_n;
                for (std::size_t i = 0; i < vc_sizes.size() && i < 3; ++i)
                    spec.sizes[i] = vc_sizes[i];
            }
            if (spec.kind.empty()) throw input_error("verify-construction needs --spec or --kind");
            if (vc_lengths.empty()) vc_lengths = {4, 5, 7, 8};
            SearchBudget budget(vc_budget);
            ConstructionChecklist list = verify_construction(spec, vc_lengths, budget);
            std::cout << to_json(list).dump(2) << "\n";
            return list.all_passed() ? kExitOk : kExitCheckFailed;
        }
        if (suite->parsed()) return run_suite_cmd(su_max_n, su_lengths, su_budget, su_seed, su_format);
        if (explore->parsed()) {
            std::cout << to_json(explore_threshold(e_n, e_length, e_trials, e_seed)).dump(2)
                      << "\n";
            return kExitOk;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const contract_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
