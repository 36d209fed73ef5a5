// Command-line front end over the forkless engine.
//
// Exit codes: 0 success (verify: all pass), 1 verify failure,
// 2 usage/parse error, 3 budget-exceeded verdict.

#include "forkless/claims.hpp"
#include "forkless/explore.hpp"
#include "forkless/io.hpp"
#include "forkless/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace forkless;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << text;
}

struct BudgetFlags {
    long long max_nodes = 0;  // 0: default (env override applies)
    long long max_weight = 0;
    long long max_depth = -1;
    int workers = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-nodes", max_nodes, "node budget (default 100000)");
        cmd->add_option("--max-weight", max_weight,
                        "arrow multiplicity budget (default 1e15)");
        cmd->add_option("--max-depth", max_depth, "depth budget (default unlimited)");
        cmd->add_option("--workers", workers, "parallel classification workers")
            ->check(CLI::PositiveNumber);
    }

    Budget to_budget() const {
        Budget b;
        if (const char* env = std::getenv("FORKLESS_MAX_NODES"); env && *env)
            b.max_nodes = static_cast<std::size_t>(std::atoll(env));
        if (max_nodes > 0) b.max_nodes = static_cast<std::size_t>(max_nodes);
        if (max_weight > 0) b.max_arrow_weight = max_weight;
        if (max_depth >= 0) b.max_depth = static_cast<int>(max_depth);
        b.workers = workers;
        b.validate();
        return b;
    }
};

MutationSeq parse_sequence(const std::string& arg, const NamedQuiver<>& nq) {
    MutationSeq seq;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        seq.push_back(nq.vertex_named(tok));
    }
    return seq;
}

int part_exit(PartStatus s) { return s == PartStatus::BudgetExceeded ? kExitBudget : kExitOk; }

void print_part_result(const ExplorationResult<std::int64_t>& res) {
    const char* what = res.mode == PartMode::Forkless ? "non-forks" : "non-pre-forks";
    switch (res.status) {
        case PartStatus::Finite:
            std::cout << "Finite: " << res.count << ' ' << what << '\n';
            break;
        case PartStatus::Empty:
            std::cout << "Empty: 0 " << what << '\n';
            break;
        case PartStatus::BudgetExceeded:
            std::cout << "BudgetExceeded";
            if (res.exploration)
                std::cout << " (" << to_string(res.exploration->stats.reason) << ", "
                          << res.exploration->graph.nodes.size() << " nodes, max weight "
                          << res.exploration->stats.max_weight_seen << ")";
            std::cout << '\n';
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact labelled quiver mutation: classification of forks, keys, pre-forks,"
                 " wings and tips, and budgeted forkless / pre-forkless exploration"};
    app.require_subcommand(1);

    std::string input, output, format = "json", seq_arg, dot_path, json_path, filter,
                expand_rule = "all";

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("quiver", input, "quiver file (JSON or text), '-' for stdin")
            ->required();
    };

    auto* c_classify = app.add_subcommand("classify", "classify a quiver");
    add_input(c_classify);
    c_classify->add_option("--out", output, "output path (default stdout)");

    auto* c_mutate = app.add_subcommand("mutate", "apply a mutation sequence");
    add_input(c_mutate);
    c_mutate->add_option("--seq", seq_arg, "comma-separated vertices, e.g. 0,1 or i,j")
        ->required();
    c_mutate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    c_mutate->add_option("--out", output, "output path (default stdout)");

    BudgetFlags b_explore, b_forkless, b_preforkless, b_finiteness, b_verify;

    auto* c_explore = app.add_subcommand("explore", "breadth-first exploration");
    add_input(c_explore);
    b_explore.attach(c_explore);
    c_explore->add_option("--expand", expand_rule, "expansion rule")
        ->check(CLI::IsMember({"all", "non-fork", "non-pre-fork"}));
    c_explore->add_option("--dot", dot_path, "write the explored graph as DOT");
    c_explore->add_option("--json", json_path, "write the explored graph as JSON");

    auto* c_forkless = app.add_subcommand("forkless", "compute the forkless part");
    add_input(c_forkless);
    b_forkless.attach(c_forkless);
    c_forkless->add_option("--dot", dot_path, "write the explored graph as DOT");
    c_forkless->add_option("--json", json_path, "write the result as JSON");

    auto* c_preforkless =
        app.add_subcommand("preforkless", "compute the pre-forkless part");
    add_input(c_preforkless);
    b_preforkless.attach(c_preforkless);
    c_preforkless->add_option("--dot", dot_path, "write the explored graph as DOT");
    c_preforkless->add_option("--json", json_path, "write the result as JSON");

    auto* c_finiteness =
        app.add_subcommand("finiteness", "decide mutation finiteness (fork witness)");
    add_input(c_finiteness);
    b_finiteness.attach(c_finiteness);
    c_finiteness->add_option("--json", json_path, "write the verdict as JSON");

    auto* c_verify = app.add_subcommand("verify", "run the builtin claim suite");
    b_verify.attach(c_verify);
    c_verify->add_option("--filter", filter, "only claims whose id contains this substring");
    c_verify->add_option("--json", json_path, "write the claim report as JSON");

    auto* c_export = app.add_subcommand("export-dot", "render a quiver as DOT");
    add_input(c_export);
    c_export->add_option("--out", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_classify) {
            auto nq = parse_quiver_auto(read_input(input));
            json j = to_json(classify(nq.quiver));
            j["names"] = nq.names;
            write_output(output, j.dump(2) + "\n");
            return kExitOk;
        }
        if (*c_mutate) {
            auto nq = parse_quiver_auto(read_input(input));
            nq.quiver = mutate_seq(nq.quiver, parse_sequence(seq_arg, nq));
            write_output(output, format == "text" ? to_text(nq) : to_json(nq).dump(2) + "\n");
            return kExitOk;
        }
        if (*c_explore) {
            auto nq = parse_quiver_auto(read_input(input));
            Budget budget = b_explore.to_budget();
            ExpandPredicate expand = [](const ClassificationReport&) { return true; };
            if (expand_rule == "non-fork")
                expand = [](const ClassificationReport& r) { return !r.is_fork(); };
            else if (expand_rule == "non-pre-fork")
                expand = [](const ClassificationReport& r) {
                    return !r.is_fork() && !r.is_prefork();
                };
            auto ex = explore(nq.quiver, budget, expand);
            if (!dot_path.empty()) write_output(dot_path, to_dot(ex.graph, nq.names));
            if (!json_path.empty())
                write_output(json_path, to_json(ex.graph, nq.names).dump(2) + "\n");
            std::cout << "nodes: " << ex.graph.nodes.size() << ", edges: " << ex.graph.edges.size()
                      << ", " << to_string(ex.stats.reason) << '\n';
            return ex.stats.complete ? kExitOk : kExitBudget;
        }
        if (*c_forkless || *c_preforkless) {
            bool fl = static_cast<bool>(*c_forkless);
            auto nq = parse_quiver_auto(read_input(input));
            Budget budget = (fl ? b_forkless : b_preforkless).to_budget();
            auto res = fl ? forkless_part(nq.quiver, budget)
                          : preforkless_part(nq.quiver, budget);
            print_part_result(res);
            if (!json_path.empty())
                write_output(json_path, to_json(res, nq.names).dump(2) + "\n");
            if (!dot_path.empty() && res.exploration)
                write_output(dot_path, to_dot(res.exploration->graph, nq.names));
            return part_exit(res.status);
        }
        if (*c_finiteness) {
            auto nq = parse_quiver_auto(read_input(input));
            auto res = mutation_finiteness(nq.quiver, b_finiteness.to_budget());
            switch (res.status) {
                case FinitenessStatus::Finite:
                    std::cout << "Finite: labelled class of size " << res.class_size << '\n';
                    break;
                case FinitenessStatus::Infinite:
                    std::cout << "Infinite: fork witness after " << res.sequence.size()
                              << " mutations\n";
                    break;
                case FinitenessStatus::Unknown:
                    std::cout << "Unknown: budget exhausted after " << res.visited
                              << " quivers\n";
                    break;
            }
            if (!json_path.empty())
                write_output(json_path, to_json(res, nq.names).dump(2) + "\n");
            return res.status == FinitenessStatus::Unknown ? kExitBudget : kExitOk;
        }
        if (*c_verify) {
            auto results = run_claims(b_verify.to_budget(), filter);
            std::cout << to_table(results);
            if (!json_path.empty()) write_output(json_path, to_json(results).dump(2) + "\n");
            for (const auto& r : results)
                if (r.status == ClaimStatus::Fail) return kExitFail;
            return kExitOk;
        }
        if (*c_export) {
            auto nq = parse_quiver_auto(read_input(input));
            write_output(output, to_dot(nq));
            return kExitOk;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const quiver_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
