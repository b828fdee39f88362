#include "cards/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "cards/convergence.hpp"
#include "cards/dot.hpp"
#include "cards/errors.hpp"
#include "cards/graph.hpp"
#include "cards/oracle.hpp"
#include "cards/order.hpp"
#include "cards/rules.hpp"

namespace cards {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

// Either the shared stream or a file opened for --out.
class OutputTarget {
public:
    OutputTarget(std::ostream& fallback, const std::string& path)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ValidationError("cannot open output file '" + path +
                                      "'");
            }
        }
    }
    std::ostream& stream() {
        return file_.is_open() ? static_cast<std::ostream&>(file_)
                               : fallback_;
    }

private:
    std::ostream& fallback_;
    std::ofstream file_;
};

struct CommonFlags {
    std::int64_t cards = 0;
    int players = 0;
    std::string origin;
    std::string format = "dot";
    std::string out_path;
    bool reduced = false;
    bool pairs = false;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

Configuration parse_origin(const std::string& text, const GameParams& params) {
    const Configuration origin = Configuration::parse(text);
    validate(origin, params);
    return origin;
}

int cmd_enumerate(const CommonFlags& flags, std::ostream& out,
                  std::ostream& err) {
    const GameParams params = make_params(flags.cards, flags.players);
    OutputTarget target(out, flags.out_path);
    const auto nodes = enumerate_configurations(params, flags.node_budget);
    std::uint64_t duals = 0;
    for (const Configuration& node : nodes) {
        target.stream() << node.str();
        if (is_dual(node, params)) {
            target.stream() << " dual";
            ++duals;
        }
        if (is_fixed_point(node)) target.stream() << " fixed";
        target.stream() << "\n";
    }
    // The summary goes to the error stream so stdout stays a pure listing.
    err << "total=" << nodes.size() << " dual=" << duals << "\n";
    return kExitOk;
}

int cmd_graph(const CommonFlags& flags, std::ostream& out, std::ostream&) {
    const GameParams params = make_params(flags.cards, flags.players);
    OutputTarget target(out, flags.out_path);
    const TransitionGraph g = build_graph(params, flags.node_budget);
    if (flags.reduced) {
        const ReducedGraph rg = reduce(g);
        if (flags.format == "dot") {
            write_dot(target.stream(), rg);
        } else {
            write_records(target.stream(), rg);
        }
    } else {
        if (flags.format == "dot") {
            write_dot(target.stream(), g);
        } else {
            write_records(target.stream(), g);
        }
    }
    return kExitOk;
}

int cmd_lattice(const CommonFlags& flags, std::ostream& out, std::ostream&) {
    const GameParams params = make_params(flags.cards, flags.players);
    const Configuration origin = parse_origin(flags.origin, params);
    OutputTarget target(out, flags.out_path);
    const TransitionGraph g = build_graph(params, flags.node_budget);
    const PosetView pv = build_poset(reduce(g), origin);
    if (flags.format == "dot") {
        write_dot(target.stream(), pv);
    } else {
        write_records(target.stream(), pv, flags.pairs);
    }
    return kExitOk;
}

int cmd_converge(const CommonFlags& flags, std::ostream& out, std::ostream&) {
    const GameParams params = make_params(flags.cards, flags.players);
    const Configuration origin = parse_origin(flags.origin, params);
    OutputTarget target(out, flags.out_path);
    target.stream() << convergence_report(params, origin).records();
    return kExitOk;
}

struct VerifyFlags {
    std::int64_t max_cards = 10;
    int max_players = 5;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::string out_path;
    bool corrupt_dual_rule = false;  // negative-control harness hook
};

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
    if (flags.max_players < 2 || flags.max_cards < 0) {
        throw ValidationError("verify needs --max-players >= 2 and "
                              "--max-cards >= 0");
    }
    OutputTarget target(out, flags.out_path);
    oracle::SweepOptions options;
    options.max_n = flags.max_cards;
    options.max_p = flags.max_players;
    options.node_budget = flags.node_budget;
    if (flags.corrupt_dual_rule) {
        options.hooks.is_dual = [](const GameParams& params,
                                   const Configuration& a) {
            return is_dual(a, params) &&
                   !(a == canonical_dual(params));  // deliberately wrong
        };
    }
    const auto outcomes = oracle::run_sweep(options);
    std::uint64_t failed = 0, inconclusive = 0;
    for (const auto& outcome : outcomes) {
        target.stream() << "check=" << outcome.check
                        << " n=" << outcome.params.n
                        << " p=" << outcome.params.p
                        << " instances=" << outcome.instances_checked
                        << " failures=" << outcome.failures.size()
                        << " result="
                        << (!outcome.failures.empty()
                                ? "fail"
                                : (outcome.inconclusive ? "inconclusive"
                                                        : "pass"))
                        << "\n";
        for (const std::string& failure : outcome.failures) {
            target.stream() << "  failure " << failure << "\n";
        }
        if (!outcome.failures.empty()) ++failed;
        if (outcome.inconclusive) ++inconclusive;
    }
    err << "checks=" << outcomes.size() << " failed=" << failed
        << " inconclusive=" << inconclusive << "\n";
    if (failed > 0) return kExitVerification;
    if (inconclusive > 0) return kExitBudget;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"State space, reachability order and convergence times of "
                 "the ring card-passing game",
                 "cardgame"};
    app.require_subcommand(1);

    CommonFlags flags;
    VerifyFlags verify_flags;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-n,--cards", flags.cards, "total number of cards")
            ->required();
        cmd->add_option("-p,--players", flags.players,
                        "number of players on the ring")
            ->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", flags.out_path,
                        "write to a file instead of stdout");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", flags.format,
                        "output format (default dot)")
            ->check(CLI::IsMember({"dot", "records"}));
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--node-budget", flags.node_budget,
                        "largest allowed state count (default 1000000)");
    };

    CLI::App* enumerate = app.add_subcommand(
        "enumerate",
        "list every configuration with dual/fixed annotations; the "
        "total/dual summary goes to stderr");
    add_params(enumerate);
    add_output(enumerate);
    add_budget(enumerate);

    CLI::App* graph = app.add_subcommand(
        "graph", "export the transition graph (DOT by default)");
    add_params(graph);
    add_output(graph);
    add_format(graph);
    add_budget(graph);
    graph->add_flag("--reduced", flags.reduced,
                    "collapse the dual class into the BOT vertex");

    CLI::App* lattice = app.add_subcommand(
        "lattice",
        "Hasse diagram and shot-vector labels of the configurations "
        "reachable from --origin");
    add_params(lattice);
    add_output(lattice);
    add_format(lattice);
    add_budget(lattice);
    lattice->add_option("--origin", flags.origin,
                        "origin configuration, comma-separated")
        ->required();
    lattice->add_flag("--pairs", flags.pairs,
                      "also list inf/sup for every element pair (records "
                      "format only)");

    CLI::App* converge = app.add_subcommand(
        "converge", "convergence report for --origin as key=value lines");
    add_params(converge);
    add_output(converge);
    converge->add_option("--origin", flags.origin,
                         "origin configuration, comma-separated")
        ->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "run the brute-force verification sweep");
    verify->add_option("--max-cards", verify_flags.max_cards,
                       "largest card count in the sweep (default 10)");
    verify->add_option("--max-players", verify_flags.max_players,
                       "largest player count in the sweep (default 5)");
    verify->add_option("--node-budget", verify_flags.node_budget,
                       "largest allowed state count per instance");
    verify->add_option("--out", verify_flags.out_path,
                       "write records to a file instead of stdout");
    verify
        ->add_flag("--corrupt-dual-rule", verify_flags.corrupt_dual_rule,
                   "negative control: corrupt the dual predicate")
        ->group("");  // hidden; test harness hook

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(flags, out, err);
        if (graph->parsed()) return cmd_graph(flags, out, err);
        if (lattice->parsed()) return cmd_lattice(flags, out, err);
        if (converge->parsed()) return cmd_converge(flags, out, err);
        if (verify->parsed()) return cmd_verify(verify_flags, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    err << "error: no subcommand given\n";
    return kExitValidation;
}

}  // namespace cards
