// etacalc command line: parse a space description, compute the eta invariant,
// decide equivariant null-cobordism with a pairing certificate, or run one of
// the named verification suites.
//
//   etacalc eta <space.json>   [--json] [--verify]
//   etacalc null <space.json>  [--json] [--verify]
//   etacalc check <suite>      [--json] [--verify] [--seed <n>]
//
// Exit codes: 0 success (for `null`: the class vanishes; for `check`: all
// checks pass), 2 decisive negative (non-null / failed checks), 1 errors.

#include "etacalc/check_suites.hpp"
#include "etacalc/cobordism.hpp"
#include "etacalc/json_io.hpp"
#include "etacalc/space_ast.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace etacalc;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct Args {
    std::string command;
    std::string target;
    bool json = false;
    bool verify = false;
    unsigned seed = 1;
};

void print_usage(std::ostream& out) {
    out << "usage: etacalc <command> [options]\n"
           "\n"
           "commands:\n"
           "  eta <space.json>    print the eta invariant and the stationary point count\n"
           "  null <space.json>   decide null-cobordism; print a pairing certificate\n"
           "  check <suite>       run a verification suite; one of:\n"
           "                     ";
    for (const std::string& name : check_suite_names())
        out << " " << name;
    out << "\n"
           "\n"
           "options:\n"
           "  --json              machine-readable JSON output\n"
           "  --verify            also run sign-action oracle cross-checks\n"
           "  --seed <n>          seed for randomized suites (default 1)\n";
}

Args parse_args(int argc, char** argv) {
    Args args;
    std::vector<std::string> positional;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--json") {
            args.json = true;
        } else if (arg == "--verify") {
            args.verify = true;
        } else if (arg == "--seed") {
            if (i + 1 >= argc)
                throw std::invalid_argument("--seed requires a value");
            args.seed = static_cast<unsigned>(std::stoul(argv[++i]));
        } else if (arg == "--help" || arg == "-h") {
            print_usage(std::cout);
            std::exit(kExitOk);
        } else if (!arg.empty() && arg[0] == '-') {
            throw std::invalid_argument("unknown option " + arg);
        } else {
            positional.push_back(arg);
        }
    }
    if (positional.size() != 2)
        throw std::invalid_argument("expected a command and one argument (see --help)");
    args.command = positional[0];
    args.target = positional[1];
    return args;
}

// Runs the oracle cross-checks; returns them, or exits with an error message
// if any disagree.
std::vector<CheckResult> run_verification(const SpaceAst& ast) {
    std::vector<CheckResult> checks = oracle_cross_checks(ast);
    for (const CheckResult& c : checks) {
        if (!c.pass) {
            std::cerr << "error: oracle cross-check failed: " << c.name << " (" << c.detail
                      << ")\n";
            std::exit(kExitError);
        }
    }
    return checks;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::json out = nlohmann::json::object();
    for (const CheckResult& c : checks)
        out[c.name] = c.pass;
    return out;
}

int cmd_eta(const Args& args) {
    const SpaceAst ast = parse_space_file(args.target);
    const BuiltSpace space = build_space(ast);
    std::vector<CheckResult> checks;
    if (args.verify)
        checks = run_verification(ast);
    const RepRingElement e = eta(space.model);
    if (args.json) {
        nlohmann::json out{{"eta", e.to_string()},
                           {"terms", element_to_json(e)},
                           {"points", space.model.points().size()},
                           {"rank", space.model.rank().value()},
                           {"dimension", space.model.dimension()},
                           {"space", space_ast_to_json(ast)},
                           {"checks", checks_to_json(checks)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "eta = " << e.to_string() << "\n";
        std::cout << "points = " << space.model.points().size() << "\n";
    }
    return kExitOk;
}

int cmd_null(const Args& args) {
    const SpaceAst ast = parse_space_file(args.target);
    const BuiltSpace space = build_space(ast);
    std::vector<CheckResult> checks;
    if (args.verify)
        checks = run_verification(ast);
    const RepRingElement e = eta(space.model);
    const bool null = e.is_zero();
    const PairingWitness witness = pairing_witness(space.model);
    if (args.json) {
        nlohmann::json out{{"eta", e.to_string()},
                           {"null", null},
                           {"witness", witness_to_json(witness)},
                           {"checks", checks_to_json(checks)},
                           {"space", space_ast_to_json(ast)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (null ? "null" : "non-null") << "\n";
        std::cout << "eta = " << e.to_string() << "\n";
        for (const auto& [a, b] : witness.pairs)
            std::cout << "pair: " << a << " <-> " << b << "\n";
        for (const std::string& r : witness.residual)
            std::cout << "residual: " << r << "\n";
    }
    return null ? kExitOk : kExitNegative;
}

int cmd_check(const Args& args) {
    const CheckOptions options{args.seed, args.verify, 200};
    const SuiteReport report = run_check_suite(args.target, options);
    if (args.json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        nlohmann::json out{{"suite", report.suite},
                           {"pass", report.pass()},
                           {"checks", checks},
                           {"seed", args.seed}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& c : report.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.detail
                      << ")\n";
        std::cout << (report.pass() ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return report.pass() ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    try {
        const Args args = parse_args(argc, argv);
        if (args.command == "eta") return cmd_eta(args);
        if (args.command == "null") return cmd_null(args);
        if (args.command == "check") return cmd_check(args);
        throw std::invalid_argument("unknown command \"" + args.command + "\" (see --help)");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
