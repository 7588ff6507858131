#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace gammafuzz;
using namespace gammafuzz::cli;

int main(int argc, char** argv) {
    CLI::App app{"Finite Gamma-semirings, fuzzy ideals and their laws"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    std::optional<std::uint64_t> budget;
    bool no_zero = false;
    app.add_flag("--json", opts.json, "Print a JSON document instead of text");
    app.add_option("--budget", budget, "Maximum enumeration candidates (default: $GAMMAFUZZ_BUDGET or 1000000)");
    app.add_flag("--no-zero-convention", no_zero, "Do not force mu(0) = 1 while enumerating");
    app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::Range(1U, 256U));

    std::string path;
    std::optional<std::string> chain;
    std::string kind_text = "two-sided";
    std::string subset, op, lhs, rhs;
    std::vector<std::string> laws{"all"};

    auto* validate = app.add_subcommand("validate", "Check the axioms of a structure file");
    validate->add_option("file", path)->required();

    auto* check = app.add_subcommand("check-ideal", "Classify a fuzzy subset");
    check->add_option("file", path)->required();
    check->add_option("subset", subset, "Subset name, theta, one or [p/q,...]")->required();
    check->add_option("--kind", kind_text)->capture_default_str();

    auto* opcmd = app.add_subcommand("op", "Apply sum, prod, compose or meet");
    opcmd->add_option("file", path)->required();
    opcmd->add_option("op", op)->required()->check(CLI::IsMember({"sum", "prod", "compose", "meet"}));
    opcmd->add_option("lhs", lhs)->required();
    opcmd->add_option("rhs", rhs)->required();

    auto* enumerate = app.add_subcommand("enumerate", "List the fuzzy ideals with grades in a chain");
    enumerate->add_option("file", path)->required();
    enumerate->add_option("--chain", chain, "Comma separated grades, e.g. 0,1/2,1");
    enumerate->add_option("--kind", kind_text)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run laws over the ideal families");
    verify->add_option("file", path)->required();
    verify->add_option("--chain", chain, "Comma separated grades, e.g. 0,1/2,1");
    verify->add_option("--laws", laws, "Law ids or prefixes, or all")->delimiter(',')->capture_default_str();

    auto* regular = app.add_subcommand("regular", "Decide multiplicative regularity");
    regular->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        opts.budget = budget ? *budget : budget_from_environment();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    opts.zero_convention = !no_zero;

    std::optional<IdealKind> kind;
    try {
        kind = parse_ideal_kind(kind_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    if (*validate) return cmd_validate(path, opts, std::cout, std::cerr);
    if (*check) return cmd_check_ideal(path, subset, *kind, opts, std::cout, std::cerr);
    if (*opcmd) return cmd_op(path, op, lhs, rhs, opts, std::cout, std::cerr);
    if (*enumerate) return cmd_enumerate(path, chain, *kind, opts, std::cout, std::cerr);
    if (*verify) return cmd_verify(path, chain, laws, opts, std::cout, std::cerr);
    return cmd_regular(path, opts, std::cout, std::cerr);
}
