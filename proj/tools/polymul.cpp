// Command-line front end: verify / bench / space / predict over the product
// algorithms.  All measurement happens in the library engines; this file only
// parses flags, validates them, and routes the deterministic output.
#include "polymul/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{
        "polymul: space-metered polynomial products over Z/m with verified "
        "in-place reductions"};
    app.require_subcommand(1);

    std::string algo_s = "fp";
    std::string base_s = "naive";
    std::size_t min_n = 2;
    std::size_t max_n = 256;
    std::size_t step = 0;
    bool doubling = false;
    unsigned long long modulus = 998244353ULL;
    unsigned long long seed = 1;
    std::size_t trials = 0;
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algo", algo_s,
                        "algorithm: fp|fplo|fphi|splo|sphi|mp|ifp|isplo|isphi|imp")
            ->capture_default_str();
        cmd->add_option("--base", base_s, "base profile: naive|karatsuba")
            ->capture_default_str();
        cmd->add_option("--min-n", min_n, "smallest size")->capture_default_str();
        cmd->add_option("--max-n", max_n, "largest size")->capture_default_str();
        cmd->add_option("--step", step,
                        "arithmetic step between sizes (default: doubling)");
        cmd->add_flag("--double", doubling, "double the size between cells");
        cmd->add_option("--modulus", modulus, "ring modulus, at least 2")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "PRNG seed (mt19937_64 derived per cell)")
            ->capture_default_str();
        cmd->add_option("--trials", trials,
                        "random instances per size (verify only; default 100)");
        cmd->add_option("--out", out_path, "write the report to this file");
    };

    CLI::App* c_verify = app.add_subcommand(
        "verify", "check results against the dense matrix-vector oracle");
    CLI::App* c_bench = app.add_subcommand(
        "bench", "count ring operations and emit CSV rows");
    CLI::App* c_space = app.add_subcommand(
        "space", "report peak work registers and emit CSV rows");
    CLI::App* c_predict = app.add_subcommand(
        "predict", "print model bounds next to measured costs");
    for (CLI::App* cmd : {c_verify, c_bench, c_space, c_predict}) {
        add_common(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help itself for -h; every parse failure is usage error 2.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    polymul::RunConfig cfg;
    if (c_verify->parsed()) cfg.command = polymul::Command::verify;
    if (c_bench->parsed()) cfg.command = polymul::Command::bench;
    if (c_space->parsed()) cfg.command = polymul::Command::space;
    if (c_predict->parsed()) cfg.command = polymul::Command::predict;

    if (!polymul::parse_algo(algo_s, cfg.algo)) {
        std::fprintf(stderr, "error: unknown --algo '%s'\n", algo_s.c_str());
        return 2;
    }
    if (!polymul::parse_base(base_s, cfg.base)) {
        std::fprintf(stderr, "error: unknown --base '%s'\n", base_s.c_str());
        return 2;
    }
    if (modulus < 2) {
        std::fprintf(stderr, "error: --modulus must be at least 2\n");
        return 2;
    }
    if (min_n < 1 || min_n > max_n) {
        std::fprintf(stderr, "error: need 1 <= --min-n <= --max-n\n");
        return 2;
    }
    if (max_n > (std::size_t{1} << 22)) {
        std::fprintf(stderr, "error: --max-n too large\n");
        return 2;
    }
    if (step > 0 && doubling) {
        std::fprintf(stderr, "error: --step and --double are exclusive\n");
        return 2;
    }
    cfg.min_n = min_n;
    cfg.max_n = max_n;
    cfg.step = doubling ? 0 : step;
    cfg.modulus = modulus;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.out_path = out_path;

    const polymul::CommandResult res = polymul::run_command(cfg);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
            return 2;
        }
        f << res.output;
    } else {
        std::cout << res.output;
    }
    return res.exit_code;
}
