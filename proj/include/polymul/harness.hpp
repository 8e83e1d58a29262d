#pragma once

#include "polymul/baseline.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polymul {

enum class Command { verify, bench, space, predict };
enum class AlgoId { fp, fplo, fphi, splo, sphi, mp, ifp, isplo, isphi, imp };
enum class BaseId { naive, karatsuba };

const char* command_name(Command c);
const char* algo_name(AlgoId a);
const char* base_name(BaseId b);
bool parse_command(const std::string& s, Command& out);
bool parse_algo(const std::string& s, AlgoId& out);
bool parse_base(const std::string& s, BaseId& out);

struct RunConfig {
    Command command = Command::verify;
    AlgoId algo = AlgoId::fp;
    BaseId base = BaseId::naive;
    std::size_t min_n = 2;
    std::size_t max_n = 256;
    std::size_t step = 0; // 0 = double n each cell, otherwise arithmetic step
    std::uint64_t modulus = 998244353;
    std::uint64_t seed = 1;
    std::size_t trials = 0; // 0 = command default (verify: 100, others: 1)
    std::string out_path;   // empty = caller prints to stdout
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// Engines behind the CLI.  They are pure with respect to the config: the
/// same RunConfig yields a byte-identical output string.  Randomness comes
/// from mt19937_64 seeded per (seed, algo, n, trial); the environment
/// variable POLYMUL_THREADS only changes how cells are scheduled, never what
/// they compute.
CommandResult run_verify(const RunConfig& cfg);
CommandResult run_bench(const RunConfig& cfg);
CommandResult run_space(const RunConfig& cfg);
CommandResult run_predict(const RunConfig& cfg);
CommandResult run_command(const RunConfig& cfg);

/// The n cells a config expands to (doubling or stepping from min_n to max_n).
std::vector<std::size_t> n_values(const RunConfig& cfg);

/// The base profiles a run is wired to, per --base.
struct ProfileSet {
    AlgoProfile fp;
    AlgoProfile fplus_lo;
    AlgoProfile fplus_hi;
    AlgoProfile splo;
    AlgoProfile sphi;
    AlgoProfile mp;
};
ProfileSet make_profiles(BaseId base);

/// Content hashing for input-purity checks.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t hash_coeffs(const std::vector<Coeff>& v);

/// Deterministic seed mixing for cells and trials.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Effective trial count for a command.
std::size_t effective_trials(const RunConfig& cfg);

} // namespace polymul
