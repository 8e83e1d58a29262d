#include "polymul/harness.hpp"

#include "polymul/analysis.hpp"
#include "polymul/inplace.hpp"
#include "polymul/oracle.hpp"
#include "polymul/tisp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <thread>

namespace polymul {

// ---------------------------------------------------------------------------
// Names and parsing.
// ---------------------------------------------------------------------------

const char* command_name(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::bench: return "bench";
        case Command::space: return "space";
        case Command::predict: return "predict";
    }
    return "?";
}

const char* algo_name(AlgoId a) {
    switch (a) {
        case AlgoId::fp: return "fp";
        case AlgoId::fplo: return "fplo";
        case AlgoId::fphi: return "fphi";
        case AlgoId::splo: return "splo";
        case AlgoId::sphi: return "sphi";
        case AlgoId::mp: return "mp";
        case AlgoId::ifp: return "ifp";
        case AlgoId::isplo: return "isplo";
        case AlgoId::isphi: return "isphi";
        case AlgoId::imp: return "imp";
    }
    return "?";
}

const char* base_name(BaseId b) {
    return b == BaseId::naive ? "naive" : "karatsuba";
}

bool parse_command(const std::string& s, Command& out) {
    for (Command c : {Command::verify, Command::bench, Command::space, Command::predict}) {
        if (s == command_name(c)) {
            out = c;
            return true;
        }
    }
    return false;
}

bool parse_algo(const std::string& s, AlgoId& out) {
    for (AlgoId a : {AlgoId::fp, AlgoId::fplo, AlgoId::fphi, AlgoId::splo, AlgoId::sphi,
                     AlgoId::mp, AlgoId::ifp, AlgoId::isplo, AlgoId::isphi, AlgoId::imp}) {
        if (s == algo_name(a)) {
            out = a;
            return true;
        }
    }
    return false;
}

bool parse_base(const std::string& s, BaseId& out) {
    for (BaseId b : {BaseId::naive, BaseId::karatsuba}) {
        if (s == base_name(b)) {
            out = b;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Hashing and seeding.
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t hash_coeffs(const std::vector<Coeff>& v) {
    static_assert(sizeof(Coeff) == sizeof(std::uint64_t), "Coeff must hash as raw bytes");
    return fnv1a64(v.data(), v.size() * sizeof(Coeff));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// ---------------------------------------------------------------------------
// Config expansion.
// ---------------------------------------------------------------------------

std::vector<std::size_t> n_values(const RunConfig& cfg) {
    POLYMUL_ASSERT(cfg.min_n >= 1 && cfg.min_n <= cfg.max_n, "bad n range");
    std::vector<std::size_t> out;
    for (std::size_t n = cfg.min_n; n <= cfg.max_n;) {
        out.push_back(n);
        const std::size_t next = cfg.step ? n + cfg.step : n * 2;
        if (next <= n) {
            break;
        }
        n = next;
    }
    return out;
}

std::size_t effective_trials(const RunConfig& cfg) {
    if (cfg.command == Command::verify) {
        return cfg.trials ? cfg.trials : 100;
    }
    // bench/space/predict measure one deterministic instance per cell.
    return 1;
}

ProfileSet make_profiles(BaseId base) {
    ProfileSet s;
    if (base == BaseId::naive) {
        s.fp = make_naive_fp_profile();
        s.fplus_lo = make_naive_fplus_lo_profile();
        s.fplus_hi = make_naive_fplus_hi_profile();
        s.splo = make_naive_sp_lo_profile();
        s.sphi = make_naive_sp_hi_profile();
        s.mp = make_naive_mp_profile();
        return s;
    }
    s.fp = make_karatsuba_profile();
    s.splo = derive_osp_lo(s.fp);
    s.sphi = derive_osp_hi(s.fp);
    s.fplus_lo = make_fpplus_lo_via_sp(s.splo, s.sphi);
    s.fplus_hi = make_fphi_via_fplo(s.fplus_lo);
    s.mp = derive_omp(s.fp);
    return s;
}

// ---------------------------------------------------------------------------
// Instances.
// ---------------------------------------------------------------------------

namespace {

struct Shapes {
    std::size_t flen = 0;
    std::size_t glen = 0;
    std::size_t outlen = 0;
};

Shapes shapes_for(AlgoId algo, std::size_t n) {
    switch (algo) {
        case AlgoId::fp:
        case AlgoId::fplo:
        case AlgoId::fphi:
        case AlgoId::ifp:
            return Shapes{n, n, 2 * n - 1};
        case AlgoId::splo:
        case AlgoId::isplo:
            return Shapes{n, n, n};
        case AlgoId::sphi:
        case AlgoId::isphi:
            return Shapes{n, n, n - 1};
        case AlgoId::mp:
        case AlgoId::imp:
            return Shapes{2 * n - 1, n, n};
    }
    return Shapes{};
}

struct Instance {
    std::vector<Coeff> f;
    std::vector<Coeff> g;
    std::vector<Coeff> out;      // run target, pre-filled with random garbage
    std::vector<Coeff> out_init; // copy of the pre-run content
};

Instance gen_instance(AlgoId algo, std::size_t n, std::uint64_t modulus,
                      std::uint64_t iseed) {
    Instance inst;
    const Shapes s = shapes_for(algo, n);
    std::mt19937_64 rng(iseed);
    auto draw = [&rng, modulus]() { return Coeff{rng() % modulus}; };
    inst.f.resize(s.flen);
    inst.g.resize(s.glen);
    inst.out.resize(s.outlen);
    for (auto& c : inst.f) c = draw();
    for (auto& c : inst.g) c = draw();
    // Every target starts as garbage: overwrite algorithms must not care,
    // and the additive windows of fplo/fphi treat it as their accumulator h.
    for (auto& c : inst.out) c = draw();
    inst.out_init = inst.out;
    return inst;
}

std::vector<Coeff> expected_for(AlgoId algo, const Instance& inst,
                                std::uint64_t modulus) {
    InputView f = InputView::whole(inst.f.data(), inst.f.size());
    InputView g = InputView::whole(inst.g.data(), inst.g.size());
    const std::size_t n = inst.g.size();
    switch (algo) {
        case AlgoId::fp:
        case AlgoId::ifp:
            return toeplitz_oracle(ProductKind::FP, f, g, modulus);
        case AlgoId::fplo: {
            std::vector<Coeff> e = toeplitz_oracle(ProductKind::FP, f, g, modulus);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                e[i].v = (e[i].v + inst.out_init[i].v % modulus) % modulus;
            }
            return e;
        }
        case AlgoId::fphi: {
            std::vector<Coeff> e = toeplitz_oracle(ProductKind::FP, f, g, modulus);
            for (std::size_t i = n; i < 2 * n - 1; ++i) {
                e[i].v = (e[i].v + inst.out_init[i].v % modulus) % modulus;
            }
            return e;
        }
        case AlgoId::splo:
        case AlgoId::isplo:
            return toeplitz_oracle(ProductKind::SPlo, f, g, modulus);
        case AlgoId::sphi:
        case AlgoId::isphi:
            return toeplitz_oracle(ProductKind::SPhi, f, g, modulus);
        case AlgoId::mp:
        case AlgoId::imp:
            return toeplitz_oracle(ProductKind::MP, f, g, modulus);
    }
    return {};
}

struct ExecResult {
    OpCounter ops;
    std::size_t peak_work = 0;
};

const AlgoProfile& profile_for(const ProfileSet& P, AlgoId algo) {
    switch (algo) {
        case AlgoId::fp: return P.fp;
        case AlgoId::fplo: return P.fplus_lo;
        case AlgoId::fphi: return P.fplus_hi;
        case AlgoId::splo: return P.splo;
        case AlgoId::sphi: return P.sphi;
        case AlgoId::mp: return P.mp;
        default: break;
    }
    POLYMUL_ASSERT(false, "profile_for: in-place algo has no single profile");
    return P.fp;
}

bool is_in_place(AlgoId algo) {
    return algo == AlgoId::ifp || algo == AlgoId::isplo || algo == AlgoId::isphi ||
           algo == AlgoId::imp;
}

/// The profile an algorithm is measured against in bench/predict ratios:
/// its immediate base, or itself for the native kernels.
const AlgoProfile& reference_profile(const ProfileSet& P, AlgoId algo) {
    switch (algo) {
        case AlgoId::fp: return P.fp;
        case AlgoId::fplo:
        case AlgoId::fphi: return P.fp;
        case AlgoId::splo: return P.splo;
        case AlgoId::sphi: return P.sphi;
        case AlgoId::mp: return P.mp;
        case AlgoId::ifp: return P.fp;
        case AlgoId::isplo: return P.splo;
        case AlgoId::isphi: return P.sphi;
        case AlgoId::imp: return P.mp;
    }
    return P.fp;
}

ExecResult execute(const ProfileSet& P, AlgoId algo, const Ring& R,
                   Instance& inst) {
    ExecResult res;
    InputView f = InputView::whole(inst.f.data(), inst.f.size());
    InputView g = InputView::whole(inst.g.data(), inst.g.size());
    OutputSpan out(inst.out.data(), inst.out.size());
    if (is_in_place(algo)) {
        switch (algo) {
            case AlgoId::ifp:
                in_place_fp_full(R, P.fp, f, g, out, res.ops);
                break;
            case AlgoId::isplo:
                in_place_sp_lo(R, P.splo, P.sphi, f, g, out, res.ops);
                break;
            case AlgoId::isphi:
                in_place_sp_hi(R, P.splo, P.sphi, f, g, out, res.ops);
                break;
            default:
                in_place_mp(R, P.mp, f, g, out, res.ops);
                break;
        }
        res.peak_work = 0; // nothing is allocated, by construction
        return res;
    }
    const AlgoProfile& prof = profile_for(P, algo);
    const std::size_t size = inst.g.size(); // balanced size for every shape
    WorkMeter meter;
    {
        WorkSession session(meter, prof.work_needed(size));
        prof.entry(R, f, g, out, session.span(), res.ops);
    }
    res.peak_work = meter.peak();
    return res;
}

/// Run the reference profile for `algo` on the same operands, into a scratch
/// buffer shaped for the reference's own kind.
ExecResult execute_reference(const ProfileSet& P, AlgoId algo, const Ring& R,
                             const Instance& inst) {
    const AlgoProfile& ref = reference_profile(P, algo);
    const std::size_t n = inst.g.size();
    std::size_t outlen = 0;
    switch (ref.kind) {
        case ProductKind::FP:
        case ProductKind::FPlusLo:
        case ProductKind::FPlusHi: outlen = 2 * n - 1; break;
        case ProductKind::SPlo: outlen = n; break;
        case ProductKind::SPhi: outlen = n - 1; break;
        case ProductKind::MP: outlen = inst.out.size(); break;
    }
    std::vector<Coeff> scratch(outlen);
    InputView f = InputView::whole(inst.f.data(), inst.f.size());
    InputView g = InputView::whole(inst.g.data(), inst.g.size());
    OutputSpan out(scratch.data(), scratch.size());
    ExecResult res;
    WorkMeter meter;
    {
        WorkSession session(meter, ref.work_needed(n));
        ref.entry(R, f, g, out, session.span(), res.ops);
    }
    res.peak_work = meter.peak();
    return res;
}

std::uint64_t instance_seed(const RunConfig& cfg, std::size_t n,
                            std::size_t trial) {
    const std::uint64_t tag =
        (static_cast<std::uint64_t>(cfg.algo) << 8) |
        static_cast<std::uint64_t>(cfg.base);
    return mix_seed(mix_seed(cfg.seed, tag, n), 0x7261696c74ULL, trial);
}

void appendf(std::string& s, const char* fmt, ...) {
    char buf[768];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, ap);
    va_end(ap);
    s += buf;
}

std::size_t thread_count() {
    const char* env = std::getenv("POLYMUL_THREADS");
    if (!env || !*env) {
        return 1;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) {
        return 1;
    }
    return static_cast<std::size_t>(v > 64 ? 64 : v);
}

} // namespace

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace {

struct CellReport {
    std::string text;
    std::size_t mismatches = 0;
    std::size_t instances = 0;
};

CellReport verify_cell(const RunConfig& cfg, const ProfileSet& P, std::size_t n,
                       std::size_t trials) {
    CellReport rep;
    const Ring R(cfg.modulus);
    std::string first_detail;
    for (std::size_t t = 0; t < trials; ++t) {
        Instance inst = gen_instance(cfg.algo, n, cfg.modulus,
                                     instance_seed(cfg, n, t));
        const std::uint64_t hf = hash_coeffs(inst.f);
        const std::uint64_t hg = hash_coeffs(inst.g);
        const std::vector<Coeff> want = expected_for(cfg.algo, inst, cfg.modulus);
        bool ok = true;
        std::string detail;
        try {
            execute(P, cfg.algo, R, inst);
        } catch (const MeterViolation& e) {
            ok = false;
            detail = std::string("meter: ") + e.what();
        }
        if (ok) {
            for (std::size_t i = 0; i < want.size(); ++i) {
                if (inst.out[i].v != want[i].v) {
                    ok = false;
                    appendf(detail,
                            "trial %zu index %zu got %llu want %llu", t, i,
                            static_cast<unsigned long long>(inst.out[i].v),
                            static_cast<unsigned long long>(want[i].v));
                    break;
                }
            }
        }
        if (ok && (hash_coeffs(inst.f) != hf || hash_coeffs(inst.g) != hg)) {
            ok = false;
            appendf(detail, "trial %zu modified a read-only input", t);
        }
        ++rep.instances;
        if (!ok) {
            ++rep.mismatches;
            if (first_detail.empty()) {
                first_detail = detail;
            }
        }
    }
    if (rep.mismatches == 0) {
        appendf(rep.text, "n=%zu trials=%zu ok\n", n, trials);
    } else {
        appendf(rep.text, "n=%zu trials=%zu FAIL (%zu mismatches; first: %s)\n",
                n, trials, rep.mismatches, first_detail.c_str());
    }
    return rep;
}

} // namespace

CommandResult run_verify(const RunConfig& cfg) {
    CommandResult res;
    const ProfileSet P = make_profiles(cfg.base);
    const std::vector<std::size_t> ns = n_values(cfg);
    const std::size_t trials = effective_trials(cfg);
    appendf(res.output, "verify algo=%s base=%s modulus=%llu seed=%llu trials=%zu\n",
            algo_name(cfg.algo), base_name(cfg.base),
            static_cast<unsigned long long>(cfg.modulus),
            static_cast<unsigned long long>(cfg.seed), trials);

    std::vector<CellReport> cells(ns.size());
    const std::size_t workers = std::min(thread_count(), ns.size() ? ns.size() : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            cells[i] = verify_cell(cfg, P, ns[i], trials);
        }
    } else {
        // Cells are seeded independently of the schedule, so any worker may
        // take any cell; output is assembled in cell order afterwards.
        std::atomic<std::size_t> next{0};
        auto pump = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= ns.size()) {
                    return;
                }
                cells[i] = verify_cell(cfg, P, ns[i], trials);
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(pump);
        }
        pump();
        for (auto& th : pool) {
            th.join();
        }
    }

    std::size_t instances = 0;
    std::size_t mismatches = 0;
    for (const auto& c : cells) {
        res.output += c.text;
        instances += c.instances;
        mismatches += c.mismatches;
    }
    if (mismatches == 0) {
        appendf(res.output, "result: PASS (%zu instances, 0 mismatches)\n", instances);
        res.exit_code = 0;
    } else {
        appendf(res.output, "result: FAIL (%zu instances, %zu mismatches)\n",
                instances, mismatches);
        res.exit_code = 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

CommandResult run_bench(const RunConfig& cfg) {
    CommandResult res;
    const ProfileSet P = make_profiles(cfg.base);
    const Ring R(cfg.modulus);
    res.output += "command,algo,base,n,modulus,seed,muls,adds,total,base_total,ratio,peak_work\n";
    for (std::size_t n : n_values(cfg)) {
        Instance inst = gen_instance(cfg.algo, n, cfg.modulus,
                                     instance_seed(cfg, n, 0));
        const ExecResult run = execute(P, cfg.algo, R, inst);
        const ExecResult ref = execute_reference(P, cfg.algo, R, inst);
        const double ratio =
            ref.ops.total() ? static_cast<double>(run.ops.total()) /
                                  static_cast<double>(ref.ops.total())
                            : 0.0;
        appendf(res.output, "bench,%s,%s,%zu,%llu,%llu,%llu,%llu,%llu,%llu,%.6f,%zu\n",
                algo_name(cfg.algo), base_name(cfg.base), n,
                static_cast<unsigned long long>(cfg.modulus),
                static_cast<unsigned long long>(cfg.seed),
                static_cast<unsigned long long>(run.ops.muls),
                static_cast<unsigned long long>(run.ops.adds),
                static_cast<unsigned long long>(run.ops.total()),
                static_cast<unsigned long long>(ref.ops.total()), ratio,
                run.peak_work);
    }
    return res;
}

// ---------------------------------------------------------------------------
// space
// ---------------------------------------------------------------------------

CommandResult run_space(const RunConfig& cfg) {
    CommandResult res;
    const ProfileSet P = make_profiles(cfg.base);
    const Ring R(cfg.modulus);
    res.output += "algo,base,n,peak_work\n";
    bool cap_violated = false;
    bool varying_peak = false;
    bool have_peak = false;
    std::size_t first_peak = 0;
    for (std::size_t n : n_values(cfg)) {
        Instance inst = gen_instance(cfg.algo, n, cfg.modulus,
                                     instance_seed(cfg, n, 0));
        const ExecResult run = execute(P, cfg.algo, R, inst);
        appendf(res.output, "%s,%s,%zu,%zu\n", algo_name(cfg.algo),
                base_name(cfg.base), n, run.peak_work);
        if (is_in_place(cfg.algo)) {
            if (!have_peak) {
                first_peak = run.peak_work;
                have_peak = true;
            } else if (run.peak_work != first_peak) {
                varying_peak = true;
            }
        } else {
            const AlgoProfile& prof = profile_for(P, cfg.algo);
            const std::size_t cap =
                static_cast<std::size_t>(ceil_mul(prof.declared_c, static_cast<long long>(n)));
            if (run.peak_work > cap) {
                cap_violated = true;
            }
        }
    }
    if (varying_peak) {
        res.output += "# error: in-place peak work is not constant across n\n";
        res.exit_code = 1;
    }
    if (cap_violated) {
        res.output += "# error: declared space cap exceeded\n";
        res.exit_code = 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// predict
// ---------------------------------------------------------------------------

namespace {

AlgoId family_in_place(AlgoId algo) {
    switch (algo) {
        case AlgoId::fp:
        case AlgoId::fplo:
        case AlgoId::fphi:
        case AlgoId::ifp: return AlgoId::ifp;
        case AlgoId::splo:
        case AlgoId::sphi:
        case AlgoId::isplo:
        case AlgoId::isphi: return AlgoId::isplo;
        case AlgoId::mp:
        case AlgoId::imp: return AlgoId::imp;
    }
    return AlgoId::ifp;
}

std::uint64_t mp_profile_muls_at(const AlgoProfile& mp, const Ring& R,
                                 std::size_t k) {
    std::vector<Coeff> f(2 * k - 1), g(k), out(k);
    WorkMeter meter;
    OpCounter ops;
    WorkSession session(meter, mp.work_needed(k));
    mp.entry(R, InputView::whole(f.data(), f.size()),
             InputView::whole(g.data(), g.size()),
             OutputSpan(out.data(), out.size()), session.span(), ops);
    return ops.muls;
}

} // namespace

CommandResult run_predict(const RunConfig& cfg) {
    CommandResult res;
    const ProfileSet P = make_profiles(cfg.base);
    const Ring R(cfg.modulus);
    const AlgoId target = family_in_place(cfg.algo);
    const std::vector<std::size_t> ns = n_values(cfg);
    appendf(res.output, "predict algo=%s base=%s modulus=%llu seed=%llu\n",
            algo_name(cfg.algo), base_name(cfg.base),
            static_cast<unsigned long long>(cfg.modulus),
            static_cast<unsigned long long>(cfg.seed));
    bool violation = false;

    RunConfig sub = cfg;
    sub.algo = target;

    if (target == AlgoId::ifp || target == AlgoId::isplo) {
        const Rat c = target == AlgoId::ifp
                          ? P.fp.declared_c
                          : (P.splo.declared_c < P.sphi.declared_c ? P.sphi.declared_c
                                                                   : P.splo.declared_c);
        const Rat bound = target == AlgoId::ifp ? predict_fp_ratio(c) : predict_sp_ratio(c);
        const double bd = bound.to_double();
        appendf(res.output,
                "model: %s total-op ratio over %s <= %.6f (%s, c = %.6f); "
                "flag threshold = bound * 1.10\n",
                algo_name(target),
                reference_profile(P, target).name.c_str(), bd,
                target == AlgoId::ifp ? "2c+7" : "2c+5", c.to_double());
        for (std::size_t n : ns) {
            Instance inst = gen_instance(target, n, cfg.modulus,
                                         instance_seed(sub, n, 0));
            const ExecResult run = execute(P, target, R, inst);
            const ExecResult ref = execute_reference(P, target, R, inst);
            const double ratio = static_cast<double>(run.ops.total()) /
                                 static_cast<double>(ref.ops.total());
            const bool ok = ratio <= bd * 1.10;
            if (!ok) {
                violation = true;
            }
            appendf(res.output,
                    "n=%zu total=%llu base_total=%llu ratio=%.6f bound=%.6f %s\n", n,
                    static_cast<unsigned long long>(run.ops.total()),
                    static_cast<unsigned long long>(ref.ops.total()), ratio, bd,
                    ok ? "ok" : "VIOLATION");
        }
    } else {
        const Rat c = P.mp.declared_c;
        const bool naive = cfg.base == BaseId::naive;
        const long double gamma =
            naive ? 2.0L : std::log(3.0L) / std::log(2.0L);
        appendf(res.output,
                "model: imp muls <= (mu+nu)*lambda*n^gamma + K*n with gamma=%.6f, "
                "c = %.6f; lambda = max of %s muls over x^gamma across the "
                "block sizes each cell uses; K fitted on the first two cells\n",
                static_cast<double>(gamma), c.to_double(), P.mp.name.c_str());
        std::vector<std::size_t> cell_n;
        std::vector<long double> measured, lead;
        for (std::size_t n : ns) {
            Instance inst = gen_instance(target, n, cfg.modulus,
                                         instance_seed(sub, n, 0));
            LevelTrace trace;
            OpCounter ops;
            in_place_mp(R, P.mp,
                        InputView::whole(inst.f.data(), inst.f.size()),
                        InputView::whole(inst.g.data(), inst.g.size()),
                        OutputSpan(inst.out.data(), inst.out.size()), ops,
                        &trace);
            std::vector<std::size_t> sizes{n};
            for (const auto& lev : trace.levels) {
                sizes.push_back(lev.k);
            }
            std::sort(sizes.begin(), sizes.end());
            sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
            long double lambda = 0;
            for (std::size_t x : sizes) {
                const long double r =
                    static_cast<long double>(mp_profile_muls_at(P.mp, R, x)) /
                    std::pow(static_cast<long double>(x), gamma);
                lambda = std::max(lambda, r);
            }
            const MpBound b = predict_mp_bound(c, static_cast<long long>(n), {},
                                               false, gamma, lambda);
            cell_n.push_back(n);
            measured.push_back(static_cast<long double>(ops.muls));
            lead.push_back(b.value);
            if (cell_n.size() == 1) {
                appendf(res.output, "mu=%.9f nu=%.9f\n", static_cast<double>(b.mu),
                        static_cast<double>(b.nu));
            }
            appendf(res.output, "n=%zu lambda=%.6f\n", n,
                    static_cast<double>(lambda));
        }
        long double K = 0;
        const std::size_t fit = std::min<std::size_t>(2, cell_n.size());
        for (std::size_t i = 0; i < fit; ++i) {
            const long double k = (measured[i] - lead[i]) /
                                  static_cast<long double>(cell_n[i]);
            K = std::max(K, k);
        }
        appendf(res.output, "fitted K=%.6f\n", static_cast<double>(K));
        for (std::size_t i = 0; i < cell_n.size(); ++i) {
            const long double bound =
                lead[i] + K * static_cast<long double>(cell_n[i]);
            const bool fitted = i < fit;
            const bool ok = fitted || measured[i] <= bound;
            if (!ok) {
                violation = true;
            }
            appendf(res.output, "n=%zu muls=%.0f bound=%.1f %s\n", cell_n[i],
                    static_cast<double>(measured[i]), static_cast<double>(bound),
                    fitted ? "fitted" : (ok ? "ok" : "VIOLATION"));
        }
        // The quasi-linear form of the same bound, reported informationally
        // at the largest cell.
        if (!ns.empty()) {
            const std::size_t n = ns.back();
            Instance inst = gen_instance(target, n, cfg.modulus,
                                         instance_seed(sub, n, 0));
            const ExecResult ref = execute_reference(P, target, R, inst);
            const long double m_at_n = static_cast<long double>(ref.ops.muls);
            const MpBound q = predict_mp_bound(
                c, static_cast<long long>(n),
                [m_at_n](long double) { return m_at_n; }, true, 0.0L, 0.0L);
            appendf(res.output,
                    "quasi model at n=%zu: M = %.0f, bound = M*(log_%.6f n + 1 + "
                    "(c+1)(c+2)) = %.1f\n",
                    n, static_cast<double>(m_at_n), static_cast<double>(q.log_base),
                    static_cast<double>(q.value));
            appendf(res.output, "note: %s\n", q.note.c_str());
        }
    }
    appendf(res.output, "result: %s\n", violation ? "FAIL" : "PASS");
    res.exit_code = violation ? 1 : 0;
    return res;
}

CommandResult run_command(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::verify: return run_verify(cfg);
        case Command::bench: return run_bench(cfg);
        case Command::space: return run_space(cfg);
        case Command::predict: return run_predict(cfg);
    }
    return CommandResult{2, "unknown command\n"};
}

} // namespace polymul
