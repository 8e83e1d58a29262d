#pragma once

#include "polymul/baseline.hpp"
#include "polymul/rat.hpp"
#include "polymul/regspace.hpp"
#include "polymul/ring.hpp"

#include <cstddef>
#include <vector>

namespace polymul {

/// One shrink step of an in-place algorithm: the instance size at that level,
/// the tile size k chosen there, and the ring operations spent at that level
/// (excluding deeper levels).
struct LevelRecord {
    std::size_t n = 0;
    std::size_t k = 0;
    OpCounter ops;
};

/// Trace of a whole in-place run; `base_n`/`base_ops` describe the terminal
/// naive call.  The analysis module replays the shrink recurrence against
/// this to certify the measured totals.
struct LevelTrace {
    std::vector<LevelRecord> levels;
    std::size_t base_n = 0;
    OpCounter base_ops;
    OpCounter total() const {
        OpCounter t = base_ops;
        for (const auto& l : levels) t += l.ops;
        return t;
    }
};

/// Test-only fault hooks: each field shifts one normative index formula by
/// the given amount (applied through padded views / clamped offsets, so the
/// faulty run stays memory-safe and merely computes a wrong product).  All
/// zero in normal operation.
struct FaultInjection {
    long long fp_second_offset_shift = 0; // target offset of the second unbalanced add
    long long sp_slice_shift = 0;         // g-slice window of the low-tile short products
    long long mp_block_shift = 0;         // f-segment window of the middle-product blocks
};
inline FaultInjection g_fault;

/// Tile-size and threshold formulas.  Non-integer space constants are ceiled.
std::size_t inplace_threshold(const Rat& c);                 // ceil(c) + 2
std::size_t ifp_block_size(std::size_t n, const Rat& c);     // floor((n+1)/(ceil(c)+3))
std::size_t isp_block_size(std::size_t n, const Rat& c);     // floor(n/(ceil(c)+2))
std::size_t imp_block_size(std::size_t m, const Rat& c);     // floor(m/(ceil(c)+2))

/// In-place low half-additive full product: out has 2n-1 registers with h in
/// out[0..n-1); on return out = h + fg.  Zero separately-allocated work
/// registers: every level borrows out[n+k-1..2n-1) as workspace for its two
/// additive unbalanced products and then shrinks to out[2k..2n-1).
void in_place_fp_low(const Ring& R, const AlgoProfile& fp, InputView f, InputView g,
                     OutputSpan out, OpCounter& ops, LevelTrace* trace = nullptr);

/// High variant (h in out[n..2n-1), result X^n h + fg): reversal wrapper.
void in_place_fp_high(const Ring& R, const AlgoProfile& fp, InputView f, InputView g,
                      OutputSpan out, OpCounter& ops, LevelTrace* trace = nullptr);

/// Plain in-place full product (no additive half): zeroes out[0..n-1) for
/// free and runs the low half-additive core.
void in_place_fp_full(const Ring& R, const AlgoProfile& fp, InputView f, InputView g,
                      OutputSpan out, OpCounter& ops, LevelTrace* trace = nullptr);

/// In-place low short product over low/high short-product base profiles.
/// Each level computes out[n-k..n) by ceil(n/k) low tiles and ceil(n/k)-1
/// high tiles through a k-register buffer borrowed from out[0..n-k), then
/// shrinks to out[0..n-k).
void in_place_sp_lo(const Ring& R, const AlgoProfile& splo, const AlgoProfile& sphi, InputView f,
                    InputView g, OutputSpan out, OpCounter& ops, LevelTrace* trace = nullptr);

/// In-place high short product: reversed-quotient wrapper over in_place_sp_lo
/// plus one free in-place reversal of the output.
void in_place_sp_hi(const Ring& R, const AlgoProfile& splo, const AlgoProfile& sphi, InputView f,
                    InputView g, OutputSpan out, OpCounter& ops, LevelTrace* trace = nullptr);

/// In-place middle product (|f| = n+m-1, |g| = n, |out| = m) over a balanced
/// MP base profile.  Each level computes out[0..k) as ceil(n/k) accumulated
/// balanced size-k middle products through a buffer borrowed from out[k..m),
/// then advances f by k and shrinks out to out[k..m); g never changes.
void in_place_mp(const Ring& R, const AlgoProfile& mp, InputView f, InputView g, OutputSpan out,
                 OpCounter& ops, LevelTrace* trace = nullptr);

} // namespace polymul
