#include "polymul/inplace.hpp"
#include "polymul/tisp.hpp"

#include <algorithm>

namespace polymul {

namespace {

long long clamp_ll(long long v, long long lo, long long hi) {
    return std::max(lo, std::min(v, hi));
}

void trace_level(LevelTrace* trace, std::size_t n, std::size_t k,
                 const OpCounter& before, const OpCounter& after) {
    if (trace) {
        trace->levels.push_back(LevelRecord{n, k, after - before});
    }
}

void trace_base(LevelTrace* trace, std::size_t n, const OpCounter& before,
                const OpCounter& after) {
    if (trace) {
        trace->base_n = n;
        trace->base_ops = after - before;
    }
}

} // namespace

std::size_t inplace_threshold(const Rat& c) {
    return static_cast<std::size_t>(c.ceil()) + 2;
}

std::size_t ifp_block_size(std::size_t n, const Rat& c) {
    return (n + 1) / (static_cast<std::size_t>(c.ceil()) + 3);
}

std::size_t isp_block_size(std::size_t n, const Rat& c) {
    return n / (static_cast<std::size_t>(c.ceil()) + 2);
}

std::size_t imp_block_size(std::size_t m, const Rat& c) {
    return m / (static_cast<std::size_t>(c.ceil()) + 2);
}

// ---------------------------------------------------------------------------
// In-place full product (low half-additive core).
//
// Invariant at each level, for current size n over windows f,g (n) and out
// (2n-1) with the accumulator h in out[0..n-1):
//   fg + h = f0*g + X^k (g0*fhat) + X^2k (fhat*ghat) + h
// The two unbalanced additive products complete all contributions below
// degree 2k; the leftover is the same shape one level down, at offset 2k.
// Workspace for both calls is borrowed from out[n+k-1..2n-1) — the n-k cells
// wholly above the first call's write window.
// ---------------------------------------------------------------------------

void in_place_fp_low(const Ring& R, const AlgoProfile& fp, InputView f,
                     InputView g, OutputSpan out, OpCounter& ops,
                     LevelTrace* trace) {
    POLYMUL_ASSERT(fp.kind == ProductKind::FP, "in_place_fp_low: need FP base");
    std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1,
                   "in_place_fp_low: shape");
    const std::size_t stop = inplace_threshold(fp.declared_c);
    while (n >= stop) {
        const std::size_t k = ifp_block_size(n, fp.declared_c);
        POLYMUL_ASSERT(k >= 1, "in_place_fp_low: empty block");
        const OpCounter before = ops;
        OutputSpan borrowed = out.subspan(n + k - 1, n - k);
        POLYMUL_ASSERT(fp_unbal_additive_work_needed(fp, k) <= borrowed.len(),
                       "in_place_fp_low: borrowed space too small");
        out.subspan(n - 1, k).fill_zero();
        fp_unbal_additive(R, fp, f.range(0, static_cast<long long>(k)), g,
                          out.subspan(0, n + k - 1), borrowed, ops);
        const std::size_t off = static_cast<std::size_t>(clamp_ll(
            static_cast<long long>(k) + g_fault.fp_second_offset_shift, 0,
            static_cast<long long>(n)));
        fp_unbal_additive(R, fp, g.range(0, static_cast<long long>(k)),
                          f.range(static_cast<long long>(k),
                                  static_cast<long long>(n)),
                          out.subspan(off, n - 1), borrowed, ops);
        trace_level(trace, n, k, before, ops);
        f = f.range(static_cast<long long>(k), static_cast<long long>(n));
        g = g.range(static_cast<long long>(k), static_cast<long long>(n));
        out = out.subspan(2 * k);
        n -= k;
    }
    const OpCounter before = ops;
    out.subspan(n - 1, n).fill_zero();
    naive_fp_additive(R, f, g, out, ops);
    trace_base(trace, n, before, ops);
}

void in_place_fp_high(const Ring& R, const AlgoProfile& fp, InputView f,
                      InputView g, OutputSpan out, OpCounter& ops,
                      LevelTrace* trace) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1,
                   "in_place_fp_high: shape");
    out.reverse_in_place();
    in_place_fp_low(R, fp, f.reversed(), g.reversed(), out, ops, trace);
    out.reverse_in_place();
}

void in_place_fp_full(const Ring& R, const AlgoProfile& fp, InputView f,
                      InputView g, OutputSpan out, OpCounter& ops,
                      LevelTrace* trace) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1,
                   "in_place_fp_full: shape");
    out.subspan(0, n - 1).fill_zero();
    in_place_fp_low(R, fp, f, g, out, ops, trace);
}

// ---------------------------------------------------------------------------
// In-place low short product.
//
// Each level finishes the top k output cells out[n-k..n): the pairs (i, j)
// with i+j in [n-k, n) split by the chunk a = floor(i/k) of i into one
// size-k low tile (sums below k within the tile) and one size-k high tile
// (sums of at least k), both over fake-padded windows.  Tiles are computed
// into a k-cell buffer at out[0..k) with the base profile's workspace right
// above it; both sit in output cells this level does not write.
// ---------------------------------------------------------------------------

void in_place_sp_lo(const Ring& R, const AlgoProfile& splo,
                    const AlgoProfile& sphi, InputView f, InputView g,
                    OutputSpan out, OpCounter& ops, LevelTrace* trace) {
    POLYMUL_ASSERT(splo.kind == ProductKind::SPlo &&
                       sphi.kind == ProductKind::SPhi,
                   "in_place_sp_lo: base kinds");
    std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == n, "in_place_sp_lo: shape");
    const Rat c = std::max(splo.declared_c, sphi.declared_c,
                           [](const Rat& a, const Rat& b) { return a < b; });
    const std::size_t q = inplace_threshold(c);
    while (n >= q) {
        const std::size_t k = isp_block_size(n, c);
        POLYMUL_ASSERT(k >= 1, "in_place_sp_lo: empty block");
        const OpCounter before = ops;
        OutputSpan target = out.subspan(n - k, k);
        OutputSpan buffer = out.subspan(0, k);
        OutputSpan work = out.subspan(k, n - 2 * k);
        POLYMUL_ASSERT(std::max(splo.work_needed(k), sphi.work_needed(k)) <=
                           work.len(),
                       "in_place_sp_lo: borrowed space too small");
        const std::size_t tiles = (n + k - 1) / k;
        const long long nk = static_cast<long long>(k);
        const long long nn = static_cast<long long>(n);
        for (std::size_t i = 0; i < tiles; ++i) {
            const long long a = static_cast<long long>(i);
            InputView ft = f.range(nk * a, nk * (a + 1), true);
            InputView gt = g.range(nn - nk * (a + 1) + g_fault.sp_slice_shift,
                                   nn - nk * a + g_fault.sp_slice_shift, true);
            splo.entry(R, ft, gt, buffer, work, ops);
            if (i == 0) {
                copy_into(target, buffer.as_view(), k);
            } else {
                add_assign(R, target, buffer.as_view(), k, ops);
            }
        }
        if (k >= 2) {
            OutputSpan hbuf = buffer.subspan(0, k - 1);
            for (std::size_t i = 0; i + 1 < tiles; ++i) {
                const long long a = static_cast<long long>(i);
                InputView ft = f.range(nk * a, nk * (a + 1), true);
                InputView gt = g.range(nn - nk * (a + 2), nn - nk * (a + 1), true);
                sphi.entry(R, ft, gt, hbuf, work, ops);
                add_assign(R, target, hbuf.as_view(), k - 1, ops);
            }
        }
        trace_level(trace, n, k, before, ops);
        f = f.range(0, static_cast<long long>(n - k));
        g = g.range(0, static_cast<long long>(n - k));
        out = out.subspan(0, n - k);
        n -= k;
    }
    const OpCounter before = ops;
    naive_sp_lo(R, f, g, out, ops);
    trace_base(trace, n, before, ops);
}

void in_place_sp_hi(const Ring& R, const AlgoProfile& splo,
                    const AlgoProfile& sphi, InputView f, InputView g,
                    OutputSpan out, OpCounter& ops, LevelTrace* trace) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == n - 1, "in_place_sp_hi: shape");
    if (n == 1) {
        return;
    }
    InputView fr = f.reversed().range(0, static_cast<long long>(n - 1));
    InputView gr = g.reversed().range(0, static_cast<long long>(n - 1));
    in_place_sp_lo(R, splo, sphi, fr, gr, out, ops, trace);
    out.reverse_in_place();
}

// ---------------------------------------------------------------------------
// In-place middle product.
//
// Each level finishes the lowest k output cells as ceil(n/k) balanced size-k
// middle products over fake-padded windows of f and g, accumulated through a
// k-cell buffer at out[k..2k) with the base workspace above it; then both the
// output window and the long operand advance by k.
// ---------------------------------------------------------------------------

void in_place_mp(const Ring& R, const AlgoProfile& mp, InputView f, InputView g,
                 OutputSpan out, OpCounter& ops, LevelTrace* trace) {
    POLYMUL_ASSERT(mp.kind == ProductKind::MP, "in_place_mp: need MP base");
    const std::size_t n = g.len();
    std::size_t m = out.len();
    POLYMUL_ASSERT(f.len() == n + m - 1, "in_place_mp: shape");
    const std::size_t q = inplace_threshold(mp.declared_c);
    const long long nn = static_cast<long long>(n);
    while (m >= q) {
        const std::size_t k = imp_block_size(m, mp.declared_c);
        POLYMUL_ASSERT(k >= 1, "in_place_mp: empty block");
        const OpCounter before = ops;
        OutputSpan target = out.subspan(0, k);
        OutputSpan buffer = out.subspan(k, k);
        OutputSpan work = out.subspan(2 * k);
        POLYMUL_ASSERT(mp.work_needed(k) <= work.len(),
                       "in_place_mp: borrowed space too small");
        const std::size_t blocks = (n + k - 1) / k;
        const long long nk = static_cast<long long>(k);
        for (std::size_t j = 0; j < blocks; ++j) {
            const long long b = static_cast<long long>(j);
            InputView gseg = g.range(nk * b, nk * (b + 1), true);
            InputView fseg =
                f.range(nn - nk * (b + 1) + g_fault.mp_block_shift,
                        nn - nk * b + nk - 1 + g_fault.mp_block_shift, true);
            mp.entry(R, fseg, gseg, buffer, work, ops);
            if (j == 0) {
                copy_into(target, buffer.as_view(), k);
            } else {
                add_assign(R, target, buffer.as_view(), k, ops);
            }
        }
        trace_level(trace, m, k, before, ops);
        f = f.range(static_cast<long long>(k), static_cast<long long>(f.len()));
        out = out.subspan(k);
        m -= k;
    }
    const OpCounter before = ops;
    naive_mp(R, f, g, out, ops);
    trace_base(trace, m, before, ops);
}

} // namespace polymul
