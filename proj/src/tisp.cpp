#include "polymul/tisp.hpp"

#include <algorithm>

namespace polymul {

namespace {

Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

} // namespace

// ---------------------------------------------------------------------------
// Reversal adapters.
// ---------------------------------------------------------------------------

void sphi_via_splo(const Ring& R, const AlgoProfile& splo, InputView f,
                   InputView g, OutputSpan out, OutputSpan work,
                   OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == n - 1, "sphi_via_splo: shape");
    if (n == 1) {
        return; // empty result
    }
    // High half of fg = reverse of the low half of the size-(n-1) product of
    // the reversed quotients f quo X and g quo X.
    InputView fr = f.reversed().range(0, n - 1);
    InputView gr = g.reversed().range(0, n - 1);
    splo.entry(R, fr, gr, out, work, ops);
    out.reverse_in_place();
}

AlgoProfile make_sphi_via_splo(const AlgoProfile& splo) {
    POLYMUL_ASSERT(splo.kind == ProductKind::SPlo, "make_sphi_via_splo: base");
    AlgoProfile p;
    p.kind = ProductKind::SPhi;
    p.declared_c = splo.declared_c;
    p.name = "sphi_via_splo(" + splo.name + ")";
    AlgoProfile base = splo;
    p.work_needed = [base](std::size_t n) {
        return n >= 2 ? base.work_needed(n - 1) : 0;
    };
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        sphi_via_splo(R, base, f, g, out, work, ops);
    };
    return p;
}

void fphi_via_fplo(const Ring& R, const AlgoProfile& fplo, InputView f,
                   InputView g, OutputSpan out, OutputSpan work,
                   OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1, "fphi_via_fplo: shape");
    // Reversing the output buffer moves the accumulator from the top window
    // to the bottom one; reversed operands keep the product aligned.
    out.reverse_in_place();
    fplo.entry(R, f.reversed(), g.reversed(), out, work, ops);
    out.reverse_in_place();
}

AlgoProfile make_fphi_via_fplo(const AlgoProfile& fplo) {
    POLYMUL_ASSERT(fplo.kind == ProductKind::FPlusLo, "make_fphi_via_fplo: base");
    AlgoProfile p;
    p.kind = ProductKind::FPlusHi;
    p.declared_c = fplo.declared_c;
    p.name = "fphi_via_fplo(" + fplo.name + ")";
    AlgoProfile base = fplo;
    p.work_needed = base.work_needed;
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        fphi_via_fplo(R, base, f, g, out, work, ops);
    };
    return p;
}

void fplo_via_fphi(const Ring& R, const AlgoProfile& fphi, InputView f,
                   InputView g, OutputSpan out, OutputSpan work,
                   OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1, "fplo_via_fphi: shape");
    out.reverse_in_place();
    fphi.entry(R, f.reversed(), g.reversed(), out, work, ops);
    out.reverse_in_place();
}

AlgoProfile make_fplo_via_fphi(const AlgoProfile& fphi) {
    POLYMUL_ASSERT(fphi.kind == ProductKind::FPlusHi, "make_fplo_via_fphi: base");
    AlgoProfile p;
    p.kind = ProductKind::FPlusLo;
    p.declared_c = fphi.declared_c;
    p.name = "fplo_via_fphi(" + fphi.name + ")";
    AlgoProfile base = fphi;
    p.work_needed = base.work_needed;
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        fplo_via_fphi(R, base, f, g, out, work, ops);
    };
    return p;
}

// ---------------------------------------------------------------------------
// FP+ from two short products.
// ---------------------------------------------------------------------------

void fpplus_via_sp(const Ring& R, const AlgoProfile& splo,
                   const AlgoProfile& sphi, InputView f, InputView g,
                   OutputSpan out, OutputSpan work, OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1, "fpplus_via_sp: shape");
    // 1. Low half of fg lands in the upper window, clear of the accumulator.
    splo.entry(R, f, g, out.subspan(n - 1, n), work, ops);
    // 2. Fold it into the accumulator h sitting in out[0..n-1).
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = R.add(out[i], out[n - 1 + i], ops);
    }
    // 3. Slide the top low-half coefficient into its final cell (no h term
    //    exists at degree n-1).
    out[n - 1] = out[2 * n - 2];
    // 4. High half overwrites the upper window.
    if (n >= 2) {
        sphi.entry(R, f, g, out.subspan(n, n - 1), work, ops);
    }
}

AlgoProfile make_fpplus_lo_via_sp(const AlgoProfile& splo,
                                  const AlgoProfile& sphi) {
    POLYMUL_ASSERT(splo.kind == ProductKind::SPlo &&
                       sphi.kind == ProductKind::SPhi,
                   "make_fpplus_lo_via_sp: bases");
    AlgoProfile p;
    p.kind = ProductKind::FPlusLo;
    p.declared_c = rat_max(splo.declared_c, sphi.declared_c);
    p.name = "fpplus_via_sp(" + splo.name + "," + sphi.name + ")";
    AlgoProfile lo = splo;
    AlgoProfile hi = sphi;
    p.work_needed = [lo, hi](std::size_t n) {
        return std::max(lo.work_needed(n), hi.work_needed(n));
    };
    p.entry = [lo, hi](const Ring& R, InputView f, InputView g, OutputSpan out,
                       OutputSpan work, OpCounter& ops) {
        fpplus_via_sp(R, lo, hi, f, g, out, work, ops);
    };
    return p;
}

// ---------------------------------------------------------------------------
// SP from FP / FP+ (split at the half).
// ---------------------------------------------------------------------------

void sp_via_fpplus(const Ring& R, const AlgoProfile& fp,
                   const AlgoProfile& fplo, const AlgoProfile& fphi,
                   InputView f, InputView g, OutputSpan out, OutputSpan work,
                   OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && out.len() == n, "sp_via_fpplus: shape");
    if (n == 1) {
        out[0] = R.mul(f.at(0), g.at(0), ops);
        return;
    }
    const std::size_t p = n / 2;
    const std::size_t q = n - p; // ceil(n/2)
    // Cross terms, built from full products of the size-p halves.
    fp.entry(R, f.range(0, p), g.range(q, n), out.subspan(0, 2 * p - 1), work,
             ops);
    // The accumulating call below treats out[0..p-1) as its additive input
    // and overwrites cell p-1; park that coefficient one cell past the call's
    // window first.
    out[2 * p - 1] = out[p - 1];
    fplo.entry(R, f.range(q, n), g.range(0, p), out.subspan(0, 2 * p - 1), work,
               ops);
    out[p - 1] = R.add(out[p - 1], out[2 * p - 1], ops);
    // Move the p finished cross coefficients into position.
    copy_into(out.subspan(q, p), out.as_view().range(0, p), p);
    // Low-half product accumulates the parked cross terms sitting at
    // out[q..2q-1).
    fphi.entry(R, f.range(0, q), g.range(0, q), out.subspan(0, 2 * q - 1), work,
               ops);
}

// ---------------------------------------------------------------------------
// Unbalanced full products.
// ---------------------------------------------------------------------------

std::size_t fp_unbal_additive_work_needed(const AlgoProfile& fp,
                                          std::size_t k) {
    return (2 * k - 1) + fp.work_needed(k);
}

void fp_unbal_additive(const Ring& R, const AlgoProfile& fp, InputView f,
                       InputView g, OutputSpan out, OutputSpan work,
                       OpCounter& ops) {
    const std::size_t k = f.len();
    const std::size_t len = g.len();
    POLYMUL_ASSERT(k >= 1 && len >= k, "fp_unbal_additive: short/long order");
    POLYMUL_ASSERT(out.len() == len + k - 1, "fp_unbal_additive: bad output");
    OutputSpan buf = work.subspan(0, 2 * k - 1);
    OutputSpan sub = work.subspan(2 * k - 1);
    const std::size_t chunks = (len + k - 1) / k;
    for (std::size_t i = 0; i < chunks; ++i) {
        InputView gi = g.range(static_cast<long long>(i * k),
                               static_cast<long long>((i + 1) * k), true);
        fp.entry(R, f, gi, buf, sub, ops);
        const std::size_t take = std::min(2 * k - 1, out.len() - i * k);
        add_assign(R, out.subspan(i * k, take), buf.as_view(), take, ops);
    }
}

void unbal_fp_via_fphi(const Ring& R, const AlgoProfile& fp,
                       const AlgoProfile& fphi, InputView f, InputView g,
                       OutputSpan out, OutputSpan work, OpCounter& ops) {
    const std::size_t m = f.len();
    const std::size_t n = g.len();
    POLYMUL_ASSERT(m >= n && n >= 1, "unbal_fp_via_fphi: long/short order");
    POLYMUL_ASSERT(out.len() == m + n - 1, "unbal_fp_via_fphi: bad output");
    if (m == n) {
        fp.entry(R, f, g, out, work, ops);
        return;
    }
    // Top segment first, then march a 2n-1 window downward; each step's
    // accumulator is the overlap with the segment above it.
    fp.entry(R, f.range(static_cast<long long>(m - n), static_cast<long long>(m)),
             g, out.subspan(m - n, 2 * n - 1), work, ops);
    std::size_t rem = m - n;
    while (rem >= n) {
        const std::size_t e = rem - n;
        fphi.entry(R,
                   f.range(static_cast<long long>(e),
                           static_cast<long long>(e + n)),
                   g, out.subspan(e, 2 * n - 1), work, ops);
        rem = e;
    }
    if (rem > 0) {
        out.subspan(0, rem).fill_zero();
        for (std::size_t i = 0; i < rem; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Coeff p = R.mul(f.at(i), g.at(j), ops);
                out[i + j] = R.add(out[i + j], p, ops);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Balanced products through a middle product.
// ---------------------------------------------------------------------------

void via_mp(const Ring& R, ProductKind kind, const AlgoProfile& mp, InputView f,
            InputView g, OutputSpan out, OutputSpan work, OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n && n >= 1, "via_mp: shape");
    const long long nn = static_cast<long long>(n);
    switch (kind) {
        case ProductKind::SPlo:
            POLYMUL_ASSERT(out.len() == n, "via_mp: sp_lo output");
            mp.entry(R, f.range(-(nn - 1), nn, true), g, out, work, ops);
            break;
        case ProductKind::SPhi:
            POLYMUL_ASSERT(out.len() == n - 1, "via_mp: sp_hi output");
            if (n >= 2) {
                mp.entry(R, f.range(1, 2 * nn - 1, true), g, out, work, ops);
            }
            break;
        case ProductKind::FP:
            POLYMUL_ASSERT(out.len() == 2 * n - 1, "via_mp: fp output");
            mp.entry(R, f.range(-(nn - 1), 2 * nn - 1, true), g, out, work, ops);
            break;
        default:
            POLYMUL_ASSERT(false, "via_mp: unsupported target kind");
    }
}

} // namespace polymul
