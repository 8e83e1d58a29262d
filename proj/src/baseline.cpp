#include "polymul/baseline.hpp"
#include "polymul/tisp.hpp"

#include <string>

namespace polymul {

const char* product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::FP: return "fp";
        case ProductKind::FPlusLo: return "fplus_lo";
        case ProductKind::FPlusHi: return "fplus_hi";
        case ProductKind::SPlo: return "sp_lo";
        case ProductKind::SPhi: return "sp_hi";
        case ProductKind::MP: return "mp";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Schoolbook kernels.
//
// Overwrite kernels tolerate arbitrary garbage in `out`: every output cell is
// assigned before it is ever read.  Additive kernels require every touched
// cell to hold a meaningful value on entry.
// ---------------------------------------------------------------------------

void naive_fp_additive(const Ring& R, InputView f, InputView g, OutputSpan out,
                       OpCounter& ops) {
    const std::size_t n = f.len();
    const std::size_t m = g.len();
    POLYMUL_ASSERT(out.len() == n + m - 1, "fp additive: bad output length");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Coeff p = R.mul(f.at(i), g.at(j), ops);
            out[i + j] = R.add(out[i + j], p, ops);
        }
    }
}

void naive_fp_overwrite(const Ring& R, InputView f, InputView g, OutputSpan out,
                        OpCounter& ops) {
    const std::size_t n = f.len();
    const std::size_t m = g.len();
    POLYMUL_ASSERT(n >= 1 && m >= 1, "fp: empty operand");
    POLYMUL_ASSERT(out.len() == n + m - 1, "fp overwrite: bad output length");
    // Row 0 assigns the m lowest cells; each later row i assigns the one new
    // top cell i+m-1 and accumulates into the m-1 cells below it.
    for (std::size_t j = 0; j < m; ++j) {
        out[j] = R.mul(f.at(0), g.at(j), ops);
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) {
            Coeff p = R.mul(f.at(i), g.at(j), ops);
            out[i + j] = R.add(out[i + j], p, ops);
        }
        out[i + m - 1] = R.mul(f.at(i), g.at(m - 1), ops);
    }
}

void naive_sp_lo(const Ring& R, InputView f, InputView g, OutputSpan out,
                 OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n, "sp_lo: operand length mismatch");
    POLYMUL_ASSERT(out.len() == n, "sp_lo: bad output length");
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = R.mul(f.at(0), g.at(k), ops);
        for (std::size_t i = 1; i <= k; ++i) {
            Coeff p = R.mul(f.at(i), g.at(k - i), ops);
            out[k] = R.add(out[k], p, ops);
        }
    }
}

void naive_sp_hi(const Ring& R, InputView f, InputView g, OutputSpan out,
                 OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n, "sp_hi: operand length mismatch");
    POLYMUL_ASSERT(out.len() == n - 1, "sp_hi: bad output length");
    // out[k] = sum_{i+j = n+k, i<n, j<n} f_i g_j, for k in [0, n-1).
    for (std::size_t k = 0; k + 1 < n; ++k) {
        out[k] = R.mul(f.at(k + 1), g.at(n - 1), ops);
        for (std::size_t i = k + 2; i < n; ++i) {
            Coeff p = R.mul(f.at(i), g.at(n + k - i), ops);
            out[k] = R.add(out[k], p, ops);
        }
    }
}

void naive_mp(const Ring& R, InputView f, InputView g, OutputSpan out,
              OpCounter& ops) {
    const std::size_t n = g.len();
    const std::size_t m = out.len();
    POLYMUL_ASSERT(f.len() == n + m - 1, "mp: bad long-operand length");
    // out[r] = sum_{c=0}^{n-1} g_c * f_{n-1+r-c}.
    for (std::size_t r = 0; r < m; ++r) {
        out[r] = R.mul(g.at(0), f.at(n - 1 + r), ops);
        for (std::size_t c = 1; c < n; ++c) {
            Coeff p = R.mul(g.at(c), f.at(n - 1 + r - c), ops);
            out[r] = R.add(out[r], p, ops);
        }
    }
}

// ---------------------------------------------------------------------------
// Karatsuba.
//
// Even sizes split in half; odd sizes peel the top coefficient of each
// operand and fall through to the even case one size down.  This keeps the
// workspace requirement at W(n) = 2n-2 for every n >= 2 (W(1) = 0).
//
// Even layout for size n = 2h, workspace w (>= 2n-2 cells):
//   out[0..h)      <- f0+f1          (h adds)
//   out[h..n)      <- g0+g1          (h adds)
//   w[0..n-1)      <- K(f0+f1, g0+g1), recursing into w[n-1..)
//   out[0..n-1)    <- K(f0, g0), recursing into w[n-1..)
//   out[n..2n-1)   <- K(f1, g1), recursing into w[n-1..)
//   w[n-1+t]       <- out[t] + out[n+t]  for t < n-1      (n-1 adds)
//   out[h+t]       (+)= w[t] - w[n-1+t]  for t < n-1      (n-1 subs, n-2 adds)
// The middle pass assigns (rather than accumulates) at t = h-1, the one
// output cell the two recursive products leave untouched.
// ---------------------------------------------------------------------------

std::size_t karatsuba_work_needed(std::size_t n) {
    return n <= 1 ? 0 : 2 * n - 2;
}

void karatsuba_fp(const Ring& R, InputView f, InputView g, OutputSpan out,
                  OutputSpan work, OpCounter& ops) {
    const std::size_t n = f.len();
    POLYMUL_ASSERT(g.len() == n, "karatsuba: operand length mismatch");
    POLYMUL_ASSERT(out.len() == 2 * n - 1, "karatsuba: bad output length");
    POLYMUL_ASSERT(work.len() >= karatsuba_work_needed(n),
                   "karatsuba: workspace too small");
    if (n == 1) {
        out[0] = R.mul(f.at(0), g.at(0), ops);
        return;
    }
    if (n % 2 == 1) {
        // Peel the top coefficient of each operand: fg = f'g' + a X^t g' +
        // b X^t f' + ab X^{2t} with t = n-1, f = f' + a X^t, g = g' + b X^t.
        const std::size_t t = n - 1;
        karatsuba_fp(R, f.range(0, t), g.range(0, t), out.subspan(0, 2 * t - 1),
                     work, ops);
        const Coeff a = f.at(t);
        const Coeff b = g.at(t);
        out[2 * n - 2] = R.mul(a, b, ops);
        // Cell 2n-3 was not written by the recursive call; assign it on
        // first touch, accumulate everywhere else.
        for (std::size_t i = 0; i < t; ++i) {
            Coeff p = R.mul(a, g.at(i), ops);
            if (i + 1 == t) {
                out[t + i] = p;
            } else {
                out[t + i] = R.add(out[t + i], p, ops);
            }
        }
        for (std::size_t i = 0; i < t; ++i) {
            Coeff p = R.mul(b, f.at(i), ops);
            out[t + i] = R.add(out[t + i], p, ops);
        }
        return;
    }
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = R.add(f.at(i), f.at(h + i), ops);
    }
    for (std::size_t i = 0; i < h; ++i) {
        out[h + i] = R.add(g.at(i), g.at(h + i), ops);
    }
    InputView s0 = out.as_view().range(0, h);
    InputView s1 = out.as_view().range(h, n);
    OutputSpan mid = work.subspan(0, n - 1);
    OutputSpan sub = work.subspan(n - 1);
    karatsuba_fp(R, s0, s1, mid, sub, ops);
    karatsuba_fp(R, f.range(0, h), g.range(0, h), out.subspan(0, n - 1), sub, ops);
    karatsuba_fp(R, f.range(h, n), g.range(h, n), out.subspan(n, n - 1), sub, ops);
    OutputSpan psum = work.subspan(n - 1, n - 1);
    for (std::size_t t = 0; t + 1 < n; ++t) {
        psum[t] = R.add(out[t], out[n + t], ops);
    }
    for (std::size_t t = 0; t + 1 < n; ++t) {
        Coeff d = R.sub(mid[t], psum[t], ops);
        if (t + 1 == h) {
            out[h + t] = d;
        } else {
            out[h + t] = R.add(out[h + t], d, ops);
        }
    }
}

// ---------------------------------------------------------------------------
// Profile factories.
// ---------------------------------------------------------------------------

namespace {

std::size_t zero_work(std::size_t) { return 0; }

} // namespace

AlgoProfile make_naive_fp_profile() {
    AlgoProfile p;
    p.kind = ProductKind::FP;
    p.declared_c = Rat(0);
    p.name = "naive_fp";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        naive_fp_overwrite(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_naive_fplus_lo_profile() {
    AlgoProfile p;
    p.kind = ProductKind::FPlusLo;
    p.declared_c = Rat(0);
    p.name = "naive_fplus_lo";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        const std::size_t n = f.len();
        POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1,
                       "fplus_lo: bad shape");
        out.subspan(n - 1, n).fill_zero();
        naive_fp_additive(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_naive_fplus_hi_profile() {
    AlgoProfile p;
    p.kind = ProductKind::FPlusHi;
    p.declared_c = Rat(0);
    p.name = "naive_fplus_hi";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        const std::size_t n = f.len();
        POLYMUL_ASSERT(g.len() == n && out.len() == 2 * n - 1,
                       "fplus_hi: bad shape");
        out.subspan(0, n).fill_zero();
        naive_fp_additive(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_naive_sp_lo_profile() {
    AlgoProfile p;
    p.kind = ProductKind::SPlo;
    p.declared_c = Rat(0);
    p.name = "naive_sp_lo";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        naive_sp_lo(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_naive_sp_hi_profile() {
    AlgoProfile p;
    p.kind = ProductKind::SPhi;
    p.declared_c = Rat(0);
    p.name = "naive_sp_hi";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        naive_sp_hi(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_naive_mp_profile() {
    AlgoProfile p;
    p.kind = ProductKind::MP;
    // The kernel itself needs no workspace; it still declares the same
    // linear-space budget class as the balanced profiles so downstream
    // space accounting treats every middle-product profile uniformly.
    p.declared_c = Rat(2);
    p.name = "naive_mp";
    p.work_needed = zero_work;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan, OpCounter& ops) {
        naive_mp(R, f, g, out, ops);
    };
    return p;
}

AlgoProfile make_karatsuba_profile() {
    AlgoProfile p;
    p.kind = ProductKind::FP;
    p.declared_c = Rat(2);
    p.name = "karatsuba";
    p.work_needed = karatsuba_work_needed;
    p.entry = [](const Ring& R, InputView f, InputView g, OutputSpan out,
                 OutputSpan work, OpCounter& ops) {
        karatsuba_fp(R, f, g, out, work, ops);
    };
    return p;
}

// ---------------------------------------------------------------------------
// Derived profiles: FP -> SPlo / SPhi / MP.
// ---------------------------------------------------------------------------

AlgoProfile derive_osp_lo(const AlgoProfile& fp) {
    POLYMUL_ASSERT(fp.kind == ProductKind::FP, "derive_osp_lo: need FP base");
    AlgoProfile p;
    p.kind = ProductKind::SPlo;
    p.declared_c = fp.declared_c + Rat(2);
    p.name = "osp_lo(" + fp.name + ")";
    AlgoProfile base = fp;
    p.work_needed = [base](std::size_t n) {
        return (2 * n - 1) + base.work_needed(n);
    };
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        const std::size_t n = f.len();
        POLYMUL_ASSERT(g.len() == n && out.len() == n, "osp_lo: bad shape");
        OutputSpan buf = work.subspan(0, 2 * n - 1);
        base.entry(R, f, g, buf, work.subspan(2 * n - 1), ops);
        copy_into(out, buf.as_view().range(0, n), n);
    };
    return p;
}

AlgoProfile derive_osp_hi(const AlgoProfile& fp) {
    POLYMUL_ASSERT(fp.kind == ProductKind::FP, "derive_osp_hi: need FP base");
    AlgoProfile p;
    p.kind = ProductKind::SPhi;
    p.declared_c = fp.declared_c + Rat(2);
    p.name = "osp_hi(" + fp.name + ")";
    AlgoProfile base = fp;
    p.work_needed = [base](std::size_t n) {
        return (2 * n - 1) + base.work_needed(n);
    };
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        const std::size_t n = f.len();
        POLYMUL_ASSERT(g.len() == n && out.len() == n - 1, "osp_hi: bad shape");
        OutputSpan buf = work.subspan(0, 2 * n - 1);
        base.entry(R, f, g, buf, work.subspan(2 * n - 1), ops);
        copy_into(out, buf.as_view().range(n, 2 * n - 1), n - 1);
    };
    return p;
}

AlgoProfile derive_omp(const AlgoProfile& fp) {
    POLYMUL_ASSERT(fp.kind == ProductKind::FP, "derive_omp: need FP base");
    AlgoProfile p;
    p.kind = ProductKind::MP;
    p.declared_c = fp.declared_c + Rat(5);
    p.name = "omp(" + fp.name + ")";
    AlgoProfile base = fp;
    p.work_needed = [base](std::size_t n) {
        // full-product buffer (3n-2) + unbalanced chunking buffer (2n-1)
        // + the base profile's own workspace at size n.
        return (3 * n - 2) + fp_unbal_additive_work_needed(base, n);
    };
    p.entry = [base](const Ring& R, InputView f, InputView g, OutputSpan out,
                     OutputSpan work, OpCounter& ops) {
        const std::size_t n = g.len();
        const std::size_t m = out.len();
        POLYMUL_ASSERT(m == n, "omp: balanced shapes only");
        POLYMUL_ASSERT(f.len() == n + m - 1, "omp: bad long-operand length");
        OutputSpan buf = work.subspan(0, 3 * n - 2);
        buf.fill_zero();
        fp_unbal_additive(R, base, g, f, buf, work.subspan(3 * n - 2), ops);
        copy_into(out, buf.as_view().range(n - 1, 2 * n - 1), m);
    };
    return p;
}

} // namespace polymul
