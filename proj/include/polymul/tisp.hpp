#pragma once

#include "polymul/baseline.hpp"
#include "polymul/regspace.hpp"
#include "polymul/ring.hpp"

#include <cstddef>

namespace polymul {

// Time- and space-preserving reductions between the product flavours.  Each
// adapter adds at most O(1) work registers on top of its base profile; most
// add none, relying on reversal views, fake padding, and free data movement.

/// out = f*g quo X^n computed as rev(SPlo(rev(f quo X), rev(g quo X))).
/// Zero extra registers; the final reversal is swaps only.
void sphi_via_splo(const Ring& R, const AlgoProfile& splo, InputView f, InputView g,
                   OutputSpan out, OutputSpan work, OpCounter& ops);
AlgoProfile make_sphi_via_splo(const AlgoProfile& splo);

/// High half-additive full product from a low one: reverse the output span in
/// place (relocating h), run the base on reversed views, reverse back.
void fphi_via_fplo(const Ring& R, const AlgoProfile& fplo, InputView f, InputView g,
                   OutputSpan out, OutputSpan work, OpCounter& ops);
AlgoProfile make_fphi_via_fplo(const AlgoProfile& fplo);

/// The converse wrapper.
void fplo_via_fphi(const Ring& R, const AlgoProfile& fphi, InputView f, InputView g,
                   OutputSpan out, OutputSpan work, OpCounter& ops);
AlgoProfile make_fplo_via_fphi(const AlgoProfile& fphi);

/// Low half-additive full product from one low and one high short product:
///   out[n-1..2n-1) <- SPlo(f,g)
///   out[0..n-1)    += out[n-1..2n-2)        (n-1 additions)
///   out[n-1]       <- out[2n-2]             (free move)
///   out[n..2n-1)   <- SPhi(f,g)
/// h is expected in out[0..n-1); no extra registers beyond the bases'.
void fpplus_via_sp(const Ring& R, const AlgoProfile& splo, const AlgoProfile& sphi, InputView f,
                   InputView g, OutputSpan out, OutputSpan work, OpCounter& ops);
AlgoProfile make_fpplus_lo_via_sp(const AlgoProfile& splo, const AlgoProfile& sphi);

/// Low short product from full products, with p = floor(n/2), q = ceil(n/2),
/// f0 = f mod X^q, f0- = f mod X^p, f1 = f quo X^q (g likewise):
///   out[0..2p-1)  <- FP(f0-, g1)
///   out[2p-1]     <- out[p-1]               (free save of (f0-.g1)_{p-1})
///   out[0..2p-1)  <- FPlusLo(f1, g0-)       (h = out[0..p-1))
///   out[p-1]      += out[2p-1]              (restore the saved coefficient)
///   out[q..q+p)   <- out[0..p)              (free move)
///   out[0..2q-1)  <- FPlusHi(f0, g0)        (h = out[q..2q-1))
/// The save/restore costs one extra addition; without it the degree-(p-1)
/// coefficient of the first cross product is lost to the overwrite.
void sp_via_fpplus(const Ring& R, const AlgoProfile& fp, const AlgoProfile& fplo,
                   const AlgoProfile& fphi, InputView f, InputView g, OutputSpan out,
                   OutputSpan work, OpCounter& ops);

/// Additive unbalanced full product: out += f*g where |f| = k <= |g| = L and
/// |out| >= L+k-1.  g is cut into ceil(L/k) chunks of size k (last one
/// fake-padded); each chunk product lands in a (2k-1)-register buffer at
/// work[0..2k-1) and is added into out at offset i*k, clipped to L+k-1.
/// Needs 2k-1 + base.work_needed(k) registers.
void fp_unbal_additive(const Ring& R, const AlgoProfile& fp, InputView f, InputView g,
                       OutputSpan out, OutputSpan work, OpCounter& ops);
std::size_t fp_unbal_additive_work_needed(const AlgoProfile& fp, std::size_t k);

/// Unbalanced overwrite full product (|f| = m > |g| = n, |out| = m+n-1) built
/// from one plain FP and a descending sweep of high half-additive FPs:
///   out[m-n..m+n-1)   <- FP(f[m-n..m), g)
///   for e = m-2n, m-3n, ... >= 0:  out[e..e+2n-1) <- FPlusHi(f[e..e+n), g)
/// A leftover bottom chunk of size r < n (when n does not divide m-n) is
/// accumulated naively with zero extra registers.
void unbal_fp_via_fphi(const Ring& R, const AlgoProfile& fp, const AlgoProfile& fphi, InputView f,
                       InputView g, OutputSpan out, OutputSpan work, OpCounter& ops);

/// Fake-padding reductions onto a middle-product profile:
///   SPlo(f,g) = MP(f zero-extended by n-1 below,            g)   m = n
///   SPhi(f,g) = MP(f quo X zero-extended by n-2 above,      g)   m = n-1
///   FP(f,g)   = MP(f zero-extended by n-1 on both sides,    g)   m = 2n-1
/// The padded operand is a view; nothing is materialized.  `kind` selects
/// which identity; out must have the matching size.
void via_mp(const Ring& R, ProductKind kind, const AlgoProfile& mp, InputView f, InputView g,
            OutputSpan out, OutputSpan work, OpCounter& ops);

} // namespace polymul
