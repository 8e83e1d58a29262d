#pragma once

#include "polymul/rat.hpp"
#include "polymul/regspace.hpp"
#include "polymul/ring.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace polymul {

enum class ProductKind { FP, FPlusLo, FPlusHi, SPlo, SPhi, MP };

const char* product_kind_name(ProductKind k);

/// Descriptor of an out-of-place base algorithm.
///
/// `entry` computes the product for the profile's kind into `out`, using only
/// the caller-provided `work` registers (at least `work_needed(n)` of them).
/// Shapes by kind, for size n inputs:
///   FP        f,g: n      out: 2n-1
///   FPlusLo   f,g: n      out: 2n-1, out[0..n-1) holds h, result h+fg
///   FPlusHi   f,g: n      out: 2n-1, out[n..2n-1) holds h, result X^n h+fg
///   SPlo      f,g: n      out: n
///   SPhi      f,g: n      out: n-1
///   MP        g: n, f: n+m-1, out: m (m = out.len(); balanced profiles
///             require m == n, the naive one accepts any shape)
///
/// `declared_c` is the certified space constant: work_needed(n) <= ceil(c*n)
/// for every n, enforceable with a capped WorkMeter.  The in-place reductions
/// size their tiles from this constant.
struct AlgoProfile {
    ProductKind kind = ProductKind::FP;
    Rat declared_c;
    std::string name;
    std::function<std::size_t(std::size_t)> work_needed;
    std::function<void(const Ring&, InputView, InputView, OutputSpan, OutputSpan, OpCounter&)>
        entry;
};

/// out += f*g for arbitrary sizes; exactly |f|*|g| muls and as many adds,
/// zero work registers (accumulates in the output).
void naive_fp_additive(const Ring& R, InputView f, InputView g, OutputSpan out, OpCounter& ops);

/// out = f*g (overwrite, prior content ignored); |f|*|g| muls and
/// (|f|-1)*(|g|-1) adds, zero work registers.
void naive_fp_overwrite(const Ring& R, InputView f, InputView g, OutputSpan out, OpCounter& ops);

/// out = f*g mod X^n (overwrite); n(n+1)/2 muls, n(n-1)/2 adds, zero work.
void naive_sp_lo(const Ring& R, InputView f, InputView g, OutputSpan out, OpCounter& ops);

/// out = f*g quo X^n (overwrite, n-1 coefficients); n(n-1)/2 muls, zero work.
void naive_sp_hi(const Ring& R, InputView f, InputView g, OutputSpan out, OpCounter& ops);

/// out_t = sum_{i+j=n-1+t} f_i g_j (overwrite); |g|*|out| muls, zero work.
/// Shape-generic: |f| = |g| + |out| - 1.
void naive_mp(const Ring& R, InputView f, InputView g, OutputSpan out, OpCounter& ops);

/// Workspace requirement of karatsuba_fp at size n (2n-2 registers for n >= 2).
std::size_t karatsuba_work_needed(std::size_t n);

/// out = f*g via Karatsuba (overwrite).  Even sizes split in half with the
/// three recursive products laid out across out and work; odd sizes peel the
/// top coefficient of each input and reduce to the even case, keeping the
/// workspace bound at 2n-2 for every n.
void karatsuba_fp(const Ring& R, InputView f, InputView g, OutputSpan out, OutputSpan work,
                  OpCounter& ops);

/// Shipped base profiles.
AlgoProfile make_naive_fp_profile();       // c = 0
AlgoProfile make_naive_fplus_lo_profile(); // c = 0
AlgoProfile make_naive_fplus_hi_profile(); // c = 0
AlgoProfile make_naive_sp_lo_profile();    // c = 0
AlgoProfile make_naive_sp_hi_profile();    // c = 0
AlgoProfile make_naive_mp_profile();       // declares c = 2 (a valid upper bound;
                                           // the in-place reduction reads its k from here)
AlgoProfile make_karatsuba_profile();      // c = 2

/// SP profiles derived from a full-product profile: run the FP into a
/// (2n-1)-register buffer inside the workspace and keep the needed half.
/// Declared constant c' = c + 2 (buffer plus the base's own workspace).
AlgoProfile derive_osp_lo(const AlgoProfile& fp);
AlgoProfile derive_osp_hi(const AlgoProfile& fp);

/// Balanced MP profile derived from a full-product profile: accumulate the
/// unbalanced product g*f into a zeroed (3n-2)-register buffer by chunks of n,
/// then copy out the middle slice.  Declared constant c' = c + 5.
AlgoProfile derive_omp(const AlgoProfile& fp);

} // namespace polymul
