#include "polymul/oracle.hpp"

namespace polymul {

namespace {

using u128 = unsigned __int128;

std::uint64_t dot_mod(InputView f, InputView g, long long f_base,
                      std::size_t g_count, std::uint64_t mod) {
    // sum over c in [0, g_count) of g_c * f_{f_base - c}, skipping f indices
    // outside [0, |f|).
    u128 acc = 0;
    for (std::size_t c = 0; c < g_count; ++c) {
        long long fi = f_base - static_cast<long long>(c);
        if (fi < 0 || fi >= static_cast<long long>(f.len())) {
            continue;
        }
        u128 p = static_cast<u128>(f.at(static_cast<std::size_t>(fi)).v % mod) *
                 (g.at(c).v % mod);
        acc = (acc + p % mod) % mod;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::vector<Coeff> toeplitz_oracle(ProductKind kind, InputView f, InputView g,
                                   std::uint64_t modulus) {
    POLYMUL_ASSERT(modulus >= 2, "oracle: modulus must be >= 2");
    const std::size_t a = f.len();
    const std::size_t b = g.len();
    std::vector<Coeff> out;
    switch (kind) {
        case ProductKind::FP:
        case ProductKind::FPlusLo:
        case ProductKind::FPlusHi: {
            // Plain convolution; the h-accumulating variants are handled by
            // the caller adding h into the relevant window.
            POLYMUL_ASSERT(a >= 1 && b >= 1, "oracle: empty operand");
            out.resize(a + b - 1);
            for (std::size_t r = 0; r < out.size(); ++r) {
                out[r].v = dot_mod(f, g, static_cast<long long>(r), b, modulus);
            }
            break;
        }
        case ProductKind::SPlo: {
            POLYMUL_ASSERT(a == b, "oracle: sp_lo needs equal lengths");
            out.resize(a);
            for (std::size_t r = 0; r < out.size(); ++r) {
                out[r].v = dot_mod(f, g, static_cast<long long>(r), b, modulus);
            }
            break;
        }
        case ProductKind::SPhi: {
            POLYMUL_ASSERT(a == b && a >= 1, "oracle: sp_hi needs equal lengths");
            out.resize(a - 1);
            for (std::size_t r = 0; r < out.size(); ++r) {
                out[r].v = dot_mod(f, g, static_cast<long long>(a + r), b, modulus);
            }
            break;
        }
        case ProductKind::MP: {
            POLYMUL_ASSERT(a >= b && a - b + 1 >= 1, "oracle: mp shape");
            const std::size_t m = a - b + 1;
            out.resize(m);
            for (std::size_t r = 0; r < m; ++r) {
                out[r].v =
                    dot_mod(f, g, static_cast<long long>(b - 1 + r), b, modulus);
            }
            break;
        }
    }
    return out;
}

} // namespace polymul
