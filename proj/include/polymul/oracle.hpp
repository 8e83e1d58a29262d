#pragma once

#include "polymul/baseline.hpp"
#include "polymul/regspace.hpp"

#include <cstdint>
#include <vector>

namespace polymul {

/// Test oracle: evaluates a product as an explicit Toeplitz matrix-vector
/// multiplication, with its own raw modular arithmetic (no Ring, no counters,
/// no workspace discipline).  It shares no code path with the library's
/// kernels, so agreement is evidence of correctness rather than tautology.
///
/// Shapes: FP is shape-generic (rows |f|+|g|-1); SPlo takes |f| = |g| = n and
/// returns n rows; SPhi likewise returns n-1 rows; MP takes |f| = |g|+m-1 and
/// returns m rows with entry (r,c) = f_{|g|-1+r-c}.
std::vector<Coeff> toeplitz_oracle(ProductKind kind, InputView f, InputView g,
                                   std::uint64_t modulus);

} // namespace polymul
