#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polymul {

/// A coefficient.  Deliberately opaque: everything outside the Ring treats
/// coefficients as movable values that can only be combined by counted ring
/// operations.  Copies, swaps and zero-initialisation are free.
struct Coeff {
    std::uint64_t v = 0;

    friend bool operator==(Coeff a, Coeff b) { return a.v == b.v; }
    friend bool operator!=(Coeff a, Coeff b) { return a.v != b.v; }
};

/// Tally of algebraic work.  Multiplications and additive operations
/// (add/sub/neg) are metered separately; data movement is not metered.
struct OpCounter {
    std::uint64_t muls = 0;
    std::uint64_t adds = 0;

    std::uint64_t total() const { return muls + adds; }

    OpCounter& operator+=(const OpCounter& o) {
        muls += o.muls;
        adds += o.adds;
        return *this;
    }
    friend OpCounter operator-(OpCounter a, const OpCounter& b) {
        a.muls -= b.muls;
        a.adds -= b.adds;
        return a;
    }
    friend bool operator==(const OpCounter& a, const OpCounter& b) {
        return a.muls == b.muls && a.adds == b.adds;
    }
};

/// Z/mZ for an arbitrary modulus 2 <= m <= 2^64-1.  Every algebraic operation
/// routes through here and increments the supplied counter, so operation
/// counts reported by the harness are exact by construction.
class Ring {
public:
    explicit Ring(std::uint64_t modulus) : m_(modulus) {
        if (modulus < 2)
            throw std::invalid_argument("Ring: modulus must be at least 2, got " +
                                        std::to_string(modulus));
    }

    std::uint64_t modulus() const { return m_; }

    Coeff zero() const { return Coeff{0}; }
    Coeff one() const { return Coeff{1 % m_}; }
    bool is_zero(Coeff a) const { return a.v == 0; }

    /// Reduce an arbitrary machine word into the ring (not a counted op; used
    /// when sampling inputs, never inside algorithms).
    Coeff reduce(std::uint64_t x) const { return Coeff{x % m_}; }

    Coeff add(Coeff a, Coeff b, OpCounter& ops) const {
        ++ops.adds;
        std::uint64_t r = a.v + b.v;
        // Correct even when a.v + b.v wraps past 2^64: the wrapped value is
        // below m, and the unsigned subtraction r - m re-wraps to a+b-m.
        if (r < a.v || r >= m_) r -= m_;
        return Coeff{r};
    }

    Coeff sub(Coeff a, Coeff b, OpCounter& ops) const {
        ++ops.adds;
        std::uint64_t r = a.v - b.v;
        if (a.v < b.v) r += m_;
        return Coeff{r};
    }

    Coeff neg(Coeff a, OpCounter& ops) const {
        ++ops.adds;
        return Coeff{a.v == 0 ? 0 : m_ - a.v};
    }

    Coeff mul(Coeff a, Coeff b, OpCounter& ops) const {
        ++ops.muls;
        using u128 = unsigned __int128;
        return Coeff{static_cast<std::uint64_t>(u128(a.v) * b.v % m_)};
    }

private:
    std::uint64_t m_;
};

} // namespace polymul
