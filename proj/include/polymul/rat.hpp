#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>

namespace polymul {

/// Small exact rational on 64-bit numerator/denominator, normalized with a
/// positive denominator.  Used for space constants and for the recurrence
/// bookkeeping in the analysis module, where floating point would blur the
/// exact-reproduction guarantees.  Intermediates go through 128-bit to keep
/// the usual (a*d + c*b) products safe.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rat operator+(Rat a, Rat b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator-(Rat a, Rat b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rat operator*(Rat a, Rat b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(Rat a, Rat b) {
        assert(b.num_ != 0);
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat& operator+=(Rat o) { return *this = *this + o; }
    Rat& operator-=(Rat o) { return *this = *this - o; }
    Rat& operator*=(Rat o) { return *this = *this * o; }

    friend bool operator==(Rat a, Rat b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(Rat a, Rat b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(Rat a, Rat b) { return a < b || a == b; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    double to_double() const { return double(num_) / double(den_); }
    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

private:
    using i128 = __int128;

    static Rat from128(i128 n, i128 d) {
        assert(d != 0);
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        assert(i128(r.num_) == n && i128(r.den_) == d); // no overflow after reduction
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() { *this = from128(num_, den_); }

    long long num_ = 0;
    long long den_ = 1;
};

/// floor(a*n + b) for rationals, computed exactly.
inline long long floor_affine(Rat a, long long n, Rat b) {
    return (a * Rat(n) + b).floor();
}

/// ceil(c*n), the register cap that a space constant c grants at size n.
inline long long ceil_mul(Rat c, long long n) { return (c * Rat(n)).ceil(); }

} // namespace polymul
