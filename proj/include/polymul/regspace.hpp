#pragma once

#include "polymul/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polymul {

namespace detail {
[[noreturn]] inline void assert_fail(const char* expr, const char* file, int line) {
    std::fprintf(stderr, "contract violation: %s (%s:%d)\n", expr, file, line);
    std::abort();
}
} // namespace detail

/// Contract checks stay on in every build type; the register/space discipline
/// is the point of the library, so we never compile it out.  An optional
/// second argument (a string literal) prefixes the failure report.
#define POLYMUL_ASSERT(cond, ...)                                            \
    do {                                                                     \
        if (!(cond))                                                         \
            ::polymul::detail::assert_fail(__VA_OPT__(__VA_ARGS__ ": ")      \
                                               #cond,                        \
                                           __FILE__, __LINE__);              \
    } while (0)

/// Read-only affine window into a coefficient array.
///
/// A view maps logical index i to root index start + step*i (step is +1 or
/// -1).  `range(lo, hi, pad)` re-windows the view; with pad=true the view is
/// treated as zero-extended beyond its current extent, so lo may be negative
/// and hi may exceed len().  Padding composes: a subrange of a padded view
/// sees zeros outside the *parent's* extent, which is what the tiling
/// algorithms rely on when they shrink an operand between levels.  Reads that
/// leave the valid window of a non-padded view abort.
class InputView {
public:
    InputView() = default;

    static InputView whole(const Coeff* src, std::size_t n) {
        InputView v;
        v.src_ = src;
        v.start_ = 0;
        v.step_ = 1;
        v.len_ = n;
        v.clip_lo_ = 0;
        v.clip_hi_ = static_cast<long long>(n);
        v.padded_ = false;
        return v;
    }

    std::size_t len() const { return len_; }
    bool padded() const { return padded_; }

    Coeff at(std::size_t i) const {
        POLYMUL_ASSERT(i < len_);
        const long long r = start_ + step_ * static_cast<long long>(i);
        if (r < clip_lo_ || r >= clip_hi_) {
            POLYMUL_ASSERT(padded_);
            return Coeff{0};
        }
        return src_[r];
    }

    /// Logical positions [lo, hi) of this view.  With pad=false the range
    /// must lie inside [0, len()]; with pad=true out-of-extent positions read
    /// as zero.
    InputView range(long long lo, long long hi, bool pad = false) const {
        POLYMUL_ASSERT(lo <= hi);
        if (!(padded_ || pad)) POLYMUL_ASSERT(lo >= 0 && hi <= static_cast<long long>(len_));
        InputView v;
        v.src_ = src_;
        v.start_ = start_ + step_ * lo;
        v.step_ = step_;
        v.len_ = static_cast<std::size_t>(hi - lo);
        // The child's real data is confined to the parent's clip *and* the
        // parent's own extent; everything else reads as (padded) zero.
        const long long ext_lo = step_ == 1 ? start_ : start_ - static_cast<long long>(len_) + 1;
        const long long ext_hi = ext_lo + static_cast<long long>(len_);
        v.clip_lo_ = std::max(clip_lo_, ext_lo);
        v.clip_hi_ = std::min(clip_hi_, ext_hi);
        v.padded_ = padded_ || pad;
        return v;
    }

    InputView reversed() const {
        InputView v = *this;
        v.start_ = start_ + step_ * (static_cast<long long>(len_) - 1);
        v.step_ = -step_;
        return v;
    }

private:
    const Coeff* src_ = nullptr;
    long long start_ = 0;
    long long step_ = 1;
    std::size_t len_ = 0;
    long long clip_lo_ = 0;
    long long clip_hi_ = 0;
    bool padded_ = false;
};

/// Writable contiguous window, used for outputs and for work registers.
/// Splitting a span does not allocate anything; it is how algorithms lend
/// parts of their output or work area to subroutines.
class OutputSpan {
public:
    OutputSpan() = default;
    OutputSpan(Coeff* p, std::size_t n) : p_(p), n_(n) {}

    std::size_t len() const { return n_; }
    Coeff* data() const { return p_; }

    Coeff& operator[](std::size_t i) const {
        POLYMUL_ASSERT(i < n_);
        return p_[i];
    }

    OutputSpan subspan(std::size_t off, std::size_t count) const {
        POLYMUL_ASSERT(off <= n_ && count <= n_ - off);
        return OutputSpan(p_ + off, count);
    }
    OutputSpan subspan(std::size_t off) const {
        POLYMUL_ASSERT(off <= n_);
        return OutputSpan(p_ + off, n_ - off);
    }

    /// Zero-filling is data movement, not algebra: free.
    void fill_zero() const {
        for (std::size_t i = 0; i < n_; ++i) p_[i] = Coeff{0};
    }

    /// Swaps are free.
    void reverse_in_place() const {
        for (std::size_t i = 0, j = n_; i + 1 < j; ++i, --j) std::swap(p_[i], p_[j - 1]);
    }

    InputView as_view() const { return InputView::whole(p_, n_); }

private:
    Coeff* p_ = nullptr;
    std::size_t n_ = 0;
};

/// dst[i] <- dst[i] + src[i] for i in [0, count); counted ring additions.
inline void add_assign(const Ring& R, OutputSpan dst, InputView src, std::size_t count,
                       OpCounter& ops) {
    POLYMUL_ASSERT(count <= dst.len() && count <= src.len());
    for (std::size_t i = 0; i < count; ++i) dst[i] = R.add(dst[i], src.at(i), ops);
}

/// dst[i] <- src[i]; data movement, free.
inline void copy_into(OutputSpan dst, InputView src, std::size_t count) {
    POLYMUL_ASSERT(count <= dst.len() && count <= src.len());
    for (std::size_t i = 0; i < count; ++i) dst[i] = src.at(i);
}

class MeterViolation : public std::runtime_error {
public:
    MeterViolation(std::size_t requested, std::size_t live, std::size_t cap)
        : std::runtime_error("work register cap exceeded: requesting " +
                             std::to_string(requested) + " with " + std::to_string(live) +
                             " live against cap " + std::to_string(cap)) {}
};

/// Tracks how many separately allocated work registers are live, and the peak
/// of that number.  Registers borrowed from the output are never routed
/// through a meter, so in-place algorithms show a peak of zero.  An optional
/// cap turns the meter into an enforcement device: the check happens before
/// any register is handed out.
class WorkMeter {
public:
    WorkMeter() = default;
    explicit WorkMeter(std::size_t cap) : cap_(cap) {}

    void set_cap(std::size_t cap) { cap_ = cap; }
    void clear_cap() { cap_.reset(); }

    std::size_t live() const { return live_; }
    std::size_t peak() const { return peak_; }

    void acquire(std::size_t n) {
        if (cap_ && live_ + n > *cap_) throw MeterViolation(n, live_, *cap_);
        live_ += n;
        peak_ = std::max(peak_, live_);
    }
    void release(std::size_t n) {
        POLYMUL_ASSERT(n <= live_);
        live_ -= n;
    }

private:
    std::size_t live_ = 0;
    std::size_t peak_ = 0;
    std::optional<std::size_t> cap_;
};

/// RAII allocation of n zero-initialised work registers against a meter.
class WorkSession {
public:
    WorkSession(WorkMeter& meter, std::size_t n) : meter_(&meter) {
        meter.acquire(n); // may throw; nothing is allocated in that case
        buf_.assign(n, Coeff{0});
    }
    ~WorkSession() {
        if (meter_) meter_->release(buf_.size());
    }
    WorkSession(const WorkSession&) = delete;
    WorkSession& operator=(const WorkSession&) = delete;

    OutputSpan span() { return OutputSpan(buf_.data(), buf_.size()); }

private:
    WorkMeter* meter_ = nullptr;
    std::vector<Coeff> buf_;
};

} // namespace polymul
