#include "polymul/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace polymul {

UnrollResult unroll(const Recurrence& rec, long long n) {
    if (!(Rat(0) <= rec.alpha && rec.alpha < Rat(1))) {
        throw std::invalid_argument("unroll: alpha must lie in [0, 1)");
    }
    // The affine iterate has fixed point beta/(1-alpha); a stop value at or
    // below it never terminates.
    const Rat fixed = rec.beta / (Rat(1) - rec.alpha);
    if (!(fixed < Rat(rec.stop))) {
        throw std::invalid_argument("unroll: stop must exceed beta/(1-alpha)");
    }
    UnrollResult res;
    res.total = Rat(0);
    while (n >= rec.stop) {
        Rat cost = rec.level_cost ? rec.level_cost(n) : Rat(0);
        res.levels.push_back(UnrollLevel{n, cost});
        res.total += cost;
        n = floor_affine(rec.alpha, n, rec.beta);
    }
    res.terminal_n = n;
    res.terminal_cost = rec.terminal_cost ? rec.terminal_cost(n) : Rat(0);
    res.total += res.terminal_cost;
    return res;
}

Rat predict_fp_ratio(const Rat& c) { return Rat(2) * c + Rat(7); }

Rat predict_sp_ratio(const Rat& c) { return Rat(2) * c + Rat(5); }

MpBound predict_mp_bound(const Rat& c, long long n,
                         const std::function<long double(long double)>& M,
                         bool quasi_linear, long double gamma,
                         long double lambda) {
    MpBound b;
    const long double cl = c.to_long_double();
    if (quasi_linear) {
        b.quasi_linear = true;
        b.log_base = (cl + 2) / (cl + 1);
        const long double logn =
            std::log(static_cast<long double>(n)) / std::log(b.log_base);
        b.value = M(static_cast<long double>(n)) *
                  (logn + 1 + (cl + 1) * (cl + 2));
        b.note = "log factor stated in base (c+2)/(c+1); the reciprocal base "
                 "(c+1)/(c+2) would make it negative, so that convention is "
                 "mapped onto this one";
        return b;
    }
    if (!(gamma > 1.0L)) {
        throw std::invalid_argument("predict_mp_bound: gamma must exceed 1");
    }
    b.mu = 1.0L / (std::pow(cl + 2, gamma - 1) - std::pow(cl + 1, gamma - 1));
    b.nu = 1.0L / (std::pow(cl + 2, gamma) - std::pow(cl + 1, gamma));
    b.value = (b.mu + b.nu) * lambda *
              std::pow(static_cast<long double>(n), gamma);
    return b;
}

SumLemmaReport check_sum_lemmas(long double alpha, long double beta,
                                long long n, long long K,
                                const std::function<long double(long double)>& M,
                                long double lambda, long double mu) {
    const long double tol = 1e-9L;
    SumLemmaReport rep;
    std::vector<long double> seq;
    seq.reserve(static_cast<std::size_t>(K));
    long double apow = 1.0L; // alpha^i
    for (long long i = 0; i < K; ++i) {
        const long double ai1 = apow * alpha; // alpha^{i+1}
        seq.push_back(apow * static_cast<long double>(n) +
                      beta * (1 - ai1) / (1 - alpha));
        apow = ai1;
    }

    {
        long double lhs = 0;
        for (long double v : seq) lhs += v;
        const long double rhs =
            (static_cast<long double>(n) + beta * static_cast<long double>(K)) /
            (1 - alpha);
        rep.checks.push_back(
            LemmaCheck{"sum_linear", lhs, rhs, lhs <= rhs * (1 + tol)});
    }
    {
        const long double shift = beta / (1 - alpha);
        long double lhs = 0;
        for (long double v : seq) lhs += 1 / (v - shift);
        const long double rhs =
            alpha *
            (std::pow(alpha, static_cast<long double>(-K)) - 1) /
            ((1 - alpha) * static_cast<long double>(n) - alpha * beta);
        const long double scale =
            std::max<long double>({std::fabs(lhs), std::fabs(rhs), 1.0L});
        rep.checks.push_back(LemmaCheck{"sum_reciprocal", lhs, rhs,
                                        std::fabs(lhs - rhs) <= tol * scale});
    }
    {
        long double lhs = 0;
        for (long double v : seq) lhs += M(lambda * v + mu);
        const long double rhs =
            (lambda *
                 (static_cast<long double>(n) +
                  beta * static_cast<long double>(K)) /
                 (1 - alpha) +
             mu * static_cast<long double>(K)) *
            M(static_cast<long double>(n)) / static_cast<long double>(n);
        rep.checks.push_back(
            LemmaCheck{"sum_scaled_M", lhs, rhs, lhs <= rhs * (1 + tol)});
    }
    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

Rat BoundModel::leading_coefficient() const {
    Rat acc(0);
    for (const auto& t : terms) {
        acc += t.a * t.lambda;
    }
    return acc / (Rat(1) - alpha);
}

long double BoundModel::eval_level(
    long long n, const std::function<long double(long double)>& M) const {
    long double acc = 0;
    for (const auto& t : terms) {
        const long long arg = floor_affine(t.lambda, n, t.mu);
        acc += t.a.to_long_double() * M(static_cast<long double>(arg));
    }
    acc += b.to_long_double() * static_cast<long double>(n);
    acc += c.to_long_double();
    return acc;
}

} // namespace polymul
