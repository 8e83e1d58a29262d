#pragma once

#include "polymul/rat.hpp"

#include <functional>
#include <string>
#include <vector>

namespace polymul {

/// T(n) <= level_cost(n) + T(floor(alpha*n + beta)), iterated while n >= stop,
/// then closed by terminal_cost at the first size below stop.
struct Recurrence {
    Rat alpha;
    Rat beta;
    long long stop = 1;
    std::function<Rat(long long)> level_cost;
    std::function<Rat(long long)> terminal_cost;
};

struct UnrollLevel {
    long long n = 0;
    Rat cost;
};

struct UnrollResult {
    std::vector<UnrollLevel> levels;
    long long terminal_n = 0;
    Rat terminal_cost;
    Rat total; // sum of level costs plus terminal_cost
};

/// Exact unrolling of the recurrence.  Rejects alpha >= 1 and any stop at or
/// below the fixed point beta/(1-alpha) (the iteration would stall there).
UnrollResult unroll(const Recurrence& rec, long long n);

/// Asymptotic ratio bounds of the in-place reductions over their base:
/// 2c+7 for the full product, 2c+5 for the short products.
Rat predict_fp_ratio(const Rat& c);
Rat predict_sp_ratio(const Rat& c);

struct MpBound {
    bool quasi_linear = false;
    long double value = 0;     // the bound evaluated at n
    long double mu = 0;        // gamma > 1 regime: 1/((c+2)^{g-1} - (c+1)^{g-1})
    long double nu = 0;        //                   1/((c+2)^g   - (c+1)^g)
    long double log_base = 0;  // quasi regime: (c+2)/(c+1)
    std::string note;          // surfaced convention caveat for the log factor
};

/// Bound predictor for the in-place middle product.
/// gamma > 1:  (mu+nu) * lambda * n^gamma, with mu/nu from the closed forms
///             (lambda normalized out of mu/nu, applied once).
/// quasi-linear (gamma absent): M(n) * (log_{(c+2)/(c+1)} n + 1 + (c+1)(c+2)).
/// Throws std::invalid_argument for gamma <= 1.
MpBound predict_mp_bound(const Rat& c, long long n,
                         const std::function<long double(long double)>& M, bool quasi_linear,
                         long double gamma, long double lambda);

struct LemmaCheck {
    std::string name;
    long double lhs = 0;
    long double rhs = 0;
    bool pass = false;
};

struct SumLemmaReport {
    std::vector<LemmaCheck> checks;
    bool all_pass = false;
};

/// Numeric verification (long double, 1e-9 relative tolerance on the equality
/// direction) of the three summation bounds over the closed-form sequence
/// n_i = alpha^i n + beta (1 - alpha^{i+1}) / (1 - alpha), i = 0..K-1:
///   sum n_i                     <=  (n + beta K) / (1 - alpha)
///   sum 1/(n_i - beta/(1-alpha)) =  alpha (alpha^{-K} - 1) / ((1-alpha) n - alpha beta)
///   sum M(lambda n_i + mu)      <=  [lambda (n+beta K)/(1-alpha) + mu K] * M(n)/n
/// The last bound requires M(x)/x non-decreasing and lambda n_i + mu <= n.
SumLemmaReport check_sum_lemmas(long double alpha, long double beta, long long n, long long K,
                                const std::function<long double(long double)>& M,
                                long double lambda, long double mu);

/// Level cost shape f(n) = sum_k a_k M(floor(lambda_k n + mu_k)) + b n + c,
/// feeding T(n) <= f(n) + T(alpha n + beta).  The leading ratio coefficient
/// of the unrolled bound is sum_k a_k lambda_k / (1 - alpha).
struct BoundModel {
    struct Term {
        Rat a;
        Rat lambda;
        Rat mu;
    };
    std::vector<Term> terms;
    Rat b;
    Rat c;
    Rat alpha;
    Rat beta;

    Rat leading_coefficient() const;
    long double eval_level(long long n, const std::function<long double(long double)>& M) const;
};

} // namespace polymul
