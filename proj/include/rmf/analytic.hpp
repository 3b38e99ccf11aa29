#ifndef RMF_ANALYTIC_HPP
#define RMF_ANALYTIC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rmf {

// A numeric result with an explicit absolute bound on the truncation /
// series-remainder error of the method that produced it.  Downstream
// comparisons budget both their own and the producer's bound.
struct AnalyticValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

// Riemann zeta on the real axis, s > 1, by Euler-Maclaurin.  Absolute error
// <= 1e-12 for s >= 1.1 (in practice far better; the dominant term of the
// reported tail_bound is float rounding, the series remainder is ~1e-38).
// Throws std::domain_error for s <= 1 + 1e-6.
AnalyticValue zeta(double s);

// Prime zeta P(s) = sum_p p^(-s), s > 1, via
//     P(s) = sum_{k>=1} mu(k)/k * log zeta(ks),
// truncated once |log zeta(ks)| / k < 1e-15.  The tail_bound covers both the
// truncation and the propagated zeta bounds.
AnalyticValue prime_zeta(double s);

// P(1+t) - log(1/t) for 0 < t < 1/2.  Converges to the constant c0 of the
// Mertens-type approximation sum_p p^(-1-t) = log(1/t) + c0 + O(t).
AnalyticValue mertens_deviation(double t);

// c0 itself: sum_{k>=2} mu(k)/k * log zeta(k).  Computed, never hard-coded.
AnalyticValue mertens_constant_c0();

// Variance of the prime statistic R(t):
//     sum_p (p^(-1/2-t) - p^(-1/2-2t))^2
//   = P(1+2t) - 2 P(1+3t) + P(1+4t),
// which tends to log(9/8) = 0.1178... as t -> 0.  Domain 0 < t <= 1/4.
AnalyticValue r_variance(double t);

// Covariance of (R(t1), R(t2)):
//     P(1+t1+t2) - P(1+t1+2*t2) - P(1+2*t1+t2) + P(1+2*t1+2*t2).
// Symmetric in (t1, t2) bit-exactly (arguments are canonicalized before
// evaluation).  Domain t1, t2 in (0, 1/4].
AnalyticValue r_covariance(double t1, double t2);

// The log-ratio closed forms the exact values are compared against:
// for the variance, log(1/2t) + log(1/4t) - 2 log(1/3t)  (= log(9/8));
// for the covariance, log((t1+2t2)/(t1+t2)) + log((2t1+t2)/(2t1+2t2)).
double r_variance_log_approx(double t);
double r_covariance_log_approx(double t1, double t2);

// t_i = 2^(-2^i).  Exact in double; i in [1, 9] keeps the value normal.
double t_sequence(int i);

// Evaluation grid, strictly decreasing, entries in (0, 1/2).  Each entry t
// is paired with 2t by the ratio diagnostic.
struct TGrid {
    std::vector<double> entries;

    // Accepts either a comma-separated list of values ("0.25,0.0625") or the
    // doubling-sequence shorthand "2^-2^i:i=1..4".
    static TGrid parse(const std::string& text);
    static TGrid from_sequence(int i_lo, int i_hi);

    void validate() const;  // throws ConfigError on violation
};

}  // namespace rmf

#endif
