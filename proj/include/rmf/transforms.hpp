#ifndef RMF_TRANSFORMS_HPP
#define RMF_TRANSFORMS_HPP

#include <cstdint>
#include <vector>

#include "rmf/analytic.hpp"
#include "rmf/sign_oracle.hpp"
#include "rmf/sieve.hpp"
#include "rmf/summation.hpp"

namespace rmf {

// Truncation points for the sample-dependent functionals: X for sums over
// all n (Dirichlet series, step integral), P for sums over primes.
struct TruncationSpec {
    std::uint64_t x_limit = 1000;
    std::uint64_t prime_limit = 1000;

    void validate() const;  // both must be >= 2
};

// sum_{n<=X} f(n) n^(-1/2-t), compensated summation.  t > 0.
double dirichlet_sum(const SieveEngine& engine, const SignOracle& oracle,
                     double t, const TruncationSpec& spec);

// The truncated transform integral_1^X S_x x^(-1-t) dx, evaluated exactly as
// a step integral: sum_{n<=X} f(n) n^(-1/2) (n^(-t) - X^(-t)) / t.
double laplace_transform(const SieveEngine& engine, const SignOracle& oracle,
                         double t, const TruncationSpec& spec);

// S_X = sum_{n<=X} f(n) n^(-1/2); the boundary term of the transform
// identity laplace = (dirichlet - X^(-t) S_X) / t.
double partial_sum_sqrt(const SieveEngine& engine, const SignOracle& oracle,
                        std::uint64_t x_limit);

// log of the truncated Euler product: sum_{p<=P} -log(1 - f(p) p^(-1/2-t)).
// No factor is ever singular since p^(-1/2-t) < 1.  Comparisons against the
// Dirichlet series are only meaningful in the absolutely convergent regime
// t > 1/2 (see the tail-bound helpers).
double euler_product_log(const SieveEngine& engine, const SignOracle& oracle,
                         double t, const TruncationSpec& spec);

// Upper bound on |sum_{n>X} f(n) n^(-1/2-t)| for any sign pattern:
// X^(1/2-t)/(t-1/2).  Infinite for t <= 1/2 where no absolute bound exists.
double dirichlet_tail_bound(double t, std::uint64_t x_limit);

// Upper bound on sum_{p>P} |log(1 - f(p) p^(-1/2-t))|, the log-distance
// between the truncated and the full Euler product.  Infinite for t <= 1/2.
double euler_log_tail_bound(double t, std::uint64_t prime_limit);

// Streaming accumulator for R(t) = sum_p f(p)(p^(-1/2-t) - p^(-1/2-2t)).
// Feeding a partition of [2, P] range by range is bit-identical to feeding
// [2, P] in one call: the compensated state carries across ranges.
class RStatAccumulator {
public:
    RStatAccumulator(const SignOracle& oracle, double t)
        : oracle_(oracle), t_(t) {}

    void add_range(const SieveEngine& engine, std::uint64_t lo, std::uint64_t hi);
    double value() const { return acc_.value(); }

private:
    SignOracle oracle_;
    double t_;
    CompensatedSum acc_;
};

// R(t) truncated at spec.prime_limit.  0 < t < 1/2.
double r_statistic(const SieveEngine& engine, const SignOracle& oracle,
                   double t, const TruncationSpec& spec);

// max over p <= P of the R-term weight p^(-1/2-t) - p^(-1/2-2t); this
// maximum tending to 0 with t is what makes R(t) asymptotically Gaussian.
double r_max_term(const SieveEngine& engine, double t, const TruncationSpec& spec);

struct FScanRow {
    double t = 0.0;
    double f_t = 0.0;       // laplace_transform at t
    double f_2t = 0.0;      // laplace_transform at 2t
    bool ratio_flag = false;  // F(t) > F(2t)/2
    double s_x = 0.0;
    double trunc_indicator = 0.0;  // X^(-t) |S_X| / |F(t)|
    bool trunc_limited = false;    // indicator above 10%
};

// Indicator threshold above which a row is marked truncation-limited.
inline constexpr double kTruncationAdequacyThreshold = 0.10;

// Per grid entry: F(t), F(2t), the ratio flag F(t) > F(2t)/2, and the
// truncation-adequacy indicator.  Honest reporting: small t needs X >>
// e^(1/t), which is unreachable at desk scale, so under-truncated rows are
// flagged rather than suppressed.
std::vector<FScanRow> f_ratio_scan(const SieveEngine& engine,
                                   const SignOracle& oracle, const TGrid& grid,
                                   const TruncationSpec& spec);

}  // namespace rmf

#endif
