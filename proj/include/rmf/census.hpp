#ifndef RMF_CENSUS_HPP
#define RMF_CENSUS_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "rmf/errors.hpp"
#include "rmf/sign_oracle.hpp"
#include "rmf/sieve.hpp"
#include "rmf/summation.hpp"

namespace rmf {

struct CensusOptions {
    double exponent = 0.5;           // weight n^(-exponent)
    double near_zero_tol = 1e-12;    // |S_n| below this is logged, not decided
    // Positions at which a snapshot row is recorded.  Empty = geometric
    // checkpoints 10^3, 10^4, ... plus the final x_limit.
    std::vector<std::uint64_t> checkpoints;
};

struct CheckpointRow {
    std::uint64_t x = 0;
    double s = 0.0;
    std::uint64_t crossings_so_far = 0;
    double running_min = 0.0;
    double running_max = 0.0;
    double rounding_bound = 0.0;
};

struct NearZeroEvent {
    std::uint64_t n = 0;
    double abs_s = 0.0;
};

// Trajectory summary of S_x = sum_{n<=x} f(n) n^(-exponent).
struct CensusReport {
    std::uint64_t x_limit = 0;
    double exponent = 0.5;
    std::vector<std::uint64_t> crossings;    // n with S_{n-1} * S_n < 0
    double final_sum = 0.0;
    double running_min = 0.0;
    double running_max = 0.0;
    std::vector<NearZeroEvent> near_zero_events;
    double rounding_bound = 0.0;
    std::vector<CheckpointRow> checkpoints;
};

// Incremental S_n scanner.  feed() consumes the term for n = count()+1; the
// caller supplies signs (and optionally precomputed weights) block by block.
// The scan itself is strictly sequential, so the result is independent of
// how the blocks were produced.
class CensusScanner {
public:
    explicit CensusScanner(double near_zero_tol = 1e-12)
        : near_zero_tol_(near_zero_tol) {}

    void feed(int sign, double weight) {
        acc_.add(sign < 0 ? -weight : weight);
        ++n_;
        const double s = acc_.value();
        if (n_ == 1) {
            min_ = max_ = s;
        } else {
            if (prev_s_ * s < 0.0) crossings_.push_back(n_);
            if (s < min_) min_ = s;
            if (s > max_) max_ = s;
        }
        if (std::abs(s) < near_zero_tol_) near_zero_.push_back({n_, std::abs(s)});
        prev_s_ = s;
    }

    std::uint64_t count() const { return n_; }
    double sum() const { return acc_.value(); }
    double rounding_bound() const { return acc_.error_bound(); }
    double running_min() const { return min_; }
    double running_max() const { return max_; }
    std::uint64_t crossing_count() const { return crossings_.size(); }
    const std::vector<std::uint64_t>& crossings() const { return crossings_; }
    const std::vector<NearZeroEvent>& near_zero_events() const { return near_zero_; }

    CheckpointRow snapshot() const {
        return {n_, sum(), crossing_count(), min_, max_, rounding_bound()};
    }

    std::vector<std::uint64_t> take_crossings() { return std::move(crossings_); }
    std::vector<NearZeroEvent> take_near_zero() { return std::move(near_zero_); }

private:
    CompensatedSum acc_;
    double near_zero_tol_;
    std::uint64_t n_ = 0;
    double prev_s_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
    std::vector<std::uint64_t> crossings_;
    std::vector<NearZeroEvent> near_zero_;
};

// Streams (n, S_n) for n = 1..x_limit into fn.  S_1 = 1 always, since
// f(1) = 1.  Throws ResourceError past the engine's capacity.
template <typename F>
void stream_partial_sums(const SieveEngine& engine, const SignOracle& oracle,
                         std::uint64_t x_limit, double exponent, F&& fn) {
    if (x_limit < 1) throw ConfigError("census: x_limit must be >= 1");
    CompensatedSum acc;
    std::uint64_t n = 0;
    for (std::uint64_t base = 1; base <= x_limit;) {
        const std::uint64_t end = std::min(x_limit, base + engine.block_len() - 1);
        const auto signs = value_block(engine, oracle, {base, end});
        for (std::size_t i = 0; i < signs.size(); ++i) {
            ++n;
            const double w = std::pow(static_cast<double>(n), -exponent);
            acc.add(signs[i] < 0 ? -w : w);
            fn(n, acc.value());
        }
        if (end == x_limit) break;
        base = end + 1;
    }
}

// Full census: crossings, extrema, near-zero log, rounding bound, and
// checkpoint rows.  Default weights are n^(-exponent) computed on the fly;
// `weights` (indexed by n-1, length >= x_limit) overrides them so ensemble
// runs can share one precomputed table.
CensusReport sign_changes(const SieveEngine& engine, const SignOracle& oracle,
                          std::uint64_t x_limit, const CensusOptions& options = {},
                          std::span<const double> weights = {});

}  // namespace rmf

#endif
