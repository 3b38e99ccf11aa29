#ifndef RMF_MONTECARLO_HPP
#define RMF_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "rmf/analytic.hpp"
#include "rmf/census.hpp"
#include "rmf/sign_oracle.hpp"
#include "rmf/sieve.hpp"
#include "rmf/transforms.hpp"

namespace rmf {

// Configuration of an ensemble experiment.  Per-sample seeds are the
// splitmix64 stream at base_seed (sample_seed(base_seed, i)), so any sample
// can be reproduced in isolation.  In the deterministic modes (all_plus /
// all_minus) there is nothing to sample: a single control run is performed
// and no statistical assertion applies.
struct EnsembleConfig {
    std::uint64_t base_seed = 0;
    SignMode mode = SignMode::kRandom;
    std::uint64_t n_samples = 1000;
    TGrid t_grid;
    TruncationSpec trunc;
    std::vector<std::uint64_t> x_checkpoints;
    unsigned workers = 1;

    // Number of samples actually run: n_samples in random mode, 1 otherwise.
    std::uint64_t effective_samples() const {
        return mode == SignMode::kRandom ? n_samples : 1;
    }

    // `statistical` demands n_samples >= 100 in random mode.
    void validate(bool statistical) const;
};

struct TStats {
    double t = 0.0;
    double mean = 0.0;
    double var_empirical = 0.0;
    double skewness = 0.0;
    double var_trunc = 0.0;  // sum_{p<=P} (p^(-1/2-t) - p^(-1/2-2t))^2
    double ks_distance = 0.0;  // against N(0, var_trunc)
};

// Ensemble summary for R(t) across the grid.  A pure function of
// (EnsembleConfig, engine): identical across worker counts.
struct EnsembleStats {
    std::uint64_t n_samples = 0;
    std::uint64_t prime_limit = 0;
    std::vector<TStats> per_t;
    // Symmetric empirical covariance matrix over the grid and its truncated
    // analytic counterpart (direct prime sums at the run's P).
    std::vector<std::vector<double>> cov_empirical;
    std::vector<std::vector<double>> cov_trunc;
};

struct PairReport {
    double t1 = 0.0;
    double t2 = 0.0;
    double cov_empirical = 0.0;
    double cov_trunc = 0.0;
    double std_error = 0.0;  // of the covariance estimate, from truncated moments
    bool within_3se = false;
};

struct TailReport {
    double t = 0.0;
    double threshold = 0.0;  // -log(1/t)
    double frequency = 0.0;  // of sum_{p<=P} f(p) p^(-1/2-t) < threshold
    double chebyshev_bound = 0.0;
    std::uint64_t n_samples = 0;
};

struct CensusCheckpointStats {
    std::uint64_t x = 0;
    double frac_ge1 = 0.0;
    double frac_ge2 = 0.0;
    double frac_ge5 = 0.0;
    double median = 0.0;
    double mean = 0.0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    // (crossing count, number of samples) pairs, ascending by count.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;
};

struct CensusEnsemble {
    std::uint64_t n_samples = 0;
    std::vector<CensusCheckpointStats> per_checkpoint;
};

// R(t) for every (sample, grid entry): moments, KS distance against the
// centered Gaussian with the truncated variance, and the covariance matrix
// over the grid.
EnsembleStats ensemble_r(const SieveEngine& engine, const EnsembleConfig& config);

// Consecutive-pair covariance report for the grid, from the same sample set
// as ensemble_r (diagonals reproduce its variances exactly).
std::vector<PairReport> decorrelation_check(const SieveEngine& engine,
                                            const EnsembleConfig& config);

// Empirical frequency of sum_{p<=P} f(p) p^(-1/2-t) < -log(1/t) against the
// truncated Chebyshev bound (sum_{p<=P} p^(-1-2t)) / log^2(1/t).
TailReport tail_probability(const SieveEngine& engine,
                            const EnsembleConfig& config, double t);

// Distribution of sign-change counts of S_x at each checkpoint.
CensusEnsemble ensemble_census(const SieveEngine& engine,
                               const EnsembleConfig& config);

}  // namespace rmf

#endif
