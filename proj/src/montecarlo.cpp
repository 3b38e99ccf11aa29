#include "rmf/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "rmf/errors.hpp"
#include "rmf/parallel.hpp"
#include "rmf/summation.hpp"

namespace rmf {

namespace {

double normal_cdf(double x, double sigma) {
    if (sigma <= 0.0) return x < 0.0 ? 0.0 : 1.0;
    return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
}

SignOracle oracle_for_sample(const EnsembleConfig& config, std::uint64_t index) {
    if (config.mode != SignMode::kRandom) return SignOracle(0, config.mode);
    return SignOracle(sample_seed(config.base_seed, index), SignMode::kRandom);
}

// One-sample Kolmogorov-Smirnov distance of `values` against N(0, sigma^2).
double ks_distance(std::vector<double> values, double sigma) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double cdf = normal_cdf(values[i], sigma);
        d = std::max(d, cdf - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - cdf);
    }
    return d;
}

double mean_of(const std::vector<double>& xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value() / static_cast<double>(xs.size());
}

double variance_of(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    CompensatedSum acc;
    for (double x : xs) acc.add((x - mean) * (x - mean));
    return acc.value() / static_cast<double>(xs.size() - 1);
}

double skewness_of(const std::vector<double>& xs, double mean, double var) {
    if (xs.size() < 2 || var <= 0.0) return 0.0;
    CompensatedSum acc;
    for (double x : xs) acc.add((x - mean) * (x - mean) * (x - mean));
    const double m3 = acc.value() / static_cast<double>(xs.size());
    return m3 / std::pow(var, 1.5);
}

double covariance_of(const std::vector<double>& a, const std::vector<double>& b,
                     double mean_a, double mean_b) {
    if (a.size() < 2) return 0.0;
    CompensatedSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc.add((a[i] - mean_a) * (b[i] - mean_b));
    }
    return acc.value() / static_cast<double>(a.size() - 1);
}

// R(t) samples for every grid entry: column-major per t.
struct RSamples {
    std::vector<std::uint64_t> primes;
    std::vector<std::vector<double>> weights;  // [t][prime]
    std::vector<std::vector<double>> values;   // [t][sample]
};

RSamples run_r_samples(const SieveEngine& engine, const EnsembleConfig& config) {
    config.t_grid.validate();
    config.trunc.validate();

    RSamples out;
    out.primes = engine.collect_primes(2, config.trunc.prime_limit);
    const std::size_t n_t = config.t_grid.entries.size();
    const std::uint64_t n = config.effective_samples();

    out.weights.resize(n_t);
    for (std::size_t a = 0; a < n_t; ++a) {
        const double t = config.t_grid.entries[a];
        const double e1 = -(0.5 + t);
        const double e2 = -(0.5 + 2.0 * t);
        out.weights[a].resize(out.primes.size());
        for (std::size_t j = 0; j < out.primes.size(); ++j) {
            const double pd = static_cast<double>(out.primes[j]);
            out.weights[a][j] = std::pow(pd, e1) - std::pow(pd, e2);
        }
    }

    out.values.assign(n_t, std::vector<double>(n, 0.0));
    parallel_for_index(n, config.workers, [&](std::uint64_t i) {
        const SignOracle oracle = oracle_for_sample(config, i);
        std::vector<double> acc(n_t, 0.0);
        for (std::size_t j = 0; j < out.primes.size(); ++j) {
            const double s = oracle.sign_unchecked(out.primes[j]) < 0 ? -1.0 : 1.0;
            for (std::size_t a = 0; a < n_t; ++a) acc[a] += s * out.weights[a][j];
        }
        for (std::size_t a = 0; a < n_t; ++a) out.values[a][i] = acc[a];
    });
    return out;
}

}  // namespace

void EnsembleConfig::validate(bool statistical) const {
    if (n_samples < 1) throw ConfigError("ensemble: n_samples must be >= 1");
    if (workers < 1) throw ConfigError("ensemble: workers must be >= 1");
    if (statistical && mode == SignMode::kRandom && n_samples < 100) {
        throw ConfigError(
            "ensemble: statistical runs require n_samples >= 100");
    }
}

EnsembleStats ensemble_r(const SieveEngine& engine, const EnsembleConfig& config) {
    config.validate(true);
    const RSamples samples = run_r_samples(engine, config);
    const std::size_t n_t = config.t_grid.entries.size();

    EnsembleStats stats;
    stats.n_samples = config.effective_samples();
    stats.prime_limit = config.trunc.prime_limit;
    stats.per_t.resize(n_t);
    stats.cov_empirical.assign(n_t, std::vector<double>(n_t, 0.0));
    stats.cov_trunc.assign(n_t, std::vector<double>(n_t, 0.0));

    std::vector<double> means(n_t);
    for (std::size_t a = 0; a < n_t; ++a) {
        const auto& xs = samples.values[a];
        TStats& ts = stats.per_t[a];
        ts.t = config.t_grid.entries[a];
        ts.mean = mean_of(xs);
        means[a] = ts.mean;
        ts.var_empirical = variance_of(xs, ts.mean);
        ts.skewness = skewness_of(xs, ts.mean, ts.var_empirical);

        CompensatedSum vt;
        for (double w : samples.weights[a]) vt.add(w * w);
        ts.var_trunc = vt.value();
        ts.ks_distance = ks_distance(xs, std::sqrt(ts.var_trunc));
    }

    for (std::size_t a = 0; a < n_t; ++a) {
        for (std::size_t b = a; b < n_t; ++b) {
            const double cov = (a == b)
                                   ? stats.per_t[a].var_empirical
                                   : covariance_of(samples.values[a],
                                                   samples.values[b], means[a],
                                                   means[b]);
            stats.cov_empirical[a][b] = cov;
            stats.cov_empirical[b][a] = cov;

            CompensatedSum ct;
            for (std::size_t j = 0; j < samples.primes.size(); ++j) {
                ct.add(samples.weights[a][j] * samples.weights[b][j]);
            }
            stats.cov_trunc[a][b] = ct.value();
            stats.cov_trunc[b][a] = ct.value();
        }
    }
    return stats;
}

std::vector<PairReport> decorrelation_check(const SieveEngine& engine,
                                            const EnsembleConfig& config) {
    config.validate(true);
    if (config.t_grid.entries.size() < 2) {
        throw ConfigError("decorrelation: grid needs at least two entries");
    }
    const EnsembleStats stats = ensemble_r(engine, config);
    const double n = static_cast<double>(stats.n_samples);

    std::vector<PairReport> pairs;
    for (std::size_t a = 0; a + 1 < stats.per_t.size(); ++a) {
        const std::size_t b = a + 1;
        PairReport pr;
        pr.t1 = stats.per_t[a].t;
        pr.t2 = stats.per_t[b].t;
        pr.cov_empirical = stats.cov_empirical[a][b];
        pr.cov_trunc = stats.cov_trunc[a][b];
        // Var(cov-hat) ~ (v1 v2 + cov^2)/N for near-Gaussian coordinates,
        // with the truncated analytic moments keeping the band deterministic.
        pr.std_error = std::sqrt((stats.cov_trunc[a][a] * stats.cov_trunc[b][b] +
                                  pr.cov_trunc * pr.cov_trunc) /
                                 n);
        pr.within_3se =
            std::abs(pr.cov_empirical - pr.cov_trunc) <= 3.0 * pr.std_error;
        pairs.push_back(pr);
    }
    return pairs;
}

TailReport tail_probability(const SieveEngine& engine,
                            const EnsembleConfig& config, double t) {
    config.validate(false);
    if (!(t > 0.0 && t < 0.5)) {
        throw std::domain_error("tail_probability: requires 0 < t < 1/2");
    }
    config.trunc.validate();

    const auto primes = engine.collect_primes(2, config.trunc.prime_limit);
    const double e1 = -(0.5 + t);
    std::vector<double> weights(primes.size());
    for (std::size_t j = 0; j < primes.size(); ++j) {
        weights[j] = std::pow(static_cast<double>(primes[j]), e1);
    }

    const double log_inv_t = std::log(1.0 / t);
    const double threshold = -log_inv_t;
    const std::uint64_t n = config.effective_samples();

    std::vector<std::uint8_t> below(n, 0);
    parallel_for_index(n, config.workers, [&](std::uint64_t i) {
        const SignOracle oracle = oracle_for_sample(config, i);
        double sum = 0.0;
        for (std::size_t j = 0; j < primes.size(); ++j) {
            const double s = oracle.sign_unchecked(primes[j]) < 0 ? -1.0 : 1.0;
            sum += s * weights[j];
        }
        below[i] = sum < threshold ? 1 : 0;
    });

    std::uint64_t hits = 0;
    for (std::uint8_t b : below) hits += b;

    CompensatedSum var_acc;
    for (double w : weights) var_acc.add(w * w);

    TailReport report;
    report.t = t;
    report.threshold = threshold;
    report.frequency = static_cast<double>(hits) / static_cast<double>(n);
    report.chebyshev_bound = var_acc.value() / (log_inv_t * log_inv_t);
    report.n_samples = n;
    return report;
}

CensusEnsemble ensemble_census(const SieveEngine& engine,
                               const EnsembleConfig& config) {
    config.validate(false);
    if (config.x_checkpoints.empty()) {
        throw ConfigError("ensemble census: needs at least one checkpoint");
    }
    std::vector<std::uint64_t> checkpoints = config.x_checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end());
    const std::uint64_t x_max = checkpoints.back();

    // n^(-1/2) is seed-independent; share one table across all samples.
    std::vector<double> weights(x_max);
    for (std::uint64_t n = 1; n <= x_max; ++n) {
        weights[n - 1] = std::pow(static_cast<double>(n), -0.5);
    }

    const std::uint64_t n = config.effective_samples();
    std::vector<std::vector<std::uint64_t>> counts(
        checkpoints.size(), std::vector<std::uint64_t>(n, 0));

    CensusOptions options;
    options.checkpoints = checkpoints;
    parallel_for_index(n, config.workers, [&](std::uint64_t i) {
        const SignOracle oracle = oracle_for_sample(config, i);
        const CensusReport report =
            sign_changes(engine, oracle, x_max, options, weights);
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            counts[c][i] = report.checkpoints[c].crossings_so_far;
        }
    });

    CensusEnsemble out;
    out.n_samples = n;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        CensusCheckpointStats cp;
        cp.x = checkpoints[c];

        std::vector<std::uint64_t> sorted = counts[c];
        std::sort(sorted.begin(), sorted.end());
        cp.min = sorted.front();
        cp.max = sorted.back();
        cp.median = (n % 2 == 1)
                        ? static_cast<double>(sorted[n / 2])
                        : 0.5 * (static_cast<double>(sorted[n / 2 - 1]) +
                                 static_cast<double>(sorted[n / 2]));

        std::uint64_t total = 0, ge1 = 0, ge2 = 0, ge5 = 0;
        for (std::uint64_t x : sorted) {
            total += x;
            if (x >= 1) ++ge1;
            if (x >= 2) ++ge2;
            if (x >= 5) ++ge5;
        }
        const double dn = static_cast<double>(n);
        cp.mean = static_cast<double>(total) / dn;
        cp.frac_ge1 = static_cast<double>(ge1) / dn;
        cp.frac_ge2 = static_cast<double>(ge2) / dn;
        cp.frac_ge5 = static_cast<double>(ge5) / dn;

        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            cp.histogram.emplace_back(sorted[i], j - i);
            i = j;
        }
        out.per_checkpoint.push_back(std::move(cp));
    }
    return out;
}

}  // namespace rmf
