#include "rmf/census.hpp"

#include <algorithm>

namespace rmf {

namespace {

std::vector<std::uint64_t> default_checkpoints(std::uint64_t x_limit) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 1000; c < x_limit; c *= 10) {
        cps.push_back(c);
        if (c > x_limit / 10) break;
    }
    if (cps.empty() || cps.back() != x_limit) cps.push_back(x_limit);
    return cps;
}

}  // namespace

CensusReport sign_changes(const SieveEngine& engine, const SignOracle& oracle,
                          std::uint64_t x_limit, const CensusOptions& options,
                          std::span<const double> weights) {
    if (x_limit < 1) throw ConfigError("census: x_limit must be >= 1");
    if (!(options.exponent > 0.0 && options.exponent <= 1.0)) {
        throw ConfigError("census: exponent must lie in (0, 1]");
    }
    if (!weights.empty() && weights.size() < x_limit) {
        throw ConfigError("census: weight table shorter than x_limit");
    }

    std::vector<std::uint64_t> checkpoints =
        options.checkpoints.empty() ? default_checkpoints(x_limit)
                                    : options.checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end());
    for (std::uint64_t c : checkpoints) {
        if (c < 1 || c > x_limit) {
            throw ConfigError("census: checkpoint outside [1, x_limit]");
        }
    }

    CensusScanner scanner(options.near_zero_tol);
    CensusReport report;
    report.x_limit = x_limit;
    report.exponent = options.exponent;

    std::size_t next_cp = 0;
    for (std::uint64_t base = 1; base <= x_limit;) {
        const std::uint64_t end = std::min(x_limit, base + engine.block_len() - 1);
        const auto signs = value_block(engine, oracle, {base, end});
        for (std::size_t i = 0; i < signs.size(); ++i) {
            const std::uint64_t n = base + i;
            const double w = weights.empty()
                                 ? std::pow(static_cast<double>(n), -options.exponent)
                                 : weights[n - 1];
            scanner.feed(signs[i], w);
            while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
                report.checkpoints.push_back(scanner.snapshot());
                ++next_cp;
            }
        }
        if (end == x_limit) break;
        base = end + 1;
    }

    report.final_sum = scanner.sum();
    report.running_min = scanner.running_min();
    report.running_max = scanner.running_max();
    report.rounding_bound = scanner.rounding_bound();
    report.crossings = scanner.take_crossings();
    report.near_zero_events = scanner.take_near_zero();
    return report;
}

}  // namespace rmf
