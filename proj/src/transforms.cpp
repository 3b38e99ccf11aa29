#include "rmf/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

void require_positive_t(double t, const char* who) {
    if (!(t > 0.0)) {
        throw std::domain_error(std::string(who) + ": requires t > 0");
    }
}

// Applies fn(n, sign) for n = 1..x_limit, signs produced block by block.
template <typename F>
void for_each_value(const SieveEngine& engine, const SignOracle& oracle,
                    std::uint64_t x_limit, F&& fn) {
    for (std::uint64_t base = 1; base <= x_limit;) {
        const std::uint64_t end = std::min(x_limit, base + engine.block_len() - 1);
        const auto signs = value_block(engine, oracle, {base, end});
        for (std::size_t i = 0; i < signs.size(); ++i) {
            fn(base + i, static_cast<int>(signs[i]));
        }
        if (end == x_limit) break;
        base = end + 1;
    }
}

}  // namespace

void TruncationSpec::validate() const {
    if (x_limit < 2 || prime_limit < 2) {
        throw ConfigError("truncation: x_limit and prime_limit must be >= 2");
    }
}

double dirichlet_sum(const SieveEngine& engine, const SignOracle& oracle,
                     double t, const TruncationSpec& spec) {
    require_positive_t(t, "dirichlet_sum");
    const double exponent = -(0.5 + t);
    CompensatedSum acc;
    for_each_value(engine, oracle, spec.x_limit,
                   [&](std::uint64_t n, int sign) {
                       const double w = std::pow(static_cast<double>(n), exponent);
                       acc.add(sign < 0 ? -w : w);
                   });
    return acc.value();
}

double laplace_transform(const SieveEngine& engine, const SignOracle& oracle,
                         double t, const TruncationSpec& spec) {
    require_positive_t(t, "laplace_transform");
    const double x_pow = std::pow(static_cast<double>(spec.x_limit), -t);
    CompensatedSum acc;
    for_each_value(engine, oracle, spec.x_limit,
                   [&](std::uint64_t n, int sign) {
                       const double nd = static_cast<double>(n);
                       const double w =
                           std::pow(nd, -0.5) * (std::pow(nd, -t) - x_pow) / t;
                       acc.add(sign < 0 ? -w : w);
                   });
    return acc.value();
}

double partial_sum_sqrt(const SieveEngine& engine, const SignOracle& oracle,
                        std::uint64_t x_limit) {
    CompensatedSum acc;
    for_each_value(engine, oracle, x_limit, [&](std::uint64_t n, int sign) {
        const double w = std::pow(static_cast<double>(n), -0.5);
        acc.add(sign < 0 ? -w : w);
    });
    return acc.value();
}

double euler_product_log(const SieveEngine& engine, const SignOracle& oracle,
                         double t, const TruncationSpec& spec) {
    require_positive_t(t, "euler_product_log");
    const double exponent = -(0.5 + t);
    CompensatedSum acc;
    engine.for_each_prime(2, spec.prime_limit, [&](std::uint64_t p) {
        const double x = std::pow(static_cast<double>(p), exponent);
        const int sign = oracle.sign_unchecked(p);
        // -log(1 - f(p) x), via log1p for the near-1 factors.
        acc.add(-std::log1p(sign < 0 ? x : -x));
    });
    return acc.value();
}

double dirichlet_tail_bound(double t, std::uint64_t x_limit) {
    if (!(t > 0.5)) return std::numeric_limits<double>::infinity();
    return std::pow(static_cast<double>(x_limit), 0.5 - t) / (t - 0.5);
}

double euler_log_tail_bound(double t, std::uint64_t prime_limit) {
    if (!(t > 0.5)) return std::numeric_limits<double>::infinity();
    const double p = static_cast<double>(prime_limit);
    const double sum_bound = std::pow(p, 0.5 - t) / (t - 0.5);
    const double largest = std::pow(p, -0.5 - t);
    return sum_bound / (1.0 - largest);
}

void RStatAccumulator::add_range(const SieveEngine& engine, std::uint64_t lo,
                                 std::uint64_t hi) {
    const double e1 = -(0.5 + t_);
    const double e2 = -(0.5 + 2.0 * t_);
    engine.for_each_prime(lo, hi, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        const double w = std::pow(pd, e1) - std::pow(pd, e2);
        acc_.add(oracle_.sign_unchecked(p) < 0 ? -w : w);
    });
}

double r_statistic(const SieveEngine& engine, const SignOracle& oracle,
                   double t, const TruncationSpec& spec) {
    if (!(t > 0.0 && t < 0.5)) {
        throw std::domain_error("r_statistic: requires 0 < t < 1/2");
    }
    RStatAccumulator acc(oracle, t);
    acc.add_range(engine, 2, spec.prime_limit);
    return acc.value();
}

double r_max_term(const SieveEngine& engine, double t, const TruncationSpec& spec) {
    if (!(t > 0.0 && t < 0.5)) {
        throw std::domain_error("r_max_term: requires 0 < t < 1/2");
    }
    const double e1 = -(0.5 + t);
    const double e2 = -(0.5 + 2.0 * t);
    double best = 0.0;
    engine.for_each_prime(2, spec.prime_limit, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        best = std::max(best, std::pow(pd, e1) - std::pow(pd, e2));
    });
    return best;
}

std::vector<FScanRow> f_ratio_scan(const SieveEngine& engine,
                                   const SignOracle& oracle, const TGrid& grid,
                                   const TruncationSpec& spec) {
    grid.validate();
    spec.validate();
    const double s_x = partial_sum_sqrt(engine, oracle, spec.x_limit);
    const double x = static_cast<double>(spec.x_limit);

    std::vector<FScanRow> rows;
    rows.reserve(grid.entries.size());
    for (double t : grid.entries) {
        FScanRow row;
        row.t = t;
        row.f_t = laplace_transform(engine, oracle, t, spec);
        row.f_2t = laplace_transform(engine, oracle, 2.0 * t, spec);
        row.ratio_flag = row.f_t > 0.5 * row.f_2t;
        row.s_x = s_x;
        const double mass_beyond = std::pow(x, -t) * std::abs(s_x);
        row.trunc_indicator = row.f_t == 0.0
                                  ? std::numeric_limits<double>::infinity()
                                  : mass_beyond / std::abs(row.f_t);
        row.trunc_limited = row.trunc_indicator > kTruncationAdequacyThreshold;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rmf
