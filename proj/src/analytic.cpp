#include "rmf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmf/errors.hpp"
#include "rmf/summation.hpp"

namespace rmf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_22 as exact rationals.
constexpr double kBernoulli[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,  // B_22, used only for the remainder bound
};

constexpr int kEmTerms = 10;  // correction terms B_2 .. B_20
constexpr int kEmCutoff = 64;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int moebius(int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;  // squared factor
        result = -result;
    }
    if (k > 1) result = -result;
    return result;
}

// zeta(s) - 1 by Euler-Maclaurin with the leading term dropped, so values
// like zeta(50) - 1 ~ 2^-50 keep full relative precision (prime_zeta needs
// log zeta(ks) for large ks and would otherwise lose everything below one
// ulp of 1).
AnalyticValue zeta_minus_one(double s) {
    const double n = kEmCutoff;
    CompensatedSum acc;
    double abs_terms = 0.0;

    for (int i = 2; i < kEmCutoff; ++i) {
        const double term = std::pow(static_cast<double>(i), -s);
        acc.add(term);
        abs_terms += term;
    }
    const double n_to_minus_s = std::pow(n, -s);
    const double integral = n * n_to_minus_s / (s - 1.0);
    acc.add(integral);
    acc.add(0.5 * n_to_minus_s);
    abs_terms += integral + 0.5 * n_to_minus_s;

    // Correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * n^(-s-2k+1), built
    // incrementally so large s cannot overflow intermediates.
    double poch_over_npow = s * n_to_minus_s / n;  // s * n^(-s-1)
    for (int k = 1; k <= kEmTerms; ++k) {
        const double term = kBernoulli[k - 1] / factorial(2 * k) * poch_over_npow;
        acc.add(term);
        abs_terms += std::abs(term);
        poch_over_npow *= (s + 2 * k - 1) * (s + 2 * k) / (n * n);
    }
    // For real s > 0 the remainder is bounded by the first omitted term.
    const double remainder =
        std::abs(kBernoulli[kEmTerms] / factorial(2 * kEmTerms + 2) * poch_over_npow);

    AnalyticValue out;
    out.value = acc.value();
    // Budget: series remainder, summation rounding, and ~1 ulp per pow().
    out.tail_bound = remainder + acc.error_bound() + 2.0 * kEps * abs_terms;
    return out;
}

void require_s_above_one(double s, const char* who) {
    if (!(s > 1.0 + 1e-6)) {
        throw std::domain_error(std::string(who) + ": requires s > 1 + 1e-6");
    }
}

}  // namespace

AnalyticValue zeta(double s) {
    require_s_above_one(s, "zeta");
    const AnalyticValue zm1 = zeta_minus_one(s);
    AnalyticValue out;
    out.value = 1.0 + zm1.value;
    out.tail_bound = zm1.tail_bound + kEps * std::abs(out.value);
    return out;
}

AnalyticValue prime_zeta(double s) {
    require_s_above_one(s, "prime_zeta");

    constexpr double kTermTol = 1e-15;
    constexpr int kMaxK = 128;

    CompensatedSum acc;
    double propagated = 0.0;
    int stop_k = kMaxK + 1;
    for (int k = 1; k <= kMaxK; ++k) {
        const AnalyticValue zm1 = zeta_minus_one(k * s);
        const double log_term = std::log1p(zm1.value);
        // The k = 1 term is the bulk of P(s) and is always kept; the cutoff
        // only decides where the alternating Moebius tail is dropped.
        if (k >= 2 && std::abs(log_term) / k < kTermTol) {
            stop_k = k;
            break;
        }
        const int mu = moebius(k);
        if (mu != 0) {
            acc.add(mu * log_term / k);
            propagated += zm1.tail_bound / ((1.0 + zm1.value) * k);
        }
    }

    // Terms k >= stop_k: |log zeta(ks)| <= 2.6 * 2^(-ks) for ks >= 2, so the
    // dropped tail is dominated by a geometric series with ratio 2^(-s).
    const double r = std::pow(2.0, -s);
    const double tail =
        2.6 * std::pow(2.0, -static_cast<double>(stop_k) * s) / (stop_k * (1.0 - r));

    AnalyticValue out;
    out.value = acc.value();
    out.tail_bound = tail + propagated + acc.error_bound();
    return out;
}

AnalyticValue mertens_deviation(double t) {
    if (!(t > 0.0 && t < 0.5)) {
        throw std::domain_error("mertens_deviation: requires 0 < t < 1/2");
    }
    const AnalyticValue p = prime_zeta(1.0 + t);
    return {p.value - std::log(1.0 / t), p.tail_bound};
}

AnalyticValue mertens_constant_c0() {
    CompensatedSum acc;
    double propagated = 0.0;
    int stop_k = 2;
    for (int k = 2; k <= 128; ++k) {
        const AnalyticValue zm1 = zeta_minus_one(static_cast<double>(k));
        const double log_term = std::log1p(zm1.value);
        if (log_term / k < 1e-18) {
            stop_k = k;
            break;
        }
        const int mu = moebius(k);
        if (mu != 0) {
            acc.add(mu * log_term / k);
            propagated += zm1.tail_bound / ((1.0 + zm1.value) * k);
        }
    }
    const double tail = 2.6 * std::pow(2.0, -stop_k) / (stop_k * 0.5);
    AnalyticValue out;
    out.value = acc.value();
    out.tail_bound = tail + propagated + acc.error_bound();
    return out;
}

AnalyticValue r_variance(double t) {
    if (!(t > 0.0 && t <= 0.25)) {
        throw std::domain_error("r_variance: requires 0 < t <= 1/4");
    }
    return r_covariance(t, t);
}

AnalyticValue r_covariance(double t1, double t2) {
    if (!(t1 > 0.0 && t1 <= 0.25) || !(t2 > 0.0 && t2 <= 0.25)) {
        throw std::domain_error("r_covariance: requires t1, t2 in (0, 1/4]");
    }
    // Canonical argument order makes the result bit-exactly symmetric.
    const double a = std::min(t1, t2);
    const double b = std::max(t1, t2);

    const AnalyticValue p1 = prime_zeta(1.0 + a + b);
    const AnalyticValue p2 = prime_zeta(1.0 + a + 2.0 * b);
    const AnalyticValue p3 = prime_zeta(1.0 + 2.0 * a + b);
    const AnalyticValue p4 = prime_zeta(1.0 + 2.0 * a + 2.0 * b);

    AnalyticValue out;
    out.value = ((p1.value - p2.value) - p3.value) + p4.value;
    out.tail_bound = p1.tail_bound + p2.tail_bound + p3.tail_bound +
                     p4.tail_bound + 4.0 * kEps * std::abs(out.value);
    return out;
}

double r_variance_log_approx(double t) {
    return std::log(1.0 / (2.0 * t)) + std::log(1.0 / (4.0 * t)) -
           2.0 * std::log(1.0 / (3.0 * t));
}

double r_covariance_log_approx(double t1, double t2) {
    const double a = std::min(t1, t2);
    const double b = std::max(t1, t2);
    return std::log((b + 2.0 * a) / (b + a)) +
           std::log((2.0 * b + a) / (2.0 * b + 2.0 * a));
}

double t_sequence(int i) {
    if (i < 1 || i > 9) {
        throw std::domain_error("t_sequence: i must lie in [1, 9]");
    }
    return std::ldexp(1.0, -(1 << i));
}

TGrid TGrid::from_sequence(int i_lo, int i_hi) {
    if (i_lo < 1 || i_hi < i_lo) {
        throw ConfigError("t-grid: sequence indices must satisfy 1 <= lo <= hi");
    }
    TGrid grid;
    for (int i = i_lo; i <= i_hi; ++i) grid.entries.push_back(t_sequence(i));
    grid.validate();
    return grid;
}

TGrid TGrid::parse(const std::string& text) {
    // Doubling-sequence shorthand: 2^-2^i:i=A..B
    const std::string prefix = "2^-2^i:i=";
    if (text.rfind(prefix, 0) == 0) {
        const std::string range = text.substr(prefix.size());
        const auto dots = range.find("..");
        if (dots == std::string::npos) {
            throw ConfigError("t-grid: expected 2^-2^i:i=A..B");
        }
        try {
            const int lo = std::stoi(range.substr(0, dots));
            const int hi = std::stoi(range.substr(dots + 2));
            return from_sequence(lo, hi);
        } catch (const std::logic_error&) {
            throw ConfigError("t-grid: bad sequence bounds in '" + text + "'");
        }
    }

    TGrid grid;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) {
                throw ConfigError("t-grid: bad entry '" + item + "'");
            }
            grid.entries.push_back(v);
        } catch (const std::logic_error&) {
            throw ConfigError("t-grid: bad entry '" + item + "'");
        }
        pos = comma + 1;
    }
    grid.validate();
    return grid;
}

void TGrid::validate() const {
    if (entries.empty()) throw ConfigError("t-grid: must be non-empty");
    for (double t : entries) {
        if (!(t > 0.0 && t < 0.5)) {
            throw ConfigError("t-grid: entries must lie in (0, 1/2)");
        }
    }
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (!(entries[i] < entries[i - 1])) {
            throw ConfigError("t-grid: entries must be strictly decreasing");
        }
    }
}

}  // namespace rmf
