#include "rmf/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

// Plain odd-only sieve of Eratosthenes for the base primes.
std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 3; i * i <= limit; i += 2) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
    }
    primes.push_back(2);
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

SieveEngine::SieveEngine(std::uint64_t max_index, std::uint64_t block_len)
    : max_index_(max_index), block_len_(block_len) {
    if (max_index_ < 1) throw ConfigError("sieve: max_index must be >= 1");
    if (block_len_ < 2) throw ConfigError("sieve: block length must be >= 2");
    base_primes_ = sieve_up_to(isqrt(max_index_));
}

void SieveEngine::check_span(std::uint64_t lo, std::uint64_t hi) const {
    if (lo < 1) throw ConfigError("sieve: range lo must be >= 1");
    if (hi < lo) throw ConfigError("sieve: range hi must be >= lo");
    if (hi > max_index_) {
        throw ResourceError("sieve: range exceeds sieved capacity of " +
                            std::to_string(max_index_));
    }
}

void SieveEngine::check_range(const PrimeRange& range) const {
    check_span(range.lo, range.hi);
    if (range.length() > block_len_) {
        throw ResourceError("sieve: range length " + std::to_string(range.length()) +
                            " exceeds block budget " + std::to_string(block_len_));
    }
}

std::vector<std::uint64_t> SieveEngine::primes_in_range(const PrimeRange& range) const {
    check_range(range);
    const std::uint64_t lo = range.lo, hi = range.hi;
    const std::uint64_t len = range.length();

    std::vector<bool> composite(len, false);
    for (std::uint64_t p : base_primes_) {
        if (p * p > hi) break;
        std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (std::uint64_t m = start; m <= hi; m += p) composite[m - lo] = true;
    }

    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n - lo]) primes.push_back(n);
    }
    return primes;
}

SpfBlock SieveEngine::spf_block(const PrimeRange& range) const {
    check_range(range);
    const std::uint64_t lo = range.lo, hi = range.hi;

    SpfBlock block;
    block.base = lo;
    block.spf.assign(range.length(), 0);

    // Ascending base primes, so the first mark on each entry is the smallest
    // prime factor.
    for (std::uint64_t p : base_primes_) {
        if (p * p > hi) break;
        std::uint64_t start = std::max(p, ((lo + p - 1) / p) * p);
        for (std::uint64_t m = start; m <= hi; m += p) {
            if (block.spf[m - lo] == 0) block.spf[m - lo] = p;
        }
    }
    // Unmarked entries have no prime factor <= sqrt(hi): prime, or 1.
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (block.spf[n - lo] == 0) block.spf[n - lo] = n;
    }
    return block;
}

std::vector<std::uint64_t> SieveEngine::collect_primes(std::uint64_t lo,
                                                       std::uint64_t hi) const {
    check_span(lo, hi);
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&out](std::uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace rmf
