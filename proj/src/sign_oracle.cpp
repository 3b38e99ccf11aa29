#include "rmf/sign_oracle.hpp"

#include <stdexcept>
#include <string>

#include "rmf/errors.hpp"

namespace rmf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

int SignOracle::prime_sign(std::uint64_t p) const {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("prime_sign: " + std::to_string(p) +
                                    " is not prime");
    }
    return sign_unchecked(p);
}

int value(const SieveEngine& engine, const SignOracle& oracle, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("value: n must be >= 1");
    if (n > engine.max_index()) {
        throw ResourceError("value: n exceeds sieved capacity");
    }
    int sign = 1;
    std::uint64_t rem = n;
    for (std::uint64_t p : engine.base_primes()) {
        if (p * p > rem) break;
        if (rem % p != 0) continue;
        int exp = 0;
        while (rem % p == 0) {
            rem /= p;
            ++exp;
        }
        if ((exp & 1) && oracle.sign_unchecked(p) < 0) sign = -sign;
    }
    if (rem > 1) sign *= oracle.sign_unchecked(rem);  // leftover prime factor
    return sign;
}

std::vector<std::int8_t> value_block(const SieveEngine& engine,
                                     const SignOracle& oracle,
                                     const PrimeRange& range) {
    if (range.lo < 1) throw ConfigError("value_block: range lo must be >= 1");
    if (range.hi < range.lo) throw ConfigError("value_block: range hi must be >= lo");
    if (range.hi > engine.max_index()) {
        throw ResourceError("value_block: range exceeds sieved capacity");
    }
    if (range.length() > engine.block_len()) {
        throw ResourceError("value_block: range length exceeds block budget");
    }

    const std::uint64_t lo = range.lo, hi = range.hi;
    const std::size_t len = range.length();

    std::vector<std::int8_t> sign(len, +1);
    // Product of the small prime-power part removed so far; the leftover
    // n / removed is 1 or a single prime > sqrt(hi).
    std::vector<std::uint64_t> removed(len, 1);

    for (std::uint64_t p : engine.base_primes()) {
        if (p * p > hi) break;
        const int sp = oracle.sign_unchecked(p);
        // One pass per prime power q = p^k: each n with p^a || n is hit by
        // exactly a of these passes, so it collects sign f(p)^a and has p^a
        // divided out of it.
        for (std::uint64_t q = p; q <= hi; q *= p) {
            std::uint64_t start = ((lo + q - 1) / q) * q;
            for (std::uint64_t m = start; m <= hi; m += q) {
                const std::size_t idx = m - lo;
                if (sp < 0) sign[idx] = -sign[idx];
                removed[idx] *= p;
            }
            if (q > hi / p) break;  // next power would overflow past hi
        }
    }

    for (std::size_t idx = 0; idx < len; ++idx) {
        const std::uint64_t n = lo + idx;
        const std::uint64_t leftover = n / removed[idx];
        if (leftover > 1) {
            if (oracle.sign_unchecked(leftover) < 0) sign[idx] = -sign[idx];
        }
    }
    return sign;
}

}  // namespace rmf
