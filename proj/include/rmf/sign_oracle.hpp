#ifndef RMF_SIGN_ORACLE_HPP
#define RMF_SIGN_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "rmf/sieve.hpp"

namespace rmf {

// splitmix64 finalizer.  Bijective avalanche mixer; every output bit is a
// high-quality pseudorandom function of the input.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// i-th output of the splitmix64 stream seeded at `base`.  Used to derive
// per-sample seeds in ensemble runs; published (base_seed, index) pairs
// reproduce samples bit-identically.
inline std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

enum class SignMode { kRandom, kAllPlus, kAllMinus };

// Seed-addressed assignment p -> f(p) in {-1,+1}; the sampled randomness of
// the whole system.  A pure function of (seed, mode, p): any worker can
// evaluate any prime's sign without shared state.
//
// kAllPlus and kAllMinus are deterministic reference oracles: all_plus gives
// harmonic-sum ground truths, all_minus is the Liouville function.
class SignOracle {
public:
    explicit SignOracle(std::uint64_t seed = 0, SignMode mode = SignMode::kRandom)
        : seed_(seed), mode_(mode) {}

    // Sign for a known prime.  No primality check; callers iterate sieved
    // primes.  Hot path.
    int sign_unchecked(std::uint64_t p) const {
        switch (mode_) {
            case SignMode::kAllPlus: return +1;
            case SignMode::kAllMinus: return -1;
            case SignMode::kRandom: break;
        }
        return (mix64(mix64(p) ^ seed_) >> 63) ? -1 : +1;
    }

    // Checked variant: throws std::invalid_argument if p is not prime.
    int prime_sign(std::uint64_t p) const;

    std::uint64_t seed() const { return seed_; }
    SignMode mode() const { return mode_; }

private:
    std::uint64_t seed_;
    SignMode mode_;
};

// f(n) for a single n >= 1: the completely multiplicative extension
// f(n) = prod f(p)^{a_p} over n = prod p^{a_p}, f(1) = 1.
// Factors by trial division over the engine's base primes; n must lie within
// the engine's sieved capacity (ResourceError otherwise).
int value(const SieveEngine& engine, const SignOracle& oracle, std::uint64_t n);

// f(n) for every n in the range, as +-1 entries.  Entry-wise equal to
// value(); computed by segmented factorization, so the cost is amortized
// across the block.  Range is budget-limited like the sieve block ops.
std::vector<std::int8_t> value_block(const SieveEngine& engine,
                                     const SignOracle& oracle,
                                     const PrimeRange& range);

}  // namespace rmf

#endif
