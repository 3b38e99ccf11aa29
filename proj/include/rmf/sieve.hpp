#ifndef RMF_SIEVE_HPP
#define RMF_SIEVE_HPP

#include <cstdint>
#include <vector>

namespace rmf {

// Inclusive range of integer indices, 1-based.
struct PrimeRange {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;

    std::uint64_t length() const { return hi - lo + 1; }
};

// Smallest-prime-factor table for n in [base, base + spf.size()).
// spf[n - base] divides n, is prime, and equals n exactly when n is prime.
// By convention spf(1) = 1, which lets multiplicative extension loops
// terminate uniformly.
struct SpfBlock {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> spf;

    std::uint64_t at(std::uint64_t n) const { return spf[n - base]; }
};

// Segmented sieve over [1, max_index].  Base primes up to sqrt(max_index)
// are sieved once at construction; all block requests are read-only after
// that and safe to issue from concurrent threads.
class SieveEngine {
public:
    static constexpr std::uint64_t kDefaultBlockLen = std::uint64_t{1} << 20;

    explicit SieveEngine(std::uint64_t max_index,
                         std::uint64_t block_len = kDefaultBlockLen);

    // Primes p with range.lo <= p <= range.hi, ascending.
    // Throws ResourceError if the range leaves [1, max_index] or its length
    // exceeds the block budget.
    std::vector<std::uint64_t> primes_in_range(const PrimeRange& range) const;

    // Smallest-prime-factor table for the range, same budget rules.
    SpfBlock spf_block(const PrimeRange& range) const;

    // Convenience: concatenation of primes_in_range over a block partition
    // of [lo, hi].  Not budget-limited.
    std::vector<std::uint64_t> collect_primes(std::uint64_t lo, std::uint64_t hi) const;

    // Invokes fn(p) for every prime p in [lo, hi], ascending, block by block.
    template <typename F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& fn) const {
        check_span(lo, hi);
        for (std::uint64_t base = lo; base <= hi;) {
            const std::uint64_t end = std::min(hi, base + block_len_ - 1);
            for (std::uint64_t p : primes_in_range({base, end})) fn(p);
            if (end == hi) break;
            base = end + 1;
        }
    }

    std::uint64_t max_index() const { return max_index_; }
    std::uint64_t block_len() const { return block_len_; }

    // Primes up to sqrt(max_index), ascending.
    const std::vector<std::uint64_t>& base_primes() const { return base_primes_; }

private:
    void check_range(const PrimeRange& range) const;
    void check_span(std::uint64_t lo, std::uint64_t hi) const;

    std::uint64_t max_index_;
    std::uint64_t block_len_;
    std::vector<std::uint64_t> base_primes_;
};

}  // namespace rmf

#endif
