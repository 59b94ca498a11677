#pragma once

#include <cstdint>
#include <vector>

namespace wald {

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Ordered list of distinct primes used for modular computations.
/// Order is fixed and reproducible; every element is checked at
/// construction time.
class PrimeSet {
public:
    explicit PrimeSet(std::vector<std::uint64_t> primes);

    /// The default set: eight fixed 62-bit primes.  The WALD_PRIMES
    /// environment variable (comma-separated) overrides it, which exists
    /// for exercising unlucky-prime handling in tests.
    static PrimeSet default_set();

    std::size_t size() const { return primes_.size(); }
    std::uint64_t operator[](std::size_t i) const { return primes_[i]; }
    const std::vector<std::uint64_t>& all() const { return primes_; }

private:
    std::vector<std::uint64_t> primes_;
};

} // namespace wald
