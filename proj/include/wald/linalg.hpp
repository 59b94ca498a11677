#pragma once

#include <optional>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/modular.hpp"
#include "wald/primes.hpp"

namespace wald {

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// exact integer pivots.  Pivot choice is the first nonzero entry in scan
/// order, for determinism.
std::size_t rank_exact(const IntMatrix& m);

/// One exact rational kernel vector, or nullopt when M has full column
/// rank.  The candidate comes from modular solving, CRT lifting and
/// rational reconstruction; M*v = 0 is verified in exact integer
/// arithmetic before returning (the returned vector is integral and
/// primitive).  Unlucky primes trigger retries; exhausting the prime
/// budget without a verdict throws InconclusiveError.
std::optional<std::vector<BigInt>> kernel_vector_exact(const IntMatrix& m,
                                                       const PrimeSet& primes = PrimeSet::default_set());

/// Certified kernel: either full column rank (empty basis, certified by a
/// single full-column-rank prime) or a complete exactly-verified basis of
/// the rational kernel.  dim = cols - rank_mod_p bounds the kernel from
/// above; the verified independent vectors bound it from below, pinning
/// the dimension without exact elimination.
struct CertifiedKernel {
    std::vector<std::vector<BigInt>> basis;   // verified: M*v = 0 for each
    std::vector<std::uint64_t> primes_used;
};

CertifiedKernel kernel_basis_certified(const IntMatrix& m, const PrimeSet& primes);

} // namespace wald
