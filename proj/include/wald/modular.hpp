#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/primes.hpp"
#include "wald/rational.hpp"

namespace wald {

/// Rank of M over F_p.  Throws std::invalid_argument if p is not prime.
/// Always <= the rank over Q.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Reduced row echelon data of M over F_p: the pivot columns and, for
/// each free column, the kernel basis vector normalized to have a 1 in
/// that free column (entries elsewhere only at pivot columns).
struct EchelonModP {
    std::uint64_t prime = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
    // kernel[k][j]: j-th coordinate of the basis vector for free_cols[k].
    std::vector<std::vector<std::uint64_t>> kernel;
};

EchelonModP echelon_mod_p(const IntMatrix& m, std::uint64_t p);

/// Incremental Chinese remaindering: residues x_i mod p_i -> x mod prod(p_i),
/// represented as (value, modulus).
struct CrtAccumulator {
    BigInt value = 0;
    BigInt modulus = 1;
    void absorb(std::uint64_t residue, std::uint64_t p);
};

/// Recover a/b with |a|, b <= sqrt(N/2) from a residue r mod N, by the
/// half-extended Euclidean algorithm.  Returns nullopt when no such
/// fraction exists; any returned value still requires exact verification
/// by the caller.
std::optional<Rational> rational_reconstruct(const BigInt& residue, const BigInt& modulus);

} // namespace wald
