#include "wald/linalg.hpp"

#include <algorithm>

namespace wald {

namespace {

std::vector<std::vector<BigInt>> copy_entries(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j);
    return a;
}

void make_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const BigInt& x : v) {
        if (x != 0) {
            if (x < 0)
                for (BigInt& y : v) y = -y;
            break;
        }
    }
}

/// Reconstruct the kernel vector for free column `which` from the rref
/// data of several agreeing primes.  Returns a primitive integer vector,
/// or nullopt when rational reconstruction fails (not enough primes yet).
std::optional<std::vector<BigInt>> reconstruct_kernel_vector(
    const std::vector<EchelonModP>& eches, std::size_t which) {
    const EchelonModP& first = eches.front();
    const std::size_t cols = first.kernel[which].size();
    std::vector<Rational> rat(cols, Rational(0));
    rat[first.free_cols[which]] = 1;
    for (std::size_t pc : first.pivot_cols) {
        CrtAccumulator acc;
        for (const EchelonModP& e : eches) acc.absorb(e.kernel[which][pc], e.prime);
        auto q = rational_reconstruct(acc.value, acc.modulus);
        if (!q) return std::nullopt;
        rat[pc] = *q;
    }
    BigInt lcm = 1;
    for (const Rational& q : rat)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Rational scaled = rat[j] * Rational(lcm);
        v[j] = scaled.get_num();
    }
    make_primitive(v);
    return v;
}

bool same_pivots(const EchelonModP& a, const EchelonModP& b) {
    return a.pivot_cols == b.pivot_cols;
}

} // namespace

std::size_t rank_exact(const IntMatrix& m) {
    auto a = copy_entries(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

CertifiedKernel kernel_basis_certified(const IntMatrix& m, const PrimeSet& primes) {
    CertifiedKernel out;
    const std::size_t cols = m.cols();
    if (cols == 0) return out;

    std::vector<EchelonModP> eches;
    std::size_t max_rank = 0;
    for (std::size_t idx = 0; idx < primes.size(); ++idx) {
        EchelonModP e = echelon_mod_p(m, primes[idx]);
        out.primes_used.push_back(primes[idx]);
        if (e.rank == cols) {
            // rank_p <= rank_Q, so one full-column-rank prime certifies
            // a trivial kernel.
            out.basis.clear();
            return out;
        }
        if (e.rank > max_rank) {
            max_rank = e.rank;
            eches.clear();
        }
        if (e.rank == max_rank && (eches.empty() || same_pivots(eches.front(), e)))
            eches.push_back(std::move(e));
        if (eches.empty()) continue;

        const std::size_t want = cols - max_rank;
        std::vector<std::vector<BigInt>> basis;
        bool ok = true;
        for (std::size_t k = 0; k < want; ++k) {
            auto v = reconstruct_kernel_vector(eches, k);
            if (!v || !m.annihilates(*v)) { ok = false; break; }
            basis.push_back(std::move(*v));
        }
        if (ok) {
            // dim <= cols - rank_p = want, and `want` verified vectors with
            // units at distinct free columns are independent: dim = want.
            out.basis = std::move(basis);
            return out;
        }
    }

    // Prime budget exhausted; fall back on one exact elimination.
    const std::size_t exact_rank = rank_exact(m);
    if (exact_rank == cols) {
        out.basis.clear();
        return out;
    }
    throw InconclusiveError("kernel reconstruction failed after exhausting the prime budget");
}

std::optional<std::vector<BigInt>> kernel_vector_exact(const IntMatrix& m, const PrimeSet& primes) {
    CertifiedKernel k = kernel_basis_certified(m, primes);
    if (k.basis.empty()) return std::nullopt;
    return k.basis.front();
}

} // namespace wald
