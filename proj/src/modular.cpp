#include "wald/modular.hpp"

#include <stdexcept>

namespace wald {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::vector<std::vector<u64>> reduce_entries(const IntMatrix& m, u64 p) {
    std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
    return a;
}

void require_prime(u64 p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

} // namespace

std::size_t rank_mod_p(const IntMatrix& m, u64 p) {
    require_prime(p);
    auto a = reduce_entries(m, p);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const u64 inv = invmod(a[r][c], p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const u64 f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                u64 t = mulmod(f, a[r][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        ++r;
    }
    return r;
}

EchelonModP echelon_mod_p(const IntMatrix& m, u64 p) {
    require_prime(p);
    auto a = reduce_entries(m, p);
    const std::size_t rows = m.rows(), cols = m.cols();
    EchelonModP out;
    out.prime = p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const u64 inv = invmod(a[r][c], p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const u64 f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                u64 t = mulmod(f, a[r][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : out.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    for (std::size_t f : out.free_cols) {
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
            const u64 coeff = a[i][f];
            if (coeff) v[out.pivot_cols[i]] = p - coeff;
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

void CrtAccumulator::absorb(u64 residue, u64 p) {
    // x' = x + N * ((r - x) * N^{-1} mod p)
    BigInt pz(static_cast<unsigned long>(p));
    BigInt n_inv;
    if (mpz_invert(n_inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("CRT moduli not coprime");
    BigInt diff = BigInt(static_cast<unsigned long>(residue)) - value;
    BigInt t = (diff * n_inv) % pz;
    if (t < 0) t += pz;
    value += modulus * t;
    modulus *= pz;
}

std::optional<Rational> rational_reconstruct(const BigInt& residue, const BigInt& modulus) {
    if (modulus <= 1) return std::nullopt;
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
    BigInt r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    BigInt s0 = 0, s1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (s1 == 0) return std::nullopt;
    BigInt den = s1, num = r1;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(num == 0 && den == 1)) return std::nullopt;
    return make_rational(num, den);
}

} // namespace wald
