#include "wald/primes.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

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

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeSet::PrimeSet(std::vector<u64> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw std::invalid_argument("empty prime set");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (primes_[i] >= (1ull << 62))
            throw std::invalid_argument("prime exceeds 2^62: " + std::to_string(primes_[i]));
        if (!is_prime_u64(primes_[i]))
            throw std::invalid_argument("not prime: " + std::to_string(primes_[i]));
        for (std::size_t j = 0; j < i; ++j)
            if (primes_[j] == primes_[i])
                throw std::invalid_argument("duplicate prime: " + std::to_string(primes_[i]));
    }
}

PrimeSet PrimeSet::default_set() {
    if (const char* env = std::getenv("WALD_PRIMES")) {
        std::vector<u64> ps;
        std::stringstream ss(env);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) ps.push_back(std::stoull(tok));
        return PrimeSet(std::move(ps));
    }
    // Eight fixed 62-bit primes (the largest below 2^62).
    return PrimeSet({4611686018427387847ull, 4611686018427387817ull,
                     4611686018427387787ull, 4611686018427387761ull,
                     4611686018427387751ull, 4611686018427387737ull,
                     4611686018427387733ull, 4611686018427387709ull});
}

} // namespace wald
