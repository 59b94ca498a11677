#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wald {

using BigInt = mpz_class;

/// Exact rational with canonical representation: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.  mpq_class maintains exactly this
/// invariant once canonicalize() has run; make_rational is the one
/// entry point that constructs from raw numerator/denominator.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const BigInt& n) {
    return n.get_str();
}

/// Thrown when a certified computation runs out of primes before it can
/// either confirm or refute a candidate answer.  Never a wrong answer.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wald
