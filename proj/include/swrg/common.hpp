#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swrg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad ring parameters, malformed matrix, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured size budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A computed object contradicts what the caller asserted (e.g. a refuted spectrum).
class Inconsistent : public Error {
public:
    using Error::Error;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

inline BigInt bigpow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/// num/den for any nonzero den (the two-argument cpp_rational constructor rejects den < 0).
inline Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace swrg
