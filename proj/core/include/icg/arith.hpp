#pragma once

/// @file arith.hpp
/// Exact integer and rational types shared by every module, plus the error
/// types the library throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Input violates a documented invariant or precondition.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A resource guard or soundness gate refused the request.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigInt ipow(const BigInt& base, unsigned exponent);

/// Correctly rounded (round-half-even) decimal expansion with exactly
/// `digits` fractional digits.
std::string to_decimal(const Rational& x, unsigned digits);

std::string to_string(const BigInt& x);

} // namespace icg
