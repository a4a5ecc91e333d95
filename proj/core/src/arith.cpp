#include "icg/arith.hpp"

namespace icg {

BigInt ipow(const BigInt& base, unsigned exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_decimal(const Rational& x, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const bool negative = num < 0;
    if (negative) num = -num;

    const BigInt scale = ipow(BigInt(10), digits);
    BigInt q;
    BigInt rem;
    boost::multiprecision::divide_qr(BigInt(num * scale), den, q, rem);
    const BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;

    std::string text = q.str();
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    if (digits > 0) text.insert(text.size() - digits, 1, '.');
    if (negative && q != 0) text.insert(0, 1, '-');
    return text;
}

} // namespace icg
