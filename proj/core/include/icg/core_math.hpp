#pragma once

/// @file core_math.hpp
/// Exact evaluation of the pair functional h_p over exponent tuples, the
/// energy identity for gcd graphs of prime-power order, the reversal symmetry,
/// and the closed-form minima for the two divisible cases.
///
/// For a prime power n = p^s and divisor set {p^a_1, ..., p^a_r} the graph
/// energy is
///
///     E = 2 (p-1) p^(s-1) (r - (p-1) h_p(a)),   h_p(a) = sum_{k<i} p^-(a_i - a_k)
///
/// so maximizing energy at fixed (s, r) is minimizing h_p.

#include "icg/arith.hpp"

#include <compare>
#include <span>
#include <vector>

namespace icg {

bool is_prime(std::uint64_t n);

/// A validated prime number.
class Prime {
public:
    explicit Prime(std::uint64_t value);
    std::uint64_t value() const noexcept { return value_; }
    operator std::uint64_t() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

/// The triple (p, s, r): vertex count n = p^s, divisor sets of size r.
class ProblemInstance {
public:
    /// Requires s >= 2 and 2 <= r <= s.
    ProblemInstance(Prime p, int s, int r);

    Prime p() const noexcept { return p_; }
    int s() const noexcept { return s_; }
    int r() const noexcept { return r_; }
    BigInt n() const;

    /// p >= 3 and 3 <= r < s, the setting of the structural theorems.
    bool meets_theorem_hypotheses() const noexcept;

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

private:
    Prime p_;
    int s_;
    int r_;
};

/// Exact value numerator / p^denom_exp, kept normalized: p does not divide a
/// non-zero numerator and zero is stored as 0 / p^0.
class PAdicRational {
public:
    PAdicRational(Prime p, BigInt numerator, unsigned denom_exp);

    static PAdicRational zero(Prime p) { return {p, BigInt(0), 0}; }

    const BigInt& numerator() const noexcept { return numerator_; }
    Prime prime() const noexcept { return prime_; }
    unsigned denom_exp() const noexcept { return denom_exp_; }

    BigInt denominator() const;
    Rational to_rational() const;

    friend std::strong_ordering operator<=>(const PAdicRational& a, const PAdicRational& b);
    friend bool operator==(const PAdicRational& a, const PAdicRational& b);

private:
    Prime prime_;
    BigInt numerator_;
    unsigned denom_exp_;
};

bool operator==(const PAdicRational& a, const Rational& b);

/// Strictly increasing non-negative exponents (a_1, ..., a_r).
class ExponentTuple {
public:
    ExponentTuple() = default;
    explicit ExponentTuple(std::vector<int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }

    /// Member of A(s, r): a_1 = 0 and a_r = s-1 with r = size().
    bool is_admissible(int s) const noexcept;

    friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

private:
    std::vector<int> entries_;
};

PAdicRational hp_eval(Prime p, const ExponentTuple& a);

/// (s-1-a_r, ..., s-1-a_1); requires a in A(s, r).
ExponentTuple reverse_complement(const ExponentTuple& a, int s);

/// Energy of the gcd graph on p^s vertices whose divisor set has r elements
/// and h_p value `hp`. Throws validation_error if hp needs a denominator
/// larger than p^(s-1).
BigInt energy_from_hp(Prime p, int s, int r, const PAdicRational& hp);
BigInt energy_from_hp(const ProblemInstance& inst, int r, const PAdicRational& hp);

/// Closed-form min h_p when (r-1) | (s-1); requires p >= 3, r >= 3.
Rational min_hp_closed_form_div(const ProblemInstance& inst);

/// Closed-form min h_p when (r-1) | s and (r-1) does not divide s-1;
/// requires p >= 3, r >= 3.
Rational min_hp_closed_form_divs(const ProblemInstance& inst);

} // namespace icg
