#pragma once

/// @file spectral.hpp
/// Exact spectra of integral circulant graphs ICG(n, D): vertices Z_n, with
/// a ~ b iff gcd(a - b, n) lies in D. The eigenvalues are
///
///     lambda_j = sum_{d in D} c(j, n/d)
///
/// where c is the Ramanujan sum, so everything here is integer arithmetic.
/// This module is deliberately independent of the h_p machinery and serves
/// as its oracle.

#include "icg/arith.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace icg {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Prime factorization as (prime, exponent) pairs, ascending. Memoized; safe
/// to call concurrently.
const std::vector<std::pair<std::uint64_t, int>>& factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// Divisors d of n with d < n.
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

/// c(j, m) = mu(m/g) phi(m) / phi(m/g), g = gcd(j, m); gcd(0, m) = m.
std::int64_t ramanujan_sum(std::uint64_t j, std::uint64_t m);

/// A non-empty set of proper divisors of n >= 2.
class DivisorSet {
public:
    DivisorSet(std::uint64_t n, std::vector<std::uint64_t> divisors);

    std::uint64_t n() const noexcept { return n_; }
    const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }  // ascending

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> divisors_;
};

struct Spectrum {
    std::uint64_t n = 0;
    std::map<std::int64_t, std::uint64_t> multiplicities;  // eigenvalue -> count, summing to n
    std::int64_t degree = 0;                                // lambda_0
    BigInt energy;
};

/// Uses that lambda_j depends on j only through gcd(j, n).
Spectrum icg_spectrum(const DivisorSet& ds);

/// lambda_0, ..., lambda_{n-1} evaluated one index at a time, split across
/// `jobs` threads.
std::vector<std::int64_t> icg_eigenvalues(const DivisorSet& ds, unsigned jobs = 1);

BigInt energy_spectral(const DivisorSet& ds);

struct ExtremalEnergies {
    std::uint64_t n = 0;
    BigInt min_energy;
    std::vector<std::vector<std::uint64_t>> min_sets;  // lexicographically sorted
    BigInt max_energy;
    std::vector<std::vector<std::uint64_t>> max_sets;
    std::uint64_t subsets_examined = 0;
};

/// Extremal energies over every non-empty subset of the proper divisors of
/// n. Refuses (guard_error) when n has more than `max_proper_divisors`
/// proper divisors.
ExtremalEnergies extremal_energies(std::uint64_t n, unsigned max_proper_divisors = 20);

struct ApproximateSpectrumCheck {
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Approximate second opinion: diagonalizes the dense adjacency matrix in
/// floating point and compares sorted eigenvalues with the exact ones.
/// Limited to n <= 64 (guard_error beyond).
ApproximateSpectrumCheck approximate_spectrum_check(const DivisorSet& ds, double tolerance = 1e-6);

} // namespace icg
