#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace icg::oracle {

namespace {

Rational power(std::uint64_t p, int e) {
    Rational x = 1;
    for (int i = 0; i < e; ++i) x *= p;
    return x;
}

} // namespace

Rational hp(std::uint64_t p, const std::vector<int>& a) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < i; ++k) sum += Rational(1) / power(p, a[i] - a[k]);
    return sum;
}

Rational energy(std::uint64_t p, int s, int r, const Rational& h) {
    return 2 * Rational(p - 1) * power(p, s - 1) * (Rational(r) - Rational(p - 1) * h);
}

std::vector<std::vector<int>> admissible_tuples(int s, int r) {
    std::vector<std::vector<int>> out;
    const int interior = s - 2;
    const int pick = r - 2;
    if (r == 1 || pick > interior || pick < 0) {
        if (r == 2 && s >= 2) out.push_back({0, s - 1});
        return out;
    }
    std::vector<bool> chosen(static_cast<std::size_t>(interior), false);
    std::fill(chosen.begin(), chosen.begin() + pick, true);
    do {
        std::vector<int> a{0};
        for (int i = 0; i < interior; ++i)
            if (chosen[static_cast<std::size_t>(i)]) a.push_back(i + 1);
        a.push_back(s - 1);
        out.push_back(std::move(a));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

std::vector<std::vector<int>> compositions(int s, int r) {
    std::vector<std::vector<int>> out;
    for (const auto& a : admissible_tuples(s, r)) {
        std::vector<int> d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] - a[i - 1]);
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> prefix_sums_from_zero(const std::vector<int>& d) {
    std::vector<int> a{0};
    for (int x : d) a.push_back(a.back() + x);
    return a;
}

Minimum minimum(std::uint64_t p, int s, int r) {
    Minimum m;
    bool first = true;
    for (const auto& d : compositions(s, r)) {
        const Rational v = hp(p, prefix_sums_from_zero(d));
        if (first || v < m.value) {
            m.value = v;
            m.minimizers.clear();
            first = false;
        }
        if (v == m.value) m.minimizers.push_back(d);
    }
    return m;
}

long long ramanujan_by_roots(std::uint64_t j, std::uint64_t m) {
    double re = 0.0;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((j % m) * k % m) / static_cast<double>(m);
        re += std::cos(angle);
    }
    const double rounded = std::round(re);
    if (std::abs(rounded - re) > 1e-6) throw std::runtime_error("root-of-unity sum is not near an integer");
    return static_cast<long long>(rounded);
}

std::vector<long long> circulant_eigenvalues(std::uint64_t n, const std::vector<std::uint64_t>& divisors) {
    std::vector<std::uint64_t> connection;
    for (std::uint64_t x = 1; x < n; ++x)
        if (std::find(divisors.begin(), divisors.end(), std::gcd(x, n)) != divisors.end()) connection.push_back(x);
    std::vector<long long> out;
    for (std::uint64_t j = 0; j < n; ++j) {
        std::complex<double> sum = 0.0;
        for (std::uint64_t x : connection)
            sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * x % n) / static_cast<double>(n));
        const double rounded = std::round(sum.real());
        if (std::abs(sum.imag()) > 1e-6 || std::abs(sum.real() - rounded) > 1e-6)
            throw std::runtime_error("circulant eigenvalue is not near an integer");
        out.push_back(static_cast<long long>(rounded));
    }
    return out;
}

bool lambda_step(const std::vector<int>& v, std::vector<int>& out) {
    std::map<int, int> longest_run;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        longest_run[v[i]] = std::max(longest_run[v[i]], static_cast<int>(j - i));
        i = j;
    }
    if (longest_run.size() != 2) return false;
    const int lo = longest_run.begin()->first;
    const int hi = longest_run.rbegin()->first;
    if (hi - lo != 1) return false;
    int m = 0;
    if (longest_run[lo] == 1)
        m = lo;
    else if (longest_run[hi] == 1)
        m = hi;
    else
        return false;
    out.clear();
    int run = 0;
    for (int x : v) {
        if (x == m) {
            if (run) out.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    if (run) out.push_back(run);
    return true;
}

std::vector<int> random_admissible(std::mt19937_64& rng, int s, int r) {
    std::vector<int> interior(static_cast<std::size_t>(s - 2));
    std::iota(interior.begin(), interior.end(), 1);
    std::shuffle(interior.begin(), interior.end(), rng);
    std::vector<int> a{0};
    a.insert(a.end(), interior.begin(), interior.begin() + (r - 2));
    a.push_back(s - 1);
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace icg::oracle
