#include "icg/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace icg {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

Factorization trial_division(std::uint64_t n) {
    Factorization out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

class FactorCache {
public:
    const Factorization& get(std::uint64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        Factorization f = trial_division(n);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(n, std::move(f)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, Factorization> table_;  // nodes never move
};

FactorCache& cache() {
    static FactorCache instance;
    return instance;
}

} // namespace

const Factorization& factorize(std::uint64_t n) {
    if (n == 0) throw validation_error("cannot factorize 0");
    return cache().get(n);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

int mobius(std::uint64_t n) {
    const auto& f = factorize(n);
    for (const auto& [p, e] : f)
        if (e > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
    auto d = divisors_of(n);
    d.pop_back();
    return d;
}

std::int64_t ramanujan_sum(std::uint64_t j, std::uint64_t m) {
    if (m == 0) throw validation_error("ramanujan_sum needs m >= 1");
    const std::uint64_t g = std::gcd(j, m);
    const std::uint64_t k = m / g;
    const int mu = mobius(k);
    if (mu == 0) return 0;
    return mu * static_cast<std::int64_t>(euler_phi(m) / euler_phi(k));
}

DivisorSet::DivisorSet(std::uint64_t n, std::vector<std::uint64_t> divisors) : n_(n), divisors_(std::move(divisors)) {
    if (n_ < 2) throw validation_error("n must be at least 2");
    if (divisors_.empty()) throw validation_error("divisor set must be non-empty");
    std::sort(divisors_.begin(), divisors_.end());
    if (std::adjacent_find(divisors_.begin(), divisors_.end()) != divisors_.end())
        throw validation_error("divisor set contains a repeated element");
    for (std::uint64_t d : divisors_) {
        if (d == 0 || n_ % d != 0)
            throw validation_error(std::to_string(d) + " does not divide " + std::to_string(n_));
        if (d == n_) throw validation_error("n itself is not allowed in the divisor set (graph would have loops)");
    }
}

namespace {

/// Eigenvalue shared by every j with gcd(j, n) = e.
std::int64_t class_eigenvalue(const DivisorSet& ds, std::uint64_t e) {
    std::int64_t sum = 0;
    for (std::uint64_t d : ds.divisors()) sum += ramanujan_sum(e, ds.n() / d);
    return sum;
}

BigInt abs_big(std::int64_t x) { return x < 0 ? BigInt(-x) : BigInt(x); }

} // namespace

Spectrum icg_spectrum(const DivisorSet& ds) {
    Spectrum spec;
    spec.n = ds.n();
    for (std::uint64_t e : divisors_of(ds.n())) {
        const std::int64_t lambda = class_eigenvalue(ds, e);
        const std::uint64_t count = euler_phi(ds.n() / e);
        spec.multiplicities[lambda] += count;
        spec.energy += abs_big(lambda) * count;
        if (e == ds.n()) spec.degree = lambda;
    }
    return spec;
}

std::vector<std::int64_t> icg_eigenvalues(const DivisorSet& ds, unsigned jobs) {
    std::vector<std::int64_t> out(ds.n());
    auto fill = [&](std::uint64_t begin, std::uint64_t step) {
        for (std::uint64_t j = begin; j < ds.n(); j += step) {
            std::int64_t sum = 0;
            for (std::uint64_t d : ds.divisors()) sum += ramanujan_sum(j, ds.n() / d);
            out[j] = sum;
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        fill(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(fill, t, jobs);
    }
    return out;
}

BigInt energy_spectral(const DivisorSet& ds) { return icg_spectrum(ds).energy; }

ExtremalEnergies extremal_energies(std::uint64_t n, unsigned max_proper_divisors) {
    if (n < 2) throw validation_error("n must be at least 2");
    const auto proper = proper_divisors(n);
    if (proper.size() > max_proper_divisors)
        throw guard_error(std::to_string(n) + " has " + std::to_string(proper.size()) +
                          " proper divisors; subset enumeration is limited to " +
                          std::to_string(max_proper_divisors));

    // table[i][c] = c(e_c, n / d_i) for each divisor class e_c of Z_n.
    const auto classes = divisors_of(n);
    std::vector<std::uint64_t> weight(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) weight[c] = euler_phi(n / classes[c]);
    std::vector<std::vector<std::int64_t>> table(proper.size(), std::vector<std::int64_t>(classes.size()));
    for (std::size_t i = 0; i < proper.size(); ++i)
        for (std::size_t c = 0; c < classes.size(); ++c) table[i][c] = ramanujan_sum(classes[c], n / proper[i]);

    ExtremalEnergies out;
    out.n = n;
    std::vector<std::int64_t> lambda(classes.size(), 0);
    const std::uint64_t subsets = std::uint64_t{1} << proper.size();
    std::uint64_t previous_gray = 0;
    bool first = true;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t flipped = gray ^ previous_gray;
        const auto bit = static_cast<std::size_t>(std::countr_zero(flipped));
        const std::int64_t sign = (gray & flipped) ? 1 : -1;
        for (std::size_t c = 0; c < classes.size(); ++c) lambda[c] += sign * table[bit][c];
        previous_gray = gray;

        std::uint64_t energy64 = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
            energy64 += static_cast<std::uint64_t>(std::llabs(lambda[c])) * weight[c];
        const BigInt energy = energy64;

        std::vector<std::uint64_t> set;
        for (std::size_t i = 0; i < proper.size(); ++i)
            if (gray >> i & 1) set.push_back(proper[i]);

        if (first || energy < out.min_energy) {
            out.min_energy = energy;
            out.min_sets.clear();
        }
        if (energy == out.min_energy) out.min_sets.push_back(set);
        if (first || energy > out.max_energy) {
            out.max_energy = energy;
            out.max_sets.clear();
        }
        if (energy == out.max_energy) out.max_sets.push_back(std::move(set));
        first = false;
        ++out.subsets_examined;
    }
    std::sort(out.min_sets.begin(), out.min_sets.end());
    std::sort(out.max_sets.begin(), out.max_sets.end());
    return out;
}

ApproximateSpectrumCheck approximate_spectrum_check(const DivisorSet& ds, double tolerance) {
    if (ds.n() > 64) throw guard_error("floating-point adjacency check is limited to n <= 64");
    const auto n = static_cast<Eigen::Index>(ds.n());
    Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
    const auto& in_set = ds.divisors();
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto diff = static_cast<std::uint64_t>(a > b ? a - b : b - a);
            if (std::binary_search(in_set.begin(), in_set.end(), std::gcd(diff, ds.n()))) adjacency(a, b) = 1.0;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency, Eigen::EigenvaluesOnly);
    std::vector<double> approx(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(approx.begin(), approx.end());

    auto exact = icg_eigenvalues(ds);
    std::sort(exact.begin(), exact.end());

    ApproximateSpectrumCheck check;
    check.tolerance = tolerance;
    for (std::size_t i = 0; i < exact.size(); ++i)
        check.max_abs_error = std::max(check.max_abs_error, std::abs(approx[i] - static_cast<double>(exact[i])));
    check.pass = check.max_abs_error <= tolerance;
    return check;
}

} // namespace icg
