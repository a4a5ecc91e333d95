#include "icg/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace icg {

namespace {

__extension__ typedef unsigned __int128 u128;

BigInt to_big(u128 x) {
    BigInt hi = static_cast<std::uint64_t>(x >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(x);
}

BigInt to_big(const BigInt& x) { return x; }

/// Keeps the best `limit` distinct values with every vector attaining them.
template <class Int>
class TopValues {
public:
    TopValues(std::size_t limit, Objective objective) : limit_(limit), objective_(objective) {}

    void offer(const Int& value, std::span<const int> d) {
        if (full_ && worse(value, threshold_)) return;
        auto it = entries_.find(value);
        if (it != entries_.end()) {
            it->second.emplace_back(d.begin(), d.end());
            return;
        }
        entries_[value].emplace_back(d.begin(), d.end());
        if (entries_.size() > limit_) entries_.erase(worst_iterator());
        full_ = entries_.size() == limit_;
        if (full_) threshold_ = worst_iterator()->first;
    }

    void merge(TopValues&& other) {
        for (auto& [value, vectors] : other.entries_) {
            auto& target = entries_[value];
            target.insert(target.end(), std::make_move_iterator(vectors.begin()),
                          std::make_move_iterator(vectors.end()));
        }
        while (entries_.size() > limit_) entries_.erase(worst_iterator());
        full_ = entries_.size() == limit_;
        if (full_) threshold_ = worst_iterator()->first;
    }

    // Best first.
    std::vector<std::pair<Int, std::vector<std::vector<int>>>> take() {
        std::vector<std::pair<Int, std::vector<std::vector<int>>>> out(
            std::make_move_iterator(entries_.begin()), std::make_move_iterator(entries_.end()));
        if (objective_ == Objective::Maximize) std::reverse(out.begin(), out.end());
        for (auto& entry : out) std::sort(entry.second.begin(), entry.second.end());
        return out;
    }

private:
    bool worse(const Int& a, const Int& b) const {
        return objective_ == Objective::Minimize ? a > b : a < b;
    }

    typename std::map<Int, std::vector<std::vector<int>>>::iterator worst_iterator() {
        return objective_ == Objective::Minimize ? std::prev(entries_.end()) : entries_.begin();
    }

    std::size_t limit_;
    Objective objective_;
    std::map<Int, std::vector<std::vector<int>>> entries_;
    bool full_ = false;
    Int threshold_{};
};

/// Incrementally maintains, for the points a_0 = 0 < a_1 < ... fixed so far,
///   prefix[k] = sum_{j <= k} p^(a_j)
///   scaled[k] = p^S * sum_{j < i <= k} p^-(a_i - a_j)
/// with S = s - 1. Adding a point x contributes prefix * p^(S - x).
template <class Int>
class ScanVisitor {
public:
    ScanVisitor(const std::vector<Int>& powers, int top_exponent, int length, const ScanOptions& options)
        : powers_(powers), top_(top_exponent), points_(static_cast<std::size_t>(length) + 1, 0),
          prefix_(static_cast<std::size_t>(length) + 1), scaled_(static_cast<std::size_t>(length) + 1),
          predicate_(options.predicate), best_(options.top_k, options.objective) {
        prefix_[0] = powers_[0];
        scaled_[0] = 0;
    }

    void step(int k, int x) {
        const std::size_t i = static_cast<std::size_t>(k);
        const int point = points_[i] + x;
        points_[i + 1] = point;
        scaled_[i + 1] = scaled_[i] + prefix_[i] * powers_[static_cast<std::size_t>(top_ - point)];
        prefix_[i + 1] = prefix_[i] + powers_[static_cast<std::size_t>(point)];
    }

    void leaf(std::span<const int> d) {
        if (predicate_ && !predicate_(d)) return;
        ++count_;
        best_.offer(scaled_.back(), d);
    }

    std::uint64_t count() const { return count_; }
    TopValues<Int>& best() { return best_; }

private:
    const std::vector<Int>& powers_;
    int top_;
    std::vector<int> points_;
    std::vector<Int> prefix_;
    std::vector<Int> scaled_;
    const std::function<bool(std::span<const int>)>& predicate_;
    std::uint64_t count_ = 0;
    TopValues<Int> best_;
};

std::vector<std::vector<int>> work_units(const WalkPlan& plan, unsigned jobs) {
    if (jobs <= 1 || plan.length <= 1) return {std::vector<int>{}};
    std::vector<std::vector<int>> units;
    for (int depth = 1; depth < plan.length; ++depth) {
        units = split_prefixes(plan, depth);
        if (units.size() >= 8u * jobs) break;
    }
    return units;
}

template <class Int>
ScanResult run_scan(const ProblemInstance& inst, const ScanOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const WalkPlan plan = make_walk_plan(inst, options.filter);
    const int top_exponent = inst.s() - 1;

    std::vector<Int> powers(static_cast<std::size_t>(top_exponent) + 1);
    powers[0] = 1;
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * static_cast<Int>(inst.p().value());

    const auto units = work_units(plan, options.jobs);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(units.size())));

    TopValues<Int> merged(options.top_k, options.objective);
    std::uint64_t total = 0;
    std::mutex merge_mutex;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        ScanVisitor<Int> visitor(powers, top_exponent, plan.length, options);
        for (std::size_t i = next++; i < units.size(); i = next++) walk_deltas(plan, units[i], visitor);
        std::lock_guard lock(merge_mutex);
        total += visitor.count();
        merged.merge(std::move(visitor.best()));
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    ScanResult result;
    result.candidates_examined = total;
    result.fixed_width = std::is_same_v<Int, u128>;
    for (auto& [value, vectors] : merged.take()) {
        RankedValue rv{PAdicRational(inst.p(), to_big(value), static_cast<unsigned>(top_exponent)), {}};
        for (auto& v : vectors) rv.vectors.emplace_back(std::move(v));
        result.ranked.push_back(std::move(rv));
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return result;
}

} // namespace

bool fits_fixed_width(const ProblemInstance& inst) {
    // scaled h <= C(r,2) p^(s-1); transient prefix * p^(S-x) <= 2 p^(s-1).
    const BigInt top = ipow(BigInt(inst.p().value()), static_cast<unsigned>(inst.s() - 1));
    const BigInt pairs = BigInt(inst.r()) * (inst.r() - 1) / 2;
    const BigInt bound = (pairs + 2) * top * 2;
    return bound < (BigInt(1) << 127);
}

ScanResult rank_deltas(const ProblemInstance& inst, const ScanOptions& options) {
    if (options.top_k == 0) throw validation_error("top_k must be at least 1");
    if (!options.force_big_integers && fits_fixed_width(inst)) return run_scan<u128>(inst, options);
    return run_scan<BigInt>(inst, options);
}

namespace {

struct FilterSoundness {
    bool sound;
    std::vector<std::string> chain;
};

FilterSoundness filter_soundness(const ProblemInstance& inst, StructureFilter filter) {
    FilterSoundness fs{true, {}};
    if (filter == StructureFilter::All) {
        fs.chain.push_back("exhaustive over D(s,r)");
        return fs;
    }
    const int s = inst.s();
    const int r = inst.r();
    fs.chain.push_back("range reduction: every minimizer has a bivalent delta vector");
    if (filter == StructureFilter::Biv) return fs;

    const bool equal_spacing = (s - 1) % (r - 1) == 0;
    const bool one_short_gap = !equal_spacing && s % (r - 1) == 0;
    if (equal_spacing) {
        fs.chain.push_back("(r-1) | (s-1): Biv(s,r) is the single equidistant vector, which is [q]-framed");
    } else if (one_short_gap) {
        fs.sound = false;
        fs.chain.push_back("(r-1) | s: minimizers are not [q]-framed, so this filter is NOT sound here");
    } else {
        fs.chain.push_back("framing: for (r-1) not dividing s-1 or s, minimizers are [q]-framed (p >= 3)");
    }
    if (filter == StructureFilter::SepStar && !equal_spacing) {
        fs.chain.push_back(
            "separability: minimizers have no neighbouring [q] when 2g >= r-1 and no neighbouring [q+1] "
            "when 2g <= r-2");
    }
    return fs;
}

} // namespace

SearchReport brute_force_min(const ProblemInstance& inst, StructureFilter filter, unsigned jobs, std::size_t top_k) {
    if (filter != StructureFilter::All && inst.p().value() < 3)
        throw guard_error("structure filters are justified only for p >= 3; use filter 'all' for p = 2");

    ScanOptions options;
    options.filter = filter;
    options.top_k = top_k;
    options.jobs = jobs;
    ScanResult scan = rank_deltas(inst, options);
    if (scan.ranked.empty())
        throw validation_error("filtered set '" + std::string(to_string(filter)) + "' is empty for s = " +
                               std::to_string(inst.s()) + ", r = " + std::to_string(inst.r()));

    FilterSoundness fs = filter_soundness(inst, filter);
    SearchReport report{inst,
                        filter,
                        scan.ranked.front().value,
                        scan.ranked.front().vectors,
                        std::move(scan.ranked),
                        scan.candidates_examined,
                        scan.elapsed,
                        0,
                        fs.sound,
                        std::move(fs.chain),
                        scan.fixed_width};
    report.max_energy = energy_from_hp(inst, inst.r(), report.min_value);
    return report;
}

} // namespace icg
