#pragma once

/// @file combinatorics.hpp
/// Delta vectors (consecutive exponent differences), their enumeration, and
/// the structural predicates used to narrow the search for minimizers:
/// bivalence, [q]-framing, separability and the alternating block
/// decomposition of a framed bivalent vector.

#include "icg/core_math.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icg {

/// (d_1, ..., d_{r-1}), every entry >= 1. The vector fixes its own instance
/// shape: s = 1 + sum(d), r = size + 1.
class DeltaVector {
public:
    DeltaVector() = default;
    explicit DeltaVector(std::vector<int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    const std::vector<int>& values() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    int s() const noexcept { return sum_ + 1; }
    int r() const noexcept { return static_cast<int>(entries_.size()) + 1; }

    DeltaVector reversed() const;

    friend bool operator==(const DeltaVector& a, const DeltaVector& b) { return a.entries_ == b.entries_; }
    friend auto operator<=>(const DeltaVector& a, const DeltaVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
    int sum_ = 0;
};

std::string format_vector(std::span<const int> v);

DeltaVector delta(const ExponentTuple& a, int s);
ExponentTuple delta_inv(const DeltaVector& d);

inline PAdicRational hp_eval(Prime p, const DeltaVector& d) { return hp_eval(p, delta_inv(d)); }

enum class StructureFilter { All, Biv, BivStar, SepStar };

std::string_view to_string(StructureFilter f);
StructureFilter parse_filter(std::string_view text);

enum class TheoremCase {
    EqualSpacing,     // (r-1) | (s-1)
    OneShortGap,      // (r-1) | s
    RareFloorPeriodic,   // 2g >= r-1, (r-g-2) | g
    RareFloorBlocks,     // 2g >= r-1, otherwise
    RareCeilPeriodic,    // 2g <= r-2, (g+1) | (r-g-1)
    RareCeilBlocks,      // 2g <= r-2, otherwise
};

std::string_view to_string(TheoremCase c);

struct StructureParams {
    Rational q;
    int floor_q = 0;  // [q]
    int ceil_q = 0;   // [q+1] = [q] + 1
    int g = 0;        // least non-negative residue of s-1 mod r-1
    Rational q1;      // (r-g-1) / (g+1)
    std::optional<Rational> q2;  // g / (r-g-2), when r-g-2 > 0
    int e = 0;        // g mod (r-g-2); non-zero exactly in RareFloorBlocks
    int f = 0;        // (r-g-1) mod (g+1); non-zero exactly in RareCeilBlocks
    int w_expected = 0;  // number of [q+1]-blocks of a minimizer
    bool q_integral = false;
    bool floor_isolated = false;  // 2g >= r-1: no two adjacent [q] in Sep*
    TheoremCase theorem_case = TheoremCase::EqualSpacing;
};

/// Requires r >= 3.
StructureParams structure_params(const ProblemInstance& inst);

int range_of(std::span<const int> v);
bool is_bivalent(std::span<const int> v);
bool is_framed(std::span<const int> v, std::optional<int> x = std::nullopt);

/// Requires v bivalent with two distinct values; throws validation_error
/// otherwise.
bool is_separable(std::span<const int> v);

struct Run {
    int value;
    int length;
    friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> run_length(std::span<const int> v);

/// Alternating [q]/[q+1] block structure of a vector in Biv*(s,r).
struct BlockDecomposition {
    std::vector<Run> runs;        // t_1 .. t_{2w+1}, starting and ending with [q]
    std::vector<int> prefix_sums; // T_1 .. T_{2w+1}
    int w = 0;
    int eta_max = 0;
    int eta_min = 0;
    std::optional<int> theta_max;  // absent when w = 0
    std::optional<int> theta_min;
    Rational q1;                   // average [q]-block length, (r-g-1)/(w+1)
    std::optional<Rational> q2;    // average [q+1]-block length, g/w
    int eta() const { return eta_max - eta_min; }
    std::optional<int> theta() const;
};

/// Throws validation_error if d is not in Biv*(s, r).
BlockDecomposition block_decomposition(const DeltaVector& d);

bool membership(const DeltaVector& d, StructureFilter set);

/// Minimizer shape promised for blocks cases: the rare value occurs
/// isolated, and the runs of the other value come in two adjacent lengths.
struct BlockPredicate {
    int isolated_value = 0;
    int block_value = 0;
    int isolated_count = 0;
    int end_value = 0;       // d_1 = d_{r-1} = end_value
    int short_length = 0;
    int long_count = 0;      // blocks of length short_length + 1
    int short_count = 0;

    /// Empty when d satisfies every property; otherwise one message per
    /// violated property.
    std::vector<std::string> violations(const DeltaVector& d) const;
};

struct PredictedMinimizers {
    TheoremCase which;
    std::vector<DeltaVector> vectors;         // explicit cases
    std::optional<BlockPredicate> predicate;  // blocks cases
    bool is_explicit() const { return !predicate.has_value(); }
};

/// Requires p >= 3 and 3 <= r < s.
PredictedMinimizers predicted_minimizers(const ProblemInstance& inst);

/// Per-position value bounds and adjacency rule used to walk a filtered
/// subset of D(s, r) in lexicographic order.
struct WalkPlan {
    int length = 0;
    int total = 0;
    std::vector<int> lo;
    std::vector<int> hi;
    std::vector<int> suffix_lo;  // sum of lo[k..length-1], size length+1
    std::vector<int> suffix_hi;
    int no_repeat = 0;           // value that may not occur twice in a row; 0 = none
};

WalkPlan make_walk_plan(const ProblemInstance& inst, StructureFilter filter);

namespace detail {

template <class Visitor>
class DeltaWalker {
public:
    DeltaWalker(const WalkPlan& plan, Visitor& visitor, int stop_depth)
        : plan_(plan), visitor_(visitor), stop_(stop_depth), buf_(static_cast<std::size_t>(plan.length)) {}

    void run(std::span<const int> prefix) {
        int remaining = plan_.total;
        const int k0 = static_cast<int>(prefix.size());
        if (k0 > plan_.length) return;
        for (int k = 0; k < k0; ++k) {
            const int x = prefix[static_cast<std::size_t>(k)];
            if (x < plan_.lo[k] || x > plan_.hi[k]) return;
            if (repeats(k, x)) return;
            remaining -= x;
            buf_[static_cast<std::size_t>(k)] = x;
        }
        if (remaining < plan_.suffix_lo[k0] || remaining > plan_.suffix_hi[k0]) return;
        for (int k = 0; k < k0; ++k) visitor_.step(k, buf_[static_cast<std::size_t>(k)]);
        if (k0 == plan_.length) {
            visitor_.leaf(std::span<const int>(buf_));
            return;
        }
        recurse(k0, remaining);
    }

private:
    bool repeats(int k, int x) const {
        return plan_.no_repeat != 0 && x == plan_.no_repeat && k > 0 &&
               buf_[static_cast<std::size_t>(k - 1)] == x;
    }

    void recurse(int k, int remaining) {
        if (k == stop_) {
            visitor_.leaf(std::span<const int>(buf_.data(), static_cast<std::size_t>(k)));
            return;
        }
        if (k == plan_.length - 1) {
            if (remaining < plan_.lo[k] || remaining > plan_.hi[k] || repeats(k, remaining)) return;
            buf_[static_cast<std::size_t>(k)] = remaining;
            visitor_.step(k, remaining);
            visitor_.leaf(std::span<const int>(buf_));
            return;
        }
        const int lo = std::max(plan_.lo[k], remaining - plan_.suffix_hi[k + 1]);
        const int hi = std::min(plan_.hi[k], remaining - plan_.suffix_lo[k + 1]);
        for (int x = lo; x <= hi; ++x) {
            if (repeats(k, x)) continue;
            buf_[static_cast<std::size_t>(k)] = x;
            visitor_.step(k, x);
            recurse(k + 1, remaining - x);
        }
    }

    const WalkPlan& plan_;
    Visitor& visitor_;
    int stop_;
    std::vector<int> buf_;
};

} // namespace detail

/// Walks every member of the plan's set that starts with `prefix`, in
/// lexicographic order. The visitor receives step(position, value) each time
/// a position is (re)assigned and leaf(span) for every complete vector.
template <class Visitor>
void walk_deltas(const WalkPlan& plan, std::span<const int> prefix, Visitor& visitor) {
    detail::DeltaWalker<Visitor> walker(plan, visitor, -1);
    walker.run(prefix);
}

/// Distinct feasible prefixes of the given depth (depth <= length), in
/// lexicographic order. Each one heads a disjoint sub-stream.
std::vector<std::vector<int>> split_prefixes(const WalkPlan& plan, int depth);

void for_each_delta(const ProblemInstance& inst, StructureFilter filter,
                    const std::function<void(std::span<const int>)>& fn);

std::vector<DeltaVector> enumerate_delta(const ProblemInstance& inst, StructureFilter filter);

std::uint64_t count_delta(const ProblemInstance& inst, StructureFilter filter);

BigInt binomial(unsigned n, unsigned k);

} // namespace icg
