#pragma once

/// @file search.hpp
/// Exact minimization of h_p over A(s, r), the descent moves taken from the
/// structural arguments, and theorem verification.
///
/// The scan walks delta vectors in lexicographic order and updates h_p
/// incrementally as a scaled integer (denominator p^(s-1)). When the scaled
/// values provably fit, the walk runs on unsigned 128-bit integers;
/// otherwise it falls back to arbitrary precision.

#include "icg/balancing.hpp"
#include "icg/combinatorics.hpp"
#include "icg/core_math.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace icg {

enum class Objective { Minimize, Maximize };

struct RankedValue {
    PAdicRational value;
    std::vector<DeltaVector> vectors;  // lexicographically sorted
};

struct ScanOptions {
    StructureFilter filter = StructureFilter::All;
    Objective objective = Objective::Minimize;
    std::size_t top_k = 1;  // distinct values kept
    unsigned jobs = 1;
    /// Further restriction applied to every vector of the filtered set.
    std::function<bool(std::span<const int>)> predicate;
    /// Forces the arbitrary-precision path even when 128 bits suffice.
    bool force_big_integers = false;
};

struct ScanResult {
    std::vector<RankedValue> ranked;  // best first
    std::uint64_t candidates_examined = 0;
    std::chrono::nanoseconds elapsed{0};
    bool fixed_width = false;
};

/// Scores every member of the filtered set. No soundness gate: this is the
/// raw enumeration used by brute_force_min and by structural audits.
ScanResult rank_deltas(const ProblemInstance& inst, const ScanOptions& options);

/// Whether the scaled h_p values of the instance fit the 128-bit fast path.
bool fits_fixed_width(const ProblemInstance& inst);

struct SearchReport {
    ProblemInstance instance;
    StructureFilter filter;
    PAdicRational min_value;
    std::vector<DeltaVector> minimizers;
    std::vector<RankedValue> top;  // top_k best distinct values; top[0] is the minimum
    std::uint64_t candidates_examined = 0;
    std::chrono::nanoseconds elapsed{0};
    BigInt max_energy;
    bool sound = true;
    std::vector<std::string> justification;
    bool fixed_width = false;
};

/// Global minimum of h_p over the filtered subset of D(s, r), with every
/// minimizer. Filters other than All are refused for p = 2 (guard_error);
/// an empty filtered set throws validation_error.
SearchReport brute_force_min(const ProblemInstance& inst, StructureFilter filter = StructureFilter::All,
                             unsigned jobs = 1, std::size_t top_k = 1);

// Descent moves. Indices are 0-based positions in the delta vector of `a`;
// `a` must be admissible for s = a.back() + 1. Precondition violations throw
// validation_error.

/// Lengthens a shortest gap (index u) and shortens a longest gap (index v),
/// u < v, with every gap strictly between them of intermediate length.
ExponentTuple balance_move(const ExponentTuple& a, int u, int v);

/// For a bivalent vector that starts with a run of l >= 1 long gaps followed
/// by a short one, l <= r-3: moves that short gap to the front.
ExponentTuple frame_move(const ExponentTuple& a);

/// Rotates the alternating stretch between a pair of adjacent short gaps at
/// (u, u+1) and a pair of adjacent long gaps at (v, v+1), u < v, one step to
/// the left. Requires a bivalent vector framed by its smaller value.
ExponentTuple swap_move(const ExponentTuple& a, int u, int v);

/// Moves one entry between two blocks of the repeated value of a separable
/// framed bivalent vector whose lengths differ by at least two. Blocks are
/// numbered left to right from 0; block_u < block_v. Either the blocks are
/// neighbours, or every block between them is one longer than the shorter
/// and the longer exceeds it by exactly two.
ExponentTuple shift_block_move(const ExponentTuple& a, int block_u, int block_v);

enum class MoveKind { Balance, Frame, Swap, ShiftBlock };

std::string_view to_string(MoveKind kind);

struct DescentStep {
    MoveKind kind;
    bool mirrored;  // applied to the reversed vector
    int first;
    int second;
    ExponentTuple result;
    PAdicRational value;
};

struct DescentResult {
    ExponentTuple tuple;
    PAdicRational value;
    std::vector<DescentStep> steps;
};

/// Applies balance, frame, swap and block-shift moves (in that priority,
/// leftmost configuration first) until none applies. Every step strictly
/// decreases h_p.
DescentResult local_descent(Prime p, const ExponentTuple& a);

struct TheoremVerification {
    TheoremCase which;
    bool pass = false;
    SearchReport search;
    PredictedMinimizers predicted;
    std::optional<Rational> closed_form;
    std::vector<std::string> diffs;
};

/// Compares the exhaustive minimizer set against the applicable theorem
/// case. Requires p >= 3 and 3 <= r < s.
TheoremVerification verify_theorem(const ProblemInstance& inst, unsigned jobs = 1);

} // namespace icg
