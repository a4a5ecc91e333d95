#pragma once

/// @file balancing.hpp
/// The Lambda operator and its iterates.
///
/// For a bivalent vector whose values m, k satisfy "m never occurs twice in a
/// row", Lambda(v) lists the lengths of the maximal runs of k as separated by
/// the m entries. When both values are isolated the smaller one plays m.
/// Iterating Lambda as long as it is defined gives the Lambda sequence; the
/// number of applications is the balanced degree.

#include "icg/combinatorics.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace icg {

enum class LambdaUndefined {
    Monovalent,     // a single distinct value
    NotBivalent,    // more than two values, or two values differing by >= 2
    NotSeparable,   // both values have adjacent repeats
    EmptyExcluded,  // nothing to measure: the input itself is empty
};

std::string_view to_string(LambdaUndefined reason);

struct LambdaResult {
    std::optional<std::vector<int>> value;
    LambdaUndefined reason = LambdaUndefined::Monovalent;  // meaningful when !value
    int separator = 0;  // m, when defined
    int counted = 0;    // k, when defined
    /// Run lengths of m separated by k, recorded when both values are
    /// isolated and the tie-break chose the smaller value as m.
    std::optional<std::vector<int>> opposite_choice;

    bool defined() const { return value.has_value(); }
};

LambdaResult lambda_op(std::span<const int> v);

struct LambdaSequence {
    std::vector<std::vector<int>> levels;
    LambdaUndefined terminal_reason = LambdaUndefined::Monovalent;

    /// Largest i with Lambda^i defined.
    int degree() const { return static_cast<int>(levels.size()) - 1; }
};

LambdaSequence lambda_sequence(std::span<const int> d);

/// Lambda(d) exists and is bivalent. Throws validation_error when Lambda(d)
/// is undefined.
bool is_bivalent_second_degree(std::span<const int> d);

int balanced_degree(std::span<const int> d);

struct ReinterpretedTuple {
    int s;
    int r;
    ExponentTuple tuple;
};

/// Reads v as the delta vector of a tuple in A(s', r') with r' = |v| + 1 and
/// s' = 1 + sum(v).
ReinterpretedTuple reinterpret_as_admissible(std::span<const int> v);

enum class ConjectureOutcome { Consistent, Counterexample, NotApplicable };

std::string_view to_string(ConjectureOutcome outcome);

struct FramingReport {
    LambdaSequence sequence;
    std::vector<bool> framed;            // per level
    std::vector<int> unframed_levels;
    ConjectureOutcome outcome = ConjectureOutcome::NotApplicable;
    /// Set when a single-entry level was counted as framed.
    bool used_single_entry_convention = false;
};

/// Checks the framing pattern of an energy-maximal delta vector's Lambda
/// sequence: every unframed level Lambda^j must be preceded only by framed
/// levels. No unframed level means not applicable.
FramingReport check_framing_conjecture(std::span<const int> d);

} // namespace icg
