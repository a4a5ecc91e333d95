#include "icg/balancing.hpp"

#include <algorithm>

namespace icg {

std::string_view to_string(LambdaUndefined reason) {
    switch (reason) {
    case LambdaUndefined::Monovalent: return "monovalent";
    case LambdaUndefined::NotBivalent: return "not_bivalent";
    case LambdaUndefined::NotSeparable: return "not_separable";
    case LambdaUndefined::EmptyExcluded: return "empty_excluded";
    }
    return "?";
}

std::string_view to_string(ConjectureOutcome outcome) {
    switch (outcome) {
    case ConjectureOutcome::Consistent: return "conjecture_consistent";
    case ConjectureOutcome::Counterexample: return "counterexample";
    case ConjectureOutcome::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

bool adjacent_repeat(std::span<const int> v, int value) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == value && v[i + 1] == value) return true;
    return false;
}

std::vector<int> runs_of(std::span<const int> v, int counted) {
    std::vector<int> out;
    int current = 0;
    for (int x : v) {
        if (x == counted) {
            ++current;
        } else if (current > 0) {
            out.push_back(current);
            current = 0;
        }
    }
    if (current > 0) out.push_back(current);
    return out;
}

} // namespace

LambdaResult lambda_op(std::span<const int> v) {
    LambdaResult result;
    if (v.empty()) {
        result.reason = LambdaUndefined::EmptyExcluded;
        return result;
    }
    const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    if (lo == hi) {
        result.reason = LambdaUndefined::Monovalent;
        return result;
    }
    if (hi - lo >= 2) {
        result.reason = LambdaUndefined::NotBivalent;
        return result;
    }
    const bool lo_isolated = !adjacent_repeat(v, lo);
    const bool hi_isolated = !adjacent_repeat(v, hi);
    if (!lo_isolated && !hi_isolated) {
        result.reason = LambdaUndefined::NotSeparable;
        return result;
    }
    result.separator = lo_isolated ? lo : hi;
    result.counted = lo_isolated ? hi : lo;
    result.value = runs_of(v, result.counted);
    if (lo_isolated && hi_isolated) result.opposite_choice = runs_of(v, lo);
    return result;
}

LambdaSequence lambda_sequence(std::span<const int> d) {
    LambdaSequence seq;
    seq.levels.emplace_back(d.begin(), d.end());
    for (;;) {
        LambdaResult next = lambda_op(seq.levels.back());
        if (!next.defined()) {
            seq.terminal_reason = next.reason;
            return seq;
        }
        seq.levels.push_back(std::move(*next.value));
    }
}

bool is_bivalent_second_degree(std::span<const int> d) {
    const LambdaResult next = lambda_op(d);
    if (!next.defined())
        throw validation_error("second-degree bivalence needs Lambda(d) defined; it is " +
                               std::string(to_string(next.reason)));
    return is_bivalent(*next.value);
}

int balanced_degree(std::span<const int> d) { return lambda_sequence(d).degree(); }

ReinterpretedTuple reinterpret_as_admissible(std::span<const int> v) {
    DeltaVector d(std::vector<int>(v.begin(), v.end()));
    return {d.s(), d.r(), delta_inv(d)};
}

FramingReport check_framing_conjecture(std::span<const int> d) {
    FramingReport report;
    report.sequence = lambda_sequence(d);
    for (std::size_t i = 0; i < report.sequence.levels.size(); ++i) {
        const auto& level = report.sequence.levels[i];
        if (level.size() == 1) report.used_single_entry_convention = true;
        const bool framed = is_framed(level);
        report.framed.push_back(framed);
        if (!framed) report.unframed_levels.push_back(static_cast<int>(i));
    }
    if (report.unframed_levels.empty())
        report.outcome = ConjectureOutcome::NotApplicable;
    else if (report.unframed_levels.size() == 1)
        report.outcome = ConjectureOutcome::Consistent;
    else
        report.outcome = ConjectureOutcome::Counterexample;
    return report;
}

} // namespace icg
