#include "icg/search.hpp"

#include <algorithm>
#include <set>

namespace icg {

TheoremVerification verify_theorem(const ProblemInstance& inst, unsigned jobs) {
    if (!inst.meets_theorem_hypotheses())
        throw validation_error("theorem verification requires p >= 3 and 3 <= r < s");

    PredictedMinimizers predicted = predicted_minimizers(inst);
    SearchReport search = brute_force_min(inst, StructureFilter::All, jobs);
    TheoremVerification out{predicted.which, false, std::move(search), std::move(predicted), std::nullopt, {}};
    const auto& found = out.search.minimizers;

    if (out.predicted.is_explicit()) {
        std::set<DeltaVector> expected;
        for (const auto& v : out.predicted.vectors) {
            expected.insert(v);
            expected.insert(v.reversed());
        }
        const std::set<DeltaVector> actual(found.begin(), found.end());
        for (const auto& v : expected)
            if (!actual.contains(v)) out.diffs.push_back("predicted minimizer " + format_vector(v.entries()) + " not found");
        for (const auto& v : actual)
            if (!expected.contains(v)) out.diffs.push_back("unpredicted minimizer " + format_vector(v.entries()));
    } else {
        for (const auto& v : found)
            for (const auto& msg : out.predicted.predicate->violations(v))
                out.diffs.push_back(format_vector(v.entries()) + ": " + msg);
    }

    if (out.which == TheoremCase::EqualSpacing) out.closed_form = min_hp_closed_form_div(inst);
    if (out.which == TheoremCase::OneShortGap) out.closed_form = min_hp_closed_form_divs(inst);
    if (out.closed_form && !(out.search.min_value == *out.closed_form))
        out.diffs.push_back("closed form " + to_decimal(*out.closed_form, 12) + " differs from search minimum " +
                            to_decimal(out.search.min_value.to_rational(), 12));

    out.pass = out.diffs.empty();
    return out;
}

} // namespace icg
