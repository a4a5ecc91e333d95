#include "icg/combinatorics.hpp"

#include <numeric>
#include <sstream>

namespace icg {

DeltaVector::DeltaVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw validation_error("delta vector must have at least one entry");
    for (int x : entries_) {
        if (x < 1) throw validation_error("delta vector entries must be positive");
        sum_ += x;
    }
}

DeltaVector DeltaVector::reversed() const {
    return DeltaVector(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

std::string format_vector(std::span<const int> v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

DeltaVector delta(const ExponentTuple& a, int s) {
    if (a.size() < 2 || !a.is_admissible(s))
        throw validation_error("delta requires an admissible tuple with a_1 = 0 and a_r = s-1");
    std::vector<int> d(a.size() - 1);
    for (std::size_t j = 0; j + 1 < a.size(); ++j) d[j] = a[j + 1] - a[j];
    return DeltaVector(std::move(d));
}

ExponentTuple delta_inv(const DeltaVector& d) {
    std::vector<int> a(d.size() + 1, 0);
    std::partial_sum(d.values().begin(), d.values().end(), a.begin() + 1);
    return ExponentTuple(std::move(a));
}

std::string_view to_string(StructureFilter f) {
    switch (f) {
    case StructureFilter::All: return "all";
    case StructureFilter::Biv: return "biv";
    case StructureFilter::BivStar: return "bivstar";
    case StructureFilter::SepStar: return "sepstar";
    }
    return "?";
}

StructureFilter parse_filter(std::string_view text) {
    if (text == "all") return StructureFilter::All;
    if (text == "biv") return StructureFilter::Biv;
    if (text == "bivstar") return StructureFilter::BivStar;
    if (text == "sepstar") return StructureFilter::SepStar;
    throw validation_error("unknown filter '" + std::string(text) + "' (expected all|biv|bivstar|sepstar)");
}

std::string_view to_string(TheoremCase c) {
    switch (c) {
    case TheoremCase::EqualSpacing: return "equal_spacing";
    case TheoremCase::OneShortGap: return "one_short_gap";
    case TheoremCase::RareFloorPeriodic: return "rare_floor_periodic";
    case TheoremCase::RareFloorBlocks: return "rare_floor_blocks";
    case TheoremCase::RareCeilPeriodic: return "rare_ceil_periodic";
    case TheoremCase::RareCeilBlocks: return "rare_ceil_blocks";
    }
    return "?";
}

namespace {

struct Shape {
    int floor_q;
    int g;
    bool q_integral;
    bool floor_isolated;
};

// Valid for any r >= 2.
Shape shape_of(int s, int r) {
    const int n = r - 1;
    const int g = (s - 1) % n;
    return {(s - 1) / n, g, g == 0, 2 * g >= r - 1};
}

} // namespace

StructureParams structure_params(const ProblemInstance& inst) {
    const int s = inst.s();
    const int r = inst.r();
    if (r < 3) throw validation_error("structure_params requires r >= 3");
    const Shape sh = shape_of(s, r);

    StructureParams sp;
    sp.q = Rational(s - 1, r - 1);
    sp.floor_q = sh.floor_q;
    sp.ceil_q = sh.floor_q + 1;
    sp.g = sh.g;
    sp.q_integral = sh.q_integral;
    sp.floor_isolated = sh.floor_isolated;
    sp.q1 = Rational(r - sp.g - 1, sp.g + 1);
    if (r - sp.g - 2 > 0) {
        sp.q2 = Rational(sp.g, r - sp.g - 2);
        sp.e = sp.g % (r - sp.g - 2);
    }
    sp.f = (r - sp.g - 1) % (sp.g + 1);
    sp.w_expected = sp.floor_isolated ? r - sp.g - 2 : sp.g;

    if (sh.q_integral) {
        sp.theorem_case = TheoremCase::EqualSpacing;
    } else if (s % (r - 1) == 0) {
        sp.theorem_case = TheoremCase::OneShortGap;
    } else if (sp.floor_isolated) {
        sp.theorem_case = sp.e == 0 ? TheoremCase::RareFloorPeriodic : TheoremCase::RareFloorBlocks;
    } else {
        sp.theorem_case = sp.f == 0 ? TheoremCase::RareCeilPeriodic : TheoremCase::RareCeilBlocks;
    }
    return sp;
}

int range_of(std::span<const int> v) {
    if (v.empty()) return 0;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

bool is_bivalent(std::span<const int> v) { return range_of(v) <= 1; }

bool is_framed(std::span<const int> v, std::optional<int> x) {
    if (v.empty()) return false;
    if (v.front() != v.back()) return false;
    return !x || v.front() == *x;
}

namespace {

bool has_adjacent(std::span<const int> v, int value) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == value && v[i + 1] == value) return true;
    return false;
}

} // namespace

bool is_separable(std::span<const int> v) {
    if (v.empty() || range_of(v) != 1)
        throw validation_error("separability is defined only for bivalent vectors with two distinct values");
    const int m = *std::min_element(v.begin(), v.end());
    return !has_adjacent(v, m) || !has_adjacent(v, m + 1);
}

std::vector<Run> run_length(std::span<const int> v) {
    std::vector<Run> runs;
    for (int x : v) {
        if (!runs.empty() && runs.back().value == x)
            ++runs.back().length;
        else
            runs.push_back({x, 1});
    }
    return runs;
}

std::optional<int> BlockDecomposition::theta() const {
    if (!theta_max) return std::nullopt;
    return *theta_max - *theta_min;
}

bool membership(const DeltaVector& d, StructureFilter set) {
    const auto v = d.entries();
    if (set == StructureFilter::All) return true;
    if (!is_bivalent(v)) return false;
    if (set == StructureFilter::Biv) return true;
    const Shape sh = shape_of(d.s(), d.r());
    if (!is_framed(v, sh.floor_q)) return false;
    if (set == StructureFilter::BivStar) return true;
    const int rare = sh.floor_isolated ? sh.floor_q : sh.floor_q + 1;
    return !has_adjacent(v, rare);
}

BlockDecomposition block_decomposition(const DeltaVector& d) {
    if (!membership(d, StructureFilter::BivStar))
        throw validation_error("block decomposition requires a bivalent [q]-framed delta vector, got " +
                               format_vector(d.entries()));
    BlockDecomposition bd;
    bd.runs = run_length(d.entries());
    int acc = 0;
    for (const Run& run : bd.runs) bd.prefix_sums.push_back(acc += run.length);
    bd.w = static_cast<int>(bd.runs.size() - 1) / 2;

    bd.eta_max = 0;
    bd.eta_min = d.r();
    for (std::size_t i = 0; i < bd.runs.size(); ++i) {
        const int t = bd.runs[i].length;
        if (i % 2 == 0) {
            bd.eta_max = std::max(bd.eta_max, t);
            bd.eta_min = std::min(bd.eta_min, t);
        } else {
            bd.theta_max = std::max(bd.theta_max.value_or(0), t);
            bd.theta_min = std::min(bd.theta_min.value_or(d.r()), t);
        }
    }
    int floor_total = 0;
    for (std::size_t i = 0; i < bd.runs.size(); i += 2) floor_total += bd.runs[i].length;
    bd.q1 = Rational(floor_total, bd.w + 1);
    if (bd.w > 0) bd.q2 = Rational(d.r() - 1 - floor_total, bd.w);
    return bd;
}

std::vector<std::string> BlockPredicate::violations(const DeltaVector& d) const {
    std::vector<std::string> out;
    const auto v = d.entries();
    int isolated = 0;
    for (int x : v) {
        if (x == isolated_value)
            ++isolated;
        else if (x != block_value)
            out.push_back("entry " + std::to_string(x) + " is neither " + std::to_string(isolated_value) +
                          " nor " + std::to_string(block_value));
    }
    if (isolated != isolated_count)
        out.push_back("expected exactly " + std::to_string(isolated_count) + " entries " +
                      std::to_string(isolated_value) + ", found " + std::to_string(isolated));
    if (!is_framed(v, end_value))
        out.push_back("first and last entries must equal " + std::to_string(end_value));
    if (has_adjacent(v, isolated_value))
        out.push_back("neighbouring entries " + std::to_string(isolated_value) + " occur");

    int longs = 0;
    int shorts = 0;
    for (const Run& run : run_length(v)) {
        if (run.value != block_value) continue;
        if (run.length == short_length + 1)
            ++longs;
        else if (run.length == short_length)
            ++shorts;
        else
            out.push_back(std::to_string(block_value) + "-block of length " + std::to_string(run.length) +
                          " outside {" + std::to_string(short_length) + "," +
                          std::to_string(short_length + 1) + "}");
    }
    if (longs != long_count || shorts != short_count)
        out.push_back("expected " + std::to_string(long_count) + " long and " + std::to_string(short_count) +
                      " short " + std::to_string(block_value) + "-blocks, found " + std::to_string(longs) +
                      " and " + std::to_string(shorts));
    return out;
}

namespace {

int floor_of(const Rational& x) {
    return static_cast<int>(boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x));
}

} // namespace

PredictedMinimizers predicted_minimizers(const ProblemInstance& inst) {
    if (!inst.meets_theorem_hypotheses())
        throw validation_error("predicted minimizers require p >= 3 and 3 <= r < s");
    const int r = inst.r();
    const StructureParams sp = structure_params(inst);
    const int lo = sp.floor_q;
    const int hi = sp.ceil_q;

    PredictedMinimizers out{sp.theorem_case, {}, std::nullopt};
    switch (sp.theorem_case) {
    case TheoremCase::EqualSpacing:
        out.vectors.emplace_back(std::vector<int>(static_cast<std::size_t>(r - 1), lo));
        break;
    case TheoremCase::OneShortGap: {
        std::vector<int> v(static_cast<std::size_t>(r - 1), hi);
        v.front() = lo;
        DeltaVector d(std::move(v));
        out.vectors.push_back(d);
        out.vectors.push_back(d.reversed());
        break;
    }
    case TheoremCase::RareFloorPeriodic: {
        const int q2 = sp.g / (r - sp.g - 2);
        std::vector<int> v{lo};
        for (int block = 0; block < r - sp.g - 2; ++block) {
            v.insert(v.end(), static_cast<std::size_t>(q2), hi);
            v.push_back(lo);
        }
        out.vectors.emplace_back(std::move(v));
        break;
    }
    case TheoremCase::RareCeilPeriodic: {
        const int q1 = (r - sp.g - 1) / (sp.g + 1);
        std::vector<int> v;
        for (int block = 0; block <= sp.g; ++block) {
            if (block > 0) v.push_back(hi);
            v.insert(v.end(), static_cast<std::size_t>(q1), lo);
        }
        out.vectors.emplace_back(std::move(v));
        break;
    }
    case TheoremCase::RareFloorBlocks: {
        BlockPredicate bp;
        bp.isolated_value = lo;
        bp.block_value = hi;
        bp.isolated_count = r - sp.g - 1;
        bp.end_value = lo;
        bp.short_length = floor_of(*sp.q2);
        bp.long_count = sp.e;
        bp.short_count = r - sp.g - 2 - sp.e;
        out.predicate = bp;
        break;
    }
    case TheoremCase::RareCeilBlocks: {
        BlockPredicate bp;
        bp.isolated_value = hi;
        bp.block_value = lo;
        bp.isolated_count = sp.g;
        bp.end_value = lo;
        bp.short_length = floor_of(sp.q1);
        bp.long_count = sp.f;
        bp.short_count = sp.g + 1 - sp.f;
        out.predicate = bp;
        break;
    }
    }
    return out;
}

WalkPlan make_walk_plan(const ProblemInstance& inst, StructureFilter filter) {
    WalkPlan plan;
    plan.length = inst.r() - 1;
    plan.total = inst.s() - 1;
    const Shape sh = shape_of(inst.s(), inst.r());
    const std::size_t n = static_cast<std::size_t>(plan.length);

    if (filter == StructureFilter::All) {
        plan.lo.assign(n, 1);
        plan.hi.assign(n, inst.s() - inst.r() + 1);
    } else {
        plan.lo.assign(n, sh.floor_q);
        plan.hi.assign(n, sh.q_integral ? sh.floor_q : sh.floor_q + 1);
        if (filter != StructureFilter::Biv) {
            plan.hi.front() = plan.lo.front();
            plan.hi.back() = plan.lo.back();
        }
        if (filter == StructureFilter::SepStar && !sh.q_integral)
            plan.no_repeat = sh.floor_isolated ? sh.floor_q : sh.floor_q + 1;
    }
    plan.suffix_lo.assign(n + 1, 0);
    plan.suffix_hi.assign(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) {
        plan.suffix_lo[k] = plan.suffix_lo[k + 1] + plan.lo[k];
        plan.suffix_hi[k] = plan.suffix_hi[k + 1] + plan.hi[k];
    }
    return plan;
}

namespace {

struct PrefixCollector {
    std::vector<std::vector<int>> out;
    void step(int, int) {}
    void leaf(std::span<const int> v) { out.emplace_back(v.begin(), v.end()); }
};

struct CallbackVisitor {
    const std::function<void(std::span<const int>)>& fn;
    void step(int, int) {}
    void leaf(std::span<const int> v) { fn(v); }
};

struct Counter {
    std::uint64_t count = 0;
    void step(int, int) {}
    void leaf(std::span<const int>) { ++count; }
};

} // namespace

std::vector<std::vector<int>> split_prefixes(const WalkPlan& plan, int depth) {
    PrefixCollector collector;
    detail::DeltaWalker<PrefixCollector> walker(plan, collector, std::clamp(depth, 0, plan.length));
    walker.run({});
    return std::move(collector.out);
}

void for_each_delta(const ProblemInstance& inst, StructureFilter filter,
                    const std::function<void(std::span<const int>)>& fn) {
    const WalkPlan plan = make_walk_plan(inst, filter);
    CallbackVisitor visitor{fn};
    walk_deltas(plan, {}, visitor);
}

std::vector<DeltaVector> enumerate_delta(const ProblemInstance& inst, StructureFilter filter) {
    std::vector<DeltaVector> out;
    for_each_delta(inst, filter, [&](std::span<const int> v) { out.emplace_back(std::vector<int>(v.begin(), v.end())); });
    return out;
}

std::uint64_t count_delta(const ProblemInstance& inst, StructureFilter filter) {
    const WalkPlan plan = make_walk_plan(inst, filter);
    Counter counter;
    walk_deltas(plan, {}, counter);
    return counter.count;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

} // namespace icg
