#include "icg/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace icg {

namespace {

std::vector<int> gaps_of(const ExponentTuple& a) {
    if (a.size() < 2 || !a.is_admissible(a.back() + 1))
        throw validation_error("moves need an admissible tuple with at least two exponents");
    std::vector<int> d(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) d[i] = a[i + 1] - a[i];
    return d;
}

ExponentTuple tuple_of(const std::vector<int>& d) { return delta_inv(DeltaVector(d)); }

void check_index(const std::vector<int>& d, int i, const char* what) {
    if (i < 0 || static_cast<std::size_t>(i) >= d.size())
        throw validation_error(std::string(what) + " index " + std::to_string(i) + " is out of range");
}

struct TwoValues {
    int lo;
    int hi;
};

TwoValues require_two_values(const std::vector<int>& d, const char* move) {
    if (!is_bivalent(d) || range_of(d) != 1)
        throw validation_error(std::string(move) + " needs a vector with exactly two values differing by one");
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return {*lo, *hi};
}

/// Block value, separator and block spans of a separable vector.
struct Blocks {
    int value = 0;
    int separator = 0;
    std::vector<std::pair<int, int>> spans;  // [start, length]
};

Blocks blocks_of(const std::vector<int>& d) {
    const LambdaResult lambda = lambda_op(d);
    if (!lambda.defined()) throw validation_error("block shifts need a separable bivalent vector");
    Blocks b;
    b.value = lambda.counted;
    b.separator = lambda.separator;
    for (std::size_t i = 0; i < d.size();) {
        if (d[i] != b.value) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < d.size() && d[j] == b.value) ++j;
        b.spans.emplace_back(static_cast<int>(i), static_cast<int>(j - i));
        i = j;
    }
    return b;
}

std::vector<int> reversed(std::vector<int> d) {
    std::reverse(d.begin(), d.end());
    return d;
}

std::vector<int> apply_balance(std::vector<int> d, int u, int v) {
    check_index(d, u, "balance");
    check_index(d, v, "balance");
    if (u >= v) throw validation_error("balance needs u < v");
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    if (*hi - *lo < 2) throw validation_error("balance needs range at least 2");
    if (d[u] != *lo || d[v] != *hi) throw validation_error("balance needs a minimal gap at u and a maximal gap at v");
    for (int k = u + 1; k < v; ++k)
        if (d[k] == *lo || d[k] == *hi)
            throw validation_error("balance needs every gap between u and v to be of intermediate length");
    ++d[u];
    --d[v];
    return d;
}

std::vector<int> apply_frame(std::vector<int> d) {
    const auto [lo, hi] = require_two_values(d, "frame");
    std::size_t run = 0;
    while (run < d.size() && d[run] == hi) ++run;
    if (run == 0) throw validation_error("frame needs the vector to start with its larger value");
    if (run + 2 > d.size()) throw validation_error("frame needs at least one gap after the first smaller gap");
    std::swap(d[0], d[run]);
    return d;
}

std::vector<int> apply_swap(std::vector<int> d, int u, int v) {
    const auto [lo, hi] = require_two_values(d, "swap");
    if (!is_framed(d, lo)) throw validation_error("swap needs a vector framed by its smaller value");
    check_index(d, u, "swap");
    check_index(d, v, "swap");
    if (u >= v || static_cast<std::size_t>(v) + 1 >= d.size()) throw validation_error("swap needs u < v < r-2");
    if (d[u] != lo || d[u + 1] != lo) throw validation_error("swap needs adjacent smaller gaps at u, u+1");
    if (d[v] != hi || d[v + 1] != hi) throw validation_error("swap needs adjacent larger gaps at v, v+1");
    std::rotate(d.begin() + u + 1, d.begin() + u + 2, d.begin() + v + 1);
    return d;
}

std::vector<int> apply_shift(std::vector<int> d, int bu, int bv) {
    const auto [lo, hi] = require_two_values(d, "block shift");
    if (!is_framed(d, lo)) throw validation_error("block shift needs a vector framed by its smaller value");
    const Blocks b = blocks_of(d);
    const int count = static_cast<int>(b.spans.size());
    if (bu < 0 || bv >= count || bu >= bv) throw validation_error("block shift needs block indices u < v in range");
    const int tu = b.spans[static_cast<std::size_t>(bu)].second;
    const int tv = b.spans[static_cast<std::size_t>(bv)].second;
    if (std::abs(tu - tv) < 2) throw validation_error("block shift needs block lengths differing by at least two");

    if (tu > tv) {
        auto mirrored = apply_shift(reversed(std::move(d)), count - 1 - bv, count - 1 - bu);
        return reversed(std::move(mirrored));
    }
    const int sep = b.spans[static_cast<std::size_t>(bu)].first + tu;
    const int first_v = b.spans[static_cast<std::size_t>(bv)].first;
    if (bv != bu + 1) {
        for (int k = bu + 1; k < bv; ++k)
            if (b.spans[static_cast<std::size_t>(k)].second != tu + 1)
                throw validation_error("block shift across blocks needs every middle block one longer than block u");
        if (tv != tu + 2) throw validation_error("block shift across blocks needs block v exactly two longer");
    }
    std::rotate(d.begin() + sep, d.begin() + first_v, d.begin() + first_v + 1);
    return d;
}

} // namespace

ExponentTuple balance_move(const ExponentTuple& a, int u, int v) { return tuple_of(apply_balance(gaps_of(a), u, v)); }

ExponentTuple frame_move(const ExponentTuple& a) { return tuple_of(apply_frame(gaps_of(a))); }

ExponentTuple swap_move(const ExponentTuple& a, int u, int v) { return tuple_of(apply_swap(gaps_of(a), u, v)); }

ExponentTuple shift_block_move(const ExponentTuple& a, int block_u, int block_v) {
    return tuple_of(apply_shift(gaps_of(a), block_u, block_v));
}

std::string_view to_string(MoveKind kind) {
    switch (kind) {
    case MoveKind::Balance: return "balance";
    case MoveKind::Frame: return "frame";
    case MoveKind::Swap: return "swap";
    case MoveKind::ShiftBlock: return "shift_block";
    }
    return "?";
}

namespace {

struct Candidate {
    MoveKind kind;
    bool mirrored;
    int first;
    int second;
};

std::optional<Candidate> find_balance(const std::vector<int>& d) {
    const auto [lo_it, hi_it] = std::minmax_element(d.begin(), d.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    if (hi - lo < 2) return std::nullopt;
    const int n = static_cast<int>(d.size());
    int prev = -1;
    for (int i = 0; i < n; ++i) {
        if (d[i] != lo && d[i] != hi) continue;
        if (prev >= 0 && d[prev] != d[i]) {
            if (d[prev] == lo) return Candidate{MoveKind::Balance, false, prev, i};
            return Candidate{MoveKind::Balance, true, n - 1 - i, n - 1 - prev};
        }
        prev = i;
    }
    return std::nullopt;
}

std::optional<Candidate> find_frame(const std::vector<int>& d) {
    if (range_of(d) != 1) return std::nullopt;
    const int hi = *std::max_element(d.begin(), d.end());
    auto leading = [&](const std::vector<int>& v) {
        std::size_t run = 0;
        while (run < v.size() && v[run] == hi) ++run;
        return run > 0 && run + 2 <= v.size();
    };
    if (leading(d)) return Candidate{MoveKind::Frame, false, 0, 0};
    if (leading(reversed(d))) return Candidate{MoveKind::Frame, true, 0, 0};
    return std::nullopt;
}

std::optional<Candidate> find_swap(const std::vector<int>& d) {
    if (range_of(d) != 1) return std::nullopt;
    const auto [lo_it, hi_it] = std::minmax_element(d.begin(), d.end());
    if (!is_framed(d, *lo_it)) return std::nullopt;
    const int n = static_cast<int>(d.size());
    // Nearest pair: the last smaller pair before the first larger pair after it.
    auto locate = [&](const std::vector<int>& v) -> std::optional<std::pair<int, int>> {
        int last_lo = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (v[i] == *lo_it && v[i + 1] == *lo_it) last_lo = i;
            if (v[i] == *hi_it && v[i + 1] == *hi_it && last_lo >= 0) return std::pair{last_lo, i};
        }
        return std::nullopt;
    };
    if (auto hit = locate(d)) return Candidate{MoveKind::Swap, false, hit->first, hit->second};
    if (auto hit = locate(reversed(d))) return Candidate{MoveKind::Swap, true, hit->first, hit->second};
    return std::nullopt;
}

std::optional<Candidate> find_shift(const std::vector<int>& d) {
    if (range_of(d) != 1) return std::nullopt;
    const int lo = *std::min_element(d.begin(), d.end());
    if (!is_framed(d, lo) || !lambda_op(d).defined()) return std::nullopt;
    const Blocks b = blocks_of(d);
    const int count = static_cast<int>(b.spans.size());
    for (int gap = 1; gap < count; ++gap) {
        for (int u = 0; u + gap < count; ++u) {
            const int tu = b.spans[static_cast<std::size_t>(u)].second;
            const int tv = b.spans[static_cast<std::size_t>(u + gap)].second;
            if (std::abs(tu - tv) >= 2) return Candidate{MoveKind::ShiftBlock, false, u, u + gap};
        }
    }
    return std::nullopt;
}

std::vector<int> apply_candidate(const Candidate& c, std::vector<int> d) {
    if (c.mirrored) d = reversed(std::move(d));
    switch (c.kind) {
    case MoveKind::Balance: d = apply_balance(std::move(d), c.first, c.second); break;
    case MoveKind::Frame: d = apply_frame(std::move(d)); break;
    case MoveKind::Swap: d = apply_swap(std::move(d), c.first, c.second); break;
    case MoveKind::ShiftBlock: d = apply_shift(std::move(d), c.first, c.second); break;
    }
    if (c.mirrored) d = reversed(std::move(d));
    return d;
}

} // namespace

DescentResult local_descent(Prime p, const ExponentTuple& a) {
    std::vector<int> d = gaps_of(a);
    DescentResult result{a, hp_eval(p, a), {}};
    for (;;) {
        std::optional<Candidate> c = find_balance(d);
        if (!c) c = find_frame(d);
        if (!c) c = find_swap(d);
        if (!c) c = find_shift(d);
        if (!c) return result;

        d = apply_candidate(*c, std::move(d));
        ExponentTuple next = tuple_of(d);
        PAdicRational value = hp_eval(p, next);
        if (!(value < result.value))
            throw std::logic_error(std::string(to_string(c->kind)) + " move failed to decrease h_p at " +
                                   format_vector(d));
        result.tuple = next;
        result.value = value;
        result.steps.push_back(DescentStep{c->kind, c->mirrored, c->first, c->second, std::move(next), value});
    }
}

} // namespace icg
