#include "cli.hpp"

#include "icg/icg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace icg::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kFormatVersion = "1";

// ---------------------------------------------------------------- parsing

long long parse_int(std::string_view text, std::string_view what) {
    long long value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw validation_error("invalid integer '" + std::string(text) + "' in " + std::string(what));
    return value;
}

std::vector<long long> parse_list(const std::string& text, std::string_view what) {
    std::vector<long long> out;
    if (text.empty()) throw validation_error(std::string(what) + " must not be empty");
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(std::string_view(text).substr(start, comma - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> to_int_vector(const std::vector<long long>& v, std::string_view what) {
    std::vector<int> out;
    for (long long x : v) {
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
            throw validation_error(std::string(what) + " entry " + std::to_string(x) + " is out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::pair<int, int> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw validation_error("sweep range '" + std::string(text) + "' needs lo..hi");
    const auto lo = static_cast<int>(parse_int(text.substr(0, dots), "sweep range"));
    const auto hi = static_cast<int>(parse_int(text.substr(dots + 2), "sweep range"));
    if (lo > hi) throw validation_error("sweep range '" + std::string(text) + "' is empty");
    return {lo, hi};
}

struct Sweep {
    std::pair<int, int> s;
    std::pair<int, int> r;
    std::vector<std::uint64_t> primes;
};

/// "smin..smax,rmin..rmax,p1,p2,..."
Sweep parse_sweep(const std::string& text) {
    const auto first = text.find(',');
    const auto second = first == std::string::npos ? std::string::npos : text.find(',', first + 1);
    if (second == std::string::npos) throw validation_error("sweep must look like smin..smax,rmin..rmax,p[,p...]");
    Sweep sw;
    sw.s = parse_range(std::string_view(text).substr(0, first));
    sw.r = parse_range(std::string_view(text).substr(first + 1, second - first - 1));
    for (long long p : parse_list(text.substr(second + 1), "sweep primes")) {
        if (p < 2) throw validation_error("sweep prime " + std::to_string(p) + " is not prime");
        sw.primes.push_back(static_cast<std::uint64_t>(p));
    }
    return sw;
}

// ---------------------------------------------------------------- output

json rational_json(const Rational& x, unsigned digits) {
    return json{{"num", to_string(BigInt(numerator(x)))},
                {"den", to_string(BigInt(denominator(x)))},
                {"decimal", to_decimal(x, digits)},
                {"digits", digits}};
}

json rational_json(const PAdicRational& x, unsigned digits) { return rational_json(x.to_rational(), digits); }

json vector_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

json instance_json(const ProblemInstance& inst) {
    return json{{"p", inst.p().value()}, {"s", inst.s()}, {"r", inst.r()}};
}

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

json lambda_json(std::span<const int> d) {
    const FramingReport report = check_framing_conjecture(d);
    json levels = json::array();
    for (std::size_t i = 0; i < report.sequence.levels.size(); ++i) {
        const auto& level = report.sequence.levels[i];
        json entry{{"vector", vector_json(level)}, {"framed", static_cast<bool>(report.framed[i])}};
        const LambdaResult next = lambda_op(level);
        if (next.defined()) {
            entry["separator"] = next.separator;
            entry["opposite_choice"] = next.opposite_choice ? vector_json(*next.opposite_choice) : json(nullptr);
        }
        levels.push_back(std::move(entry));
    }
    return json{{"levels", std::move(levels)},
                {"terminal_reason", to_string(report.sequence.terminal_reason)},
                {"degree", report.sequence.degree()},
                {"framing_conjecture",
                 {{"outcome", to_string(report.outcome)},
                  {"unframed_levels", report.unframed_levels},
                  {"single_entry_convention_used", report.used_single_entry_convention}}}};
}

json structure_json(std::span<const int> d) {
    if (d.empty()) return nullptr;
    json out{{"range", range_of(d)}, {"bivalent", is_bivalent(d)}, {"framed", is_framed(d)}};
    const bool two_values = is_bivalent(d) && range_of(d) == 1;
    out["separable"] = two_values ? json(is_separable(d)) : json(nullptr);
    const LambdaResult next = lambda_op(d);
    out["bivalent_second_degree"] = next.defined() ? json(is_bivalent(*next.value)) : json(nullptr);
    out["balanced_degree"] = balanced_degree(d);
    return out;
}

json envelope(std::string command, json instance, json result, json provenance) {
    return json{{"format_version", kFormatVersion},
                {"command", std::move(command)},
                {"instance", std::move(instance)},
                {"result", std::move(result)},
                {"provenance", std::move(provenance)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- commands

struct HpArgs {
    std::uint64_t p = 0;
    std::optional<int> s;
    std::string delta;
    std::string a;
    unsigned digits = 5;
};

int cmd_hp(const HpArgs& args, std::ostream& out) {
    const auto started = Clock::now();
    const Prime p(args.p);
    ExponentTuple tuple;
    int s = 0;
    if (!args.delta.empty()) {
        DeltaVector d(to_int_vector(parse_list(args.delta, "--delta"), "--delta"));
        if (args.s && *args.s != d.s())
            throw validation_error("delta entries sum to " + std::to_string(d.s() - 1) + " but s-1 = " +
                                   std::to_string(*args.s - 1));
        s = d.s();
        tuple = delta_inv(d);
    } else {
        if (!args.s) throw validation_error("--a needs --s");
        s = *args.s;
        tuple = ExponentTuple(to_int_vector(parse_list(args.a, "--a"), "--a"));
        if (tuple.back() > s - 1)
            throw validation_error("exponent " + std::to_string(tuple.back()) + " exceeds s-1 = " + std::to_string(s - 1));
    }
    if (s < 1) throw validation_error("s must be at least 1");

    std::vector<int> gaps;
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) gaps.push_back(tuple[i + 1] - tuple[i]);

    const PAdicRational hp = hp_eval(p, tuple);
    const int r = static_cast<int>(tuple.size());
    json result{{"tuple", vector_json(tuple.entries())},
                {"delta", vector_json(gaps)},
                {"admissible", tuple.is_admissible(s)},
                {"hp", rational_json(hp, args.digits)},
                {"energy", to_string(energy_from_hp(p, s, r, hp))},
                {"structure", structure_json(gaps)}};
    emit(out, envelope("hp", json{{"p", args.p}, {"s", s}, {"r", r}}, std::move(result),
                       json{{"elapsed_ms", millis(Clock::now() - started)}}));
    return Ok;
}

struct SearchArgs {
    std::uint64_t p = 0;
    int s = 0;
    int r = 0;
    std::string filter = "all";
    unsigned jobs = 1;
    std::size_t top = 1;
    unsigned digits = 5;
};

json ranked_json(const ProblemInstance& inst, const std::vector<RankedValue>& ranked, unsigned digits,
                 bool with_lambda) {
    json top = json::array();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        json vectors = json::array();
        for (const auto& v : ranked[i].vectors) {
            json entry{{"delta", vector_json(v.entries())}, {"tuple", vector_json(delta_inv(v).entries())}};
            if (with_lambda) entry["lambda"] = lambda_json(v.entries());
            vectors.push_back(std::move(entry));
        }
        top.push_back(json{{"rank", i + 1},
                           {"value", rational_json(ranked[i].value, digits)},
                           {"energy", to_string(energy_from_hp(inst, inst.r(), ranked[i].value))},
                           {"vectors", std::move(vectors)}});
    }
    return top;
}

json search_provenance(const SearchReport& report, unsigned jobs) {
    return json{{"filter", to_string(report.filter)},
                {"filter_sound", report.sound},
                {"filter_justification", report.justification},
                {"candidates_examined", report.candidates_examined},
                {"arithmetic", report.fixed_width ? "uint128" : "arbitrary_precision"},
                {"jobs", jobs},
                {"elapsed_ms", std::chrono::duration<double, std::milli>(report.elapsed).count()}};
}

int cmd_search(const SearchArgs& args, std::ostream& out) {
    const ProblemInstance inst(Prime(args.p), args.s, args.r);
    const SearchReport report = brute_force_min(inst, parse_filter(args.filter), args.jobs, args.top);
    json minimizers = json::array();
    for (const auto& v : report.minimizers)
        minimizers.push_back(json{{"delta", vector_json(v.entries())}, {"tuple", vector_json(delta_inv(v).entries())}});
    json result{{"min_value", rational_json(report.min_value, args.digits)},
                {"max_energy", to_string(report.max_energy)},
                {"minimizers", std::move(minimizers)},
                {"top", ranked_json(inst, report.top, args.digits, true)}};
    emit(out, envelope("search", instance_json(inst), std::move(result), search_provenance(report, args.jobs)));
    return Ok;
}

struct VerifyArgs {
    std::uint64_t p = 0;
    int s = 0;
    int r = 0;
    std::string sweep;
    std::string format = "json";
    unsigned jobs = 1;
    unsigned digits = 5;
};

json predicate_json(const BlockPredicate& bp) {
    return json{{"isolated_value", bp.isolated_value}, {"block_value", bp.block_value},
                {"isolated_count", bp.isolated_count}, {"end_value", bp.end_value},
                {"short_block_length", bp.short_length}, {"long_block_count", bp.long_count},
                {"short_block_count", bp.short_count}};
}

json verification_json(const TheoremVerification& v, unsigned digits) {
    json predicted;
    if (v.predicted.is_explicit()) {
        json vectors = json::array();
        for (const auto& d : v.predicted.vectors) vectors.push_back(vector_json(d.entries()));
        predicted = json{{"kind", "explicit"}, {"vectors", std::move(vectors)}};
    } else {
        predicted = json{{"kind", "predicate"}, {"predicate", predicate_json(*v.predicted.predicate)}};
    }
    json minimizers = json::array();
    for (const auto& d : v.search.minimizers) minimizers.push_back(vector_json(d.entries()));
    return json{{"case", to_string(v.which)},
                {"pass", v.pass},
                {"min_value", rational_json(v.search.min_value, digits)},
                {"minimizers", std::move(minimizers)},
                {"predicted", std::move(predicted)},
                {"closed_form", v.closed_form ? rational_json(*v.closed_form, digits) : json(nullptr)},
                {"diffs", v.diffs}};
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const auto started = Clock::now();
    if (args.format != "json" && args.format != "csv") throw validation_error("--format must be json or csv");

    if (args.sweep.empty()) {
        const ProblemInstance inst(Prime(args.p), args.s, args.r);
        const TheoremVerification v = verify_theorem(inst, args.jobs);
        if (args.format == "csv") {
            out << "p,s,r,status,case,min_num,min_den,min_decimal\n";
            const Rational m = v.search.min_value.to_rational();
            out << args.p << ',' << args.s << ',' << args.r << ',' << (v.pass ? "pass" : "fail") << ','
                << to_string(v.which) << ',' << BigInt(numerator(m)) << ',' << BigInt(denominator(m)) << ','
                << to_decimal(m, args.digits) << '\n';
        } else {
            emit(out, envelope("verify", instance_json(inst), verification_json(v, args.digits),
                               json{{"candidates_examined", v.search.candidates_examined},
                                    {"jobs", args.jobs},
                                    {"elapsed_ms", millis(Clock::now() - started)}}));
        }
        return v.pass ? Ok : VerificationFailed;
    }

    const Sweep sw = parse_sweep(args.sweep);
    for (std::uint64_t p : sw.primes) (void)Prime{p};
    json cells = json::array();
    std::ostringstream csv;
    csv << "p,s,r,status,case,min_num,min_den,min_decimal\n";
    std::size_t passed = 0, failed = 0, skipped = 0;
    std::uint64_t examined = 0;
    for (std::uint64_t p : sw.primes) {
        for (int s = sw.s.first; s <= sw.s.second; ++s) {
            for (int r = sw.r.first; r <= sw.r.second; ++r) {
                json cell{{"p", p}, {"s", s}, {"r", r}};
                if (p < 3 || r < 3 || r >= s) {
                    cell["status"] = "skipped";
                    ++skipped;
                    csv << p << ',' << s << ',' << r << ",skipped,,,,\n";
                    cells.push_back(std::move(cell));
                    continue;
                }
                const TheoremVerification v = verify_theorem(ProblemInstance(Prime(p), s, r), args.jobs);
                examined += v.search.candidates_examined;
                v.pass ? ++passed : ++failed;
                const Rational m = v.search.min_value.to_rational();
                cell["status"] = v.pass ? "pass" : "fail";
                cell["case"] = to_string(v.which);
                cell["min_value"] = rational_json(m, args.digits);
                if (!v.pass) cell["diffs"] = v.diffs;
                csv << p << ',' << s << ',' << r << ',' << (v.pass ? "pass" : "fail") << ',' << to_string(v.which)
                    << ',' << BigInt(numerator(m)) << ',' << BigInt(denominator(m)) << ','
                    << to_decimal(m, args.digits) << '\n';
                cells.push_back(std::move(cell));
            }
        }
    }
    if (args.format == "csv") {
        out << csv.str();
    } else {
        json instance{{"sweep", args.sweep},
                      {"s", {sw.s.first, sw.s.second}},
                      {"r", {sw.r.first, sw.r.second}},
                      {"primes", sw.primes}};
        json result{{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"cells", std::move(cells)}};
        emit(out, envelope("verify", std::move(instance), std::move(result),
                           json{{"candidates_examined", examined},
                                {"jobs", args.jobs},
                                {"elapsed_ms", millis(Clock::now() - started)}}));
    }
    return failed == 0 ? Ok : VerificationFailed;
}

struct LambdaArgs {
    std::string delta;
    bool full_from = false;
    std::uint64_t p = 0;
    int s = 0;
    int r = 0;
    std::string filter = "all";
    std::size_t top = 1;
    unsigned jobs = 1;
    unsigned digits = 5;
};

int cmd_lambda(const LambdaArgs& args, std::ostream& out) {
    const auto started = Clock::now();
    if (args.full_from == !args.delta.empty()) throw validation_error("give exactly one of --delta or --full-from");
    if (!args.full_from) {
        const DeltaVector d(to_int_vector(parse_list(args.delta, "--delta"), "--delta"));
        const ReinterpretedTuple as_tuple = reinterpret_as_admissible(d.entries());
        json result{{"input", vector_json(d.entries())},
                    {"as_admissible", {{"s", as_tuple.s}, {"r", as_tuple.r}, {"tuple", vector_json(as_tuple.tuple.entries())}}},
                    {"lambda", lambda_json(d.entries())}};
        emit(out, envelope("lambda", json{{"delta", vector_json(d.entries())}}, std::move(result),
                           json{{"maximality_verified", false}, {"elapsed_ms", millis(Clock::now() - started)}}));
        return Ok;
    }
    const ProblemInstance inst(Prime(args.p), args.s, args.r);
    const SearchReport report = brute_force_min(inst, parse_filter(args.filter), args.jobs, args.top);
    json result{{"min_value", rational_json(report.min_value, args.digits)},
                {"top", ranked_json(inst, report.top, args.digits, true)}};
    json provenance = search_provenance(report, args.jobs);
    provenance["maximality_verified"] = report.sound;
    emit(out, envelope("lambda", instance_json(inst), std::move(result), std::move(provenance)));
    return Ok;
}

struct EnergyArgs {
    std::uint64_t n = 0;
    std::string divisors;
    bool all_subsets = false;
    unsigned max_divisors = 20;
    bool float_check = false;
};

json sets_json(const std::vector<std::vector<std::uint64_t>>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

int cmd_energy(const EnergyArgs& args, std::ostream& out) {
    const auto started = Clock::now();
    if (args.all_subsets == !args.divisors.empty()) throw validation_error("give exactly one of --divisors or --all-subsets");
    if (args.all_subsets) {
        const ExtremalEnergies ext = extremal_energies(args.n, args.max_divisors);
        json result{{"proper_divisors", proper_divisors(args.n)},
                    {"subsets_examined", ext.subsets_examined},
                    {"min_energy", to_string(ext.min_energy)},
                    {"min_sets", sets_json(ext.min_sets)},
                    {"max_energy", to_string(ext.max_energy)},
                    {"max_sets", sets_json(ext.max_sets)}};
        emit(out, envelope("energy", json{{"n", args.n}}, std::move(result),
                           json{{"method", "ramanujan_sums"}, {"elapsed_ms", millis(Clock::now() - started)}}));
        return Ok;
    }
    std::vector<std::uint64_t> ds;
    for (long long d : parse_list(args.divisors, "--divisors")) {
        if (d < 1) throw validation_error("divisor " + std::to_string(d) + " must be positive");
        ds.push_back(static_cast<std::uint64_t>(d));
    }
    const DivisorSet set(args.n, ds);
    const Spectrum spec = icg_spectrum(set);
    json eigenvalues = json::array();
    for (const auto& [lambda, mult] : spec.multiplicities)
        eigenvalues.push_back(json{{"eigenvalue", lambda}, {"multiplicity", mult}});
    json result{{"divisors", set.divisors()},
                {"degree", spec.degree},
                {"spectrum", std::move(eigenvalues)},
                {"energy", to_string(spec.energy)}};
    if (args.float_check) {
        const ApproximateSpectrumCheck check = approximate_spectrum_check(set);
        result["approximate_check"] =
            json{{"max_abs_error", check.max_abs_error}, {"tolerance", check.tolerance}, {"pass", check.pass}};
    }
    emit(out, envelope("energy", json{{"n", args.n}}, std::move(result),
                       json{{"method", "ramanujan_sums"}, {"elapsed_ms", millis(Clock::now() - started)}}));
    return Ok;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ICG_ENERGY_JOBS")) {
        const long long v = parse_int(env, "ICG_ENERGY_JOBS");
        if (v < 1) throw validation_error("ICG_ENERGY_JOBS must be at least 1");
        return static_cast<unsigned>(v);
    }
    return 1;
}

void add_jobs(CLI::App* cmd, unsigned& jobs) {
    cmd->add_option("--jobs", jobs, "Worker threads (default: $ICG_ENERGY_JOBS or 1)")->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact energy-maximal divisor sets for gcd graphs of prime-power order", "icg-energy"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "icg-energy 0.1.0");

    unsigned jobs = 1;
    try {
        jobs = default_jobs();
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return ValidationFailure;
    }

    HpArgs hp;
    auto* hp_cmd = app.add_subcommand("hp", "Evaluate h_p, the energy and structural predicates of one tuple");
    hp_cmd->add_option("--p", hp.p, "Prime")->required();
    hp_cmd->add_option("--s", hp.s, "Exponent of the vertex count n = p^s");
    auto* hp_delta = hp_cmd->add_option("--delta", hp.delta, "Delta vector, comma separated");
    auto* hp_a = hp_cmd->add_option("--a", hp.a, "Exponent tuple, comma separated");
    hp_delta->excludes(hp_a);
    hp_cmd->add_option("--digits", hp.digits, "Decimal digits")->capture_default_str();

    SearchArgs search;
    search.jobs = jobs;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive minimization of h_p over A(s, r)");
    search_cmd->add_option("--p", search.p)->required();
    search_cmd->add_option("--s", search.s)->required();
    search_cmd->add_option("--r", search.r)->required();
    search_cmd->add_option("--filter", search.filter, "all | biv | bivstar | sepstar")->capture_default_str();
    search_cmd->add_option("--top", search.top, "Number of best distinct values to list")
        ->check(CLI::PositiveNumber)->capture_default_str();
    search_cmd->add_option("--digits", search.digits)->capture_default_str();
    add_jobs(search_cmd, search.jobs);

    VerifyArgs verify;
    verify.jobs = jobs;
    auto* verify_cmd = app.add_subcommand("verify", "Check the structural theorems against exhaustive search");
    auto* v_p = verify_cmd->add_option("--p", verify.p);
    auto* v_s = verify_cmd->add_option("--s", verify.s);
    auto* v_r = verify_cmd->add_option("--r", verify.r);
    auto* v_sweep = verify_cmd->add_option("--sweep", verify.sweep, "smin..smax,rmin..rmax,p1[,p2...]");
    v_sweep->excludes(v_p)->excludes(v_s)->excludes(v_r);
    verify_cmd->add_option("--format", verify.format, "json | csv")->capture_default_str();
    verify_cmd->add_option("--digits", verify.digits)->capture_default_str();
    add_jobs(verify_cmd, verify.jobs);

    LambdaArgs lambda;
    lambda.jobs = jobs;
    auto* lambda_cmd = app.add_subcommand("lambda", "Lambda sequences and the framing check");
    lambda_cmd->add_option("--delta", lambda.delta, "Vector, comma separated");
    lambda_cmd->add_flag("--full-from", lambda.full_from, "Search the instance first and analyse its best vectors");
    lambda_cmd->add_option("--p", lambda.p);
    lambda_cmd->add_option("--s", lambda.s);
    lambda_cmd->add_option("--r", lambda.r);
    lambda_cmd->add_option("--filter", lambda.filter)->capture_default_str();
    lambda_cmd->add_option("--top", lambda.top)->check(CLI::PositiveNumber)->capture_default_str();
    lambda_cmd->add_option("--digits", lambda.digits)->capture_default_str();
    add_jobs(lambda_cmd, lambda.jobs);

    EnergyArgs energy;
    auto* energy_cmd = app.add_subcommand("energy", "Exact spectrum and energy of ICG(n, D)");
    energy_cmd->add_option("--n", energy.n)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    auto* e_div = energy_cmd->add_option("--divisors", energy.divisors, "Divisor set, comma separated");
    auto* e_all = energy_cmd->add_flag("--all-subsets", energy.all_subsets, "Extremal energies over all divisor sets");
    e_div->excludes(e_all);
    energy_cmd->add_option("--max-divisors", energy.max_divisors, "Subset enumeration guard")->capture_default_str();
    energy_cmd->add_flag("--float-check", energy.float_check, "Also diagonalize numerically (n <= 64)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return ValidationFailure;
    }

    try {
        if (hp_cmd->parsed()) {
            if (hp.delta.empty() && hp.a.empty()) throw validation_error("give exactly one of --delta or --a");
            return cmd_hp(hp, out);
        }
        if (search_cmd->parsed()) return cmd_search(search, out);
        if (verify_cmd->parsed()) {
            if (verify.sweep.empty() && (v_p->count() == 0 || v_s->count() == 0 || v_r->count() == 0))
                throw validation_error("verify needs --p, --s and --r, or --sweep");
            return cmd_verify(verify, out);
        }
        if (lambda_cmd->parsed()) return cmd_lambda(lambda, out);
        if (energy_cmd->parsed()) return cmd_energy(energy, out);
    } catch (const guard_error& e) {
        err << "refused: " << e.what() << '\n';
        return GuardRefused;
    } catch (const validation_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return ValidationFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return InternalError;
    }
    return InternalError;
}

} // namespace icg::cli
