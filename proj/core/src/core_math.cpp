#include "icg/core_math.hpp"

#include <algorithm>
#include <string>

namespace icg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) throw validation_error("p = " + std::to_string(value) + " is not prime");
}

ProblemInstance::ProblemInstance(Prime p, int s, int r) : p_(p), s_(s), r_(r) {
    if (s < 2) throw validation_error("s must be >= 2, got " + std::to_string(s));
    if (r < 2 || r > s)
        throw validation_error("r must satisfy 2 <= r <= s, got r = " + std::to_string(r) +
                               ", s = " + std::to_string(s));
}

BigInt ProblemInstance::n() const { return ipow(BigInt(p_.value()), static_cast<unsigned>(s_)); }

bool ProblemInstance::meets_theorem_hypotheses() const noexcept {
    return p_.value() >= 3 && r_ >= 3 && r_ < s_;
}

PAdicRational::PAdicRational(Prime p, BigInt numerator, unsigned denom_exp)
    : prime_(p), numerator_(std::move(numerator)), denom_exp_(denom_exp) {
    if (numerator_ == 0) {
        denom_exp_ = 0;
        return;
    }
    const BigInt base(p.value());
    while (denom_exp_ > 0) {
        BigInt q;
        BigInt rem;
        boost::multiprecision::divide_qr(numerator_, base, q, rem);
        if (rem != 0) break;
        numerator_ = std::move(q);
        --denom_exp_;
    }
}

BigInt PAdicRational::denominator() const { return ipow(BigInt(prime_.value()), denom_exp_); }

Rational PAdicRational::to_rational() const { return Rational(numerator_, denominator()); }

std::strong_ordering operator<=>(const PAdicRational& a, const PAdicRational& b) {
    const BigInt lhs = a.numerator_ * b.denominator();
    const BigInt rhs = b.numerator_ * a.denominator();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const PAdicRational& a, const PAdicRational& b) { return (a <=> b) == 0; }

bool operator==(const PAdicRational& a, const Rational& b) {
    return a.numerator() * boost::multiprecision::denominator(b) ==
           boost::multiprecision::numerator(b) * a.denominator();
}

ExponentTuple::ExponentTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw validation_error("an exponent tuple needs at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0) throw validation_error("exponents must be non-negative");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw validation_error("exponents must be strictly increasing");
    }
}

bool ExponentTuple::is_admissible(int s) const noexcept {
    return !entries_.empty() && entries_.front() == 0 && entries_.back() == s - 1;
}

PAdicRational hp_eval(Prime p, const ExponentTuple& a) {
    if (a.size() < 2) return PAdicRational::zero(p);
    const auto xs = a.entries();
    const int span = xs.back() - xs.front();
    std::vector<BigInt> pow(static_cast<std::size_t>(span) + 1);
    pow[0] = 1;
    for (std::size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * p.value();

    // Scaled by p^span: term for (k, i) is p^(a_k - a_1) * p^(a_r - a_i).
    BigInt scaled = 0;
    BigInt prefix = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) scaled += prefix * pow[static_cast<std::size_t>(xs.back() - xs[i])];
        prefix += pow[static_cast<std::size_t>(xs[i] - xs.front())];
    }
    return {p, std::move(scaled), static_cast<unsigned>(span)};
}

ExponentTuple reverse_complement(const ExponentTuple& a, int s) {
    if (!a.is_admissible(s))
        throw validation_error("reverse_complement requires an admissible tuple (a_1 = 0, a_r = s-1)");
    std::vector<int> out(a.size());
    std::transform(a.entries().rbegin(), a.entries().rend(), out.begin(),
                   [s](int x) { return s - 1 - x; });
    return ExponentTuple(std::move(out));
}

BigInt energy_from_hp(Prime p, int s, int r, const PAdicRational& hp) {
    if (s < 1 || r < 1) throw validation_error("energy_from_hp requires s >= 1 and r >= 1");
    if (hp.prime() != p) throw validation_error("h_p value carries a different prime");
    if (hp.denom_exp() > static_cast<unsigned>(s - 1))
        throw validation_error("h_p denominator exceeds p^(s-1); value inconsistent with instance");
    const BigInt pv(p.value());
    const unsigned top = static_cast<unsigned>(s - 1);
    // 2(p-1) (r p^(s-1) - (p-1) N p^(s-1-e))
    const BigInt inner = BigInt(r) * ipow(pv, top) -
                         (pv - 1) * hp.numerator() * ipow(pv, top - hp.denom_exp());
    BigInt energy = 2 * (pv - 1) * inner;
    if (energy <= 0) throw validation_error("energy_from_hp: h_p value too large for r");
    return energy;
}

BigInt energy_from_hp(const ProblemInstance& inst, int r, const PAdicRational& hp) {
    return energy_from_hp(inst.p(), inst.s(), r, hp);
}

namespace {

void require_closed_form_base(const ProblemInstance& inst) {
    if (inst.p().value() < 3) throw validation_error("closed forms require p >= 3");
    if (inst.r() < 3) throw validation_error("closed forms require r >= 3");
}

Rational inverse_pow(const BigInt& base, unsigned e) { return Rational(BigInt(1), ipow(base, e)); }

} // namespace

Rational min_hp_closed_form_div(const ProblemInstance& inst) {
    require_closed_form_base(inst);
    const int s = inst.s();
    const int r = inst.r();
    if ((s - 1) % (r - 1) != 0) throw validation_error("min_hp_closed_form_div requires (r-1) | (s-1)");
    const unsigned q = static_cast<unsigned>((s - 1) / (r - 1));
    const BigInt pv(inst.p().value());
    const Rational step = Rational(ipow(pv, q) - 1);
    const Rational tail = 1 - inverse_pow(pv, q * static_cast<unsigned>(r - 1));
    return (Rational(r - 1) - tail / step) / step;
}

Rational min_hp_closed_form_divs(const ProblemInstance& inst) {
    require_closed_form_base(inst);
    const int s = inst.s();
    const int r = inst.r();
    if (s % (r - 1) != 0 || (s - 1) % (r - 1) == 0)
        throw validation_error("min_hp_closed_form_divs requires (r-1) | s and (r-1) not dividing s-1");
    const unsigned ceil_q = static_cast<unsigned>(s / (r - 1));
    const BigInt pv(inst.p().value());
    const Rational step = Rational(ipow(pv, ceil_q) - 1);
    const Rational tail = 1 - inverse_pow(pv, ceil_q * static_cast<unsigned>(r - 1));
    return (Rational(r - 1) + (Rational(pv - 1) - 1 / step) * tail) / step;
}

} // namespace icg
