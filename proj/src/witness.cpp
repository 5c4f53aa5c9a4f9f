/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/witness.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace s2a {

namespace {

bool in_half_open_unit(const Rational& q)
{
    return q >= Rational(0) && q < Rational(1);
}

Interval enclose_to(const ReferenceReal& r, std::size_t bits)
{
    return r.enclose(Rational::dyadic(bits));
}

}  // namespace

// ---- InputEnumeration ------------------------------------------------------

InputEnumeration::InputEnumeration(std::vector<Rational> prefix) : prefix_(std::move(prefix))
{
    for (const Rational& q : prefix_)
        if (auto c = canonical_index(q))
            skipped_.push_back(*c);
    std::sort(skipped_.begin(), skipped_.end());
}

InputEnumeration InputEnumeration::with_prefix(std::vector<Rational> prefix)
{
    if (prefix.empty())
        return canonical();
    if (!prefix.front().is_zero())
        throw std::invalid_argument("enumeration prefix must start with 0");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!in_half_open_unit(prefix[i]))
            throw std::invalid_argument("enumeration point outside [0, 1): " + prefix[i].str());
        for (std::size_t k = 0; k < i; ++k)
            if (prefix[k] == prefix[i])
                throw std::invalid_argument("enumeration prefix repeats " + prefix[i].str());
    }
    return InputEnumeration(std::move(prefix));
}

Rational InputEnumeration::canonical_point(std::size_t j)
{
    if (j == 0)
        return Rational(0);
    const auto level = static_cast<unsigned long>(std::bit_width(j));
    const std::size_t offset = j - (std::size_t{1} << (level - 1));
    mpz_class num(static_cast<unsigned long>(2 * offset + 1));
    return Rational(mpq_class(num, 1)) * Rational::dyadic(level);
}

std::optional<std::size_t> InputEnumeration::canonical_index(const Rational& q)
{
    if (!in_half_open_unit(q))
        return std::nullopt;
    if (q.is_zero())
        return 0;
    const mpz_class den = q.denominator();
    if (mpz_popcount(den.get_mpz_t()) != 1)
        return std::nullopt;
    const std::size_t level = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (level == 0 || level >= 64)
        return std::nullopt;
    const mpz_class num = q.numerator();
    const std::size_t offset = (num.get_ui() - 1) / 2;
    return (std::size_t{1} << (level - 1)) + offset;
}

Rational InputEnumeration::point(std::size_t j) const
{
    if (j < prefix_.size())
        return prefix_[j];
    std::size_t c = j - prefix_.size();
    for (std::size_t skip : skipped_) {
        if (skip <= c)
            ++c;
        else
            break;
    }
    return canonical_point(c);
}

std::optional<std::size_t> InputEnumeration::index_of(const Rational& q) const
{
    for (std::size_t j = 0; j < prefix_.size(); ++j)
        if (prefix_[j] == q)
            return j;
    const auto c = canonical_index(q);
    if (!c)
        return std::nullopt;
    const auto below = static_cast<std::size_t>(std::lower_bound(skipped_.begin(), skipped_.end(), *c) - skipped_.begin());
    return prefix_.size() + (*c - below);
}

// ---- StageSchedule / ValueRule ----------------------------------------------

StageSchedule::StageSchedule(std::uint64_t slope, std::uint64_t offset,
                             std::map<std::size_t, std::optional<Stage>> overrides)
    : slope_(slope), offset_(offset), overrides_(std::move(overrides))
{
}

std::optional<Stage> StageSchedule::stage_of(std::size_t j) const
{
    if (auto it = overrides_.find(j); it != overrides_.end())
        return it->second;
    constexpr Stage top = std::numeric_limits<Stage>::max();
    if (slope_ != 0 && j > (top - offset_) / slope_)
        return top;
    return slope_ * j + offset_;
}

ValueRule::ValueRule(Rational u, Rational v, std::map<Rational, Rational> table)
    : u_(std::move(u)), v_(std::move(v)), table_(std::move(table))
{
    const Rational at_one = u_ + v_;
    if (!in_half_open_unit(v_) || at_one < Rational(0) || at_one > Rational(1))
        throw std::invalid_argument("affine value rule leaves [0, 1)");
    for (const auto& [q, value] : table_)
        if (!in_half_open_unit(q) || !in_half_open_unit(value))
            throw std::invalid_argument("value table entry outside [0, 1): " + q.str() + " -> " + value.str());
}

Rational ValueRule::operator()(const Rational& q) const
{
    if (auto it = table_.find(q); it != table_.end())
        return it->second;
    return u_ * q + v_;
}

// ---- StagedPartialFunction -----------------------------------------------------

StagedPartialFunction::StagedPartialFunction(InputEnumeration inputs, StageSchedule schedule, ValueRule rule)
    : inputs_(std::move(inputs)), schedule_(std::move(schedule)), rule_(std::move(rule))
{
    if (!schedule_.stage_of(0))
        throw std::invalid_argument("g(0) must be defined at a finite stage");
}

std::optional<Stage> StagedPartialFunction::definition_stage(const Rational& q) const
{
    const auto j = inputs_.index_of(q);
    if (!j)
        return std::nullopt;
    return schedule_.stage_of(*j);
}

std::optional<Rational> StagedPartialFunction::eval_staged(const Rational& q, Stage stage) const
{
    const auto s = definition_stage(q);
    if (!s || *s > stage)
        return std::nullopt;
    return rule_(q);
}

std::vector<DomainEntry> StagedPartialFunction::enumerate_domain(Stage stage) const
{
    std::vector<DomainEntry> out;
    for (std::size_t j = 0; j <= stage; ++j) {
        const auto s = schedule_.stage_of(j);
        if (!s || *s > stage)
            continue;
        Rational q = inputs_.point(j);
        Rational value = rule_(q);
        out.push_back(DomainEntry{j, std::move(q), std::move(value)});
    }
    return out;
}

SolovayWitness::SolovayWitness(StagedPartialFunction g_, Rational c_) : g(std::move(g_)), c(std::move(c_))
{
    if (c.sign() <= 0)
        throw std::invalid_argument("Solovay constant must be positive");
}

// ---- verdict names ---------------------------------------------------------------

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "Holds";
    case Verdict::Fails:
        return "Fails";
    case Verdict::Unknown:
        return "Unknown";
    case Verdict::Exhausted:
        return "Exhausted";
    }
    return "?";
}

const char* to_string(SolovayVerdict v)
{
    switch (v) {
    case SolovayVerdict::Holds:
        return "Holds";
    case SolovayVerdict::FailsLower:
        return "FailsLower";
    case SolovayVerdict::FailsUpper:
        return "FailsUpper";
    case SolovayVerdict::GUndefined:
        return "GUndefined";
    case SolovayVerdict::Unknown:
        return "Unknown";
    }
    return "?";
}

// ---- checkers ----------------------------------------------------------------------

SolovayCheck check_solovay_at(const SolovayWitness& w, const ReferenceReal& alpha, const ReferenceReal& beta,
                              const Rational& q, Stage stage, std::size_t budget)
{
    SolovayCheck out;
    out.q = q;
    out.g_value = w.g.eval_staged(q, stage);
    if (!out.g_value) {
        out.verdict = SolovayVerdict::GUndefined;
        return out;
    }
    const Rational& g = *out.g_value;
    const Interval a = enclose_to(alpha, budget);
    const Interval b = enclose_to(beta, budget);
    out.alpha_enclosure = a;
    out.beta_enclosure = b;

    const bool lower_ok = a.lo() - g > Rational(0);
    const bool upper_ok = a.hi() - g < w.c * (b.lo() - q);
    if (lower_ok && upper_ok)
        out.verdict = SolovayVerdict::Holds;
    else if (a.hi() - g <= Rational(0))
        out.verdict = SolovayVerdict::FailsLower;
    else if (a.lo() - g >= w.c * (b.hi() - q))
        out.verdict = SolovayVerdict::FailsUpper;
    else
        out.verdict = SolovayVerdict::Unknown;
    return out;
}

namespace {

S2aCheck compare_s2a(const ReferenceReal& alpha, const ReferenceReal& beta, const Rational& a, const Rational& b,
                     const Rational& c, std::size_t n, std::size_t guard, bool strict)
{
    const Interval ae = enclose_to(alpha, n + guard);
    const Interval be = enclose_to(beta, n + guard);
    const Rational slack = Rational::dyadic(n);

    const Rational lhs_hi = ae.max_distance(a);
    const Rational lhs_lo = ae.min_distance(a);
    const Rational rhs_lo = c * (be.min_distance(b) + slack);
    const Rational rhs_hi = c * (be.max_distance(b) + slack);

    Verdict v = Verdict::Unknown;
    if (strict ? lhs_hi < rhs_lo : lhs_hi <= rhs_lo)
        v = Verdict::Holds;
    else if (strict ? lhs_lo >= rhs_hi : lhs_lo > rhs_hi)
        v = Verdict::Fails;
    return S2aCheck{n, v, a, b, lhs_hi, rhs_lo, ae, be};
}

}  // namespace

S2aCheck check_s2a_at(const ReferenceReal& alpha, const ReferenceReal& beta, const Rational& a, const Rational& b,
                      const Rational& c, std::size_t n, std::size_t guard)
{
    return compare_s2a(alpha, beta, a, b, c, n, guard, false);
}

S2aCheck check_s2a_strict_at(const ReferenceReal& alpha, const ReferenceReal& beta, const Rational& a,
                             const Rational& b, const Rational& c, std::size_t n, std::size_t guard)
{
    return compare_s2a(alpha, beta, a, b, c, n, guard, true);
}

std::vector<S2aCheck> check_s2a_prefix(const S2aWitness& w, const ReferenceReal& alpha, const ReferenceReal& beta,
                                       std::size_t last_index, std::size_t guard)
{
    std::vector<S2aCheck> out;
    out.reserve(last_index + 1);
    for (std::size_t n = 0; n <= last_index; ++n)
        out.push_back(check_s2a_at(alpha, beta, w.alpha_approx.term(n), w.beta_approx.term(n), w.c, n, guard));
    return out;
}

std::vector<LadderEntry> check_translation_limit(const SolovayWitness& w, const ReferenceReal& alpha,
                                                 const ReferenceReal& beta, const std::vector<Rational>& ladder,
                                                 Stage stage, std::size_t budget)
{
    const Interval ae = enclose_to(alpha, budget);
    std::vector<LadderEntry> out;
    out.reserve(ladder.size());
    for (const Rational& q : ladder) {
        if (left_cut_member(beta, q, budget) != CutMembership::InLeftCut)
            throw std::invalid_argument("ladder point not certified below beta: " + q.str());
        LadderEntry e{q, std::nullopt};
        if (auto g = w.g.eval_staged(q, stage))
            e.distance_bound = ae.max_distance(*g);
        out.push_back(std::move(e));
    }
    return out;
}

bool bounds_nonincreasing(const std::vector<LadderEntry>& entries)
{
    const Rational* prev = nullptr;
    for (const LadderEntry& e : entries) {
        if (!e.distance_bound)
            continue;
        if (prev && *e.distance_bound > *prev)
            return false;
        prev = &*e.distance_bound;
    }
    return true;
}

}  // namespace s2a
