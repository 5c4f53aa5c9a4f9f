/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "s2a/approximation.hpp"
#include "s2a/rational.hpp"
#include "s2a/reference_real.hpp"

namespace s2a {

using Stage = std::uint64_t;

/// Injective enumeration j -> q_j of dyadic inputs with q_0 = 0.
///
/// The canonical order is 0, 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, ...; an
/// explicit prefix may be listed first, after which the canonical order
/// resumes with the prefix points skipped.
class InputEnumeration {
public:
    static InputEnumeration canonical() { return InputEnumeration({}); }
    /// Throws std::invalid_argument unless prefix[0] == 0 and the points are
    /// distinct and in [0, 1).
    static InputEnumeration with_prefix(std::vector<Rational> prefix);

    Rational point(std::size_t j) const;
    /// Index j with q_j == q; nullopt when q is never enumerated (or its
    /// index does not fit in 64 bits).
    std::optional<std::size_t> index_of(const Rational& q) const;

    const std::vector<Rational>& prefix() const { return prefix_; }

    static Rational canonical_point(std::size_t j);
    static std::optional<std::size_t> canonical_index(const Rational& q);

private:
    explicit InputEnumeration(std::vector<Rational> prefix);

    std::vector<Rational> prefix_;
    std::vector<std::size_t> skipped_;  // sorted canonical indices of dyadic prefix points
};

/// s_j = slope * j + offset, with finitely many overrides (nullopt = never).
class StageSchedule {
public:
    StageSchedule(std::uint64_t slope, std::uint64_t offset, std::map<std::size_t, std::optional<Stage>> overrides = {});

    /// Saturates at the maximum Stage instead of overflowing.
    std::optional<Stage> stage_of(std::size_t j) const;

    std::uint64_t slope() const { return slope_; }
    std::uint64_t offset() const { return offset_; }
    const std::map<std::size_t, std::optional<Stage>>& overrides() const { return overrides_; }

private:
    std::uint64_t slope_;
    std::uint64_t offset_;
    std::map<std::size_t, std::optional<Stage>> overrides_;
};

/// g(q) = table[q] when listed, else u * q + v.
class ValueRule {
public:
    /// Throws std::invalid_argument if some value can leave [0, 1).
    ValueRule(Rational u, Rational v, std::map<Rational, Rational> table = {});

    Rational operator()(const Rational& q) const;

    const Rational& slope() const { return u_; }
    const Rational& offset() const { return v_; }
    const std::map<Rational, Rational>& table() const { return table_; }

private:
    Rational u_;
    Rational v_;
    std::map<Rational, Rational> table_;
};

struct DomainEntry {
    std::size_t index = 0;
    Rational point;
    Rational value;

    friend bool operator==(const DomainEntry&, const DomainEntry&) = default;
};

/// A partial function observed through stages: g(q_j) becomes defined at
/// stage s_j and never changes afterwards.
class StagedPartialFunction {
public:
    /// Throws std::invalid_argument unless q_0 = 0 is defined at a finite stage.
    StagedPartialFunction(InputEnumeration inputs, StageSchedule schedule, ValueRule rule);

    const InputEnumeration& inputs() const { return inputs_; }
    const StageSchedule& schedule() const { return schedule_; }
    const ValueRule& rule() const { return rule_; }

    /// Stage at which g(q) becomes defined; nullopt if never.
    std::optional<Stage> definition_stage(const Rational& q) const;

    /// g(q) if defined by `stage`, nullopt (pending) otherwise.
    std::optional<Rational> eval_staged(const Rational& q, Stage stage) const;

    /// Entries j <= stage with s_j <= stage, ascending in j.
    std::vector<DomainEntry> enumerate_domain(Stage stage) const;

private:
    InputEnumeration inputs_;
    StageSchedule schedule_;
    ValueRule rule_;
};

struct SolovayWitness {
    StagedPartialFunction g;
    Rational c;

    /// Throws std::invalid_argument unless c > 0.
    SolovayWitness(StagedPartialFunction g, Rational c);
};

struct S2aWitness {
    Approximation alpha_approx;
    Approximation beta_approx;
    Rational c;
};

enum class Verdict { Holds, Fails, Unknown, Exhausted };
const char* to_string(Verdict v);

enum class SolovayVerdict { Holds, FailsLower, FailsUpper, GUndefined, Unknown };
const char* to_string(SolovayVerdict v);

struct SolovayCheck {
    SolovayVerdict verdict = SolovayVerdict::Unknown;
    Rational q;
    std::optional<Rational> g_value;
    std::optional<Interval> alpha_enclosure;
    std::optional<Interval> beta_enclosure;
};

/// Certifies 0 < alpha - g(q) < c (beta - q) with enclosures of width
/// <= 2^-budget. Expects q < beta to be certified by the caller.
SolovayCheck check_solovay_at(const SolovayWitness& w, const ReferenceReal& alpha, const ReferenceReal& beta,
                              const Rational& q, Stage stage, std::size_t budget);

/// Result of comparing |alpha - a| against c (|beta - b| + 2^-n).
struct S2aCheck {
    std::size_t n = 0;
    Verdict verdict = Verdict::Unknown;
    Rational a;
    Rational b;
    Rational lhs_upper;  ///< max of |alpha - a| over the alpha enclosure
    Rational rhs_lower;  ///< c (min |beta - b| over the beta enclosure + 2^-n)
    Interval alpha_enclosure = Interval::point(Rational(0));
    Interval beta_enclosure = Interval::point(Rational(0));
};

/// Non-strict form: Holds iff lhs <= rhs is certified, Fails iff lhs > rhs is.
/// Enclosure width is 2^-(n + guard).
S2aCheck check_s2a_at(const ReferenceReal& alpha, const ReferenceReal& beta, const Rational& a, const Rational& b,
                      const Rational& c, std::size_t n, std::size_t guard);

/// Strict form: Holds iff lhs < rhs is certified, Fails iff lhs >= rhs is.
S2aCheck check_s2a_strict_at(const ReferenceReal& alpha, const ReferenceReal& beta, const Rational& a,
                             const Rational& b, const Rational& c, std::size_t n, std::size_t guard);

/// Non-strict check for n = 0..N.
std::vector<S2aCheck> check_s2a_prefix(const S2aWitness& w, const ReferenceReal& alpha, const ReferenceReal& beta,
                                       std::size_t last_index, std::size_t guard);

struct LadderEntry {
    Rational q;
    std::optional<Rational> distance_bound;  ///< nullopt: g(q) still undefined
};

/// Upper bounds on |alpha - g(q)| along a ladder of points below beta, using
/// an alpha enclosure of width <= 2^-budget. Throws std::invalid_argument if
/// a ladder point is not certified below beta within `budget` rounds.
std::vector<LadderEntry> check_translation_limit(const SolovayWitness& w, const ReferenceReal& alpha,
                                                 const ReferenceReal& beta, const std::vector<Rational>& ladder,
                                                 Stage stage, std::size_t budget);

/// True when the defined bounds never increase along the ladder.
bool bounds_nonincreasing(const std::vector<LadderEntry>& entries);

}  // namespace s2a
