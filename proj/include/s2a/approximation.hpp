/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "s2a/rational.hpp"
#include "s2a/reference_real.hpp"

namespace s2a {

enum class ApproxKind { General, LeftCE, RightCE };

const char* to_string(ApproxKind k);

/// Declared rate of convergence: |term(n) - limit| <= scale * 2^(-rate * n).
struct ConvergenceModulus {
    Rational scale;
    unsigned long rate = 1;

    Rational bound(std::size_t n) const { return scale * Rational::dyadic(rate * n); }
};

/// Declarative, total term generators. Every node yields a rational for every index.
struct TermGenerator {
    struct Constant {
        Rational value;
    };
    /// u - v * sigma^n * 2^(-w*n), sigma = -1 when alternating, else 1.
    struct AffineDyadic {
        Rational u;
        Rational v;
        unsigned long w = 1;
        bool alternating = false;
    };
    /// values[n] for n < size, tail afterwards.
    struct Table {
        std::vector<Rational> values;
        Rational tail;
    };
    /// sum_{k <= n} 2^-e_k.
    struct PartialSums {
        ExponentGenerator exponents;
    };
    /// Endpoints of enclose_level(n + 1).
    struct LowerEnclosure {
        ReferenceReal real;
    };
    struct UpperEnclosure {
        ReferenceReal real;
    };
    struct Complement {
        std::shared_ptr<const TermGenerator> inner;
    };
    struct PrefixMax {
        std::shared_ptr<const TermGenerator> inner;
    };
    struct Prepend {
        Rational head;
        std::shared_ptr<const TermGenerator> inner;
    };

    std::variant<Constant, AffineDyadic, Table, PartialSums, LowerEnclosure, UpperEnclosure, Complement, PrefixMax,
                 Prepend>
        node;

    Rational term(std::size_t n) const;
};

/// A computable approximation: a total rational sequence plus metadata that is
/// checked on prefixes, never trusted.
class Approximation {
public:
    Approximation(TermGenerator generator, ApproxKind kind, std::optional<ReferenceReal> limit = std::nullopt,
                  std::optional<ConvergenceModulus> modulus = std::nullopt);

    static Approximation constant(const Rational& value, ApproxKind kind = ApproxKind::General);
    static Approximation affine_dyadic(const Rational& u, const Rational& v, unsigned long w, bool alternating,
                                       ApproxKind kind = ApproxKind::General);
    /// Throws std::invalid_argument on an empty table.
    static Approximation table(std::vector<Rational> values, std::optional<Rational> tail = std::nullopt,
                               ApproxKind kind = ApproxKind::General);
    static Approximation partial_sums(ExponentGenerator exponents);

    Rational term(std::size_t n) const { return generator_->term(n); }
    std::vector<Rational> prefix(std::size_t count) const;

    ApproxKind kind() const { return kind_; }
    const std::optional<ReferenceReal>& limit() const { return limit_; }
    const std::optional<ConvergenceModulus>& modulus() const { return modulus_; }
    const TermGenerator& generator() const { return *generator_; }
    std::shared_ptr<const TermGenerator> generator_ptr() const { return generator_; }

    Approximation with_limit(std::optional<ReferenceReal> limit) const;
    Approximation with_kind(ApproxKind kind) const;
    Approximation with_modulus(std::optional<ConvergenceModulus> modulus) const;

private:
    std::shared_ptr<const TermGenerator> generator_;
    ApproxKind kind_;
    std::optional<ReferenceReal> limit_;
    std::optional<ConvergenceModulus> modulus_;
};

inline Rational evaluate(const Approximation& a, std::size_t n)
{
    return a.term(n);
}

/// Running maximum. Claims LeftCE and keeps the declared limit, which is
/// only correct when no term exceeds the limit.
Approximation prefix_max(const Approximation& a);

/// 1 - a_n. Flips LeftCE and RightCE; the limit becomes its complement.
Approximation complement(const Approximation& a);

/// head, a_0, a_1, ... The monotonicity claim survives only if head is
/// compatible with a_0.
Approximation prepend(const Rational& head, const Approximation& a);

struct KindCheck {
    bool consistent = true;
    std::size_t violation_at = 0;  ///< first index n with a bad step (n-1, n)

    static KindCheck ok() { return {}; }
    static KindCheck violation(std::size_t n) { return {false, n}; }
    friend bool operator==(const KindCheck&, const KindCheck&) = default;
};

/// Checks the kind claim's monotonicity on terms 0..N.
KindCheck check_kind_prefix(const Approximation& a, std::size_t last_index);
KindCheck check_kind_prefix(const Approximation& a, ApproxKind claim, std::size_t last_index);

/// First index in 0..N whose term leaves [0, 1], if any.
std::optional<std::size_t> find_out_of_unit(const Approximation& a, std::size_t last_index);

}  // namespace s2a
