/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "s2a/rational.hpp"

namespace s2a {

/// Strictly increasing positive exponents e_0 < e_1 < ...: either the affine
/// family e_k = s*k + t (s, t >= 1) or an explicit finite list.
class ExponentGenerator {
public:
    static ExponentGenerator affine(unsigned long slope, unsigned long offset);
    static ExponentGenerator finite(std::vector<unsigned long> exponents);

    bool is_affine() const { return !finite_.has_value(); }
    unsigned long slope() const { return slope_; }
    unsigned long offset() const { return offset_; }
    const std::vector<unsigned long>& finite_exponents() const { return *finite_; }

    /// Number of exponents, or nullopt for the infinite affine family.
    std::optional<std::size_t> size() const;
    /// e_k, or nullopt past the end of a finite list.
    std::optional<unsigned long> at(std::size_t k) const;

    /// Smallest term count K >= 1 with 2^-e_{K-1} <= precision, capped at the
    /// list length for finite lists.
    std::size_t terms_for_precision(const Rational& precision) const;

    /// sum_{k < terms} 2^-e_k (closed form for the affine family).
    Rational partial_sum(std::size_t terms) const;

    friend bool operator==(const ExponentGenerator&, const ExponentGenerator&) = default;

private:
    ExponentGenerator() = default;

    unsigned long slope_ = 0;
    unsigned long offset_ = 0;
    std::optional<std::vector<unsigned long>> finite_;
};

/// A real in [0, 1] given by a constructor expression. Immutable; copies share
/// the expression tree.
class ReferenceReal {
public:
    struct ExactRational {
        Rational value;
    };
    struct DyadicSeries {
        ExponentGenerator exponents;
    };
    struct Scale {
        std::shared_ptr<const ReferenceReal> inner;
        Rational factor;
    };
    struct Average {
        std::shared_ptr<const ReferenceReal> left;
        std::shared_ptr<const ReferenceReal> right;
    };
    struct Complement {
        std::shared_ptr<const ReferenceReal> inner;
    };
    using Node = std::variant<ExactRational, DyadicSeries, Scale, Average, Complement>;

    /// Throws std::invalid_argument unless value is in [0, 1].
    static ReferenceReal exact(const Rational& value);
    static ReferenceReal dyadic_series(ExponentGenerator exponents);
    /// Throws std::invalid_argument unless factor is in (0, 1].
    static ReferenceReal scale(const ReferenceReal& inner, const Rational& factor);
    static ReferenceReal average(const ReferenceReal& left, const ReferenceReal& right);
    static ReferenceReal complement(const ReferenceReal& inner);

    const Node& node() const { return *node_; }

    /// Enclosure of width <= precision. Smaller precisions give nested enclosures.
    Interval enclose(const Rational& precision) const;

    /// Enclosure after `level` refinement rounds (level >= 1): every series
    /// leaf uses `level` terms. Nested in level.
    Interval enclose_level(std::size_t level) const;

private:
    explicit ReferenceReal(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

    std::shared_ptr<const Node> node_;
};

enum class CutMembership { InLeftCut, NotInLeftCut, Unknown };

/// Decides q < value(r) using at most `budget` refinement rounds.
CutMembership left_cut_member(const ReferenceReal& r, const Rational& q, std::size_t budget);

const char* to_string(CutMembership m);

/// Certifies 0 < value(r) < 1 within `budget` refinement rounds.
bool certified_in_open_unit(const ReferenceReal& r, std::size_t budget);

}  // namespace s2a
