/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/reference_real.hpp"

#include <stdexcept>

namespace s2a {

namespace {

// Smallest m with 2^-m <= p, for p > 0.
unsigned long exponent_for(const Rational& precision)
{
    if (precision.sign() <= 0)
        throw std::invalid_argument("precision must be positive");
    unsigned long m = 0;
    while (Rational::dyadic(m) > precision)
        ++m;
    return m;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Interval series_enclosure(const ExponentGenerator& gen, std::size_t terms)
{
    if (auto n = gen.size(); n && terms >= *n) {
        Rational sum(0);
        for (unsigned long e : gen.finite_exponents())
            sum += Rational::dyadic(e);
        return Interval::point(sum);
    }
    const Rational sum = gen.partial_sum(terms);
    // tail after `terms` terms is at most 2^-e_{terms-1}
    Rational tail = Rational::dyadic(*gen.at(terms - 1));
    return Interval(sum, sum + tail);
}

Interval scale_interval(const Interval& iv, const Rational& f)
{
    return Interval(iv.lo() * f, iv.hi() * f);
}

Interval average_interval(const Interval& a, const Interval& b)
{
    const Rational two(2);
    return Interval((a.lo() + b.lo()) / two, (a.hi() + b.hi()) / two);
}

Interval complement_interval(const Interval& iv)
{
    const Rational one(1);
    return Interval(one - iv.hi(), one - iv.lo());
}

}  // namespace

ExponentGenerator ExponentGenerator::affine(unsigned long slope, unsigned long offset)
{
    if (slope < 1 || offset < 1)
        throw std::invalid_argument("affine exponent generator needs s >= 1 and t >= 1");
    ExponentGenerator g;
    g.slope_ = slope;
    g.offset_ = offset;
    return g;
}

ExponentGenerator ExponentGenerator::finite(std::vector<unsigned long> exponents)
{
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] < 1)
            throw std::invalid_argument("series exponents must be >= 1");
        if (k > 0 && exponents[k] <= exponents[k - 1])
            throw std::invalid_argument("series exponents must be strictly increasing");
    }
    ExponentGenerator g;
    g.finite_ = std::move(exponents);
    return g;
}

std::optional<std::size_t> ExponentGenerator::size() const
{
    if (finite_)
        return finite_->size();
    return std::nullopt;
}

std::optional<unsigned long> ExponentGenerator::at(std::size_t k) const
{
    if (finite_) {
        if (k >= finite_->size())
            return std::nullopt;
        return (*finite_)[k];
    }
    return slope_ * k + offset_;
}

std::size_t ExponentGenerator::terms_for_precision(const Rational& precision) const
{
    const unsigned long m = exponent_for(precision);
    if (finite_) {
        for (std::size_t k = 0; k < finite_->size(); ++k)
            if ((*finite_)[k] >= m)
                return k + 1;
        return finite_->size();
    }
    if (offset_ >= m)
        return 1;
    return (m - offset_ + slope_ - 1) / slope_ + 1;
}

Rational ExponentGenerator::partial_sum(std::size_t terms) const
{
    if (finite_) {
        Rational sum(0);
        for (std::size_t k = 0; k < terms && k < finite_->size(); ++k)
            sum += Rational::dyadic((*finite_)[k]);
        return sum;
    }
    // 2^-t (1 - 2^-(s*K)) / (1 - 2^-s)
    const Rational one(1);
    return Rational::dyadic(offset_) * (one - Rational::dyadic(slope_ * terms)) / (one - Rational::dyadic(slope_));
}

ReferenceReal ReferenceReal::exact(const Rational& value)
{
    if (value < Rational(0) || value > Rational(1))
        throw std::invalid_argument("reference real outside [0, 1]: " + value.str());
    return ReferenceReal(ExactRational{value});
}

ReferenceReal ReferenceReal::dyadic_series(ExponentGenerator exponents)
{
    return ReferenceReal(DyadicSeries{std::move(exponents)});
}

ReferenceReal ReferenceReal::scale(const ReferenceReal& inner, const Rational& factor)
{
    if (factor.sign() <= 0 || factor > Rational(1))
        throw std::invalid_argument("scale factor outside (0, 1]: " + factor.str());
    return ReferenceReal(Scale{std::make_shared<const ReferenceReal>(inner), factor});
}

ReferenceReal ReferenceReal::average(const ReferenceReal& left, const ReferenceReal& right)
{
    return ReferenceReal(
        Average{std::make_shared<const ReferenceReal>(left), std::make_shared<const ReferenceReal>(right)});
}

ReferenceReal ReferenceReal::complement(const ReferenceReal& inner)
{
    return ReferenceReal(Complement{std::make_shared<const ReferenceReal>(inner)});
}

Interval ReferenceReal::enclose(const Rational& precision) const
{
    if (precision.sign() <= 0)
        throw std::invalid_argument("precision must be positive");
    return std::visit(
        overloaded{
            [](const ExactRational& e) { return Interval::point(e.value); },
            [&](const DyadicSeries& s) {
                return series_enclosure(s.exponents, s.exponents.terms_for_precision(precision));
            },
            [&](const Scale& s) { return scale_interval(s.inner->enclose(precision), s.factor); },
            [&](const Average& a) {
                return average_interval(a.left->enclose(precision), a.right->enclose(precision));
            },
            [&](const Complement& c) { return complement_interval(c.inner->enclose(precision)); },
        },
        *node_);
}

Interval ReferenceReal::enclose_level(std::size_t level) const
{
    if (level < 1)
        throw std::invalid_argument("refinement level must be >= 1");
    return std::visit(
        overloaded{
            [](const ExactRational& e) { return Interval::point(e.value); },
            [&](const DyadicSeries& s) {
                if (s.exponents.size() == std::size_t{0})
                    return Interval::point(Rational(0));
                return series_enclosure(s.exponents, level);
            },
            [&](const Scale& s) { return scale_interval(s.inner->enclose_level(level), s.factor); },
            [&](const Average& a) {
                return average_interval(a.left->enclose_level(level), a.right->enclose_level(level));
            },
            [&](const Complement& c) { return complement_interval(c.inner->enclose_level(level)); },
        },
        *node_);
}

CutMembership left_cut_member(const ReferenceReal& r, const Rational& q, std::size_t budget)
{
    for (std::size_t level = 1; level <= budget; ++level) {
        const Interval iv = r.enclose_level(level);
        if (q < iv.lo())
            return CutMembership::InLeftCut;
        if (q >= iv.hi())
            return CutMembership::NotInLeftCut;
    }
    return CutMembership::Unknown;
}

const char* to_string(CutMembership m)
{
    switch (m) {
    case CutMembership::InLeftCut:
        return "InLeftCut";
    case CutMembership::NotInLeftCut:
        return "NotInLeftCut";
    case CutMembership::Unknown:
        return "Unknown";
    }
    return "?";
}

bool certified_in_open_unit(const ReferenceReal& r, std::size_t budget)
{
    for (std::size_t level = 1; level <= budget; ++level) {
        const Interval iv = r.enclose_level(level);
        if (iv.lo() > Rational(0) && iv.hi() < Rational(1))
            return true;
    }
    return false;
}

}  // namespace s2a
