/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/approximation.hpp"

#include <stdexcept>

namespace s2a {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ApproxKind flipped(ApproxKind k)
{
    switch (k) {
    case ApproxKind::LeftCE:
        return ApproxKind::RightCE;
    case ApproxKind::RightCE:
        return ApproxKind::LeftCE;
    case ApproxKind::General:
        break;
    }
    return ApproxKind::General;
}

}  // namespace

const char* to_string(ApproxKind k)
{
    switch (k) {
    case ApproxKind::General:
        return "General";
    case ApproxKind::LeftCE:
        return "LeftCE";
    case ApproxKind::RightCE:
        return "RightCE";
    }
    return "?";
}

Rational TermGenerator::term(std::size_t n) const
{
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value; },
            [n](const AffineDyadic& a) {
                Rational t = a.v * Rational::dyadic(a.w * n);
                if (a.alternating && n % 2 == 1)
                    t = -t;
                return a.u - t;
            },
            [n](const Table& t) { return n < t.values.size() ? t.values[n] : t.tail; },
            [n](const PartialSums& p) { return p.exponents.partial_sum(n + 1); },
            [n](const LowerEnclosure& e) { return e.real.enclose_level(n + 1).lo(); },
            [n](const UpperEnclosure& e) { return e.real.enclose_level(n + 1).hi(); },
            [n](const Complement& c) { return Rational(1) - c.inner->term(n); },
            [n](const PrefixMax& p) {
                Rational best = p.inner->term(0);
                for (std::size_t m = 1; m <= n; ++m)
                    best = max(best, p.inner->term(m));
                return best;
            },
            [n](const Prepend& p) { return n == 0 ? p.head : p.inner->term(n - 1); },
        },
        node);
}

Approximation::Approximation(TermGenerator generator, ApproxKind kind, std::optional<ReferenceReal> limit,
                             std::optional<ConvergenceModulus> modulus)
    : generator_(std::make_shared<const TermGenerator>(std::move(generator))),
      kind_(kind),
      limit_(std::move(limit)),
      modulus_(std::move(modulus))
{
}

Approximation Approximation::constant(const Rational& value, ApproxKind kind)
{
    return Approximation(TermGenerator{TermGenerator::Constant{value}}, kind);
}

Approximation Approximation::affine_dyadic(const Rational& u, const Rational& v, unsigned long w, bool alternating,
                                           ApproxKind kind)
{
    return Approximation(TermGenerator{TermGenerator::AffineDyadic{u, v, w, alternating}}, kind);
}

Approximation Approximation::table(std::vector<Rational> values, std::optional<Rational> tail, ApproxKind kind)
{
    if (values.empty())
        throw std::invalid_argument("table approximation needs at least one value");
    Rational t = tail ? *tail : values.back();
    return Approximation(TermGenerator{TermGenerator::Table{std::move(values), std::move(t)}}, kind);
}

Approximation Approximation::partial_sums(ExponentGenerator exponents)
{
    return Approximation(TermGenerator{TermGenerator::PartialSums{std::move(exponents)}}, ApproxKind::LeftCE);
}

std::vector<Rational> Approximation::prefix(std::size_t count) const
{
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        out.push_back(term(n));
    return out;
}

Approximation Approximation::with_limit(std::optional<ReferenceReal> limit) const
{
    Approximation a = *this;
    a.limit_ = std::move(limit);
    return a;
}

Approximation Approximation::with_kind(ApproxKind kind) const
{
    Approximation a = *this;
    a.kind_ = kind;
    return a;
}

Approximation Approximation::with_modulus(std::optional<ConvergenceModulus> modulus) const
{
    Approximation a = *this;
    a.modulus_ = std::move(modulus);
    return a;
}

Approximation prefix_max(const Approximation& a)
{
    return Approximation(TermGenerator{TermGenerator::PrefixMax{a.generator_ptr()}}, ApproxKind::LeftCE, a.limit());
}

Approximation complement(const Approximation& a)
{
    std::optional<ReferenceReal> limit;
    if (a.limit())
        limit = ReferenceReal::complement(*a.limit());
    std::optional<ConvergenceModulus> modulus = a.modulus();  // |1-x - (1-L)| = |x - L|
    return Approximation(TermGenerator{TermGenerator::Complement{a.generator_ptr()}}, flipped(a.kind()),
                         std::move(limit), std::move(modulus));
}

Approximation prepend(const Rational& head, const Approximation& a)
{
    ApproxKind kind = a.kind();
    const Rational first = a.term(0);
    if ((kind == ApproxKind::LeftCE && head > first) || (kind == ApproxKind::RightCE && head < first))
        kind = ApproxKind::General;
    return Approximation(TermGenerator{TermGenerator::Prepend{head, a.generator_ptr()}}, kind, a.limit());
}

KindCheck check_kind_prefix(const Approximation& a, std::size_t last_index)
{
    return check_kind_prefix(a, a.kind(), last_index);
}

KindCheck check_kind_prefix(const Approximation& a, ApproxKind claim, std::size_t last_index)
{
    if (claim == ApproxKind::General)
        return KindCheck::ok();
    Rational prev = a.term(0);
    for (std::size_t n = 1; n <= last_index; ++n) {
        Rational cur = a.term(n);
        const bool bad = claim == ApproxKind::LeftCE ? cur < prev : cur > prev;
        if (bad)
            return KindCheck::violation(n);
        prev = std::move(cur);
    }
    return KindCheck::ok();
}

std::optional<std::size_t> find_out_of_unit(const Approximation& a, std::size_t last_index)
{
    for (std::size_t n = 0; n <= last_index; ++n) {
        const Rational t = a.term(n);
        if (t < Rational(0) || t > Rational(1))
            return n;
    }
    return std::nullopt;
}

}  // namespace s2a
