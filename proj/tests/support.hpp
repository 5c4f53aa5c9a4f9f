/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "s2a/approximation.hpp"
#include "s2a/harness.hpp"
#include "s2a/rational.hpp"
#include "s2a/reference_real.hpp"
#include "s2a/witness.hpp"

namespace s2a::test {

/// Fixed-seed generator for property tests. Draws are plain modulo
/// reductions so sequences do not depend on distribution implementations.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

    /// p/q in [0, 1] with q <= max_den.
    Rational unit(long max_den = 97)
    {
        const long q = static_cast<long>(between(1, static_cast<std::uint64_t>(max_den)));
        const long p = static_cast<long>(between(0, static_cast<std::uint64_t>(q)));
        return Rational(p, q);
    }

    /// Signed rational with small numerator and denominator.
    Rational any(long bound = 1000)
    {
        const long q = static_cast<long>(between(1, static_cast<std::uint64_t>(bound)));
        const long p = static_cast<long>(between(0, 2 * static_cast<std::uint64_t>(bound))) - bound;
        return Rational(p, q);
    }

    /// k / 2^level with k < 2^level.
    Rational dyadic(unsigned level)
    {
        const long d = 1L << level;
        return Rational(static_cast<long>(below(static_cast<std::uint64_t>(d))), d);
    }

    ExponentGenerator exponents()
    {
        if (coin())
            return ExponentGenerator::affine(between(1, 4), between(1, 6));
        std::vector<unsigned long> e;
        unsigned long next = between(1, 4);
        const std::size_t count = between(1, 8);
        for (std::size_t k = 0; k < count; ++k) {
            e.push_back(next);
            next += between(1, 5);
        }
        return ExponentGenerator::finite(std::move(e));
    }

    ReferenceReal real(unsigned depth)
    {
        const std::uint64_t pick = depth == 0 ? below(2) : below(5);
        switch (pick) {
        case 0:
            return ReferenceReal::exact(unit());
        case 1:
            return ReferenceReal::dyadic_series(exponents());
        case 2: {
            Rational f = unit();
            if (f.is_zero())
                f = Rational(1, 2);
            return ReferenceReal::scale(real(depth - 1), f);
        }
        case 3:
            return ReferenceReal::average(real(depth - 1), real(depth - 1));
        default:
            return ReferenceReal::complement(real(depth - 1));
        }
    }

private:
    std::mt19937_64 rng_;
};

/// Exact value of a reference real, computed without the library's
/// enclosure code: affine series use the closed-form geometric limit
/// 2^-t / (1 - 2^-s), finite series an explicit loop.
inline Rational exact_value(const ReferenceReal& r)
{
    struct Visitor {
        Rational operator()(const ReferenceReal::ExactRational& e) const { return e.value; }
        Rational operator()(const ReferenceReal::DyadicSeries& s) const
        {
            const ExponentGenerator& g = s.exponents;
            if (g.is_affine()) {
                mpq_class num(1);
                num /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(g.offset()));
                mpq_class ratio(1);
                ratio /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(g.slope()));
                return Rational(mpq_class(num / (1 - ratio)));
            }
            mpq_class sum(0);
            for (unsigned long e : g.finite_exponents())
                sum += mpq_class(1, 1) / mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(e));
            sum.canonicalize();
            return Rational(sum);
        }
        Rational operator()(const ReferenceReal::Scale& s) const { return exact_value(*s.inner) * s.factor; }
        Rational operator()(const ReferenceReal::Average& a) const
        {
            return (exact_value(*a.left) + exact_value(*a.right)) / Rational(2);
        }
        Rational operator()(const ReferenceReal::Complement& c) const { return Rational(1) - exact_value(*c.inner); }
    };
    return std::visit(Visitor{}, r.node());
}

/// sum_{k < terms} 2^-e_k by direct summation.
inline Rational slow_partial_sum(const ExponentGenerator& g, std::size_t terms)
{
    mpq_class sum(0);
    for (std::size_t k = 0; k < terms; ++k) {
        const auto e = g.at(k);
        if (!e)
            break;
        sum += mpq_class(1) / mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(*e));
    }
    sum.canonicalize();
    return Rational(sum);
}

inline SolovayWitness affine_witness(const Rational& u, const Rational& v, const Rational& c, std::uint64_t slope = 0,
                                     std::uint64_t offset = 0,
                                     std::map<std::size_t, std::optional<Stage>> overrides = {},
                                     InputEnumeration inputs = InputEnumeration::canonical())
{
    return SolovayWitness(
        StagedPartialFunction(std::move(inputs), StageSchedule(slope, offset, std::move(overrides)), ValueRule(u, v)),
        c);
}

/// Clause-by-clause evaluation of R_n straight from its definition: each
/// clause is decided on its own and the first false one is reported
/// (0 when all hold).
inline int requirement_first_failure(std::size_t n, const Rational& b, const Rational& c,
                                     const std::vector<Rational>& q, const std::vector<Rational>& g)
{
    const Rational delta = Rational::dyadic(n + 1);
    const bool long_enough = q.size() >= 3;
    if (!long_enough)
        return 1;
    const Rational& top = q.back();
    const bool sandwiched = b - delta < top && top < b;
    bool sorted = q.front() == Rational(0);
    bool gaps = true;
    bool distances = true;
    for (std::size_t k = 1; k < q.size(); ++k) {
        sorted = sorted && q[k - 1] < q[k];
        gaps = gaps && q[k] - q[k - 1] < delta;
    }
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        const Rational rise = g.back() - g[k];
        const Rational cap = c * (top - q[k]) + c * delta / Rational(2);
        distances = distances && Rational(0) < rise && rise < cap;
    }
    const bool clauses[] = {long_enough, sandwiched, sorted, gaps, distances};
    for (int k = 0; k < 5; ++k)
        if (!clauses[k])
            return k + 1;
    return 0;
}

/// alpha = 1/4, beta = 1/2, g(q) = q/2, c = 1, b_n = 1/2 - 2^(-n-1).
inline Scenario linear_scenario()
{
    Scenario s;
    s.name = "linear";
    s.alpha = ReferenceReal::exact(Rational(1, 4));
    s.beta = ReferenceReal::exact(Rational(1, 2));
    s.witness = affine_witness(Rational(1, 2), Rational(0), Rational(1));
    s.beta_approx = Approximation::affine_dyadic(Rational(1, 2), Rational(1, 2), 1, false, ApproxKind::LeftCE)
                        .with_limit(s.beta);
    return s;
}

/// Same witness with beta = 1/8 so depth 12 fits the default budget.
inline Scenario small_linear_scenario()
{
    Scenario s;
    s.name = "small-linear";
    s.alpha = ReferenceReal::exact(Rational(1, 16));
    s.beta = ReferenceReal::exact(Rational(1, 8));
    s.witness = affine_witness(Rational(1, 2), Rational(0), Rational(1));
    s.beta_approx = Approximation::affine_dyadic(Rational(1, 8), Rational(1, 8), 1, false, ApproxKind::LeftCE)
                        .with_limit(s.beta);
    return s;
}

}  // namespace s2a::test
