/* SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "s2a/construction.hpp"
#include "s2a/witness.hpp"
#include "support.hpp"

using namespace s2a;
using s2a::test::affine_witness;
using s2a::test::Gen;

namespace {

const ReferenceReal kQuarter = ReferenceReal::exact(Rational(1, 4));
const ReferenceReal kHalf = ReferenceReal::exact(Rational(1, 2));

}  // namespace

TEST(Enumeration, CanonicalDyadicOrder)
{
    const std::vector<Rational> expected{Rational(0),    Rational(1, 2), Rational(1, 4), Rational(3, 4),
                                         Rational(1, 8), Rational(3, 8), Rational(5, 8), Rational(7, 8),
                                         Rational(1, 16)};
    const InputEnumeration e = InputEnumeration::canonical();
    for (std::size_t j = 0; j < expected.size(); ++j) {
        EXPECT_EQ(e.point(j), expected[j]);
        EXPECT_EQ(e.index_of(expected[j]), std::optional<std::size_t>(j));
    }
    EXPECT_EQ(e.index_of(Rational(1, 3)), std::nullopt);
    EXPECT_EQ(e.index_of(Rational(1)), std::nullopt);
}

TEST(Enumeration, PrefixThenCanonicalWithoutRepeats)
{
    const InputEnumeration e = InputEnumeration::with_prefix({Rational(0), Rational(3, 8), Rational(1, 3)});
    EXPECT_EQ(e.point(1), Rational(3, 8));
    EXPECT_EQ(e.point(2), Rational(1, 3));
    EXPECT_EQ(e.point(3), Rational(1, 2));
    EXPECT_EQ(e.point(4), Rational(1, 4));
    EXPECT_EQ(e.point(5), Rational(3, 4));
    EXPECT_EQ(e.point(6), Rational(1, 8));
    EXPECT_EQ(e.point(7), Rational(5, 8));
    EXPECT_EQ(e.index_of(Rational(5, 8)), std::optional<std::size_t>(7));
    EXPECT_EQ(e.index_of(Rational(1, 3)), std::optional<std::size_t>(2));

    EXPECT_THROW(InputEnumeration::with_prefix({Rational(1, 2)}), std::invalid_argument);
    EXPECT_THROW(InputEnumeration::with_prefix({Rational(0), Rational(0)}), std::invalid_argument);
    EXPECT_THROW(InputEnumeration::with_prefix({Rational(0), Rational(1)}), std::invalid_argument);
}

TEST(EnumerationProperty, PrefixedEnumerationIsInjective)
{
    Gen gen(41);
    for (int k = 0; k < 40; ++k) {
        std::vector<Rational> prefix{Rational(0)};
        const std::size_t len = gen.between(0, 6);
        while (prefix.size() <= len) {
            const Rational q = gen.dyadic(static_cast<unsigned>(gen.between(1, 5)));
            if (std::find(prefix.begin(), prefix.end(), q) == prefix.end())
                prefix.push_back(q);
        }
        const InputEnumeration e = InputEnumeration::with_prefix(prefix);
        std::set<Rational> seen;
        for (std::size_t j = 0; j < 200; ++j) {
            const Rational q = e.point(j);
            EXPECT_TRUE(seen.insert(q).second) << q;
            EXPECT_EQ(e.index_of(q), std::optional<std::size_t>(j));
        }
    }
}

TEST(EvalStaged, Examples)
{
    const SolovayWitness w = affine_witness(Rational(1, 2), Rational(0), Rational(1));
    EXPECT_EQ(w.g.eval_staged(Rational(1, 4), 0), std::optional<Rational>(Rational(1, 8)));

    const SolovayWitness late = affine_witness(Rational(1, 2), Rational(0), Rational(1), 0, 0, {{5, 100}});
    const Rational q5 = InputEnumeration::canonical().point(5);
    EXPECT_EQ(late.g.eval_staged(q5, 50), std::nullopt);
    EXPECT_EQ(late.g.eval_staged(q5, 100), std::optional<Rational>(q5 / Rational(2)));
}

TEST(EvalStaged, NeverAndOutsideEnumeration)
{
    const SolovayWitness w = affine_witness(Rational(1, 2), Rational(0), Rational(1), 0, 0, {{1, std::nullopt}});
    EXPECT_EQ(w.g.eval_staged(Rational(1, 2), 1000000), std::nullopt);
    EXPECT_EQ(w.g.definition_stage(Rational(1, 2)), std::nullopt);
    EXPECT_EQ(w.g.eval_staged(Rational(1, 3), 1000000), std::nullopt);
}

TEST(EvalStagedProperty, DefinedValuesPersist)
{
    Gen gen(42);
    const SolovayWitness w = affine_witness(Rational(1, 3), Rational(1, 5), Rational(1), 3, 7);
    for (int k = 0; k < 500; ++k) {
        const Rational q = gen.dyadic(static_cast<unsigned>(gen.between(1, 7)));
        const Stage s = gen.below(600);
        const auto now = w.g.eval_staged(q, s);
        const auto later = w.g.eval_staged(q, s + gen.below(600));
        if (now) {
            ASSERT_TRUE(later.has_value());
            EXPECT_EQ(*now, *later);
        }
    }
}

TEST(EnumerateDomain, Examples)
{
    const SolovayWitness now = affine_witness(Rational(1, 2), Rational(0), Rational(1));
    const auto d0 = now.g.enumerate_domain(0);
    ASSERT_EQ(d0.size(), 1u);
    EXPECT_EQ(d0[0], (DomainEntry{0, Rational(0), Rational(0)}));
    EXPECT_EQ(now.g.enumerate_domain(3).size(), 4u);

    const SolovayWitness slow = affine_witness(Rational(1, 2), Rational(0), Rational(1), 2, 0);
    const auto d4 = slow.g.enumerate_domain(4);
    ASSERT_EQ(d4.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k)
        EXPECT_EQ(d4[k].index, k);
}

TEST(Witness, RejectsBadInputs)
{
    EXPECT_THROW(affine_witness(Rational(1, 2), Rational(0), Rational(0)), std::invalid_argument);
    EXPECT_THROW(ValueRule(Rational(1), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(ValueRule(Rational(1, 2), Rational(-1, 8)), std::invalid_argument);
    EXPECT_THROW(ValueRule(Rational(1, 2), Rational(0), {{Rational(1, 2), Rational(1)}}), std::invalid_argument);
    EXPECT_THROW(affine_witness(Rational(1, 2), Rational(0), Rational(1), 0, 0, {{0, std::nullopt}}),
                 std::invalid_argument);
}

TEST(CheckSolovayAt, Examples)
{
    EXPECT_EQ(check_solovay_at(affine_witness(Rational(1, 2), Rational(0), Rational(1)), kQuarter, kHalf,
                               Rational(1, 4), 0, 10)
                  .verdict,
              SolovayVerdict::Holds);
    EXPECT_EQ(check_solovay_at(affine_witness(Rational(1), Rational(0), Rational(1)), kQuarter, kHalf, Rational(3, 8),
                               0, 10)
                  .verdict,
              SolovayVerdict::FailsLower);
    EXPECT_EQ(check_solovay_at(affine_witness(Rational(1, 2), Rational(0), Rational(1, 4)), kQuarter, kHalf,
                               Rational(0), 0, 10)
                  .verdict,
              SolovayVerdict::FailsUpper);
}

TEST(CheckSolovayAt, PendingAndUnseparated)
{
    const SolovayWitness late = affine_witness(Rational(1, 2), Rational(0), Rational(1), 0, 0, {{2, 50}});
    EXPECT_EQ(check_solovay_at(late, kQuarter, kHalf, Rational(1, 4), 10, 10).verdict, SolovayVerdict::GUndefined);
    EXPECT_EQ(check_solovay_at(late, kQuarter, kHalf, Rational(1, 4), 50, 10).verdict, SolovayVerdict::Holds);

    // alpha = 1/3 as a series and g(0) = 1/3 - tiny: the enclosure at budget 4 cannot separate.
    const ReferenceReal third = ReferenceReal::dyadic_series(ExponentGenerator::affine(2, 2));
    const SolovayWitness close(
        StagedPartialFunction(InputEnumeration::canonical(), StageSchedule(0, 0),
                              ValueRule(Rational(0), Rational(1, 3) - Rational::dyadic(30))),
        Rational(1));
    EXPECT_EQ(check_solovay_at(close, third, kHalf, Rational(0), 0, 4).verdict, SolovayVerdict::Unknown);
    EXPECT_EQ(check_solovay_at(close, third, kHalf, Rational(0), 0, 40).verdict, SolovayVerdict::Holds);
}

TEST(CheckS2aPrefix, Examples)
{
    // a_n = alpha exactly: left side zero.
    const S2aWitness exact{Approximation::constant(Rational(1, 4)), Approximation::constant(Rational(1, 3)),
                           Rational(1, 100)};
    for (const S2aCheck& c : check_s2a_prefix(exact, kQuarter, kHalf, 20, 4))
        EXPECT_EQ(c.verdict, Verdict::Holds);

    // alpha = 1/2, a_n = 0, beta = 1/2, b_n = 1/2, c = 1, n = 2: 1/2 > 1/4.
    const S2aWitness off{Approximation::constant(Rational(0)), Approximation::constant(Rational(1, 2)), Rational(1)};
    const auto checks = check_s2a_prefix(off, kHalf, kHalf, 2, 4);
    EXPECT_EQ(checks[2].verdict, Verdict::Fails);
    EXPECT_EQ(checks[2].lhs_upper, Rational(1, 2));
    EXPECT_EQ(checks[2].rhs_lower, Rational(1, 4));
    // n = 0: 1/2 <= 1 holds; n = 1: 1/2 <= 1/2 holds only in the non-strict form.
    EXPECT_EQ(checks[0].verdict, Verdict::Holds);
    EXPECT_EQ(checks[1].verdict, Verdict::Holds);
    EXPECT_EQ(check_s2a_strict_at(kHalf, kHalf, Rational(0), Rational(1, 2), Rational(1), 1, 4).verdict,
              Verdict::Fails);
}

TEST(CheckS2aPrefix, MirrorWitnessHoldsAtEveryGuard)
{
    const ReferenceReal third = ReferenceReal::dyadic_series(ExponentGenerator::affine(2, 2));
    const Approximation a = Approximation::partial_sums(ExponentGenerator::affine(2, 2)).with_limit(third);
    const S2aWitness w = mirror_s2a(a);
    for (std::size_t guard = 1; guard <= 10; ++guard)
        for (const S2aCheck& c : check_s2a_prefix(w, ReferenceReal::complement(third), third, 30, guard))
            EXPECT_EQ(c.verdict, Verdict::Holds) << "n=" << c.n << " guard=" << guard;
}

TEST(S2aProperty, StrictHoldsImpliesNonStrictHolds)
{
    Gen gen(43);
    for (int k = 0; k < 1000; ++k) {
        const ReferenceReal alpha = gen.real(2);
        const ReferenceReal beta = gen.real(2);
        const Rational a = gen.unit(64);
        const Rational b = gen.unit(64);
        const Rational c = gen.unit(8) + Rational(1, 8);
        const std::size_t n = gen.between(0, 12);
        const std::size_t guard = gen.between(1, 10);
        const S2aCheck strict = check_s2a_strict_at(alpha, beta, a, b, c, n, guard);
        const S2aCheck loose = check_s2a_at(alpha, beta, a, b, c, n, guard);
        if (strict.verdict == Verdict::Holds) {
            EXPECT_EQ(loose.verdict, Verdict::Holds);
        }
        if (loose.verdict == Verdict::Fails) {
            EXPECT_EQ(strict.verdict, Verdict::Fails);
        }

        // Against the exact values.
        const Rational lhs = abs(test::exact_value(alpha) - a);
        const Rational rhs = c * (abs(test::exact_value(beta) - b) + Rational::dyadic(n));
        if (loose.verdict == Verdict::Holds) {
            EXPECT_LE(lhs, rhs);
        }
        if (loose.verdict == Verdict::Fails) {
            EXPECT_GT(lhs, rhs);
        }
        if (strict.verdict == Verdict::Holds) {
            EXPECT_LT(lhs, rhs);
        }
    }
}

TEST(TranslationLimit, Examples)
{
    const SolovayWitness half = affine_witness(Rational(1, 2), Rational(0), Rational(1));
    std::vector<Rational> ladder;
    for (unsigned k = 2; k <= 5; ++k)
        ladder.push_back(Rational(1, 2) - Rational::dyadic(k));
    const auto entries = check_translation_limit(half, kQuarter, kHalf, ladder, 0, 20);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        ASSERT_TRUE(entries[k].distance_bound.has_value());
        EXPECT_EQ(*entries[k].distance_bound, Rational::dyadic(k + 3));
    }
    EXPECT_TRUE(bounds_nonincreasing(entries));

    const ReferenceReal beta = ReferenceReal::exact(Rational(3, 8));
    const SolovayWitness id = affine_witness(Rational(1), Rational(0), Rational(1));
    for (const LadderEntry& e : check_translation_limit(id, beta, beta, {Rational(1, 8), Rational(1, 4)}, 0, 20))
        EXPECT_EQ(*e.distance_bound, Rational(3, 8) - e.q);

    EXPECT_THROW(check_translation_limit(half, kQuarter, kHalf, {Rational(1, 2)}, 0, 20), std::invalid_argument);
}

TEST(TranslationLimit, StagedEntriesResolve)
{
    // 3/8 has index 5 in the canonical order.
    const SolovayWitness late = affine_witness(Rational(1, 2), Rational(0), Rational(1), 0, 0, {{5, 40}});
    const auto before = check_translation_limit(late, kQuarter, kHalf, {Rational(1, 4), Rational(3, 8)}, 0, 20);
    EXPECT_TRUE(before[0].distance_bound.has_value());
    EXPECT_FALSE(before[1].distance_bound.has_value());
    const auto after = check_translation_limit(late, kQuarter, kHalf, {Rational(1, 4), Rational(3, 8)}, 40, 20);
    EXPECT_TRUE(after[1].distance_bound.has_value());
}
