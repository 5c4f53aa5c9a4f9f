/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include "s2a/approximation.hpp"
#include "support.hpp"

using namespace s2a;
using s2a::test::Gen;

namespace {

Approximation half_ladder()
{
    // b_n = 1/2 - 2^(-n-1)
    return Approximation::affine_dyadic(Rational(1, 2), Rational(1, 2), 1, false, ApproxKind::LeftCE);
}

std::vector<Rational> fractions(std::initializer_list<std::pair<long, long>> xs)
{
    std::vector<Rational> out;
    for (auto [p, q] : xs)
        out.emplace_back(p, q);
    return out;
}

}  // namespace

TEST(Evaluate, Examples)
{
    EXPECT_EQ(evaluate(Approximation::constant(Rational(1, 2)), 7), Rational(1, 2));
    EXPECT_EQ(evaluate(half_ladder(), 2), Rational(3, 8));
    EXPECT_EQ(evaluate(prepend(Rational(0), half_ladder()), 0), Rational(0));
}

TEST(Evaluate, AlternatingAffine)
{
    const Approximation a = Approximation::affine_dyadic(Rational(3, 16), Rational(1, 8), 1, true);
    EXPECT_EQ(a.term(0), Rational(1, 16));
    EXPECT_EQ(a.term(1), Rational(1, 4));
    EXPECT_EQ(a.term(2), Rational(5, 32));
    EXPECT_EQ(a.term(3), Rational(13, 64));
}

TEST(Evaluate, TableTailAndPartialSums)
{
    const Approximation t = Approximation::table(fractions({{1, 2}, {1, 4}}), Rational(1, 3));
    EXPECT_EQ(t.term(1), Rational(1, 4));
    EXPECT_EQ(t.term(2), Rational(1, 3));
    EXPECT_EQ(t.term(1000), Rational(1, 3));
    EXPECT_EQ(Approximation::table(fractions({{1, 2}})).term(5), Rational(1, 2));
    EXPECT_THROW(Approximation::table({}), std::invalid_argument);

    const Approximation p = Approximation::partial_sums(ExponentGenerator::affine(2, 2));
    EXPECT_EQ(p.term(0), Rational(1, 4));
    EXPECT_EQ(p.term(2), Rational(21, 64));
    EXPECT_EQ(p.kind(), ApproxKind::LeftCE);
}

TEST(Evaluate, EnclosureEndpoints)
{
    const ReferenceReal third = ReferenceReal::dyadic_series(ExponentGenerator::affine(2, 2));
    const Approximation lo(TermGenerator{TermGenerator::LowerEnclosure{third}}, ApproxKind::LeftCE);
    const Approximation hi(TermGenerator{TermGenerator::UpperEnclosure{third}}, ApproxKind::RightCE);
    EXPECT_EQ(lo.term(2), Rational(21, 64));
    EXPECT_EQ(hi.term(2), Rational(22, 64));
    EXPECT_TRUE(check_kind_prefix(lo, 30).consistent);
    EXPECT_TRUE(check_kind_prefix(hi, 30).consistent);
}

TEST(PrefixMax, Examples)
{
    const Approximation a = prefix_max(Approximation::table(fractions({{1, 4}, {1, 8}, {3, 8}})));
    EXPECT_EQ(a.prefix(3), fractions({{1, 4}, {1, 4}, {3, 8}}));
    EXPECT_EQ(a.kind(), ApproxKind::LeftCE);

    const Approximation b = prefix_max(Approximation::table(fractions({{0, 1}, {1, 2}, {1, 4}, {3, 4}})));
    EXPECT_EQ(b.prefix(4), fractions({{0, 1}, {1, 2}, {1, 2}, {3, 4}}));

    EXPECT_EQ(prefix_max(half_ladder()).prefix(40), half_ladder().prefix(40));
}

TEST(PrefixMax, KeepsDeclaredLimit)
{
    const ReferenceReal half = ReferenceReal::exact(Rational(1, 2));
    const Approximation a = prefix_max(half_ladder().with_limit(half));
    ASSERT_TRUE(a.limit().has_value());
    EXPECT_EQ(a.limit()->enclose(Rational(1, 4)), Interval::point(Rational(1, 2)));
}

TEST(Complement, Examples)
{
    const Approximation a = complement(Approximation::table(fractions({{0, 1}, {1, 2}, {3, 4}}), std::nullopt,
                                                            ApproxKind::LeftCE));
    EXPECT_EQ(a.prefix(3), fractions({{1, 1}, {1, 2}, {1, 4}}));
    EXPECT_EQ(a.kind(), ApproxKind::RightCE);
    EXPECT_EQ(complement(Approximation::constant(Rational(1, 3))).term(9), Rational(2, 3));
    EXPECT_EQ(complement(Approximation::constant(Rational(1, 3))).kind(), ApproxKind::General);
}

TEST(Complement, FlipsDeclaredLimit)
{
    const Approximation a = complement(half_ladder().with_limit(ReferenceReal::exact(Rational(1, 8))));
    ASSERT_TRUE(a.limit().has_value());
    EXPECT_EQ(a.limit()->enclose(Rational(1, 4)), Interval::point(Rational(7, 8)));
}

TEST(Prepend, Examples)
{
    const Approximation a = prepend(Rational(0), Approximation::constant(Rational(1, 2)));
    EXPECT_EQ(a.prefix(3), fractions({{0, 1}, {1, 2}, {1, 2}}));
    EXPECT_EQ(prepend(Rational(0), half_ladder()).term(3), Rational(3, 8));
    EXPECT_EQ(prepend(Rational(1, 4), Approximation::table(fractions({{1, 2}}))).term(1), Rational(1, 2));
}

TEST(Prepend, MonotoneClaimSurvivesOnlyWhenCompatible)
{
    EXPECT_EQ(prepend(Rational(0), half_ladder()).kind(), ApproxKind::LeftCE);
    EXPECT_EQ(prepend(Rational(1), half_ladder()).kind(), ApproxKind::General);
}

TEST(KindPrefix, Examples)
{
    const auto left = [](std::vector<Rational> v) { return Approximation::table(std::move(v), std::nullopt,
                                                                                ApproxKind::LeftCE); };
    EXPECT_EQ(check_kind_prefix(left(fractions({{0, 1}, {1, 4}, {1, 4}, {1, 2}})), 3), KindCheck::ok());
    EXPECT_EQ(check_kind_prefix(left(fractions({{0, 1}, {1, 2}, {1, 4}})), 2), KindCheck::violation(2));
    EXPECT_EQ(check_kind_prefix(complement(left(fractions({{0, 1}, {1, 4}, {1, 2}}))), 2), KindCheck::ok());
    EXPECT_EQ(check_kind_prefix(left(fractions({{0, 1}, {1, 2}, {1, 4}})), ApproxKind::General, 2), KindCheck::ok());
}

TEST(OutOfUnit, FindsFirstEscape)
{
    EXPECT_EQ(find_out_of_unit(Approximation::affine_dyadic(Rational(1, 2), Rational(1, 2), 1, false), 10),
              std::optional<std::size_t>(std::nullopt));
    EXPECT_EQ(find_out_of_unit(Approximation::affine_dyadic(Rational(1, 2), Rational(1), 1, false), 10),
              std::optional<std::size_t>(0));
    EXPECT_EQ(find_out_of_unit(Approximation::table(fractions({{1, 2}, {1, 4}, {5, 4}})), 10),
              std::optional<std::size_t>(2));
}

namespace {

Approximation random_table(Gen& gen, std::size_t len)
{
    std::vector<Rational> v;
    for (std::size_t k = 0; k < len; ++k)
        v.push_back(gen.unit(32));
    return Approximation::table(std::move(v));
}

}  // namespace

TEST(ApproximationProperty, PrefixMaxIsLeftCeAndItsComplementRightCe)
{
    Gen gen(31);
    for (int k = 0; k < 300; ++k) {
        const std::size_t len = gen.between(1, 25);
        const Approximation a = random_table(gen, len);
        const Approximation m = prefix_max(a);
        EXPECT_TRUE(check_kind_prefix(m, len + 3).consistent);
        EXPECT_TRUE(check_kind_prefix(complement(m), len + 3).consistent);
        Rational running = a.term(0);
        for (std::size_t n = 0; n < len; ++n) {
            running = max(running, a.term(n));
            EXPECT_EQ(m.term(n), running);
        }
    }
}

TEST(ApproximationProperty, ComplementIsAnInvolutionAndPrependShifts)
{
    Gen gen(32);
    for (int k = 0; k < 300; ++k) {
        const std::size_t len = gen.between(1, 20);
        const Approximation a = random_table(gen, len);
        const Rational head = gen.unit(16);
        const Approximation p = prepend(head, a);
        EXPECT_EQ(p.term(0), head);
        for (std::size_t n = 0; n < len + 2; ++n) {
            EXPECT_EQ(complement(complement(a)).term(n), a.term(n));
            EXPECT_EQ(p.term(n + 1), a.term(n));
        }
    }
}

TEST(ApproximationProperty, DeclaredModulusBoundsDistanceToLimit)
{
    // b_n = u - v 2^-(w n) with limit u and modulus (v, w).
    Gen gen(33);
    for (int k = 0; k < 100; ++k) {
        const Rational u = Rational(1, 2) + gen.unit(16) / Rational(2);
        const Rational v = gen.unit(16) / Rational(2);
        const unsigned long w = gen.between(1, 3);
        const Approximation a = Approximation::affine_dyadic(u, v, w, gen.coin())
                                    .with_limit(ReferenceReal::exact(u))
                                    .with_modulus(ConvergenceModulus{v, w});
        for (std::size_t n = 0; n <= 30; ++n) {
            const Interval iv = a.limit()->enclose(Rational::dyadic(n + 10));
            EXPECT_LE(abs(a.term(n) - iv.mid()), a.modulus()->bound(n));
        }
    }
}
