/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace s2a {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, 1) / mpq_class(den, 1);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

Rational Rational::dyadic(unsigned long k)
{
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return Rational(mpq_class(mpz_class(1), den));
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

const Rational& min(const Rational& a, const Rational& b)
{
    return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b)
{
    return a < b ? b : a;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw std::invalid_argument("interval with lo > hi");
}

Rational Interval::max_distance(const Rational& p) const
{
    return max(abs(lo_ - p), abs(hi_ - p));
}

Rational Interval::min_distance(const Rational& p) const
{
    if (p < lo_)
        return lo_ - p;
    if (hi_ < p)
        return p - hi_;
    return Rational(0);
}

std::ostream& operator<<(std::ostream& os, const Interval& iv)
{
    return os << '[' << iv.lo() << ", " << iv.hi() << ']';
}

}  // namespace s2a
