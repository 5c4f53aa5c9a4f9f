/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/oracle.hpp"

#include <algorithm>
#include <vector>

namespace s2a {

namespace {

struct Naive {
    std::size_t n;
    Rational b;
    Rational c;
    Rational delta;
    Rational quarter;
    const std::vector<DomainEntry>& dom;
    std::vector<std::size_t> pos;

    // Every clause of R_n, written out again on the full tuple.
    bool satisfies() const
    {
        const std::size_t ell = pos.size() - 1;
        if (ell < 2)
            return false;
        const Rational& top = dom[pos[ell]].point;
        if (!(b - delta < top) || !(top < b))
            return false;
        if (dom[pos[0]].point != Rational(0))
            return false;
        for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
            const Rational& lo = dom[pos[k]].point;
            const Rational& hi = dom[pos[k + 1]].point;
            if (!(lo < hi) || !(hi - lo < delta))
                return false;
        }
        const Rational& g_top = dom[pos[ell]].value;
        for (std::size_t k = 0; k < ell; ++k) {
            const Rational diff = g_top - dom[pos[k]].value;
            if (!(Rational(0) < diff))
                return false;
            if (!(diff < c * (top - dom[pos[k]].point + quarter)))
                return false;
        }
        return true;
    }

    bool fill(std::size_t k)
    {
        const std::size_t ell = pos.size() - 1;
        for (std::size_t p = pos[k - 1] + 1; p + (ell - k) < dom.size(); ++p) {
            if (!(dom[p].point - dom[pos[k - 1]].point < delta))
                break;
            if (!(dom[p].point < b))
                break;
            pos[k] = p;
            if (k == ell) {
                if (satisfies())
                    return true;
            } else if (fill(k + 1)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<OracleHit> oracle_min_hit(std::size_t n, std::size_t prev_index, const SolovayWitness& w,
                                        const Approximation& b, Stage stage_cap)
{
    const Rational delta = Rational::dyadic(n + 1);
    const Rational quarter = Rational::dyadic(n + 2);

    for (Stage s = 1; s <= stage_cap; ++s) {
        std::vector<DomainEntry> dom = w.g.enumerate_domain(s);
        std::sort(dom.begin(), dom.end(), [](const DomainEntry& x, const DomainEntry& y) { return x.point < y.point; });
        std::size_t zero = dom.size();
        for (std::size_t p = 0; p < dom.size(); ++p)
            if (dom[p].point == Rational(0))
                zero = p;
        if (zero == dom.size())
            continue;

        for (std::size_t i = prev_index + 1; i <= s; ++i) {
            const Rational bi = b.term(i);
            for (std::size_t ell = 2; ell + 1 <= dom.size(); ++ell) {
                Naive search{n, bi, w.c, delta, quarter, dom, std::vector<std::size_t>(ell + 1, 0)};
                search.pos[0] = zero;
                if (search.fill(1)) {
                    OracleHit hit{s, i, {}};
                    for (std::size_t p : search.pos) {
                        hit.tuple.indices.push_back(dom[p].index);
                        hit.tuple.points.push_back(dom[p].point);
                        hit.tuple.values.push_back(dom[p].value);
                    }
                    return hit;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace s2a
