/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/construction.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace s2a {

const char* to_string(RequirementClause c)
{
    switch (c) {
    case RequirementClause::EllAtLeastTwo:
        return "(i) ell>=2";
    case RequirementClause::Sandwiched:
        return "(ii) b-2^-(n+1) < q_ell < b";
    case RequirementClause::SortedFromZero:
        return "(iii) 0 = q_0 < ... < q_ell";
    case RequirementClause::GapsBelow:
        return "(iv) gaps < 2^-(n+1)";
    case RequirementClause::GDistances:
        return "(v) 0 < g_ell - g_k < c(q_ell - q_k + 2^-(n+2))";
    }
    return "?";
}

const char* to_string(ConstructionStatus s)
{
    switch (s) {
    case ConstructionStatus::Complete:
        return "Complete";
    case ConstructionStatus::Exhausted:
        return "Exhausted";
    case ConstructionStatus::InvalidScenario:
        return "InvalidScenario";
    }
    return "?";
}

RequirementVerdict check_requirement(std::size_t n, const Rational& b, const Rational& c,
                                     const RequirementTuple& tuple)
{
    if (tuple.points.size() != tuple.values.size() ||
        (!tuple.indices.empty() && tuple.indices.size() != tuple.points.size()))
        throw std::invalid_argument("malformed requirement tuple");

    const std::vector<Rational>& q = tuple.points;
    const std::vector<Rational>& g = tuple.values;
    if (q.size() < 3)
        return RequirementVerdict::fails(RequirementClause::EllAtLeastTwo);

    const std::size_t ell = q.size() - 1;
    const Rational delta = Rational::dyadic(n + 1);
    const Rational half_delta = Rational::dyadic(n + 2);

    if (!(b - delta < q[ell] && q[ell] < b))
        return RequirementVerdict::fails(RequirementClause::Sandwiched);

    if (!q[0].is_zero())
        return RequirementVerdict::fails(RequirementClause::SortedFromZero);
    for (std::size_t k = 0; k < ell; ++k)
        if (!(q[k] < q[k + 1]))
            return RequirementVerdict::fails(RequirementClause::SortedFromZero);

    for (std::size_t k = 0; k < ell; ++k)
        if (!(q[k + 1] - q[k] < delta))
            return RequirementVerdict::fails(RequirementClause::GapsBelow);

    for (std::size_t k = 0; k < ell; ++k) {
        const Rational rise = g[ell] - g[k];
        if (!(rise.sign() > 0 && rise < c * (q[ell] - q[k] + half_delta)))
            return RequirementVerdict::fails(RequirementClause::GDistances);
    }
    return RequirementVerdict::ok();
}

namespace {

struct Entry {
    std::size_t index;
    Rational point;
    Rational value;
};

using View = std::vector<const Entry*>;

/// Domain entries in order of the stage at which they become visible
/// (max(j, s_j)), materialized lazily.
class DomainTimeline {
public:
    explicit DomainTimeline(const StagedPartialFunction& g) : g_(g) {}

    /// Makes every j <= stage known.
    void extend_to(Stage stage)
    {
        while (next_j_ <= stage) {
            const std::size_t j = next_j_++;
            const auto s = g_.schedule().stage_of(j);
            if (!s)
                continue;
            const Stage visible = std::max<Stage>(j, *s);
            Rational q = g_.inputs().point(j);
            Rational v = g_.rule()(q);
            entries_.push_back(Entry{j, std::move(q), std::move(v)});
            by_stage_.emplace(visible, &entries_.back());
        }
    }

    /// Entries visible at `stage`, sorted by point.
    View view_at(Stage stage)
    {
        extend_to(stage);
        View out;
        for (auto it = by_stage_.begin(); it != by_stage_.end() && it->first <= stage; ++it)
            out.push_back(it->second);
        std::sort(out.begin(), out.end(), [](const Entry* a, const Entry* b) { return a->point < b->point; });
        return out;
    }

    /// Entries that become visible exactly at `stage`.
    std::vector<const Entry*> arriving_at(Stage stage)
    {
        extend_to(stage);
        std::vector<const Entry*> out;
        auto [lo, hi] = by_stage_.equal_range(stage);
        for (auto it = lo; it != hi; ++it)
            out.push_back(it->second);
        return out;
    }

private:
    const StagedPartialFunction& g_;
    std::size_t next_j_ = 0;
    std::deque<Entry> entries_;
    std::multimap<Stage, const Entry*> by_stage_;
};

class BetaTerms {
public:
    explicit BetaTerms(const Approximation& b) : b_(b) {}

    const Rational& at(std::size_t i)
    {
        while (terms_.size() <= i)
            terms_.push_back(b_.term(terms_.size()));
        return terms_[i];
    }

private:
    const Approximation& b_;
    std::deque<Rational> terms_;
};

/// R_n over one fixed stage domain.
class RequirementSolver {
public:
    RequirementSolver(std::size_t n, const Rational& c, const View& domain)
        : c_(c), delta_(Rational::dyadic(n + 1)), half_delta_(Rational::dyadic(n + 2)), d_(domain)
    {
        has_zero_ = !d_.empty() && d_.front()->point.is_zero();
    }

    bool satisfiable(const Rational& b)
    {
        if (!has_zero_)
            return false;
        const auto [lo, hi] = window(b);
        for (std::size_t pos = lo; pos < hi; ++pos)
            if (good(pos))
                return true;
        return false;
    }

    /// First tuple in (ell, lexicographic position) order; requires satisfiable(b).
    RequirementTuple canonical_tuple(const Rational& b)
    {
        const auto [lo, hi] = window(b);
        std::size_t best_ell = std::numeric_limits<std::size_t>::max();
        std::vector<Chain> chains;
        for (std::size_t pos = lo; pos < hi; ++pos) {
            if (!good(pos))
                continue;
            Chain ch = chain_for(pos);
            best_ell = std::min(best_ell, ch.min_ell);
            chains.push_back(std::move(ch));
        }
        if (chains.empty())
            throw std::logic_error("canonical_tuple called without a satisfying end point");

        std::vector<std::size_t> best;
        for (const Chain& ch : chains) {
            if (ch.min_ell != best_ell)
                continue;
            std::vector<std::size_t> cand = lex_first(ch, best_ell);
            if (best.empty() || cand < best)
                best = std::move(cand);
        }

        RequirementTuple t;
        for (std::size_t pos : best) {
            t.indices.push_back(d_[pos]->index);
            t.points.push_back(d_[pos]->point);
            t.values.push_back(d_[pos]->value);
        }
        return t;
    }

private:
    struct Chain {
        std::vector<std::size_t> members;  // domain positions compatible with the end point, ascending
        std::vector<std::size_t> dist;     // min hops from members[x] to the end point
        std::size_t min_ell = 0;
    };

    static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

    std::pair<std::size_t, std::size_t> window(const Rational& b) const
    {
        const Rational low = b - delta_;
        auto first = std::upper_bound(d_.begin(), d_.end(), low,
                                      [](const Rational& x, const Entry* e) { return x < e->point; });
        auto last = std::lower_bound(d_.begin(), d_.end(), b,
                                     [](const Entry* e, const Rational& x) { return e->point < x; });
        const auto lo = static_cast<std::size_t>(first - d_.begin());
        const auto hi = static_cast<std::size_t>(last - d_.begin());
        return {lo, std::max(lo, hi)};
    }

    // Clause (v) for the pair (k, end).
    bool compatible(std::size_t k, std::size_t end) const
    {
        const Rational rise = d_[end]->value - d_[k]->value;
        return rise.sign() > 0 && rise < c_ * (d_[end]->point - d_[k]->point + half_delta_);
    }

    // A chain 0 = q_0 < ... < q_ell = point(end) with ell >= 2 exists iff the
    // compatible points below `end` leave no gap >= delta and include 0.
    bool good(std::size_t end)
    {
        if (auto it = good_.find(end); it != good_.end())
            return it->second;
        bool ok = false;
        if (end >= 2) {
            std::size_t cur = end;
            std::size_t count = 1;
            for (std::size_t k = end; k-- > 0;) {
                if (!(d_[cur]->point - d_[k]->point < delta_))
                    break;
                if (compatible(k, end)) {
                    cur = k;
                    ++count;
                }
                if (k == 0)
                    ok = cur == 0 && count >= 3;
            }
        }
        good_.emplace(end, ok);
        return ok;
    }

    Chain chain_for(std::size_t end) const
    {
        Chain ch;
        for (std::size_t k = 0; k < end; ++k)
            if (compatible(k, end))
                ch.members.push_back(k);
        ch.members.push_back(end);

        const std::size_t m = ch.members.size() - 1;
        ch.dist.assign(m + 1, kUnreachable);
        ch.dist[m] = 0;
        std::size_t reach = m;  // farthest member reachable from x in one hop
        for (std::size_t x = m; x-- > 0;) {
            while (reach > x && !(point(ch, reach) - point(ch, x) < delta_))
                --reach;
            if (reach > x && ch.dist[reach] != kUnreachable)
                ch.dist[x] = ch.dist[reach] + 1;
        }
        ch.min_ell = std::max<std::size_t>(2, ch.dist[0]);
        return ch;
    }

    const Rational& point(const Chain& ch, std::size_t x) const { return d_[ch.members[x]]->point; }

    // Lexicographically first member sequence 0 = x_0 < ... < x_ell = m with
    // hops below delta, as domain positions.
    std::vector<std::size_t> lex_first(const Chain& ch, std::size_t ell) const
    {
        const std::size_t m = ch.members.size() - 1;
        std::vector<std::size_t> out{ch.members[0]};
        std::size_t cur = 0;
        std::size_t remaining = ell;
        while (remaining > 0) {
            std::size_t pick = kUnreachable;
            for (std::size_t y = cur + 1; y <= m && point(ch, y) - point(ch, cur) < delta_; ++y) {
                if (ch.dist[y] <= remaining - 1 && m - y >= remaining - 1) {
                    pick = y;
                    break;
                }
            }
            if (pick == kUnreachable)
                throw std::logic_error("no feasible continuation while building the canonical tuple");
            out.push_back(ch.members[pick]);
            cur = pick;
            --remaining;
        }
        return out;
    }

    const Rational& c_;
    Rational delta_;
    Rational half_delta_;
    const View& d_;
    bool has_zero_ = false;
    std::unordered_map<std::size_t, bool> good_;
};

class StepSearch {
public:
    StepSearch(const SolovayWitness& w, const Approximation& b) : w_(w), timeline_(w.g), beta_(b) {}

    std::optional<StepRecord> run(std::size_t n, const StepRecord& prev, Stage budget, SearchOptions options)
    {
        return options.accelerate ? run_bisect(n, prev, budget) : run_linear(n, prev, budget);
    }

private:
    // First i in (prev, stage] whose b_i satisfies R_n over the domain.
    std::optional<std::size_t> first_index(std::size_t n, std::size_t prev, Stage stage, const View& domain,
                                           std::optional<RequirementSolver>& solver)
    {
        solver.emplace(n, w_.c, domain);
        for (std::size_t i = prev + 1; i <= stage; ++i)
            if (solver->satisfiable(beta_.at(i)))
                return i;
        return std::nullopt;
    }

    StepRecord record(std::size_t n, std::size_t i, Stage stage, RequirementSolver& solver)
    {
        RequirementTuple t = solver.canonical_tuple(beta_.at(i));
        Rational a = t.values.back();
        return StepRecord{n, i, std::move(a), std::move(t), stage};
    }

    std::optional<StepRecord> run_linear(std::size_t n, const StepRecord& prev, Stage budget)
    {
        View domain = timeline_.view_at(0);
        bool checked_any = false;
        for (Stage s = 1; s <= budget; ++s) {
            const auto arriving = timeline_.arriving_at(s);
            for (const Entry* e : arriving) {
                auto at = std::upper_bound(domain.begin(), domain.end(), e,
                                           [](const Entry* x, const Entry* y) { return x->point < y->point; });
                domain.insert(at, e);
            }
            if (s <= prev.i_n)
                continue;
            // With an unchanged domain every smaller index already failed.
            const std::size_t from = (!arriving.empty() || !checked_any) ? prev.i_n : static_cast<std::size_t>(s - 1);
            checked_any = true;
            std::optional<RequirementSolver> solver;
            if (auto i = first_index(n, from, s, domain, solver))
                return record(n, *i, s, *solver);
        }
        return std::nullopt;
    }

    // Satisfiability only grows with the stage (the domain and the admissible
    // indices both grow), so the first successful stage can be bracketed by
    // galloping and then bisected.
    std::optional<StepRecord> run_bisect(std::size_t n, const StepRecord& prev, Stage budget)
    {
        const Stage lo_start = static_cast<Stage>(prev.i_n) + 1;
        if (budget < lo_start)
            return std::nullopt;

        auto probe = [&](Stage s) {
            const View domain = timeline_.view_at(s);
            std::optional<RequirementSolver> solver;
            return first_index(n, prev.i_n, s, domain, solver).has_value();
        };

        Stage failing = lo_start - 1;  // largest stage known to fail
        Stage step = 1;
        Stage hit = 0;
        for (Stage s = lo_start;; s = failing + step) {
            s = std::min(s, budget);
            if (probe(s)) {
                hit = s;
                break;
            }
            failing = s;
            if (s == budget)
                return std::nullopt;
            step *= 2;
        }
        while (hit - failing > 1) {
            const Stage mid = failing + (hit - failing) / 2;
            if (probe(mid))
                hit = mid;
            else
                failing = mid;
        }

        const View domain = timeline_.view_at(hit);
        std::optional<RequirementSolver> solver;
        const auto i = first_index(n, prev.i_n, hit, domain, solver);
        return record(n, *i, hit, *solver);
    }

    const SolovayWitness& w_;
    DomainTimeline timeline_;
    BetaTerms beta_;
};

}  // namespace

std::optional<StepRecord> search_step(std::size_t n, const StepRecord& prev, const SolovayWitness& w,
                                      const Approximation& b, Stage stage_budget, SearchOptions options)
{
    if (n == 0)
        throw std::invalid_argument("search_step is defined for n >= 1");
    StepSearch search(w, b);
    return search.run(n, prev, stage_budget, options);
}

ConstructionResult build_s2a_from_solovay(const SolovayWitness& w, const Approximation& b, std::size_t depth,
                                          Stage stage_budget, SearchOptions options)
{
    ConstructionResult result{ConstructionStatus::Complete, ConstructionTrace{{}, prepend(Rational(0), b), 1, {}},
                              std::nullopt, {}};
    ConstructionTrace& trace = result.trace;

    const auto s0 = w.g.definition_stage(Rational(0));
    if (!s0 || *s0 > stage_budget) {
        result.status = ConstructionStatus::InvalidScenario;
        result.message = "g(0) is not defined within stage budget " + std::to_string(stage_budget);
        return result;
    }
    trace.steps.push_back(StepRecord{0, 0, w.g.rule()(Rational(0)), std::nullopt, *s0});

    StepSearch search(w, trace.beta_used);
    for (std::size_t n = 1; n <= depth; ++n) {
        auto step = search.run(n, trace.steps.back(), stage_budget, options);
        if (!step) {
            trace.exhausted = Exhaustion{n, stage_budget};
            result.status = ConstructionStatus::Exhausted;
            result.message = "step " + std::to_string(n) + " found no hit within stage budget " +
                             std::to_string(stage_budget);
            return result;
        }
        trace.steps.push_back(std::move(*step));
    }

    std::vector<Rational> a_terms;
    std::vector<Rational> b_terms;
    for (const StepRecord& r : trace.steps) {
        a_terms.push_back(r.a_n);
        b_terms.push_back(trace.beta_used.term(r.i_n));
    }
    result.witness = S2aWitness{Approximation::table(std::move(a_terms)), Approximation::table(std::move(b_terms)),
                                w.c};
    return result;
}

LeftCeResult build_leftce_from_solovay(const SolovayWitness& w, const Approximation& b, std::size_t depth,
                                       Stage stage_budget)
{
    LeftCeResult out;
    for (std::size_t m = 0; m <= depth; ++m) {
        const Rational q = b.term(m);
        const auto s = w.g.definition_stage(q);
        const auto value = s && *s <= stage_budget ? w.g.eval_staged(q, *s) : std::nullopt;
        if (!value) {
            out.exhausted = true;
            out.exhausted_at = m;
            return out;
        }
        out.raw.push_back(*value);
        out.stages.push_back(*s);
    }
    out.approx = prefix_max(Approximation::table(out.raw));
    return out;
}

S2aWitness mirror_s2a(const Approximation& a)
{
    return S2aWitness{complement(a), a, Rational(1)};
}

}  // namespace s2a
