/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/harness.hpp"

#include <algorithm>
#include <chrono>

#include "s2a/oracle.hpp"

namespace s2a {

namespace {

const char* const kStrict = "|alpha - a_n| < c (|beta - b_{i_n}| + 2^-n)";
const char* const kNonStrict = "|alpha - a_n| <= c (|beta - b_n| + 2^-n)";
const char* const kSolovay = "0 < alpha - g(q) < c (beta - q)";
const char* const kNotCheckable = "NOT MACHINE-CHECKABLE";

/// Extra refinement rounds allowed when a comparison is still undecided.
constexpr std::size_t kRefineRounds = 64;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Report start_report(const Scenario& s, VerifyMode mode, const HarnessOptions& opt)
{
    Report r;
    r.scenario = s.name;
    r.mode = to_string(mode);
    r.parameters = {
        {"depth", std::to_string(s.depth)},
        {"stage_budget", std::to_string(s.stage_budget)},
        {"guard", std::to_string(s.guard)},
        {"accelerate", opt.accelerate ? "true" : "false"},
    };
    if (mode == VerifyMode::Construction) {
        r.parameters.emplace_back("oracle_depth", std::to_string(opt.oracle_depth));
        r.parameters.emplace_back("grid_level", std::to_string(opt.grid_level));
    }
    if (mode == VerifyMode::SolovayCheck)
        r.parameters.emplace_back("grid_level", std::to_string(opt.grid_level));
    return r;
}

const SolovayWitness& need_witness(const Scenario& s, VerifyMode mode)
{
    if (!s.witness)
        throw InvalidScenario(std::string("mode ") + to_string(mode) + " needs a solovay_witness");
    return *s.witness;
}

const Approximation& need_beta_approx(const Scenario& s, VerifyMode mode)
{
    if (!s.beta_approx)
        throw InvalidScenario(std::string("mode ") + to_string(mode) + " needs a beta_approx");
    return *s.beta_approx;
}

Verdict from_solovay(SolovayVerdict v)
{
    switch (v) {
    case SolovayVerdict::Holds:
        return Verdict::Holds;
    case SolovayVerdict::FailsLower:
    case SolovayVerdict::FailsUpper:
        return Verdict::Fails;
    case SolovayVerdict::GUndefined:
    case SolovayVerdict::Unknown:
        break;
    }
    return Verdict::Unknown;
}

CheckRecord s2a_record(const char* check, const char* relation, const S2aCheck& c, std::size_t guard)
{
    CheckRecord rec{check, c.n, c.verdict, relation, {}};
    rec.detail = {
        {"a", c.a},
        {"b", c.b},
        {"lhs_upper", c.lhs_upper},
        {"rhs_lower", c.rhs_lower},
        {"enclosure_width", Rational::dyadic(c.n + guard)},
        {"alpha_enclosure", c.alpha_enclosure},
        {"beta_enclosure", c.beta_enclosure},
    };
    if (c.verdict == Verdict::Fails)
        rec.detail.emplace_back("violated", std::string(relation));
    return rec;
}

StageStatistics statistics(const std::vector<Stage>& stages)
{
    StageStatistics st;
    st.stage_per_step = stages;
    for (Stage s : stages) {
        st.max_stage = std::max(st.max_stage, s);
        st.total_stages += s;
    }
    return st;
}

void solovay_grid(const Scenario& s, const SolovayWitness& w, const HarnessOptions& opt, Report& r)
{
    const std::size_t budget = opt.grid_level + s.guard + 4;
    const std::size_t denom = std::size_t{1} << opt.grid_level;
    std::uint64_t outside = 0;
    for (std::size_t k = 0; k < denom; ++k) {
        const Rational q(static_cast<long>(k), static_cast<long>(denom));
        if (left_cut_member(s.beta, q, budget) != CutMembership::InLeftCut) {
            ++outside;
            continue;
        }
        const SolovayCheck chk = check_solovay_at(w, s.alpha, s.beta, q, s.stage_budget, budget);
        CheckRecord rec{"solovay-grid", std::nullopt, from_solovay(chk.verdict), kSolovay, {}};
        rec.detail.emplace_back("q", q);
        rec.detail.emplace_back("outcome", std::string(to_string(chk.verdict)));
        if (chk.verdict == SolovayVerdict::FailsLower)
            rec.detail.emplace_back("violated", std::string("0 < alpha - g(q)"));
        if (chk.verdict == SolovayVerdict::FailsUpper)
            rec.detail.emplace_back("violated", std::string("alpha - g(q) < c (beta - q)"));
        if (chk.g_value)
            rec.detail.emplace_back("g", *chk.g_value);
        rec.detail.emplace_back("enclosure_width", Rational::dyadic(budget));
        if (chk.alpha_enclosure)
            rec.detail.emplace_back("alpha_enclosure", *chk.alpha_enclosure);
        if (chk.beta_enclosure)
            rec.detail.emplace_back("beta_enclosure", *chk.beta_enclosure);
        r.add(std::move(rec));
    }
    CheckRecord skipped{"solovay-grid-coverage", std::nullopt, Verdict::Holds, "grid points not certified below beta",
                        {}};
    skipped.detail.emplace_back("grid_points", std::uint64_t{denom});
    skipped.detail.emplace_back("skipped", outside);
    r.add(std::move(skipped));
}

void convergence(const Scenario& s, const Approximation& b, Report& r)
{
    if (!b.modulus())
        return;
    const ConvergenceModulus& m = *b.modulus();
    for (std::size_t n = 0; n <= s.depth; ++n) {
        const Rational bound = m.bound(n);
        const Rational width = bound * Rational::dyadic(s.guard);
        const Interval iv = s.beta.enclose(width);
        const Rational bn = b.term(n);
        Verdict v = Verdict::Unknown;
        if (iv.max_distance(bn) <= bound)
            v = Verdict::Holds;
        else if (iv.min_distance(bn) > bound)
            v = Verdict::Fails;
        CheckRecord rec{"beta-modulus", n, v, "|b_n - beta| <= scale 2^(-rate n)", {}};
        rec.detail = {{"b", bn}, {"bound", bound}, {"enclosure_width", width}, {"beta_enclosure", iv}};
        r.add(std::move(rec));
    }
}

void strict_checks(const Scenario& s, const SolovayWitness& w, const ConstructionResult& cr, Report& r)
{
    const ConstructionTrace& t = cr.trace;
    for (const StepRecord& st : t.steps) {
        const Rational b = t.beta_used.term(st.i_n);
        CheckRecord rec = s2a_record("strict-s2a", kStrict,
                                     check_s2a_strict_at(s.alpha, s.beta, st.a_n, b, w.c, st.n, s.guard), s.guard);
        rec.detail.insert(rec.detail.begin(), {"i_n", std::uint64_t{st.i_n}});
        r.add(std::move(rec));
    }
}

void structural_checks(const SolovayWitness& w, const ConstructionResult& cr, Report& r)
{
    const ConstructionTrace& t = cr.trace;
    if (cr.witness) {
        CheckRecord rec{"same-constant", std::nullopt, cr.witness->c == w.c ? Verdict::Holds : Verdict::Fails,
                        "constructed c equals Solovay c", {}};
        rec.detail = {{"solovay_c", w.c}, {"s2a_c", cr.witness->c}};
        r.add(std::move(rec));
    }
    for (std::size_t k = 1; k < t.steps.size(); ++k) {
        const StepRecord& st = t.steps[k];
        const bool increasing = st.i_n > t.steps[k - 1].i_n;
        CheckRecord inc{"index-increasing", st.n, increasing ? Verdict::Holds : Verdict::Fails, "i_{n-1} < i_n", {}};
        inc.detail = {{"i_prev", std::uint64_t{t.steps[k - 1].i_n}}, {"i_n", std::uint64_t{st.i_n}}};
        r.add(std::move(inc));

        const RequirementVerdict rv = check_requirement(st.n, t.beta_used.term(st.i_n), w.c, *st.tuple);
        CheckRecord req{"requirement", st.n, rv.satisfied ? Verdict::Holds : Verdict::Fails,
                        "chosen tuple satisfies R_n", {}};
        req.detail = {{"stage", std::uint64_t{st.stage_found}}, {"ell", std::uint64_t{st.tuple->ell()}}};
        if (!rv.satisfied)
            req.detail.emplace_back("clause", std::string(to_string(rv.failed)));
        r.add(std::move(req));
    }
}

void oracle_checks(const SolovayWitness& w, const ConstructionResult& cr, std::size_t oracle_depth, Report& r)
{
    const ConstructionTrace& t = cr.trace;
    for (std::size_t k = 1; k < t.steps.size() && k <= oracle_depth; ++k) {
        const StepRecord& st = t.steps[k];
        const auto hit = oracle_min_hit(st.n, t.steps[k - 1].i_n, w, t.beta_used, st.stage_found);
        const bool agree = hit && hit->stage == st.stage_found && hit->i == st.i_n && hit->tuple == *st.tuple;
        CheckRecord rec{"oracle-agreement", st.n, agree ? Verdict::Holds : Verdict::Fails,
                        "search_step equals oracle_min_hit", {}};
        rec.detail = {{"search_stage", std::uint64_t{st.stage_found}}, {"search_i", std::uint64_t{st.i_n}}};
        if (hit) {
            rec.detail.emplace_back("oracle_stage", std::uint64_t{hit->stage});
            rec.detail.emplace_back("oracle_i", std::uint64_t{hit->i});
        } else {
            rec.detail.emplace_back("oracle", std::string("NoHit"));
        }
        r.add(std::move(rec));
    }
}

/// Over the second half of the steps, the largest certified |alpha - a_n| stays
/// below c (largest |beta - b_{i_n}| + 2^-(N/2)).
void convergence_check(const Scenario& s, const SolovayWitness& w, const ConstructionResult& cr, Report& r)
{
    const ConstructionTrace& t = cr.trace;
    if (t.steps.size() < 2)
        return;
    const std::size_t last = t.steps.size() - 1;
    const std::size_t half = last / 2;
    const Rational width = Rational::dyadic(last + s.guard);
    const Interval A = s.alpha.enclose(width);
    const Interval B = s.beta.enclose(width);
    Rational lhs(0);
    Rational lhs_lo(0);
    Rational beta_lo(0);
    Rational beta_hi(0);
    for (std::size_t n = half; n <= last; ++n) {
        const Rational b = t.beta_used.term(t.steps[n].i_n);
        lhs = max(lhs, A.max_distance(t.steps[n].a_n));
        lhs_lo = max(lhs_lo, A.min_distance(t.steps[n].a_n));
        beta_lo = max(beta_lo, B.min_distance(b));
        beta_hi = max(beta_hi, B.max_distance(b));
    }
    const Rational tail = Rational::dyadic(half);
    Verdict v = Verdict::Unknown;
    if (lhs < w.c * (beta_lo + tail))
        v = Verdict::Holds;
    else if (lhs_lo >= w.c * (beta_hi + tail))
        v = Verdict::Fails;
    CheckRecord rec{"convergence", last, v, "max_{N/2<=n<=N} |alpha - a_n| < c (max |beta - b_{i_n}| + 2^-(N/2))", {}};
    rec.detail = {{"from_n", std::uint64_t{half}}, {"lhs_upper", lhs}, {"beta_distance_lower", beta_lo},
                  {"enclosure_width", width}};
    if (v == Verdict::Fails)
        rec.detail.emplace_back("violated", rec.relation);
    r.add(std::move(rec));
}

void exhaustion_record(const ConstructionResult& cr, Report& r)
{
    if (!cr.trace.exhausted)
        return;
    CheckRecord rec{"construction", cr.trace.exhausted->step, Verdict::Exhausted, "R_n found within stage budget",
                    {}};
    rec.detail = {{"stage_budget", std::uint64_t{cr.trace.exhausted->stage}}, {"message", cr.message}};
    r.add(std::move(rec));
}

StageStatistics trace_statistics(const ConstructionTrace& t)
{
    std::vector<Stage> stages;
    for (const StepRecord& st : t.steps)
        stages.push_back(st.stage_found);
    return statistics(stages);
}

/// Refines enclosures until 0 < alpha - a < c (beta - b) is decided.
CheckRecord gap_bound(const Scenario& s, const Rational& c, std::size_t n, const Rational& a, const Rational& b)
{
    const Rational zero(0);
    Verdict v = Verdict::Unknown;
    std::string violated;
    std::size_t bits = n + s.guard;
    Interval A = s.alpha.enclose(Rational::dyadic(bits));
    Interval B = s.beta.enclose(Rational::dyadic(bits));
    for (std::size_t round = 0;; ++round) {
        if (A.lo() - a > zero && A.hi() - a < c * (B.lo() - b)) {
            v = Verdict::Holds;
            break;
        }
        if (A.hi() - a <= zero) {
            v = Verdict::Fails;
            violated = "0 < alpha - a_n";
            break;
        }
        if (A.lo() - a >= c * (B.hi() - b)) {
            v = Verdict::Fails;
            violated = "alpha - a_n < c (beta - b_n)";
            break;
        }
        if (round == kRefineRounds)
            break;
        ++bits;
        A = s.alpha.enclose(Rational::dyadic(bits));
        B = s.beta.enclose(Rational::dyadic(bits));
    }
    CheckRecord rec{"gap-bound", n, v, "0 < alpha - a_n < c (beta - b_n)", {}};
    rec.detail = {{"a", a}, {"b", b}, {"enclosure_width", Rational::dyadic(bits)}, {"alpha_enclosure", A},
                  {"beta_enclosure", B}};
    if (!violated.empty())
        rec.detail.emplace_back("violated", violated);
    return rec;
}

}  // namespace

const DetailValue* CheckRecord::find(const std::string& key) const
{
    for (const auto& [k, v] : detail)
        if (k == key)
            return &v;
    return nullptr;
}

std::size_t Report::count(Verdict v) const
{
    std::size_t k = 0;
    for (const CheckRecord& c : checks)
        k += c.verdict == v;
    return k;
}

Verdict Report::overall() const
{
    if (count(Verdict::Fails) > 0)
        return Verdict::Fails;
    if (count(Verdict::Exhausted) > 0)
        return Verdict::Exhausted;
    if (count(Verdict::Unknown) > 0)
        return Verdict::Unknown;
    return Verdict::Holds;
}

int exit_code(const Report& r)
{
    switch (r.overall()) {
    case Verdict::Holds:
        return 0;
    case Verdict::Fails:
        return 1;
    case Verdict::Unknown:
    case Verdict::Exhausted:
        return 2;
    }
    return 2;
}

Report verify_construction(const Scenario& s, const HarnessOptions& opt)
{
    const Timer timer;
    const SolovayWitness& w = need_witness(s, VerifyMode::Construction);
    const Approximation& b = need_beta_approx(s, VerifyMode::Construction);
    Report r = start_report(s, VerifyMode::Construction, opt);

    ConstructionResult cr = build_s2a_from_solovay(w, b, s.depth, s.stage_budget, SearchOptions{opt.accelerate});
    if (cr.status == ConstructionStatus::InvalidScenario)
        throw InvalidScenario(cr.message);
    exhaustion_record(cr, r);
    strict_checks(s, w, cr, r);
    structural_checks(w, cr, r);
    convergence_check(s, w, cr, r);
    oracle_checks(w, cr, opt.oracle_depth, r);
    solovay_grid(s, w, opt, r);
    convergence(s, b, r);

    r.stages = trace_statistics(cr.trace);
    r.construction = std::move(cr);
    r.seconds = timer.seconds();
    return r;
}

Report verify_mirror(const Scenario& s, const HarnessOptions& opt)
{
    const Timer timer;
    if (!s.alpha_leftce_approx)
        throw InvalidScenario("mode mirror needs an alpha_leftce_approx");
    const Approximation& a = *s.alpha_leftce_approx;
    Report r = start_report(s, VerifyMode::Mirror, opt);

    const KindCheck kc = check_kind_prefix(a, ApproxKind::LeftCE, s.depth);
    CheckRecord pre{"leftce-prefix", std::nullopt, kc.consistent ? Verdict::Holds : Verdict::Fails,
                    "a_{n-1} <= a_n", {}};
    pre.detail.emplace_back("last_index", std::uint64_t{s.depth});
    if (!kc.consistent) {
        pre.n = kc.violation_at;
        pre.detail.emplace_back("violation_at", std::uint64_t{kc.violation_at});
        pre.detail.emplace_back("note", std::string("mirror claim skipped"));
        r.add(std::move(pre));
        r.seconds = timer.seconds();
        return r;
    }
    r.add(std::move(pre));

    const S2aWitness w = mirror_s2a(a);
    const ReferenceReal one_minus_alpha = ReferenceReal::complement(s.alpha);
    for (const S2aCheck& c : check_s2a_prefix(w, one_minus_alpha, s.alpha, s.depth, s.guard))
        r.add(s2a_record("mirror-s2a", kNonStrict, c, s.guard));

    const KindCheck rc = check_kind_prefix(w.alpha_approx, ApproxKind::RightCE, s.depth);
    CheckRecord right{"complement-rightce-prefix", std::nullopt, rc.consistent ? Verdict::Holds : Verdict::Fails,
                      "1 - a_{n-1} >= 1 - a_n", {}};
    right.detail.emplace_back("last_index", std::uint64_t{s.depth});
    if (!rc.consistent) {
        right.n = rc.violation_at;
        right.detail.emplace_back("violation_at", std::uint64_t{rc.violation_at});
    }
    r.add(std::move(right));

    for (std::size_t n = 0; n <= s.depth; ++n) {
        const Rational width = Rational::dyadic(n + s.guard);
        const Rational an = a.term(n);
        const Rational lhs_mirror = one_minus_alpha.enclose(width).max_distance(Rational(1) - an);
        const Rational lhs_direct = s.alpha.enclose(width).max_distance(an);
        CheckRecord rec{"mirror-identity", n, lhs_mirror == lhs_direct ? Verdict::Holds : Verdict::Fails,
                        "bound on |(1 - alpha) - (1 - a_n)| equals bound on |alpha - a_n|", {}};
        rec.detail = {{"mirror_bound", lhs_mirror}, {"direct_bound", lhs_direct}, {"enclosure_width", width}};
        r.add(std::move(rec));
    }

    r.citations.push_back(Citation{
        "1 - alpha is not Solovay reducible to alpha",
        kNotCheckable,
        "holds for left-c.e. alpha that is not right-c.e.; no finite prefix certifies that alpha is not right-c.e.",
    });
    r.citations.push_back(Citation{
        "1 - alpha is not left-c.e.",
        kNotCheckable,
        "equivalent to alpha not being right-c.e.; only the right-c.e. approximation 1 - a_n is checked",
    });
    r.seconds = timer.seconds();
    return r;
}

Report verify_prop1(const Scenario& s, const HarnessOptions& opt)
{
    const Timer timer;
    const SolovayWitness& w = need_witness(s, VerifyMode::Prop1);
    const Approximation& b = need_beta_approx(s, VerifyMode::Prop1);
    if (b.kind() != ApproxKind::LeftCE)
        throw InvalidScenario("mode prop1 needs a beta_approx of kind left_ce");
    Report r = start_report(s, VerifyMode::Prop1, opt);

    const KindCheck bk = check_kind_prefix(b, ApproxKind::LeftCE, s.depth);
    CheckRecord bpre{"beta-leftce-prefix", std::nullopt, bk.consistent ? Verdict::Holds : Verdict::Fails,
                     "b_{n-1} <= b_n", {}};
    if (!bk.consistent) {
        bpre.n = bk.violation_at;
        bpre.detail.emplace_back("violation_at", std::uint64_t{bk.violation_at});
    }
    r.add(std::move(bpre));

    const LeftCeResult res = build_leftce_from_solovay(w, b, s.depth, s.stage_budget);
    if (res.exhausted) {
        CheckRecord ex{"leftce-construction", res.exhausted_at, Verdict::Exhausted, "g(b_n) defined within stage budget",
                       {}};
        ex.detail = {{"b", b.term(res.exhausted_at)}, {"stage_budget", std::uint64_t{s.stage_budget}}};
        r.add(std::move(ex));
    }

    const Approximation running = prefix_max(Approximation::table(res.raw.empty() ? std::vector<Rational>{Rational(0)}
                                                                                     : res.raw));
    if (!res.raw.empty()) {
        const std::size_t last = res.raw.size() - 1;
        const KindCheck kc = check_kind_prefix(running, ApproxKind::LeftCE, last);
        CheckRecord mono{"leftce-prefix", std::nullopt, kc.consistent ? Verdict::Holds : Verdict::Fails,
                         "a'_{n-1} <= a'_n", {}};
        mono.detail.emplace_back("last_index", std::uint64_t{last});
        if (!kc.consistent) {
            mono.n = kc.violation_at;
            mono.detail.emplace_back("violation_at", std::uint64_t{kc.violation_at});
        }
        r.add(std::move(mono));
    }

    for (std::size_t n = 0; n < res.raw.size(); ++n) {
        const Rational an = running.term(n);
        const std::size_t budget = n + s.guard + kRefineRounds;
        const CutMembership m = left_cut_member(s.alpha, an, budget);
        const Verdict v = m == CutMembership::InLeftCut      ? Verdict::Holds
                          : m == CutMembership::NotInLeftCut ? Verdict::Fails
                                                             : Verdict::Unknown;
        CheckRecord below{"below-alpha", n, v, "a'_n < alpha", {}};
        below.detail = {{"a_running", an}, {"membership", std::string(to_string(m))},
                        {"refinement_rounds", std::uint64_t{budget}}};
        r.add(std::move(below));
        r.add(gap_bound(s, w.c, n, res.raw[n], b.term(n)));
    }

    r.stages = statistics(res.stages);
    r.seconds = timer.seconds();
    return r;
}

Report verify_s2a_check(const Scenario& s, const HarnessOptions& opt)
{
    const Timer timer;
    const SolovayWitness& w = need_witness(s, VerifyMode::S2aCheck);
    const Approximation& b = need_beta_approx(s, VerifyMode::S2aCheck);
    Report r = start_report(s, VerifyMode::S2aCheck, opt);

    ConstructionResult cr = build_s2a_from_solovay(w, b, s.depth, s.stage_budget, SearchOptions{opt.accelerate});
    if (cr.status == ConstructionStatus::InvalidScenario)
        throw InvalidScenario(cr.message);
    exhaustion_record(cr, r);
    if (cr.witness) {
        for (const S2aCheck& c : check_s2a_prefix(*cr.witness, s.alpha, s.beta, s.depth, s.guard))
            r.add(s2a_record("s2a", kNonStrict, c, s.guard));
    } else {
        for (const StepRecord& st : cr.trace.steps)
            r.add(s2a_record("s2a", kNonStrict,
                             check_s2a_at(s.alpha, s.beta, st.a_n, cr.trace.beta_used.term(st.i_n), w.c, st.n,
                                          s.guard),
                             s.guard));
    }
    r.stages = trace_statistics(cr.trace);
    r.construction = std::move(cr);
    r.seconds = timer.seconds();
    return r;
}

Report verify_solovay_check(const Scenario& s, const HarnessOptions& opt)
{
    const Timer timer;
    const SolovayWitness& w = need_witness(s, VerifyMode::SolovayCheck);
    Report r = start_report(s, VerifyMode::SolovayCheck, opt);
    solovay_grid(s, w, opt, r);

    // Largest level-k dyadic certified below beta, for k = 1..depth.
    const std::size_t budget = s.depth + s.guard;
    const Rational beta_lo = s.beta.enclose(Rational::dyadic(budget)).lo();
    std::vector<Rational> ladder;
    for (std::size_t k = 1; k <= s.depth; ++k) {
        const Rational scaled = beta_lo / Rational::dyadic(k);
        mpz_class top;
        mpz_fdiv_q(top.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
        if (scaled.denominator() == 1)
            top -= 1;
        if (top < 0)
            continue;
        const Rational q = Rational(mpq_class(top)) * Rational::dyadic(k);
        if (ladder.empty() || ladder.back() < q)
            ladder.push_back(q);
    }
    r.ladder = check_translation_limit(w, s.alpha, s.beta, ladder, s.stage_budget, budget);
    r.ladder_nonincreasing = bounds_nonincreasing(r.ladder);
    r.seconds = timer.seconds();
    return r;
}

const char* to_string(VerifyMode m)
{
    switch (m) {
    case VerifyMode::Construction:
        return "construction";
    case VerifyMode::Mirror:
        return "mirror";
    case VerifyMode::Prop1:
        return "prop1";
    case VerifyMode::S2aCheck:
        return "s2a-check";
    case VerifyMode::SolovayCheck:
        return "solovay-check";
    }
    return "?";
}

std::optional<VerifyMode> parse_verify_mode(const std::string& name)
{
    for (VerifyMode m : {VerifyMode::Construction, VerifyMode::Mirror, VerifyMode::Prop1, VerifyMode::S2aCheck,
                         VerifyMode::SolovayCheck})
        if (name == to_string(m))
            return m;
    return std::nullopt;
}

Report run_verify(const Scenario& s, VerifyMode mode, const HarnessOptions& opt)
{
    switch (mode) {
    case VerifyMode::Construction:
        return verify_construction(s, opt);
    case VerifyMode::Mirror:
        return verify_mirror(s, opt);
    case VerifyMode::Prop1:
        return verify_prop1(s, opt);
    case VerifyMode::S2aCheck:
        return verify_s2a_check(s, opt);
    case VerifyMode::SolovayCheck:
        return verify_solovay_check(s, opt);
    }
    throw InvalidScenario("unknown mode");
}

}  // namespace s2a
