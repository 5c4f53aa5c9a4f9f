/* SPDX-License-Identifier: Apache-2.0 */

#include "s2a/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace s2a {

namespace {

using json = nlohmann::ordered_json;

/// Prefix length on which approximation terms must stay inside [0, 1].
constexpr std::size_t kUnitPrefix = 64;
/// Refinement rounds used to certify alpha, beta in (0, 1) at load time.
constexpr std::size_t kLoadBudget = 256;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ScenarioError(where + ": " + what);
}

void expect_object(const json& j, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
}

void only_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed)
{
    expect_object(j, where);
    for (const auto& item : j.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            fail(where, "unknown field '" + item.key() + "'");
}

const json& field(const json& j, const std::string& where, const char* key)
{
    const auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field '") + key + "'");
    return *it;
}

const json* optional_field(const json& j, const char* key)
{
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

Rational fraction(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected an exact fraction string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

std::uint64_t natural(const json& j, const std::string& where)
{
    if (!j.is_number_unsigned())
        fail(where, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

/// A constructor node is an object with exactly one key naming the constructor.
std::pair<std::string, const json*> tagged(const json& j, const std::string& where)
{
    expect_object(j, where);
    if (j.size() != 1)
        fail(where, "expected exactly one constructor key");
    const auto it = j.begin();
    return {it.key(), &it.value()};
}

template <typename F>
auto wrap(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

ExponentGenerator parse_exponents(const json& j, const std::string& where)
{
    expect_object(j, where);
    if (j.contains("exponents")) {
        only_keys(j, where, {"exponents"});
        const json& list = j["exponents"];
        if (!list.is_array())
            fail(where + ".exponents", "expected an array");
        std::vector<unsigned long> e;
        for (std::size_t k = 0; k < list.size(); ++k)
            e.push_back(natural(list[k], where + ".exponents[" + std::to_string(k) + "]"));
        return wrap(where, [&] { return ExponentGenerator::finite(std::move(e)); });
    }
    only_keys(j, where, {"slope", "offset"});
    const auto s = natural(field(j, where, "slope"), where + ".slope");
    const auto t = natural(field(j, where, "offset"), where + ".offset");
    return wrap(where, [&] { return ExponentGenerator::affine(s, t); });
}

ReferenceReal parse_real(const json& j, const std::string& where)
{
    const auto [tag, body] = tagged(j, where);
    const std::string at = where + "." + tag;
    if (tag == "rational") {
        const Rational v = fraction(*body, at);
        return wrap(at, [&] { return ReferenceReal::exact(v); });
    }
    if (tag == "dyadic_series")
        return ReferenceReal::dyadic_series(parse_exponents(*body, at));
    if (tag == "scale") {
        only_keys(*body, at, {"inner", "factor"});
        const ReferenceReal inner = parse_real(field(*body, at, "inner"), at + ".inner");
        const Rational f = fraction(field(*body, at, "factor"), at + ".factor");
        return wrap(at, [&] { return ReferenceReal::scale(inner, f); });
    }
    if (tag == "average") {
        only_keys(*body, at, {"left", "right"});
        return ReferenceReal::average(parse_real(field(*body, at, "left"), at + ".left"),
                                      parse_real(field(*body, at, "right"), at + ".right"));
    }
    if (tag == "complement")
        return ReferenceReal::complement(parse_real(*body, at));
    fail(where, "unknown real constructor '" + tag + "'");
}

std::shared_ptr<const TermGenerator> shared(TermGenerator g)
{
    return std::make_shared<const TermGenerator>(std::move(g));
}

TermGenerator parse_terms(const json& j, const std::string& where)
{
    const auto [tag, body] = tagged(j, where);
    const std::string at = where + "." + tag;
    if (tag == "constant")
        return TermGenerator{TermGenerator::Constant{fraction(*body, at)}};
    if (tag == "affine_dyadic") {
        only_keys(*body, at, {"u", "v", "w", "alternating"});
        TermGenerator::AffineDyadic a{fraction(field(*body, at, "u"), at + ".u"),
                                      fraction(field(*body, at, "v"), at + ".v"),
                                      natural(field(*body, at, "w"), at + ".w"), false};
        if (const json* alt = optional_field(*body, "alternating")) {
            if (!alt->is_boolean())
                fail(at + ".alternating", "expected true or false");
            a.alternating = alt->get<bool>();
        }
        return TermGenerator{a};
    }
    if (tag == "table") {
        only_keys(*body, at, {"values", "tail"});
        const json& values = field(*body, at, "values");
        if (!values.is_array() || values.empty())
            fail(at + ".values", "expected a non-empty array");
        TermGenerator::Table t;
        for (std::size_t k = 0; k < values.size(); ++k)
            t.values.push_back(fraction(values[k], at + ".values[" + std::to_string(k) + "]"));
        const json* tail = optional_field(*body, "tail");
        t.tail = tail ? fraction(*tail, at + ".tail") : t.values.back();
        return TermGenerator{std::move(t)};
    }
    if (tag == "partial_sums")
        return TermGenerator{TermGenerator::PartialSums{parse_exponents(*body, at)}};
    if (tag == "lower_enclosure")
        return TermGenerator{TermGenerator::LowerEnclosure{parse_real(*body, at)}};
    if (tag == "upper_enclosure")
        return TermGenerator{TermGenerator::UpperEnclosure{parse_real(*body, at)}};
    if (tag == "complement")
        return TermGenerator{TermGenerator::Complement{shared(parse_terms(*body, at))}};
    if (tag == "prefix_max")
        return TermGenerator{TermGenerator::PrefixMax{shared(parse_terms(*body, at))}};
    if (tag == "prepend") {
        only_keys(*body, at, {"head", "inner"});
        return TermGenerator{TermGenerator::Prepend{fraction(field(*body, at, "head"), at + ".head"),
                                                    shared(parse_terms(field(*body, at, "inner"), at + ".inner"))}};
    }
    fail(where, "unknown term constructor '" + tag + "'");
}

ApproxKind parse_kind(const json& j, const std::string& where)
{
    const std::string k = text(j, where);
    if (k == "general")
        return ApproxKind::General;
    if (k == "left_ce")
        return ApproxKind::LeftCE;
    if (k == "right_ce")
        return ApproxKind::RightCE;
    fail(where, "kind must be general, left_ce or right_ce");
}

Approximation parse_approximation(const json& j, const std::string& where, const ReferenceReal& limit)
{
    only_keys(j, where, {"kind", "terms", "modulus"});
    const ApproxKind kind = parse_kind(field(j, where, "kind"), where + ".kind");
    TermGenerator terms = parse_terms(field(j, where, "terms"), where + ".terms");
    std::optional<ConvergenceModulus> modulus;
    if (const json* m = optional_field(j, "modulus")) {
        const std::string at = where + ".modulus";
        only_keys(*m, at, {"scale", "rate"});
        modulus = ConvergenceModulus{fraction(field(*m, at, "scale"), at + ".scale"),
                                     natural(field(*m, at, "rate"), at + ".rate")};
        if (modulus->scale.sign() <= 0)
            fail(at + ".scale", "must be positive");
    }
    Approximation a(std::move(terms), kind, limit, modulus);
    if (const auto bad = find_out_of_unit(a, kUnitPrefix))
        fail(where, "term " + std::to_string(*bad) + " = " + a.term(*bad).str() + " leaves [0, 1]");
    return a;
}

SolovayWitness parse_witness(const json& j, const std::string& where)
{
    only_keys(j, where, {"c", "enumeration_prefix", "value_rule", "stage_schedule"});
    const Rational c = fraction(field(j, where, "c"), where + ".c");

    InputEnumeration inputs = InputEnumeration::canonical();
    if (const json* p = optional_field(j, "enumeration_prefix")) {
        const std::string at = where + ".enumeration_prefix";
        if (!p->is_array())
            fail(at, "expected an array");
        std::vector<Rational> points;
        for (std::size_t k = 0; k < p->size(); ++k)
            points.push_back(fraction((*p)[k], at + "[" + std::to_string(k) + "]"));
        inputs = wrap(at, [&] { return InputEnumeration::with_prefix(std::move(points)); });
    }

    const std::string vr = where + ".value_rule";
    const json& rule = field(j, where, "value_rule");
    only_keys(rule, vr, {"u", "v", "table"});
    std::map<Rational, Rational> table;
    if (const json* t = optional_field(rule, "table")) {
        if (!t->is_array())
            fail(vr + ".table", "expected an array");
        for (std::size_t k = 0; k < t->size(); ++k) {
            const std::string at = vr + ".table[" + std::to_string(k) + "]";
            only_keys((*t)[k], at, {"q", "value"});
            const Rational q = fraction(field((*t)[k], at, "q"), at + ".q");
            if (!table.emplace(q, fraction(field((*t)[k], at, "value"), at + ".value")).second)
                fail(at, "duplicate point " + q.str());
        }
    }
    const Rational u = fraction(field(rule, vr, "u"), vr + ".u");
    const Rational v = fraction(field(rule, vr, "v"), vr + ".v");
    ValueRule value_rule = wrap(vr, [&] { return ValueRule(u, v, std::move(table)); });

    const std::string ss = where + ".stage_schedule";
    const json& sched = field(j, where, "stage_schedule");
    only_keys(sched, ss, {"p", "r", "overrides"});
    std::map<std::size_t, std::optional<Stage>> overrides;
    if (const json* o = optional_field(sched, "overrides")) {
        if (!o->is_array())
            fail(ss + ".overrides", "expected an array");
        for (std::size_t k = 0; k < o->size(); ++k) {
            const std::string at = ss + ".overrides[" + std::to_string(k) + "]";
            only_keys((*o)[k], at, {"j", "stage"});
            const std::size_t idx = natural(field((*o)[k], at, "j"), at + ".j");
            const json& st = field((*o)[k], at, "stage");
            const std::optional<Stage> stage =
                st.is_null() ? std::nullopt : std::optional<Stage>(natural(st, at + ".stage"));
            if (!overrides.emplace(idx, stage).second)
                fail(at, "duplicate index " + std::to_string(idx));
        }
    }
    StageSchedule schedule(natural(field(sched, ss, "p"), ss + ".p"), natural(field(sched, ss, "r"), ss + ".r"),
                           std::move(overrides));

    return wrap(where, [&] {
        return SolovayWitness(StagedPartialFunction(std::move(inputs), std::move(schedule), std::move(value_rule)), c);
    });
}

void certify_open_unit(const ReferenceReal& r, const std::string& where)
{
    if (!certified_in_open_unit(r, kLoadBudget))
        fail(where, "value not certified inside (0, 1)");
}

std::string str(const Rational& r)
{
    return r.str();
}

json interval_json(const Interval& iv)
{
    return json::array({iv.lo().str(), iv.hi().str()});
}

json detail_json(const DetailValue& v)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return x.str();
            else if constexpr (std::is_same_v<T, Interval>)
                return interval_json(x);
            else
                return x;
        },
        v);
}

std::string detail_text(const DetailValue& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return x.str();
            else if constexpr (std::is_same_v<T, Interval>)
                return "[" + x.lo().str() + ", " + x.hi().str() + "]";
            else if constexpr (std::is_same_v<T, std::string>)
                return x;
            else
                return std::to_string(x);
        },
        v);
}

json tuple_json(const RequirementTuple& t)
{
    json out;
    out["ell"] = t.ell();
    out["indices"] = t.indices;
    json points = json::array();
    json values = json::array();
    for (const Rational& p : t.points)
        points.push_back(p.str());
    for (const Rational& v : t.values)
        values.push_back(v.str());
    out["points"] = std::move(points);
    out["values"] = std::move(values);
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace

Scenario parse_scenario(std::string_view source)
{
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("not valid JSON: ") + e.what());
    }
    only_keys(doc, "file", {"format_version", "scenario"});
    const std::string version = text(field(doc, "file", "format_version"), "format_version");
    if (version != kFormatVersion)
        fail("format_version", "unsupported version '" + version + "', expected '" + kFormatVersion + "'");

    const json& j = field(doc, "file", "scenario");
    const std::string where = "scenario";
    only_keys(j, where,
              {"name", "description", "alpha", "beta", "solovay_witness", "beta_approx", "alpha_leftce_approx",
               "depth", "stage_budget", "guard"});

    Scenario s;
    s.name = text(field(j, where, "name"), where + ".name");
    if (const json* d = optional_field(j, "description"))
        s.description = text(*d, where + ".description");
    s.alpha = parse_real(field(j, where, "alpha"), where + ".alpha");
    s.beta = parse_real(field(j, where, "beta"), where + ".beta");
    certify_open_unit(s.alpha, where + ".alpha");
    certify_open_unit(s.beta, where + ".beta");

    if (const json* w = optional_field(j, "solovay_witness"))
        s.witness = parse_witness(*w, where + ".solovay_witness");
    if (const json* b = optional_field(j, "beta_approx"))
        s.beta_approx = parse_approximation(*b, where + ".beta_approx", s.beta);
    if (const json* a = optional_field(j, "alpha_leftce_approx"))
        s.alpha_leftce_approx = parse_approximation(*a, where + ".alpha_leftce_approx", s.alpha);
    if (s.witness && !s.beta_approx)
        fail(where, "a solovay_witness needs a beta_approx");

    if (const json* d = optional_field(j, "depth"))
        s.depth = natural(*d, where + ".depth");
    if (const json* b = optional_field(j, "stage_budget")) {
        s.stage_budget = natural(*b, where + ".stage_budget");
        if (s.stage_budget == 0)
            fail(where + ".stage_budget", "must be positive");
    }
    if (const json* g = optional_field(j, "guard")) {
        s.guard = natural(*g, where + ".guard");
        if (s.guard == 0)
            fail(where + ".guard", "must be positive");
    }
    if (s.depth > 60)
        fail(where + ".depth", "at most 60 is supported");
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string trace_to_json(const Scenario& s, const ConstructionResult& r, bool accelerate)
{
    json out;
    out["format_version"] = kFormatVersion;
    out["scenario"] = s.name;
    out["status"] = to_string(r.status);
    out["parameters"] = {{"depth", s.depth}, {"stage_budget", s.stage_budget}, {"accelerate", accelerate}};
    out["constant"] = s.witness ? json(s.witness->c.str()) : json();
    if (r.trace.exhausted)
        out["exhausted"] = {{"step", r.trace.exhausted->step}, {"stage_budget", r.trace.exhausted->stage}};
    else
        out["exhausted"] = nullptr;

    json steps = json::array();
    for (const StepRecord& st : r.trace.steps) {
        json step;
        step["n"] = st.n;
        step["i_n"] = st.i_n;
        step["a_n"] = str(st.a_n);
        step["b_i_n"] = str(r.trace.beta_used.term(st.i_n));
        step["stage_found"] = st.stage_found;
        step["tuple"] = st.tuple ? tuple_json(*st.tuple) : json();
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);

    if (r.witness) {
        json a = json::array();
        json b = json::array();
        for (const StepRecord& st : r.trace.steps) {
            a.push_back(str(r.witness->alpha_approx.term(st.n)));
            b.push_back(str(r.witness->beta_approx.term(st.n)));
        }
        out["witness"] = {{"c", r.witness->c.str()}, {"alpha_terms", a}, {"beta_terms", b}, {"tail", "constant"}};
    } else {
        out["witness"] = nullptr;
    }
    return dump(out);
}

std::string report_to_json(const Report& r)
{
    json out;
    out["format_version"] = kFormatVersion;
    out["scenario"] = r.scenario;
    out["mode"] = r.mode;
    json params = json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    out["parameters"] = std::move(params);
    out["overall"] = to_string(r.overall());
    out["exit_code"] = exit_code(r);
    out["counts"] = {{"Holds", r.count(Verdict::Holds)},
                     {"Fails", r.count(Verdict::Fails)},
                     {"Unknown", r.count(Verdict::Unknown)},
                     {"Exhausted", r.count(Verdict::Exhausted)}};

    json checks = json::array();
    for (const CheckRecord& c : r.checks) {
        json rec;
        rec["check"] = c.check;
        rec["n"] = c.n ? json(*c.n) : json();
        rec["verdict"] = to_string(c.verdict);
        rec["relation"] = c.relation;
        json detail = json::object();
        for (const auto& [k, v] : c.detail)
            detail[k] = detail_json(v);
        rec["detail"] = std::move(detail);
        checks.push_back(std::move(rec));
    }
    out["checks"] = std::move(checks);

    json cites = json::array();
    for (const Citation& c : r.citations)
        cites.push_back({{"claim", c.claim}, {"status", c.status}, {"reason", c.reason}});
    out["citations"] = std::move(cites);

    if (r.stages)
        out["stage_statistics"] = {{"stage_per_step", r.stages->stage_per_step},
                                   {"max_stage", r.stages->max_stage},
                                   {"total_stages", r.stages->total_stages}};
    if (r.ladder_nonincreasing) {
        json ladder = json::array();
        for (const LadderEntry& e : r.ladder)
            ladder.push_back({{"q", e.q.str()},
                              {"distance_bound", e.distance_bound ? json(e.distance_bound->str()) : json("GUndefined")}});
        out["translation_ladder"] = std::move(ladder);
        out["ladder_nonincreasing"] = *r.ladder_nonincreasing;
    }
    return dump(out);
}

std::string report_to_text(const Report& r)
{
    std::ostringstream os;
    const auto row = [&os](const std::string& k, const std::string& v) {
        os << std::left << std::setw(12) << k << v << "\n";
    };
    row("scenario", r.scenario);
    row("mode", r.mode);
    std::string params;
    for (const auto& [k, v] : r.parameters)
        params += (params.empty() ? "" : " ") + k + "=" + v;
    row("parameters", params);
    row("overall", std::string(to_string(r.overall())) + " (exit " + std::to_string(exit_code(r)) + ")");
    row("counts", "Holds=" + std::to_string(r.count(Verdict::Holds)) + " Fails=" +
                      std::to_string(r.count(Verdict::Fails)) + " Unknown=" + std::to_string(r.count(Verdict::Unknown)) +
                      " Exhausted=" + std::to_string(r.count(Verdict::Exhausted)));
    if (r.stages)
        row("stages", "max=" + std::to_string(r.stages->max_stage) + " total=" +
                          std::to_string(r.stages->total_stages));
    os << "\n";

    std::size_t wc = 5, wv = 7, wr = 8;
    for (const CheckRecord& c : r.checks) {
        wc = std::max(wc, c.check.size());
        wv = std::max(wv, std::string(to_string(c.verdict)).size());
        wr = std::max(wr, c.relation.size());
    }
    os << std::left << std::setw(static_cast<int>(wc) + 2) << "check" << std::setw(5) << "n"
       << std::setw(static_cast<int>(wv) + 2) << "verdict" << std::setw(static_cast<int>(wr) + 2) << "relation"
       << "detail\n";
    for (const CheckRecord& c : r.checks) {
        std::string detail;
        for (const auto& [k, v] : c.detail)
            detail += (detail.empty() ? "" : " ") + k + "=" + detail_text(v);
        os << std::left << std::setw(static_cast<int>(wc) + 2) << c.check << std::setw(5)
           << (c.n ? std::to_string(*c.n) : std::string("-")) << std::setw(static_cast<int>(wv) + 2)
           << to_string(c.verdict) << std::setw(static_cast<int>(wr) + 2) << c.relation << detail << "\n";
    }
    if (r.ladder_nonincreasing) {
        os << "\ntranslation ladder (nonincreasing=" << (*r.ladder_nonincreasing ? "true" : "false") << ")\n";
        for (const LadderEntry& e : r.ladder)
            os << "  q=" << e.q.str() << " bound=" << (e.distance_bound ? e.distance_bound->str() : "GUndefined")
               << "\n";
    }
    for (const Citation& c : r.citations)
        os << "\n[" << c.status << "] " << c.claim << "\n  " << c.reason << "\n";
    return os.str();
}

std::string oracle_to_json(const Scenario& s, std::size_t n, std::size_t prev_index, Stage stage_cap,
                           const std::optional<OracleHit>& hit)
{
    json out;
    out["format_version"] = kFormatVersion;
    out["scenario"] = s.name;
    out["n"] = n;
    out["prev_index"] = prev_index;
    out["stage_cap"] = stage_cap;
    out["result"] = hit ? "Hit" : "NoHit";
    if (hit) {
        out["stage"] = hit->stage;
        out["i"] = hit->i;
        out["tuple"] = tuple_json(hit->tuple);
    }
    return dump(out);
}

std::string timing_to_json(const std::string& command, const std::string& scenario, double seconds)
{
    json out;
    out["non_deterministic"] = true;
    out["command"] = command;
    out["scenario"] = scenario;
    out["wall_seconds"] = seconds;
    return dump(out);
}

}  // namespace s2a
