/* SPDX-License-Identifier: Apache-2.0 */

// Command-line entry point: construct, verify and oracle runs driven by
// scenario files.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "s2a/harness.hpp"
#include "s2a/io.hpp"
#include "s2a/oracle.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitInvalid = 3;

struct Overrides {
    std::optional<std::size_t> depth;
    std::optional<std::uint64_t> stage_budget;
    std::optional<std::size_t> guard;
};

void apply(const Overrides& o, s2a::Scenario& s)
{
    if (o.depth)
        s.depth = *o.depth;
    if (o.stage_budget)
        s.stage_budget = *o.stage_budget;
    if (o.guard)
        s.guard = *o.guard;
}

void write_file(const fs::path& path, const std::string& payload)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << payload;
}

void write_timing(const fs::path& out, const std::string& command, const std::string& scenario, double seconds)
{
    write_file(fs::path(out.string() + ".timing.json"), s2a::timing_to_json(command, scenario, seconds));
}

void add_overrides(CLI::App* cmd, Overrides& o, bool with_guard)
{
    cmd->add_option("--depth", o.depth, "Number of construction steps N");
    cmd->add_option("--stage-budget", o.stage_budget, "Stage budget (0 allowed)");
    if (with_guard)
        cmd->add_option("--guard", o.guard, "Extra enclosure bits")->check(CLI::PositiveNumber);
}

int run_construct(const std::string& path, const Overrides& o, const std::string& out, bool accelerate)
{
    s2a::Scenario s;
    try {
        s = s2a::load_scenario(path);
    } catch (const s2a::ScenarioError& e) {
        std::cerr << "invalid scenario: " << e.what() << "\n";
        return kExitInvalid;
    }
    apply(o, s);
    if (!s.witness) {
        std::cerr << "invalid scenario: construct needs a solovay_witness\n";
        return kExitInvalid;
    }

    const auto start = std::chrono::steady_clock::now();
    const s2a::ConstructionResult r =
        s2a::build_s2a_from_solovay(*s.witness, *s.beta_approx, s.depth, s.stage_budget, {accelerate});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.status == s2a::ConstructionStatus::InvalidScenario) {
        std::cerr << "invalid scenario: " << r.message << "\n";
        return kExitInvalid;
    }

    write_file(out, s2a::trace_to_json(s, r, accelerate));
    write_timing(out, "construct", s.name, seconds);
    std::cout << s.name << ": " << s2a::to_string(r.status) << ", " << r.trace.steps.size() << " steps\n";
    if (r.status == s2a::ConstructionStatus::Complete)
        return kExitOk;
    std::cerr << r.message << "\n";
    return r.status == s2a::ConstructionStatus::Exhausted ? kExitIncomplete : kExitInvalid;
}

struct VerifyJob {
    std::string path;
    int code = kExitInvalid;
    std::string summary;
    std::string text;
};

void run_verify_job(VerifyJob& job, const Overrides& o, s2a::VerifyMode mode, const s2a::HarnessOptions& opt,
                    const std::optional<fs::path>& out)
{
    try {
        s2a::Scenario s = s2a::load_scenario(job.path);
        apply(o, s);
        const s2a::Report r = s2a::run_verify(s, mode, opt);
        job.code = s2a::exit_code(r);
        job.text = s2a::report_to_text(r);
        job.summary = s.name + ": " + s2a::to_string(r.overall()) + " (exit " + std::to_string(job.code) + ")";
        if (out) {
            write_file(*out, s2a::report_to_json(r));
            write_timing(*out, std::string("verify ") + s2a::to_string(mode), s.name, r.seconds);
        }
    } catch (const s2a::ScenarioError& e) {
        job.code = kExitInvalid;
        job.summary = job.path + ": invalid scenario: " + e.what();
    } catch (const s2a::InvalidScenario& e) {
        job.code = kExitInvalid;
        job.summary = job.path + ": invalid scenario: " + e.what();
    }
}

int worst(const std::vector<VerifyJob>& jobs)
{
    int code = kExitOk;
    for (const VerifyJob& j : jobs) {
        if (j.code == kExitInvalid)
            return kExitInvalid;
        if (j.code == kExitFails)
            code = kExitFails;
        else if (j.code == kExitIncomplete && code == kExitOk)
            code = kExitIncomplete;
    }
    return code;
}

int run_verify_cmd(const std::vector<std::string>& paths, const std::string& mode_name, const Overrides& o,
                   const s2a::HarnessOptions& opt, const std::string& out, const std::string& text_out,
                   unsigned jobs)
{
    const auto mode = s2a::parse_verify_mode(mode_name);
    if (!mode) {
        std::cerr << "unknown mode: " << mode_name << "\n";
        return kExitInvalid;
    }

    std::vector<VerifyJob> work(paths.size());
    std::vector<std::optional<fs::path>> outs(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        work[k].path = paths[k];
        if (out.empty())
            continue;
        if (paths.size() == 1)
            outs[k] = fs::path(out);
        else
            outs[k] = fs::path(out) / (fs::path(paths[k]).stem().string() + "." + mode_name + ".json");
    }

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < work.size(); k = next++)
            run_verify_job(work[k], o, *mode, opt, outs[k]);
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();

    if (work.size() == 1 && !work[0].text.empty()) {
        if (text_out.empty())
            std::cout << work[0].text;
        else
            write_file(text_out, work[0].text);
    }
    for (const VerifyJob& j : work) {
        if (j.code == kExitInvalid)
            std::cerr << j.summary << "\n";
        else
            std::cout << j.summary << "\n";
    }
    return worst(work);
}

int run_oracle(const std::string& path, std::size_t n, const Overrides& o, const std::string& out)
{
    s2a::Scenario s;
    try {
        s = s2a::load_scenario(path);
    } catch (const s2a::ScenarioError& e) {
        std::cerr << "invalid scenario: " << e.what() << "\n";
        return kExitInvalid;
    }
    apply(o, s);
    if (!s.witness) {
        std::cerr << "invalid scenario: oracle needs a solovay_witness\n";
        return kExitInvalid;
    }
    if (n == 0) {
        std::cerr << "--n must be at least 1\n";
        return kExitInvalid;
    }

    const auto start = std::chrono::steady_clock::now();
    const s2a::ConstructionResult prior =
        s2a::build_s2a_from_solovay(*s.witness, *s.beta_approx, n - 1, s.stage_budget);
    std::optional<s2a::OracleHit> hit;
    std::size_t prev = 0;
    if (prior.status == s2a::ConstructionStatus::Complete) {
        prev = prior.trace.steps.back().i_n;
        hit = s2a::oracle_min_hit(n, prev, *s.witness, prior.trace.beta_used, s.stage_budget);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    write_file(out, s2a::oracle_to_json(s, n, prev, s.stage_budget, hit));
    write_timing(out, "oracle", s.name, seconds);
    if (!hit) {
        std::cout << s.name << ": NoHit for n = " << n << "\n";
        return kExitIncomplete;
    }
    std::cout << s.name << ": n = " << n << " stage " << hit->stage << " i " << hit->i << " ell "
              << hit->tuple.ell() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solovay to S2a witness conversion and verification"};
    app.require_subcommand(1);
    // Usage errors share the invalid-input exit code.
    app.footer("Exit codes: 0 all hold, 1 a check fails, 2 unknown or exhausted, 3 invalid input.");

    Overrides o;
    bool no_accel = false;
    std::string out;

    std::string construct_path;
    auto* construct = app.add_subcommand("construct", "Build the S2a witness from a Solovay witness");
    construct->add_option("scenario", construct_path, "Scenario file")->required();
    construct->add_option("--out", out, "Trace output path")->required();
    construct->add_flag("--no-accelerator", no_accel, "Scan stages one by one");
    add_overrides(construct, o, false);

    std::vector<std::string> verify_paths;
    std::string mode = "construction";
    std::string text_out;
    unsigned jobs = 1;
    s2a::HarnessOptions opt;
    auto* verify = app.add_subcommand("verify", "Certify a scenario with the harness");
    verify->add_option("scenario", verify_paths, "Scenario file(s)")->required();
    verify->add_option("--mode", mode, "construction | mirror | prop1 | s2a-check | solovay-check");
    verify->add_option("--out", out, "Report path (directory when several scenarios are given)");
    verify->add_option("--text", text_out, "Write the aligned text report here instead of stdout");
    verify->add_option("--jobs", jobs, "Scenario files verified in parallel")->check(CLI::PositiveNumber);
    verify->add_option("--oracle-depth", opt.oracle_depth, "Steps compared against the oracle");
    verify->add_flag("--no-accelerator", no_accel, "Scan stages one by one");
    add_overrides(verify, o, true);

    std::string oracle_path;
    std::size_t oracle_n = 1;
    auto* oracle = app.add_subcommand("oracle", "Brute-force minimal hit for one step");
    oracle->add_option("scenario", oracle_path, "Scenario file")->required();
    oracle->add_option("--n", oracle_n, "Step n >= 1")->required();
    oracle->add_option("--out", out, "Output path")->required();
    add_overrides(oracle, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*construct)
            return run_construct(construct_path, o, out, !no_accel);
        if (*verify) {
            opt.accelerate = !no_accel;
            return run_verify_cmd(verify_paths, mode, o, opt, out, text_out, jobs);
        }
        return run_oracle(oracle_path, oracle_n, o, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
