/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "s2a/approximation.hpp"
#include "s2a/construction.hpp"
#include "s2a/reference_real.hpp"
#include "s2a/witness.hpp"

namespace s2a {

struct Scenario {
    std::string name;
    std::string description;
    ReferenceReal alpha = ReferenceReal::exact(Rational(0));
    ReferenceReal beta = ReferenceReal::exact(Rational(0));
    std::optional<SolovayWitness> witness;
    std::optional<Approximation> beta_approx;          ///< declared limit is beta
    std::optional<Approximation> alpha_leftce_approx;  ///< declared limit is alpha
    std::size_t depth = 12;
    Stage stage_budget = 10000;
    std::size_t guard = 8;
};

/// Raised when a scenario lacks what a verification mode needs.
class InvalidScenario : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using DetailValue = std::variant<std::string, std::uint64_t, Rational, Interval>;

/// One certified (or failed) claim. `detail` keeps insertion order so that
/// serialized reports are stable.
struct CheckRecord {
    std::string check;
    std::optional<std::size_t> n;
    Verdict verdict = Verdict::Unknown;
    std::string relation;
    std::vector<std::pair<std::string, DetailValue>> detail;

    const DetailValue* find(const std::string& key) const;
};

/// A claim the harness states but cannot decide by finite computation.
struct Citation {
    std::string claim;
    std::string status;
    std::string reason;
};

struct StageStatistics {
    std::vector<Stage> stage_per_step;
    Stage max_stage = 0;
    Stage total_stages = 0;
};

struct Report {
    std::string scenario;
    std::string mode;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckRecord> checks;
    std::vector<Citation> citations;
    std::optional<StageStatistics> stages;
    std::optional<ConstructionResult> construction;
    std::vector<LadderEntry> ladder;  ///< solovay-check mode only
    std::optional<bool> ladder_nonincreasing;
    double seconds = 0.0;  ///< wall time; never serialized into the payload

    void add(CheckRecord record) { checks.push_back(std::move(record)); }
    std::size_t count(Verdict v) const;
    /// Fails if any check fails, else Exhausted or Unknown if any is, else Holds.
    Verdict overall() const;
};

/// 0 all Holds, 1 any Fails, 2 any Unknown/Exhausted and none Fails.
int exit_code(const Report& r);

struct HarnessOptions {
    bool accelerate = true;
    std::size_t oracle_depth = 6;
    std::size_t grid_level = 6;  ///< Solovay spot checks at k / 2^grid_level
};

/// Theorem reproduction: builds the S2a witness, certifies the strict
/// inequality per step, re-checks every chosen tuple, compares with the
/// oracle, and spot-checks the Solovay witness on a dyadic grid.
Report verify_construction(const Scenario& s, const HarnessOptions& opt = {});

/// Mirror witness (1 - a_n, a_n) with constant 1 for a left-c.e. a_n.
Report verify_mirror(const Scenario& s, const HarnessOptions& opt = {});

/// Running maximum of g(b_n) for a left-c.e. b_n.
Report verify_prop1(const Scenario& s, const HarnessOptions& opt = {});

/// Non-strict definition check of the constructed witness.
Report verify_s2a_check(const Scenario& s, const HarnessOptions& opt = {});

/// Solovay grid spot checks plus a translation-limit ladder below beta.
Report verify_solovay_check(const Scenario& s, const HarnessOptions& opt = {});

enum class VerifyMode { Construction, Mirror, Prop1, S2aCheck, SolovayCheck };
const char* to_string(VerifyMode m);
std::optional<VerifyMode> parse_verify_mode(const std::string& name);

Report run_verify(const Scenario& s, VerifyMode mode, const HarnessOptions& opt = {});

}  // namespace s2a
