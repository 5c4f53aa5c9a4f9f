/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "s2a/approximation.hpp"
#include "s2a/rational.hpp"
#include "s2a/reference_real.hpp"
#include "s2a/witness.hpp"

namespace s2a {

/// Candidate witnesses for requirement R_n: enumeration indices m_0..m_ell
/// with their points and g-values.
struct RequirementTuple {
    std::vector<std::size_t> indices;
    std::vector<Rational> points;
    std::vector<Rational> values;

    std::size_t ell() const { return points.empty() ? 0 : points.size() - 1; }

    friend bool operator==(const RequirementTuple&, const RequirementTuple&) = default;
};

/// Clauses of R_n in checking order.
enum class RequirementClause {
    EllAtLeastTwo = 1,  ///< (i)   ell >= 2
    Sandwiched,         ///< (ii)  b - 2^-(n+1) < q_ell < b
    SortedFromZero,     ///< (iii) 0 = q_0 < ... < q_ell
    GapsBelow,          ///< (iv)  q_{k+1} - q_k < 2^-(n+1)
    GDistances,         ///< (v)   0 < g_ell - g_k < c (q_ell - q_k + 2^-(n+2))
};

const char* to_string(RequirementClause c);

struct RequirementVerdict {
    bool satisfied = true;
    RequirementClause failed = RequirementClause::EllAtLeastTwo;

    static RequirementVerdict ok() { return {}; }
    static RequirementVerdict fails(RequirementClause c) { return {false, c}; }
    friend bool operator==(const RequirementVerdict&, const RequirementVerdict&) = default;
};

/// Exact decision of R_n for b with constant c. Throws std::invalid_argument
/// when the tuple's vectors have different lengths.
RequirementVerdict check_requirement(std::size_t n, const Rational& b, const Rational& c,
                                     const RequirementTuple& tuple);

struct StepRecord {
    std::size_t n = 0;
    std::size_t i_n = 0;
    Rational a_n;
    std::optional<RequirementTuple> tuple;  ///< absent for n = 0
    Stage stage_found = 0;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct SearchOptions {
    /// Locate the first successful stage by bisection (exact, since
    /// satisfiability is monotone in the stage). When false, stages are
    /// scanned one by one.
    bool accelerate = true;
};

/// Step n >= 1 of the conversion: the first (stage, i, tuple) in canonical
/// order (stage, then i > prev.i_n with i <= stage, then ell, then tuple
/// positions in point order lexicographically) whose b_i satisfies R_n.
/// `b` must already start with the prepended 0. nullopt when the budget runs out.
std::optional<StepRecord> search_step(std::size_t n, const StepRecord& prev, const SolovayWitness& w,
                                      const Approximation& b, Stage stage_budget, SearchOptions options = {});

struct Exhaustion {
    std::size_t step = 0;
    Stage stage = 0;
};

struct ConstructionTrace {
    std::vector<StepRecord> steps;
    Approximation beta_used;          ///< the beta-approximation after prepending 0
    std::size_t index_offset = 1;     ///< i in beta_used equals i - index_offset in the input
    std::optional<Exhaustion> exhausted;
};

enum class ConstructionStatus { Complete, Exhausted, InvalidScenario };
const char* to_string(ConstructionStatus s);

struct ConstructionResult {
    ConstructionStatus status = ConstructionStatus::Complete;
    ConstructionTrace trace;
    std::optional<S2aWitness> witness;  ///< present when Complete
    std::string message;
};

/// Converts a Solovay witness for alpha <=_S beta into approximations
/// (a_n, b_{i_n}) with the same constant, for steps 0..depth.
ConstructionResult build_s2a_from_solovay(const SolovayWitness& w, const Approximation& b, std::size_t depth,
                                          Stage stage_budget, SearchOptions options = {});

struct LeftCeResult {
    bool exhausted = false;
    std::size_t exhausted_at = 0;        ///< index m whose g(b_m) stayed pending
    std::vector<Rational> raw;           ///< g(b_m)
    std::vector<Stage> stages;           ///< stage at which each g(b_m) became defined
    std::optional<Approximation> approx; ///< running maximum, LeftCE, constant tail after depth
};

/// a_n = g(b_n) for n <= depth and its running maximum.
LeftCeResult build_leftce_from_solovay(const SolovayWitness& w, const Approximation& b, std::size_t depth,
                                       Stage stage_budget);

/// (1 - a_n, a_n) with constant 1.
S2aWitness mirror_s2a(const Approximation& a);

}  // namespace s2a
