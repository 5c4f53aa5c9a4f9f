/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <optional>

#include "s2a/approximation.hpp"
#include "s2a/construction.hpp"
#include "s2a/witness.hpp"

namespace s2a {

struct OracleHit {
    Stage stage = 0;
    std::size_t i = 0;
    RequirementTuple tuple;

    friend bool operator==(const OracleHit&, const OracleHit&) = default;
};

/// Brute-force counterpart of search_step: walks stages, indices, ell and
/// position vectors in the same canonical order with plain nested loops.
/// The only cut is that a partial vector is abandoned once a gap reaches
/// 2^-(n+1) or a point reaches b; no extension could satisfy R_n then.
/// `b` must already start with the prepended 0.
std::optional<OracleHit> oracle_min_hit(std::size_t n, std::size_t prev_index, const SolovayWitness& w,
                                        const Approximation& b, Stage stage_cap);

}  // namespace s2a
