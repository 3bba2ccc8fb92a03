#pragma once
// Coefficient specialization: express each row of a target extended matrix
// over the rows of a universal one lying in that row's cone, package the
// coefficients as a tropical linear map, and verify the defining pointwise
// conditions along bounded mutation walks.

#include <string>
#include <utility>
#include <vector>

#include "mutfan/exchange.hpp"
#include "mutfan/pattern.hpp"
#include "mutfan/tropical.hpp"

namespace mutfan {

// Both matrices must share the principal part; depth bounds every cone
// membership test and coherence check used while solving.
struct SpecializationProblem {
    ExtendedExchangeMatrix universal;
    ExtendedExchangeMatrix target;
    int depth = 8;
};

// One solved target row: the universal rows carrying nonzero weight, in
// universal row order.
struct RowSupport {
    std::string targetLabel;
    std::vector<std::pair<std::string, Rat>> support;

    bool operator==(const RowSupport& o) const {
        return targetLabel == o.targetLabel && support == o.support;
    }
};

struct SpecializationSolution {
    // phi(u_i) = prod_k v_k^{p_ik}: source variables are the universal
    // labels, target variables the target labels.
    TropLinearMap map;
    std::vector<RowSupport> perRowSupport;
};

// For each target row a_k, locates the universal rows whose images stay
// sign-subordinate to a_k's along every canonical sequence up to depth,
// then solves a_k = sum_i p_ik b_i exactly over candidate subsets taken
// in deterministic order (size ascending, then universal row order) and
// accepts the first unique solution whose relation passes the coherence
// check at the same depth. Throws std::invalid_argument when no subset
// spans the row, when every solvable subset stays ambiguous, or, with
// ring Integers, when a solved weight is fractional (the witness entry is
// named). requirePositive additionally rejects any negative weight.
SpecializationSolution solveSpecialization(const SpecializationProblem& p,
                                           TropLinearMap::Ring ring = TropLinearMap::Ring::Rationals,
                                           bool requirePositive = false);

// Pushes a seed of the universal pattern through the solved map: every
// tropical coefficient is mapped, x-variable structure is untouched, and
// the coefficient rows are rebuilt as a_k = sum_i p_ik b_i from the seed's
// own rows. The seed's row labels must be exactly the map's source labels.
Seed applySpecialization(const SpecializationSolution& sol, const Seed& sourceSeed);

// Outcome of the exhaustive bounded walk. On failure the first violation
// in canonical-sequence order is named: the vertex's mutation sequence,
// the target row, the 1-based column, and which condition broke, the
// linear one (sum p_ik b_i^t = a_k^t) or the min one
// (sum p_ik min(b_i^t, 0) = min(a_k^t, 0)).
struct SpecializationReport {
    bool ok = false;
    int walkDepth = 0;
    std::vector<int> failedAt;
    std::string failedRow;
    int failedColumn = 0;
    std::string failedCondition;

    std::string toString() const;
};

// Checks both conditions exactly at every vertex reachable by a canonical
// sequence of length <= walkDepth.
SpecializationReport verifySpecializationConditions(const SpecializationSolution& sol,
                                                    const SpecializationProblem& p, int walkDepth);

}  // namespace mutfan
