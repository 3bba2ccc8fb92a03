#pragma once

#include <vector>

#include "mutfan/exchange.hpp"
#include "mutfan/numeric.hpp"

namespace mutfan {

using IntVec = std::vector<Int>;

// Extended 2n x n matrix state of a pattern that starts from a base matrix
// with an identity coefficient block, tracked along a walk from the root.
class PrincipalPattern {
public:
    explicit PrincipalPattern(ExchangeMatrix base);

    int size() const { return base_.size(); }
    const ExchangeMatrix& initial() const { return base_; }
    const ExchangeMatrix& current() const { return cur_.base(); }
    const std::vector<int>& path() const { return path_; }

    // Entry of the 2n x n matrix at the current vertex: rows 0..n-1 are the
    // mutated base matrix, rows n..2n-1 the mutated coefficient block. The
    // coefficient block stays integral along every walk.
    Int entry(int i, int k) const;

    // Mutates in direction k (1-based) and extends the path.
    PrincipalPattern step(int k) const;

private:
    ExchangeMatrix base_;
    ExtendedExchangeMatrix cur_;
    std::vector<int> path_;
};

// The n vectors g_{1;t}..g_{n;t} at the vertex reached by `path`.
struct GVectorFamily {
    std::vector<IntVec> vectors;
    std::vector<int> path;

    bool operator==(const GVectorFamily& o) const = default;
};

GVectorFamily initialFamily(int n);

// One step of the g-vector recurrence in direction k (1-based). Both
// equivalent forms of the recurrence are evaluated and must agree; a
// disagreement means an upstream bug and throws std::logic_error. The
// pattern must sit at the same vertex as the family.
GVectorFamily stepGVectors(const GVectorFamily& fam, const PrincipalPattern& pat, int k);

struct GVectorFanResult {
    // Distinct families as lexicographically sorted vector sets, in
    // discovery order.
    std::vector<std::vector<IntVec>> cones;
    // True when the walk stopped producing new seeds before the depth cap,
    // so the listing is complete.
    bool closed = false;
};

// All distinct g-vector families for the pattern matrix, walked to the
// given tree depth.
GVectorFanResult gVectorFan(const ExchangeMatrix& bT, int depth);

struct TransitionReport {
    int verticesChecked = 0;
    int vectorsChecked = 0;
    // Paths (from the far vertex of the initial edge) where the transition
    // law failed. The law is conjectural in general, so failures are
    // reported rather than thrown.
    std::vector<std::vector<int>> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// Verifies, to the given depth, that g-vectors based at the two ends of
// one tree edge are related by the mutation map of the transposed matrix:
// the family at vertex t computed from (mu_k(B); t1) must equal the
// eta_k image (for B transposed) of the family at t computed from (B; t0).
TransitionReport checkTransitionLaw(const ExchangeMatrix& b0, int k, int depth);

// True when the family's vectors form a basis of the integer lattice.
bool unimodularCheck(const GVectorFamily& fam);

}  // namespace mutfan
