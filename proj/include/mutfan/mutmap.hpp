#pragma once
// Piecewise-linear mutation maps, sign-vector invariants, depth-bounded
// cone membership, and the coherent-linear-relation checker.
//
// Sequences of mutation directions are 1-based and apply left to right.
// The canonical enumeration used everywhere lists sequences by length,
// lexicographically within a length, skipping immediate repeats (eta at k
// twice in a row cancels, so repeats add nothing).

#include <optional>
#include <vector>

#include "mutfan/exchange.hpp"
#include "mutfan/numeric.hpp"

namespace mutfan {

using RatVec = std::vector<Rat>;
using SignVector = std::vector<int>;  // entries in {-1, 0, +1}

SignVector signVector(const RatVec& v);
// Per-coordinate test: no coordinate sees both a strictly positive and a
// strictly negative entry across the vectors.
bool signCoherent(const std::vector<RatVec>& vs);

// The piecewise-linear mutation map in direction k. Linear on each of the
// two halfspaces a_k >= 0 and a_k <= 0; invertible with inverse given by
// the same map for the mutated matrix.
RatVec eta(const ExchangeMatrix& b, int k, const RatVec& a);

// Composite along a sequence, mutating the matrix as it goes. Empty
// sequence is the identity.
RatVec etaSeq(const ExchangeMatrix& b, const std::vector<int>& seq, const RatVec& a);

// All canonical sequences of length <= depth for directions 1..n,
// in enumeration order (length ascending, lexicographic within length,
// no immediate repeats). Exposed mostly for tests and tooling.
std::vector<std::vector<int>> canonicalSequences(int n, int depth);

// Sign data of one vector over every canonical sequence up to the depth.
// Two vectors with equal DepthClass values are indistinguishable by sign
// at that depth; genuinely equivalent vectors stay equal at all depths.
struct DepthClass {
    int depth = 0;
    std::vector<std::pair<std::vector<int>, SignVector>> signs;

    bool operator==(const DepthClass& o) const { return depth == o.depth && signs == o.signs; }
    bool operator!=(const DepthClass& o) const { return !(*this == o); }
};
DepthClass depthClass(const ExchangeMatrix& b, const RatVec& a, int depth);

// True iff the images of all vectors are sign-coherent at every canonical
// sequence of length <= depth. True is necessary but not sufficient for
// common-cone membership; false certifies the vectors do not share a cone.
bool sameConeUpToDepth(const ExchangeMatrix& b, const std::vector<RatVec>& vs, int depth,
                       int threads = 1);

// Formal expression sum_i c_i v_i with exact rational data.
struct LinearRelation {
    std::vector<std::pair<Rat, RatVec>> terms;
};

// Verdict of the bounded coherence check. `holds` means no violation was
// found up to the depth; that is a bounded certificate, not a proof, since
// coherence quantifies over all sequences. A refutation names the first
// violating sequence in canonical order and which condition failed: the
// linear condition (sum of images is zero) or the piecewise condition
// (sum of coordinatewise minima with zero is zero).
struct CoherenceVerdict {
    enum class Condition { Linear, Piecewise };

    bool holds = false;
    int depth = 0;
    std::vector<int> refutedAt;
    Condition failedCondition = Condition::Linear;
};

// Checks both defining conditions over every canonical sequence of length
// <= depth. When b has no zero column the piecewise condition is implied
// by the linear one and is skipped; verifyShortcut forces it to be
// evaluated anyway and asserts the implication mechanism (a piecewise
// violation must be accompanied by a linear violation one step deeper).
// Note the two modes may then name refuting sequences differing by one
// step in length.
CoherenceVerdict checkBCoherent(const ExchangeMatrix& b, const LinearRelation& rel, int depth,
                                bool verifyShortcut = false, int threads = 1);

// Fast refutation: if at some sequence and coordinate exactly one term's
// image is strictly positive there while every other term's image is
// nonpositive (or the mirrored situation), that term's coefficient must
// vanish in a coherent relation; a nonzero coefficient refutes. Returns
// the first such sequence, if any appears up to the depth.
std::optional<std::vector<int>> onePositiveRefutation(const ExchangeMatrix& b,
                                                      const LinearRelation& rel, int depth);

// A relation whose vectors all lie in one cone is coherent outright.
// Certificate: the terms sum to zero exactly and the vectors pass
// sameConeUpToDepth at the requested depth.
struct LocalRelationCertificate {
    int depth = 0;
};
std::optional<LocalRelationCertificate> localRelationCertificate(const ExchangeMatrix& b,
                                                                 const LinearRelation& rel,
                                                                 int depth);

}  // namespace mutfan
