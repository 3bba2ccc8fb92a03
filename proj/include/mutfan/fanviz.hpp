#pragma once
// Depth-bounded approximation of the mutation fan by pulled-back coordinate
// hyperplanes, exact rank-2 fan ray lists, exact depth-class cells, and SVG
// stereographic rendering of rank-3 arrangements.

#include <optional>
#include <string>
#include <vector>

#include "mutfan/exchange.hpp"
#include "mutfan/mutmap.hpp"
#include "mutfan/rank2.hpp"

namespace mutfan {

// One linear piece of a pulled-back coordinate hyperplane: the cone
// spanned by `cell` (one generator in rank 2, two in rank 3), on which the
// composite mutation map is a single linear map, and the functional
// vanishing on it. Both are primitive integer vectors; the normal's first
// nonzero entry is positive and the cell generators are sorted.
struct WallPiece {
    std::vector<Int> normal;
    std::vector<std::vector<Int>> cell;

    bool operator==(const WallPiece& o) const { return normal == o.normal && cell == o.cell; }
    bool operator<(const WallPiece& o) const {
        return normal != o.normal ? normal < o.normal : cell < o.cell;
    }
};

// The full preimage of one coordinate hyperplane under the mutation map of
// one sequence, as a list of pieces that cover it.
struct PulledBackHyperplane {
    std::vector<int> sequence;
    int coordinate = 0;  // 1-based
    std::vector<WallPiece> pieces;
};

// One ray of an exact rank-2 fan: either a primitive integer vector or an
// irrational limit ray held exactly in a quadratic extension.
struct Rank2FanRay {
    bool isLimit = false;
    IntVec2 v;
    QuadVec2 limit;
};

struct FanApproximation {
    int depth = 0;
    // One entry per (canonical sequence, coordinate), in enumeration order
    // with coordinates ascending; deeper approximations extend shallower
    // ones without recomputing or coarsening them.
    std::vector<PulledBackHyperplane> walls;
    // Rank 2 only: the exact fan rays in circular order, for comparison
    // against the approximation.
    std::optional<std::vector<Rank2FanRay>> rank2Rays;
};

// Pieces of every pulled-back coordinate hyperplane for all canonical
// sequences of length <= m. Supports rank 2 and rank 3.
FanApproximation approximateFan(const ExchangeMatrix& b, int m, int threads = 1);

// Deduped union of all wall pieces, sorted canonically.
std::vector<WallPiece> uniqueWallPieces(const FanApproximation& fan);

// Deduped primitive cell generators of all wall pieces.
std::vector<std::vector<Int>> wallRays(const FanApproximation& fan);

// The exact rays of the rank-2 mutation fan for [[0, a], [b, 0]] in
// counterclockwise circular order starting at (1, 0): the full finite list
// when ab >= -3, the truncated families plus the single rational limit ray
// when ab = -4, and the truncated families plus the two irrational rays
// bounding the limit cone when ab <= -5.
std::vector<Rank2FanRay> rank2ExactFan(long long a, long long b, int count);

// The closure of the depth-m class of v, cut by the plane <sgn(v), x> = 1
// into an exact polygon. Requires rank 3 and a v with no zero coordinate.
// sectionArea is the area of the polygon's projection along e2, an exact
// measure comparable across depths for a fixed v.
struct DepthClassCell {
    std::vector<RatVec> sectionVertices;          // circular order on the plane
    std::vector<std::vector<Int>> extremeRays;    // primitive, one per vertex
    Rat sectionArea = Rat(0);
};
DepthClassCell depthClassCell(const ExchangeMatrix& b, const RatVec& v, int m);

// Renders every unique wall piece of a rank-3 approximation as a great
// circle arc under stereographic projection. The projection sends the
// direction `towards` (default (1, 1, 1)) to the origin and its antipode
// to infinity. Writes the SVG to outPath and returns it. All incidence
// structure is fixed exactly before any floating point enters.
std::string renderStereographic(const FanApproximation& fan, const std::string& outPath);
std::string renderStereographic(const FanApproximation& fan, const std::string& outPath,
                                const RatVec& towards);

}  // namespace mutfan
