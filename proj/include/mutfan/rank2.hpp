#pragma once
// Rank-2 theory: the P_m polynomial family, the four explicit g-vector ray
// families for infinite type, exact limit rays over a quadratic extension,
// and universal extended exchange matrix constructors for finite, affine,
// and wild exchange matrices [[0, a], [b, 0]].

#include "mutfan/exchange.hpp"
#include "mutfan/quad.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mutfan {

using IntVec2 = std::vector<Int>;
using QuadVec2 = std::array<QuadScalar, 2>;

// P_m evaluated at an integer value of ab <= 0. P_0 = P_1 = 1,
// P_2 = -ab - 1, P_3 = -ab - 2, and in general
// P_m = (-1)^floor(m/2) * sum_i binom(m-i, i) (ab)^(floor(m/2)-i).
Int pPoly(long long m, long long ab);

// Checks the Chebyshev identity for P_m with s = -ab: U_m(sqrt(s)/2)
// equals P_m for even m and sqrt(s)*P_m for odd m, where U is the
// second-kind Chebyshev recurrence evaluated exactly in QuadScalar form.
bool chebyshevCheck(long long m, long long ab);

// One vector of a ray family. `family` is 1 or 2; the index m >= -2, with
// m = -2 and m = -1 giving the unit-vector heads via P_{-1} = 0 and
// P_{-2} = -1. Within a family, even and odd m follow different closed
// forms; consecutive m interlace toward the family's limit ray.
IntVec2 rank2FamilyVector(int family, long long m, long long a, long long b);

// All rays of the mutation fan up to truncation, for ab <= -4:
// [e1, e2, -e1, -e2], then the four families, each contributing `count`
// vectors: family 1 even m = 0, 2, ..., family 1 odd m = 1, 3, ...,
// family 2 even, family 2 odd.
std::vector<IntVec2> rank2Rays(long long a, long long b, int count);

struct LimitRays {
    QuadVec2 vinf;    // limit of family 1
    QuadVec2 vminus;  // limit of family 2
    // Affine case only (ab = -4): both limits span one rational ray, and
    // this is the shortest integer vector on it.
    std::optional<IntVec2> integerRep;
};

// Exact limit rays for ab <= -4, with s = -ab and t = -ab - 4:
// vinf = (2 sgn(a) sqrt(s), -a (sqrt(s) + sqrt(t))) and
// vminus = (-b (sqrt(s) + sqrt(t)), 2 sgn(b) sqrt(s)).
LimitRays limitRays(long long a, long long b);

// A unimodular integer pair strictly inside the limit cone, for
// ab <= -5. Deterministic choice: scan the plane by increasing max-norm,
// lexicographically within a shell, and return the first pair of strictly
// interior points with determinant of absolute value 1.
std::pair<IntVec2, IntVec2> wildIntegerPair(long long a, long long b);

enum class Rank2Kind { Finite, Affine, Wild };

struct Rank2Universal {
    long long a = 0;
    long long b = 0;
    Rank2Kind kind = Rank2Kind::Finite;
    // Labeled coefficient rows of the universal extended exchange matrix.
    // Finite type lists every ray once, units first and the interior rays
    // in counterclockwise order, labeled "a", "b", "c", ... . Affine and
    // wild types list the units (labels "a".."d"), family 1 as "p0",
    // "p1", ..., family 2 as "q0", "q1", ... (indexed by interlacing m),
    // then "lim" for the affine limit row or "r1"/"r2" for the wild
    // integral replacement pair.
    std::vector<std::pair<std::string, IntVec2>> rows;
    // Exact limit rays: empty for finite type, {vinf} for affine (the two
    // limits coincide), {vinf, vminus} for wild.
    std::vector<QuadVec2> limitRows;
    // Wild type only: the chosen unimodular pair inside the limit cone.
    std::optional<std::pair<IntVec2, IntVec2>> integerPair;
};

// Universal extended exchange matrix data for B = [[0, a], [b, 0]] with
// sgn(b) = -sgn(a) or a = b = 0. `count` truncates each infinite family.
// Inputs with a < 0 are handled by negating to the a > 0 orientation,
// computing there, and negating every output row (the mutation fan of -B
// is the antipodal image of the fan of B).
Rank2Universal universalRank2(long long a, long long b, int count = 8);

// Assembles the labeled rows over the exchange matrix [[0, a], [b, 0]].
// Exact limit rows are not part of the integer matrix and are omitted.
ExtendedExchangeMatrix toExtendedMatrix(const Rank2Universal& u);

}  // namespace mutfan
