#pragma once
// Exact arithmetic core: arbitrary-precision integers and rationals,
// canonical "p/q" text form, and small helpers shared by all modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mutfan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& v) { return v.sign(); }
inline int sgn(const Rat& v) { return v.sign(); }

inline Int positivePart(const Int& v) { return v > 0 ? v : Int(0); }
inline Rat positivePart(const Rat& v) { return v > 0 ? v : Rat(0); }

// Canonical form "p/q" with q > 0 and gcd(p, q) = 1. cpp_rational keeps
// that normalization internally, so this is a plain two-part print.
inline std::string ratToString(const Rat& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

// Accepts "p/q" and bare integers "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat ratFromString(const std::string& text);

std::string intVecToString(const std::vector<Int>& v);
std::string ratVecToString(const std::vector<Rat>& v);

// Exact determinant by fraction-free (Bareiss) elimination. Square input.
Int intDet(std::vector<std::vector<Int>> m);

// Solves A x = b exactly by Gauss-Jordan elimination. Returns an empty
// optional-like flag pair: {solved, x}. When the system is solvable but
// underdetermined, `unique` is set false and one solution is returned
// with free variables at zero.
struct LinearSolveResult {
    bool solvable = false;
    bool unique = false;
    std::vector<Rat> solution;
};
LinearSolveResult solveLinear(const std::vector<std::vector<Rat>>& a,
                              const std::vector<Rat>& b);

}  // namespace mutfan
