#pragma once
// Exact arithmetic in the ring Q + Q*sqrt(s) + Q*sqrt(t) + Q*sqrt(s*t) for
// two nonnegative integer radicands. Values are kept canonical: radicands
// squarefree, perfect squares folded into the rational part, and equal
// radicands merged, so equality and the zero test are plain field compares.

#include "mutfan/numeric.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mutfan {

class QuadScalar {
public:
    QuadScalar();
    explicit QuadScalar(const Rat& c0);
    explicit QuadScalar(const Int& c0);
    // c0 + c1*sqrt(s)
    QuadScalar(const Rat& c0, const Rat& c1, const Int& s);
    // c0 + c1*sqrt(s) + c2*sqrt(t) + c3*sqrt(s*t)
    QuadScalar(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3,
               const Int& s, const Int& t);

    static QuadScalar sqrtOf(const Int& radicand);

    // Canonical coefficients; index 0..3 matches c0..c3 above.
    const Rat& coeff(int i) const;
    // Canonical radicands. Inactive slots read 1; active slots are
    // squarefree and > 1, with s < t when both are active.
    const Int& radicandS() const;
    const Int& radicandT() const;

    bool isZero() const;
    bool isRational() const;
    // Throws std::logic_error when a radical part is present.
    Rat rationalValue() const;

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator*(const Rat& r) const;
    bool operator==(const QuadScalar& o) const;
    bool operator!=(const QuadScalar& o) const;

    // Exact sign: -1, 0, +1. Zero is decided from canonical coefficients;
    // a nonzero value's sign comes from interval refinement of the square
    // roots with rational endpoints, which terminates because the value
    // is known to be exactly nonzero.
    int sign() const;

    // Text form "c0 + c1*sqrt(s) + c2*sqrt(t) + c3*sqrt(s*t)" with zero
    // terms dropped; "0" when the value is zero.
    std::string toString() const;

private:
    std::array<Rat, 4> c_;
    Int s_, t_;

    void canonicalize();
    // The canonical storage pair for a set of live squarefree radicands:
    // the two smallest members of the closure triple {p, q, pq/gcd(p,q)^2}.
    // Throws std::invalid_argument when the set does not fit one
    // biquadratic field.
    static std::pair<Int, Int> canonicalPair(const std::set<Int>& radicands);
    void assignFromTerms(const Rat& c0,
                         const std::vector<std::pair<Rat, Int>>& terms,
                         const Int& m1, const Int& m2);
    // Rewrites both values over a shared radicand pair. Throws
    // std::invalid_argument when their fields do not embed in one
    // biquadratic field.
    static void align(QuadScalar& x, QuadScalar& y);
};

QuadScalar operator*(const Rat& r, const QuadScalar& q);

}  // namespace mutfan
