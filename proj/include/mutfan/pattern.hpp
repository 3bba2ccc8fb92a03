#pragma once
// Symbolic cluster patterns of geometric type: exact Laurent cluster
// variables whose coefficients live in the group ring over a tropical
// semifield, seed mutation, walks along the mutation tree, and
// periodicity detection. Desk scale by design: rank <= 3 and walks of
// length <= 40; polynomial growth is documented, not fought.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutfan/exchange.hpp"
#include "mutfan/numeric.hpp"
#include "mutfan/tropical.hpp"

namespace mutfan {

// Integer-weighted formal sum of tropical monomials. Canonical form: no
// zero weights stored, terms keyed by monomial. This is where the
// coefficients of cluster-variable numerators live; the monomials form a
// group, so exact division is leading-term recursion.
class GroupRingElem {
public:
    GroupRingElem() = default;
    explicit GroupRingElem(const Int& weight);
    explicit GroupRingElem(const TropMonomial& m, const Int& weight = Int(1));

    const std::map<TropMonomial, Int>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    // Exactly one term, any weight.
    bool isMonomial() const { return terms_.size() == 1; }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& o) const;

    bool operator==(const GroupRingElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const GroupRingElem& o) const { return terms_ != o.terms_; }

    // Exact quotient num/den. Throws std::logic_error when the quotient
    // does not exist with integer weights (the callers' invariants
    // guarantee existence; a failure means a broken Laurent computation).
    static GroupRingElem divExact(const GroupRingElem& num, const GroupRingElem& den);

    // Applies a tropical linear map to every monomial; colliding images
    // merge their weights.
    GroupRingElem mapMonomials(const TropLinearMap& f) const;

    // "u_c + 2 * u_a * u_e" style; "0" for zero. Terms in storage order.
    std::string toString() const;

private:
    std::map<TropMonomial, Int> terms_;

    void addTerm(const TropMonomial& m, const Int& w);
};

// Polynomial in the cluster variables x_1..x_n with GroupRingElem
// coefficients. Exponent keys are nonnegative integer vectors of fixed
// length n; no zero coefficients stored.
class CoefPolynomial {
public:
    explicit CoefPolynomial(int n = 0);
    static CoefPolynomial constant(int n, const GroupRingElem& c);
    static CoefPolynomial variable(int n, int j);  // x_j, 1-based j
    static CoefPolynomial monomial(int n, const std::vector<int>& xExp,
                                   const GroupRingElem& c);

    int vars() const { return n_; }
    const std::map<std::vector<int>, GroupRingElem>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    CoefPolynomial operator+(const CoefPolynomial& o) const;
    CoefPolynomial operator-(const CoefPolynomial& o) const;
    CoefPolynomial operator*(const CoefPolynomial& o) const;

    bool operator==(const CoefPolynomial& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const CoefPolynomial& o) const { return !(*this == o); }

    // this * c * x^xExp.
    CoefPolynomial mulTerm(const std::vector<int>& xExp, const GroupRingElem& c) const;

    // Exact quotient; throws std::logic_error when division leaves a
    // remainder. Mutation relies on this never happening (the Laurent
    // property), so a throw is a loud invariant failure.
    static CoefPolynomial divExact(const CoefPolynomial& num, const CoefPolynomial& den);

    // Componentwise minimum of the exponent keys (0-vector when empty).
    std::vector<int> exponentFloor() const;

    // Applies a tropical linear map to every coefficient.
    CoefPolynomial mapCoefficients(const TropLinearMap& f) const;

    // Terms from highest x-exponent down, e.g. "x2^2 * u_c + u_a * u_e".
    std::string toString(const std::vector<std::string>& names) const;
    std::string toString() const;  // default names x1..xn

private:
    int n_;
    std::map<std::vector<int>, GroupRingElem> terms_;

    void addTerm(const std::vector<int>& xExp, const GroupRingElem& c);
};

// A cluster variable in Laurent form: numerator polynomial over a
// monomial x^denominator, reduced so no x_j with denominator[j] > 0 also
// divides the numerator.
struct ClusterVariable {
    CoefPolynomial numerator;
    std::vector<int> denominator;

    bool operator==(const ClusterVariable& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
    bool operator!=(const ClusterVariable& o) const { return !(*this == o); }

    std::string toString(const std::vector<std::string>& names) const;
    std::string toString() const;
};

// Cancels common monomial content between numerator and denominator.
ClusterVariable makeClusterVariable(const CoefPolynomial& numerator,
                                    const std::vector<int>& denominator);

// A labeled seed: n cluster variables plus the extended exchange matrix
// whose coefficient rows drive the exchange relation.
struct Seed {
    std::vector<ClusterVariable> cluster;
    ExtendedExchangeMatrix matrix;

    bool operator==(const Seed& o) const {
        return cluster == o.cluster && matrix == o.matrix;
    }
    bool operator!=(const Seed& o) const { return !(*this == o); }
};

// The seed whose cluster is x_1..x_n.
Seed initialSeed(const ExtendedExchangeMatrix& m);

// y_j = prod_i u_i^{r_ij} read off the coefficient rows, as a (Laurent)
// tropical monomial. 1-based j.
TropMonomial seedCoefficient(const Seed& s, int j);

// One mutation step: replaces cluster variable k through the exchange
// binomial (the tropical coefficient y_k split into its positive and
// negative parts) and mutates the matrix. 1-based k.
Seed seedMutate(const Seed& s, int k);

// Successive seeds along the walk, starting with s itself (so the result
// has seq.size() + 1 entries).
std::vector<Seed> walkPattern(const Seed& s, const std::vector<int>& seq);

// Smallest p <= maxSteps with seed(p) == s when mutating along genSeq
// repeated cyclically; nullopt when the walk never returns in range.
std::optional<int> detectPeriod(const Seed& s, const std::vector<int>& genSeq,
                                int maxSteps);

}  // namespace mutfan
