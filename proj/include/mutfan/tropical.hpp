#pragma once
// Tropical semifields on formal variables u_label: multiplicative monomials
// with exact rational exponents, the auxiliary addition (entrywise minimum
// of exponents), and column-finite linear maps between semifields.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mutfan/numeric.hpp"

namespace mutfan {

// A monomial prod u_i^{a_i} in sparse canonical form: stored exponents are
// nonzero, labels sorted. The empty map is the identity 1.
class TropMonomial {
public:
    TropMonomial() = default;
    explicit TropMonomial(std::map<std::string, Rat> exponents);
    static TropMonomial variable(const std::string& label, const Rat& exponent = Rat(1));

    const std::map<std::string, Rat>& exponents() const { return exp_; }
    Rat exponent(const std::string& label) const;
    bool isOne() const { return exp_.empty(); }
    bool isIntegral() const;

    bool operator==(const TropMonomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const TropMonomial& o) const { return exp_ != o.exp_; }
    bool operator<(const TropMonomial& o) const { return exp_ < o.exp_; }

    // "u_a^2 * u_b^-1"; exponent 1 is left implicit, non-integers print as p/q.
    std::string toString() const;

private:
    std::map<std::string, Rat> exp_;
};

TropMonomial tropMul(const TropMonomial& a, const TropMonomial& b);
TropMonomial tropInv(const TropMonomial& a);
// Entrywise minimum of exponents; labels absent from a monomial count as 0.
TropMonomial tropOplus(const TropMonomial& a, const TropMonomial& b);
// The R-action: all exponents scaled by c.
TropMonomial scalePow(const TropMonomial& m, const Rat& c);

// Linear map between tropical semifields, phi(u_i) = prod_k v_k^{p_ik},
// stored as the sparse coefficient family {p_ik}. Finite data, so the
// column-finiteness required for continuity is automatic.
class TropLinearMap {
public:
    enum class Ring { Integers, Rationals };

    // Zero entries are stripped. Matrix keys must reference declared labels.
    // Ring::Integers additionally requires every entry to be an integer.
    TropLinearMap(std::vector<std::string> sourceLabels, std::vector<std::string> targetLabels,
                  std::map<std::pair<std::string, std::string>, Rat> matrix,
                  Ring ring = Ring::Rationals);

    const std::vector<std::string>& sourceLabels() const { return source_; }
    const std::vector<std::string>& targetLabels() const { return target_; }
    const std::map<std::pair<std::string, std::string>, Rat>& matrix() const { return p_; }
    Ring ring() const { return ring_; }

    Rat entry(const std::string& i, const std::string& k) const;
    // The row of source variable i as a monomial in the target variables.
    TropMonomial imageOfVariable(const std::string& i) const;
    bool allEntriesNonnegative() const;

    bool operator==(const TropLinearMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && p_ == o.p_;
    }

private:
    std::vector<std::string> source_;
    std::vector<std::string> target_;
    std::set<std::string> sourceSet_;
    std::map<std::pair<std::string, std::string>, Rat> p_;
    Ring ring_;

    friend TropMonomial applyTropMap(const TropLinearMap&, const TropMonomial&);
};

// phi(prod u_i^{a_i}) = prod_k v_k^{sum_i p_ik a_i}. Throws on labels
// outside the declared source set.
TropMonomial applyTropMap(const TropLinearMap& f, const TropMonomial& m);

}  // namespace mutfan
