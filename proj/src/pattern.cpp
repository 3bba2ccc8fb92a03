#include "mutfan/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mutfan {

namespace {

// Translation-invariant total order on tropical monomials: compare
// exponents label by label over the merged label streams, with missing
// labels counting as 0. Used to pick leading terms during division;
// std::map's pairwise comparison is not translation-invariant, so it
// cannot serve here.
bool monomialLexLess(const TropMonomial& a, const TropMonomial& b) {
    auto ia = a.exponents().begin();
    auto ea = a.exponents().end();
    auto ib = b.exponents().begin();
    auto eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        int cmp;
        if (ia == ea) {
            cmp = 1;
        } else if (ib == eb) {
            cmp = -1;
        } else if (ia->first < ib->first) {
            cmp = -1;
        } else if (ib->first < ia->first) {
            cmp = 1;
        } else {
            cmp = 0;
        }
        Rat va(0), vb(0);
        if (cmp <= 0) va = (ia++)->second;
        if (cmp >= 0) vb = (ib++)->second;
        if (va != vb) return va < vb;
    }
    return false;
}

using GrTerm = std::pair<const TropMonomial, Int>;

const GrTerm& leadTerm(const std::map<TropMonomial, Int>& terms) {
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
        if (monomialLexLess(best->first, it->first)) best = it;
    }
    return *best;
}

const GrTerm& trailTerm(const std::map<TropMonomial, Int>& terms) {
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
        if (monomialLexLess(it->first, best->first)) best = it;
    }
    return *best;
}

std::vector<std::string> defaultNames(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    return names;
}

std::string xPartString(const std::vector<int>& e, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!first) out << " * ";
        first = false;
        out << names[j];
        if (e[j] != 1) out << "^" << e[j];
    }
    return out.str();
}

}  // namespace

GroupRingElem::GroupRingElem(const Int& weight) {
    if (weight != 0) terms_.emplace(TropMonomial(), weight);
}

GroupRingElem::GroupRingElem(const TropMonomial& m, const Int& weight) {
    if (weight != 0) terms_.emplace(m, weight);
}

bool GroupRingElem::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first.isOne() &&
           terms_.begin()->second == 1;
}

void GroupRingElem::addTerm(const TropMonomial& m, const Int& w) {
    if (w == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, w);
        return;
    }
    it->second += w;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    GroupRingElem out = *this;
    for (const auto& [m, w] : o.terms_) out.addTerm(m, w);
    return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    GroupRingElem out = *this;
    for (const auto& [m, w] : o.terms_) out.addTerm(m, Int(-w));
    return out;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem out;
    for (const auto& [m, w] : terms_) out.terms_.emplace(m, Int(-w));
    return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    GroupRingElem out;
    for (const auto& [ma, wa] : terms_) {
        for (const auto& [mb, wb] : o.terms_) {
            out.addTerm(tropMul(ma, mb), Int(wa * wb));
        }
    }
    return out;
}

GroupRingElem GroupRingElem::divExact(const GroupRingElem& num, const GroupRingElem& den) {
    if (den.isZero()) throw std::invalid_argument("group ring division by zero");
    if (num.isZero()) return GroupRingElem();
    const auto& [mDen, wDen] = leadTerm(den.terms_);
    // In an exact quotient the trailing terms multiply too, which bounds
    // the quotient's monomials from below and turns a non-terminating
    // descent into a detected failure.
    TropMonomial bound =
        tropMul(trailTerm(num.terms_).first, tropInv(trailTerm(den.terms_).first));
    GroupRingElem q;
    GroupRingElem r = num;
    while (!r.isZero()) {
        const auto& [mR, wR] = leadTerm(r.terms_);
        TropMonomial qm = tropMul(mR, tropInv(mDen));
        if (monomialLexLess(qm, bound) || wR % wDen != 0) {
            throw std::logic_error("group ring division left a remainder");
        }
        Int qw = wR / wDen;
        q.addTerm(qm, qw);
        for (const auto& [m, w] : den.terms_) {
            r.addTerm(tropMul(qm, m), Int(-qw * w));
        }
    }
    return q;
}

GroupRingElem GroupRingElem::mapMonomials(const TropLinearMap& f) const {
    GroupRingElem out;
    for (const auto& [m, w] : terms_) out.addTerm(applyTropMap(f, m), w);
    return out;
}

std::string GroupRingElem::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, w] : terms_) {
        Int a = boost::multiprecision::abs(w);
        if (first) {
            if (w < 0) out << "-";
        } else {
            out << (w < 0 ? " - " : " + ");
        }
        first = false;
        if (m.isOne()) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << " * ";
            out << m.toString();
        }
    }
    return out.str();
}

CoefPolynomial::CoefPolynomial(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
}

CoefPolynomial CoefPolynomial::constant(int n, const GroupRingElem& c) {
    CoefPolynomial p(n);
    p.addTerm(std::vector<int>(static_cast<size_t>(n), 0), c);
    return p;
}

CoefPolynomial CoefPolynomial::variable(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(j - 1)] = 1;
    CoefPolynomial p(n);
    p.addTerm(e, GroupRingElem(Int(1)));
    return p;
}

CoefPolynomial CoefPolynomial::monomial(int n, const std::vector<int>& xExp,
                                        const GroupRingElem& c) {
    CoefPolynomial p(n);
    p.addTerm(xExp, c);
    return p;
}

void CoefPolynomial::addTerm(const std::vector<int>& xExp, const GroupRingElem& c) {
    if (static_cast<int>(xExp.size()) != n_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    for (int e : xExp) {
        if (e < 0) throw std::invalid_argument("negative exponent in polynomial");
    }
    if (c.isZero()) return;
    auto it = terms_.find(xExp);
    if (it == terms_.end()) {
        terms_.emplace(xExp, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.isZero()) terms_.erase(it);
}

CoefPolynomial CoefPolynomial::operator+(const CoefPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    CoefPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.addTerm(e, c);
    return out;
}

CoefPolynomial CoefPolynomial::operator-(const CoefPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    CoefPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.addTerm(e, -c);
    return out;
}

CoefPolynomial CoefPolynomial::operator*(const CoefPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    CoefPolynomial out(n_);
    std::vector<int> e(static_cast<size_t>(n_), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.addTerm(e, ca * cb);
        }
    }
    return out;
}

CoefPolynomial CoefPolynomial::mulTerm(const std::vector<int>& xExp,
                                       const GroupRingElem& c) const {
    if (static_cast<int>(xExp.size()) != n_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    CoefPolynomial out(n_);
    std::vector<int> e(static_cast<size_t>(n_), 0);
    for (const auto& [ea, ca] : terms_) {
        for (size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + xExp[j];
        out.addTerm(e, ca * c);
    }
    return out;
}

CoefPolynomial CoefPolynomial::divExact(const CoefPolynomial& num,
                                        const CoefPolynomial& den) {
    if (num.n_ != den.n_) throw std::invalid_argument("variable count mismatch");
    if (den.isZero()) throw std::invalid_argument("polynomial division by zero");
    const auto n = static_cast<size_t>(num.n_);
    const auto& [eDen, cDen] = *den.terms_.rbegin();
    CoefPolynomial q(num.n_);
    CoefPolynomial r = num;
    std::vector<int> qExp(n, 0);
    std::vector<int> e(n, 0);
    while (!r.isZero()) {
        const auto& [eR, cR] = *r.terms_.rbegin();
        for (size_t j = 0; j < n; ++j) {
            if (eR[j] < eDen[j]) {
                throw std::logic_error("cluster exchange left a non-Laurent remainder");
            }
            qExp[j] = eR[j] - eDen[j];
        }
        GroupRingElem qc = GroupRingElem::divExact(cR, cDen);
        q.addTerm(qExp, qc);
        for (const auto& [ed, cd] : den.terms_) {
            for (size_t j = 0; j < n; ++j) e[j] = qExp[j] + ed[j];
            r.addTerm(e, -(qc * cd));
        }
    }
    return q;
}

std::vector<int> CoefPolynomial::exponentFloor() const {
    std::vector<int> floor(static_cast<size_t>(n_), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            floor = e;
            first = false;
            continue;
        }
        for (size_t j = 0; j < floor.size(); ++j) floor[j] = std::min(floor[j], e[j]);
    }
    return floor;
}

CoefPolynomial CoefPolynomial::mapCoefficients(const TropLinearMap& f) const {
    CoefPolynomial out(n_);
    for (const auto& [e, c] : terms_) out.addTerm(e, c.mapMonomials(f));
    return out;
}

std::string CoefPolynomial::toString(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != n_) {
        throw std::invalid_argument("variable name count mismatch");
    }
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool firstTerm = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string xs = xPartString(e, names);
        if (!firstTerm) out << " + ";
        firstTerm = false;
        if (c.isMonomial()) {
            const auto& [m, w] = *c.terms().begin();
            Int a = boost::multiprecision::abs(w);
            if (w < 0) out << "-";
            bool needCoef = a != 1 || (m.isOne() && xs.empty());
            if (needCoef) out << a.str();
            bool wrote = needCoef;
            if (!xs.empty()) {
                if (wrote) out << " * ";
                out << xs;
                wrote = true;
            }
            if (!m.isOne()) {
                if (wrote) out << " * ";
                out << m.toString();
            }
        } else {
            out << "(" << c.toString() << ")";
            if (!xs.empty()) out << " * " << xs;
        }
    }
    return out.str();
}

std::string CoefPolynomial::toString() const { return toString(defaultNames(n_)); }

ClusterVariable makeClusterVariable(const CoefPolynomial& numerator,
                                    const std::vector<int>& denominator) {
    if (static_cast<int>(denominator.size()) != numerator.vars()) {
        throw std::invalid_argument("denominator length mismatch");
    }
    for (int d : denominator) {
        if (d < 0) throw std::invalid_argument("negative denominator exponent");
    }
    std::vector<int> floor = numerator.exponentFloor();
    std::vector<int> shift(denominator.size(), 0);
    bool any = false;
    for (size_t j = 0; j < shift.size(); ++j) {
        shift[j] = std::min(floor[j], denominator[j]);
        if (shift[j] > 0) any = true;
    }
    ClusterVariable out{numerator, denominator};
    if (any) {
        out.numerator = CoefPolynomial::divExact(
            numerator,
            CoefPolynomial::monomial(numerator.vars(), shift, GroupRingElem(Int(1))));
        for (size_t j = 0; j < shift.size(); ++j) out.denominator[j] -= shift[j];
    }
    return out;
}

std::string ClusterVariable::toString(const std::vector<std::string>& names) const {
    std::string num = numerator.toString(names);
    bool trivial = true;
    for (int d : denominator) {
        if (d != 0) trivial = false;
    }
    if (trivial) return num;
    std::string den = xPartString(denominator, names);
    if (numerator.terms().size() > 1) return "(" + num + ") / " + den;
    return num + " / " + den;
}

std::string ClusterVariable::toString() const {
    return toString(defaultNames(numerator.vars()));
}

Seed initialSeed(const ExtendedExchangeMatrix& m) {
    int n = m.base().size();
    Seed s{{}, m};
    s.cluster.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        s.cluster.push_back(ClusterVariable{CoefPolynomial::variable(n, j),
                                            std::vector<int>(static_cast<size_t>(n), 0)});
    }
    return s;
}

TropMonomial seedCoefficient(const Seed& s, int j) {
    int n = s.matrix.base().size();
    if (j < 1 || j > n) throw std::invalid_argument("coefficient index out of range");
    std::map<std::string, Rat> exps;
    for (const auto& [label, row] : s.matrix.rows()) {
        const Rat& e = row[static_cast<size_t>(j - 1)];
        if (e != 0) exps[label] += e;
    }
    return TropMonomial(exps);
}

Seed seedMutate(const Seed& s, int k) {
    const ExchangeMatrix& b = s.matrix.base();
    int n = b.size();
    if (k < 1 || k > n) throw std::invalid_argument("mutation direction out of range");
    if (static_cast<int>(s.cluster.size()) != n) {
        throw std::invalid_argument("cluster size mismatch");
    }
    // The two halves of the exchange binomial. The tropical coefficient
    // y_k = prod u_i^{r_ik} contributes its positive part to one monomial
    // and its negated negative part to the other; dividing by y_k (+) 1
    // is already folded in.
    std::map<std::string, Rat> plusExp, minusExp;
    for (const auto& [label, row] : s.matrix.rows()) {
        const Rat& e = row[static_cast<size_t>(k - 1)];
        if (e > 0) {
            plusExp[label] += e;
        } else if (e < 0) {
            minusExp[label] -= e;
        }
    }
    // x-exponents per side from the signs of column k of B.
    std::vector<int> ePlus(static_cast<size_t>(n), 0), eMinus(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        const Int& v = b.entry(j, k - 1);
        if (v > 0) {
            ePlus[static_cast<size_t>(j)] = v.convert_to<int>();
        } else if (v < 0) {
            eMinus[static_cast<size_t>(j)] = Int(-v).convert_to<int>();
        }
    }
    // Each side is a fraction: a product of cluster variables times a
    // coefficient monomial, over a monomial in the initial variables.
    auto buildSide = [&](const std::map<std::string, Rat>& uExp, const std::vector<int>& e)
        -> std::pair<CoefPolynomial, std::vector<int>> {
        CoefPolynomial p = CoefPolynomial::constant(n, GroupRingElem(TropMonomial(uExp)));
        std::vector<int> den(static_cast<size_t>(n), 0);
        for (size_t j = 0; j < e.size(); ++j) {
            for (int rep = 0; rep < e[j]; ++rep) p = p * s.cluster[j].numerator;
            for (size_t i = 0; i < den.size(); ++i) {
                den[i] += e[j] * s.cluster[j].denominator[i];
            }
        }
        return {p, den};
    };
    auto [pPlus, dPlus] = buildSide(plusExp, ePlus);
    auto [pMinus, dMinus] = buildSide(minusExp, eMinus);
    std::vector<int> common(static_cast<size_t>(n), 0);
    for (size_t j = 0; j < common.size(); ++j) common[j] = std::max(dPlus[j], dMinus[j]);
    GroupRingElem one{Int(1)};
    std::vector<int> liftPlus(common), liftMinus(common);
    for (size_t j = 0; j < common.size(); ++j) {
        liftPlus[j] -= dPlus[j];
        liftMinus[j] -= dMinus[j];
    }
    CoefPolynomial num = pPlus.mulTerm(liftPlus, one) + pMinus.mulTerm(liftMinus, one);
    // Divide by the current variable in slot k. The division happens in
    // the Laurent ring: the monomial content of the numerator of x_k is a
    // unit there and moves into the denominator, and what remains must
    // divide exactly, which is the Laurent property at work.
    const ClusterVariable& xk = s.cluster[static_cast<size_t>(k - 1)];
    std::vector<int> content = xk.numerator.exponentFloor();
    CoefPolynomial core = xk.numerator;
    bool hasContent = false;
    for (int c : content) hasContent = hasContent || c > 0;
    if (hasContent) {
        core = CoefPolynomial::divExact(core, CoefPolynomial::monomial(n, content, one));
    }
    CoefPolynomial q = CoefPolynomial::divExact(num, core);
    std::vector<int> den = common;
    std::vector<int> lift(static_cast<size_t>(n), 0);
    bool needLift = false;
    for (size_t j = 0; j < den.size(); ++j) {
        den[j] += content[j] - xk.denominator[j];
        if (den[j] < 0) {
            lift[j] = -den[j];
            den[j] = 0;
            needLift = true;
        }
    }
    if (needLift) q = q.mulTerm(lift, one);
    Seed out{s.cluster, mutate(s.matrix, k)};
    out.cluster[static_cast<size_t>(k - 1)] = makeClusterVariable(q, den);
    return out;
}

std::vector<Seed> walkPattern(const Seed& s, const std::vector<int>& seq) {
    std::vector<Seed> out;
    out.reserve(seq.size() + 1);
    out.push_back(s);
    for (int k : seq) out.push_back(seedMutate(out.back(), k));
    return out;
}

std::optional<int> detectPeriod(const Seed& s, const std::vector<int>& genSeq,
                                int maxSteps) {
    if (genSeq.empty()) throw std::invalid_argument("empty generating sequence");
    if (maxSteps < 0) throw std::invalid_argument("negative step bound");
    auto dirAt = [&genSeq](int step) {
        return genSeq[static_cast<size_t>(step % static_cast<int>(genSeq.size()))];
    };
    // Seed equality requires matrix equality, and matrices are cheap to
    // walk, so the symbolic cluster walk advances only when the matrix
    // walk returns to its start. On a walk that never closes (affine and
    // wild types) no cluster variable is ever computed.
    ExtendedExchangeMatrix mat = s.matrix;
    Seed cur = s;
    int curStep = 0;
    for (int p = 1; p <= maxSteps; ++p) {
        mat = mutate(mat, dirAt(p - 1));
        if (!(mat == s.matrix)) continue;
        while (curStep < p) {
            cur = seedMutate(cur, dirAt(curStep));
            ++curStep;
        }
        if (cur == s) return p;
    }
    return std::nullopt;
}

}  // namespace mutfan
