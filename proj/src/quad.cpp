#include "mutfan/quad.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mutfan {

namespace {

// n = f*f*sf with sf squarefree. Trial division; radicands here stay small.
std::pair<Int, Int> squarefreeSplit(const Int& n) {
    Int rest = n;
    Int square = 1;
    for (Int p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
    }
    return {square, rest};
}

// Closed rational interval known to contain sqrt(r), refined by bisection
// until its width is at most 2^-bits.
struct RatInterval {
    Rat lo, hi;
};

RatInterval sqrtInterval(const Int& r, int bits) {
    Int base = boost::multiprecision::sqrt(r);
    RatInterval iv{Rat(base), Rat(base + 1)};
    if (iv.lo * iv.lo == Rat(r)) return {iv.lo, iv.lo};
    for (int i = 0; i < bits; ++i) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (mid * mid <= Rat(r)) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

RatInterval scale(const Rat& c, const RatInterval& iv) {
    if (c >= 0) return {c * iv.lo, c * iv.hi};
    return {c * iv.hi, c * iv.lo};
}

// Both operands are nonnegative intervals (square roots).
RatInterval mulNonneg(const RatInterval& a, const RatInterval& b) {
    return {a.lo * b.lo, a.hi * b.hi};
}

std::string ratTerm(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return ratToString(v);
}

}  // namespace

QuadScalar::QuadScalar() : c_{Rat(0), Rat(0), Rat(0), Rat(0)}, s_(1), t_(1) {}

QuadScalar::QuadScalar(const Rat& c0)
    : c_{c0, Rat(0), Rat(0), Rat(0)}, s_(1), t_(1) {}

QuadScalar::QuadScalar(const Int& c0) : QuadScalar(Rat(c0)) {}

QuadScalar::QuadScalar(const Rat& c0, const Rat& c1, const Int& s)
    : c_{c0, c1, Rat(0), Rat(0)}, s_(s), t_(1) {
    if (s < 0) throw std::invalid_argument("negative radicand");
    canonicalize();
}

QuadScalar::QuadScalar(const Rat& c0, const Rat& c1, const Rat& c2,
                       const Rat& c3, const Int& s, const Int& t)
    : c_{c0, c1, c2, c3}, s_(s), t_(t) {
    if (s < 0 || t < 0) throw std::invalid_argument("negative radicand");
    canonicalize();
}

QuadScalar QuadScalar::sqrtOf(const Int& radicand) {
    if (radicand < 0) throw std::invalid_argument("negative radicand");
    return QuadScalar(Rat(0), Rat(1), radicand);
}

void QuadScalar::canonicalize() {
    // Zero radicands kill their terms; sqrt(0*t) = 0 as well.
    if (s_ == 0) {
        c_[1] = 0;
        c_[3] = 0;
        s_ = 1;
    }
    if (t_ == 0) {
        c_[2] = 0;
        c_[3] = 0;
        t_ = 1;
    }
    // Extract square parts: sqrt(f*f*r) = f*sqrt(r), and the product slot
    // picks up the same factor through sqrt(s*t).
    {
        auto [f, sf] = squarefreeSplit(s_);
        c_[1] *= Rat(f);
        c_[3] *= Rat(f);
        s_ = sf;
    }
    {
        auto [f, tf] = squarefreeSplit(t_);
        c_[2] *= Rat(f);
        c_[3] *= Rat(f);
        t_ = tf;
    }
    // Fold radicand 1 into the rational slots.
    if (s_ == 1) {
        c_[0] += c_[1];
        c_[1] = 0;
        c_[2] += c_[3];
        c_[3] = 0;
    }
    if (t_ == 1) {
        c_[0] += c_[2];
        c_[2] = 0;
        c_[1] += c_[3];
        c_[3] = 0;
    }
    // Equal radicands collapse to a single radical: sqrt(s*s) = s.
    if (s_ > 1 && s_ == t_) {
        c_[0] += c_[3] * Rat(s_);
        c_[1] += c_[2];
        c_[2] = 0;
        c_[3] = 0;
        t_ = 1;
    }
    // Rewrite over the canonical pair of the value's radicand closure so
    // that equal numbers built along different routes match field by
    // field: sqrt(2)*sqrt(3) must canonicalize exactly like sqrt(6).
    std::vector<std::pair<Rat, Int>> terms;
    std::set<Int> rads;
    if (c_[1] != 0) {
        terms.emplace_back(c_[1], s_);
        rads.insert(s_);
    }
    if (c_[2] != 0) {
        terms.emplace_back(c_[2], t_);
        rads.insert(t_);
    }
    if (c_[3] != 0) {
        // c3*sqrt(s*t) = (c3*g)*sqrt(u) with u squarefree; u never equals
        // s or t here because s and t are distinct squarefree values > 1.
        Int g = boost::multiprecision::gcd(s_, t_);
        Int u = (s_ / g) * (t_ / g);
        terms.emplace_back(c_[3] * Rat(g), u);
        rads.insert(u);
    }
    auto [m1, m2] = canonicalPair(rads);
    assignFromTerms(c_[0], terms, m1, m2);
}

std::pair<Int, Int> QuadScalar::canonicalPair(const std::set<Int>& radicands) {
    std::vector<Int> r(radicands.begin(), radicands.end());
    if (r.size() > 3) throw std::invalid_argument("incompatible radicands");
    if (r.empty()) return {Int(1), Int(1)};
    if (r.size() == 1) return {r[0], Int(1)};
    // Any two distinct squarefree radicands p, q close up to the triple
    // {p, q, pq/gcd(p,q)^2}; the triple is symmetric in its members, so a
    // third given radicand is admissible only if it is that derived one.
    Int g = boost::multiprecision::gcd(r[0], r[1]);
    Int derived = (r[0] / g) * (r[1] / g);
    if (r.size() == 3 && derived != r[2]) {
        throw std::invalid_argument("incompatible radicands");
    }
    std::vector<Int> triple{r[0], r[1], derived};
    std::sort(triple.begin(), triple.end());
    return {triple[0], triple[1]};
}

void QuadScalar::assignFromTerms(const Rat& c0,
                                 const std::vector<std::pair<Rat, Int>>& terms,
                                 const Int& m1, const Int& m2) {
    c_ = {c0, Rat(0), Rat(0), Rat(0)};
    s_ = m1;
    t_ = m2;
    Int h = 1;
    Int m3 = 0;
    if (m2 > 1) {
        h = boost::multiprecision::gcd(m1, m2);
        m3 = (m1 / h) * (m2 / h);
    }
    for (const auto& [coef, r] : terms) {
        if (r == m1) {
            c_[1] += coef;
        } else if (r == m2) {
            c_[2] += coef;
        } else if (m2 > 1 && r == m3) {
            // sqrt(m1*m2) = h*sqrt(m3), so a sqrt(m3) term lands in the
            // product slot divided by h.
            c_[3] += coef / Rat(h);
        } else {
            throw std::logic_error("radical term outside the shared basis");
        }
    }
}

void QuadScalar::align(QuadScalar& x, QuadScalar& y) {
    std::set<Int> rads;
    auto termsOf = [&rads](const QuadScalar& v) {
        std::vector<std::pair<Rat, Int>> terms;
        if (v.c_[1] != 0) {
            terms.emplace_back(v.c_[1], v.s_);
            rads.insert(v.s_);
        }
        if (v.c_[2] != 0) {
            terms.emplace_back(v.c_[2], v.t_);
            rads.insert(v.t_);
        }
        if (v.c_[3] != 0) {
            Int g = boost::multiprecision::gcd(v.s_, v.t_);
            Int u = (v.s_ / g) * (v.t_ / g);
            terms.emplace_back(v.c_[3] * Rat(g), u);
            rads.insert(u);
        }
        return terms;
    };
    auto termsX = termsOf(x);
    auto termsY = termsOf(y);
    auto [m1, m2] = canonicalPair(rads);
    x.assignFromTerms(x.c_[0], termsX, m1, m2);
    y.assignFromTerms(y.c_[0], termsY, m1, m2);
}

const Rat& QuadScalar::coeff(int i) const {
    if (i < 0 || i > 3) throw std::invalid_argument("coefficient index");
    return c_[static_cast<size_t>(i)];
}

const Int& QuadScalar::radicandS() const { return s_; }
const Int& QuadScalar::radicandT() const { return t_; }

bool QuadScalar::isZero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool QuadScalar::isRational() const {
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rat QuadScalar::rationalValue() const {
    if (!isRational()) throw std::logic_error("value has a radical part");
    return c_[0];
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    QuadScalar x = *this, y = o;
    align(x, y);
    for (int i = 0; i < 4; ++i) x.c_[static_cast<size_t>(i)] += y.c_[static_cast<size_t>(i)];
    x.canonicalize();
    return x;
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    return *this + (-o);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    QuadScalar x = *this, y = o;
    align(x, y);
    const auto& c = x.c_;
    const auto& d = y.c_;
    Rat s(x.s_), t(x.t_);
    // Products of basis elements: sqrt(s)*sqrt(t) = sqrt(s*t),
    // sqrt(s)*sqrt(s*t) = s*sqrt(t), sqrt(t)*sqrt(s*t) = t*sqrt(s).
    std::array<Rat, 4> e;
    e[0] = c[0] * d[0] + c[1] * d[1] * s + c[2] * d[2] * t + c[3] * d[3] * s * t;
    e[1] = c[0] * d[1] + c[1] * d[0] + c[2] * d[3] * t + c[3] * d[2] * t;
    e[2] = c[0] * d[2] + c[2] * d[0] + c[1] * d[3] * s + c[3] * d[1] * s;
    e[3] = c[0] * d[3] + c[3] * d[0] + c[1] * d[2] + c[2] * d[1];
    return QuadScalar(e[0], e[1], e[2], e[3], x.s_, x.t_);
}

QuadScalar QuadScalar::operator*(const Rat& r) const {
    QuadScalar x = *this;
    for (auto& c : x.c_) c *= r;
    x.canonicalize();
    return x;
}

QuadScalar operator*(const Rat& r, const QuadScalar& q) { return q * r; }

bool QuadScalar::operator==(const QuadScalar& o) const {
    return c_ == o.c_ && s_ == o.s_ && t_ == o.t_;
}

bool QuadScalar::operator!=(const QuadScalar& o) const { return !(*this == o); }

int QuadScalar::sign() const {
    if (isZero()) return 0;
    if (isRational()) return sgn(c_[0]);
    // The value is exactly nonzero, so some refinement level separates the
    // enclosing interval from zero.
    for (int bits = 8; bits <= 4096; bits *= 2) {
        RatInterval is = sqrtInterval(s_, bits);
        RatInterval it = sqrtInterval(t_, bits);
        RatInterval total{c_[0], c_[0]};
        auto add = [&total](const RatInterval& term) {
            total.lo += term.lo;
            total.hi += term.hi;
        };
        add(scale(c_[1], is));
        add(scale(c_[2], it));
        add(scale(c_[3], mulNonneg(is, it)));
        if (total.lo > 0) return 1;
        if (total.hi < 0) return -1;
    }
    throw std::logic_error("sign refinement failed to converge");
}

std::string QuadScalar::toString() const {
    struct Term {
        Rat coeff;
        Int radicand;  // 1 marks the rational term
    };
    std::vector<Term> terms;
    if (c_[0] != 0) terms.push_back({c_[0], Int(1)});
    if (c_[1] != 0) terms.push_back({c_[1], s_});
    if (c_[2] != 0) terms.push_back({c_[2], t_});
    if (c_[3] != 0) terms.push_back({c_[3], s_ * t_});
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms) {
        Rat mag = term.coeff < 0 ? Rat(-term.coeff) : term.coeff;
        if (first) {
            if (term.coeff < 0) out << "-";
            first = false;
        } else {
            out << (term.coeff < 0 ? " - " : " + ");
        }
        if (term.radicand == 1) {
            out << ratTerm(mag);
        } else {
            out << ratTerm(mag) << "*sqrt(" << term.radicand.str() << ")";
        }
    }
    return out.str();
}

}  // namespace mutfan
