#include "mutfan/rank2.hpp"

#include "mutfan/gvec.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace mutfan {

namespace {

Int binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

int signLL(long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void requireInfinite(long long a, long long b) {
    if (a * b > -4) {
        throw std::invalid_argument("exchange matrix is not of infinite rank-2 type");
    }
}

// P_m extended two steps left. P_{-1} = 0 and P_{-2} = -1 are the unique
// values consistent with the recurrence, and they make the family formulas
// emit the unit-vector heads at m = -2 and m = -1.
Int pExt(long long m, long long ab) {
    if (m == -1) return 0;
    if (m == -2) return -1;
    return pPoly(m, ab);
}

}  // namespace

Int pPoly(long long m, long long ab) {
    if (m < 0) throw std::invalid_argument("negative index");
    if (ab > 0) throw std::invalid_argument("ab must be nonpositive");
    long long half = m / 2;
    Int sum = 0;
    for (long long i = 0; i <= half; ++i) {
        sum += binom(m - i, i) *
               boost::multiprecision::pow(Int(ab), static_cast<unsigned>(half - i));
    }
    return (half % 2 == 0) ? sum : Int(-sum);
}

bool chebyshevCheck(long long m, long long ab) {
    if (m < 0) throw std::invalid_argument("negative index");
    if (ab > -4) throw std::invalid_argument("ab must be at most -4");
    Int s(-ab);
    QuadScalar rootS = QuadScalar::sqrtOf(s);
    // U_{j+1}(x) = 2x U_j(x) - U_{j-1}(x) at 2x = sqrt(s).
    QuadScalar prev(Int(1));  // U_0
    QuadScalar cur = rootS;   // U_1
    QuadScalar um = m == 0 ? prev : cur;
    for (long long j = 1; j < m; ++j) {
        QuadScalar next = rootS * cur - prev;
        prev = cur;
        cur = next;
        um = cur;
    }
    QuadScalar pm(pPoly(m, ab));
    return m % 2 == 0 ? um == pm : um == rootS * pm;
}

IntVec2 rank2FamilyVector(int family, long long m, long long a, long long b) {
    requireInfinite(a, b);
    if (family != 1 && family != 2) {
        throw std::invalid_argument("family must be 1 or 2");
    }
    if (m < -2) throw std::invalid_argument("family index below -2");
    long long ab = a * b;
    Int pm = pExt(m, ab);
    Int pn = pExt(m + 1, ab);
    Int sa(signLL(a)), sb(signLL(b)), A(a), B(b);
    bool even = ((m % 2) + 2) % 2 == 0;
    if (family == 1) {
        if (even) return {sa * pm, -A * pn};
        return {-B * pm, sb * pn};
    }
    if (even) return {-B * pn, sb * pm};
    return {sa * pn, -A * pm};
}

std::vector<IntVec2> rank2Rays(long long a, long long b, int count) {
    requireInfinite(a, b);
    if (count < 0) throw std::invalid_argument("negative count");
    std::vector<IntVec2> out = {{Int(1), Int(0)},
                                {Int(0), Int(1)},
                                {Int(-1), Int(0)},
                                {Int(0), Int(-1)}};
    for (int family = 1; family <= 2; ++family) {
        for (long long parity = 0; parity < 2; ++parity) {
            for (long long i = 0; i < count; ++i) {
                out.push_back(rank2FamilyVector(family, 2 * i + parity, a, b));
            }
        }
    }
    return out;
}

LimitRays limitRays(long long a, long long b) {
    requireInfinite(a, b);
    long long s = -(a * b);
    long long t = s - 4;
    QuadScalar rootS = QuadScalar::sqrtOf(Int(s));
    QuadScalar rootT = QuadScalar::sqrtOf(Int(t));
    QuadScalar both = rootS + rootT;
    LimitRays r;
    r.vinf = {rootS * Rat(2 * signLL(a)), both * Rat(-a)};
    r.vminus = {both * Rat(-b), rootS * Rat(2 * signLL(b))};
    if (t == 0) {
        Int x(2 * signLL(a)), y(-a);
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                           boost::multiprecision::abs(y));
        r.integerRep = IntVec2{x / g, y / g};
    }
    return r;
}

std::pair<IntVec2, IntVec2> wildIntegerPair(long long a, long long b) {
    if (a * b > -5) {
        throw std::invalid_argument("exchange matrix is not of wild rank-2 type");
    }
    LimitRays lim = limitRays(a, b);
    // Strict interiority: p is counterclockwise of vinf and clockwise of
    // vminus, both strictly. The limit cone is counterclockwise from vinf
    // to vminus for either sign orientation.
    auto interior = [&lim](const IntVec2& p) {
        int s1 = (lim.vinf[0] * Rat(p[1]) - lim.vinf[1] * Rat(p[0])).sign();
        if (s1 <= 0) return false;
        int s2 = (lim.vminus[1] * Rat(p[0]) - lim.vminus[0] * Rat(p[1])).sign();
        return s2 > 0;
    };
    std::vector<IntVec2> pts;
    for (long long n = 1; n <= 64; ++n) {
        std::size_t firstNew = pts.size();
        for (long long x = -n; x <= n; ++x) {
            for (long long y = -n; y <= n; ++y) {
                if (std::max(std::llabs(x), std::llabs(y)) != n) continue;
                IntVec2 p{Int(x), Int(y)};
                if (interior(p)) pts.push_back(std::move(p));
            }
        }
        for (std::size_t j = firstNew; j < pts.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                Int det = pts[i][0] * pts[j][1] - pts[i][1] * pts[j][0];
                if (det == 1 || det == -1) return {pts[i], pts[j]};
            }
        }
    }
    throw std::logic_error("no unimodular interior pair found in search range");
}

namespace {

std::string letterLabel(std::size_t i) {
    std::string s;
    s.push_back(static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

std::vector<std::pair<std::string, IntVec2>> finiteRows(long long a, long long b) {
    ExchangeMatrix bt = ExchangeMatrix::fromRows({{Int(0), Int(b)}, {Int(a), Int(0)}});
    GVectorFanResult fan = gVectorFan(bt, 12);
    if (!fan.closed) throw std::logic_error("finite-type fan failed to close");
    std::set<IntVec2> seen;
    for (const auto& cone : fan.cones) {
        for (const auto& v : cone) seen.insert(v);
    }
    std::vector<IntVec2> units = {{Int(1), Int(0)},
                                  {Int(0), Int(1)},
                                  {Int(-1), Int(0)},
                                  {Int(0), Int(-1)}};
    for (const auto& unit : units) {
        if (seen.count(unit) == 0) {
            throw std::logic_error("finite-type fan is missing a unit ray");
        }
    }
    std::vector<IntVec2> interior;
    for (const auto& v : seen) {
        if (std::find(units.begin(), units.end(), v) != units.end()) continue;
        if (v[0] <= 0 || v[1] >= 0) {
            throw std::logic_error("finite-type interior ray outside expected quadrant");
        }
        interior.push_back(v);
    }
    // Counterclockwise within the open fourth quadrant: u precedes v when
    // the cross product u x v is positive.
    std::sort(interior.begin(), interior.end(), [](const IntVec2& u, const IntVec2& v) {
        return u[0] * v[1] - u[1] * v[0] > 0;
    });
    std::vector<std::pair<std::string, IntVec2>> rows;
    for (const auto& v : units) rows.emplace_back(letterLabel(rows.size()), v);
    for (const auto& v : interior) rows.emplace_back(letterLabel(rows.size()), v);
    return rows;
}

}  // namespace

Rank2Universal universalRank2(long long a, long long b, int count) {
    if ((a == 0) != (b == 0) || signLL(a) * signLL(b) > 0) {
        throw std::invalid_argument("invalid sign pattern");
    }
    if (count < 0) throw std::invalid_argument("negative count");
    bool flip = a < 0;
    long long A = flip ? -a : a;
    long long B = flip ? -b : b;
    long long ab = A * B;
    Rank2Universal u;
    u.a = a;
    u.b = b;
    if (ab >= -3) {
        u.kind = Rank2Kind::Finite;
        u.rows = finiteRows(A, B);
    } else {
        u.kind = ab == -4 ? Rank2Kind::Affine : Rank2Kind::Wild;
        u.rows = {{"a", {Int(1), Int(0)}},
                  {"b", {Int(0), Int(1)}},
                  {"c", {Int(-1), Int(0)}},
                  {"d", {Int(0), Int(-1)}}};
        for (long long m = 0; m < count; ++m) {
            u.rows.emplace_back("p" + std::to_string(m), rank2FamilyVector(1, m, A, B));
        }
        for (long long m = 0; m < count; ++m) {
            u.rows.emplace_back("q" + std::to_string(m), rank2FamilyVector(2, m, A, B));
        }
        LimitRays lim = limitRays(A, B);
        if (u.kind == Rank2Kind::Affine) {
            u.rows.emplace_back("lim", *lim.integerRep);
            u.limitRows = {lim.vinf};
        } else {
            auto pair = wildIntegerPair(A, B);
            u.rows.emplace_back("r1", pair.first);
            u.rows.emplace_back("r2", pair.second);
            u.limitRows = {lim.vinf, lim.vminus};
            u.integerPair = pair;
        }
    }
    if (flip) {
        for (auto& row : u.rows) {
            for (auto& x : row.second) x = -x;
        }
        for (auto& rowPair : u.limitRows) {
            rowPair = {-rowPair[0], -rowPair[1]};
        }
        if (u.integerPair) {
            for (auto* vec : {&u.integerPair->first, &u.integerPair->second}) {
                for (auto& x : *vec) x = -x;
            }
        }
    }
    return u;
}

ExtendedExchangeMatrix toExtendedMatrix(const Rank2Universal& u) {
    ExchangeMatrix base =
        ExchangeMatrix::fromRows({{Int(0), Int(u.a)}, {Int(u.b), Int(0)}});
    std::vector<std::pair<std::string, std::vector<Rat>>> rows;
    for (const auto& [label, vec] : u.rows) {
        rows.emplace_back(label, std::vector<Rat>{Rat(vec[0]), Rat(vec[1])});
    }
    return ExtendedExchangeMatrix(std::move(base), std::move(rows));
}

}  // namespace mutfan
