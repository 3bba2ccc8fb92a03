#include "mutfan/fanviz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mutfan {

namespace {

using IntVec = std::vector<Int>;

// Deterministic parallel map: results land in index order.
template <typename F>
void parallelFor(std::size_t count, int threads, F f) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pending.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) f(i);
        }));
    }
    for (auto& p : pending) p.get();
}

IntVec primitiveDir(IntVec v) {
    Int g(0);
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) throw std::logic_error("zero vector has no direction");
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
    return v;
}

// Normals are unoriented: fix the sign so the first nonzero entry is
// positive.
IntVec canonicalNormal(IntVec v) {
    v = primitiveDir(std::move(v));
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (Int& y : v) y = -y;
        }
        break;
    }
    return v;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// One linear branch of the mutation map applied to an integer vector:
// sigma is the sign of coordinate k on the cone being transported.
IntVec applyBranch(const ExchangeMatrix& b, int k, int sigma, const IntVec& g) {
    const int k0 = k - 1;
    IntVec out = g;
    out[static_cast<std::size_t>(k0)] = -g[static_cast<std::size_t>(k0)];
    for (int j = 0; j < b.size(); ++j) {
        if (j == k0) continue;
        Int c = sigma >= 0 ? b.entry(k0, j) : Int(-b.entry(k0, j));
        if (c > 0) out[static_cast<std::size_t>(j)] += c * g[static_cast<std::size_t>(k0)];
    }
    return out;
}

WallPiece finishPiece(std::vector<IntVec> gens) {
    WallPiece piece;
    if (gens.size() == 1) {
        piece.normal = canonicalNormal({-gens[0][1], gens[0][0]});
    } else {
        piece.normal = canonicalNormal(cross3(gens[0], gens[1]));
    }
    std::sort(gens.begin(), gens.end());
    piece.cell = std::move(gens);
    return piece;
}

// Transports the cells of the j-th coordinate hyperplane backwards through
// the mutation maps of `seq`: the inverse of the composite map is the
// composite of the single-step maps for the reversed sequence over the
// partially mutated matrices. Cones are split where they straddle a branch
// hyperplane, so every returned piece is the image of one linear map.
std::vector<WallPiece> pullBackHyperplane(const ExchangeMatrix& b, const std::vector<int>& seq,
                                          int j) {
    const int n = b.size();
    std::vector<ExchangeMatrix> chain{b};
    for (int k : seq) chain.push_back(mutate(chain.back(), k));

    std::vector<std::vector<IntVec>> work;
    std::vector<int> others;
    for (int i = 1; i <= n; ++i) {
        if (i != j) others.push_back(i);
    }
    auto unit = [&](int coord, int sign) {
        IntVec e(static_cast<std::size_t>(n), Int(0));
        e[static_cast<std::size_t>(coord - 1)] = sign;
        return e;
    };
    if (n == 2) {
        work.push_back({unit(others[0], 1)});
        work.push_back({unit(others[0], -1)});
    } else {
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                work.push_back({unit(others[0], s1), unit(others[1], s2)});
            }
        }
    }

    for (std::size_t step = seq.size(); step > 0; --step) {
        const ExchangeMatrix& cur = chain[step];
        const int k = seq[step - 1];
        const std::size_t k0 = static_cast<std::size_t>(k - 1);
        std::vector<std::vector<IntVec>> next;
        for (auto& gens : work) {
            int s1 = gens[0][k0].sign();
            int s2 = gens.size() > 1 ? gens[1][k0].sign() : s1;
            if (s1 * s2 >= 0) {
                int sigma = s1 != 0 ? s1 : s2;
                std::vector<IntVec> img;
                for (const IntVec& g : gens) img.push_back(primitiveDir(applyBranch(cur, k, sigma, g)));
                next.push_back(std::move(img));
                continue;
            }
            const IntVec& p = s1 > 0 ? gens[0] : gens[1];
            const IntVec& q = s1 > 0 ? gens[1] : gens[0];
            IntVec w(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = p[k0] * q[i] - q[k0] * p[i];
            w = primitiveDir(std::move(w));
            next.push_back({primitiveDir(applyBranch(cur, k, 1, p)),
                            primitiveDir(applyBranch(cur, k, 1, w))});
            next.push_back({primitiveDir(applyBranch(cur, k, -1, w)),
                            primitiveDir(applyBranch(cur, k, -1, q))});
        }
        work = std::move(next);
    }

    std::vector<WallPiece> pieces;
    pieces.reserve(work.size());
    for (auto& gens : work) pieces.push_back(finishPiece(std::move(gens)));
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    return pieces;
}

}  // namespace

FanApproximation approximateFan(const ExchangeMatrix& b, int m, int threads) {
    const int n = b.size();
    if (n < 2 || n > 3) throw std::invalid_argument("fan approximation supports rank 2 and 3");
    if (m < 0) throw std::invalid_argument("depth must be nonnegative");
    std::vector<std::vector<int>> seqs = canonicalSequences(n, m);

    FanApproximation fan;
    fan.depth = m;
    fan.walls.resize(seqs.size() * static_cast<std::size_t>(n));
    parallelFor(fan.walls.size(), threads, [&](std::size_t idx) {
        const std::vector<int>& seq = seqs[idx / static_cast<std::size_t>(n)];
        const int j = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
        fan.walls[idx] = PulledBackHyperplane{seq, j, pullBackHyperplane(b, seq, j)};
    });

    if (n == 2) {
        fan.rank2Rays = rank2ExactFan(b.entry(0, 1).convert_to<long long>(),
                                      b.entry(1, 0).convert_to<long long>(), m + 2);
    }
    return fan;
}

std::vector<WallPiece> uniqueWallPieces(const FanApproximation& fan) {
    std::vector<WallPiece> out;
    for (const auto& wall : fan.walls) {
        out.insert(out.end(), wall.pieces.begin(), wall.pieces.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Int>> wallRays(const FanApproximation& fan) {
    std::vector<std::vector<Int>> out;
    for (const auto& wall : fan.walls) {
        for (const auto& piece : wall.pieces) {
            out.insert(out.end(), piece.cell.begin(), piece.cell.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

QuadVec2 rayToQuad(const Rank2FanRay& r) {
    if (r.isLimit) return r.limit;
    return {QuadScalar(r.v[0]), QuadScalar(r.v[1])};
}

// Counterclockwise order starting at (1, 0): first the closed upper half
// plane including the positive x-axis, then the rest; within a half plane
// the cross product decides.
bool circularLess(const Rank2FanRay& a, const Rank2FanRay& b) {
    QuadVec2 u = rayToQuad(a), v = rayToQuad(b);
    auto half = [](const QuadVec2& r) {
        int sy = r[1].sign();
        return (sy > 0 || (sy == 0 && r[0].sign() > 0)) ? 0 : 1;
    };
    int ha = half(u), hb = half(v);
    if (ha != hb) return ha < hb;
    return (u[0] * v[1] - u[1] * v[0]).sign() > 0;
}

}  // namespace

std::vector<Rank2FanRay> rank2ExactFan(long long a, long long b, int count) {
    std::vector<Rank2FanRay> rays;
    if (a * b >= -3) {
        for (const auto& [label, v] : universalRank2(a, b, count).rows) {
            rays.push_back({false, v, {}});
        }
    } else {
        for (const IntVec2& v : rank2Rays(a, b, count)) rays.push_back({false, v, {}});
        LimitRays lim = limitRays(a, b);
        if (lim.integerRep) {
            rays.push_back({false, *lim.integerRep, {}});
        } else {
            rays.push_back({true, {}, lim.vinf});
            rays.push_back({true, {}, lim.vminus});
        }
    }
    std::sort(rays.begin(), rays.end(), circularLess);
    return rays;
}

namespace {

struct ClassNode {
    ExchangeMatrix b;
    std::vector<IntVec> rows;  // the linear map valid on the class
    RatVec w;                  // image of v
    int last = 0;
};

std::vector<RatVec> clipHalf(const std::vector<RatVec>& poly, const IntVec& r, bool negate) {
    auto f = [&](const RatVec& x) {
        Rat v(0);
        for (std::size_t i = 0; i < x.size(); ++i) v += Rat(r[i]) * x[i];
        return negate ? Rat(-v) : v;
    };
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RatVec& p = poly[i];
        const RatVec& q = poly[(i + 1) % poly.size()];
        Rat fp = f(p), fq = f(q);
        if (fp >= 0) out.push_back(p);
        if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
            Rat t = fp / (fp - fq);
            RatVec x(p.size());
            for (std::size_t c = 0; c < x.size(); ++c) x[c] = p[c] + t * (q[c] - p[c]);
            out.push_back(std::move(x));
        }
    }
    std::vector<RatVec> dedup;
    for (const RatVec& p : out) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

}  // namespace

DepthClassCell depthClassCell(const ExchangeMatrix& b, const RatVec& v, int m) {
    const int n = b.size();
    if (n != 3) throw std::invalid_argument("class cells are computed in rank 3");
    if (v.size() != 3) throw std::invalid_argument("vector length does not match matrix size");
    if (m < 0) throw std::invalid_argument("depth must be nonnegative");
    std::vector<int> s(3);
    for (int i = 0; i < 3; ++i) {
        s[static_cast<std::size_t>(i)] = sgn(v[static_cast<std::size_t>(i)]);
        if (s[static_cast<std::size_t>(i)] == 0) {
            throw std::invalid_argument("pick a base vector with no zero coordinate");
        }
    }

    // Cross-section of the sign orthant of v by the plane <sgn(v), x> = 1;
    // every vector of the orthant with that pairing lies in this triangle,
    // so every later clip keeps the polygon bounded.
    std::vector<RatVec> poly;
    for (int i = 0; i < 3; ++i) {
        RatVec vert(3, Rat(0));
        vert[static_cast<std::size_t>(i)] = Rat(s[static_cast<std::size_t>(i)]);
        poly.push_back(std::move(vert));
    }

    std::vector<IntVec> idRows;
    for (int i = 0; i < 3; ++i) {
        IntVec row(3, Int(0));
        row[static_cast<std::size_t>(i)] = 1;
        idRows.push_back(std::move(row));
    }
    std::vector<ClassNode> level{{b, idRows, v, 0}};

    for (int len = 0; len <= m && !poly.empty(); ++len) {
        std::vector<ClassNode> next;
        for (const ClassNode& node : level) {
            if (len > 0) {
                // Constraint rows of this vertex: the class keeps the sign
                // pattern of v's image, weakly on the closure.
                for (int j = 0; j < 3 && !poly.empty(); ++j) {
                    int sig = sgn(node.w[static_cast<std::size_t>(j)]);
                    const IntVec& row = node.rows[static_cast<std::size_t>(j)];
                    if (sig >= 0) poly = clipHalf(poly, row, false);
                    if (sig <= 0 && !poly.empty()) poly = clipHalf(poly, row, true);
                }
            }
            if (len == m || poly.empty()) continue;
            for (int k = 1; k <= 3; ++k) {
                if (k == node.last) continue;
                ClassNode child{mutate(node.b, k), node.rows, eta(node.b, k, node.w), k};
                const std::size_t k0 = static_cast<std::size_t>(k - 1);
                int sigma = sgn(node.w[k0]);
                if (sigma == 0) sigma = 1;
                std::vector<IntVec> rows(3);
                for (int j = 0; j < 3; ++j) {
                    const std::size_t js = static_cast<std::size_t>(j);
                    if (js == k0) {
                        rows[js] = node.rows[k0];
                        for (Int& x : rows[js]) x = -x;
                        continue;
                    }
                    rows[js] = node.rows[js];
                    Int c = sigma > 0 ? node.b.entry(k - 1, j) : Int(-node.b.entry(k - 1, j));
                    if (c > 0) {
                        for (std::size_t cidx = 0; cidx < 3; ++cidx) {
                            rows[js][cidx] += c * node.rows[k0][cidx];
                        }
                    }
                }
                child.rows = std::move(rows);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }

    DepthClassCell cell;
    cell.sectionVertices = poly;
    for (const RatVec& p : poly) {
        Int lcm(1);
        for (const Rat& x : p) {
            lcm = boost::multiprecision::lcm(lcm, denominator(x));
        }
        IntVec dir(3);
        for (std::size_t i = 0; i < 3; ++i) {
            dir[i] = numerator(p[i]) * (lcm / denominator(p[i]));
        }
        cell.extremeRays.push_back(primitiveDir(std::move(dir)));
    }
    Rat area(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RatVec& p = poly[i];
        const RatVec& q = poly[(i + 1) % poly.size()];
        area += p[0] * q[2] - q[0] * p[2];
    }
    if (area < 0) area = -area;
    cell.sectionArea = area / 2;
    return cell;
}

namespace {

struct Vec3d {
    double x = 0, y = 0, z = 0;
};

Vec3d normalize(Vec3d v) {
    double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace

std::string renderStereographic(const FanApproximation& fan, const std::string& outPath) {
    return renderStereographic(fan, outPath, {Rat(1), Rat(1), Rat(1)});
}

std::string renderStereographic(const FanApproximation& fan, const std::string& outPath,
                                const RatVec& towards) {
    if (towards.size() != 3) throw std::invalid_argument("rendering needs a rank-3 direction");
    std::vector<WallPiece> pieces = uniqueWallPieces(fan);
    for (const WallPiece& p : pieces) {
        if (p.cell.size() != 2) throw std::invalid_argument("rendering needs a rank-3 fan");
    }

    const Vec3d center = normalize({static_cast<double>(towards[0].convert_to<double>()),
                                    static_cast<double>(towards[1].convert_to<double>()),
                                    static_cast<double>(towards[2].convert_to<double>())});
    const Vec3d pole{-center.x, -center.y, -center.z};
    Vec3d ref = std::fabs(pole.y) > 0.9 ? Vec3d{1, 0, 0} : Vec3d{0, 1, 0};
    const Vec3d u = normalize(cross(pole, ref));
    const Vec3d w = cross(pole, u);

    const double clipR = 3.2;
    const double scale = 100.0;
    const double half = 340.0;
    auto project = [&](const Vec3d& x, double& px, double& py) {
        double d = 1.0 - dot(x, pole);
        if (d < 1e-9) return false;
        Vec3d q{(x.x - dot(x, pole) * pole.x) / d, (x.y - dot(x, pole) * pole.y) / d,
                (x.z - dot(x, pole) * pole.z) / d};
        double a = dot(q, u), bb = dot(q, w);
        if (std::sqrt(a * a + bb * bb) > clipR) return false;
        px = half + scale * a;
        py = half - scale * bb;
        return true;
    };
    auto toVec = [](const std::vector<Int>& g) {
        return normalize({g[0].convert_to<double>(), g[1].convert_to<double>(),
                          g[2].convert_to<double>()});
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"680\" "
           "viewBox=\"0 0 680 680\">\n";
    svg << "<rect width=\"680\" height=\"680\" fill=\"white\"/>\n";
    char buf[64];

    for (const WallPiece& piece : pieces) {
        Vec3d g1 = toVec(piece.cell[0]);
        Vec3d g2 = toVec(piece.cell[1]);
        const int samples = 32;
        std::string run;
        int runCount = 0;
        auto flush = [&]() {
            if (runCount >= 2) {
                svg << "<polyline fill=\"none\" stroke=\"#222222\" stroke-width=\"1\" points=\""
                    << run << "\"/>\n";
            }
            run.clear();
            runCount = 0;
        };
        for (int i = 0; i <= samples; ++i) {
            double t = static_cast<double>(i) / samples;
            Vec3d x = normalize({(1 - t) * g1.x + t * g2.x, (1 - t) * g1.y + t * g2.y,
                                 (1 - t) * g1.z + t * g2.z});
            double px, py;
            if (!project(x, px, py)) {
                flush();
                continue;
            }
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px, py);
            run += buf;
            ++runCount;
        }
        flush();
    }

    for (const std::vector<Int>& ray : wallRays(fan)) {
        double px, py;
        if (!project(toVec(ray), px, py)) continue;
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.2\" fill=\"#0a5bb5\"/>\n", px, py);
        svg << buf;
    }

    const char* axisNames[3] = {"e1", "e2", "e3"};
    for (int i = 0; i < 3; ++i) {
        Vec3d e{i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
        double px, py;
        if (!project(e, px, py)) continue;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"15\" fill=\"#b03030\">", px + 5,
                      py - 5);
        svg << buf << axisNames[i] << "</text>\n";
    }
    svg << "</svg>\n";

    std::string doc = svg.str();
    if (!outPath.empty()) {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + outPath + " for writing");
        out << doc;
        if (!out) throw std::runtime_error("failed writing " + outPath);
    }
    return doc;
}

}  // namespace mutfan
