#include "mutfan/gvec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mutfan/mutmap.hpp"

namespace mutfan {

namespace {

std::vector<std::pair<std::string, std::vector<Rat>>> identityRows(int n) {
    std::vector<std::pair<std::string, std::vector<Rat>>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(n, Rat(0));
        row[i] = 1;
        rows.emplace_back("c" + std::to_string(i + 1), std::move(row));
    }
    return rows;
}

Int ratToInt(const Rat& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error("coefficient block entry is not an integer");
    return boost::multiprecision::numerator(r);
}

}  // namespace

PrincipalPattern::PrincipalPattern(ExchangeMatrix base)
    : base_(base), cur_(std::move(base), identityRows(base_.size())) {}

Int PrincipalPattern::entry(int i, int k) const {
    const int n = base_.size();
    if (i < n) return cur_.base().entry(i, k);
    return ratToInt(cur_.rows()[static_cast<std::size_t>(i - n)].second[static_cast<std::size_t>(k)]);
}

PrincipalPattern PrincipalPattern::step(int k) const {
    PrincipalPattern out = *this;
    out.cur_ = mutate(cur_, k);
    out.path_.push_back(k);
    return out;
}

GVectorFamily initialFamily(int n) {
    GVectorFamily fam;
    for (int i = 0; i < n; ++i) {
        IntVec v(n, 0);
        v[i] = 1;
        fam.vectors.push_back(std::move(v));
    }
    return fam;
}

GVectorFamily stepGVectors(const GVectorFamily& fam, const PrincipalPattern& pat, int k) {
    const int n = pat.size();
    if (fam.path != pat.path())
        throw std::invalid_argument("family and pattern sit at different vertices");
    if (k < 1 || k > n) throw std::invalid_argument("mutation direction out of range");
    const int k0 = k - 1;

    // Two forms of the recurrence, one using positive parts of the k-th
    // column entries and one using positive parts of their negatives.
    IntVec plus(n, 0), minus(n, 0);
    for (int j = 0; j < n; ++j) {
        plus[j] = -fam.vectors[static_cast<std::size_t>(k0)][static_cast<std::size_t>(j)];
        minus[j] = plus[j];
    }
    for (int i = 0; i < n; ++i) {
        const Int& top = pat.entry(i, k0);
        const Int bottom = pat.entry(n + i, k0);
        for (int j = 0; j < n; ++j) {
            const Int& g = fam.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const Int& col = pat.initial().entry(j, i);
            plus[j] += positivePart(top) * g - positivePart(bottom) * col;
            minus[j] += positivePart(Int(-top)) * g - positivePart(Int(-bottom)) * col;
        }
    }
    if (plus != minus) throw std::logic_error("the two g-vector recurrences disagree");

    GVectorFamily out = fam;
    out.vectors[static_cast<std::size_t>(k0)] = std::move(plus);
    out.path.push_back(k);
    return out;
}

GVectorFanResult gVectorFan(const ExchangeMatrix& bT, int depth) {
    const int n = bT.size();

    struct Node {
        PrincipalPattern pat;
        GVectorFamily fam;
    };

    // Seeds are deduplicated by their full extended matrix plus the labeled
    // family, so closed walks terminate; cones by the sorted vector set.
    auto seedKey = [n](const Node& node) {
        std::vector<Int> key;
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < n; ++j) key.push_back(node.pat.entry(i, j));
        for (const auto& v : node.fam.vectors) key.insert(key.end(), v.begin(), v.end());
        return key;
    };

    GVectorFanResult result;
    std::set<std::vector<Int>> seenSeeds;
    std::set<std::vector<IntVec>> seenCones;

    auto record = [&](const Node& node) {
        auto cone = node.fam.vectors;
        std::sort(cone.begin(), cone.end());
        if (seenCones.insert(cone).second) result.cones.push_back(std::move(cone));
    };

    std::vector<Node> level{{PrincipalPattern(bT), initialFamily(n)}};
    seenSeeds.insert(seedKey(level[0]));
    record(level[0]);

    for (int len = 0; len < depth; ++len) {
        std::vector<Node> next;
        for (const auto& node : level) {
            const int last = node.fam.path.empty() ? 0 : node.fam.path.back();
            for (int k = 1; k <= n; ++k) {
                if (k == last) continue;
                Node child{node.pat.step(k), stepGVectors(node.fam, node.pat, k)};
                if (!seenSeeds.insert(seedKey(child)).second) continue;
                record(child);
                next.push_back(std::move(child));
            }
        }
        if (next.empty()) {
            result.closed = true;
            return result;
        }
        level = std::move(next);
    }
    return result;
}

TransitionReport checkTransitionLaw(const ExchangeMatrix& b0, int k, int depth) {
    const int n = b0.size();
    const ExchangeMatrix bT = b0.transpose();

    struct Node {
        PrincipalPattern p0, p1;
        GVectorFamily f0, f1;
    };

    const PrincipalPattern root0(b0);
    Node root{root0.step(k), PrincipalPattern(mutate(b0, k)),
              stepGVectors(initialFamily(n), root0, k), initialFamily(n)};

    TransitionReport report;
    auto inspect = [&](const Node& node) {
        ++report.verticesChecked;
        for (int i = 0; i < n; ++i) {
            ++report.vectorsChecked;
            const auto& from0 = node.f0.vectors[static_cast<std::size_t>(i)];
            const auto image = eta(bT, k, RatVec(from0.begin(), from0.end()));
            const auto& at1 = node.f1.vectors[static_cast<std::size_t>(i)];
            if (image != RatVec(at1.begin(), at1.end())) {
                report.mismatches.push_back(node.f1.path);
                return;
            }
        }
    };

    std::vector<Node> level{std::move(root)};
    inspect(level[0]);
    for (int len = 0; len < depth; ++len) {
        std::vector<Node> next;
        for (const auto& node : level) {
            const int last = node.f1.path.empty() ? 0 : node.f1.path.back();
            for (int j = 1; j <= n; ++j) {
                if (j == last) continue;
                Node child{node.p0.step(j), node.p1.step(j), stepGVectors(node.f0, node.p0, j),
                           stepGVectors(node.f1, node.p1, j)};
                inspect(child);
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return report;
}

bool unimodularCheck(const GVectorFamily& fam) {
    const std::size_t n = fam.vectors.size();
    std::vector<std::vector<Int>> rows;
    for (const auto& v : fam.vectors) {
        if (v.size() != n) return false;
        rows.push_back(v);
    }
    const Int det = intDet(rows);
    return det == 1 || det == -1;
}

}  // namespace mutfan
