#include "mutfan/mutmap.hpp"

#include <algorithm>
#include <future>

namespace mutfan {

namespace {

void checkVector(const ExchangeMatrix& b, const RatVec& a) {
    if (a.size() != static_cast<std::size_t>(b.size()))
        throw std::invalid_argument("vector length does not match matrix size");
}

struct WalkNode {
    ExchangeMatrix b;
    std::vector<int> seq;
    std::vector<RatVec> images;
};

// Applies f(i) for i in [0, count) with results written in index order.
// Deterministic regardless of the thread count.
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

std::vector<WalkNode> expandLevel(const std::vector<WalkNode>& level, int threads) {
    if (level.empty()) return {};
    const int n = level[0].b.size();
    std::vector<std::vector<WalkNode>> blocks(level.size());
    parallelFor(level.size(), threads, [&](std::size_t i) {
        const WalkNode& node = level[i];
        const int last = node.seq.empty() ? 0 : node.seq.back();
        for (int k = 1; k <= n; ++k) {
            if (k == last) continue;
            WalkNode child{mutate(node.b, k), node.seq, {}};
            child.seq.push_back(k);
            child.images.reserve(node.images.size());
            for (const auto& im : node.images) child.images.push_back(eta(node.b, k, im));
            blocks[i].push_back(std::move(child));
        }
    });
    std::vector<WalkNode> next;
    for (auto& block : blocks)
        for (auto& node : block) next.push_back(std::move(node));
    return next;
}

}  // namespace

SignVector signVector(const RatVec& v) {
    SignVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sgn(v[i]);
    return out;
}

bool signCoherent(const std::vector<RatVec>& vs) {
    if (vs.empty()) return true;
    const std::size_t n = vs[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        bool pos = false, neg = false;
        for (const auto& v : vs) {
            int s = sgn(v[j]);
            pos = pos || s > 0;
            neg = neg || s < 0;
        }
        if (pos && neg) return false;
    }
    return true;
}

RatVec eta(const ExchangeMatrix& b, int k, const RatVec& a) {
    checkVector(b, a);
    if (k < 1 || k > b.size())
        throw std::invalid_argument("mutation direction out of range");
    const int k0 = k - 1;
    const Rat ak = a[k0];
    RatVec out = a;
    out[k0] = -ak;
    for (int j = 0; j < b.size(); ++j) {
        if (j == k0) continue;
        const Int& bkj = b.entry(k0, j);
        if (ak >= 0 && bkj >= 0) {
            out[j] = a[j] + ak * Rat(bkj);
        } else if (ak <= 0 && bkj <= 0) {
            out[j] = a[j] - ak * Rat(bkj);
        }
    }
    return out;
}

RatVec etaSeq(const ExchangeMatrix& b, const std::vector<int>& seq, const RatVec& a) {
    ExchangeMatrix cur = b;
    RatVec out = a;
    for (int k : seq) {
        out = eta(cur, k, out);
        cur = mutate(cur, k);
    }
    return out;
}

std::vector<std::vector<int>> canonicalSequences(int n, int depth) {
    std::vector<std::vector<int>> out{{}};
    std::size_t levelBegin = 0;
    for (int len = 1; len <= depth; ++len) {
        const std::size_t levelEnd = out.size();
        for (std::size_t i = levelBegin; i < levelEnd; ++i) {
            const int last = out[i].empty() ? 0 : out[i].back();
            for (int k = 1; k <= n; ++k) {
                if (k == last) continue;
                std::vector<int> seq = out[i];
                seq.push_back(k);
                out.push_back(std::move(seq));
            }
        }
        levelBegin = levelEnd;
    }
    return out;
}

DepthClass depthClass(const ExchangeMatrix& b, const RatVec& a, int depth) {
    checkVector(b, a);
    if (depth < 0) throw std::invalid_argument("negative depth");
    DepthClass out;
    out.depth = depth;
    std::vector<WalkNode> level{{b, {}, {a}}};
    for (int len = 0; len <= depth; ++len) {
        for (const auto& node : level)
            out.signs.emplace_back(node.seq, signVector(node.images[0]));
        if (len == depth) break;
        level = expandLevel(level, 1);
    }
    return out;
}

bool sameConeUpToDepth(const ExchangeMatrix& b, const std::vector<RatVec>& vs, int depth,
                       int threads) {
    if (vs.empty()) throw std::invalid_argument("empty vector list");
    for (const auto& v : vs) checkVector(b, v);
    std::vector<WalkNode> level{{b, {}, vs}};
    for (int len = 0; len <= depth; ++len) {
        std::vector<char> ok(level.size(), 1);
        parallelFor(level.size(), threads,
                    [&](std::size_t i) { ok[i] = signCoherent(level[i].images) ? 1 : 0; });
        for (char flag : ok)
            if (!flag) return false;
        if (len == depth) break;
        level = expandLevel(level, threads);
    }
    return true;
}

namespace {

std::optional<CoherenceVerdict::Condition> relationViolation(const WalkNode& node,
                                                             const std::vector<Rat>& coeffs,
                                                             bool checkPiecewise) {
    const std::size_t n = node.images.empty() ? 0 : node.images[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * node.images[i][j];
        if (s != 0) return CoherenceVerdict::Condition::Linear;
    }
    if (checkPiecewise) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                s += coeffs[i] * std::min(node.images[i][j], Rat(0));
            if (s != 0) return CoherenceVerdict::Condition::Piecewise;
        }
    }
    return std::nullopt;
}

// A piecewise violation with no zero column in sight must be witnessed by
// a linear violation at most one extension deeper; anything else means the
// checker itself is broken.
void assertLinearViolationOneDeeper(const WalkNode& node, const std::vector<Rat>& coeffs) {
    const int n = node.b.size();
    for (int k = 1; k <= n; ++k) {
        std::vector<RatVec> images;
        images.reserve(node.images.size());
        for (const auto& im : node.images) images.push_back(eta(node.b, k, im));
        const std::size_t dim = images[0].size();
        for (std::size_t j = 0; j < dim; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * images[i][j];
            if (s != 0) return;
        }
    }
    throw std::logic_error("piecewise violation lacks the implied linear violation");
}

}  // namespace

CoherenceVerdict checkBCoherent(const ExchangeMatrix& b, const LinearRelation& rel, int depth,
                                bool verifyShortcut, int threads) {
    if (rel.terms.empty()) throw std::invalid_argument("relation has no terms");
    std::vector<Rat> coeffs;
    std::vector<RatVec> vectors;
    for (const auto& [c, v] : rel.terms) {
        checkVector(b, v);
        coeffs.push_back(c);
        vectors.push_back(v);
    }
    const bool zeroColumnFree = !b.hasZeroColumn();
    const bool checkPiecewise = !zeroColumnFree || verifyShortcut;

    std::vector<WalkNode> level{{b, {}, vectors}};
    for (int len = 0; len <= depth; ++len) {
        std::vector<std::optional<CoherenceVerdict::Condition>> verdicts(level.size());
        parallelFor(level.size(), threads, [&](std::size_t i) {
            verdicts[i] = relationViolation(level[i], coeffs, checkPiecewise);
        });
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!verdicts[i]) continue;
            if (*verdicts[i] == CoherenceVerdict::Condition::Piecewise && zeroColumnFree)
                assertLinearViolationOneDeeper(level[i], coeffs);
            CoherenceVerdict out;
            out.holds = false;
            out.depth = len;
            out.refutedAt = level[i].seq;
            out.failedCondition = *verdicts[i];
            return out;
        }
        if (len == depth) break;
        level = expandLevel(level, threads);
    }
    CoherenceVerdict out;
    out.holds = true;
    out.depth = depth;
    return out;
}

std::optional<std::vector<int>> onePositiveRefutation(const ExchangeMatrix& b,
                                                      const LinearRelation& rel, int depth) {
    if (rel.terms.empty()) throw std::invalid_argument("relation has no terms");
    std::vector<Rat> coeffs;
    std::vector<RatVec> vectors;
    for (const auto& [c, v] : rel.terms) {
        checkVector(b, v);
        coeffs.push_back(c);
        vectors.push_back(v);
    }
    std::vector<WalkNode> level{{b, {}, vectors}};
    for (int len = 0; len <= depth; ++len) {
        for (const auto& node : level) {
            const std::size_t n = node.images[0].size();
            for (std::size_t j = 0; j < n; ++j) {
                int posIndex = -1, posCount = 0, negIndex = -1, negCount = 0;
                for (std::size_t i = 0; i < node.images.size(); ++i) {
                    int s = sgn(node.images[i][j]);
                    if (s > 0) {
                        posIndex = static_cast<int>(i);
                        ++posCount;
                    } else if (s < 0) {
                        negIndex = static_cast<int>(i);
                        ++negCount;
                    }
                }
                if (posCount == 1 && coeffs[static_cast<std::size_t>(posIndex)] != 0)
                    return node.seq;
                if (negCount == 1 && coeffs[static_cast<std::size_t>(negIndex)] != 0)
                    return node.seq;
            }
        }
        if (len == depth) break;
        level = expandLevel(level, 1);
    }
    return std::nullopt;
}

std::optional<LocalRelationCertificate> localRelationCertificate(const ExchangeMatrix& b,
                                                                 const LinearRelation& rel,
                                                                 int depth) {
    if (rel.terms.empty()) throw std::invalid_argument("relation has no terms");
    const std::size_t n = static_cast<std::size_t>(b.size());
    std::vector<RatVec> vectors;
    for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (const auto& [c, v] : rel.terms) {
            checkVector(b, v);
            s += c * v[j];
        }
        if (s != 0) return std::nullopt;
    }
    for (const auto& [c, v] : rel.terms) vectors.push_back(v);
    if (!sameConeUpToDepth(b, vectors, depth)) return std::nullopt;
    return LocalRelationCertificate{depth};
}

}  // namespace mutfan
