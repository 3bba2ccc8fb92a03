#include "mutfan/specialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mutfan/mutmap.hpp"

namespace mutfan {

namespace {

bool isZeroVec(const RatVec& v) {
    for (const Rat& x : v) {
        if (x != 0) return false;
    }
    return true;
}

// b lies in the closed minimal cone of a, tested to bounded depth: along
// every canonical sequence, each coordinate sign of b's image is either
// zero or agrees with a's.
bool subordinateUpToDepth(const ExchangeMatrix& b, const RatVec& sub, const RatVec& over,
                          const std::vector<std::vector<int>>& seqs) {
    for (const auto& seq : seqs) {
        RatVec vs = etaSeq(b, seq, sub);
        RatVec vo = etaSeq(b, seq, over);
        for (size_t j = 0; j < vs.size(); ++j) {
            int s = sgn(vs[j]);
            if (s != 0 && s != sgn(vo[j])) return false;
        }
    }
    return true;
}

std::string joinLabels(const std::vector<std::pair<std::string, RatVec>>& rows,
                       const std::vector<size_t>& idx) {
    std::string out;
    for (size_t i : idx) {
        if (!out.empty()) out += ", ";
        out += rows[i].first;
    }
    return out;
}

// Subsets of `pool` ordered by size then lexicographically by position,
// capped at n elements since larger subsets cannot solve uniquely.
std::vector<std::vector<size_t>> orderedSubsets(const std::vector<size_t>& pool, size_t maxSize) {
    std::vector<std::vector<size_t>> out{{}};
    size_t levelBegin = 0;
    for (size_t len = 1; len <= std::min(maxSize, pool.size()); ++len) {
        size_t levelEnd = out.size();
        std::vector<std::vector<size_t>> next;
        for (size_t i = levelBegin; i < levelEnd; ++i) {
            size_t start = out[i].empty() ? 0 : out[i].back() + 1;
            for (size_t p = start; p < pool.size(); ++p) {
                std::vector<size_t> s = out[i];
                s.push_back(p);
                next.push_back(std::move(s));
            }
        }
        levelBegin = out.size();
        for (auto& s : next) out.push_back(std::move(s));
    }
    for (auto& s : out) {
        for (size_t& p : s) p = pool[p];
    }
    return out;
}

}  // namespace

SpecializationSolution solveSpecialization(const SpecializationProblem& p,
                                           TropLinearMap::Ring ring, bool requirePositive) {
    const ExchangeMatrix& b = p.universal.base();
    if (!(b == p.target.base())) {
        throw std::invalid_argument("universal and target principal parts differ");
    }
    if (p.depth < 0) throw std::invalid_argument("depth must be nonnegative");
    int n = b.size();
    const auto& uRows = p.universal.rows();
    const auto& tRows = p.target.rows();
    std::vector<std::vector<int>> seqs = canonicalSequences(n, p.depth);

    std::vector<std::string> sourceLabels, targetLabels;
    for (const auto& [label, row] : uRows) sourceLabels.push_back(label);
    for (const auto& [label, row] : tRows) targetLabels.push_back(label);

    std::map<std::pair<std::string, std::string>, Rat> entries;
    std::vector<RowSupport> perRow;

    for (const auto& [tLabel, a] : tRows) {
        // Candidate universal rows, in row order.
        std::vector<size_t> cands;
        for (size_t i = 0; i < uRows.size(); ++i) {
            if (subordinateUpToDepth(b, uRows[i].second, a, seqs)) cands.push_back(i);
        }
        if (cands.empty() && !isZeroVec(a)) {
            throw std::invalid_argument("no universal rows lie in the cone of target row " +
                                        tLabel + " at depth " + std::to_string(p.depth));
        }

        bool sawSolvable = false;
        bool sawUnverified = false;
        bool accepted = false;
        for (const auto& subset : orderedSubsets(cands, static_cast<size_t>(n))) {
            LinearSolveResult res;
            if (subset.empty()) {
                res.solvable = isZeroVec(a);
                res.unique = true;
            } else {
                std::vector<std::vector<Rat>> sys(static_cast<size_t>(n),
                                                  std::vector<Rat>(subset.size()));
                std::vector<Rat> rhs(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j) {
                    for (size_t s = 0; s < subset.size(); ++s) {
                        sys[static_cast<size_t>(j)][s] = uRows[subset[s]].second[static_cast<size_t>(j)];
                    }
                    rhs[static_cast<size_t>(j)] = a[static_cast<size_t>(j)];
                }
                res = solveLinear(sys, rhs);
            }
            if (!res.solvable) continue;
            sawSolvable = true;
            if (!res.unique) continue;
            if (!subset.empty()) {
                LinearRelation rel;
                rel.terms.emplace_back(Rat(1), a);
                for (size_t s = 0; s < subset.size(); ++s) {
                    if (res.solution[s] != 0) {
                        rel.terms.emplace_back(-res.solution[s], uRows[subset[s]].second);
                    }
                }
                if (!checkBCoherent(b, rel, p.depth).holds) {
                    sawUnverified = true;
                    continue;
                }
            }
            RowSupport row{tLabel, {}};
            for (size_t s = 0; s < subset.size(); ++s) {
                const Rat& w = res.solution[s];
                if (w == 0) continue;
                if (ring == TropLinearMap::Ring::Integers && denominator(w) != 1) {
                    throw std::invalid_argument("weight of universal row " +
                                                uRows[subset[s]].first + " in target row " +
                                                tLabel + " is fractional: " + ratToString(w));
                }
                if (requirePositive && w < 0) {
                    throw std::invalid_argument("weight of universal row " +
                                                uRows[subset[s]].first + " in target row " +
                                                tLabel + " is negative: " + ratToString(w));
                }
                row.support.emplace_back(uRows[subset[s]].first, w);
                entries[{uRows[subset[s]].first, tLabel}] = w;
            }
            perRow.push_back(std::move(row));
            accepted = true;
            break;
        }
        if (!accepted) {
            if (sawUnverified) {
                throw std::invalid_argument("every solution for target row " + tLabel +
                                            " failed the coherence check at depth " +
                                            std::to_string(p.depth));
            }
            if (sawSolvable) {
                throw std::invalid_argument("ambiguous support for target row " + tLabel +
                                            "; candidates: " + joinLabels(uRows, cands));
            }
            throw std::invalid_argument("target row " + tLabel +
                                        " is not spanned by the universal rows in its cone"
                                        " (candidates: " +
                                        joinLabels(uRows, cands) + ")");
        }
    }

    return SpecializationSolution{
        TropLinearMap(std::move(sourceLabels), std::move(targetLabels), std::move(entries), ring),
        std::move(perRow)};
}

Seed applySpecialization(const SpecializationSolution& sol, const Seed& sourceSeed) {
    const auto& rows = sourceSeed.matrix.rows();
    const auto& srcLabels = sol.map.sourceLabels();
    if (rows.size() != srcLabels.size()) {
        throw std::invalid_argument("seed row labels do not match the map's source labels");
    }
    for (const auto& [label, row] : rows) {
        if (std::find(srcLabels.begin(), srcLabels.end(), label) == srcLabels.end()) {
            throw std::invalid_argument("seed row label " + label +
                                        " is not a source label of the map");
        }
    }
    int n = sourceSeed.matrix.base().size();
    std::vector<std::pair<std::string, std::vector<Rat>>> newRows;
    for (const std::string& tLabel : sol.map.targetLabels()) {
        std::vector<Rat> acc(static_cast<size_t>(n), Rat(0));
        for (const auto& [uLabel, row] : rows) {
            Rat w = sol.map.entry(uLabel, tLabel);
            if (w == 0) continue;
            for (size_t j = 0; j < acc.size(); ++j) acc[j] += w * row[j];
        }
        newRows.emplace_back(tLabel, std::move(acc));
    }
    Seed out{sourceSeed.cluster,
             ExtendedExchangeMatrix(sourceSeed.matrix.base(), std::move(newRows))};
    for (ClusterVariable& v : out.cluster) {
        v.numerator = v.numerator.mapCoefficients(sol.map);
    }
    return out;
}

std::string SpecializationReport::toString() const {
    if (ok) return "ok to walk depth " + std::to_string(walkDepth);
    std::ostringstream os;
    os << "failed: " << failedCondition << " condition at sequence [";
    for (size_t i = 0; i < failedAt.size(); ++i) {
        if (i) os << " ";
        os << failedAt[i];
    }
    os << "], row " << failedRow << ", column " << failedColumn;
    return os.str();
}

SpecializationReport verifySpecializationConditions(const SpecializationSolution& sol,
                                                    const SpecializationProblem& p,
                                                    int walkDepth) {
    const ExchangeMatrix& b = p.universal.base();
    int n = b.size();
    const auto& uRows = p.universal.rows();
    const auto& tRows = p.target.rows();
    SpecializationReport rep;
    rep.walkDepth = walkDepth;
    for (const auto& seq : canonicalSequences(n, walkDepth)) {
        std::vector<RatVec> uImg;
        uImg.reserve(uRows.size());
        for (const auto& [label, row] : uRows) uImg.push_back(etaSeq(b, seq, row));
        for (const auto& [tLabel, a] : tRows) {
            RatVec aImg = etaSeq(b, seq, a);
            for (int j = 0; j < n; ++j) {
                Rat lin(0), mn(0);
                for (size_t i = 0; i < uRows.size(); ++i) {
                    Rat w = sol.map.entry(uRows[i].first, tLabel);
                    if (w == 0) continue;
                    const Rat& v = uImg[i][static_cast<size_t>(j)];
                    lin += w * v;
                    if (v < 0) mn += w * v;
                }
                const Rat& av = aImg[static_cast<size_t>(j)];
                std::string failed;
                if (lin != av) {
                    failed = "linear";
                } else if (mn != (av < 0 ? av : Rat(0))) {
                    failed = "min";
                }
                if (!failed.empty()) {
                    rep.ok = false;
                    rep.failedAt = seq;
                    rep.failedRow = tLabel;
                    rep.failedColumn = j + 1;
                    rep.failedCondition = failed;
                    return rep;
                }
            }
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace mutfan
