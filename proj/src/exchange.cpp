#include "mutfan/exchange.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mutfan {

namespace {

void checkDirection(int k, int n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("mutation direction " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n));
    }
}

// Minimal positive integer solution of d_i * b_ij = -d_j * b_ji per support
// component, obtained by propagating ratios along a spanning tree and then
// clearing denominators. Throws when no positive solution exists.
std::vector<Int> computeSkewSymmetrizers(int n, const std::vector<Int>& a) {
    auto at = [&](int i, int j) -> const Int& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0) throw std::invalid_argument("nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            if ((at(i, j) == 0) != (at(j, i) == 0))
                throw std::invalid_argument("not skew-symmetrizable: support not symmetric");
            if (at(i, j) != 0 && sgn(at(i, j)) == sgn(at(j, i)))
                throw std::invalid_argument("not skew-symmetrizable: sign condition fails");
        }
    }

    std::vector<Rat> d(n, Rat(0));
    std::vector<int> component(n, -1);
    int componentCount = 0;
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0) continue;
        int comp = componentCount++;
        d[root] = 1;
        component[root] = comp;
        std::queue<int> pending;
        pending.push(root);
        std::vector<int> members{root};
        while (!pending.empty()) {
            int i = pending.front();
            pending.pop();
            for (int j = 0; j < n; ++j) {
                if (at(i, j) == 0) continue;
                Rat forced = d[i] * Rat(at(i, j)) / Rat(-at(j, i));
                if (component[j] < 0) {
                    component[j] = comp;
                    d[j] = forced;
                    members.push_back(j);
                    pending.push(j);
                } else if (d[j] != forced) {
                    throw std::invalid_argument("not skew-symmetrizable: inconsistent cycle");
                }
            }
        }
        Int lcmDen = 1;
        for (int m : members) lcmDen = lcm(lcmDen, denominator(d[m]));
        Int gcdNum = 0;
        for (int m : members) gcdNum = gcd(gcdNum, Int(numerator(d[m]) * (lcmDen / denominator(d[m]))));
        for (int m : members) d[m] = d[m] * Rat(lcmDen) / Rat(gcdNum);
    }

    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) {
        assert(denominator(d[i]) == 1 && d[i] > 0);
        out[i] = numerator(d[i]);
    }
    return out;
}

std::vector<Int> mutateEntries(int n, const std::vector<Int>& a, int k0) {
    std::vector<Int> out(a.size());
    auto at = [&](int i, int j) -> const Int& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Int v;
            if (i == k0 || j == k0) {
                v = -at(i, j);
            } else {
                v = at(i, j) + sgn(at(k0, j)) * positivePart(Int(at(i, k0) * at(k0, j)));
            }
            out[static_cast<std::size_t>(i) * n + j] = std::move(v);
        }
    }
    return out;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(int n, std::vector<Int> rowMajorEntries)
    : n_(n), a_(std::move(rowMajorEntries)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count does not match n");
    d_ = computeSkewSymmetrizers(n_, a_);
}

ExchangeMatrix ExchangeMatrix::fromRows(const std::vector<std::vector<Int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<Int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) {
        if (r.size() != rows.size()) throw std::invalid_argument("ragged matrix rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return ExchangeMatrix(n, std::move(flat));
}

std::vector<Int> ExchangeMatrix::column(int j) const {
    std::vector<Int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = entry(i, j);
    return out;
}

ExchangeMatrix ExchangeMatrix::transpose() const {
    std::vector<Int> t(a_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = entry(i, j);
    return ExchangeMatrix(n_, std::move(t));
}

bool ExchangeMatrix::hasZeroColumn() const {
    for (int j = 0; j < n_; ++j) {
        bool allZero = true;
        for (int i = 0; i < n_ && allZero; ++i) allZero = entry(i, j) == 0;
        if (allZero) return true;
    }
    return false;
}

std::string ExchangeMatrix::toString() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < n_; ++i) {
        if (i) out << ",";
        out << "[";
        for (int j = 0; j < n_; ++j) {
            if (j) out << ",";
            out << entry(i, j);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

ExtendedExchangeMatrix::ExtendedExchangeMatrix(
    ExchangeMatrix base, std::vector<std::pair<std::string, std::vector<Rat>>> rows)
    : base_(std::move(base)), rows_(std::move(rows)) {
    const auto n = static_cast<std::size_t>(base_.size());
    std::set<std::string> seen;
    for (const auto& [label, entries] : rows_) {
        if (label.empty()) throw std::invalid_argument("empty row label");
        if (!seen.insert(label).second)
            throw std::invalid_argument("duplicate row label \"" + label + "\"");
        if (entries.size() != n)
            throw std::invalid_argument("row \"" + label + "\" has wrong length");
    }
}

const std::vector<Rat>& ExtendedExchangeMatrix::row(const std::string& label) const {
    for (const auto& [name, entries] : rows_)
        if (name == label) return entries;
    throw std::invalid_argument("no row labeled \"" + label + "\"");
}

bool ExtendedExchangeMatrix::hasRow(const std::string& label) const {
    for (const auto& [name, entries] : rows_)
        if (name == label) return true;
    return false;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
    checkDirection(k, b.size());
    ExchangeMatrix out(b.size(), mutateEntries(b.size(), b.entries(), k - 1));
    assert(out.skewSymmetrizers() == b.skewSymmetrizers());
    return out;
}

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& bt, int k) {
    const auto& b = bt.base();
    checkDirection(k, b.size());
    const int n = b.size();
    const int k0 = k - 1;
    std::vector<std::pair<std::string, std::vector<Rat>>> rows;
    rows.reserve(bt.rows().size());
    for (const auto& [label, r] : bt.rows()) {
        std::vector<Rat> out(r.size());
        for (int j = 0; j < n; ++j) {
            if (j == k0) {
                out[j] = -r[j];
            } else {
                out[j] = r[j] + sgn(b.entry(k0, j)) * positivePart(Rat(r[k0] * b.entry(k0, j)));
            }
        }
        rows.emplace_back(label, std::move(out));
    }
    return ExtendedExchangeMatrix(mutate(b, k), std::move(rows));
}

ExchangeMatrix mutateSeq(const ExchangeMatrix& b, const std::vector<int>& seq) {
    ExchangeMatrix out = b;
    for (int k : seq) out = mutate(out, k);
    return out;
}

ExtendedExchangeMatrix mutateSeq(const ExtendedExchangeMatrix& bt, const std::vector<int>& seq) {
    ExtendedExchangeMatrix out = bt;
    for (int k : seq) out = mutate(out, k);
    return out;
}

MutationClassResult mutationClass(const ExchangeMatrix& b, std::size_t cap) {
    MutationClassResult result;
    std::set<std::vector<Int>> seen;
    std::queue<ExchangeMatrix> frontier;
    if (cap == 0) {
        result.truncated = true;
        return result;
    }
    seen.insert(b.entries());
    result.matrices.push_back(b);
    frontier.push(b);
    while (!frontier.empty()) {
        ExchangeMatrix cur = frontier.front();
        frontier.pop();
        for (int k = 1; k <= cur.size(); ++k) {
            ExchangeMatrix next = mutate(cur, k);
            if (!seen.insert(next.entries()).second) continue;
            if (result.matrices.size() == cap) {
                result.truncated = true;
                return result;
            }
            result.matrices.push_back(next);
            frontier.push(next);
        }
    }
    return result;
}

namespace {

std::vector<Int> permutedEntries(int n, const std::vector<Int>& a, const std::vector<int>& p) {
    std::vector<Int> out(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i) * n + j] =
                a[static_cast<std::size_t>(p[i]) * n + p[j]];
    return out;
}

std::vector<Int> canonicalUpToPermutation(const ExchangeMatrix& b) {
    const int n = b.size();
    if (n > 8) throw std::invalid_argument("permutation canonical form limited to n <= 8");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Int> best = b.entries();
    while (std::next_permutation(p.begin(), p.end())) {
        std::vector<Int> candidate = permutedEntries(n, b.entries(), p);
        if (candidate < best) best = std::move(candidate);
    }
    return best;
}

}  // namespace

MutationClassResult mutationClassUpToPermutation(const ExchangeMatrix& b, std::size_t cap) {
    MutationClassResult result;
    std::set<std::vector<Int>> seenExact;
    std::set<std::vector<Int>> seenCanonical;
    std::queue<ExchangeMatrix> frontier;
    if (cap == 0) {
        result.truncated = true;
        return result;
    }
    seenExact.insert(b.entries());
    seenCanonical.insert(canonicalUpToPermutation(b));
    result.matrices.push_back(b);
    frontier.push(b);
    while (!frontier.empty()) {
        ExchangeMatrix cur = frontier.front();
        frontier.pop();
        for (int k = 1; k <= cur.size(); ++k) {
            ExchangeMatrix next = mutate(cur, k);
            if (!seenExact.insert(next.entries()).second) continue;
            frontier.push(next);
            if (!seenCanonical.insert(canonicalUpToPermutation(next)).second) continue;
            if (result.matrices.size() == cap) {
                result.truncated = true;
                return result;
            }
            result.matrices.push_back(next);
        }
    }
    return result;
}

CartanMatrix cartanCompanion(const ExchangeMatrix& b) {
    const int n = b.size();
    CartanMatrix out;
    out.n = n;
    out.entries.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.entries[static_cast<std::size_t>(i) * n + j] =
                i == j ? Int(2) : Int(-abs(b.entry(i, j)));
    return out;
}

std::optional<std::vector<int>> isAcyclic(const ExchangeMatrix& b) {
    const int n = b.size();
    std::vector<int> indegree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.entry(i, j) > 0) ++indegree[j];
    std::vector<int> order;
    std::set<int> ready;
    for (int i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.insert(i);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int j = 0; j < n; ++j) {
            if (b.entry(v, j) > 0 && --indegree[j] == 0) ready.insert(j);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

std::optional<std::vector<Int>> isRescaling(const ExchangeMatrix& b, const ExchangeMatrix& b2) {
    const int n = b.size();
    if (b2.size() != n) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (sgn(b.entry(i, j)) != sgn(b2.entry(i, j))) return std::nullopt;
            if (b.entry(i, j) * b.entry(j, i) != b2.entry(i, j) * b2.entry(j, i))
                return std::nullopt;
        }
    }

    // Same propagation scheme as the symmetrizers: sigma_j / sigma_i is
    // forced to b2_ij / b_ij along every support edge.
    std::vector<Rat> sigma(n, Rat(0));
    std::vector<int> component(n, -1);
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0) continue;
        sigma[root] = 1;
        component[root] = root;
        std::queue<int> pending;
        pending.push(root);
        std::vector<int> members{root};
        while (!pending.empty()) {
            int i = pending.front();
            pending.pop();
            for (int j = 0; j < n; ++j) {
                if (b.entry(i, j) == 0) continue;
                Rat forced = sigma[i] * Rat(b2.entry(i, j)) / Rat(b.entry(i, j));
                if (component[j] < 0) {
                    component[j] = root;
                    sigma[j] = forced;
                    members.push_back(j);
                    pending.push(j);
                } else if (sigma[j] != forced) {
                    return std::nullopt;
                }
            }
        }
        Int lcmDen = 1;
        for (int m : members) lcmDen = lcm(lcmDen, denominator(sigma[m]));
        Int gcdNum = 0;
        for (int m : members)
            gcdNum = gcd(gcdNum, Int(numerator(sigma[m]) * (lcmDen / denominator(sigma[m]))));
        for (int m : members) sigma[m] = sigma[m] * Rat(lcmDen) / Rat(gcdNum);
    }

    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) {
        if (sigma[i] <= 0 || denominator(sigma[i]) != 1) return std::nullopt;
        out[i] = numerator(sigma[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out[i] * b2.entry(i, j) != b.entry(i, j) * out[j]) return std::nullopt;
    return out;
}

std::vector<std::vector<int>> reducibleComponents(const ExchangeMatrix& b) {
    const int n = b.size();
    std::vector<int> component(n, -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0) continue;
        std::vector<int> members;
        std::queue<int> pending;
        component[root] = root;
        pending.push(root);
        while (!pending.empty()) {
            int i = pending.front();
            pending.pop();
            members.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (b.entry(i, j) != 0 && component[j] < 0) {
                    component[j] = root;
                    pending.push(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace mutfan
