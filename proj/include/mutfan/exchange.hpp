#pragma once
// Exchange matrices of geometric type: skew-symmetrizable integer matrices,
// extended matrices with labeled rational coefficient rows, matrix mutation,
// mutation classes, Cartan companions, acyclicity, rescaling detection.
//
// Conventions: matrix entries are addressed 0-based via entry(i, j);
// mutation directions k and all direction sequences are 1-based, matching
// the usual cluster-algebra indexing. Sequences apply left to right:
// mutateSeq(m, {1, 2}) mutates at 1 first, then at 2.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutfan/numeric.hpp"

namespace mutfan {

// Skew-symmetrizable n x n integer matrix. Construction validates the
// defining condition (there are positive d_i with d_i b_ij = -d_j b_ji)
// and stores the component-wise minimal positive symmetrizers in d.
// Treat instances as immutable; all modifications construct new values.
class ExchangeMatrix {
public:
    ExchangeMatrix(int n, std::vector<Int> rowMajorEntries);
    static ExchangeMatrix fromRows(const std::vector<std::vector<Int>>& rows);

    int size() const { return n_; }
    const Int& entry(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Int>& entries() const { return a_; }
    const std::vector<Int>& skewSymmetrizers() const { return d_; }

    std::vector<Int> column(int j) const;
    ExchangeMatrix transpose() const;
    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

    bool hasZeroColumn() const;
    std::string toString() const;

private:
    int n_;
    std::vector<Int> a_;
    std::vector<Int> d_;
};

// Extended exchange matrix: principal part plus labeled coefficient rows
// with exact rational entries. Row order is insertion order and is
// preserved by mutation and serialization. Labels are unique and nonempty.
class ExtendedExchangeMatrix {
public:
    ExtendedExchangeMatrix(ExchangeMatrix base,
                           std::vector<std::pair<std::string, std::vector<Rat>>> rows);

    const ExchangeMatrix& base() const { return base_; }
    const std::vector<std::pair<std::string, std::vector<Rat>>>& rows() const { return rows_; }
    const std::vector<Rat>& row(const std::string& label) const;
    bool hasRow(const std::string& label) const;

    bool operator==(const ExtendedExchangeMatrix& o) const {
        return base_ == o.base_ && rows_ == o.rows_;
    }

private:
    ExchangeMatrix base_;
    std::vector<std::pair<std::string, std::vector<Rat>>> rows_;
};

// Generalized Cartan matrix data: 2 on the diagonal, nonpositive entries off it.
struct CartanMatrix {
    int n = 0;
    std::vector<Int> entries;  // row-major

    const Int& entry(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

// Matrix mutation in direction k (1-based). Involutive; preserves the
// skew-symmetrizers and commutes with transposition.
ExchangeMatrix mutate(const ExchangeMatrix& b, int k);
ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& bt, int k);

ExchangeMatrix mutateSeq(const ExchangeMatrix& b, const std::vector<int>& seq);
ExtendedExchangeMatrix mutateSeq(const ExtendedExchangeMatrix& bt, const std::vector<int>& seq);

// Breadth-first enumeration of the mutation class. `cap` bounds the number
// of distinct matrices collected; when the class is larger the result is
// marked truncated. Order is deterministic: BFS from b, directions 1..n.
struct MutationClassResult {
    std::vector<ExchangeMatrix> matrices;
    bool truncated = false;
};
MutationClassResult mutationClass(const ExchangeMatrix& b, std::size_t cap);

// Same enumeration, identifying matrices that differ by a simultaneous
// row/column permutation. For class-size reporting. Requires n <= 8.
MutationClassResult mutationClassUpToPermutation(const ExchangeMatrix& b, std::size_t cap);

CartanMatrix cartanCompanion(const ExchangeMatrix& b);

// Acyclicity: some ordering v_0..v_{n-1} of the row indices makes every
// positive entry point forward (b[v_p][v_q] > 0 implies p < q). Returns
// that ordering (0-based indices) or nullopt. Deterministic: smallest
// available index first.
std::optional<std::vector<int>> isAcyclic(const ExchangeMatrix& b);

// Detects whether b2 = Sigma^-1 b Sigma for a positive rational diagonal,
// i.e. b2_ij = b_ij * sigma_j / sigma_i. Returns the component-wise
// minimal positive integer diagonal when one exists.
std::optional<std::vector<Int>> isRescaling(const ExchangeMatrix& b, const ExchangeMatrix& b2);

// Connected components of the support graph (edge i-j iff b_ij != 0),
// each sorted ascending, ordered by smallest member. 0-based indices.
std::vector<std::vector<int>> reducibleComponents(const ExchangeMatrix& b);

}  // namespace mutfan
