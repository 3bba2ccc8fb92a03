#include "mutfan/numeric.hpp"

#include <sstream>

namespace mutfan {

Rat ratFromString(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    }
}

std::string intVecToString(const std::vector<Int>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    out << ")";
    return out.str();
}

std::string ratVecToString(const std::vector<Rat>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << ratToString(v[i]);
    }
    out << ")";
    return out.str();
}

Int intDet(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("intDet: non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss step: division is exact by construction.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

LinearSolveResult solveLinear(const std::vector<std::vector<Rat>>& a,
                              const std::vector<Rat>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solveLinear: size mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solveLinear: ragged matrix");

    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }

    std::vector<std::size_t> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivotCol.push_back(c);
        ++r;
    }

    LinearSolveResult out;
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return out;  // inconsistent
    out.solvable = true;
    out.unique = pivotCol.size() == cols;
    out.solution.assign(cols, Rat(0));
    for (std::size_t i = 0; i < pivotCol.size(); ++i)
        out.solution[pivotCol[i]] = m[i][cols];
    return out;
}

}  // namespace mutfan
