#include "dgbraid/linsolve.hpp"

namespace dgbraid {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] /= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back((int)col);
        ++row;
    }
    m.resize(row);  // drop zero rows
    return pivots;
}

std::optional<RatVec> solveLinear(const RatMat& a, const RatVec& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    auto pivots = rref(aug);
    RatVec x(cols, Rational(0));
    for (size_t r = 0; r < aug.size(); ++r) {
        int p = pivots[r];
        if (p == (int)cols) return std::nullopt;  // 0 = 1 row
        x[p] = aug[r][cols];
    }
    return x;
}

std::vector<RatVec> nullspaceBasis(const RatMat& a, int cols) {
    RatMat m = a;
    for (auto& r : m) r.resize(cols, Rational(0));
    auto pivots = rref(m);
    std::vector<bool> isPivot(cols, false);
    for (int p : pivots) isPivot[p] = true;
    std::vector<RatVec> basis;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        RatVec v(cols, Rational(0));
        v[freeCol] = 1;
        for (size_t r = 0; r < m.size(); ++r) v[pivots[r]] = -m[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool spanEqual(const RatMat& a, const RatMat& b) {
    RatMat ra = a, rb = b;
    rref(ra);
    rref(rb);
    return ra == rb;
}

bool inSpan(const RatMat& basis, const RatVec& v) {
    RatMat m = basis;
    rref(m);
    RatVec w = v;
    for (size_t r = 0; r < m.size(); ++r) {
        // eliminate using pivot rows
        size_t c = 0;
        while (c < m[r].size() && m[r][c] == 0) ++c;
        if (c == m[r].size()) continue;
        if (w[c] != 0) {
            Rational f = w[c];
            for (size_t k = 0; k < w.size(); ++k) w[k] -= f * m[r][k];
        }
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace dgbraid
