#include "vglab/matrix.hpp"

#include <algorithm>

namespace vglab {

RatMatrix::RatMatrix(const std::vector<std::vector<Rat>>& rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows[0].size()) : 0;
    a_.resize(size_t(rows_) * cols_);
    for (int i = 0; i < rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != cols_) throw VglabError("ragged matrix literal");
        for (int j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw VglabError("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

bool RatMatrix::is_zero() const {
    for (const Rat& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
    if (rows_ != right.rows_) throw VglabError("hstack row mismatch");
    RatMatrix m(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
    if (cols_ != below.cols_) throw VglabError("vstack column mismatch");
    RatMatrix m(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

namespace {

struct IntRows {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> m;
};

// clear denominators row by row; row scaling by positive integers preserves
// rank, kernel, and (for augmented systems) the solution set
IntRows to_int_rows(const RatMatrix& a) {
    IntRows r;
    r.rows = a.rows();
    r.cols = a.cols();
    r.m.assign(r.rows, std::vector<Int>(r.cols));
    for (int i = 0; i < r.rows; ++i) {
        Int l = 1;
        for (int j = 0; j < r.cols; ++j) l = int_lcm(l, a.at(i, j).den());
        for (int j = 0; j < r.cols; ++j) r.m[i][j] = a.at(i, j).num() * (l / a.at(i, j).den());
    }
    return r;
}

void reduce_row_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& v : row) {
        g = int_gcd(g, int_abs(v));
        if (g == 1) return;
    }
    if (g > 1)
        for (Int& v : row) v /= g;
}

struct Echelon {
    IntRows e;
    std::vector<int> pivot_cols; // ascending
    std::vector<int> pivot_rows; // pivot_rows[k] holds pivot for pivot_cols[k]
};

/* Forward elimination restricted to columns [0, limit_cols); extra columns
 * (augmented right-hand sides) ride along. Pivot choice: smallest nonzero
 * absolute value, ties by row index, for deterministic exact runs. */
Echelon eliminate(const RatMatrix& a, int limit_cols) {
    Echelon ech;
    ech.e = to_int_rows(a);
    auto& m = ech.e.m;
    int rows = ech.e.rows;
    int next_row = 0;
    for (int c = 0; c < limit_cols && next_row < rows; ++c) {
        int pivot = -1;
        for (int i = next_row; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (pivot == -1 || int_abs(m[i][c]) < int_abs(m[pivot][c])) pivot = i;
        }
        if (pivot == -1) continue;
        std::swap(m[next_row], m[pivot]);
        const Int p = m[next_row][c];
        for (int i = next_row + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int f = m[i][c];
            for (int j = c; j < ech.e.cols; ++j) m[i][j] = p * m[i][j] - f * m[next_row][j];
            reduce_row_content(m[i]);
        }
        ech.pivot_cols.push_back(c);
        ech.pivot_rows.push_back(next_row);
        ++next_row;
    }
    return ech;
}

} // namespace

int matrix_rank(const RatMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return static_cast<int>(eliminate(a, a.cols()).pivot_cols.size());
}

std::vector<int> pivot_columns(const RatMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return {};
    return eliminate(a, a.cols()).pivot_cols;
}

Rat det(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw VglabError("det of non-square matrix");
    int n = a.rows();
    if (n == 0) return Rat(1);
    // clear denominators per row, track the scale to divide back out
    IntRows ir = to_int_rows(a);
    Rat scale(1);
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = int_lcm(l, a.at(i, j).den());
        scale *= Rat(l);
    }
    auto& m = ir.m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    sw = i;
                    break;
                }
            if (sw == -1) return Rat(0);
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rat(sign * m[n - 1][n - 1]) / scale;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
    int cols = a.cols();
    std::vector<std::vector<Rat>> basis;
    if (cols == 0) return basis;
    if (a.rows() == 0) {
        for (int j = 0; j < cols; ++j) {
            std::vector<Rat> v(cols, Rat(0));
            v[j] = Rat(1);
            basis.push_back(v);
        }
        return basis;
    }
    Echelon ech = eliminate(a, cols);
    const auto& m = ech.e.m;
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    const int r = static_cast<int>(ech.pivot_cols.size());
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = Rat(1);
        for (int k = r - 1; k >= 0; --k) {
            const int row = ech.pivot_rows[k];
            const int pc = ech.pivot_cols[k];
            Rat acc(0);
            for (int j = pc + 1; j < cols; ++j) {
                if (v[j].is_zero() || m[row][j] == 0) continue;
                acc += Rat(m[row][j]) * v[j];
            }
            v[pc] = -acc / Rat(m[row][pc]);
        }
        // primitive integer representative, free coordinate stays positive
        Int l = 1;
        for (const Rat& x : v) l = int_lcm(l, x.den());
        Int g = 0;
        for (const Rat& x : v) g = int_gcd(g, int_abs(x.num() * (l / x.den())));
        for (Rat& x : v) x = Rat(x.num() * (l / x.den()) / g);
        basis.push_back(v);
    }
    return basis;
}

SolveResult solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw VglabError("solve: RHS row mismatch");
    SolveResult res;
    const int n = a.cols(), k = b.cols();
    Echelon ech = eliminate(a.hstack(b), n);
    const auto& m = ech.e.m;
    const int r = static_cast<int>(ech.pivot_cols.size());
    // a row whose A-part vanished but whose B-part did not kills consistency
    for (int i = r; i < a.rows(); ++i)
        for (int j = n; j < n + k; ++j)
            if (m[i][j] != 0) return res;
    res.consistent = true;
    res.unique = (r == n);
    res.x = RatMatrix(n, k);
    for (int rhs = 0; rhs < k; ++rhs) {
        for (int p = r - 1; p >= 0; --p) {
            const int row = ech.pivot_rows[p];
            const int pc = ech.pivot_cols[p];
            Rat acc = Rat(m[row][n + rhs]);
            for (int j = pc + 1; j < n; ++j) {
                if (m[row][j] == 0) continue;
                const Rat& xj = res.x.at(j, rhs);
                if (!xj.is_zero()) acc -= Rat(m[row][j]) * xj;
            }
            res.x.at(pc, rhs) = acc / Rat(m[row][pc]);
        }
    }
    return res;
}

} // namespace vglab
