#ifndef VGLAB_MATRIX_HPP
#define VGLAB_MATRIX_HPP

#include <functional>
#include <vector>

#include "vglab/rat.hpp"

namespace vglab {

/* Dense matrix over Q. All algorithms are exact: elimination runs on
 * integer-scaled rows (row scaling preserves rank, kernels and solution
 * sets) with gcd reduction to control entry growth. */
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    RatMatrix(int rows, int cols, std::function<Rat(int, int)> f) : RatMatrix(rows, cols) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) at(i, j) = f(i, j);
    }
    explicit RatMatrix(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static RatMatrix identity(int n);
    RatMatrix transpose() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    bool is_zero() const;

    RatMatrix hstack(const RatMatrix& right) const;
    RatMatrix vstack(const RatMatrix& below) const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

int matrix_rank(const RatMatrix& m);

// exact determinant (square input), fraction-free Bareiss
Rat det(const RatMatrix& m);

/* Basis of the right kernel {x : M x = 0}, primitive integer vectors, one per
 * free column in ascending column order. M with zero rows has full kernel. */
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

// columns acquiring a pivot in left-to-right elimination, ascending
std::vector<int> pivot_columns(const RatMatrix& m);

struct SolveResult {
    bool consistent = false;
    bool unique = false;
    RatMatrix x; // one solution per RHS column (free variables set to 0) when consistent
};

// solve A X = B exactly, B may have several columns
SolveResult solve(const RatMatrix& a, const RatMatrix& b);

} // namespace vglab

#endif
