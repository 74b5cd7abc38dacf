#ifndef SYMPENCIL_MATRIX_HPP
#define SYMPENCIL_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympencil/rational.hpp"

namespace sympencil {

// Dense rectangular matrix over Q(i), value semantics, 0-based indexing.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  ExactMatrix transposed() const;

  // Copies `sub` into this matrix with its top-left corner at (r0, c0).
  void place(const ExactMatrix& sub, std::size_t r0, std::size_t c0);

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix m);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;  // aligned text grid

 private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> e_;
};

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

// Pair of equally sized symmetric matrices; symmetry is validated on
// construction, so a SymPair is symmetric by invariant.
class SymPair {
 public:
  SymPair() = default;
  SymPair(ExactMatrix a, ExactMatrix b);

  const ExactMatrix& a() const noexcept { return a_; }
  const ExactMatrix& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return a_.rows(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  SymPair& operator+=(const SymPair& o);
  SymPair& operator-=(const SymPair& o);
  friend SymPair operator+(SymPair a, const SymPair& b) { return a += b; }
  friend SymPair operator-(SymPair a, const SymPair& b) { return a -= b; }
  friend bool operator==(const SymPair& a, const SymPair& b) {
    return a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const SymPair& a, const SymPair& b) { return !(a == b); }

 private:
  ExactMatrix a_, b_;
};

SymPair direct_sum(const SymPair& a, const SymPair& b);

// Dimension of the space of symmetric matrix pairs of size n: twice n(n+1)/2.
inline std::size_t pair_dim(std::size_t n) { return n * (n + 1); }

// Index of (i, j), i <= j, within the row-major upper triangle of size n.
inline std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
  assert(i <= j && j < n);
  return i * n - i * (i - 1) / 2 + (j - i);
}

// Coordinates of a pair: upper triangle of A row-major, then upper triangle
// of B. Length pair_dim(n).
std::vector<GaussianRational> vectorize_sym_pair(const SymPair& p);

// Rank over Q(i) by fraction-free elimination (row denominators cleared,
// then Bareiss over Z[i]). Pivot scan: columns left to right, rows top to
// bottom, first nonzero entry wins.
std::size_t rank(const ExactMatrix& m);

struct RankResult {
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;  // original column indices, in pivot order
};

// Rank of the submatrix formed by `col_order` (a subset of columns, in the
// order they are to be scanned). pivot_cols reports original indices.
RankResult rank_with_pivots(const ExactMatrix& m, const std::vector<std::size_t>& col_order);

/*
 * Row-reduced factorization of a matrix, reusable across right-hand sides.
 * Stores the reduced echelon form together with the row transform taking the
 * original matrix to it. solve() returns the solution with all free
 * variables set to zero, or nullopt when the system is inconsistent.
 *
 * The pivot scan is columns left to right (in col_order), rows top to
 * bottom; a custom col_order changes which variables are free but never the
 * solvability of the system.
 */
class LinearSolver {
 public:
  explicit LinearSolver(const ExactMatrix& m);
  LinearSolver(const ExactMatrix& m, std::vector<std::size_t> col_order);

  std::optional<std::vector<GaussianRational>> solve(const std::vector<GaussianRational>& rhs) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<GaussianRational>> rref_;
  std::vector<std::vector<GaussianRational>> transform_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, column)
};

// One-shot solve of a x = b with free variables zeroed.
std::optional<std::vector<GaussianRational>> solve_affine(const ExactMatrix& a,
                                                          const std::vector<GaussianRational>& b);

}  // namespace sympencil

#endif
