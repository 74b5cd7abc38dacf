#ifndef SYMPENCIL_PATTERN_HPP
#define SYMPENCIL_PATTERN_HPP

#include <map>
#include <string>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/matrix.hpp"

namespace sympencil {

// Rectangular 0/1 grid marking the positions that carry independent
// deformation parameters (stars). Everything else is frozen at zero.
class StarMask {
 public:
  StarMask() : rows_(0), cols_(0) {}
  StarMask(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), g_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  void set(std::size_t i, std::size_t j) { g_[idx(i, j)] = 1; }
  bool test(std::size_t i, std::size_t j) const { return g_[idx(i, j)] != 0; }

  std::size_t star_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> stars() const;  // row-major

  StarMask transposed() const;
  bool is_symmetric() const;
  void place(const StarMask& sub, std::size_t r0, std::size_t c0);

  std::string ascii() const;  // '*' for stars, '.' elsewhere

  friend bool operator==(const StarMask& a, const StarMask& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.g_ == b.g_;
  }
  friend bool operator!=(const StarMask& a, const StarMask& b) { return !(a == b); }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return i * cols_ + j;
  }
  std::size_t rows_, cols_;
  std::vector<unsigned char> g_;
};

/*
 * Shape catalog. Index sets are 1-based in the comments, the code is
 * 0-based. On an n x m grid:
 *
 *   zero          no stars
 *   corner_star   {(n, m)}
 *   left_col      {(i, 1)}
 *   right_col     {(i, m)}
 *   righthalfcap  first row plus last column (see options below)
 *   nw_triple     square only: |i-j| <= 1 and i+j <= n+1
 *   nwse_triple   square only: |i-j| <= 1
 *   nw_single     {(i, 1) : i <= min(n, m)} (see options below)
 *   q_shape       needs n < m: {(n, j) : n <= j <= m-1}; empty otherwise
 */
enum class ShapeKind {
  zero,
  corner_star,
  left_col,
  right_col,
  righthalfcap,
  nw_triple,
  nwse_triple,
  nw_single,
  q_shape,
};

// The half-cap and the single-diagonal shape each admit a reflected variant
// that spans the same deformation space; the defaults are the shipped
// catalog and the alternates exist so a discrepancy sweep can compare.
enum class NwSingleVariant { first_column, first_row };
enum class RighthalfcapVariant { first_row_last_col, first_col_last_row };

struct ShapeOptions {
  NwSingleVariant nw_single = NwSingleVariant::first_column;
  RighthalfcapVariant righthalfcap = RighthalfcapVariant::first_row_last_col;
};

StarMask shape(ShapeKind kind, std::size_t rows, std::size_t cols, const ShapeOptions& opt = {});

enum class MatrixTag { A, B };

// One deformation parameter: a symmetric position in one of the two
// matrices, normalized to its upper-triangle representative.
struct ParamKey {
  MatrixTag mat;
  std::size_t row, col;  // row <= col, 0-based

  std::string str() const;  // "A(1,2)" with 1-based indices

  friend bool operator==(const ParamKey& a, const ParamKey& b) {
    return a.mat == b.mat && a.row == b.row && a.col == b.col;
  }
  friend bool operator<(const ParamKey& a, const ParamKey& b) {
    if (a.mat != b.mat) return a.mat < b.mat;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  }
};

ParamKey parse_param_key(std::string_view text);

/*
 * A deformation pattern for pairs of size n: two symmetric star masks, one
 * per matrix. A star at (i, j) and its mirror (j, i) carry one parameter,
 * so the parameter count is the number of stars on or above the diagonal,
 * summed over both masks. Parameter ids follow the pair vectorization
 * order: upper triangle of A row-major, then upper triangle of B.
 */
class PatternPair {
 public:
  PatternPair() = default;
  PatternPair(StarMask mask_a, StarMask mask_b);

  const StarMask& mask_a() const noexcept { return a_; }
  const StarMask& mask_b() const noexcept { return b_; }
  std::size_t size() const noexcept { return a_.rows(); }

  std::size_t param_count() const noexcept { return params_.size(); }
  const std::vector<ParamKey>& params() const noexcept { return params_; }

  // Accepts either orientation of the position; nullopt when not a star.
  std::optional<std::size_t> param_index(MatrixTag mat, std::size_t i, std::size_t j) const;

  // Builds the pair with the given parameter values substituted at their
  // star positions (mirrored across the diagonal) and zeros elsewhere.
  SymPair instantiate(const std::vector<GaussianRational>& by_id) const;
  SymPair instantiate(const std::map<ParamKey, GaussianRational>& values) const;

  friend bool operator==(const PatternPair& a, const PatternPair& b) {
    return a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const PatternPair& a, const PatternPair& b) { return !(a == b); }

 private:
  StarMask a_, b_;
  std::vector<ParamKey> params_;
};

// Masks for the two off-diagonal blocks (i block rows, j block columns) of
// a two-block pattern; the mirrored (j, i) blocks are their transposes.
struct OffdiagPattern {
  StarMask a, b;
};

// Deformation pattern of a single canonical block:
//   H_n(lambda): A unchanged, B gets the leading triple-diagonal corner.
//   K_n:         the same with the roles of A and B swapped.
//   L_n:         A gets one star closing the F-part, B a full triple
//                diagonal on the leading (n+1) x (n+1) corner.
PatternPair diag_block_pattern(const BlockSpec& spec, const ShapeOptions& opt = {});

// Interaction pattern of an ordered block pair, placed in the rectangle of
// block rows bi x block columns bj:
//   H-H: empty unless the eigenvalues match, then one diagonal of stars in B.
//   K-K: one diagonal of stars in A.
//   H-K: empty either way.
//   H-L: stars down the first column of B.
//   K-L: stars down the column bordering the F-part of A.
//   L-L: one corner star in A; in B a half-cap on the leading corner and a
//        tail of stars continuing the shorter block's last row and column.
// Reversed mixed orders are the transposes of the above.
OffdiagPattern offdiag_block_pattern(const BlockSpec& bi, const BlockSpec& bj,
                                     const ShapeOptions& opt = {});

// Full pattern of a structure: diagonal block patterns plus all pairwise
// interaction blocks, mirrored to keep both masks symmetric.
PatternPair assemble_pattern(const CanonicalStructure& s, const ShapeOptions& opt = {});

std::size_t count_parameters(const PatternPair& p);

// The sub-pattern seen by blocks i and j of the structure: their diagonal
// blocks plus the interaction rectangle, as a pattern for the two-block
// subpair.
PatternPair restrict_to_block_pair(const PatternPair& full, const CanonicalStructure& s,
                                   std::size_t i, std::size_t j);

std::string render_pattern_text(const PatternPair& p);

}  // namespace sympencil

#endif
