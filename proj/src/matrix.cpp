#include "sympencil/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sympencil {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ExactMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw input_error("ragged matrix literal");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void ExactMatrix::place(const ExactMatrix& sub, std::size_t r0, std::size_t c0) {
  if (r0 + sub.rows() > rows_ || c0 + sub.cols() > cols_)
    throw input_error("submatrix does not fit");
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j) (*this)(r0 + i, c0 + j) = sub(i, j);
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw input_error("matrix size mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

ExactMatrix operator*(const GaussianRational& s, ExactMatrix m) {
  for (auto& v : m.e_) v *= s;
  return m;
}

std::string ExactMatrix::str() const {
  std::vector<std::string> cells(e_.size());
  std::vector<std::size_t> width(cols_, 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      cells[i * cols_ + j] = (*this)(i, j).str();
      width[j] = std::max(width[j], cells[i * cols_ + j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& s = cells[i * cols_ + j];
      os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < cols_ ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.place(a, 0, 0);
  m.place(b, a.rows(), a.cols());
  return m;
}

SymPair::SymPair(ExactMatrix a, ExactMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw input_error("pair matrices differ in size");
  if (!a_.is_symmetric() || !b_.is_symmetric())
    throw input_error("pair matrices must be symmetric");
}

SymPair& SymPair::operator+=(const SymPair& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SymPair& SymPair::operator-=(const SymPair& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SymPair direct_sum(const SymPair& a, const SymPair& b) {
  return {direct_sum(a.a(), b.a()), direct_sum(a.b(), b.b())};
}

std::vector<GaussianRational> vectorize_sym_pair(const SymPair& p) {
  std::size_t n = p.size();
  std::vector<GaussianRational> out;
  out.reserve(pair_dim(n));
  for (const ExactMatrix* m : {&p.a(), &p.b()})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) out.push_back((*m)(i, j));
  return out;
}

/*
 * Fraction-free elimination. Rows are scaled to Z[i] by clearing
 * denominators (row scaling preserves rank and pivot columns), then a
 * one-step Bareiss sweep keeps every intermediate entry an exact minor of
 * the scaled matrix, so the division by the previous pivot is always exact.
 * Matrices with no imaginary parts run on plain integers.
 */
namespace {

struct Gz {
  mpz_class re, im;
};

inline bool gz_zero(const Gz& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

inline void div_exact(mpz_class& q, const mpz_class& n, const mpz_class& d) {
  assert(mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()));
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

// x := (piv*x - mult*b) / prev over Z, with fast paths for zero operands.
struct RealOps {
  using Value = mpz_class;
  mpz_class t;

  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool is_one(const Value& v) { return v == 1; }
  static Value one() { return mpz_class(1); }

  void update(Value& x, const Value& piv, const Value& mult, const Value& b, const Value& prev,
              bool prev_is_one) {
    bool mb_zero = sgn(mult) == 0 || sgn(b) == 0;
    if (sgn(x) == 0) {
      if (mb_zero) return;
      t = mult * b;
      t = -t;
    } else if (mb_zero) {
      t = piv * x;
    } else {
      t = piv * x;
      mpz_submul(t.get_mpz_t(), mult.get_mpz_t(), b.get_mpz_t());
    }
    if (prev_is_one || sgn(t) == 0)
      x = t;
    else
      div_exact(x, t, prev);
  }
};

// Same update over Z[i]; division uses the conjugate and the integer norm.
struct ComplexOps {
  using Value = Gz;
  mpz_class tr, ti, den, ur, ui;

  static bool is_zero(const Value& v) { return gz_zero(v); }
  static bool is_one(const Value& v) { return sgn(v.im) == 0 && v.re == 1; }
  static Value one() { return Gz{mpz_class(1), mpz_class(0)}; }

  void update(Value& x, const Value& piv, const Value& mult, const Value& b, const Value& prev,
              bool prev_is_one) {
    bool mb_zero = gz_zero(mult) || gz_zero(b);
    if (gz_zero(x) && mb_zero) return;
    // t = piv*x - mult*b
    tr = 0;
    ti = 0;
    if (!gz_zero(x)) {
      mpz_addmul(tr.get_mpz_t(), piv.re.get_mpz_t(), x.re.get_mpz_t());
      mpz_submul(tr.get_mpz_t(), piv.im.get_mpz_t(), x.im.get_mpz_t());
      mpz_addmul(ti.get_mpz_t(), piv.re.get_mpz_t(), x.im.get_mpz_t());
      mpz_addmul(ti.get_mpz_t(), piv.im.get_mpz_t(), x.re.get_mpz_t());
    }
    if (!mb_zero) {
      mpz_submul(tr.get_mpz_t(), mult.re.get_mpz_t(), b.re.get_mpz_t());
      mpz_addmul(tr.get_mpz_t(), mult.im.get_mpz_t(), b.im.get_mpz_t());
      mpz_submul(ti.get_mpz_t(), mult.re.get_mpz_t(), b.im.get_mpz_t());
      mpz_submul(ti.get_mpz_t(), mult.im.get_mpz_t(), b.re.get_mpz_t());
    }
    if (prev_is_one) {
      x.re = tr;
      x.im = ti;
      return;
    }
    if (sgn(prev.im) == 0) {
      if (sgn(tr) == 0) x.re = 0; else div_exact(x.re, tr, prev.re);
      if (sgn(ti) == 0) x.im = 0; else div_exact(x.im, ti, prev.re);
      return;
    }
    // t / prev = t * conj(prev) / |prev|^2
    den = prev.re * prev.re + prev.im * prev.im;
    ur = tr * prev.re;
    mpz_addmul(ur.get_mpz_t(), ti.get_mpz_t(), prev.im.get_mpz_t());
    ui = ti * prev.re;
    mpz_submul(ui.get_mpz_t(), tr.get_mpz_t(), prev.im.get_mpz_t());
    if (sgn(ur) == 0) x.re = 0; else div_exact(x.re, ur, den);
    if (sgn(ui) == 0) x.im = 0; else div_exact(x.im, ui, den);
  }
};

template <class Ops>
std::vector<std::size_t> bareiss_pivots(std::vector<std::vector<typename Ops::Value>>& m) {
  Ops ops;
  std::vector<std::size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t er = 0;
  typename Ops::Value prev = Ops::one();
  bool prev_is_one = true;
  for (std::size_t c = 0; c < cols && er < rows; ++c) {
    std::size_t p = er;
    while (p < rows && Ops::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    if (p != er) std::swap(m[p], m[er]);
    const auto& piv = m[er][c];
    for (std::size_t i = er + 1; i < rows; ++i) {
      auto mult = std::move(m[i][c]);
      m[i][c] = Ops::one();  // placeholder, column is dead below the pivot
      for (std::size_t j = c + 1; j < cols; ++j)
        ops.update(m[i][j], piv, mult, m[er][j], prev, prev_is_one);
    }
    prev = piv;
    prev_is_one = Ops::is_one(prev);
    pivot_cols.push_back(c);
    ++er;
  }
  return pivot_cols;
}

// Clears denominators row by row: each selected entry becomes num * (L/den)
// with L the lcm of the row's denominators.
void scale_row_real(const ExactMatrix& m, std::size_t i, const std::vector<std::size_t>& cols,
                    std::vector<mpz_class>& out) {
  mpz_class l(1);
  for (std::size_t c : cols)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, c).re().get_den_mpz_t());
  out.resize(cols.size());
  mpz_class f;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const mpq_class& q = m(i, cols[k]).re();
    div_exact(f, l, q.get_den());
    out[k] = q.get_num() * f;
  }
}

void scale_row_complex(const ExactMatrix& m, std::size_t i, const std::vector<std::size_t>& cols,
                       std::vector<Gz>& out) {
  mpz_class l(1);
  for (std::size_t c : cols) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, c).re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, c).im().get_den_mpz_t());
  }
  out.resize(cols.size());
  mpz_class f;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const GaussianRational& v = m(i, cols[k]);
    div_exact(f, l, v.re().get_den());
    out[k].re = v.re().get_num() * f;
    div_exact(f, l, v.im().get_den());
    out[k].im = v.im().get_num() * f;
  }
}

}  // namespace

RankResult rank_with_pivots(const ExactMatrix& m, const std::vector<std::size_t>& col_order) {
  for (std::size_t c : col_order)
    if (c >= m.cols()) throw input_error("column index out of range");

  bool complex = false;
  for (std::size_t i = 0; i < m.rows() && !complex; ++i)
    for (std::size_t c : col_order)
      if (!m(i, c).is_real()) {
        complex = true;
        break;
      }

  std::vector<std::size_t> local;
  if (complex) {
    std::vector<std::vector<Gz>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) scale_row_complex(m, i, col_order, rows[i]);
    local = bareiss_pivots<ComplexOps>(rows);
  } else {
    std::vector<std::vector<mpz_class>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) scale_row_real(m, i, col_order, rows[i]);
    local = bareiss_pivots<RealOps>(rows);
  }
  RankResult r;
  r.rank = local.size();
  r.pivot_cols.reserve(local.size());
  for (std::size_t c : local) r.pivot_cols.push_back(col_order[c]);
  return r;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rank_with_pivots(m, order).rank;
}

LinearSolver::LinearSolver(const ExactMatrix& m) : LinearSolver(m, [&] {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return order;
}()) {}

LinearSolver::LinearSolver(const ExactMatrix& m, std::vector<std::size_t> col_order)
    : rows_(m.rows()), cols_(m.cols()) {
  // The consistency test in solve() relies on every column having been
  // processed, so the order must be a permutation of all columns.
  std::vector<bool> seen(cols_, false);
  if (col_order.size() != cols_) throw input_error("column order must cover all columns");
  for (std::size_t c : col_order) {
    if (c >= cols_ || seen[c]) throw input_error("column order must be a permutation");
    seen[c] = true;
  }
  rref_.assign(rows_, std::vector<GaussianRational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) rref_[i][j] = m(i, j);
  transform_.assign(rows_, std::vector<GaussianRational>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) transform_[i][i] = 1;

  std::size_t er = 0;
  for (std::size_t c : col_order) {
    if (c >= cols_) throw input_error("column index out of range");
    if (er == rows_) break;
    std::size_t p = er;
    while (p < rows_ && rref_[p][c].is_zero()) ++p;
    if (p == rows_) continue;
    if (p != er) {
      std::swap(rref_[p], rref_[er]);
      std::swap(transform_[p], transform_[er]);
    }
    GaussianRational inv = rref_[er][c].inverse();
    for (auto& v : rref_[er])
      if (!v.is_zero()) v *= inv;
    for (auto& v : transform_[er])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == er || rref_[i][c].is_zero()) continue;
      GaussianRational f = rref_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!rref_[er][j].is_zero()) rref_[i][j] -= f * rref_[er][j];
      for (std::size_t j = 0; j < rows_; ++j)
        if (!transform_[er][j].is_zero()) transform_[i][j] -= f * transform_[er][j];
    }
    pivots_.emplace_back(er, c);
    ++er;
  }
}

std::optional<std::vector<GaussianRational>> LinearSolver::solve(
    const std::vector<GaussianRational>& rhs) const {
  if (rhs.size() != rows_) throw input_error("right-hand side length mismatch");
  auto apply_row = [&](std::size_t r) {
    GaussianRational y;
    for (std::size_t k = 0; k < rows_; ++k)
      if (!transform_[r][k].is_zero() && !rhs[k].is_zero()) y += transform_[r][k] * rhs[k];
    return y;
  };
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (!apply_row(r).is_zero()) return std::nullopt;
  std::vector<GaussianRational> x(cols_);
  for (const auto& [r, c] : pivots_) x[c] = apply_row(r);
  return x;
}

std::optional<std::vector<GaussianRational>> solve_affine(const ExactMatrix& a,
                                                          const std::vector<GaussianRational>& b) {
  if (b.size() != a.rows()) throw input_error("right-hand side length mismatch");
  return LinearSolver(a).solve(b);
}

}  // namespace sympencil
