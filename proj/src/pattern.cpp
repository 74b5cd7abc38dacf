#include "sympencil/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace sympencil {

std::size_t StarMask::star_count() const {
  std::size_t c = 0;
  for (unsigned char v : g_) c += v;
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> StarMask::stars() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (test(i, j)) out.emplace_back(i, j);
  return out;
}

StarMask StarMask::transposed() const {
  StarMask t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (test(i, j)) t.set(j, i);
  return t;
}

bool StarMask::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (test(i, j) != test(j, i)) return false;
  return true;
}

void StarMask::place(const StarMask& sub, std::size_t r0, std::size_t c0) {
  if (r0 + sub.rows() > rows_ || c0 + sub.cols() > cols_)
    throw input_error("submask does not fit");
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j)
      if (sub.test(i, j)) set(r0 + i, c0 + j);
}

std::string StarMask::ascii() const {
  std::string s;
  s.reserve(rows_ * (2 * cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      s += test(i, j) ? '*' : '.';
      if (j + 1 < cols_) s += ' ';
    }
    s += '\n';
  }
  return s;
}

StarMask shape(ShapeKind kind, std::size_t rows, std::size_t cols, const ShapeOptions& opt) {
  StarMask m(rows, cols);
  auto need_nonempty = [&] {
    if (rows == 0 || cols == 0) throw input_error("shape needs a nonempty grid");
  };
  switch (kind) {
    case ShapeKind::zero:
      break;
    case ShapeKind::corner_star:
      need_nonempty();
      m.set(rows - 1, cols - 1);
      break;
    case ShapeKind::left_col:
      need_nonempty();
      for (std::size_t i = 0; i < rows; ++i) m.set(i, 0);
      break;
    case ShapeKind::right_col:
      need_nonempty();
      for (std::size_t i = 0; i < rows; ++i) m.set(i, cols - 1);
      break;
    case ShapeKind::righthalfcap:
      need_nonempty();
      if (opt.righthalfcap == RighthalfcapVariant::first_row_last_col) {
        for (std::size_t j = 0; j < cols; ++j) m.set(0, j);
        for (std::size_t i = 0; i < rows; ++i) m.set(i, cols - 1);
      } else {
        for (std::size_t i = 0; i < rows; ++i) m.set(i, 0);
        for (std::size_t j = 0; j < cols; ++j) m.set(rows - 1, j);
      }
      break;
    case ShapeKind::nw_triple:
      if (rows != cols) throw input_error("nw_triple needs a square grid");
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if ((i <= j + 1 && j <= i + 1) && i + j + 1 <= rows) m.set(i, j);
      break;
    case ShapeKind::nwse_triple:
      if (rows != cols) throw input_error("nwse_triple needs a square grid");
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (i <= j + 1 && j <= i + 1) m.set(i, j);
      break;
    case ShapeKind::nw_single: {
      std::size_t len = std::min(rows, cols);
      if (opt.nw_single == NwSingleVariant::first_column)
        for (std::size_t i = 0; i < len; ++i) m.set(i, 0);
      else
        for (std::size_t j = 0; j < len; ++j) m.set(0, j);
      break;
    }
    case ShapeKind::q_shape:
      if (rows >= 1 && rows < cols)
        for (std::size_t j = rows - 1; j + 1 < cols; ++j) m.set(rows - 1, j);
      break;
  }
  return m;
}

std::string ParamKey::str() const {
  return std::string(mat == MatrixTag::A ? "A" : "B") + "(" + std::to_string(row + 1) + "," +
         std::to_string(col + 1) + ")";
}

ParamKey parse_param_key(std::string_view text) {
  auto fail = [&](std::size_t pos) -> ParamKey { throw parse_error("bad parameter key", pos); };
  if (text.empty() || (text[0] != 'A' && text[0] != 'B')) return fail(0);
  MatrixTag mat = text[0] == 'A' ? MatrixTag::A : MatrixTag::B;
  std::size_t pos = 1;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(pos);
    ++pos;
  };
  auto number = [&]() -> std::size_t {
    std::size_t start = pos, v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (pos == start || v == 0) fail(start);
    return v - 1;
  };
  expect('(');
  std::size_t row = number();
  expect(',');
  std::size_t col = number();
  expect(')');
  if (pos != text.size()) fail(pos);
  if (row > col) std::swap(row, col);
  return {mat, row, col};
}

PatternPair::PatternPair(StarMask mask_a, StarMask mask_b)
    : a_(std::move(mask_a)), b_(std::move(mask_b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw input_error("pattern masks differ in size");
  if (!a_.is_symmetric() || !b_.is_symmetric())
    throw input_error("pattern masks must be symmetric");
  for (const StarMask* m : {&a_, &b_}) {
    MatrixTag tag = m == &a_ ? MatrixTag::A : MatrixTag::B;
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = i; j < m->cols(); ++j)
        if (m->test(i, j)) params_.push_back({tag, i, j});
  }
}

std::optional<std::size_t> PatternPair::param_index(MatrixTag mat, std::size_t i,
                                                    std::size_t j) const {
  if (i > j) std::swap(i, j);
  ParamKey key{mat, i, j};
  auto it = std::lower_bound(params_.begin(), params_.end(), key);
  if (it == params_.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::size_t>(it - params_.begin());
}

SymPair PatternPair::instantiate(const std::vector<GaussianRational>& by_id) const {
  if (by_id.size() != params_.size()) throw input_error("parameter value count mismatch");
  std::size_t n = size();
  ExactMatrix a(n, n), b(n, n);
  for (std::size_t k = 0; k < params_.size(); ++k) {
    const ParamKey& p = params_[k];
    ExactMatrix& m = p.mat == MatrixTag::A ? a : b;
    m(p.row, p.col) = by_id[k];
    m(p.col, p.row) = by_id[k];
  }
  return {std::move(a), std::move(b)};
}

SymPair PatternPair::instantiate(const std::map<ParamKey, GaussianRational>& values) const {
  std::vector<GaussianRational> by_id(params_.size());
  std::size_t used = 0;
  for (const auto& [key, value] : values) {
    auto id = param_index(key.mat, key.row, key.col);
    if (!id) throw input_error("unknown parameter " + key.str());
    by_id[*id] = value;
    ++used;
  }
  if (used != params_.size()) throw input_error("missing parameter values");
  return instantiate(by_id);
}

PatternPair diag_block_pattern(const BlockSpec& spec, const ShapeOptions& opt) {
  spec.validate();
  std::size_t sz = spec.size();
  StarMask a(sz, sz), b(sz, sz);
  switch (spec.kind) {
    case BlockKind::H:
      b = shape(ShapeKind::nw_triple, sz, sz, opt);
      break;
    case BlockKind::K:
      a = shape(ShapeKind::nw_triple, sz, sz, opt);
      break;
    case BlockKind::L:
      a.set(spec.n, spec.n);
      b.place(shape(ShapeKind::nwse_triple, spec.n + 1, spec.n + 1, opt), 0, 0);
      break;
  }
  return {std::move(a), std::move(b)};
}

namespace {

// L-L interaction in B, for L_n rows against L_m columns: a half-cap on the
// leading (n+1) x (m+1) corner, extended by the last row continuing through
// the G-part columns when n < m, and symmetrically by the last column
// continuing through the G-part rows when m < n.
StarMask ll_b_mask(std::size_t n, std::size_t m, const ShapeOptions& opt) {
  StarMask mask(2 * n + 1, 2 * m + 1);
  mask.place(shape(ShapeKind::righthalfcap, n + 1, m + 1, opt), 0, 0);
  StarMask q_right = shape(ShapeKind::q_shape, n + 1, m, {});
  mask.place(q_right, 0, m + 1);
  StarMask q_down = shape(ShapeKind::q_shape, m + 1, n, {}).transposed();
  mask.place(q_down, n + 1, 0);
  return mask;
}

}  // namespace

OffdiagPattern offdiag_block_pattern(const BlockSpec& bi, const BlockSpec& bj,
                                     const ShapeOptions& opt) {
  bi.validate();
  bj.validate();
  // Mixed orders with L first are the transposes of the L-last rectangles.
  if (bi.kind == BlockKind::L && bj.kind != BlockKind::L) {
    OffdiagPattern p = offdiag_block_pattern(bj, bi, opt);
    return {p.a.transposed(), p.b.transposed()};
  }
  std::size_t ri = bi.size(), cj = bj.size();
  StarMask a(ri, cj), b(ri, cj);
  if (bi.kind == BlockKind::H && bj.kind == BlockKind::H) {
    if (*bi.lambda == *bj.lambda) b = shape(ShapeKind::nw_single, ri, cj, opt);
  } else if (bi.kind == BlockKind::K && bj.kind == BlockKind::K) {
    a = shape(ShapeKind::nw_single, ri, cj, opt);
  } else if (bi.kind == BlockKind::H && bj.kind == BlockKind::L) {
    for (std::size_t i = 0; i < ri; ++i) b.set(i, 0);
  } else if (bi.kind == BlockKind::K && bj.kind == BlockKind::L) {
    for (std::size_t i = 0; i < ri; ++i) a.set(i, bj.n);
  } else if (bi.kind == BlockKind::L && bj.kind == BlockKind::L) {
    a.set(bi.n, bj.n);
    b = ll_b_mask(bi.n, bj.n, opt);
  }
  // H-K and K-H rectangles stay empty.
  return {std::move(a), std::move(b)};
}

PatternPair assemble_pattern(const CanonicalStructure& s, const ShapeOptions& opt) {
  s.validate();
  std::size_t total = s.total_size();
  StarMask a(total, total), b(total, total);
  std::vector<std::size_t> off = s.offsets();
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    PatternPair d = diag_block_pattern(s.blocks[i], opt);
    a.place(d.mask_a(), off[i], off[i]);
    b.place(d.mask_b(), off[i], off[i]);
    for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
      OffdiagPattern o = offdiag_block_pattern(s.blocks[i], s.blocks[j], opt);
      a.place(o.a, off[i], off[j]);
      a.place(o.a.transposed(), off[j], off[i]);
      b.place(o.b, off[i], off[j]);
      b.place(o.b.transposed(), off[j], off[i]);
    }
  }
  return {std::move(a), std::move(b)};
}

std::size_t count_parameters(const PatternPair& p) { return p.param_count(); }

PatternPair restrict_to_block_pair(const PatternPair& full, const CanonicalStructure& s,
                                   std::size_t i, std::size_t j) {
  if (i >= s.blocks.size() || j >= s.blocks.size() || i == j)
    throw input_error("bad block indices");
  if (full.size() != s.total_size()) throw input_error("pattern does not match structure");
  std::vector<std::size_t> off = s.offsets();
  std::size_t si = s.blocks[i].size(), sj = s.blocks[j].size();
  StarMask a(si + sj, si + sj), b(si + sj, si + sj);
  auto copy_quadrant = [&](const StarMask& src, StarMask& dst, std::size_t r0, std::size_t c0,
                           std::size_t nr, std::size_t nc, std::size_t dr, std::size_t dc) {
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c)
        if (src.test(r0 + r, c0 + c)) dst.set(dr + r, dc + c);
  };
  for (auto [src, dst] : {std::pair{&full.mask_a(), &a}, std::pair{&full.mask_b(), &b}}) {
    copy_quadrant(*src, *dst, off[i], off[i], si, si, 0, 0);
    copy_quadrant(*src, *dst, off[i], off[j], si, sj, 0, si);
    copy_quadrant(*src, *dst, off[j], off[i], sj, si, si, 0);
    copy_quadrant(*src, *dst, off[j], off[j], sj, sj, si, si);
  }
  return {std::move(a), std::move(b)};
}

std::string render_pattern_text(const PatternPair& p) {
  std::ostringstream os;
  os << "A stars:\n" << p.mask_a().ascii();
  os << "B stars:\n" << p.mask_b().ascii();
  os << "parameters (" << p.param_count() << "):";
  for (const auto& key : p.params()) os << " " << key.str();
  os << "\n";
  return os.str();
}

}  // namespace sympencil
