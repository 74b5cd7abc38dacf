#include "sympencil/canonical.hpp"

namespace sympencil {

BlockSpec BlockSpec::h(std::size_t n, GaussianRational lambda) {
  BlockSpec s{BlockKind::H, n, std::move(lambda)};
  s.validate();
  return s;
}

BlockSpec BlockSpec::k(std::size_t n) {
  BlockSpec s{BlockKind::K, n, std::nullopt};
  s.validate();
  return s;
}

BlockSpec BlockSpec::l(std::size_t n) {
  BlockSpec s{BlockKind::L, n, std::nullopt};
  s.validate();
  return s;
}

void BlockSpec::validate() const {
  if (kind != BlockKind::L && n == 0) throw input_error("H and K blocks need n >= 1");
  if ((kind == BlockKind::H) != lambda.has_value())
    throw input_error("lambda is required for H blocks and only for them");
}

std::size_t BlockSpec::size() const { return kind == BlockKind::L ? 2 * n + 1 : n; }

std::string BlockSpec::str() const {
  switch (kind) {
    case BlockKind::H:
      return "H" + std::to_string(n) + "(" + lambda->str() + ")";
    case BlockKind::K:
      return "K" + std::to_string(n);
    default:
      return "L" + std::to_string(n);
  }
}

void CanonicalStructure::validate() const {
  for (const auto& b : blocks) b.validate();
}

std::size_t CanonicalStructure::total_size() const {
  std::size_t t = 0;
  for (const auto& b : blocks) t += b.size();
  return t;
}

std::vector<std::size_t> CanonicalStructure::offsets() const {
  std::vector<std::size_t> off;
  off.reserve(blocks.size());
  std::size_t t = 0;
  for (const auto& b : blocks) {
    off.push_back(t);
    t += b.size();
  }
  return off;
}

std::string CanonicalStructure::str() const {
  if (blocks.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += " + ";
    s += blocks[i].str();
  }
  return s;
}

ExactMatrix lambda_matrix(std::size_t n, const GaussianRational& lambda) {
  if (n == 0) throw input_error("lambda_matrix needs n >= 1");
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j + 1 == n) m(i, j) = lambda;
      if (i + j == n) m(i, j) = 1;
    }
  return m;
}

ExactMatrix delta_matrix(std::size_t n) {
  if (n == 0) throw input_error("delta_matrix needs n >= 1");
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

std::pair<ExactMatrix, ExactMatrix> fg_matrices(std::size_t n) {
  ExactMatrix f(n, n + 1), g(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    f(i, i) = 1;
    g(i, i + 1) = 1;
  }
  return {f, g};
}

SymPair make_block(const BlockSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case BlockKind::H:
      return {delta_matrix(spec.n), lambda_matrix(spec.n, *spec.lambda)};
    case BlockKind::K:
      return {lambda_matrix(spec.n, GaussianRational(0)), delta_matrix(spec.n)};
    default: {
      auto [f, g] = fg_matrices(spec.n);
      std::size_t sz = 2 * spec.n + 1;
      ExactMatrix a(sz, sz), b(sz, sz);
      a.place(f.transposed(), 0, spec.n + 1);
      a.place(f, spec.n + 1, 0);
      b.place(g.transposed(), 0, spec.n + 1);
      b.place(g, spec.n + 1, 0);
      return {std::move(a), std::move(b)};
    }
  }
}

SymPair assemble(const CanonicalStructure& s) {
  s.validate();
  std::size_t total = s.total_size();
  ExactMatrix a(total, total), b(total, total);
  std::size_t off = 0;
  for (const auto& spec : s.blocks) {
    SymPair blk = make_block(spec);
    a.place(blk.a(), off, off);
    b.place(blk.b(), off, off);
    off += spec.size();
  }
  return {std::move(a), std::move(b)};
}

}  // namespace sympencil
