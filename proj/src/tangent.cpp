#include "sympencil/tangent.hpp"

#include <algorithm>
#include <numeric>

namespace sympencil {

SymPair tangent_perturbation(const SymPair& k, const ExactMatrix& c) {
  if (!c.is_square() || c.rows() != k.size())
    throw input_error("direction matrix size mismatch");
  ExactMatrix ct = c.transposed();
  return {ct * k.a() + k.a() * c, ct * k.b() + k.b() * c};
}

namespace {

// Image of the elementary direction E_kl under C -> C'M + MC: adds column k
// of M into column l and its transpose into row l; O(n) nonzero entries.
ExactMatrix elementary_image(const ExactMatrix& m, std::size_t k, std::size_t l) {
  std::size_t n = m.rows();
  ExactMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational& v = m(i, k);
    if (v.is_zero()) continue;
    r(i, l) += v;
    r(l, i) += v;
  }
  return r;
}

}  // namespace

TangentBasis tangent_basis(const SymPair& k) {
  std::size_t n = k.size();
  TangentBasis tb{k, {}};
  tb.generators.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      ExactMatrix e(n, n);
      e(r, c) = 1;
      tb.generators.push_back(
          {std::move(e), SymPair(elementary_image(k.a(), r, c), elementary_image(k.b(), r, c))});
    }
  return tb;
}

ExactMatrix tangent_matrix(const SymPair& k) {
  std::size_t n = k.size();
  ExactMatrix rows(n * n, pair_dim(n));
  std::size_t g = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      SymPair img(elementary_image(k.a(), r, c), elementary_image(k.b(), r, c));
      std::vector<GaussianRational> v = vectorize_sym_pair(img);
      for (std::size_t j = 0; j < v.size(); ++j) rows(g, j) = std::move(v[j]);
      ++g;
    }
  return rows;
}

std::size_t tangent_rank(const SymPair& k) { return rank(tangent_matrix(k)); }

std::size_t codimension(const SymPair& k) { return pair_dim(k.size()) - tangent_rank(k); }

namespace {

// Vectorization coordinate of a parameter position.
std::size_t param_coord(std::size_t n, const ParamKey& p) {
  std::size_t c = tri_index(n, p.row, p.col);
  return p.mat == MatrixTag::A ? c : n * (n + 1) / 2 + c;
}

}  // namespace

MiniversalCheck is_miniversal(const SymPair& k, const PatternPair& p) {
  if (p.size() != k.size()) throw input_error("pattern size mismatch");
  std::size_t n = k.size();
  std::size_t dim = pair_dim(n);
  ExactMatrix t = tangent_matrix(k);

  MiniversalCheck res{};
  res.pair_dim = dim;
  res.pattern_params = p.param_count();
  res.tangent_rank = rank(t);
  res.codim = dim - res.tangent_rank;

  std::vector<bool> is_param(dim, false);
  for (const ParamKey& key : p.params()) is_param[param_coord(n, key)] = true;
  std::vector<std::size_t> rest;
  rest.reserve(dim - res.pattern_params);
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_param[c]) rest.push_back(c);

  res.combined_rank = res.pattern_params + rank_with_pivots(t, rest).rank;
  res.spans = res.combined_rank == dim;
  res.params_match = res.pattern_params == res.codim;
  res.ok = res.spans && res.params_match;
  return res;
}

BlockPairCheck verify_block_pair(const BlockSpec& bi, const BlockSpec& bj,
                                 const PatternPair& restriction) {
  SymPair k = assemble(CanonicalStructure{{bi, bj}});
  return {bi, bj, is_miniversal(k, restriction)};
}

PatternPair greedy_minimal_pattern(const SymPair& k) {
  std::size_t n = k.size();
  std::size_t dim = pair_dim(n);
  ExactMatrix t = tangent_matrix(k);

  std::vector<std::size_t> reversed(dim);
  for (std::size_t c = 0; c < dim; ++c) reversed[c] = dim - 1 - c;
  RankResult r = rank_with_pivots(t, reversed);

  std::vector<bool> pivot(dim, false);
  for (std::size_t c : r.pivot_cols) pivot[c] = true;

  // Coordinates in vectorization order, for decoding kept positions.
  std::vector<ParamKey> coords;
  coords.reserve(dim);
  for (MatrixTag tag : {MatrixTag::A, MatrixTag::B})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) coords.push_back({tag, i, j});

  StarMask a(n, n), b(n, n);
  for (std::size_t c = 0; c < dim; ++c) {
    if (pivot[c]) continue;
    const ParamKey& p = coords[c];
    StarMask& m = p.mat == MatrixTag::A ? a : b;
    m.set(p.row, p.col);
    m.set(p.col, p.row);
  }
  return {std::move(a), std::move(b)};
}

}  // namespace sympencil
