#include "sympencil/slice.hpp"

#include <stdexcept>

namespace sympencil {

std::map<ParamKey, GaussianRational> SliceProjection::named_values(const PatternPair& p) const {
  if (d_values.size() != p.param_count()) throw input_error("pattern does not match projection");
  std::map<ParamKey, GaussianRational> m;
  for (std::size_t i = 0; i < d_values.size(); ++i) m[p.params()[i]] = d_values[i];
  return m;
}

SliceProjector::SliceProjector(SymPair k, PatternPair p) : k_(std::move(k)), p_(std::move(p)) {
  init(nullptr);
}

SliceProjector::SliceProjector(SymPair k, PatternPair p,
                               const std::vector<std::size_t>& col_order)
    : k_(std::move(k)), p_(std::move(p)) {
  init(&col_order);
}

namespace {

std::size_t param_coord(std::size_t n, const ParamKey& p) {
  std::size_t c = tri_index(n, p.row, p.col);
  return p.mat == MatrixTag::A ? c : n * (n + 1) / 2 + c;
}

}  // namespace

void SliceProjector::init(const std::vector<std::size_t>* col_order) {
  MiniversalCheck chk = is_miniversal(k_, p_);
  if (!chk.ok) throw input_error("pattern is not miniversal for the base pair");

  std::size_t n = k_.size();
  std::size_t dim = pair_dim(n);
  std::size_t gens = n * n;
  std::size_t params = p_.param_count();

  // Columns: one per direction E_kl, then one per pattern parameter
  // (negated unit coordinate).
  ExactMatrix m(dim, gens + params);
  ExactMatrix t = tangent_matrix(k_);
  for (std::size_t g = 0; g < gens; ++g)
    for (std::size_t r = 0; r < dim; ++r) m(r, g) = t(g, r);
  for (std::size_t q = 0; q < params; ++q)
    m(param_coord(n, p_.params()[q]), gens + q) = -1;

  if (col_order)
    solver_.emplace(m, *col_order);
  else
    solver_.emplace(m);
  // Miniversality means tangent + pattern spans the pair space.
  if (solver_->rank() != dim)
    throw std::logic_error("slice system lost rank despite miniversality");
}

SliceProjection SliceProjector::project(const SymPair& e) const {
  std::size_t n = k_.size();
  if (e.size() != n) throw input_error("perturbation size mismatch");

  std::vector<GaussianRational> rhs = vectorize_sym_pair(e);
  for (auto& v : rhs) v = -v;
  auto sol = solver_->solve(rhs);
  if (!sol) throw std::logic_error("slice system inconsistent despite miniversality");

  std::size_t gens = n * n;
  SliceProjection out;
  out.reducer = ExactMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.reducer(r, c) = (*sol)[r * n + c];
  out.d_values.assign(sol->begin() + static_cast<std::ptrdiff_t>(gens), sol->end());

  SymPair lhs = p_.instantiate(out.d_values);
  SymPair rhs_pair = e + tangent_perturbation(k_, out.reducer);
  out.residual_check = lhs == rhs_pair;
  return out;
}

SliceProjection project_to_slice(const SymPair& k, const SymPair& e, const PatternPair& p) {
  return SliceProjector(k, p).project(e);
}

bool project_idempotence_check(const SymPair& k, const SymPair& e, const PatternPair& p) {
  SliceProjector proj(k, p);
  SliceProjection first = proj.project(e);
  SliceProjection second = proj.project(p.instantiate(first.d_values));
  return first.residual_check && second.residual_check &&
         second.d_values == first.d_values &&
         tangent_perturbation(k, second.reducer).is_zero();
}

}  // namespace sympencil
