#ifndef SYMPENCIL_SLICE_HPP
#define SYMPENCIL_SLICE_HPP

#include <map>

#include "sympencil/matrix.hpp"
#include "sympencil/pattern.hpp"
#include "sympencil/tangent.hpp"

namespace sympencil {

struct SliceProjection {
  std::vector<GaussianRational> d_values;  // by pattern parameter id
  ExactMatrix reducer;                     // direction C realizing the move
  bool residual_check;                     // exact residual identity held

  std::map<ParamKey, GaussianRational> named_values(const PatternPair& p) const;
};

/*
 * Miniversality makes the pair space the direct sum of the tangent space at
 * k and the pattern coordinate space, so every perturbation e splits
 * uniquely as
 *
 *     e + tangent_perturbation(k, C) == p.instantiate(d)
 *
 * with d the unique pattern coordinates of e's slice representative. The
 * projector factors the combined system [tangent | -pattern] once and then
 * solves per perturbation; C is the solution with free variables zeroed,
 * and d does not depend on that choice.
 */
class SliceProjector {
 public:
  SliceProjector(SymPair k, PatternPair p);  // throws input_error unless miniversal

  // Same factorization under a caller-chosen pivot order (a permutation of
  // the system's columns); d_values are pivot-order independent.
  SliceProjector(SymPair k, PatternPair p, const std::vector<std::size_t>& col_order);

  SliceProjection project(const SymPair& e) const;

  const SymPair& base() const noexcept { return k_; }
  const PatternPair& pattern() const noexcept { return p_; }

 private:
  void init(const std::vector<std::size_t>* col_order);

  SymPair k_;
  PatternPair p_;
  std::optional<LinearSolver> solver_;
};

SliceProjection project_to_slice(const SymPair& k, const SymPair& e, const PatternPair& p);

// Projects e, re-projects the instantiated result, and confirms the pattern
// coordinates are reproduced exactly with a tangent-trivial reducer.
bool project_idempotence_check(const SymPair& k, const SymPair& e, const PatternPair& p);

}  // namespace sympencil

#endif
