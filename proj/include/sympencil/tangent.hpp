#ifndef SYMPENCIL_TANGENT_HPP
#define SYMPENCIL_TANGENT_HPP

#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/matrix.hpp"
#include "sympencil/pattern.hpp"

namespace sympencil {

/*
 * The congruence action S'(A,B)S linearized at the identity sends a
 * direction C to (C'A + AC, C'B + BC); the image over all C is the tangent
 * space of the congruence orbit at (A,B). Its codimension inside the
 * n(n+1)-dimensional space of symmetric pairs is the number of parameters a
 * miniversal deformation needs.
 */

// (C'A + AC, C'B + BC); both components are symmetric by construction.
SymPair tangent_perturbation(const SymPair& k, const ExactMatrix& c);

struct TangentGenerator {
  ExactMatrix c;  // elementary direction E_kl
  SymPair image;
};

struct TangentBasis {
  SymPair base;
  std::vector<TangentGenerator> generators;  // all n^2, k row-major then l
};

TangentBasis tangent_basis(const SymPair& k);

// Vectorized tangent images, one generator per row; n^2 x n(n+1).
ExactMatrix tangent_matrix(const SymPair& k);

std::size_t tangent_rank(const SymPair& k);
std::size_t codimension(const SymPair& k);

struct MiniversalCheck {
  bool ok;             // spans and the parameter count equals the codimension
  bool spans;          // tangent space + pattern space fill everything
  bool params_match;   // pattern parameter count == codimension
  std::size_t pair_dim;
  std::size_t tangent_rank;
  std::size_t codim;
  std::size_t pattern_params;
  std::size_t combined_rank;
};

/*
 * A pattern is miniversal for (A,B) when the tangent space and the pattern
 * coordinate space together span the whole pair space and the pattern has
 * no excess parameters. The pattern contributes unit coordinate vectors,
 * so the combined rank is its parameter count plus the rank of the tangent
 * rows restricted to the remaining coordinates.
 */
MiniversalCheck is_miniversal(const SymPair& k, const PatternPair& p);

struct BlockPairCheck {
  BlockSpec left, right;
  MiniversalCheck check;
};

// Miniversality of the two-block direct sum against the given restriction
// of the full pattern; a structure is covered by checking all its pairs.
BlockPairCheck verify_block_pair(const BlockSpec& bi, const BlockSpec& bj,
                                 const PatternPair& restriction);

/*
 * Builds a minimal pattern from scratch: scan the pair coordinates in
 * vectorization order and keep each one whose unit vector is independent of
 * the tangent space extended by the coordinates kept so far. Equivalently,
 * a coordinate is kept exactly when it is not a pivot column of the tangent
 * matrix eliminated with columns scanned right to left, which is how it is
 * computed here. Keeps exactly codim coordinates whatever the pair.
 */
PatternPair greedy_minimal_pattern(const SymPair& k);

}  // namespace sympencil

#endif
