#ifndef SYMPENCIL_CANONICAL_HPP
#define SYMPENCIL_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sympencil/matrix.hpp"

namespace sympencil {

/*
 * Canonical pairs of symmetric matrices under congruence are direct sums of
 * three block families:
 *
 *   H_n(lambda) = (Delta_n, Lambda_n(lambda))   size n, n >= 1
 *   K_n         = (Lambda_n(0), Delta_n)        size n, n >= 1
 *   L_n         = ([0 F'; F 0], [0 G'; G 0])    size 2n+1, n >= 0
 *
 * where Delta_n is the anti-identity, Lambda_n(lambda) carries lambda on the
 * anti-diagonal and ones on the skew diagonal just below it, and F_n, G_n
 * are the n x (n+1) shift blocks with ones at (i,i) and (i,i+1).
 */

enum class BlockKind { H, K, L };

struct BlockSpec {
  BlockKind kind;
  std::size_t n;
  std::optional<GaussianRational> lambda;  // present exactly for H blocks

  static BlockSpec h(std::size_t n, GaussianRational lambda);
  static BlockSpec k(std::size_t n);
  static BlockSpec l(std::size_t n);

  void validate() const;          // throws input_error
  std::size_t size() const;       // H, K: n; L: 2n+1
  std::string str() const;        // "H2(1/2)", "K3", "L0"

  friend bool operator==(const BlockSpec& a, const BlockSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.lambda == b.lambda;
  }
};

struct CanonicalStructure {
  std::vector<BlockSpec> blocks;

  void validate() const;
  std::size_t total_size() const;
  std::vector<std::size_t> offsets() const;  // starting row of each block
  std::string str() const;                   // "H2(1/2) + K3 + L0"

  friend bool operator==(const CanonicalStructure& a, const CanonicalStructure& b) {
    return a.blocks == b.blocks;
  }
};

// Lambda_n(lambda): lambda on the anti-diagonal i+j == n-1, ones on i+j == n.
ExactMatrix lambda_matrix(std::size_t n, const GaussianRational& lambda);

// Delta_n: ones on the anti-diagonal.
ExactMatrix delta_matrix(std::size_t n);

// F_n, G_n of size n x (n+1): F has ones at (i,i), G at (i,i+1).
std::pair<ExactMatrix, ExactMatrix> fg_matrices(std::size_t n);

SymPair make_block(const BlockSpec& spec);

// Direct sum of all blocks, in order. The empty structure gives a 0x0 pair.
SymPair assemble(const CanonicalStructure& s);

}  // namespace sympencil

#endif
