#ifndef SYMPENCIL_SWEEP_HPP
#define SYMPENCIL_SWEEP_HPP

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/pattern.hpp"
#include "sympencil/slice.hpp"
#include "sympencil/tangent.hpp"

namespace sympencil {

struct SweepOptions {
  std::size_t max_block_n = 3;   // H_n, K_n up to n; L_n up to n-1
  std::size_t max_blocks = 2;    // summands per structure
  std::size_t max_total = 6;     // total pair size
  std::vector<GaussianRational> lambdas;  // H eigenvalue samples, in order
  ShapeOptions shapes;

  static std::vector<GaussianRational> default_lambdas();
};

// All blocks within the bound, ordered by (size, kind H < K < L, n, lambda
// position). For max_block_n = N this is H_1..H_N per lambda, K_1..K_N and
// L_0..L_{N-1}.
std::vector<BlockSpec> block_family(std::size_t max_block_n,
                                    const std::vector<GaussianRational>& lambdas);

// Ordered tuples over the family with 1..max_blocks summands and total size
// at most max_total; block count ascending, then lexicographic by family
// position, so a structure is reproducible from its index alone.
std::vector<CanonicalStructure> enumerate_structures(const SweepOptions& opt);

struct StructureVerdict {
  CanonicalStructure structure;
  MiniversalCheck full;
  std::size_t greedy_params = 0;
  bool greedy_match = true;       // greedy count == pattern count == codim
  std::vector<std::string> failures;  // empty when everything holds
  PatternPair pattern, greedy;

  bool ok() const { return failures.empty(); }
};

// Full-pattern miniversality, optional per-pair restriction checks and the
// greedy cross-check, on one structure.
StructureVerdict verify_structure(const CanonicalStructure& s, const ShapeOptions& shapes = {},
                                  bool blockwise = true, bool greedy = true);

struct LedgerEntry {
  std::size_t index;  // position in the enumeration
  CanonicalStructure structure;
  std::string reason;
};

struct SweepResult {
  std::size_t structures = 0;
  std::size_t checks = 0;
  std::vector<LedgerEntry> ledger;

  bool ok() const { return ledger.empty(); }
};

SweepResult run_sweep(const SweepOptions& opt, bool blockwise = true, bool greedy = true,
                      std::ostream* progress = nullptr);

// Deterministic symmetric test perturbation: entries are small rationals
// (numerators -5..5, denominators 1..2, sometimes imaginary) drawn from the
// given engine.
SymPair random_symmetric_pair(std::size_t n, std::mt19937_64& rng);

}  // namespace sympencil

#endif
