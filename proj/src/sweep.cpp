#include "sympencil/sweep.hpp"

#include <algorithm>
#include <ostream>

namespace sympencil {

std::vector<GaussianRational> SweepOptions::default_lambdas() {
  return {GaussianRational(0), GaussianRational(1), GaussianRational(-1),
          GaussianRational(mpq_class(1, 2)), GaussianRational(mpq_class(1), mpq_class(1))};
}

std::vector<BlockSpec> block_family(std::size_t max_block_n,
                                    const std::vector<GaussianRational>& lambdas) {
  std::vector<std::pair<std::vector<std::size_t>, BlockSpec>> keyed;
  for (std::size_t n = 1; n <= max_block_n; ++n) {
    for (std::size_t li = 0; li < lambdas.size(); ++li)
      keyed.push_back({{n, 0, n, li}, BlockSpec::h(n, lambdas[li])});
    keyed.push_back({{n, 1, n, 0}, BlockSpec::k(n)});
    keyed.push_back({{2 * (n - 1) + 1, 2, n - 1, 0}, BlockSpec::l(n - 1)});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<BlockSpec> family;
  family.reserve(keyed.size());
  for (auto& [key, spec] : keyed) family.push_back(std::move(spec));
  return family;
}

std::vector<CanonicalStructure> enumerate_structures(const SweepOptions& opt) {
  const std::vector<GaussianRational>& lam =
      opt.lambdas.empty() ? SweepOptions::default_lambdas() : opt.lambdas;
  std::vector<BlockSpec> family = block_family(opt.max_block_n, lam);

  std::vector<CanonicalStructure> out;
  std::vector<std::size_t> pick;
  auto extend = [&](auto&& self, std::size_t count, std::size_t used) -> void {
    if (pick.size() == count) {
      CanonicalStructure s;
      s.blocks.reserve(count);
      for (std::size_t f : pick) s.blocks.push_back(family[f]);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t f = 0; f < family.size(); ++f) {
      std::size_t sz = family[f].size();
      if (used + sz > opt.max_total) continue;
      pick.push_back(f);
      self(self, count, used + sz);
      pick.pop_back();
    }
  };
  for (std::size_t count = 1; count <= opt.max_blocks; ++count) extend(extend, count, 0);
  return out;
}

StructureVerdict verify_structure(const CanonicalStructure& s, const ShapeOptions& shapes,
                                  bool blockwise, bool greedy) {
  StructureVerdict v;
  v.structure = s;
  SymPair k = assemble(s);
  v.pattern = assemble_pattern(s, shapes);
  v.full = is_miniversal(k, v.pattern);
  if (!v.full.ok) {
    v.failures.push_back("full pattern: spans=" + std::string(v.full.spans ? "yes" : "no") +
                         " params=" + std::to_string(v.full.pattern_params) +
                         " codim=" + std::to_string(v.full.codim));
  }
  if (blockwise) {
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
        PatternPair restriction = restrict_to_block_pair(v.pattern, s, i, j);
        BlockPairCheck pc = verify_block_pair(s.blocks[i], s.blocks[j], restriction);
        if (!pc.check.ok)
          v.failures.push_back("block pair (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ") " + s.blocks[i].str() + " x " +
                               s.blocks[j].str() + ": params=" +
                               std::to_string(pc.check.pattern_params) +
                               " codim=" + std::to_string(pc.check.codim) +
                               " spans=" + (pc.check.spans ? "yes" : "no"));
      }
  }
  if (greedy) {
    v.greedy = greedy_minimal_pattern(k);
    v.greedy_params = v.greedy.param_count();
    v.greedy_match = v.greedy_params == v.full.pattern_params && v.greedy_params == v.full.codim;
    if (!v.greedy_match)
      v.failures.push_back("greedy pattern keeps " + std::to_string(v.greedy_params) +
                           " parameters, catalog has " + std::to_string(v.full.pattern_params) +
                           ", codimension " + std::to_string(v.full.codim));
  }
  return v;
}

SweepResult run_sweep(const SweepOptions& opt, bool blockwise, bool greedy,
                      std::ostream* progress) {
  std::vector<CanonicalStructure> structures = enumerate_structures(opt);
  SweepResult res;
  res.structures = structures.size();
  for (std::size_t idx = 0; idx < structures.size(); ++idx) {
    StructureVerdict v = verify_structure(structures[idx], opt.shapes, blockwise, greedy);
    res.checks += 1 + (blockwise ? structures[idx].blocks.size() *
                                       (structures[idx].blocks.size() - 1) / 2
                                 : 0) +
                  (greedy ? 1 : 0);
    for (const std::string& f : v.failures)
      res.ledger.push_back({idx, structures[idx], f});
    if (progress && (idx + 1) % 100 == 0)
      *progress << "  " << (idx + 1) << "/" << structures.size() << " structures\n";
  }
  return res;
}

SymPair random_symmetric_pair(std::size_t n, std::mt19937_64& rng) {
  auto small = [&rng](bool with_imag) {
    auto part = [&rng]() {
      long num = static_cast<long>(rng() % 11) - 5;
      unsigned long den = 1 + rng() % 2;
      return mpq_class(num, den);
    };
    mpq_class re = part();
    mpq_class im = with_imag && rng() % 4 == 0 ? part() : mpq_class(0);
    return GaussianRational(re, im);
  };
  ExactMatrix a(n, n), b(n, n);
  for (ExactMatrix* m : {&a, &b})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        GaussianRational v = small(true);
        (*m)(i, j) = v;
        (*m)(j, i) = v;
      }
  return {std::move(a), std::move(b)};
}

}  // namespace sympencil
