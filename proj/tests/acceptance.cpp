// Acceptance gate. Runs seven end to end checks over the canonical block
// families and prints one [PASS]/[FAIL] line per criterion; the process
// exits nonzero if any criterion fails.
//
//   1. every single block's pattern is miniversal with params == codim
//   2. every ordered block pair (total size <= 10) passes the pair check
//   3. 200 deterministically selected triple sums are miniversal
//   4. the eigenvalue dichotomy: codimension excess of H2+H3 is the
//      interaction star count when the eigenvalues agree, zero otherwise
//   5. the greedy pattern keeps exactly as many parameters as the catalog
//      pattern on every swept structure (positions may differ; both are
//      written to a report file)
//   6. 100 seeded perturbations per swept structure project onto the slice
//      with an exact residual; idempotence and linearity hold exactly
//   7. the accumulated discrepancy ledger is empty

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include "sympencil/slice.hpp"
#include "sympencil/sweep.hpp"

using namespace sympencil;

namespace {

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

// The block families under test: H_n(lambda) for n = 1..6 over five sample
// eigenvalues, K_1..K_6, L_0..L_5.
std::vector<GaussianRational> sample_lambdas() {
  std::vector<GaussianRational> out;
  for (const char* text : {"0", "1", "-1", "1/2", "1+1i"})
    out.push_back(GaussianRational::parse(text));
  return out;
}

std::vector<BlockSpec> sample_blocks() {
  std::vector<BlockSpec> blocks;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const GaussianRational& lam : sample_lambdas()) blocks.push_back(BlockSpec::h(n, lam));
  for (std::size_t n = 1; n <= 6; ++n) blocks.push_back(BlockSpec::k(n));
  for (std::size_t n = 0; n <= 5; ++n) blocks.push_back(BlockSpec::l(n));
  return blocks;
}

struct Gate {
  bool all_pass = true;

  void record(int criterion, bool pass, const std::string& detail) {
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << "\n";
    std::cout.flush();
  }
};

struct LedgerItem {
  std::size_t size;  // total pair size, for picking the minimal failure
  std::string structure;
  std::string reason;
};

}  // namespace

int main() {
  Gate gate;
  std::vector<StructureVerdict> swept;  // criteria 1..3 accumulate here
  std::vector<LedgerItem> ledger;

  auto sweep_in = [&](const CanonicalStructure& s, bool blockwise) -> const StructureVerdict& {
    StructureVerdict v = verify_structure(s, {}, blockwise, true);
    for (const std::string& f : v.failures) ledger.push_back({s.total_size(), s.str(), f});
    swept.push_back(std::move(v));
    return swept.back();
  };

  const std::vector<BlockSpec> blocks = sample_blocks();

  // criterion 1: single blocks
  {
    auto start = Clock::now();
    std::size_t ok = 0;
    for (const BlockSpec& b : blocks) {
      const StructureVerdict& v = sweep_in(CanonicalStructure{{b}}, false);
      if (v.full.ok) ++ok;
    }
    std::ostringstream os;
    os << ok << "/" << blocks.size()
       << " single blocks miniversal with params == codim (" << seconds_since(start) << ")";
    gate.record(1, ok == blocks.size(), os.str());
  }

  // criterion 2: all ordered block pairs with total size <= 10
  {
    auto start = Clock::now();
    std::size_t total = 0, ok = 0;
    for (const BlockSpec& bi : blocks)
      for (const BlockSpec& bj : blocks) {
        if (bi.size() + bj.size() > 10) continue;
        ++total;
        CanonicalStructure s{{bi, bj}};
        const StructureVerdict& v = sweep_in(s, false);
        BlockPairCheck pc =
            verify_block_pair(bi, bj, restrict_to_block_pair(v.pattern, s, 0, 1));
        bool pass = pc.check.ok && v.full.ok;
        if (!pc.check.ok)
          ledger.push_back({s.total_size(), s.str(),
                            "pair restriction: params=" + std::to_string(pc.check.pattern_params) +
                                " codim=" + std::to_string(pc.check.codim) +
                                " spans=" + (pc.check.spans ? "yes" : "no")});
        if (pass) ++ok;
      }
    std::ostringstream os;
    os << ok << "/" << total << " ordered block pairs pass the pair check ("
       << seconds_since(start) << ")";
    gate.record(2, ok == total, os.str());
  }

  // criterion 3: 200 triple sums, selected by even index striding over the
  // lexicographic enumeration of ordered triples with total size <= 10
  {
    auto start = Clock::now();
    std::vector<CanonicalStructure> triples;
    for (const BlockSpec& bi : blocks)
      for (const BlockSpec& bj : blocks) {
        if (bi.size() + bj.size() + 1 > 10) continue;
        for (const BlockSpec& bk : blocks) {
          if (bi.size() + bj.size() + bk.size() > 10) continue;
          triples.push_back(CanonicalStructure{{bi, bj, bk}});
        }
      }
    const std::size_t want = 200;
    std::size_t ok = 0;
    for (std::size_t t = 0; t < want; ++t) {
      const CanonicalStructure& s = triples[t * triples.size() / want];
      if (sweep_in(s, false).full.ok) ++ok;
    }
    std::ostringstream os;
    os << ok << "/" << want << " triple sums miniversal (selected from " << triples.size()
       << " candidates, " << seconds_since(start) << ")";
    gate.record(3, ok == want, os.str());
  }

  // criterion 4: eigenvalue dichotomy for H2 + H3, derived from tangent ranks
  {
    auto start = Clock::now();
    const std::vector<GaussianRational> lambdas = sample_lambdas();
    const std::size_t interaction = shape(ShapeKind::nw_single, 2, 3).star_count();
    bool pass = interaction == 2;
    std::size_t checked = 0;
    for (const GaussianRational& li : lambdas)
      for (const GaussianRational& lj : lambdas) {
        CanonicalStructure s{{BlockSpec::h(2, li), BlockSpec::h(3, lj)}};
        std::size_t sum = codimension(assemble(CanonicalStructure{{s.blocks[0]}})) +
                          codimension(assemble(CanonicalStructure{{s.blocks[1]}}));
        std::size_t excess = codimension(assemble(s)) - sum;
        std::size_t expected = li == lj ? interaction : 0;
        if (excess != expected) {
          pass = false;
          ledger.push_back({s.total_size(), s.str(),
                            "eigenvalue dichotomy: excess " + std::to_string(excess) +
                                ", expected " + std::to_string(expected)});
        }
        ++checked;
      }
    std::ostringstream os;
    os << checked << " eigenvalue combinations: codimension excess is " << interaction
       << " iff the eigenvalues agree, else 0 (" << seconds_since(start) << ")";
    gate.record(4, pass, os.str());
  }

  // criterion 5: greedy parameter count equals the catalog count on every
  // swept structure; both star sets go into the report
  {
    auto start = Clock::now();
    std::filesystem::path report_path =
        std::filesystem::absolute("pattern_comparison_report.txt");
    std::ofstream report(report_path);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < swept.size(); ++i) {
      const StructureVerdict& v = swept[i];
      if (v.greedy_match) ++ok;
      report << "[" << i << "] " << v.structure.str() << "  codim " << v.full.codim
             << ", catalog " << v.full.pattern_params << ", greedy " << v.greedy_params
             << (v.greedy_match ? "" : "  MISMATCH") << "\n"
             << "catalog pattern:\n"
             << render_pattern_text(v.pattern) << "greedy pattern:\n"
             << render_pattern_text(v.greedy) << "\n";
    }
    std::ostringstream os;
    os << ok << "/" << swept.size()
       << " swept structures have matching greedy and catalog parameter counts; both patterns in "
       << report_path.string() << " (" << seconds_since(start) << ")";
    gate.record(5, ok == swept.size(), os.str());
  }

  // criterion 6: slice projection of seeded random perturbations
  {
    auto start = Clock::now();
    const std::size_t per_structure = 100;
    const std::size_t retained = 20;  // reused for idempotence and linearity
    std::size_t residual_fail = 0, idem_fail = 0, linear_fail = 0;
    for (std::size_t idx = 0; idx < swept.size(); ++idx) {
      const StructureVerdict& v = swept[idx];
      SymPair k = assemble(v.structure);
      SliceProjector proj(k, v.pattern);
      std::mt19937_64 rng(424242 + idx);
      std::vector<SymPair> es;
      std::vector<SliceProjection> prs;
      for (std::size_t t = 0; t < per_structure; ++t) {
        SymPair e = random_symmetric_pair(k.size(), rng);
        SliceProjection pr = proj.project(e);
        if (!pr.residual_check) {
          ++residual_fail;
          ledger.push_back({k.size(), v.structure.str(),
                            "projection residual failed at perturbation " + std::to_string(t)});
        }
        if (t < retained) {
          es.push_back(std::move(e));
          prs.push_back(std::move(pr));
        }
      }
      for (std::size_t t = 0; t + 1 < retained; t += 2) {
        // idempotence: the slice representative projects to itself
        SliceProjection again = proj.project(v.pattern.instantiate(prs[t].d_values));
        if (!(again.residual_check && again.d_values == prs[t].d_values &&
              tangent_perturbation(k, again.reducer).is_zero())) {
          ++idem_fail;
          ledger.push_back({k.size(), v.structure.str(), "projection not idempotent"});
        }
        // linearity: coordinates of a sum are the sums of coordinates
        SliceProjection sum = proj.project(es[t] + es[t + 1]);
        bool linear = sum.residual_check;
        for (std::size_t c = 0; linear && c < sum.d_values.size(); ++c)
          linear = sum.d_values[c] == prs[t].d_values[c] + prs[t + 1].d_values[c];
        if (!linear) {
          ++linear_fail;
          ledger.push_back({k.size(), v.structure.str(), "projection not linear"});
        }
      }
    }
    bool pass = residual_fail == 0 && idem_fail == 0 && linear_fail == 0;
    std::ostringstream os;
    os << swept.size() << " structures x " << per_structure
       << " seeded perturbations: residual identity exact, idempotence and linearity hold ("
       << seconds_since(start) << ")";
    if (!pass)
      os << " [" << residual_fail << " residual, " << idem_fail << " idempotence, " << linear_fail
         << " linearity failures]";
    gate.record(6, pass, os.str());
  }

  // criterion 7: the ledger collected across all checks is empty
  {
    if (ledger.empty()) {
      gate.record(7, true, "discrepancy ledger is empty");
    } else {
      std::size_t minimal = 0;
      for (std::size_t i = 1; i < ledger.size(); ++i)
        if (std::tie(ledger[i].size, ledger[i].structure) <
            std::tie(ledger[minimal].size, ledger[minimal].structure))
          minimal = i;
      std::ostringstream os;
      os << ledger.size() << " discrepancies; minimal failing structure: "
         << ledger[minimal].structure << " (" << ledger[minimal].reason << ")";
      gate.record(7, false, os.str());
      for (const LedgerItem& item : ledger)
        std::cout << "  " << item.structure << ": " << item.reason << "\n";
    }
  }

  return gate.all_pass ? 0 : 1;
}
