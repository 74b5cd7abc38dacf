// Command line front end: construct canonical pairs of symmetric matrices,
// print their miniversal deformation patterns, verify the patterns against
// tangent-space ranks, and project perturbations onto the deformation slice.
//
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sympencil/json_io.hpp"
#include "sympencil/slice.hpp"
#include "sympencil/sweep.hpp"

using namespace sympencil;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_bad_input = 2;

json read_json(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw input_error("cannot open " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

CanonicalStructure read_structure(const std::string& path) {
  return structure_from_json(read_json(path));
}

std::vector<GaussianRational> parse_lambdas(const std::string& text) {
  std::vector<GaussianRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw input_error("empty eigenvalue in --lambdas");
    out.push_back(GaussianRational::parse(item));
  }
  if (out.empty()) throw input_error("--lambdas needs at least one value");
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string describe_check(const MiniversalCheck& c) {
  std::ostringstream os;
  os << "pair dimension: " << c.pair_dim << "\n"
     << "tangent rank:   " << c.tangent_rank << "\n"
     << "codimension:    " << c.codim << "\n"
     << "pattern params: " << c.pattern_params << "\n"
     << "combined rank:  " << c.combined_rank << "\n"
     << "direct sum:     " << (c.spans ? "yes" : "no") << "\n";
  return os.str();
}

int cmd_canonical(const std::string& input, bool as_json) {
  CanonicalStructure s = read_structure(input);
  SymPair p = assemble(s);
  json j = sympair_to_json(p);
  j["structure"] = s.str();
  emit(j, as_json, "structure: " + s.str() + "\nA =\n" + p.a().str() + "B =\n" + p.b().str());
  return exit_ok;
}

int cmd_pattern(const std::string& input, bool as_json) {
  CanonicalStructure s = read_structure(input);
  PatternPair p = assemble_pattern(s);
  emit(pattern_to_json(p), as_json, "structure: " + s.str() + "\n" + render_pattern_text(p));
  return exit_ok;
}

int cmd_codim(const std::string& input, bool as_json) {
  CanonicalStructure s = read_structure(input);
  SymPair k = assemble(s);
  std::size_t dim = pair_dim(k.size());
  std::size_t rank = tangent_rank(k);
  json j{{"pair_dim", dim}, {"tangent_rank", rank}, {"codim", dim - rank}};
  std::ostringstream os;
  os << "structure:    " << s.str() << "\n"
     << "pair dim:     " << dim << "\n"
     << "tangent rank: " << rank << "\n"
     << "codimension:  " << dim - rank << "\n";
  emit(j, as_json, os.str());
  return exit_ok;
}

int cmd_verify(const std::string& input, bool as_json) {
  CanonicalStructure s = read_structure(input);
  StructureVerdict v = verify_structure(s, {}, true, true);
  json j = check_to_json(v.full);
  j["structure"] = s.str();
  j["greedy_params"] = v.greedy_params;
  j["ledger"] = json::array();
  for (const auto& f : v.failures) j["ledger"].push_back(f);
  j["ok"] = v.ok();

  std::ostringstream os;
  os << "structure: " << s.str() << "\n"
     << describe_check(v.full) << "greedy params:  " << v.greedy_params << "\n";
  if (v.ok()) {
    os << "verdict: pattern is miniversal (all checks pass)\n";
  } else {
    os << "verdict: FAILED\n";
    for (const auto& f : v.failures) os << "  " << f << "\n";
  }
  emit(j, as_json, os.str());
  return v.ok() ? exit_ok : exit_check_failed;
}

int cmd_construct(const std::string& input, bool as_json) {
  CanonicalStructure s = read_structure(input);
  SymPair k = assemble(s);
  PatternPair catalog = assemble_pattern(s);
  PatternPair greedy = greedy_minimal_pattern(k);
  MiniversalCheck chk = is_miniversal(k, catalog);
  bool counts_match = greedy.param_count() == catalog.param_count();

  json j{{"structure", s.str()},
         {"catalog", pattern_to_json(catalog)},
         {"greedy", pattern_to_json(greedy)},
         {"codim", chk.codim},
         {"counts_match", counts_match}};
  std::ostringstream os;
  os << "structure: " << s.str() << "\n"
     << "codimension: " << chk.codim << "\n\n"
     << "catalog pattern:\n" << render_pattern_text(catalog) << "\n"
     << "greedy pattern:\n" << render_pattern_text(greedy)
     << (counts_match ? "parameter counts match\n" : "PARAMETER COUNTS DIFFER\n");
  emit(j, as_json, os.str());
  return counts_match ? exit_ok : exit_check_failed;
}

int cmd_project(const std::string& input, const std::string& perturbation, std::size_t random_count,
                std::uint64_t seed, bool as_json) {
  CanonicalStructure s = read_structure(input);
  SymPair k = assemble(s);
  PatternPair p = assemble_pattern(s);
  SliceProjector proj(k, p);

  if (!perturbation.empty()) {
    SymPair e = sympair_from_json(read_json(perturbation));
    SliceProjection pr = proj.project(e);
    json j = projection_to_json(pr, p);
    std::ostringstream os;
    os << "structure: " << s.str() << "\n";
    for (const auto& [key, value] : pr.named_values(p))
      os << "  " << key.str() << " = " << value.str() << "\n";
    os << "reducer =\n" << pr.reducer.str()
       << "residual check: " << (pr.residual_check ? "exact" : "FAILED") << "\n";
    emit(j, as_json, os.str());
    return pr.residual_check ? exit_ok : exit_check_failed;
  }

  std::mt19937_64 rng(seed);
  std::size_t ok = 0;
  for (std::size_t t = 0; t < random_count; ++t) {
    SymPair e = random_symmetric_pair(k.size(), rng);
    SliceProjection pr = proj.project(e);
    if (pr.residual_check && project_idempotence_check(k, e, p)) ++ok;
  }
  json j{{"structure", s.str()},
         {"perturbations", random_count},
         {"passed", ok},
         {"seed", seed}};
  std::ostringstream os;
  os << "structure: " << s.str() << "\n"
     << ok << "/" << random_count << " random perturbations project exactly (seed " << seed
     << ")\n";
  emit(j, as_json, os.str());
  return ok == random_count ? exit_ok : exit_check_failed;
}

int cmd_sweep(const SweepOptions& opt, bool as_json) {
  SweepResult r = run_sweep(opt, true, true, as_json ? nullptr : &std::cout);
  json entries = json::array();
  for (const auto& e : r.ledger)
    entries.push_back(json{{"index", e.index},
                           {"structure", structure_to_json(e.structure)},
                           {"reason", e.reason}});
  json j{{"structures", r.structures},
         {"checks", r.checks},
         {"discrepancies", r.ledger.size()},
         {"ledger", std::move(entries)},
         {"ok", r.ok()}};
  std::ostringstream os;
  os << "structures checked: " << r.structures << "\n"
     << "individual checks:  " << r.checks << "\n"
     << "discrepancies:      " << r.ledger.size() << "\n";
  for (const auto& e : r.ledger)
    os << "  [" << e.index << "] " << e.structure.str() << ": " << e.reason << "\n";
  emit(j, as_json, os.str());
  return r.ok() ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"miniversal deformations of symmetric matrix pencils under congruence"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  std::string perturbation;
  std::size_t random_count = 0;
  std::uint64_t seed = 12345;
  SweepOptions sweep_opt;
  std::string lambdas_text;

  auto add_io = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", input, "structure JSON file ('-' for stdin)")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  add_io(app.add_subcommand("canonical", "print the canonical pair of a structure"), true);
  add_io(app.add_subcommand("pattern", "print the deformation pattern of a structure"), true);
  add_io(app.add_subcommand("codim", "print the orbit codimension of a structure"), true);
  add_io(app.add_subcommand("verify", "check the pattern against tangent-space ranks"), true);
  add_io(app.add_subcommand("construct", "compare the catalog pattern with the greedy one"), true);

  CLI::App* project =
      app.add_subcommand("project", "project a perturbation onto the deformation slice");
  add_io(project, true);
  project->add_option("--perturbation", perturbation, "perturbation pair JSON file");
  project->add_option("--random", random_count, "project this many seeded random perturbations");
  project->add_option("--seed", seed, "random seed");

  CLI::App* sweep = app.add_subcommand("sweep", "verify every structure within bounds");
  sweep->add_option("--max-block-n", sweep_opt.max_block_n, "largest H/K index (L up to n-1)");
  sweep->add_option("--max-blocks", sweep_opt.max_blocks, "largest number of summands");
  sweep->add_option("--max-total", sweep_opt.max_total, "largest total size");
  sweep->add_option("--lambdas", lambdas_text, "comma separated eigenvalue samples");
  sweep->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  bool as_json = format == "json";
  try {
    if (app.got_subcommand("canonical")) return cmd_canonical(input, as_json);
    if (app.got_subcommand("pattern")) return cmd_pattern(input, as_json);
    if (app.got_subcommand("codim")) return cmd_codim(input, as_json);
    if (app.got_subcommand("verify")) return cmd_verify(input, as_json);
    if (app.got_subcommand("construct")) return cmd_construct(input, as_json);
    if (app.got_subcommand("project")) {
      if (perturbation.empty() && random_count == 0)
        throw input_error("project needs --perturbation or --random");
      if (!perturbation.empty() && random_count > 0)
        throw input_error("--perturbation and --random are mutually exclusive");
      return cmd_project(input, perturbation, random_count, seed, as_json);
    }
    if (app.got_subcommand("sweep")) {
      if (!lambdas_text.empty()) sweep_opt.lambdas = parse_lambdas(lambdas_text);
      return cmd_sweep(sweep_opt, as_json);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_bad_input;
}
