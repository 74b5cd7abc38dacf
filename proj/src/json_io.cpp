#include "sympencil/json_io.hpp"

namespace sympencil {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t require_size(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned()) throw input_error(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

json structure_to_json(const CanonicalStructure& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks) {
    json jb;
    jb["kind"] = b.kind == BlockKind::H ? "H" : b.kind == BlockKind::K ? "K" : "L";
    jb["n"] = b.n;
    if (b.lambda) jb["lambda"] = b.lambda->str();
    blocks.push_back(std::move(jb));
  }
  return json{{"blocks", std::move(blocks)}};
}

CanonicalStructure structure_from_json(const json& j) {
  if (!j.is_object()) throw input_error("structure must be a JSON object");
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array()) throw input_error("\"blocks\" must be an array");
  CanonicalStructure s;
  for (const json& jb : blocks) {
    if (!jb.is_object()) throw input_error("block must be a JSON object");
    const json& kind = require(jb, "kind");
    if (!kind.is_string()) throw input_error("\"kind\" must be a string");
    std::string k = kind.get<std::string>();
    std::size_t n = require_size(jb, "n");
    bool has_lambda = jb.contains("lambda");
    if (k == "H") {
      if (!has_lambda) throw input_error("H block needs \"lambda\"");
      const json& lam = jb["lambda"];
      if (!lam.is_string()) throw input_error("\"lambda\" must be a string literal");
      s.blocks.push_back(BlockSpec::h(n, GaussianRational::parse(lam.get<std::string>())));
    } else if (k == "K" || k == "L") {
      if (has_lambda) throw input_error(k + " block cannot carry \"lambda\"");
      s.blocks.push_back(k == "K" ? BlockSpec::k(n) : BlockSpec::l(n));
    } else {
      throw input_error("unknown block kind \"" + k + "\"");
    }
  }
  return s;
}

namespace {

json mask_to_json(const StarMask& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.test(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

StarMask mask_from_json(const json& j, const char* key) {
  if (!j.is_array()) throw input_error(std::string("\"") + key + "\" must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  StarMask m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) throw input_error("ragged mask rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) throw input_error("mask entries must be 0 or 1");
      auto v = row[c].get<long>();
      if (v != 0 && v != 1) throw input_error("mask entries must be 0 or 1");
      if (v == 1) m.set(i, c);
    }
  }
  return m;
}

}  // namespace

json pattern_to_json(const PatternPair& p) {
  return json{{"maskA", mask_to_json(p.mask_a())},
              {"maskB", mask_to_json(p.mask_b())},
              {"params", p.param_count()}};
}

PatternPair pattern_from_json(const json& j) {
  if (!j.is_object()) throw input_error("pattern must be a JSON object");
  PatternPair p(mask_from_json(require(j, "maskA"), "maskA"),
                mask_from_json(require(j, "maskB"), "maskB"));
  if (j.contains("params")) {
    std::size_t declared = require_size(j, "params");
    if (declared != p.param_count())
      throw input_error("declared parameter count " + std::to_string(declared) +
                        " does not match the masks (" + std::to_string(p.param_count()) + ")");
  }
  return p;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw input_error("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) throw input_error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw input_error("matrix entries must be scalar strings");
      m(i, c) = GaussianRational::parse(row[c].get<std::string>());
    }
  }
  return m;
}

json sympair_to_json(const SymPair& p) {
  return json{{"a", matrix_to_json(p.a())}, {"b", matrix_to_json(p.b())}};
}

SymPair sympair_from_json(const json& j) {
  if (!j.is_object()) throw input_error("pair must be a JSON object");
  return {matrix_from_json(require(j, "a")), matrix_from_json(require(j, "b"))};
}

json check_to_json(const MiniversalCheck& c) {
  return json{{"ok", c.ok},
              {"direct_sum", c.spans},
              {"pair_dim", c.pair_dim},
              {"tangent_rank", c.tangent_rank},
              {"codim", c.codim},
              {"pattern_params", c.pattern_params},
              {"combined_rank", c.combined_rank}};
}

json projection_to_json(const SliceProjection& pr, const PatternPair& p) {
  json d = json::object();
  for (const auto& [key, value] : pr.named_values(p)) d[key.str()] = value.str();
  return json{{"d_values", std::move(d)},
              {"reducer", matrix_to_json(pr.reducer)},
              {"residual_check", pr.residual_check}};
}

}  // namespace sympencil
