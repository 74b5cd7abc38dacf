#ifndef SYMPENCIL_JSON_IO_HPP
#define SYMPENCIL_JSON_IO_HPP

#include <json.hpp>

#include "sympencil/canonical.hpp"
#include "sympencil/pattern.hpp"
#include "sympencil/slice.hpp"
#include "sympencil/sweep.hpp"
#include "sympencil/tangent.hpp"

namespace sympencil {

// {"blocks": [{"kind": "H", "n": 2, "lambda": "1/2"}, {"kind": "K", "n": 1}]}
nlohmann::json structure_to_json(const CanonicalStructure& s);
CanonicalStructure structure_from_json(const nlohmann::json& j);

// {"maskA": [[0,1],[1,0]], "maskB": ..., "params": N}
nlohmann::json pattern_to_json(const PatternPair& p);
PatternPair pattern_from_json(const nlohmann::json& j);

// {"a": [["0","1"],["1","0"]], "b": ...} with scalar text entries
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json sympair_to_json(const SymPair& p);
SymPair sympair_from_json(const nlohmann::json& j);

nlohmann::json check_to_json(const MiniversalCheck& c);
nlohmann::json projection_to_json(const SliceProjection& pr, const PatternPair& p);

}  // namespace sympencil

#endif
