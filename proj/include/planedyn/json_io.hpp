#pragma once

// Wire formats shared by the CLI and fixtures. Keys are emitted in the
// documented order (ordered_json), so dump() output is byte-stable.

#include <string>

#include "json.hpp"

#include "planedyn/correspondence.hpp"
#include "planedyn/grid_tableaux.hpp"
#include "planedyn/k_promotion.hpp"
#include "planedyn/orbit_engine.hpp"
#include "planedyn/poset.hpp"

namespace planedyn {

using Json = nlohmann::ordered_json;

// Malformed documents (missing keys, wrong types, inconsistent shape).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"shape":[a,b],"q":Q,"rows":[[...],...]}
[[nodiscard]] Json to_json(const IncreasingTableau& t);
// Throws FormatError, or InvalidTableau if the filling is not increasing.
[[nodiscard]] IncreasingTableau tableau_from_json(const Json& j);

// {"box":[a,b,c],"heights":[[...],...]}
[[nodiscard]] Json to_json(const PlanePartition& pp);
[[nodiscard]] PlanePartition plane_partition_from_json(const Json& j);

// {"flow_path":[[[r,c],[r,c]],...],"stream_bed":[[r,c],...],
//  "stages":[{"value":v,"ribbons":[[[r,c],...],...]},...]}
[[nodiscard]] Json to_json(const PromotionTrace& trace);

// {"shape":[a,b],"q":Q,"total":N,"orbits":[{"size":k,"rep":{...}},...]}
[[nodiscard]] Json to_json(const OrbitDecomposition& d);
// "size,count" header then one line per orbit size, ascending.
[[nodiscard]] std::string histogram_csv(const OrbitDecomposition& d);

// {"box":[a,b,c],"states":N,"pass":bool,"counterexample":null|{...}}
[[nodiscard]] Json to_json(const EquivarianceReport& r);

// Reads JSON from a file path, or standard input for "-".
[[nodiscard]] Json read_json_file(const std::string& path);

}  // namespace planedyn
