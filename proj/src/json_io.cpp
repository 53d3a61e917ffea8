#include "planedyn/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace planedyn {

namespace {

Json box_json(Box b) { return Json::array({b.row, b.col}); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) throw FormatError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Grid as_grid(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of rows");
  Grid g;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string(what) + " rows must be arrays");
    auto& out = g.emplace_back();
    for (const auto& x : row) out.push_back(as_int(x, what));
  }
  return g;
}

}  // namespace

Json to_json(const IncreasingTableau& t) {
  Json j;
  j["shape"] = Json::array({t.shape().rows, t.shape().cols});
  j["q"] = t.ceiling();
  j["rows"] = t.rows();
  return j;
}

IncreasingTableau tableau_from_json(const Json& j) {
  const auto& shape = field(j, "shape");
  if (!shape.is_array() || shape.size() != 2) throw FormatError("shape must be [a,b]");
  const int a = as_int(shape[0], "shape");
  const int b = as_int(shape[1], "shape");
  const int q = as_int(field(j, "q"), "q");
  if (a < 1 || b < 1) throw FormatError("shape dimensions must be positive");
  const Grid rows = as_grid(field(j, "rows"), "rows");
  if (rows.size() != static_cast<std::size_t>(a)) throw FormatError("row count does not match shape");
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(b)) throw FormatError("row length does not match shape");
  }
  return IncreasingTableau::from_rows(rows, q);
}

Json to_json(const PlanePartition& pp) {
  Json j;
  j["box"] = Json::array({pp.dims().a, pp.dims().b, pp.dims().c});
  j["heights"] = pp.rows();
  return j;
}

PlanePartition plane_partition_from_json(const Json& j) {
  const auto& box = field(j, "box");
  if (!box.is_array() || box.size() != 3) throw FormatError("box must be [a,b,c]");
  const BoxDims dims{as_int(box[0], "box"), as_int(box[1], "box"), as_int(box[2], "box")};
  if (dims.a < 1 || dims.b < 1 || dims.c < 0) throw FormatError("box needs a, b >= 1 and c >= 0");
  return PlanePartition::from_rows(dims, as_grid(field(j, "heights"), "heights"));
}

Json to_json(const PromotionTrace& trace) {
  Json j;
  Json flow = Json::array();
  for (const auto& [x, y] : trace.flow_path) flow.push_back(Json::array({box_json(x), box_json(y)}));
  Json bed = Json::array();
  for (Box b : trace.stream_bed) bed.push_back(box_json(b));
  Json stages = Json::array();
  for (const auto& stage : trace.stages) {
    Json ribbons = Json::array();
    for (const auto& r : stage.ribbons) {
      Json boxes = Json::array();
      for (Box b : r.boxes) boxes.push_back(box_json(b));
      ribbons.push_back(std::move(boxes));
    }
    Json s;
    s["value"] = stage.value;
    s["ribbons"] = std::move(ribbons);
    stages.push_back(std::move(s));
  }
  j["flow_path"] = std::move(flow);
  j["stream_bed"] = std::move(bed);
  j["stages"] = std::move(stages);
  return j;
}

Json to_json(const OrbitDecomposition& d) {
  Json j;
  j["shape"] = Json::array({d.shape.rows, d.shape.cols});
  j["q"] = d.q;
  j["total"] = d.total_states;
  Json orbits = Json::array();
  for (const auto& o : d.orbits) {
    Json e;
    e["size"] = o.size;
    e["rep"] = to_json(o.representative);
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

std::string histogram_csv(const OrbitDecomposition& d) {
  std::ostringstream out;
  out << "size,count\n";
  for (const auto& [size, count] : d.size_histogram()) out << size << ',' << count << '\n';
  return out.str();
}

Json to_json(const EquivarianceReport& r) {
  Json j;
  j["box"] = Json::array({r.box.a, r.box.b, r.box.c});
  j["states"] = r.states;
  j["pass"] = r.pass;
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  return j;
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace planedyn
