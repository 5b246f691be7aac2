#include "hurwitz/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "hurwitz/robust.hpp"

namespace hurwitz {

namespace {

std::vector<int> int_array(const Json& j, const std::string& key, int expected = -1) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument("json: missing array field '" + key + "'");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw std::invalid_argument("json: '" + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw std::invalid_argument("json: '" + key + "' has wrong length");
  return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument("json: missing matrix field '" + key + "'");
  std::vector<std::vector<int>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw std::invalid_argument("json: '" + key + "' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json rack_to_json(const Rack& r) {
  Json t = Json::array();
  for (int i = 0; i < r.size(); ++i) {
    Json row = Json::array();
    for (int s = 0; s < r.size(); ++s) row.push_back(r.op(i, s));
    t.push_back(std::move(row));
  }
  return Json{{"n", r.size()}, {"table", std::move(t)}};
}

RackPtr rack_from_json(const Json& j) {
  if (j.contains("mult")) {
    Group g = group_from_table(int_matrix(j, "mult"));
    return conjugation_quandle(g, int_array(j, "class"));
  }
  auto table = int_matrix(j, "table");
  if (j.contains("n") && j["n"].get<int>() != static_cast<int>(table.size()))
    throw std::invalid_argument("json rack: n does not match table size");
  return make_rack(table);
}

Json graph_to_json(const SchreierGraph& g) {
  Json j{{"n", g.n}, {"x", g.x}, {"y", g.y}};
  if (g.has_point())
    j["v0"] = g.v0;
  else
    j["v0"] = nullptr;
  return j;
}

SchreierGraph graph_from_json(const Json& j) {
  SchreierGraph g;
  g.n = j.at("n").get<int>();
  g.x = int_array(j, "x", g.n);
  g.y = int_array(j, "y", g.n);
  g.v0 = j.contains("v0") && !j["v0"].is_null() ? j["v0"].get<int>() : -1;
  validate_graph(g);
  return g;
}

Json covering_to_json(const LabeledCovering& c) {
  Json j = graph_to_json(c.g);
  j["N"] = c.N;
  j["x_labels"] = c.x_label;
  j["y_labels"] = c.y_label;
  return j;
}

LabeledCovering covering_from_json(const Json& j) {
  LabeledCovering c;
  c.g = graph_from_json(j);
  c.N = j.at("N").get<int>();
  c.x_label = int_array(j, "x_labels", c.g.n);
  c.y_label = int_array(j, "y_labels", c.g.n);
  validate_covering(c);
  return c;
}

Json orbit_to_json(const HurwitzOrbit& o) {
  Json pts = Json::array();
  for (const Triple& t : o.points) pts.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"rack_n", o.rack->size()},
              {"points", std::move(pts)},
              {"sigma1", o.s1},
              {"sigma2", o.s2},
              {"base", o.base}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

RackPtr resolve_rack_source(const std::string& source) {
  if (source == "S3-transpositions") return s3_transposition_quandle();
  if (source == "S4-transpositions") {
    Group s4 = symmetric_group(4);
    for (const auto& cls : conjugacy_classes(s4))
      if (cls.size() == 6) return conjugation_quandle(s4, cls);
  }
  if (source.rfind("dihedral-", 0) == 0)
    return dihedral_quandle(std::stoi(source.substr(9)));
  if (source.rfind("trivial-", 0) == 0)
    return trivial_rack(std::stoi(source.substr(8)));
  return rack_from_json(load_json_file(source));
}

SchreierGraph resolve_graph_source(const std::string& source) {
  if (source == "G10_10" || source == "G10_532" || source == "G7_52")
    return builtin_graph(source).g;
  return graph_from_json(load_json_file(source));
}

}  // namespace hurwitz
