#include "hurwitz/scan.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz {

Json RunReport::to_json() const {
  Json spaces_j = Json::array();
  for (const auto& s : spaces) {
    Json j{{"space", s.space_id},
           {"points", s.points},
           {"quotient", s.quotient_size},
           {"N", s.N},
           {"signature", s.sig},
           {"witness", s.witness},
           {"immunity", s.immunity},
           {"weight", s.weight},
           {"conjecture", s.conjecture}};
    if (s.certified)
      j["min_plague"] = s.min_plague;
    else
      j["min_plague"] = Json{{"bound", s.min_plague}};
    if (!s.notes.empty()) j["notes"] = s.notes;
    spaces_j.push_back(std::move(j));
  }
  Json j{{"version", version},
         {"inputs", inputs},
         {"spaces", std::move(spaces_j)},
         {"failures", failures}};
  if (!errors.empty()) j["errors"] = errors;
  return j;
}

std::string RunReport::to_table() const {
  size_t idw = 5;
  for (const auto& s : spaces) idw = std::max(idw, s.space_id.size());
  auto pad = [](const std::string& v, size_t w) {
    return v + std::string(v.size() < w ? w - v.size() : 1, ' ');
  };
  std::ostringstream os;
  os << pad("space", idw + 2) << pad("points", 8) << pad("quot", 6) << pad("N", 4)
     << pad("min_plague", 12) << pad("immunity", 10) << pad("weight", 9) << "verdict\n";
  for (const auto& s : spaces) {
    std::string mp = std::to_string(s.min_plague) + (s.certified ? "" : " (bound)");
    os << pad(s.space_id, idw + 2) << pad(std::to_string(s.points), 8)
       << pad(std::to_string(s.quotient_size), 6) << pad(std::to_string(s.N), 4)
       << pad(mp, 12) << pad(s.immunity, 10) << pad(s.weight, 9) << s.conjecture << "\n";
  }
  for (const auto& e : errors) os << "error: " << e << "\n";
  os << "conjecture failures: " << failures << "\n";
  return os.str();
}

SpaceReport report_orbit(const HurwitzOrbit& o, const std::string& space_id,
                         const ScanOptions& opts) {
  SpaceReport rep;
  rep.space_id = space_id;
  rep.points = o.size();

  auto [g, q] = quotient(o);
  QuotientMap qm = q;
  LabeledCovering cov = derive_labels(o, g, qm);
  rep.quotient_size = g.n;
  rep.N = qm.N;
  rep.sig = signature(g);

  SearchOptions sopts;
  sopts.certify_cap = opts.certify_cap;
  ConjectureResult cr = check_conjecture(cov, SignatureRegistry::builtin(), sopts);
  rep.min_plague = cr.plague.size;
  rep.certified = cr.plague.certified_minimal;
  rep.witness = cr.plague.witness.members();
  rep.immunity = cr.immunity_value.str();
  rep.weight = cr.omega.str();
  rep.conjecture = cr.verdict;
  rep.notes = cr.notes;

  // plague witnesses re-verify at report time
  LiftedSpace L = lift_covering(cov);
  AutomatonRule rule = orbit_rule(L.s1, L.s2);
  SubsetState w = cr.plague.witness;
  if (w.n == o.size()) {
    if (!is_plague(rule, w)) {
      rep.conjecture = "fails";
      rep.notes.push_back("reported witness does not re-verify");
    }
  }
  return rep;
}

namespace {

void scan_rack(RunReport& out, RackPtr rack, const std::string& label, const ScanOptions& opts) {
  auto orbits = decompose_cube(rack);
  int idx = 0;
  for (const auto& o : orbits) {
    ++idx;
    if (opts.skip_size_one && o.size() == 1) continue;
    std::ostringstream id;
    id << label << "/orbit" << idx << "(seed " << o.points[0][0] << "," << o.points[0][1] << ","
       << o.points[0][2] << ")";
    SpaceReport rep = report_orbit(o, id.str(), opts);
    if (rep.conjecture == "fails") out.failures++;
    out.spaces.push_back(std::move(rep));
  }
}

}  // namespace

RunReport scan_sources(const std::vector<std::string>& sources, const ScanOptions& opts) {
  RunReport out;
  out.inputs = sources;
  for (const auto& src : sources) {
    try {
      scan_rack(out, resolve_rack_source(src), src, opts);
    } catch (const std::exception& e) {
      out.errors.push_back(src + ": " + e.what());
    }
  }
  return out;
}

RunReport scan_group_class_quandles(int max_order, const ScanOptions& opts) {
  RunReport out;
  out.inputs = {"groups-up-to-" + std::to_string(max_order)};
  for (const auto& [name, group] : small_groups_up_to(max_order)) {
    auto classes = conjugacy_classes(group);
    int ci = 0;
    for (const auto& cls : classes) {
      ++ci;
      std::string label = name + "/class" + std::to_string(ci) + "(size " +
                          std::to_string(cls.size()) + ")";
      try {
        scan_rack(out, conjugation_quandle(group, cls), label, opts);
      } catch (const std::exception& e) {
        out.errors.push_back(label + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace hurwitz
