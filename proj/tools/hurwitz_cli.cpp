// Command-line surface. Exit codes: 0 success, 1 verification failure,
// 2 input error.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hurwitz/json_io.hpp"
#include "hurwitz/robust.hpp"
#include "hurwitz/scan.hpp"

using namespace hurwitz;

namespace {

Triple parse_triple(const std::string& s) {
  Triple t{};
  std::istringstream is(s);
  char comma;
  if (!(is >> t[0] >> comma >> t[1] >> comma >> t[2]))
    throw std::invalid_argument("seed must be r,s,t");
  return t;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

LabeledCovering covering_of_orbit(const HurwitzOrbit& o) {
  auto [g, q] = quotient(o);
  return derive_labels(o, g, q);
}

LabeledCovering load_covering_source(const std::string& path) {
  return covering_from_json(load_json_file(path));
}

void emit(const Json& j, const std::string& text, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search on braid group orbits of racks and their quotient coverings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string rack_src, seed_str, graph_src, covering_src, dot_out, set_str, name, frags_str;
  int nmax = 21, span_k = 0;
  std::vector<std::string> scan_sources_v;
  int groups_up_to = 0;

  // rack validate
  auto* rack_cmd = app.add_subcommand("rack", "rack table operations");
  auto* rack_validate = rack_cmd->add_subcommand("validate", "check the rack axioms");
  rack_validate->add_option("--rack", rack_src, "rack source (file or stock name)")->required();

  // orbit enumerate/decompose
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit enumeration");
  auto* orbit_enum = orbit_cmd->add_subcommand("enumerate", "orbit of a seed triple");
  orbit_enum->add_option("--rack", rack_src)->required();
  orbit_enum->add_option("--seed", seed_str, "seed triple r,s,t")->required();
  auto* orbit_dec = orbit_cmd->add_subcommand("decompose", "all orbits of the cube");
  orbit_dec->add_option("--rack", rack_src)->required();

  // quotient
  auto* quot_cmd = app.add_subcommand("quotient", "quotient graph of an orbit");
  quot_cmd->add_option("--rack", rack_src)->required();
  quot_cmd->add_option("--seed", seed_str)->required();

  // covering derive/enumerate/lift
  auto* cov_cmd = app.add_subcommand("covering", "labeled coverings");
  auto* cov_derive = cov_cmd->add_subcommand("derive", "labels of an orbit's quotient");
  cov_derive->add_option("--rack", rack_src)->required();
  cov_derive->add_option("--seed", seed_str)->required();
  auto* cov_enum = cov_cmd->add_subcommand("enumerate", "all admissible coverings of a graph");
  cov_enum->add_option("--graph", graph_src, "graph source (file or stock name)")->required();
  cov_enum->add_option("--nmax", nmax, "largest fiber size to try");
  auto* cov_lift = cov_cmd->add_subcommand("lift", "explicit space over a covering");
  cov_lift->add_option("--covering", covering_src)->required();

  // automaton closure
  auto* aut_cmd = app.add_subcommand("automaton", "cellular automaton runs");
  auto* aut_closure = aut_cmd->add_subcommand("closure", "closure of a subset");
  aut_closure->add_option("--covering", covering_src, "covering file (runs on its lift)");
  aut_closure->add_option("--rack", rack_src, "rack source (runs on an orbit)");
  aut_closure->add_option("--seed", seed_str, "orbit seed r,s,t");
  aut_closure->add_option("--set", set_str, "comma-separated point indices")->required();

  // metrics
  auto* met_cmd = app.add_subcommand("metrics", "plague, immunity, weight, conjecture");
  std::string met_what;
  met_cmd->add_option("what", met_what, "plague|immunity|weight|conjecture")->required();
  met_cmd->add_option("--covering", covering_src);
  met_cmd->add_option("--rack", rack_src);
  met_cmd->add_option("--seed", seed_str);

  // graph builtin/span/dot
  auto* graph_cmd = app.add_subcommand("graph", "stock and generated graphs");
  auto* graph_builtin = graph_cmd->add_subcommand("builtin", "stock graph");
  graph_builtin->add_option("--name", name, "G10_10|G10_532|G7_52")->required();
  graph_builtin->add_option("--dot", dot_out, "write DOT here");
  auto* graph_span = graph_cmd->add_subcommand("span", "chain with glued fragments");
  graph_span->add_option("--k", span_k)->required();
  graph_span->add_option("--fragments", frags_str, "comma list, e.g. F2,F2,F3")->required();
  graph_span->add_option("--dot", dot_out);
  auto* graph_dot = graph_cmd->add_subcommand("dot", "DOT export of a graph file");
  graph_dot->add_option("--graph", graph_src)->required();
  graph_dot->add_option("--dot", dot_out);

  // verify section5
  auto* verify_cmd = app.add_subcommand("verify", "family bound verification");
  auto* verify_s5 = verify_cmd->add_subcommand("section5", "plague and weight bounds per family");
  verify_s5->add_option("--covering", covering_src)->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "batch conjecture scan");
  scan_cmd->add_option("--rack", scan_sources_v, "rack sources (repeatable)");
  scan_cmd->add_option("--groups-up-to", groups_up_to, "all class quandles of groups up to this order");

  // let trailing parent flags (--json) be written after the subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*rack_validate) {
      Json j = rack_to_json(*resolve_rack_source(rack_src));
      std::vector<std::vector<int>> table;
      for (const auto& row : j["table"]) table.push_back(row.get<std::vector<int>>());
      RackCheck c = validate_rack(table);
      Json out{{"is_rack", c.is_rack}, {"is_quandle", c.is_quandle}, {"is_braided", c.is_braided}};
      if (c.witness) out["witness"] = *c.witness;
      std::ostringstream os;
      os << "rack: " << (c.is_rack ? "yes" : "no") << "  quandle: " << (c.is_quandle ? "yes" : "no")
         << "  braided: " << (c.is_braided ? "yes" : "no") << "\n";
      emit(out, os.str(), as_json);
      return c.is_rack ? 0 : 1;
    }

    if (*orbit_enum) {
      auto rack = resolve_rack_source(rack_src);
      HurwitzOrbit o = enumerate_orbit(rack, parse_triple(seed_str));
      std::ostringstream os;
      os << "orbit size " << o.size() << "\n";
      emit(orbit_to_json(o), os.str(), as_json);
      return 0;
    }
    if (*orbit_dec) {
      auto rack = resolve_rack_source(rack_src);
      auto orbits = decompose_cube(rack);
      Json arr = Json::array();
      std::ostringstream os;
      for (const auto& o : orbits) {
        arr.push_back(Json{{"seed", Json::array({o.points[0][0], o.points[0][1], o.points[0][2]})},
                           {"size", o.size()}});
        os << "orbit of (" << o.points[0][0] << "," << o.points[0][1] << "," << o.points[0][2]
           << "): size " << o.size() << "\n";
      }
      emit(Json{{"orbits", arr}}, os.str(), as_json);
      return 0;
    }

    if (*quot_cmd) {
      auto rack = resolve_rack_source(rack_src);
      HurwitzOrbit o = enumerate_orbit(rack, parse_triple(seed_str));
      auto [g, q] = quotient(o);
      Json out = graph_to_json(g);
      out["N"] = q.N;
      out["signature"] = signature(g);
      std::ostringstream os;
      os << "quotient " << signature(g) << " with fiber size " << q.N << "\n";
      emit(out, os.str(), as_json);
      return 0;
    }

    if (*cov_derive) {
      auto rack = resolve_rack_source(rack_src);
      HurwitzOrbit o = enumerate_orbit(rack, parse_triple(seed_str));
      LabeledCovering c = covering_of_orbit(o);
      std::ostringstream os;
      os << "covering of " << signature(c.g) << " with N=" << c.N << "\n";
      emit(covering_to_json(c), os.str(), as_json);
      return 0;
    }
    if (*cov_enum) {
      std::ostringstream os;
      Json arr = Json::array();
      if (graph_src == "G10_10" || graph_src == "G10_532" || graph_src == "G7_52") {
        GraphTemplate t = builtin_graph(graph_src);
        for (const auto& tc : enumerate_template_coverings(t, nmax)) {
          os << "N=" << tc.N << " labels=(" << tc.syms[0] << "," << tc.syms[1] << ","
             << tc.syms[2] << ")\n";
          Json j = covering_to_json(tc.covering);
          j["labels"] = tc.syms;
          arr.push_back(std::move(j));
        }
      } else {
        SchreierGraph g = resolve_graph_source(graph_src);
        for (const auto& c : enumerate_coverings(g, nmax)) {
          os << "N=" << c.N << "\n";
          arr.push_back(covering_to_json(c));
        }
      }
      if (arr.empty()) os << "no admissible covering up to N=" << nmax << "\n";
      emit(Json{{"coverings", arr}}, os.str(), as_json);
      return 0;
    }
    if (*cov_lift) {
      LabeledCovering c = load_covering_source(covering_src);
      LiftedSpace L = lift_covering(c);
      Json out{{"points", L.size()}, {"N", L.N}, {"sigma1", L.s1}, {"sigma2", L.s2}};
      std::ostringstream os;
      os << "lift has " << L.size() << " points\n";
      emit(out, os.str(), as_json);
      return 0;
    }

    if (*aut_closure) {
      AutomatonRule rule;
      if (!covering_src.empty()) {
        LiftedSpace L = lift_covering(load_covering_source(covering_src));
        rule = orbit_rule(L.s1, L.s2);
      } else if (!rack_src.empty() && !seed_str.empty()) {
        HurwitzOrbit o = enumerate_orbit(resolve_rack_source(rack_src), parse_triple(seed_str));
        rule = orbit_rule(o.s1, o.s2);
      } else {
        throw std::invalid_argument("need --covering or --rack with --seed");
      }
      SubsetState s = SubsetState::of(rule.n, parse_int_list(set_str));
      SubsetState cl = closure(rule, s);
      Json out{{"closure", cl.members()},
               {"size", cl.count()},
               {"hex", cl.hex()},
               {"is_plague", cl.is_full()}};
      std::ostringstream os;
      os << "closure has " << cl.count() << " of " << rule.n << " points"
         << (cl.is_full() ? " (plague)" : "") << "\n";
      emit(out, os.str(), as_json);
      return 0;
    }

    if (*met_cmd) {
      LabeledCovering cov;
      if (!covering_src.empty()) {
        cov = load_covering_source(covering_src);
      } else if (!rack_src.empty() && !seed_str.empty()) {
        HurwitzOrbit o = enumerate_orbit(resolve_rack_source(rack_src), parse_triple(seed_str));
        cov = covering_of_orbit(o);
      } else {
        throw std::invalid_argument("need --covering or --rack with --seed");
      }
      SearchOptions sopts;
      sopts.certify_cap = certify_cap_from_env();
      if (met_what == "weight") {
        WeightResult w = weight(cov, SignatureRegistry::builtin());
        Json out{{"weight", w.value.str()}};
        if (!w.notes.empty()) out["notes"] = w.notes;
        emit(out, w.value.str() + "\n", as_json);
        return 0;
      }
      ConjectureResult cr = check_conjecture(cov, SignatureRegistry::builtin(), sopts);
      if (met_what == "plague") {
        Json out{{"size", cr.plague.size},
                 {"certified", cr.plague.certified_minimal},
                 {"witness", cr.plague.witness.members()}};
        std::ostringstream os;
        os << (cr.plague.certified_minimal ? "minimal plague size " : "plague bound ")
           << cr.plague.size << "\n";
        emit(out, os.str(), as_json);
        return 0;
      }
      if (met_what == "immunity") {
        if (!cr.exact) throw std::runtime_error("immunity not certified at this size (set HURWITZ_SEARCH_CAP)");
        emit(Json{{"immunity", cr.immunity_value.str()}}, cr.immunity_value.str() + "\n", as_json);
        return 0;
      }
      if (met_what == "conjecture") {
        Json out{{"immunity", cr.immunity_value.str()},
                 {"exact", cr.exact},
                 {"weight", cr.omega.str()},
                 {"verdict", cr.verdict}};
        std::ostringstream os;
        os << "imm " << (cr.exact ? "= " : "<= ") << cr.immunity_value.str() << ", weight = "
           << cr.omega.str() << ": " << cr.verdict << "\n";
        emit(out, os.str(), as_json);
        return cr.verdict == "fails" ? 1 : 0;
      }
      throw std::invalid_argument("metrics verb must be plague|immunity|weight|conjecture");
    }

    if (*graph_builtin || *graph_span || *graph_dot) {
      SchreierGraph g;
      const std::vector<std::string>*xl = nullptr, *yl = nullptr;
      std::vector<std::string> xls, yls;
      if (*graph_builtin) {
        GraphTemplate t = builtin_graph(name);
        g = t.g;
        xls = t.x_label_strings();
        yls = t.y_label_strings();
        xl = &xls;
        yl = &yls;
      } else if (*graph_span) {
        std::vector<Fragment> frags;
        std::istringstream is(frags_str);
        std::string tok;
        while (std::getline(is, tok, ',')) frags.push_back(fragment_from_string(tok));
        g = span_graph(span_k, frags);
      } else {
        g = resolve_graph_source(graph_src);
      }
      std::string dot = export_dot(g, xl, yl);
      if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        if (!out) throw std::invalid_argument("cannot write " + dot_out);
        out << dot;
      }
      Json out = graph_to_json(g);
      out["signature"] = signature(g);
      std::ostringstream os;
      os << "graph " << signature(g) << " with " << g.n << " vertices";
      if (!dot_out.empty()) os << "; DOT written to " << dot_out;
      os << "\n";
      emit(out, os.str(), as_json);
      return 0;
    }

    if (*verify_s5) {
      LabeledCovering cov = load_covering_source(covering_src);
      VerifyReport rep = verify_family_bounds(cov);
      Json entries = Json::array();
      std::ostringstream os;
      os << "family: " << rep.family << "\n";
      for (const auto& e : rep.entries) {
        entries.push_back(Json{{"check", e.what}, {"pass", e.pass}, {"detail", e.detail}});
        os << (e.pass ? "  [pass] " : "  [FAIL] ") << e.what;
        if (!e.detail.empty()) os << " (" << e.detail << ")";
        os << "\n";
      }
      emit(Json{{"family", rep.family}, {"applicable", rep.applicable}, {"entries", entries},
                {"pass", rep.pass}},
           os.str(), as_json);
      return rep.pass && rep.applicable ? 0 : 1;
    }

    if (*scan_cmd) {
      RunReport rep;
      if (groups_up_to > 0)
        rep = scan_group_class_quandles(groups_up_to);
      else if (!scan_sources_v.empty())
        rep = scan_sources(scan_sources_v);
      else
        throw std::invalid_argument("need --rack or --groups-up-to");
      emit(rep.to_json(), rep.to_table(), as_json);
      return rep.failures == 0 && rep.errors.empty() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
