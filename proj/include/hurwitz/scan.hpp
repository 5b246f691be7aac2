// Batch verification: decompose racks into orbits and run the full pipeline
// (quotient, labels, plague search, immunity, weight, conjectured bound) on
// every orbit.
#pragma once

#include <string>
#include <vector>

#include "hurwitz/json_io.hpp"
#include "hurwitz/metrics.hpp"

namespace hurwitz {

inline constexpr const char* kToolVersion = "1.0.0";

struct SpaceReport {
  std::string space_id;
  int points = 0;
  int quotient_size = 0;
  int N = 1;
  std::string sig;
  int min_plague = 0;
  bool certified = false;
  std::vector<int> witness;
  std::string immunity;   // exact "p/q", or upper bound when not certified
  std::string weight;
  std::string conjecture;  // holds | inconclusive | fails
  std::vector<std::string> notes;
};

struct RunReport {
  std::string version = kToolVersion;
  std::vector<std::string> inputs;
  std::vector<SpaceReport> spaces;
  std::vector<std::string> errors;   // per-input parse failures; scan continues
  int failures = 0;                  // conjecture "fails" rows

  Json to_json() const;
  std::string to_table() const;
};

struct ScanOptions {
  int certify_cap = certify_cap_from_env();
  bool skip_size_one = false;
};

// Scan named rack sources (stock names or file paths).
RunReport scan_sources(const std::vector<std::string>& sources, const ScanOptions& opts = {});

// Every conjugacy-class quandle of every group of order <= max_order.
RunReport scan_group_class_quandles(int max_order, const ScanOptions& opts = {});

// One orbit end to end; space_id is a caller-chosen identifier.
SpaceReport report_orbit(const HurwitzOrbit& o, const std::string& space_id,
                         const ScanOptions& opts = {});

}  // namespace hurwitz
