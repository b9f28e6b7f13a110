#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramify/filtration.hpp"
#include "ramify/galois.hpp"
#include "ramify/pm_oracle.hpp"
#include "ramify/ramification.hpp"

namespace ramify {

struct AnalyzeOptions {
  int precision = 32;
  int max_precision = 512;
  bool oracle = true;
  bool filtration = true;
  CatalogOptions catalog;
  int identity_samples = 200;
  std::vector<Rat> table_grid{Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(7, 2)};
};

struct DiscRow {
  Rat m;
  Rat radius;
  int components = 0;
  bool qpp = false;
  bool q = false;
  int samples = 0;
  bool membership = true;
};

struct IdentityStats {
  int samples = 0;
  int certified = 0;
  int holds = 0;
  bool pass(int need) const { return certified >= need && holds == certified; }
};

struct Analysis {
  ExtensionSpec spec;
  int precision = 0;
  bool galois = false;
  int roots_found = 0;
  std::optional<GaloisData> gd;
  std::vector<Rat> profile_np, profile_roots;
  Breaks br;
  ExtRat conductor;
  ValResult v_derivative;
  std::vector<Subfield> lattice;
  std::vector<DiscRow> disc;
  IdentityStats identity_base, identity_ext;
  std::optional<PmScan> pm;
  std::optional<CompatReport> compat;
  std::optional<FixedFieldTable> table;
  std::optional<FiltrationProps> props;
  std::vector<ExtRat> member_u;
  std::map<std::string, bool> checks;  // asserted identities
  std::vector<std::string> failures;
  std::map<std::string, double> timing_ms;

  bool ok() const { return failures.empty(); }
};

// Runs the full pipeline, doubling the precision on InsufficientPrecision.
// NotGalois is reported through `galois`, not thrown.
Analysis analyze(const ExtensionSpec& spec, const AnalyzeOptions& opt);

}  // namespace ramify
