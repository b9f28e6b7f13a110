#pragma once

#include <string>
#include <vector>

#include "ramify/galois.hpp"
#include "ramify/ramification.hpp"

namespace ramify {

// Upper filtration of a finite group, recorded by the upper index of each
// non-identity element.
struct UpperChain {
  int order = 1;
  std::vector<Rat> indices;  // ascending

  int order_at(const Rat& u) const;  // |G^(u)|
  std::vector<Rat> breaks() const;   // distinct indices
  ExtRat top() const;
  std::string str() const;
  friend bool operator==(const UpperChain&, const UpperChain&) = default;
};

UpperChain upper_chain(const GaloisData& gd, const Breaks& br);
// Image of the filtration in G/H, for normal H.
UpperChain induced_quotient_filtration(const GaloisData& gd, const Breaks& br, Mask h);
// Filtration of the fixed field computed from scratch on its own tower.
UpperChain direct_chain(const GaloisData& gd, const Subfield& m);

struct CompatRow {
  int member = 0;
  std::string label;
  UpperChain induced, direct;
  bool match = false;
};

struct CompositeRow {
  int a = 0, b = 0, ab = 0;
  ExtRat ua, ub, uab;
  bool ok = false;
};

struct CompatReport {
  std::vector<CompatRow> rows;
  std::vector<CompositeRow> composites;
  bool left_continuous = true;
  bool separated = true;
  bool pass() const;
};

CompatReport quotient_compatibility_check(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice);

// Direct u of each lattice member; -inf for K, empty entries for non-normal members.
std::vector<ExtRat> member_u(const CompatReport& rep, const std::vector<Subfield>& lattice);

struct TableRow {
  Rat m;
  int below = -1;     // lattice index of the composite of normal members with u < m
  int at_most = -1;   // same with u <= m
  int fixed = -1;     // L^{G^(m)}
  int fixed_plus = -1;  // L^{G^(m+)}
  bool ok = false;
};

struct FixedFieldTable {
  std::vector<TableRow> rows;
  bool pass() const;
};

int lattice_index(const std::vector<Subfield>& lattice, Mask h);

FixedFieldTable fixed_field_table(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                                  const std::vector<ExtRat>& u, const std::vector<Rat>& grid);

struct FiltrationProps {
  bool above_top_trivial = true;  // G^(m) = 1 for m > u
  bool low_is_inertia = true;     // G^(m) = I for 0 < m <= 1
  bool unramified_zero = true;    // unramified members have u = 0, ramified u >= 1
  bool base_change = true;        // for unramified M: filtration of Gal(L/M) is the intersection
  int base_change_members = 0;
  bool pass() const { return above_top_trivial && low_is_inertia && unramified_zero && base_change; }
};

FiltrationProps filtration_props(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                         const std::vector<ExtRat>& u);

}  // namespace ramify
