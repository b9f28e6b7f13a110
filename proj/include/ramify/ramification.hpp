#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramify/galois.hpp"
#include "ramify/pl_function.hpp"

namespace ramify {

// A rational or -inf (the greatest break of the trivial extension).
struct ExtRat {
  bool neg_inf = true;
  Rat value;
  static ExtRat of(Rat v) { return {false, std::move(v)}; }
  static ExtRat minus_infinity() { return {}; }
  std::string str() const { return neg_inf ? "-inf" : value.str(); }
  friend bool operator==(const ExtRat&, const ExtRat&) = default;
};

struct Breaks {
  bool trivial = true;
  ExtRat i_max, u_max;
  std::vector<Rat> lower;  // the profile, ascending
  std::vector<Rat> upper;  // f applied entrywise
  PLFunction f = PLFunction::identity();
  PLFunction p_inv = PLFunction::identity();
};

// Herbrand function f(u) = integral of #G_(t) from 0 to u.
PLFunction herbrand(const std::vector<Rat>& profile);
Breaks breaks(const std::vector<Rat>& profile);

// Profile read off from the roots: i(sigma) over sigma != 1, ascending.
std::vector<Rat> root_profile(const GaloisData& gd);

struct DiscCover {
  Rat radius;
  std::vector<int> component;  // component id per root
  int components = 0;
  bool separates = false;  // every disc holds exactly one root
};

DiscCover disc_cover(const std::vector<std::vector<Rat>>& pairwise, const Breaks& br, const Rat& m);

struct QSample {
  bool holds = true;
  int samples = 0;
  bool membership_ok = true;  // every sample satisfied v(P(x)) >= m
};

// Direct check of Q_m at boundary points x = z_i + y with v(y) = p(m).
QSample sampled_q(const GaloisData& gd, const Breaks& br, const Rat& m);

// Infimum of m at which the discs separate the roots, searched on the disc side.
ExtRat conductor(const std::vector<std::vector<Rat>>& pairwise, const Breaks& br);

struct IdentityCheck {
  ValResult lhs;  // v(P(beta))
  Rat nearest;    // max_i v(z_i - beta)
  Rat rhs;        // f(nearest)
  bool certified = false;
  bool holds = false;
};

IdentityCheck distance_identity_check(const GaloisData& gd, const Breaks& br, const TowerElem& beta);

// Root z with v(x - z) larger than z's separation from the other roots, or -1.
int krasner_check(const GaloisData& gd, const TowerElem& x);

// Classical numbering: lower index e*i - 1, upper index u - 1.
Rat serre_lower(const Rat& i, int e);
Rat serre_upper(const Rat& u);

// u(sigma_a) = f(i(sigma_a)); nullopt at the identity.
std::optional<Rat> upper_index(const GaloisData& gd, const Breaks& br, int a);
Mask upper_group(const GaloisData& gd, const Breaks& br, const Rat& u);
Mask lower_group(const GaloisData& gd, const Rat& i);

}  // namespace ramify
