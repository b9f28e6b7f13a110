#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramify/linalg.hpp"
#include "ramify/poly.hpp"
#include "ramify/tower.hpp"

namespace ramify {

struct ExtensionSpec {
  std::string name;
  GroundField ground;
  std::vector<StepSpec> steps;
  std::vector<GroundElem> generator;  // exact flat coordinates; empty selects a default
};

struct Extension {
  ExtensionSpec spec;
  FieldPtr L;
  FieldPtr K;
  TowerElem alpha;
  Poly minpoly;  // over K, monic of degree [L:K]
  std::string generator_kind;
  int degree() const { return L->degree(); }
};

// Certifies O_L = O_K[alpha] through a unimodular power basis.
Extension build_extension(const ExtensionSpec& spec, int precision);

struct RootSearchStats {
  std::uint64_t nodes = 0;
};

// All roots of P lying in F, in canonical digit order. Each root carries
// the precision to which it was certified.
std::vector<TowerElem> find_roots(const Poly& P, const FieldPtr& F, RootSearchStats* stats = nullptr);

// Nonzero root valuations of P(x + alpha), ascending.
std::vector<Rat> conjugate_profile(const Extension& ext);

// Expresses elements of O_L as polynomials in alpha.
class PowerBasis {
 public:
  PowerBasis(const FieldPtr& L, const TowerElem& gen, int count);
  bool saturated() const { return solver_.saturated(); }
  std::vector<GroundElem> coefficients(const TowerElem& y, bool* in_span = nullptr) const;
  TowerElem evaluate(const std::vector<GroundElem>& g, const std::vector<TowerElem>& powers) const;
  const std::vector<TowerElem>& powers() const { return powers_; }

 private:
  static GMatrix matrix(const std::vector<TowerElem>& powers);
  FieldPtr L_;
  std::vector<TowerElem> powers_;
  SaturatedSolver solver_;
};

using Mask = std::uint32_t;

struct GaloisGroup {
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = index of sigma_a o sigma_b

  int compose(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  Mask closure(Mask m) const;
  bool is_normal(Mask h) const;
  std::vector<Mask> subgroups() const;
  Mask full() const { return order >= 32 ? ~Mask(0) : (Mask(1) << order) - 1; }
};

int popcount(Mask m);

struct GaloisData {
  Extension ext;
  std::vector<TowerElem> roots;  // roots[a] = sigma_a(alpha)
  GaloisGroup group;
  std::vector<std::vector<Rat>> pairwise;  // v(z_a - z_b), a != b
  std::vector<Rat> order_fn;               // i(sigma_a); unused at the identity
  Rat i_max;                               // -1 when L = K
  std::shared_ptr<PowerBasis> basis;
  std::vector<std::vector<TowerElem>> root_powers;

  int degree() const { return group.order; }
  TowerElem apply(int a, const TowerElem& y) const;
  TowerElem norm(Mask h, const TowerElem& y) const;
  TowerElem trace(Mask h, const TowerElem& y) const;
  // Index of the root strictly closer to x than the root separation, or -1.
  int match_root(const TowerElem& x) const;
  Mask inertia() const;
};

// Throws NotGalois when P has fewer than [L:K] roots in L.
GaloisData galois_data(const Extension& ext);

struct Subfield {
  Mask subgroup = 0;
  int order = 0;   // |H|
  int degree = 0;  // [M:K]
  bool normal = false;
  int e = 1, f = 1;
  TowerElem gamma;  // generator of O_M inside L
  Poly minpoly;     // of gamma over K
  std::vector<StepSpec> tower;  // standalone tower for M over K
  std::string label;
};

std::vector<Subfield> subextension_lattice(const GaloisData& gd);
Subfield fixed_field(const GaloisData& gd, Mask h);

}  // namespace ramify
