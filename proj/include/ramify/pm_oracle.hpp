#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramify/galois.hpp"
#include "ramify/ramification.hpp"

namespace ramify {

struct CatalogOptions {
  int tame_max = 4;   // largest twist index e'
  int grid_den = 4;   // denominator bound for m grids and perturbation levels
  int cap = 64;       // catalog size limit
  std::uint64_t brute_limit = 100000;
};

struct TestField {
  std::string label;
  std::string kind;  // base | subfield | tame | perturb
  FieldPtr E;
  int twist = 1;
  Rat level;  // perturbation level m_c (perturb only)
  bool embeds = false;
  std::uint64_t root_search_nodes = 0;
};

std::vector<TestField> test_catalog(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice,
                                    const CatalogOptions& opt);

// Least j with j/e_E >= m.
long cut_index(const Rat& m, int e);

struct MaxVp {
  bool embeds = false;
  ValResult value;  // max over O_E of v(P(beta)); meaningless when embeds
  TowerElem witness;
  std::vector<std::uint64_t> digits;  // residue indices of the witness, pi_E-adic
  std::uint64_t nodes = 0;
};

// Digit search pruned by the disc structure of the roots.
MaxVp max_vp_smart(const GaloisData& gd, const Breaks& br, const FieldPtr& E);
// Plain enumeration of classes deep enough to separate the roots.
MaxVp max_vp_brute(const GaloisData& gd, const Breaks& br, const FieldPtr& E, std::uint64_t limit);

struct WitnessSet {
  mpz_class count;    // classes beta mod a^m with v(P(beta)) >= m
  mpz_class scanned;  // all classes mod a^m
  std::vector<TowerElem> beta;
  std::vector<std::vector<std::uint64_t>> digits;
};

enum class EnumMode { Brute, Smart };
// Brute mode refuses enumerations above 10^7 classes.
WitnessSet hom_witnesses(const GaloisData& gd, const Breaks& br, const FieldPtr& E, const Rat& m, std::size_t cap,
                         EnumMode mode);

enum class VerdictKind { TrueByExhaustion, TrueByBound, Counterexample };

struct PmVerdict {
  VerdictKind kind = VerdictKind::TrueByExhaustion;
  bool embedding = false;
  mpz_class scanned;
  TowerElem witness;
  std::string witness_digits;
  ValResult vp;
  std::uint64_t proof_nodes = 0;  // root search nodes showing P has no root in E
  std::string str() const;
};

PmVerdict pm_verdict(const GaloisData& gd, const Breaks& br, const TestField& tf, const Rat& m, bool allow_bound);

// Rationals a/b with b <= den in (0, hi].
std::vector<Rat> m_grid(const Rat& hi, int den);

struct FieldScan {
  std::string label;
  std::string kind;
  int twist = 1;
  bool embeds = false;
  ValResult max_vp;
  std::string witness_digits;
  std::uint64_t nodes = 0;
  int brute_checks = 0;
};

struct ScanRow {
  Rat m;
  int counterexamples = 0;
  std::string first_field;
  std::string witness;
};

struct WindowCheck {
  bool vacuous = false;
  Rat lo, hi;
  int e_window = 1;
  bool in_window = false;
  Rat crude_bound;
  bool crude_ok = false;
  bool pass() const { return vacuous || (in_window && crude_ok); }
};

struct PmScan {
  std::vector<FieldScan> fields;
  std::vector<ScanRow> rows;
  ExtRat lower_bound;
  bool tame = false;
  bool counterexample_at_u = false;  // reported only
  bool sound = true;                 // max_vp <= u on every non-embedding field
  bool smart_brute_agree = true;
  int brute_checks = 0;
  Rat best_perturb;  // largest m with a counterexample from a perturbed field (0 if none)
  int best_perturb_twist = 0;
  WindowCheck window;
};

PmScan pm_scan(const GaloisData& gd, const Breaks& br, const std::vector<Subfield>& lattice, const CatalogOptions& opt);

WindowCheck pm_window_check(const GaloisData& gd, const Breaks& br, const ExtRat& lower, bool tame,
                                  int e_window);

}  // namespace ramify
