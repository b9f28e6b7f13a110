#include "ramify/catalog.hpp"

#include "ramify/errors.hpp"

namespace ramify {

namespace {

const GroundField Q2{GroundKind::PAdic, 2};
const GroundField Q3{GroundKind::PAdic, 3};
const GroundField Q7{GroundKind::PAdic, 7};
const GroundField F2t{GroundKind::Laurent, 2};

ExtensionSpec make(std::string name, GroundField g, std::vector<StepSpec> steps, std::vector<long> gen = {}) {
  ExtensionSpec s;
  s.name = std::move(name);
  s.ground = g;
  s.steps = std::move(steps);
  for (long c : gen) s.generator.push_back(GroundElem::integer(c));
  return s;
}

using R = Rat;

std::vector<CatalogItem> make_catalog() {
  GroundElem t = GroundElem::laurent({0, 1});
  std::vector<CatalogItem> c;
  c.push_back({make("sqrt2", Q2, {StepSpec::eisenstein_ground({-2, 0})}), "x^2-2 over Q_2", {R(3, 2)}, R(3)});
  c.push_back({make("zeta8", Q2, {StepSpec::eisenstein_ground({2, 4, 6, 4})}, {1, 1}), "x^4+1 over Q_2", {R(1, 2), R(1, 2), R(1)}, R(3)});
  c.push_back({make("zeta4", Q2, {StepSpec::eisenstein_ground({2, 2})}, {1, 1}), "x^2+1 over Q_2", {R(1)}, R(2)});
  c.push_back({make("unram2", Q2, {StepSpec::unramified(2, {1, 1, 1})}), "x^2+x+1 over Q_2", {R(0)}, R(0)});
  c.push_back({make("tamecube_q2", Q2, {StepSpec::unramified(2, {1, 1, 1}), StepSpec::eisenstein_ground({-2, 0, 0})}),
               "x^3-2 over the unramified quadratic extension of Q_2", {R(0), R(0), R(0), R(1, 3), R(1, 3)}, R(1)});
  c.push_back({make("as2", F2t, {StepSpec::eisenstein({{t}, {t}})}), "x^2+tx+t over F_2((t))", {R(1)}, R(2)});
  c.push_back({make("zeta9", Q3, {StepSpec::eisenstein_ground({3, 9, 18, 21, 15, 6})}, {1, 1}), "x^6+x^3+1 over Q_3", {R(1, 6), R(1, 6), R(1, 6), R(1, 2), R(1, 2)}, R(2)});
  c.push_back({make("tamesq3", Q3, {StepSpec::eisenstein_ground({-3, 0})}), "x^2-3 over Q_3", {R(1, 2)}, R(1)});
  c.push_back({make("tame3_q7", Q7, {StepSpec::eisenstein_ground({-7, 0, 0})}), "x^3-7 over Q_7", {R(1, 3), R(1, 3)}, R(1)});
  c.push_back({make("mixed_q2", Q2, {StepSpec::unramified(2, {1, 1, 1}), StepSpec::eisenstein_ground({2, 2})}),
               "x^2+2x+2 over the unramified quadratic extension of Q_2", {R(0), R(0), R(1)}, R(2)});
  return c;
}

}  // namespace

const std::vector<CatalogItem>& builtin_catalog() {
  static const std::vector<CatalogItem> c = make_catalog();
  return c;
}

const ExtensionSpec& builtin_spec(const std::string& name) {
  for (const auto& item : builtin_catalog())
    if (item.spec.name == name) return item.spec;
  throw DomainError("unknown catalog entry: " + name);
}

}  // namespace ramify
