#include "ramify/spec_io.hpp"

#include <cctype>
#include <cstdio>

#include "ramify/catalog.hpp"
#include "ramify/errors.hpp"

namespace ramify {

using nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) { throw SchemaError(msg + " at " + ptr, ptr); }

const json& need(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object() || !obj.contains(key)) fail(ptr + "/" + key, "missing field");
  return obj.at(key);
}

long need_int(const json& v, const std::string& ptr, long lo, long hi) {
  if (!v.is_number_integer()) fail(ptr, "expected an integer");
  long x = v.get<long>();
  if (x < lo || x > hi) fail(ptr, "integer out of range");
  return x;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroundElem literal_at(const GroundField& g, const json& v, const std::string& ptr) {
  try {
    if (v.is_number_integer()) return parse_literal(g, std::to_string(v.get<long>()));
    if (v.is_string()) return parse_literal(g, v.get<std::string>());
  } catch (const DomainError& e) {
    fail(ptr, e.what());
  }
  fail(ptr, "expected a coefficient literal");
}

Coords coords_at(const GroundField& g, const json& v, int dim, const std::string& ptr) {
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != dim) fail(ptr, "expected " + std::to_string(dim) + " coordinates");
    Coords c;
    for (std::size_t k = 0; k < v.size(); ++k) c.push_back(literal_at(g, v[k], ptr + "/" + std::to_string(k)));
    return c;
  }
  Coords c(dim);
  c[0] = literal_at(g, v, ptr);
  for (int k = 1; k < dim; ++k) c[k] = GroundElem::integer(0);
  return c;
}

bool is_one(const GroundField& g, const Coords& c) {
  GroundRing R(g, 8);
  if (!R.equal(R.reduce(c[0]), R.one())) return false;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (!R.is_zero(R.reduce(c[k]))) return false;
  return true;
}

std::string rs(const Rat& r) { return r.str(); }
std::string es(const ExtRat& r) { return r.str(); }

ordered_json rat_list(const std::vector<Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(rs(r));
  return a;
}

std::string mask_str(Mask m, int n) {
  std::string s;
  for (int a = 0; a < n; ++a)
    if (m >> a & 1) s += (s.empty() ? "" : ",") + std::to_string(a);
  return "{" + s + "}";
}

}  // namespace

GroundElem parse_literal(const GroundField& g, const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty literal");
  if (g.kind == GroundKind::PAdic) {
    mpz_class z;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    if (body.empty() || z.set_str(body, 10) != 0) throw DomainError("not an integer literal: " + raw);
    return GroundElem::from_mpz(z);
  }
  std::vector<std::uint32_t> t;
  const long p = g.p;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coef = (coef * 10 + (s[i++] - '0')) % p;
      have_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    long deg = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw DomainError("bad exponent in " + raw);
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) deg = deg * 10 + (s[i++] - '0');
        if (deg > 4096) throw DomainError("exponent too large in " + raw);
      }
    } else if (!have_coef) {
      throw DomainError("not a polynomial in t: " + raw);
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw DomainError("not a polynomial in t: " + raw);
    if (static_cast<long>(t.size()) <= deg) t.resize(deg + 1, 0);
    long c = ((sign * coef) % p + p) % p;
    t[deg] = static_cast<std::uint32_t>((t[deg] + c) % p);
  }
  while (!t.empty() && t.back() == 0) t.pop_back();
  return GroundElem::laurent(t);
}

std::string literal_str(const GroundField& g, const GroundElem& x) {
  if (g.kind == GroundKind::PAdic) return x.z.get_str();
  if (x.t.empty()) return mpz_class(x.z % g.p).get_str();
  GroundRing R(g, static_cast<int>(x.t.size()) + 1);
  return R.str(x);
}

SpecFile parse_spec(const std::string& text, const std::string& fallback_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("", "expected an object");
  SpecFile sf;
  if (j.contains("schema") && j["schema"] != kSpecSchema) fail("/schema", "unsupported schema");
  sf.spec.name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    sf.spec.name = j["name"].get<std::string>();
  }
  const json& base = need(j, "base", "");
  const json& kind = need(base, "kind", "/base");
  if (kind == "padic")
    sf.spec.ground.kind = GroundKind::PAdic;
  else if (kind == "laurent")
    sf.spec.ground.kind = GroundKind::Laurent;
  else
    fail("/base/kind", "expected \"padic\" or \"laurent\"");
  long p = need_int(need(base, "p", "/base"), "/base/p", 2, 65521);
  if (!is_prime(p)) fail("/base/p", "not a prime");
  sf.spec.ground.p = static_cast<unsigned>(p);
  const GroundField& g = sf.spec.ground;

  const json& steps = need(j, "steps", "");
  if (!steps.is_array()) fail("/steps", "expected an array");
  int dim = 1;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::string ptr = "/steps/" + std::to_string(s);
    const json& st = steps[s];
    const json& type = need(st, "type", ptr);
    if (type == "unramified") {
      int deg = static_cast<int>(need_int(need(st, "degree", ptr), ptr + "/degree", 1, 6));
      std::vector<unsigned> mod;
      if (st.contains("modulus")) {
        const json& m = st["modulus"];
        if (!m.is_array() || static_cast<int>(m.size()) != deg + 1) fail(ptr + "/modulus", "expected degree+1 residues");
        for (std::size_t k = 0; k < m.size(); ++k)
          mod.push_back(static_cast<unsigned>(need_int(m[k], ptr + "/modulus/" + std::to_string(k), 0, p - 1)));
        if (mod.back() != 1) fail(ptr + "/modulus", "modulus must be monic");
      }
      sf.spec.steps.push_back(StepSpec::unramified(deg, mod));
      dim *= deg;
    } else if (type == "eisenstein") {
      const json& cs = need(st, "coeffs", ptr);
      if (!cs.is_array() || cs.size() < 2) fail(ptr + "/coeffs", "expected at least two coefficients");
      std::vector<Coords> c;
      for (std::size_t k = 0; k < cs.size(); ++k)
        c.push_back(coords_at(g, cs[k], dim, ptr + "/coeffs/" + std::to_string(k)));
      if (!is_one(g, c.back())) fail(ptr + "/coeffs/" + std::to_string(cs.size() - 1), "polynomial must be monic");
      c.pop_back();
      int deg = static_cast<int>(c.size());
      sf.spec.steps.push_back(StepSpec::eisenstein(std::move(c)));
      dim *= deg;
    } else {
      fail(ptr + "/type", "expected \"unramified\" or \"eisenstein\"");
    }
  }
  if (j.contains("generator")) {
    const json& gen = j["generator"];
    if (!gen.is_array() || gen.empty() || static_cast<int>(gen.size()) > dim)
      fail("/generator", "expected 1 to " + std::to_string(dim) + " coordinates");
    for (std::size_t k = 0; k < gen.size(); ++k)
      sf.spec.generator.push_back(literal_at(g, gen[k], "/generator/" + std::to_string(k)));
    sf.spec.generator.resize(dim, GroundElem::integer(0));
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) fail("/options", "expected an object");
    if (o.contains("precision")) sf.options.precision = static_cast<int>(need_int(o["precision"], "/options/precision", 8, 512));
    if (o.contains("m_grid"))
      sf.options.catalog.grid_den = static_cast<int>(need_int(o["m_grid"], "/options/m_grid", 1, 12));
    if (o.contains("catalog")) {
      const json& c = o["catalog"];
      if (!c.is_object()) fail("/options/catalog", "expected an object");
      if (c.contains("tame")) sf.options.catalog.tame_max = static_cast<int>(need_int(c["tame"], "/options/catalog/tame", 1, 6));
      if (c.contains("perturb"))
        sf.options.catalog.grid_den = static_cast<int>(need_int(c["perturb"], "/options/catalog/perturb", 1, 12));
      if (c.contains("cap")) sf.options.catalog.cap = static_cast<int>(need_int(c["cap"], "/options/catalog/cap", 1, 64));
    }
  }
  return sf;
}

ordered_json spec_to_json(const ExtensionSpec& spec) {
  const GroundField& g = spec.ground;
  ordered_json j;
  j["schema"] = kSpecSchema;
  j["name"] = spec.name;
  j["base"] = {{"kind", g.kind == GroundKind::PAdic ? "padic" : "laurent"}, {"p", g.p}};
  ordered_json steps = ordered_json::array();
  int dim = 1;
  for (const auto& st : spec.steps) {
    ordered_json s;
    if (st.kind == StepSpec::Kind::Unramified) {
      s["type"] = "unramified";
      s["degree"] = st.degree;
      if (!st.modulus.empty()) s["modulus"] = st.modulus;
    } else {
      s["type"] = "eisenstein";
      ordered_json cs = ordered_json::array();
      // scalar literal when the coefficient lies in the ground field
      auto emit = [&](const Coords& c) {
        bool scalar = true;
        for (std::size_t k = 1; k < c.size(); ++k)
          if (literal_str(g, c[k]) != "0") scalar = false;
        if (scalar) return ordered_json(literal_str(g, c[0]));
        ordered_json a = ordered_json::array();
        for (int k = 0; k < dim; ++k) a.push_back(k < static_cast<int>(c.size()) ? literal_str(g, c[k]) : "0");
        return a;
      };
      for (const auto& c : st.coeffs) cs.push_back(emit(c));
      Coords one(dim, GroundElem::integer(0));
      one[0] = GroundElem::integer(1);
      cs.push_back(emit(one));
      s["coeffs"] = cs;
    }
    dim *= st.degree;
    steps.push_back(s);
  }
  j["steps"] = steps;
  if (!spec.generator.empty()) {
    ordered_json gen = ordered_json::array();
    std::size_t n = spec.generator.size();
    while (n > 1 && literal_str(g, spec.generator[n - 1]) == "0") --n;
    for (std::size_t k = 0; k < n; ++k) gen.push_back(literal_str(g, spec.generator[k]));
    j["generator"] = gen;
  }
  return j;
}

std::string body_hash(const ordered_json& body) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : body.dump()) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string herbrand_tsv(const Breaks& br) {
  std::string s = "x\ty\n0/1\t0/1\n";
  for (const auto& k : br.f.knots()) s += k.x.str() + "\t" + k.y.str() + "\n";
  return s;
}

ordered_json lattice_json(const Analysis& a) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < a.lattice.size(); ++i) {
    const Subfield& s = a.lattice[i];
    ordered_json m;
    m["index"] = i;
    m["subgroup"] = mask_str(s.subgroup, a.gd->degree());
    m["degree"] = s.degree;
    m["e"] = s.e;
    m["f"] = s.f;
    m["normal"] = s.normal;
    m["minpoly_mod_pi8"] = poly_str(s.minpoly, 8);
    if (i < a.member_u.size() && s.normal) m["u"] = es(a.member_u[i]);
    out.push_back(m);
  }
  return out;
}

ordered_json pm_json(const Analysis& a) {
  ordered_json j;
  if (!a.pm) return j;
  const PmScan& pm = *a.pm;
  ordered_json fields = ordered_json::array();
  for (const auto& f : pm.fields) {
    ordered_json x;
    x["field"] = f.label;
    x["kind"] = f.kind;
    x["embeds"] = f.embeds;
    if (!f.embeds) {
      x["max_vP"] = rs(f.max_vp.value);
      x["witness_digits"] = f.witness_digits;
    }
    fields.push_back(x);
  }
  ordered_json rows = ordered_json::array();
  for (const auto& r : pm.rows) {
    ordered_json x;
    x["m"] = rs(r.m);
    x["verdict"] = r.counterexamples ? "counterexample" : (r.m > a.br.u_max.value ? "true-by-bound" : "no-counterexample");
    x["counterexamples"] = r.counterexamples;
    if (r.counterexamples) {
      x["field"] = r.first_field;
      x["witness_digits"] = r.witness;
    }
    rows.push_back(x);
  }
  j["catalog"] = fields;
  j["table"] = rows;
  j["m_lower_bound"] = es(pm.lower_bound);
  j["tame"] = pm.tame;
  j["counterexample_at_u"] = pm.counterexample_at_u;
  j["sound"] = pm.sound;
  j["smart_equals_brute"] = pm.smart_brute_agree;
  j["brute_checks"] = pm.brute_checks;
  j["best_perturbed"] = {{"m", rs(pm.best_perturb)}, {"twist", pm.best_perturb_twist}};
  j["window"] = {{"vacuous", pm.window.vacuous},
                 {"lo", rs(pm.window.lo)},
                 {"hi", rs(pm.window.hi)},
                 {"twist", pm.window.e_window},
                 {"crude_bound", rs(pm.window.crude_bound)},
                 {"pass", pm.window.pass()}};
  return j;
}

ordered_json report_json(const Analysis& a, const ReportOptions& opt) {
  ordered_json r;
  r["schema"] = kReportSchema;
  r["name"] = a.spec.name;
  ordered_json ext;
  ext["ground"] = a.spec.ground.kind == GroundKind::PAdic ? "Q_" + std::to_string(a.spec.ground.p)
                                                          : "F_" + std::to_string(a.spec.ground.p) + "((t))";
  ext["galois"] = a.galois;
  if (!a.galois) {
    ext["roots_found"] = a.roots_found;
    r["extension"] = ext;
    r["verdict"] = "not-galois";
    return r;
  }
  const GaloisData& gd = *a.gd;
  ext["degree"] = gd.degree();
  ext["e"] = gd.ext.L->e();
  ext["f"] = gd.ext.L->f();
  ext["generator"] = gd.ext.generator_kind;
  ext["minpoly_mod_pi16"] = poly_str(gd.ext.minpoly, 16);
  r["extension"] = ext;
  r["ram_profile"] = rat_list(a.profile_np);
  r["ram_profile_from_roots"] = rat_list(a.profile_roots);
  ordered_json knots = ordered_json::array();
  for (const auto& k : a.br.f.knots()) knots.push_back({rs(k.x), rs(k.y)});
  ordered_json slopes = ordered_json::array();
  for (const auto& s : a.br.f.slopes()) slopes.push_back(rs(s));
  r["herbrand"] = {{"knots", knots}, {"slopes", slopes}};
  r["lower_breaks"] = rat_list(a.br.lower);
  r["upper_breaks"] = rat_list(a.br.upper);
  r["i"] = es(a.br.i_max);
  r["u"] = es(a.br.u_max);
  r["c"] = es(a.conductor);
  r["u_equals_c"] = a.conductor == a.br.u_max;
  if (opt.serre && !a.br.trivial) {
    ordered_json lo = ordered_json::array(), up = ordered_json::array();
    for (const auto& x : a.br.lower) lo.push_back(rs(serre_lower(x, gd.ext.L->e())));
    for (const auto& x : a.br.upper) up.push_back(rs(serre_upper(x)));
    r["serre_numbering"] = {{"lower", lo}, {"upper", up}};
  }
  ordered_json group = ordered_json::array();
  for (int s = 0; s < gd.degree(); ++s) {
    ordered_json g;
    g["index"] = s;
    if (s == gd.group.identity) {
      g["identity"] = true;
    } else {
      g["i"] = rs(gd.order_fn[s]);
      g["u"] = rs(*upper_index(gd, a.br, s));
    }
    g["row"] = gd.group.table[s];
    group.push_back(g);
  }
  r["group"] = group;
  ordered_json disc = ordered_json::array();
  for (const auto& d : a.disc)
    disc.push_back({{"m", rs(d.m)}, {"radius", rs(d.radius)}, {"components", d.components}, {"Qpp", d.qpp}, {"Q", d.q}});
  r["disc_scan"] = disc;
  r["distance_identity"] = {
      {"base", {{"samples", a.identity_base.samples}, {"certified", a.identity_base.certified}, {"holds", a.identity_base.holds}}},
      {"extension", {{"samples", a.identity_ext.samples}, {"certified", a.identity_ext.certified}, {"holds", a.identity_ext.holds}}}};
  r["lattice"] = lattice_json(a);
  if (a.compat) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : a.compat->rows)
      rows.push_back({{"member", c.member}, {"induced", c.induced.str()}, {"direct", c.direct.str()}, {"match", c.match}});
    ordered_json comps = ordered_json::array();
    for (const auto& c : a.compat->composites)
      comps.push_back({{"a", c.a}, {"b", c.b}, {"composite", c.ab}, {"u_a", es(c.ua)}, {"u_b", es(c.ub)}, {"u_composite", es(c.uab)}, {"ok", c.ok}});
    r["quotient_compatibility"] = {{"rows", rows}, {"composites", comps}, {"left_continuous", a.compat->left_continuous},
                                   {"separated", a.compat->separated}};
  }
  if (a.table) {
    ordered_json rows = ordered_json::array();
    for (const auto& t : a.table->rows)
      rows.push_back({{"m", rs(t.m)}, {"below_m", t.below}, {"fixed_by_G_m", t.fixed}, {"at_most_m", t.at_most},
                      {"fixed_by_G_m_plus", t.fixed_plus}, {"ok", t.ok}});
    r["fixed_field_table"] = rows;
  }
  if (a.props)
    r["filtration_props"] = {{"above_top_trivial", a.props->above_top_trivial}, {"low_is_inertia", a.props->low_is_inertia},
                  {"unramified_zero", a.props->unramified_zero}, {"base_change", a.props->base_change},
                  {"base_change_members", a.props->base_change_members}};
  if (opt.include_oracle && a.pm) r["pm_scan"] = pm_json(a);
  ordered_json checks;
  for (const auto& [k, v] : a.checks) checks[k] = v;
  r["checks"] = checks;
  r["failures"] = a.failures;
  return r;
}

std::string render_report(const Analysis& a, const ReportOptions& opt) {
  ordered_json body = report_json(a, opt);
  ordered_json out = body;
  out["body_hash"] = body_hash(body);
  ordered_json timing;
  for (const auto& [k, v] : a.timing_ms) timing[k] = static_cast<long>(v);
  out["run"] = {{"precision", a.precision}, {"timing_ms", timing}};
  return out.dump(2) + "\n";
}

ordered_json catalog_json() {
  ordered_json out = ordered_json::array();
  for (const auto& item : builtin_catalog()) {
    ordered_json j;
    j["name"] = item.spec.name;
    j["description"] = item.description;
    j["expected_profile"] = rat_list(item.expected_profile);
    j["expected_u"] = rs(item.expected_u);
    j["spec"] = spec_to_json(item.spec);
    out.push_back(j);
  }
  return out;
}

}  // namespace ramify
