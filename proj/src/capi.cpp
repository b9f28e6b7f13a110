#include "ramify/ramify.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "ramify/catalog.hpp"
#include "ramify/errors.hpp"
#include "ramify/spec_io.hpp"

struct ramify_extension {
  ramify::SpecFile file;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
ramify_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const ramify::SchemaError& e) {
    last_error = e.what();
    return RAMIFY_ERR_SCHEMA;
  } catch (const ramify::NotGalois& e) {
    last_error = e.what();
    return RAMIFY_ERR_NOT_GALOIS;
  } catch (const ramify::IdentityFailure& e) {
    last_error = e.what();
    return RAMIFY_ERR_IDENTITY;
  } catch (const ramify::InsufficientPrecision& e) {
    last_error = e.what();
    return RAMIFY_ERR_PRECISION;
  } catch (const ramify::EnumerationTooLarge& e) {
    last_error = e.what();
    return RAMIFY_ERR_ENUMERATION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RAMIFY_ERR_GENERIC;
  }
}

ramify::AnalyzeOptions merged(const ramify_extension* ext, const ramify_options* opt) {
  ramify::AnalyzeOptions o = ext->file.options;
  if (!opt) return o;
  if (opt->precision > 0) o.precision = opt->precision;
  if (opt->m_grid_den > 0) o.catalog.grid_den = opt->m_grid_den;
  if (opt->tame_max > 0) o.catalog.tame_max = opt->tame_max;
  if (opt->catalog_cap > 0) o.catalog.cap = opt->catalog_cap;
  if (o.max_precision < o.precision) o.max_precision = o.precision;
  return o;
}

ramify_status status_of(const ramify::Analysis& a) {
  if (!a.galois) {
    last_error = "extension is not Galois: " + std::to_string(a.roots_found) + " roots found";
    return RAMIFY_ERR_NOT_GALOIS;
  }
  if (!a.ok()) {
    last_error = "identity failures:";
    for (const auto& f : a.failures) last_error += " " + f;
    return RAMIFY_ERR_IDENTITY;
  }
  return RAMIFY_OK;
}

bool bad_args(const void* ext, char** out) {
  if (ext && out) return false;
  last_error = "null argument";
  return true;
}

bool unknown_builtin(const char* name) {
  for (const auto& item : ramify::builtin_catalog())
    if (item.spec.name == name) return false;
  last_error = std::string("unknown catalog entry: ") + name;
  return true;
}

}  // namespace

extern "C" {

void ramify_options_default(ramify_options* opt) {
  if (opt) *opt = ramify_options{0, 0, 0, 0, 0};
}

ramify_status ramify_extension_load(const char* spec_json, ramify_extension** out) {
  if (bad_args(spec_json, reinterpret_cast<char**>(out))) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    auto* e = new ramify_extension{ramify::parse_spec(spec_json)};
    *out = e;
    return RAMIFY_OK;
  });
}

ramify_status ramify_extension_builtin(const char* name, ramify_extension** out) {
  if (bad_args(name, reinterpret_cast<char**>(out)) || unknown_builtin(name)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    ramify::SpecFile f;
    f.spec = ramify::builtin_spec(name);
    *out = new ramify_extension{f};
    return RAMIFY_OK;
  });
}

void ramify_extension_free(ramify_extension* ext) { delete ext; }

ramify_status ramify_report(ramify_extension* ext, const ramify_options* opt, char** out) {
  if (bad_args(ext, out)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    auto a = ramify::analyze(ext->file.spec, merged(ext, opt));
    ramify::ReportOptions ro;
    ro.serre = opt && opt->serre;
    *out = dup(ramify::render_report(a, ro));
    return status_of(a);
  });
}

ramify_status ramify_pm_scan(ramify_extension* ext, const ramify_options* opt, char** out) {
  if (bad_args(ext, out)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    auto o = merged(ext, opt);
    o.filtration = false;
    auto a = ramify::analyze(ext->file.spec, o);
    nlohmann::ordered_json j;
    j["schema"] = "ramify-pm-scan/1";
    j["name"] = a.spec.name;
    j["galois"] = a.galois;
    if (a.galois) {
      j["u"] = a.br.u_max.str();
      j["pm_scan"] = ramify::pm_json(a);
      j["failures"] = a.failures;
    }
    *out = dup(j.dump(2) + "\n");
    return status_of(a);
  });
}

ramify_status ramify_lattice(ramify_extension* ext, const ramify_options* opt, char** out) {
  if (bad_args(ext, out)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    auto o = merged(ext, opt);
    o.oracle = false;
    auto a = ramify::analyze(ext->file.spec, o);
    nlohmann::ordered_json j;
    j["schema"] = "ramify-lattice/1";
    j["name"] = a.spec.name;
    j["galois"] = a.galois;
    if (a.galois) {
      j["lattice"] = ramify::lattice_json(a);
      j["failures"] = a.failures;
    }
    *out = dup(j.dump(2) + "\n");
    return status_of(a);
  });
}

ramify_status ramify_herbrand_tsv(ramify_extension* ext, const ramify_options* opt, char** out) {
  if (bad_args(ext, out)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    auto o = merged(ext, opt);
    o.oracle = false;
    o.filtration = false;
    auto a = ramify::analyze(ext->file.spec, o);
    if (!a.galois) return status_of(a);
    *out = dup(ramify::herbrand_tsv(a.br));
    return status_of(a);
  });
}

ramify_status ramify_catalog(char** out) {
  if (bad_args(out, out)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    *out = dup(ramify::catalog_json().dump(2) + "\n");
    return RAMIFY_OK;
  });
}

ramify_status ramify_catalog_spec(const char* name, char** out) {
  if (bad_args(name, out) || unknown_builtin(name)) return RAMIFY_ERR_ARGUMENT;
  return guarded([&] {
    *out = dup(ramify::spec_to_json(ramify::builtin_spec(name)).dump(2) + "\n");
    return RAMIFY_OK;
  });
}

const char* ramify_last_error(void) { return last_error.c_str(); }

void ramify_string_free(char* s) { std::free(s); }

}  // extern "C"
