#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramify/ramify.h"

namespace {

int exit_code(ramify_status s) {
  switch (s) {
    case RAMIFY_OK:
      return 0;
    case RAMIFY_ERR_SCHEMA:
      return 2;
    case RAMIFY_ERR_NOT_GALOIS:
      return 3;
    case RAMIFY_ERR_IDENTITY:
      return 4;
    default:
      return 1;
  }
}

struct Owned {
  char* s = nullptr;
  ~Owned() { ramify_string_free(s); }
};

bool write_out(const std::string& path, const char* text) {
  if (!text) return true;
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream f(path);
  f << text;
  return static_cast<bool>(f);
}

int parse_grid(const std::string& s) {
  std::smatch m;
  static const std::regex re(R"(^\s*(?:d\s*(?:<=|≤)\s*)?(\d+)\s*$)");
  if (!std::regex_match(s, m, re)) throw CLI::ValidationError("--m-grid", "expected d<=D or D");
  return std::stoi(m[1]);
}

void parse_catalog(const std::string& s, ramify_options& o) {
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find(':');
    if (pos == std::string::npos) throw CLI::ValidationError("--catalog", "expected key:value pairs");
    std::string k = item.substr(0, pos);
    int v = std::stoi(item.substr(pos + 1));
    if (k == "tame")
      o.tame_max = v;
    else if (k == "perturb")
      o.m_grid_den = v;
    else if (k == "cap")
      o.catalog_cap = v;
    else
      throw CLI::ValidationError("--catalog", "unknown key " + k);
  }
}

ramify_status load(const std::string& spec, ramify_extension** ext) {
  if (spec.rfind("builtin:", 0) == 0) return ramify_extension_builtin(spec.substr(8).c_str(), ext);
  std::ifstream f(spec);
  if (!f) {
    std::cerr << "ramify: cannot read " << spec << "\n";
    return RAMIFY_ERR_ARGUMENT;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  return ramify_extension_load(buf.str().c_str(), ext);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramify: ramification invariants of Galois extensions of local fields"};
  app.require_subcommand(1);

  ramify_options opt;
  ramify_options_default(&opt);
  std::string spec, out, grid, catalog;
  int precision = 0;
  bool serre = false, tsv = false, as_json = false;
  std::string write_specs;

  auto add_common = [&](CLI::App* c) {
    c->add_option("spec", spec, "spec JSON file, or builtin:NAME")->required();
    c->add_option("--precision", precision, "working precision in ground digits (default 32)");
    c->add_option("--m-grid", grid, "denominator bound for m grids, as d<=D");
    c->add_option("--catalog", catalog, "test catalog knobs, e.g. tame:4,perturb:4");
    c->add_option("-o,--output", out, "output file (default stdout)");
  };
  auto* report = app.add_subcommand("report", "full ramification report");
  add_common(report);
  report->add_flag("--serre-convention", serre, "also print classical numbering");
  report->add_flag("--tsv", tsv, "print Herbrand knots as TSV instead of JSON");
  auto* pm = app.add_subcommand("pm-scan", "brute-force scan of property (Pm)");
  add_common(pm);
  auto* lattice = app.add_subcommand("lattice", "subextension lattice");
  add_common(lattice);
  auto* cat = app.add_subcommand("catalog", "list built-in examples");
  cat->add_flag("--json", as_json, "machine-readable output");
  cat->add_option("--write-specs", write_specs, "write each built-in spec to DIR/<name>.json");

  try {
    app.parse(argc, argv);
    if (!grid.empty()) opt.m_grid_den = parse_grid(grid);
    if (!catalog.empty()) parse_catalog(catalog, opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (precision == 0)
    if (const char* env = std::getenv("RAMIFY_PRECISION")) precision = std::atoi(env);
  opt.precision = precision;
  opt.serre = serre ? 1 : 0;

  if (cat->parsed()) {
    Owned text;
    ramify_status s = ramify_catalog(&text.s);
    if (s != RAMIFY_OK) {
      std::cerr << "ramify: " << ramify_last_error() << "\n";
      return exit_code(s);
    }
    auto j = nlohmann::ordered_json::parse(text.s);
    if (!write_specs.empty()) {
      std::filesystem::create_directories(write_specs);
      for (const auto& item : j) {
        std::ofstream f(std::filesystem::path(write_specs) / (item["name"].get<std::string>() + ".json"));
        f << item["spec"].dump(2) << "\n";
      }
    }
    if (as_json) {
      std::fputs(text.s, stdout);
    } else {
      for (const auto& item : j)
        std::printf("%-12s u=%-5s %s\n", item["name"].get<std::string>().c_str(),
                    item["expected_u"].get<std::string>().c_str(), item["description"].get<std::string>().c_str());
    }
    return 0;
  }

  ramify_extension* ext = nullptr;
  ramify_status s = load(spec, &ext);
  if (s != RAMIFY_OK) {
    if (s != RAMIFY_ERR_ARGUMENT) std::cerr << "ramify: " << ramify_last_error() << "\n";
    return exit_code(s);
  }
  Owned text;
  if (report->parsed())
    s = tsv ? ramify_herbrand_tsv(ext, &opt, &text.s) : ramify_report(ext, &opt, &text.s);
  else if (pm->parsed())
    s = ramify_pm_scan(ext, &opt, &text.s);
  else
    s = ramify_lattice(ext, &opt, &text.s);
  ramify_extension_free(ext);
  if (!write_out(out, text.s)) {
    std::cerr << "ramify: cannot write " << out << "\n";
    return 1;
  }
  if (s != RAMIFY_OK) std::cerr << "ramify: " << ramify_last_error() << "\n";
  return exit_code(s);
}
