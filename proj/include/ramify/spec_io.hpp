#pragma once

#include <string>

#include <json.hpp>

#include "ramify/galois.hpp"
#include "ramify/pipeline.hpp"

namespace ramify {

inline constexpr const char* kSpecSchema = "ramify-spec/1";
inline constexpr const char* kReportSchema = "ramify-report/1";

struct SpecFile {
  ExtensionSpec spec;
  AnalyzeOptions options;
};

// Throws SchemaError carrying a JSON pointer to the offending field.
SpecFile parse_spec(const std::string& text, const std::string& fallback_name = "extension");
nlohmann::ordered_json spec_to_json(const ExtensionSpec& spec);

// Coefficient literals: integers for Q_p, polynomials in t such as "t^2+t" for F_p((t)).
GroundElem parse_literal(const GroundField& g, const std::string& s);
std::string literal_str(const GroundField& g, const GroundElem& x);

struct ReportOptions {
  bool serre = false;
  bool include_oracle = true;
};

nlohmann::ordered_json report_json(const Analysis& a, const ReportOptions& opt);
// Report text with the body hash filled in; the "run" member is excluded from the hash.
std::string render_report(const Analysis& a, const ReportOptions& opt);
std::string body_hash(const nlohmann::ordered_json& body);
std::string herbrand_tsv(const Breaks& br);

nlohmann::ordered_json catalog_json();
nlohmann::ordered_json lattice_json(const Analysis& a);
nlohmann::ordered_json pm_json(const Analysis& a);

}  // namespace ramify
