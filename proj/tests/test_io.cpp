#include "doctest.h"
#include "ramify/catalog.hpp"
#include "ramify/errors.hpp"
#include "ramify/spec_io.hpp"

using namespace ramify;

namespace {

const GroundField F2t{GroundKind::Laurent, 2};
const GroundField F3t{GroundKind::Laurent, 3};
const GroundField Q5{GroundKind::PAdic, 5};

std::string pointer_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SchemaError& e) {
    return e.pointer;
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("schema errors point at the offending member") {
  CHECK(pointer_of("[]") == "");
  CHECK(pointer_of("{not json") == "");
  CHECK(pointer_of(R"({"schema":"other/1","base":{"kind":"padic","p":2},"steps":[]})") == "/schema");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"padic","p":4},"steps":[]})") == "/base/p");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"real","p":2},"steps":[]})") == "/base/kind");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"padic","p":2},
    "steps":[{"type":"eisenstein","coeffs":["2","0","1"]},{"type":"wild"}]})") == "/steps/1/type");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"padic","p":2},
    "steps":[{"type":"eisenstein","coeffs":["2","x","1"]}]})") == "/steps/0/coeffs/1");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"padic","p":2},
    "steps":[{"type":"eisenstein","coeffs":["2","0","1"]}],"generator":["1","1","1"]})") == "/generator");
  CHECK(pointer_of(R"({"schema":"ramify-spec/1","base":{"kind":"padic","p":2},
    "steps":[{"type":"eisenstein","coeffs":["2","0","1"]}],"options":{"precision":3}})") == "/options/precision");
}

TEST_CASE("specs with a short generator are zero padded") {
  SpecFile sf = parse_spec(R"({"schema":"ramify-spec/1","name":"z8","base":{"kind":"padic","p":2},
    "steps":[{"type":"eisenstein","coeffs":["2","4","6","4","1"]}],"generator":["1","1"]})");
  CHECK(sf.spec.generator.size() == 4);
  CHECK(sf.spec.name == "z8");
}

TEST_CASE("literals round trip") {
  for (const auto& s : {"t^2+t", "t", "1", "0", "t^5+t^3+1"}) {
    CAPTURE(s);
    CHECK(literal_str(F2t, parse_literal(F2t, s)) == s);
  }
  CHECK(literal_str(F3t, parse_literal(F3t, "-t")) == literal_str(F3t, parse_literal(F3t, "2*t")));
  for (const auto& s : {"0", "5", "-25", "123456789012345678901234567890"}) {
    CAPTURE(s);
    CHECK(literal_str(Q5, parse_literal(Q5, s)) == s);
  }
  CHECK_THROWS_AS(parse_literal(F2t, "t^"), Error);
  CHECK_THROWS_AS(parse_literal(Q5, "1/2"), Error);
}

TEST_CASE("every builtin spec survives a JSON round trip") {
  for (const auto& item : builtin_catalog()) {
    CAPTURE(item.spec.name);
    std::string text = spec_to_json(item.spec).dump(2);
    SpecFile back = parse_spec(text);
    CHECK(back.spec.name == item.spec.name);
    CHECK(spec_to_json(back.spec).dump() == spec_to_json(item.spec).dump());
    Extension a = build_extension(item.spec, 24), b = build_extension(back.spec, 24);
    CHECK(poly_str(a.minpoly, 12) == poly_str(b.minpoly, 12));
  }
}

TEST_CASE("reports are byte-stable apart from the run member") {
  AnalyzeOptions opt;
  opt.oracle = false;
  Analysis a = analyze(builtin_spec("zeta4"), opt);
  Analysis b = analyze(builtin_spec("zeta4"), opt);
  auto ja = nlohmann::ordered_json::parse(render_report(a, {}));
  auto jb = nlohmann::ordered_json::parse(render_report(b, {}));
  CHECK(ja["body_hash"] == jb["body_hash"]);
  ja.erase("run");
  jb.erase("run");
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["schema"] == kReportSchema);
  CHECK(ja["u"] == "2/1");
  CHECK(ja["i"] == "1/1");
  CHECK(a.ok());
}

TEST_CASE("herbrand table") {
  CHECK(herbrand_tsv(breaks({Rat(3, 2)})) == "x\ty\n0/1\t0/1\n3/2\t3/1\n");
}
