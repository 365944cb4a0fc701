#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfrad/document.hpp"

using namespace hopfrad;

TEST_CASE("catalog documents round-trip byte for byte") {
  auto check_field = [](std::uint32_t p) {
    std::string text;
    if (p == 0)
      text = emit_document(document_from_scenarios<Rat>(0, catalog_for<Rat>(rationals())));
    else
      text = emit_document(document_from_scenarios<Fp>(p, catalog_for<Fp>(gf(p))));
    Document doc = parse_document(text);
    CHECK(emit_document(doc) == text);
  };
  check_field(2);
  check_field(3);
  check_field(0);
}

TEST_CASE("documents rebuild the catalog scenarios faithfully") {
  auto native = catalog_for<Fp>(gf(3));
  auto doc = parse_document(emit_document(document_from_scenarios<Fp>(3, native)));
  auto rebuilt = scenarios_from_document<Fp>(doc);
  REQUIRE(rebuilt.size() == native.size());
  for (const auto& r : rebuilt) {
    const Scenario<Fp>* match = nullptr;
    for (const auto& n : native)
      if (n.name == r.name) match = &n;
    REQUIRE(match != nullptr);
    CHECK(match->tags == r.tags);
    CHECK(match->bundle.target.dim == r.bundle.target.dim);
    for (Index i = 0; i < r.bundle.hdim(); ++i)
      CHECK(equal(match->bundle.act[static_cast<std::size_t>(i)], r.bundle.act[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("scalar strings survive the round trip unchanged") {
  std::string text = R"({
  "format_version": "1",
  "field": {
    "characteristic": 0
  },
  "algebras": {
    "A": {
      "dim": 1,
      "unit": ["1"],
      "structure": [[0, 0, 0, "1"]]
    }
  },
  "hopf_algebras": {},
  "actions": {},
  "cocycles": {},
  "scenarios": {}
})";
  Document doc = parse_document(text);
  doc.algebras.at("A").structure[0] = {0, 0, 0, "-2/5"};
  std::string emitted = emit_document(doc);
  CHECK(emitted.find("\"-2/5\"") != std::string::npos);
  Document again = parse_document(emitted);
  CHECK(std::get<3>(again.algebras.at("A").structure[0]) == "-2/5");
  CHECK(emit_document(again) == emitted);
}

TEST_CASE("parse failures carry the parse error class") {
  try {
    parse_document("{ not json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
  }
  CHECK_THROWS_AS(parse_document(R"({"format_version": "2", "field": {"characteristic": 2}})"), Error);
  CHECK_THROWS_AS(parse_document(R"({"format_version": "1", "field": {"characteristic": 4}})"), Error);
}

TEST_CASE("typing failures distinguish parse and axiom errors") {
  // structure tensor violating associativity: e1 e1 = e1 with a zero unit row
  std::string bad_assoc = R"({
  "format_version": "1",
  "field": {"characteristic": 2},
  "algebras": {
    "A": {"dim": 2, "unit": ["0", "0"], "structure": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}
  },
  "scenarios": {}
})";
  try {
    scenarios_from_document<Fp>(parse_document(bad_assoc));
    FAIL("expected an axiom violation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::axiom);
    CHECK(e.kind() == "NonAssociative");
  }
  std::string bad_scalar = R"({
  "format_version": "1",
  "field": {"characteristic": 2},
  "algebras": {
    "A": {"dim": 1, "unit": ["1"], "structure": [[0, 0, 0, "q"]]}
  },
  "scenarios": {}
})";
  CHECK_THROWS_AS(scenarios_from_document<Fp>(parse_document(bad_scalar)), Error);
  std::string bad_ref = R"({
  "format_version": "1",
  "field": {"characteristic": 2},
  "algebras": {},
  "scenarios": {"s": {"action": "missing"}}
})";
  try {
    scenarios_from_document<Fp>(parse_document(bad_ref));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
  }
}

TEST_CASE("group metadata is verified against the tensors") {
  auto doc = document_from_scenarios<Fp>(3, catalog_for<Fp>(gf(3)));
  auto& hopf = doc.hopf_algebras.at("scen3-sign.H");
  REQUIRE(hopf.group.has_value());
  hopf.group->dual = true;  // lie about duality
  try {
    scenarios_from_document<Fp>(doc);
    FAIL("expected BadGroupMeta");
  } catch (const Error& e) {
    CHECK(e.kind() == "BadGroupMeta");
  }
}

TEST_CASE("inner witnesses survive documents and stay verified") {
  auto doc = document_from_scenarios<Fp>(3, catalog_for<Fp>(gf(3)));
  auto rebuilt = scenarios_from_document<Fp>(doc);
  bool found = false;
  for (const auto& s : rebuilt)
    if (s.name == "scen6-inner") {
      found = true;
      CHECK(s.has(Tag::inner_action));
    }
  CHECK(found);
  // corrupt the witness: the rebuilt action no longer matches
  auto& scen = doc.scenarios.at("scen6-inner");
  REQUIRE(scen.inner_witness.has_value());
  (*scen.inner_witness)[1][0] = "2";
  CHECK_THROWS_AS(scenarios_from_document<Fp>(doc), Error);
}

TEST_CASE("verdict reports serialize one record per line") {
  auto scens = catalog_for<Fp>(gf(2));
  ScenarioLab<Fp> lab(scens[0]);
  auto rep = run_checker<Fp>("P1025", lab);
  auto line = report_json(rep).dump();
  CHECK(line.find("\"theorem_id\":\"P1025\"") != std::string::npos);
  auto jsonl = reports_jsonl({rep, rep});
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
}
