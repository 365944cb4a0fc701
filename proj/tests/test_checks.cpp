#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfrad/checks.hpp"
#include "hopfrad/document.hpp"

using namespace hopfrad;

namespace {

Scenario<Fp> catalog_scenario(std::uint32_t p, const std::string& name) {
  for (auto& s : catalog_for<Fp>(gf(p)))
    if (s.name == name) return s;
  throw std::runtime_error("missing scenario " + name);
}

}  // namespace

TEST_CASE("checker registry") {
  const auto& reg = checker_registry();
  CHECK(reg.size() == 16);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  CHECK(checker_expected("E10410") == "identity_fails");
  CHECK(checker_expected("T1027") == "identity_holds");
}

TEST_CASE("scenario tags are recomputed from the data") {
  auto scen1 = catalog_scenario(2, "scen1-p2");
  CHECK(scen1.has(Tag::semisimple_h));
  CHECK(!scen1.has(Tag::cosemisimple_h));
  CHECK(scen1.has(Tag::commutative_h));
  CHECK(scen1.has(Tag::cocommutative_h));
  CHECK(scen1.has(Tag::trivial_sigma));
  CHECK(scen1.has(Tag::finite_field));
  CHECK(scen1.has(Tag::char_divides_dimh));
  CHECK(!scen1.has(Tag::inner_action));
  auto scen6 = catalog_scenario(3, "scen6-inner");
  CHECK(scen6.has(Tag::inner_action));
  CHECK(scen6.has(Tag::semisimple_h));
  auto scen7 = catalog_scenario(3, "scen7-cocycle");
  CHECK(!scen7.has(Tag::trivial_sigma));
}

TEST_CASE("applicability") {
  auto scen1 = catalog_scenario(2, "scen1-p2");
  CHECK(checker_applies<Fp>("E10410", scen1));
  CHECK(checker_applies<Fp>("T1015", scen1));
  CHECK(checker_applies<Fp>("L1022", scen1));
  CHECK(!checker_applies<Fp>("T1026", scen1));
  CHECK(!checker_applies<Fp>("T1057", scen1));
  auto scen3 = catalog_scenario(3, "scen3-sign");
  CHECK(!checker_applies<Fp>("E10410", scen3));  // cosemisimple H
  CHECK(checker_applies<Fp>("T1048", scen3));
  auto scen2 = catalog_scenario(3, "scen2-p3");
  CHECK(!checker_applies<Fp>("T1015", scen2));  // |H| = 27 over the graph bound
  CHECK(checker_applies<Fp>("E10410", scen2));
  auto scen7 = catalog_scenario(3, "scen7-cocycle");
  CHECK(!checker_applies<Fp>("T1063", scen7));  // nontrivial cocycle
  ScenarioLab<Fp> lab(scen3);
  try {
    run_checker<Fp>("E10410", lab);
    FAIL("expected HypothesisNotMet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis_not_met);
  }
  CHECK_THROWS_AS(checker_applies<Fp>("T9999", scen3), Error);
}

TEST_CASE("single checker runs") {
  auto scen1 = catalog_scenario(2, "scen1-p2");
  ScenarioLab<Fp> lab(scen1);
  auto rep = run_checker<Fp>("E10410", lab);
  CHECK(rep.observed == "identity_fails");
  CHECK(rep.expected == rep.observed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->kind == "element");
  CHECK(rep.lhs.basis.size() == 4);  // the radical upstairs has dimension 4
  CHECK(rep.rhs.basis.empty());
  auto rep2 = run_checker<Fp>("T1027", lab);
  CHECK(rep2.observed == "identity_holds");
}

TEST_CASE("run_all over GF(2) is deterministic and all-green") {
  auto scens = catalog_for<Fp>(gf(2));
  auto r1 = run_all_on<Fp>(scens, 1);
  auto r2 = run_all_on<Fp>(scens, 1);
  auto r4 = run_all_on<Fp>(scens, 4);
  CHECK(!r1.empty());
  CHECK(reports_jsonl(r1) == reports_jsonl(r2));
  CHECK(reports_jsonl(r1) == reports_jsonl(r4));
  for (const auto& r : r1) CHECK(r.observed == r.expected);
  for (std::size_t i = 1; i < r1.size(); ++i)
    CHECK(std::make_pair(r1[i - 1].theorem_id, r1[i - 1].scenario) <=
          std::make_pair(r1[i].theorem_id, r1[i].scenario));
  auto table = report_table(r1);
  CHECK(table.find("pass") != std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);
}
