// Acceptance suite: one pass/fail line per criterion, each with its time
// budget enforced. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "hopfrad/document.hpp"
#include "support.hpp"

using namespace hopfrad;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

Scenario<Fp> catalog_scenario(std::uint32_t p, const std::string& name) {
  for (auto& s : catalog_for<Fp>(gf(p)))
    if (s.name == name) return s;
  throw Failure("missing catalog scenario " + name);
}

VerdictReport run_on(const Scenario<Fp>& s, const std::string& theorem) {
  ScenarioLab<Fp> lab(s);
  return run_checker<Fp>(theorem, lab);
}

void require_verdict(const Scenario<Fp>& s, const std::string& theorem) {
  auto rep = run_on(s, theorem);
  require(rep.observed == rep.expected,
          theorem + " on " + s.name + ": observed " + rep.observed + " (" + rep.note + ")");
}

// -- criterion bodies --------------------------------------------------------

void criterion_axioms() {
  int count = 0;
  auto over = [&count](FieldSpec f, auto tag) {
    using S = decltype(tag);
    group_algebra<S>(f, cyclic_group_table(2));
    group_algebra<S>(f, cyclic_group_table(3));
    dual_hopf(group_algebra<S>(f, cyclic_group_table(2)));
    dual_hopf(group_algebra<S>(f, cyclic_group_table(3)));
    count += 4;
  };
  over(gf(2), Fp());
  over(gf(3), Fp());
  over(rationals(), Rat());
  for (std::uint32_t p : {2u, 3u})
    for (long long lambda : {0LL, 1LL}) {
      restricted_env<Fp>(gf(p), Fp(gf(p), lambda));
      ++count;
    }
  require(count == 16, "expected 16 catalog Hopf algebras");
}

void criterion_radical_oracles() {
  auto small = testsupport::small_catalog();
  require(small.size() >= 10, "need at least 10 small catalog algebras");
  for (const auto& [name, a] : small) {
    auto rj = jacobson_radical(a).value;
    require(rj == nil_ideal_oracle(a), name + ": nil-ideal oracle disagrees");
    require(rj == spectrum_oracle(a).intersection, name + ": spectrum oracle disagrees");
    require(rj == baer_radical(a).value, name + ": baer value differs");
  }
  auto all = small;
  for (auto& entry : testsupport::big_catalog()) all.push_back(std::move(entry));
  for (const auto& [name, a] : all) {
    auto rep = jacobson_radical(a);
    require(a.dim <= 27, name + ": unexpected dimension");
    // nilpotency witness: value^idx = 0 and value^(idx-1) != 0
    auto idx = nilpotency_index(a, rep.value, static_cast<int>(a.dim) + 1);
    require(idx.has_value() && *idx == rep.nilpotency_index, name + ": nilpotency index mismatch");
    if (rep.nilpotency_index > 1) {
      Subspace<Fp> power = rep.value;
      for (int t = 2; t < rep.nilpotency_index; ++t) power = ideal_product(a, power, rep.value);
      require(!power.is_zero_space(), name + ": value^(idx-1) is already zero");
      require(ideal_product(a, power, rep.value).is_zero_space(), name + ": value^idx is nonzero");
    }
    if (!rep.value.is_full()) {
      auto q = quotient(a, rep.value);
      require(jacobson_radical(q.algebra).value.is_zero_space(), name + ": radical of quotient is nonzero");
    }
  }
}

void criterion_counterexample() {
  for (std::uint32_t p : {2u, 3u}) {
    auto scen = catalog_scenario(p, p == 2 ? "scen1-p2" : "scen2-p3");
    const auto& b = scen.bundle;
    auto rb = baer_radical(b.target).value;
    require(rb == ideal_generated(b.target, b.target.basis_row(1)),
            "r_b(R) is not the ideal generated by x at p = " + std::to_string(p));
    require(colon_h(b, rb).is_zero_space(), "(r_b(R):H) != 0 at p = " + std::to_string(p));
    require(is_h_semiprime(b), "R should be H-semiprime at p = " + std::to_string(p));
    require(!rb.is_zero_space(), "R should not be semiprime at p = " + std::to_string(p));
    auto t = smash_tower(b);
    require(t.dcp.algebra.dim == static_cast<Index>(p * p * p), "dim(A#H*) should be p^3");
    require_verdict(scen, "E10410");
  }
}

void criterion_semisimple_cocommutative() {
  int covered = 0;
  for (std::uint32_t p : {2u, 3u})
    for (const auto& s : catalog_for<Fp>(gf(p))) {
      if (!checker_applies<Fp>("T1027", s)) continue;
      require_verdict(s, "T1027");
      ++covered;
    }
  for (const char* name : {"scen3-sign", "scen7-cocycle", "scen5-triv-gf3"}) {
    auto s = catalog_scenario(3, name);
    require(checker_applies<Fp>("T1027", s), std::string(name) + " must satisfy the T1027 hypotheses");
  }
  for (const char* name : {"scen8-kc3", "scen5-triv-dualc3"}) {
    auto s = catalog_scenario(2, name);
    require(checker_applies<Fp>("T1027", s), std::string(name) + " must satisfy the T1027 hypotheses");
  }
  require(covered >= 5, "T1027 must cover at least five finite scenarios");
}

void criterion_three_way() {
  // every finite-field scenario with |R| <= 16 and |H| <= 4, catalog plus
  // a few extra bundles at the same scale
  int covered = 0;
  for (std::uint32_t p : {2u, 3u})
    for (const auto& s : catalog_for<Fp>(gf(p))) {
      auto rsz = space_size(s.bundle.field(), s.bundle.rdim(), 16);
      auto hsz = space_size(s.bundle.field(), s.bundle.hdim(), 4);
      if (!rsz || !hsz) continue;
      require_verdict(s, "T1015");
      ++covered;
    }
  require(covered >= 2, "expected at least two catalog scenarios inside the bound");
  auto f2 = gf(2);
  auto c2 = group_algebra<Fp>(f2, cyclic_group_table(2));
  std::vector<Scenario<Fp>> extra;
  extra.push_back(make_scenario<Fp>("extra-triv-kx2", trivial_bundle<Fp>(c2, truncated_polynomial_algebra<Fp>(f2, 2))));
  {
    // C2 swapping the two coordinates of GF(2) x GF(2)
    auto diag = diagonal_algebra<Fp>(f2, 2);
    std::vector<Mat<Fp>> act(2, identity<Fp>(f2, 2));
    act[1] = zeros<Fp>(f2, 2, 2);
    act[1](0, 1) = Fp(f2, 1);
    act[1](1, 0) = Fp(f2, 1);
    extra.push_back(make_scenario<Fp>("extra-swap-diag", action_make<Fp>(c2, diag, std::move(act))));
  }
  extra.push_back(make_scenario<Fp>(
      "extra-ukd-m2", trivial_bundle<Fp>(restricted_env<Fp>(f2, Fp(f2, 1)), matrix_algebra<Fp>(scalar_algebra<Fp>(f2), 2))));
  for (const auto& s : extra) {
    require(checker_applies<Fp>("T1015", s), s.name + " should be inside the T1015 bounds");
    require_verdict(s, "T1015");
  }
}

void criterion_phi_suite() {
  for (const char* id : {"L1022", "L1023"}) {
    require_verdict(catalog_scenario(2, "scen1-p2"), id);
    require_verdict(catalog_scenario(3, "scen3-sign"), id);
  }
}

void criterion_jacobson_layer() {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& s : catalog_for<Fp>(gf(p))) {
      require_verdict(s, "P1029");
      require_verdict(s, "P10210");
      if (checker_applies<Fp>("T1048", s)) require_verdict(s, "T1048");
      if (checker_applies<Fp>("T1063", s)) require_verdict(s, "T1063");
    }
  // both group algebras and their duals, orders 2 and 3, appear
  require(checker_applies<Fp>("T1048", catalog_scenario(3, "scen3-sign")), "kC2 case missing");
  require(checker_applies<Fp>("T1048", catalog_scenario(3, "scen4-graded")), "(kC2)* case missing");
  require(checker_applies<Fp>("T1048", catalog_scenario(2, "scen8-kc3")), "kC3 case missing");
  require(checker_applies<Fp>("T1048", catalog_scenario(2, "scen5-triv-dualc3")), "(kC3)* case missing");
  for (const auto& s : catalog_for<Rat>(rationals())) {
    ScenarioLab<Rat> lab(s);
    for (const char* id : {"P1029", "P10210", "T1048", "T1063"})
      if (checker_applies<Rat>(id, s)) {
        auto rep = run_checker<Rat>(id, lab);
        require(rep.observed == rep.expected, std::string(id) + " on " + s.name);
      }
  }
}

void criterion_regular_radical() {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& s : catalog_for<Fp>(gf(p))) {
      if (checker_applies<Fp>("T1055x", s)) require_verdict(s, "T1055x");
      if (checker_applies<Fp>("T1056", s)) require_verdict(s, "T1056");
    }
  require_verdict(catalog_scenario(3, "scen4-graded"), "T1057");
  require_verdict(catalog_scenario(3, "scen4x-graded-nilp"), "T1057");
}

void criterion_inner() {
  auto scen6 = catalog_scenario(3, "scen6-inner");
  require_verdict(scen6, "T1026");
  require_verdict(scen6, "T10211");
}

void criterion_determinism() {
  auto r1 = run_catalog(1);
  auto r2 = run_catalog(1);
  auto r4 = run_catalog(4);
  require(!r1.empty(), "empty report list");
  require(reports_jsonl(r1) == reports_jsonl(r2), "two sequential runs differ");
  require(reports_jsonl(r1) == reports_jsonl(r4), "parallel run differs");
  for (const auto& r : r1)
    require(r.observed == r.expected, "unexpected verdict for " + r.theorem_id + " on " + r.scenario);
  for (std::uint32_t p : {2u, 3u, 0u}) {
    std::string text = p == 0 ? emit_document(document_from_scenarios<Rat>(0, catalog_for<Rat>(rationals())))
                              : emit_document(document_from_scenarios<Fp>(p, catalog_for<Fp>(gf(p))));
    require(emit_document(parse_document(text)) == text,
            "catalog document is not byte-stable at characteristic " + std::to_string(p));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "hopf-axiom-suite", 5.0, criterion_axioms},
      {2, "radical-oracle-equivalence", 60.0, criterion_radical_oracles},
      {3, "counterexample-reproduction", 30.0, criterion_counterexample},
      {4, "semisimple-cocommutative-transport", 30.0, criterion_semisimple_cocommutative},
      {5, "three-way-prime-radical", 120.0, criterion_three_way},
      {6, "ideal-correspondence-suite", 120.0, criterion_phi_suite},
      {7, "jacobson-layer", 60.0, criterion_jacobson_layer},
      {8, "regular-radical-suite", 60.0, criterion_regular_radical},
      {9, "inner-action-theorems", 10.0, criterion_inner},
      {10, "determinism-and-round-trip", 300.0, criterion_determinism},
  };
  int failures = 0;
  double total = 0.0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.body();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += elapsed;
    if (verdict == "PASS" && elapsed > c.budget_seconds) {
      verdict = "FAIL";
      detail = "over time budget";
    }
    if (verdict == "FAIL") ++failures;
    std::ostringstream line;
    line << "[" << verdict << "] criterion " << c.id << " " << c.name << " (" << std::fixed
         << std::setprecision(2) << elapsed << "s, budget " << c.budget_seconds << "s)";
    if (!detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
  }
  if (total > 300.0) {
    std::cout << "[FAIL] total wall clock " << std::fixed << std::setprecision(2) << total
              << "s exceeds 300s" << std::endl;
    ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (total " << std::fixed
            << std::setprecision(2) << total << "s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
