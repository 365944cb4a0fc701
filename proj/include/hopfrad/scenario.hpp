#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfrad/hradical.hpp"

namespace hopfrad {

enum class Tag {
  semisimple_h,
  cosemisimple_h,
  commutative_h,
  cocommutative_h,
  inner_action,
  trivial_sigma,
  finite_field,
  char_divides_dimh,
};

inline std::string tag_name(Tag t) {
  switch (t) {
    case Tag::semisimple_h: return "semisimple_H";
    case Tag::cosemisimple_h: return "cosemisimple_H";
    case Tag::commutative_h: return "commutative_H";
    case Tag::cocommutative_h: return "cocommutative_H";
    case Tag::inner_action: return "inner_action";
    case Tag::trivial_sigma: return "trivial_sigma";
    case Tag::finite_field: return "finite_field";
    case Tag::char_divides_dimh: return "char_divides_dimH";
  }
  return "?";
}

/// A named action bundle with recomputed hypothesis tags. All tags are
/// derived from the data; inner_action is the one constructive exception
/// and requires a witness u, which is verified to reproduce the action.
template <class S>
struct Scenario {
  std::string name;
  ActionBundle<S> bundle;
  std::optional<Mat<S>> inner_witness;
  std::set<Tag> tags;

  bool has(Tag t) const { return tags.count(t) != 0; }
};

template <class S>
Scenario<S> make_scenario(std::string name, ActionBundle<S> bundle,
                          std::optional<Mat<S>> inner_witness = std::nullopt) {
  Scenario<S> s{std::move(name), std::move(bundle), std::move(inner_witness), {}};
  const auto& h = s.bundle.hopf;
  if (is_semisimple(h)) s.tags.insert(Tag::semisimple_h);
  if (is_cosemisimple(h)) s.tags.insert(Tag::cosemisimple_h);
  if (is_commutative(h)) s.tags.insert(Tag::commutative_h);
  if (is_cocommutative(h)) s.tags.insert(Tag::cocommutative_h);
  if (s.bundle.trivial_sigma()) s.tags.insert(Tag::trivial_sigma);
  std::uint32_t p = s.bundle.field().characteristic;
  if (p != 0) {
    s.tags.insert(Tag::finite_field);
    if (static_cast<std::uint32_t>(h.dim()) % p == 0) s.tags.insert(Tag::char_divides_dimh);
  }
  if (s.inner_witness) {
    std::optional<std::vector<Mat<S>>> sigma;
    if (s.bundle.sigma_supplied) sigma = s.bundle.sigma;
    ActionBundle<S> rebuilt = inner_bundle<S>(h, s.bundle.target, *s.inner_witness, std::move(sigma));
    for (Index i = 0; i < s.bundle.hdim(); ++i)
      if (!equal(rebuilt.act[static_cast<std::size_t>(i)], s.bundle.act[static_cast<std::size_t>(i)]))
        throw Error::axiom("BadInnerWitness", "witness does not reproduce the action of scenario " + s.name);
    s.tags.insert(Tag::inner_action);
  }
  return s;
}

// ---- built-in scenario catalog ----------------------------------------------

namespace detail {

/// d acting as the derivation with d.x = x + 1 on k[x]/(x^n), extended to
/// powers of d; requires n = char so that the action matrices close up.
template <class S>
std::vector<Mat<S>> derivation_action(FieldSpec f, const HopfDef<S>& h, const AlgebraDef<S>& r) {
  const Index n = r.dim;
  Mat<S> d = zeros<S>(f, n, n);
  // d.x^k = k x^(k-1) (x + 1) = k x^k + k x^(k-1)
  for (Index k = 1; k < n; ++k) {
    d(k, k) += S(f, static_cast<long long>(k));
    d(k, k - 1) += S(f, static_cast<long long>(k));
  }
  std::vector<Mat<S>> act(static_cast<std::size_t>(h.dim()), identity<S>(f, n));
  for (Index i = 1; i < h.dim(); ++i) act[static_cast<std::size_t>(i)] = act[static_cast<std::size_t>(i - 1)] * d;
  return act;
}

}  // namespace detail

/// Built-in scenarios over one base field. The full catalog is the union
/// over GF(2), GF(3) and the rationals.
template <class S>
std::vector<Scenario<S>> catalog_for(FieldSpec f) {
  std::vector<Scenario<S>> out;
  if (f.characteristic == 2 || f.characteristic == 3) {
    const Index p = static_cast<Index>(f.characteristic);
    // scenN-p: u(kd) acting on k[x]/(x^p) by the derivation x -> x + 1
    auto uk = restricted_env<S>(f, S(f, 1));
    auto r = truncated_polynomial_algebra<S>(f, p);
    out.push_back(make_scenario<S>(p == 2 ? "scen1-p2" : "scen2-p3",
                                   action_make<S>(uk, r, detail::derivation_action<S>(f, uk, r))));
  }
  if (f.characteristic == 3) {
    auto c2 = group_algebra<S>(f, cyclic_group_table(2));
    auto rx = truncated_polynomial_algebra<S>(f, 2);
    {
      // g.x = -x
      std::vector<Mat<S>> act(2, identity<S>(f, 2));
      act[1](1, 1) = S(f, -1);
      out.push_back(make_scenario<S>("scen3-sign", action_make<S>(c2, rx, std::move(act))));
    }
    auto m2 = matrix_algebra<S>(scalar_algebra<S>(f), 2);
    {
      // C2-grading of M2 by diagonal / antidiagonal, via the dual of kC2
      auto dual = dual_hopf(c2);
      std::vector<Mat<S>> act(2, zeros<S>(f, 4, 4));
      act[0](0, 0) = S(f, 1);
      act[0](3, 3) = S(f, 1);
      act[1](1, 1) = S(f, 1);
      act[1](2, 2) = S(f, 1);
      out.push_back(make_scenario<S>("scen4-graded", action_make<S>(dual, m2, std::move(act))));
    }
    {
      // C2-grading of k[x]/(x^2) with homogeneous part R_g = span{x}
      auto dual = dual_hopf(c2);
      std::vector<Mat<S>> act(2, zeros<S>(f, 2, 2));
      act[0](0, 0) = S(f, 1);
      act[1](1, 1) = S(f, 1);
      out.push_back(make_scenario<S>("scen4x-graded-nilp", action_make<S>(dual, rx, std::move(act))));
    }
    out.push_back(make_scenario<S>("scen5-triv-gf3", trivial_bundle<S>(c2, rx)));
    {
      // inner action of kC2 on M2 by conjugation with diag(1,-1)
      Mat<S> u = zeros<S>(f, 2, 4);
      u(0, 0) = S(f, 1);
      u(0, 3) = S(f, 1);
      u(1, 0) = S(f, 1);
      u(1, 3) = S(f, -1);
      out.push_back(make_scenario<S>("scen6-inner", inner_bundle<S>(c2, m2, u), u));
    }
    {
      // crossed product GF(3) #sigma kC2 with sigma(g, g) = -1: the field GF(9)
      auto base = scalar_algebra<S>(f);
      std::vector<Mat<S>> act(2, identity<S>(f, 1));
      std::vector<Mat<S>> sigma(2, zeros<S>(f, 2, 1));
      sigma[0](0, 0) = S(f, 1);
      sigma[0](1, 0) = S(f, 1);
      sigma[1](0, 0) = S(f, 1);
      sigma[1](1, 0) = S(f, -1);
      out.push_back(make_scenario<S>("scen7-cocycle", action_make<S>(c2, base, std::move(act), std::move(sigma))));
    }
  }
  if (f.characteristic == 2) {
    auto rx = truncated_polynomial_algebra<S>(f, 2);
    auto c2 = group_algebra<S>(f, cyclic_group_table(2));
    auto c3 = group_algebra<S>(f, cyclic_group_table(3));
    out.push_back(make_scenario<S>("scen5-triv-m2", trivial_bundle<S>(c2, matrix_algebra<S>(scalar_algebra<S>(f), 2))));
    out.push_back(make_scenario<S>("scen5-triv-dualc3", trivial_bundle<S>(dual_hopf(c3), rx)));
    out.push_back(make_scenario<S>("scen8-kc3", trivial_bundle<S>(c3, rx)));
  }
  if (f.characteristic == 0) {
    auto c2 = group_algebra<S>(f, cyclic_group_table(2));
    out.push_back(make_scenario<S>("scen5-triv-q", trivial_bundle<S>(c2, truncated_polynomial_algebra<S>(f, 2))));
  }
  return out;
}

}  // namespace hopfrad
