#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfrad/scenario.hpp"

namespace hopfrad::testsupport {

/// Upper triangular n x n matrices, basis e_ij for i <= j.
template <class S>
AlgebraDef<S> upper_triangular(FieldSpec f, Index n) {
  std::vector<std::pair<Index, Index>> basis;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) basis.emplace_back(i, j);
  const Index d = static_cast<Index>(basis.size());
  auto slot = [&](Index i, Index j) {
    for (Index t = 0; t < d; ++t)
      if (basis[static_cast<std::size_t>(t)] == std::make_pair(i, j)) return t;
    return Index(-1);
  };
  std::vector<Mat<S>> table(static_cast<std::size_t>(d), zeros<S>(f, d, d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      auto [i, j] = basis[static_cast<std::size_t>(a)];
      auto [k, l] = basis[static_cast<std::size_t>(b)];
      if (j == k) table[static_cast<std::size_t>(a)](b, slot(i, l)) = S(f, 1);
    }
  RowVec<S> unit = zero_row<S>(f, d);
  for (Index i = 0; i < n; ++i) unit(slot(i, i)) = S(f, 1);
  std::vector<std::string> labels;
  for (auto [i, j] : basis) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  return algebra_make<S>(f, std::move(table), std::move(unit), std::move(labels));
}

/// The strict upper-triangular ideal inside upper_triangular(f, n).
template <class S>
Subspace<S> strict_upper_subspace(FieldSpec f, Index n) {
  std::vector<std::pair<Index, Index>> basis;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) basis.emplace_back(i, j);
  Mat<S> rows = zeros<S>(f, 0, static_cast<Index>(basis.size()));
  Index r = 0;
  rows.conservativeResize(static_cast<Index>(basis.size()), static_cast<Index>(basis.size()));
  rows.fill(S(f, 0));
  for (Index t = 0; t < static_cast<Index>(basis.size()); ++t)
    if (basis[static_cast<std::size_t>(t)].first != basis[static_cast<std::size_t>(t)].second)
      rows(r++, t) = S(f, 1);
  rows.conservativeResize(r, static_cast<Index>(basis.size()));
  return Subspace<S>::span(f, rows);
}

/// Named algebras over GF(2)/GF(3), dim <= 4, inside all enumeration bounds.
inline std::vector<std::pair<std::string, AlgebraDef<Fp>>> small_catalog() {
  auto f2 = gf(2);
  auto f3 = gf(3);
  std::vector<std::pair<std::string, AlgebraDef<Fp>>> out;
  out.emplace_back("gf2-kx2", truncated_polynomial_algebra<Fp>(f2, 2));
  out.emplace_back("gf3-kx2", truncated_polynomial_algebra<Fp>(f3, 2));
  out.emplace_back("gf3-kx3", truncated_polynomial_algebra<Fp>(f3, 3));
  out.emplace_back("gf2-kc2", group_algebra<Fp>(f2, cyclic_group_table(2)).algebra);
  out.emplace_back("gf3-kc2", group_algebra<Fp>(f3, cyclic_group_table(2)).algebra);
  out.emplace_back("gf2-kc3", group_algebra<Fp>(f2, cyclic_group_table(3)).algebra);
  out.emplace_back("gf3-kc3", group_algebra<Fp>(f3, cyclic_group_table(3)).algebra);
  out.emplace_back("gf2-m2", matrix_algebra<Fp>(scalar_algebra<Fp>(f2), 2));
  out.emplace_back("gf3-m2", matrix_algebra<Fp>(scalar_algebra<Fp>(f3), 2));
  out.emplace_back("gf2-ut2", upper_triangular<Fp>(f2, 2));
  out.emplace_back("gf3-ut2", upper_triangular<Fp>(f3, 2));
  out.emplace_back("gf2-diag2", diagonal_algebra<Fp>(f2, 2));
  out.emplace_back("gf2-ukd", restricted_env<Fp>(f2, Fp(f2, 1)).algebra);
  out.emplace_back("gf3-dualc2", dual_hopf(group_algebra<Fp>(f3, cyclic_group_table(2))).algebra);
  return out;
}

/// Larger algebras, up to dimension 27: the crossed products and double
/// products of the scenario catalog plus a dim-6 triangular algebra.
inline std::vector<std::pair<std::string, AlgebraDef<Fp>>> big_catalog() {
  std::vector<std::pair<std::string, AlgebraDef<Fp>>> out;
  for (std::uint32_t p : {2u, 3u})
    for (const auto& s : catalog_for<Fp>(gf(p))) {
      auto cp = crossed_product(s.bundle);
      out.emplace_back(s.name + ".cross", cp.algebra);
      if (s.name == "scen1-p2" || s.name == "scen2-p3")
        out.emplace_back(s.name + ".double", double_product(cp).algebra);
    }
  out.emplace_back("gf3-ut3", upper_triangular<Fp>(gf(3), 3));
  return out;
}

inline Mat<Fp> random_fp_matrix(std::mt19937& rng, FieldSpec f, Index rows, Index cols) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(f.characteristic) - 1);
  Mat<Fp> m = zeros<Fp>(f, rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Fp(f, dist(rng));
  return m;
}

inline Mat<Rat> random_rat_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  FieldSpec q = rationals();
  Mat<Rat> m = zeros<Rat>(q, rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = Rat::from_string(q, std::to_string(num(rng)) + "/" + std::to_string(den(rng)));
  return m;
}

}  // namespace hopfrad::testsupport
