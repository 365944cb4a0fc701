#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrad/linalg.hpp"

namespace hopfrad {

// Enumeration bounds for brute-force oracles on finite fields.
inline constexpr std::uint64_t kSubspaceEnumBound = 81;   // p^dim for RREF-subspace enumeration
inline constexpr Index kSubspaceEnumDim = 4;
inline constexpr std::uint64_t kPrincipalEnumBound = 6561;  // p^dim for principal-ideal enumeration
inline constexpr std::uint64_t kElementEnumBound = 256;     // |R| for elementwise searches

/// Finite-dimensional associative unital algebra given by structure
/// constants: e_i e_j = sum_k table[i](j, k) e_k. Elements are coefficient
/// row vectors; linear maps act by right multiplication.
template <class S>
struct AlgebraDef {
  FieldSpec field;
  Index dim = 0;
  std::vector<Mat<S>> table;    // table[i](j,k) = c_ijk
  std::vector<Mat<S>> rtable;   // rtable[j](i,k) = c_ijk, right-multiplication slices
  RowVec<S> unit;
  std::vector<std::string> labels;

  /// Matrix of y -> x y.
  Mat<S> lmat(const RowVec<S>& x) const {
    Mat<S> m = zeros<S>(field, dim, dim);
    for (Index i = 0; i < dim; ++i)
      if (!x(i).is_zero()) m += x(i) * table[static_cast<std::size_t>(i)];
    return m;
  }

  /// Matrix of y -> y x.
  Mat<S> rmat(const RowVec<S>& x) const {
    Mat<S> m = zeros<S>(field, dim, dim);
    for (Index j = 0; j < dim; ++j)
      if (!x(j).is_zero()) m += x(j) * rtable[static_cast<std::size_t>(j)];
    return m;
  }

  RowVec<S> mul(const RowVec<S>& x, const RowVec<S>& y) const {
    if (x.size() != dim || y.size() != dim)
      throw Error::internal("DimensionMismatch", "element length does not match algebra dimension");
    RowVec<S> out = zero_row<S>(field, dim);
    for (Index i = 0; i < dim; ++i)
      if (!x(i).is_zero()) out += x(i) * (y * table[static_cast<std::size_t>(i)]);
    return out;
  }

  RowVec<S> power(const RowVec<S>& x, long t) const {
    if (t < 1) throw Error::internal("BadExponent", "power requires t >= 1");
    RowVec<S> acc = x;
    for (long i = 1; i < t; ++i) acc = mul(acc, x);
    return acc;
  }

  RowVec<S> basis_row(Index i) const { return unit_row<S>(field, dim, i); }

  std::string label(Index i) const {
    return i < static_cast<Index>(labels.size()) ? labels[static_cast<std::size_t>(i)]
                                                 : "e" + std::to_string(i);
  }
};

namespace detail {

template <class S>
std::vector<Mat<S>> right_slices(FieldSpec f, Index dim, const std::vector<Mat<S>>& table) {
  std::vector<Mat<S>> r(static_cast<std::size_t>(dim), zeros<S>(f, dim, dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      for (Index k = 0; k < dim; ++k) r[static_cast<std::size_t>(j)](i, k) = table[static_cast<std::size_t>(i)](j, k);
  return r;
}

}  // namespace detail

/// Builds an algebra and verifies associativity and the unit laws on the
/// whole basis; violations carry the witness indices.
template <class S>
AlgebraDef<S> algebra_make(FieldSpec f, std::vector<Mat<S>> table, RowVec<S> unit,
                           std::vector<std::string> labels = {}) {
  const Index n = static_cast<Index>(table.size());
  for (const auto& slice : table)
    if (slice.rows() != n || slice.cols() != n)
      throw Error::axiom("BadShape", "structure tensor must be dim x dim x dim");
  if (unit.size() != n) throw Error::axiom("BadShape", "unit row length does not match dimension");

  AlgebraDef<S> a;
  a.field = f;
  a.dim = n;
  a.table = std::move(table);
  a.rtable = detail::right_slices<S>(f, n, a.table);
  a.unit = std::move(unit);
  a.labels = std::move(labels);

  // (e_i e_j) e_k == e_i (e_j e_k), expanded through precomputed pair rows
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        RowVec<S> lhs = zero_row<S>(f, n);
        RowVec<S> rhs = zero_row<S>(f, n);
        for (Index m = 0; m < n; ++m) {
          const S& cij = a.table[static_cast<std::size_t>(i)](j, m);
          if (!cij.is_zero()) lhs += cij * a.table[static_cast<std::size_t>(m)].row(k);
          const S& cjk = a.table[static_cast<std::size_t>(j)](k, m);
          if (!cjk.is_zero()) rhs += cjk * a.table[static_cast<std::size_t>(i)].row(m);
        }
        if (!equal(lhs, rhs))
          throw Error::axiom("NonAssociative", "(e" + std::to_string(i) + " e" + std::to_string(j) +
                                                   ") e" + std::to_string(k) + " != e" + std::to_string(i) +
                                                   " (e" + std::to_string(j) + " e" + std::to_string(k) + ")");
      }
  for (Index i = 0; i < n; ++i) {
    RowVec<S> ei = a.basis_row(i);
    if (!equal(a.mul(a.unit, ei), ei) || !equal(a.mul(ei, a.unit), ei))
      throw Error::axiom("BadUnit", "unit law fails at basis index " + std::to_string(i));
  }
  return a;
}

// ---- stock algebras -------------------------------------------------------

/// k[x]/(x^n), basis 1, x, ..., x^(n-1).
template <class S>
AlgebraDef<S> truncated_polynomial_algebra(FieldSpec f, Index n) {
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i + j < n) table[static_cast<std::size_t>(i)](j, i + j) = S(f, 1);
  std::vector<std::string> labels{"1"};
  for (Index i = 1; i < n; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  return algebra_make<S>(f, std::move(table), unit_row<S>(f, n, 0), std::move(labels));
}

template <class S>
AlgebraDef<S> scalar_algebra(FieldSpec f) {
  return truncated_polynomial_algebra<S>(f, 1);
}

/// k x k x ... x k with componentwise multiplication.
template <class S>
AlgebraDef<S> diagonal_algebra(FieldSpec f, Index n) {
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  for (Index i = 0; i < n; ++i) table[static_cast<std::size_t>(i)](i, i) = S(f, 1);
  RowVec<S> unit(n);
  unit.fill(S(f, 1));
  return algebra_make<S>(f, std::move(table), std::move(unit));
}

/// n x n matrices over A, basis a (x) E_ij indexed ((i n + j) dim A + a).
template <class S>
AlgebraDef<S> matrix_algebra(const AlgebraDef<S>& a, Index n) {
  if (n < 1) throw Error::axiom("BadShape", "matrix algebra requires n >= 1");
  const Index da = a.dim, d = n * n * da;
  FieldSpec f = a.field;
  auto idx = [&](Index i, Index j, Index m) { return (i * n + j) * da + m; };
  std::vector<Mat<S>> table(static_cast<std::size_t>(d), zeros<S>(f, d, d));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index x = 0; x < da; ++x)
        for (Index l = 0; l < n; ++l)
          for (Index y = 0; y < da; ++y)
            for (Index m = 0; m < da; ++m) {
              const S& c = a.table[static_cast<std::size_t>(x)](y, m);
              if (!c.is_zero()) table[static_cast<std::size_t>(idx(i, j, x))](idx(j, l, y), idx(i, l, m)) += c;
            }
  RowVec<S> unit = zero_row<S>(f, d);
  for (Index i = 0; i < n; ++i)
    for (Index m = 0; m < da; ++m) unit(idx(i, i, m)) = a.unit(m);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index m = 0; m < da; ++m)
        labels.push_back(a.label(m) + ".E" + std::to_string(i + 1) + std::to_string(j + 1));
  return algebra_make<S>(f, std::move(table), std::move(unit), std::move(labels));
}

/// The subspace M_n(V) inside matrix_algebra(a, n).
template <class S>
Subspace<S> matrix_subspace(const AlgebraDef<S>& a, Index n, const Subspace<S>& v) {
  const Index da = a.dim, d = n * n * da;
  FieldSpec f = a.field;
  Mat<S> rows = zeros<S>(f, v.dim() * n * n, d);
  Index r = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < v.dim(); ++t, ++r)
        for (Index m = 0; m < da; ++m) rows(r, (i * n + j) * da + m) = v.basis()(t, m);
  return Subspace<S>::span(f, rows);
}

/// A (x) B with componentwise structure, basis index a dim B + b.
template <class S>
AlgebraDef<S> tensor_algebra(const AlgebraDef<S>& a, const AlgebraDef<S>& b) {
  if (!(a.field == b.field)) throw Error::axiom("FieldMismatch", "tensor factors over different fields");
  const Index da = a.dim, db = b.dim, d = da * db;
  FieldSpec f = a.field;
  std::vector<Mat<S>> table(static_cast<std::size_t>(d), zeros<S>(f, d, d));
  for (Index x = 0; x < da; ++x)
    for (Index y = 0; y < db; ++y)
      for (Index u = 0; u < da; ++u)
        for (Index v = 0; v < db; ++v)
          for (Index p = 0; p < da; ++p)
            for (Index q = 0; q < db; ++q) {
              S c = a.table[static_cast<std::size_t>(x)](u, p) * b.table[static_cast<std::size_t>(y)](v, q);
              if (!c.is_zero()) table[static_cast<std::size_t>(x * db + y)](u * db + v, p * db + q) += c;
            }
  RowVec<S> unit = zero_row<S>(f, d);
  for (Index p = 0; p < da; ++p)
    for (Index q = 0; q < db; ++q) unit(p * db + q) = a.unit(p) * b.unit(q);
  std::vector<std::string> labels;
  for (Index p = 0; p < da; ++p)
    for (Index q = 0; q < db; ++q) labels.push_back(a.label(p) + "(x)" + b.label(q));
  return algebra_make<S>(f, std::move(table), std::move(unit), std::move(labels));
}

// ---- ideals ---------------------------------------------------------------

template <class S>
bool is_ideal(const AlgebraDef<S>& a, const Subspace<S>& v) {
  if (v.ambient() != a.dim) return false;
  for (Index t = 0; t < v.dim(); ++t) {
    RowVec<S> row = v.basis().row(t);
    for (Index j = 0; j < a.dim; ++j) {
      if (!v.contains(RowVec<S>(row * a.table[static_cast<std::size_t>(j)]))) return false;   // e_j row
      if (!v.contains(RowVec<S>(row * a.rtable[static_cast<std::size_t>(j)]))) return false;  // row e_j
    }
  }
  return true;
}

template <class S>
void require_ideal(const AlgebraDef<S>& a, const Subspace<S>& v, const char* where) {
  if (!is_ideal(a, v)) throw Error::axiom("NotAnIdeal", std::string("subspace is not a two-sided ideal in ") + where);
}

/// Smallest two-sided ideal containing the given generators, by span closure
/// under one-sided basis multiplications. The dimension strictly grows until
/// the fixed point, so at most dim iterations are needed.
template <class S>
Subspace<S> ideal_generated(const AlgebraDef<S>& a, const Mat<S>& gens) {
  FieldSpec f = a.field;
  Subspace<S> v = Subspace<S>::span(f, gens);
  for (Index round = 0; round <= a.dim; ++round) {
    Mat<S> rows = zeros<S>(f, v.dim() * (2 * a.dim + 1), a.dim);
    Index r = 0;
    for (Index t = 0; t < v.dim(); ++t) {
      RowVec<S> row = v.basis().row(t);
      rows.row(r++) = row;
      for (Index j = 0; j < a.dim; ++j) {
        rows.row(r++) = row * a.table[static_cast<std::size_t>(j)];
        rows.row(r++) = row * a.rtable[static_cast<std::size_t>(j)];
      }
    }
    Subspace<S> next = Subspace<S>::span(f, rows);
    if (next == v) return v;
    v = next;
  }
  throw Error::internal("ClosureDiverged", "ideal closure failed to stabilize within dim steps");
}

template <class S>
Subspace<S> ideal_generated(const AlgebraDef<S>& a, const RowVec<S>& gen) {
  Mat<S> m(1, gen.size());
  m.row(0) = gen;
  return ideal_generated(a, m);
}

/// Span of pairwise products; a two-sided ideal whenever both inputs are.
template <class S>
Subspace<S> ideal_product(const AlgebraDef<S>& a, const Subspace<S>& i, const Subspace<S>& j) {
  if (i.ambient() != a.dim || j.ambient() != a.dim)
    throw Error::internal("DimensionMismatch", "ideal product in the wrong algebra");
  Mat<S> rows = zeros<S>(a.field, i.dim() * j.dim(), a.dim);
  Index r = 0;
  for (Index s = 0; s < i.dim(); ++s)
    for (Index t = 0; t < j.dim(); ++t)
      rows.row(r++) = a.mul(RowVec<S>(i.basis().row(s)), RowVec<S>(j.basis().row(t)));
  return Subspace<S>::span(a.field, rows);
}

/// Least t <= cap with I^t = 0, if any.
template <class S>
std::optional<int> nilpotency_index(const AlgebraDef<S>& a, const Subspace<S>& i, int cap) {
  Subspace<S> power = i;
  for (int t = 1; t <= cap; ++t) {
    if (power.is_zero_space()) return t;
    power = ideal_product(a, power, i);
  }
  return std::nullopt;
}

// ---- quotients ------------------------------------------------------------

template <class S>
struct Quotient {
  AlgebraDef<S> algebra;
  Mat<S> project;  // dim x q, x -> class of x
  Mat<S> lift;     // q x dim, canonical section; lift * project = identity
};

/// Quotient by a proper two-sided ideal; the quotient basis is the set of
/// non-pivot coordinates of the ideal's RREF basis.
template <class S>
Quotient<S> quotient(const AlgebraDef<S>& a, const Subspace<S>& ideal) {
  require_ideal(a, ideal, "quotient");
  if (ideal.is_full()) throw Error::axiom("QuotientByWholeAlgebra", "quotient requires a proper ideal");
  FieldSpec f = a.field;
  const Index n = a.dim, q = n - ideal.dim();
  std::vector<Index> nonpiv;
  {
    std::vector<bool> piv(static_cast<std::size_t>(n), false);
    for (Index p : ideal.pivots()) piv[static_cast<std::size_t>(p)] = true;
    for (Index c = 0; c < n; ++c)
      if (!piv[static_cast<std::size_t>(c)]) nonpiv.push_back(c);
  }
  Mat<S> lift = zeros<S>(f, q, n);
  for (Index s = 0; s < q; ++s) lift(s, nonpiv[static_cast<std::size_t>(s)]) = S(f, 1);
  Mat<S> project = zeros<S>(f, n, q);
  for (Index i = 0; i < n; ++i) {
    RowVec<S> rest = ideal.reduce(a.basis_row(i));
    for (Index s = 0; s < q; ++s) project(i, s) = rest(nonpiv[static_cast<std::size_t>(s)]);
  }
  std::vector<Mat<S>> table(static_cast<std::size_t>(q), zeros<S>(f, q, q));
  for (Index x = 0; x < q; ++x)
    for (Index y = 0; y < q; ++y)
      table[static_cast<std::size_t>(x)].row(y) =
          a.mul(RowVec<S>(lift.row(x)), RowVec<S>(lift.row(y))) * project;
  std::vector<std::string> labels;
  for (Index s = 0; s < q; ++s) labels.push_back(a.label(nonpiv[static_cast<std::size_t>(s)]) + "~");
  Quotient<S> out{algebra_make<S>(f, std::move(table), RowVec<S>(a.unit * project), std::move(labels)),
                  std::move(project), std::move(lift)};
  return out;
}

// ---- subalgebras without unit --------------------------------------------

/// Multiplication-closed subspace viewed as an algebra (possibly without
/// unit) in its own coordinates.
template <class S>
struct SubalgebraView {
  FieldSpec field;
  Index dim = 0;
  std::vector<Mat<S>> table;
  Subspace<S> carrier;  // rows embed the view back into the ambient algebra

  RowVec<S> mul(const RowVec<S>& x, const RowVec<S>& y) const {
    RowVec<S> out = zero_row<S>(field, dim);
    for (Index i = 0; i < dim; ++i)
      if (!x(i).is_zero()) out += x(i) * (y * table[static_cast<std::size_t>(i)]);
    return out;
  }
};

template <class S>
SubalgebraView<S> subalgebra_view(const AlgebraDef<S>& a, const Subspace<S>& t) {
  SubalgebraView<S> v{a.field, t.dim(), {}, t};
  v.table.assign(static_cast<std::size_t>(t.dim()), zeros<S>(a.field, t.dim(), t.dim()));
  for (Index i = 0; i < t.dim(); ++i)
    for (Index j = 0; j < t.dim(); ++j) {
      RowVec<S> prod = a.mul(RowVec<S>(t.basis().row(i)), RowVec<S>(t.basis().row(j)));
      if (!t.contains(prod))
        throw Error::axiom("NotMultiplicativelyClosed", "subspace is not closed under multiplication");
      v.table[static_cast<std::size_t>(i)].row(j) = t.coordinates(prod);
    }
  return v;
}

/// k (+) T with an adjoined unit at index 0.
template <class S>
AlgebraDef<S> unitalize(const SubalgebraView<S>& v) {
  FieldSpec f = v.field;
  const Index n = v.dim + 1;
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  table[0](0, 0) = S(f, 1);
  for (Index i = 0; i < v.dim; ++i) {
    table[0](i + 1, i + 1) = S(f, 1);
    table[static_cast<std::size_t>(i + 1)](0, i + 1) = S(f, 1);
    for (Index j = 0; j < v.dim; ++j)
      for (Index k = 0; k < v.dim; ++k)
        table[static_cast<std::size_t>(i + 1)](j + 1, k + 1) = v.table[static_cast<std::size_t>(i)](j, k);
  }
  return algebra_make<S>(f, std::move(table), unit_row<S>(f, n, 0));
}

// ---- ideal enumeration and primality --------------------------------------

template <class S>
void check_subspace_enum_bound(const AlgebraDef<S>& a) {
  if (a.field.characteristic == 0)
    throw Error::too_large("exhaustive enumeration requires a finite field");
  if (a.dim > kSubspaceEnumDim || !space_size(a.field, a.dim, kSubspaceEnumBound))
    throw Error::too_large("algebra exceeds the p^dim <= 81, dim <= 4 enumeration bound");
}

/// All two-sided ideals, by filtering the full RREF-subspace enumeration.
template <class S>
std::vector<Subspace<S>> enumerate_ideals(const AlgebraDef<S>& a) {
  check_subspace_enum_bound(a);
  std::vector<Subspace<S>> out;
  for (auto& v : enumerate_subspaces<S>(a.field, a.dim))
    if (is_ideal(a, v)) out.push_back(std::move(v));
  return out;
}

/// All two-sided ideals, as sums of principal ideals. Complete over a finite
/// field: every ideal is spanned by its elements, hence a finite sum of
/// principal ideals; the sum closure below reaches all of them.
template <class S>
std::vector<Subspace<S>> enumerate_ideals_principal(const AlgebraDef<S>& a) {
  if (!space_size(a.field, a.dim, kPrincipalEnumBound))
    throw Error::too_large("algebra exceeds the p^dim <= 6561 principal-ideal enumeration bound");
  std::vector<Subspace<S>> found;
  auto add = [&](const Subspace<S>& s) {
    for (const auto& t : found)
      if (t == s) return false;
    found.push_back(s);
    return true;
  };
  for (const auto& v : enumerate_vectors<S>(a.field, a.dim, kPrincipalEnumBound))
    add(ideal_generated(a, v));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t m = found.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (add(sum(found[i], found[j]))) grew = true;
  }
  std::sort(found.begin(), found.end(),
            [](const Subspace<S>& x, const Subspace<S>& y) { return subspace_less(x, y); });
  return found;
}

/// Element-criterion primality: P is prime iff a R b <= P forces a in P or
/// b in P. Exhaustive over the finite field within the enumeration bound.
template <class S>
bool is_prime_ideal(const AlgebraDef<S>& a, const Subspace<S>& p) {
  if (p.is_full()) throw Error::axiom("PNotProper", "prime ideals are required proper");
  check_subspace_enum_bound(a);
  auto elements = enumerate_vectors<S>(a.field, a.dim, kSubspaceEnumBound);
  auto sandwiched = [&](const RowVec<S>& x, const RowVec<S>& y) {
    for (Index r = 0; r < a.dim; ++r)
      if (!p.contains(a.mul(a.mul(x, a.basis_row(r)), y))) return false;
    return true;
  };
  for (const auto& x : elements) {
    if (p.contains(x)) continue;
    for (const auto& y : elements) {
      if (p.contains(y)) continue;
      if (sandwiched(x, y)) return false;
    }
  }
  return true;
}

template <class S>
bool is_semiprime_ideal(const AlgebraDef<S>& a, const Subspace<S>& p) {
  if (p.is_full()) throw Error::axiom("PNotProper", "semiprime ideals are required proper");
  check_subspace_enum_bound(a);
  for (const auto& x : enumerate_vectors<S>(a.field, a.dim, kSubspaceEnumBound)) {
    if (p.contains(x)) continue;
    bool sandwiched = true;
    for (Index r = 0; r < a.dim && sandwiched; ++r)
      if (!p.contains(a.mul(a.mul(x, a.basis_row(r)), x))) sandwiched = false;
    if (sandwiched) return false;
  }
  return true;
}

/// Ideal-pair primality against a supplied complete ideal list.
template <class S>
bool is_prime_by_ideal_pairs(const AlgebraDef<S>& a, const Subspace<S>& p,
                             const std::vector<Subspace<S>>& ideals) {
  if (p.is_full()) throw Error::axiom("PNotProper", "prime ideals are required proper");
  for (const auto& i : ideals) {
    if (p.contains(i)) continue;
    for (const auto& j : ideals) {
      if (p.contains(j)) continue;
      if (p.contains(ideal_product(a, i, j))) return false;
    }
  }
  return true;
}

}  // namespace hopfrad
