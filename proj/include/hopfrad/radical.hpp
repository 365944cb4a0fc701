#pragma once

#include <string>
#include <vector>

#include "hopfrad/algebra.hpp"

namespace hopfrad {

enum class RadicalKind { r_j, r_b };
enum class RadicalMethod { trace_form, p_chain, nil_ideal_oracle, spectrum_oracle };

inline std::string radical_kind_name(RadicalKind k) { return k == RadicalKind::r_j ? "rj" : "rb"; }

inline std::string radical_method_name(RadicalMethod m) {
  switch (m) {
    case RadicalMethod::trace_form: return "trace_form";
    case RadicalMethod::p_chain: return "p_chain";
    case RadicalMethod::nil_ideal_oracle: return "nil_ideal_oracle";
    case RadicalMethod::spectrum_oracle: return "spectrum_oracle";
  }
  return "?";
}

template <class S>
struct RadicalReport {
  RadicalKind kind = RadicalKind::r_j;
  RadicalMethod method = RadicalMethod::trace_form;
  Subspace<S> value;
  int nilpotency_index = 1;  // least t with value^t = 0
};

namespace detail {

/// Radical of the left-regular trace form, valid in characteristic 0:
/// {x : tr(L_x L_y) = 0 for all basis y}.
template <class S>
Subspace<S> trace_form_radical(const AlgebraDef<S>& a) {
  FieldSpec f = a.field;
  const Index n = a.dim;
  Mat<S> gram = zeros<S>(f, n, n);
  std::vector<Mat<S>> l(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = a.table[static_cast<std::size_t>(i)];
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Mat<S> prod = l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(j)];
      S tr(f, 0);
      for (Index k = 0; k < n; ++k) tr += prod(k, k);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  return left_kernel<S>(f, gram);
}

/// Coefficient of t^(n - k) in the characteristic polynomial of the
/// left-regular matrix of z (n = dim).
template <class S>
S charpoly_coeff(const AlgebraDef<S>& a, const RowVec<S>& z, Index k) {
  auto c = charpoly<S>(a.field, a.lmat(z));
  return c[static_cast<std::size_t>(k)];
}

/// Characteristic-coefficient chain over a prime field. With p^m <= n,
/// descend I_0 = A, I_{k+1} = {x in I_k : coeff_{p^k}(x y) = 0 for all basis
/// y of I_k}; each step is a plain linear system because t^(p^k) = t on the
/// prime field. The final space I_{m+1} is the radical.
template <class S>
Subspace<S> p_chain_radical(const AlgebraDef<S>& a) {
  FieldSpec f = a.field;
  const Index n = a.dim;
  const std::uint64_t p = f.characteristic;
  Subspace<S> cur = Subspace<S>::full(f, n);
  std::uint64_t pk = 1;
  while (pk <= static_cast<std::uint64_t>(n)) {
    const Index r = cur.dim();
    if (r == 0) break;
    Mat<S> w = zeros<S>(f, r, r);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < r; ++j) {
        RowVec<S> prod = a.mul(RowVec<S>(cur.basis().row(i)), RowVec<S>(cur.basis().row(j)));
        w(i, j) = charpoly_coeff(a, prod, static_cast<Index>(pk));
      }
    Subspace<S> coeffs = left_kernel<S>(f, w);
    cur = image(coeffs, cur.basis());
    pk *= p;
  }
  return cur;
}

template <class S>
void verify_radical(const AlgebraDef<S>& a, RadicalReport<S>& rep, bool check_quotient);

template <class S>
RadicalReport<S> jacobson_radical_impl(const AlgebraDef<S>& a, bool check_quotient) {
  RadicalReport<S> rep;
  rep.kind = RadicalKind::r_j;
  if (a.field.characteristic == 0) {
    rep.method = RadicalMethod::trace_form;
    rep.value = trace_form_radical(a);
  } else {
    rep.method = RadicalMethod::p_chain;
    rep.value = p_chain_radical(a);
  }
  verify_radical(a, rep, check_quotient);
  return rep;
}

template <class S>
void verify_radical(const AlgebraDef<S>& a, RadicalReport<S>& rep, bool check_quotient) {
  if (!is_ideal(a, rep.value))
    throw Error::internal("AssertionFailure", "computed radical is not a two-sided ideal");
  auto idx = nilpotency_index(a, rep.value, static_cast<int>(a.dim) + 1);
  if (!idx) throw Error::internal("AssertionFailure", "computed radical is not nilpotent");
  rep.nilpotency_index = *idx;
  if (check_quotient && !rep.value.is_full()) {
    auto q = quotient(a, rep.value);
    auto qrad = jacobson_radical_impl(q.algebra, false);
    if (!qrad.value.is_zero_space())
      throw Error::internal("AssertionFailure", "radical of the quotient by the radical is nonzero");
  }
}

}  // namespace detail

/// Jacobson radical: Dickson trace form in characteristic 0, the
/// characteristic-coefficient chain over GF(p). The result is always
/// verified to be a nilpotent two-sided ideal with semiprimitive quotient.
template <class S>
RadicalReport<S> jacobson_radical(const AlgebraDef<S>& a) {
  return detail::jacobson_radical_impl(a, true);
}

/// Prime radical; coincides with the Jacobson radical in finite dimension.
template <class S>
RadicalReport<S> baer_radical(const AlgebraDef<S>& a) {
  RadicalReport<S> rep = jacobson_radical(a);
  rep.kind = RadicalKind::r_b;
  return rep;
}

/// Sum of all nilpotent ideals, from the full ideal enumeration.
template <class S>
Subspace<S> nil_ideal_oracle(const AlgebraDef<S>& a) {
  Subspace<S> acc(a.field, a.dim);
  for (const auto& i : enumerate_ideals(a))
    if (nilpotency_index(a, i, static_cast<int>(a.dim) + 1)) acc = sum(acc, i);
  return acc;
}

template <class S>
struct SpectrumReport {
  std::vector<Subspace<S>> primes;
  Subspace<S> intersection;
};

/// All proper prime ideals and their intersection.
template <class S>
SpectrumReport<S> spectrum_oracle(const AlgebraDef<S>& a) {
  SpectrumReport<S> out{{}, Subspace<S>::full(a.field, a.dim)};
  for (const auto& i : enumerate_ideals(a)) {
    if (i.is_full()) continue;
    if (is_prime_ideal(a, i)) {
      out.intersection = intersect(out.intersection, i);
      out.primes.push_back(i);
    }
  }
  return out;
}

/// Jacobson radical of a multiplication-closed subspace viewed as an
/// algebra without unit, computed on its unitalization and mapped back to
/// ambient coordinates.
template <class S>
Subspace<S> radical_of_subspace_algebra(const AlgebraDef<S>& a, const Subspace<S>& t) {
  if (t.is_zero_space()) return t;
  auto view = subalgebra_view(a, t);
  auto plus = unitalize(view);
  auto rad = jacobson_radical(plus);
  FieldSpec f = a.field;
  Mat<S> rows = zeros<S>(f, rad.value.dim(), a.dim);
  for (Index i = 0; i < rad.value.dim(); ++i) {
    RowVec<S> v = rad.value.basis().row(i);
    if (!v(0).is_zero())
      throw Error::internal("AssertionFailure", "radical of unitalization leaks the adjoined unit");
    for (Index j = 0; j < view.dim; ++j) rows.row(i) += v(j + 1) * t.basis().row(j);
  }
  return Subspace<S>::span(f, rows);
}

}  // namespace hopfrad
