#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrad/algebra.hpp"
#include "hopfrad/radical.hpp"

namespace hopfrad {

/// Provenance of a Hopf algebra built from a finite group: the Cayley table
/// plus whether this is the group algebra itself or its dual. Carried so
/// that group-specific checks (gradings, group-algebra theorems) can see the
/// group; always re-verified against the structure tensors on load.
struct GroupMeta {
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;
  bool dual = false;
};

/// Finite-dimensional Hopf algebra: underlying algebra plus comultiplication
/// tensor, counit row and antipode matrix (row i = S(e_i)).
template <class S>
struct HopfDef {
  AlgebraDef<S> algebra;
  std::vector<Mat<S>> delta;  // delta[i](j,k): Delta(e_i) = sum d_ijk e_j (x) e_k
  RowVec<S> counit;
  Mat<S> antipode;
  std::optional<GroupMeta> group;

  Index dim() const { return algebra.dim; }
  FieldSpec field() const { return algebra.field; }

  RowVec<S> antipode_of(const RowVec<S>& x) const { return x * antipode; }
  S counit_of(const RowVec<S>& x) const {
    S out(algebra.field, 0);
    for (Index i = 0; i < algebra.dim; ++i) out += x(i) * counit(i);
    return out;
  }
};

/// (Delta (x) id)Delta as a flat tensor: result[b](x, y*n+z) is the
/// coefficient of e_x (x) e_y (x) e_z in the double coproduct of e_b.
template <class S>
std::vector<Mat<S>> sweedler2(const HopfDef<S>& h) {
  const Index n = h.dim();
  FieldSpec f = h.field();
  std::vector<Mat<S>> out(static_cast<std::size_t>(n), zeros<S>(f, n, n * n));
  for (Index b = 0; b < n; ++b)
    for (Index u = 0; u < n; ++u)
      for (Index z = 0; z < n; ++z) {
        const S& c1 = h.delta[static_cast<std::size_t>(b)](u, z);
        if (c1.is_zero()) continue;
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y) {
            const S& c2 = h.delta[static_cast<std::size_t>(u)](x, y);
            if (!c2.is_zero()) out[static_cast<std::size_t>(b)](x, y * n + z) += c1 * c2;
          }
      }
  return out;
}

/// Verifies the five axiom families (coassociativity, counit laws, Delta and
/// counit being algebra maps, antipode identities) exhaustively on the basis.
template <class S>
HopfDef<S> hopf_make(AlgebraDef<S> algebra, std::vector<Mat<S>> delta, RowVec<S> counit, Mat<S> antipode,
                     std::optional<GroupMeta> group = std::nullopt) {
  const Index n = algebra.dim;
  FieldSpec f = algebra.field;
  if (static_cast<Index>(delta.size()) != n || counit.size() != n || antipode.rows() != n ||
      antipode.cols() != n)
    throw Error::axiom("BadShape", "Hopf structure tensors do not match the algebra dimension");
  for (const auto& d : delta)
    if (d.rows() != n || d.cols() != n) throw Error::axiom("BadShape", "delta slice of wrong shape");

  HopfDef<S> h{std::move(algebra), std::move(delta), std::move(counit), std::move(antipode), std::move(group)};

  for (Index i = 0; i < n; ++i) {
    // coassociativity
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          S lhs(f, 0), rhs(f, 0);
          for (Index u = 0; u < n; ++u) {
            lhs += h.delta[static_cast<std::size_t>(i)](u, c) * h.delta[static_cast<std::size_t>(u)](a, b);
            rhs += h.delta[static_cast<std::size_t>(i)](a, u) * h.delta[static_cast<std::size_t>(u)](b, c);
          }
          if (lhs != rhs)
            throw Error::axiom("CoassociativityViolation", "at basis index " + std::to_string(i));
        }
    // counit laws
    for (Index k = 0; k < n; ++k) {
      S left(f, 0), right(f, 0);
      for (Index j = 0; j < n; ++j) {
        left += h.counit(j) * h.delta[static_cast<std::size_t>(i)](j, k);
        right += h.counit(j) * h.delta[static_cast<std::size_t>(i)](k, j);
      }
      S want(f, i == k ? 1 : 0);
      if (left != want || right != want)
        throw Error::axiom("CounitViolation", "at basis index " + std::to_string(i));
    }
  }

  // Delta is an algebra map
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Mat<S> lhs = zeros<S>(f, n, n);
      for (Index m = 0; m < n; ++m) {
        const S& c = h.algebra.table[static_cast<std::size_t>(a)](b, m);
        if (!c.is_zero()) lhs += c * h.delta[static_cast<std::size_t>(m)];
      }
      Mat<S> rhs = zeros<S>(f, n, n);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          const S& c1 = h.delta[static_cast<std::size_t>(a)](x, y);
          if (c1.is_zero()) continue;
          for (Index u = 0; u < n; ++u)
            for (Index v = 0; v < n; ++v) {
              S c2 = c1 * h.delta[static_cast<std::size_t>(b)](u, v);
              if (c2.is_zero()) continue;
              for (Index s = 0; s < n; ++s) {
                const S& cx = h.algebra.table[static_cast<std::size_t>(x)](u, s);
                if (cx.is_zero()) continue;
                for (Index t = 0; t < n; ++t)
                  rhs(s, t) += c2 * cx * h.algebra.table[static_cast<std::size_t>(y)](v, t);
              }
            }
        }
      if (!equal(lhs, rhs))
        throw Error::axiom("ComultiplicationNotAlgebraMap",
                           "at basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  {
    Mat<S> d1 = zeros<S>(f, n, n);
    for (Index i = 0; i < n; ++i)
      if (!h.algebra.unit(i).is_zero()) d1 += h.algebra.unit(i) * h.delta[static_cast<std::size_t>(i)];
    Mat<S> want = zeros<S>(f, n, n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) want(a, b) = h.algebra.unit(a) * h.algebra.unit(b);
    if (!equal(d1, want)) throw Error::axiom("ComultiplicationNotAlgebraMap", "Delta(1) != 1 (x) 1");
  }

  // counit is an algebra map
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      S lhs(f, 0);
      for (Index m = 0; m < n; ++m)
        lhs += h.algebra.table[static_cast<std::size_t>(a)](b, m) * h.counit(m);
      if (lhs != h.counit(a) * h.counit(b))
        throw Error::axiom("CounitNotAlgebraMap",
                           "at basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  if (h.counit_of(h.algebra.unit) != S(f, 1))
    throw Error::axiom("CounitNotAlgebraMap", "counit(1) != 1");

  // antipode identities
  for (Index i = 0; i < n; ++i) {
    RowVec<S> left = zero_row<S>(f, n), right = zero_row<S>(f, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const S& c = h.delta[static_cast<std::size_t>(i)](j, k);
        if (c.is_zero()) continue;
        left += c * h.algebra.mul(RowVec<S>(h.antipode.row(j)), h.algebra.basis_row(k));
        right += c * h.algebra.mul(h.algebra.basis_row(j), RowVec<S>(h.antipode.row(k)));
      }
    RowVec<S> want = h.counit(i) * h.algebra.unit;
    if (!equal(left, RowVec<S>(want)) || !equal(right, RowVec<S>(want)))
      throw Error::axiom("AntipodeViolation", "at basis index " + std::to_string(i));
  }
  return h;
}

// ---- constructors ----------------------------------------------------------

namespace detail {

inline void validate_group_table(const std::vector<std::vector<int>>& t, int& identity) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw Error::axiom("NotAGroup", "empty Cayley table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw Error::axiom("NotAGroup", "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error::axiom("NotAGroup", "Cayley table entry out of range");
  }
  identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = t[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] == i &&
                                           t[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] == i;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error::axiom("NotAGroup", "no identity element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int ij = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int jk = t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (t[static_cast<std::size_t>(ij)][static_cast<std::size_t>(k)] !=
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(jk)])
          throw Error::axiom("NotAGroup", "Cayley table is not associative");
      }
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n && !has_inverse; ++j)
      has_inverse = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == identity &&
                    t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == identity;
    if (!has_inverse) throw Error::axiom("NotAGroup", "element without inverse");
  }
}

}  // namespace detail

/// Group algebra kG with grouplike basis from a Cayley table.
template <class S>
HopfDef<S> group_algebra(FieldSpec f, const std::vector<std::vector<int>>& cayley,
                         std::vector<std::string> labels = {}) {
  int identity = -1;
  detail::validate_group_table(cayley, identity);
  const Index n = static_cast<Index>(cayley.size());
  if (labels.empty())
    for (Index i = 0; i < n; ++i) labels.push_back(i == identity ? "e" : "g" + std::to_string(i));
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  std::vector<Mat<S>> delta(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  Mat<S> antipode = zeros<S>(f, n, n);
  RowVec<S> counit(n);
  counit.fill(S(f, 1));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i)](j, cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) =
          S(f, 1);
    delta[static_cast<std::size_t>(i)](i, i) = S(f, 1);
    for (Index j = 0; j < n; ++j)
      if (cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == identity) antipode(i, j) = S(f, 1);
  }
  auto alg = algebra_make<S>(f, std::move(table), unit_row<S>(f, n, identity), labels);
  return hopf_make<S>(std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
                      GroupMeta{cayley, labels, false});
}

inline std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return t;
}

/// Dual Hopf algebra on the dual basis: every structure tensor transposed.
template <class S>
HopfDef<S> dual_hopf(const HopfDef<S>& h) {
  const Index n = h.dim();
  FieldSpec f = h.field();
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  std::vector<Mat<S>> delta(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        table[static_cast<std::size_t>(i)](j, k) = h.delta[static_cast<std::size_t>(k)](i, j);
        delta[static_cast<std::size_t>(i)](j, k) = h.algebra.table[static_cast<std::size_t>(j)](k, i);
      }
  RowVec<S> unit = h.counit;
  RowVec<S> counit = h.algebra.unit;
  Mat<S> antipode = h.antipode.transpose();
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back("p(" + h.algebra.label(i) + ")");
  std::optional<GroupMeta> meta;
  if (h.group) meta = GroupMeta{h.group->table, h.group->labels, !h.group->dual};
  auto alg = algebra_make<S>(f, std::move(table), std::move(unit), std::move(labels));
  return hopf_make<S>(std::move(alg), std::move(delta), std::move(counit), std::move(antipode), std::move(meta));
}

/// Restricted enveloping algebra of the one-dimensional restricted Lie
/// algebra with d^p = lambda d: basis 1, d, ..., d^(p-1), d primitive.
template <class S>
HopfDef<S> restricted_env(FieldSpec f, const S& lambda) {
  const std::uint32_t p = f.characteristic;
  if (p == 0) throw Error::axiom("BadField", "restricted enveloping algebra requires characteristic p > 0");
  const Index n = static_cast<Index>(p);
  std::vector<Mat<S>> table(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Index s = i + j;
      S coeff(f, 1);
      while (s >= n) {
        s -= (n - 1);
        coeff *= lambda;
      }
      table[static_cast<std::size_t>(i)](j, s) += coeff;
    }
  // binomial coefficients mod p
  std::vector<std::vector<S>> binom(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n), S(f, 0)));
  for (Index i = 0; i < n; ++i) {
    binom[static_cast<std::size_t>(i)][0] = S(f, 1);
    for (Index k = 1; k <= i; ++k)
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
          (k <= i - 1 ? binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] : S(f, 0));
  }
  std::vector<Mat<S>> delta(static_cast<std::size_t>(n), zeros<S>(f, n, n));
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k <= i; ++k) delta[static_cast<std::size_t>(i)](k, i - k) = binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  RowVec<S> counit = unit_row<S>(f, n, 0);
  Mat<S> antipode = zeros<S>(f, n, n);
  for (Index i = 0; i < n; ++i) antipode(i, i) = (i % 2 == 0) ? S(f, 1) : S(f, -1);
  std::vector<std::string> labels{"1", "d"};
  for (Index i = 2; i < n; ++i) labels.push_back("d^" + std::to_string(i));
  auto alg = algebra_make<S>(f, std::move(table), unit_row<S>(f, n, 0), std::move(labels));
  return hopf_make<S>(std::move(alg), std::move(delta), std::move(counit), std::move(antipode));
}

// ---- integrals and structure predicates ------------------------------------

/// Space of left integrals {L : h L = counit(h) L for all h}.
template <class S>
Subspace<S> left_integral(const HopfDef<S>& h) {
  const Index n = h.dim();
  FieldSpec f = h.field();
  Mat<S> cond = zeros<S>(f, n, n * n);
  for (Index i = 0; i < n; ++i) {
    Mat<S> block = h.algebra.table[static_cast<std::size_t>(i)] - h.counit(i) * identity<S>(f, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) cond(r, i * n + c) = block(r, c);
  }
  return left_kernel<S>(f, cond);
}

/// Maschke criterion: semisimple iff the counit is nonzero on the integrals.
template <class S>
bool is_semisimple(const HopfDef<S>& h) {
  Subspace<S> ints = left_integral(h);
  for (Index i = 0; i < ints.dim(); ++i)
    if (!h.counit_of(RowVec<S>(ints.basis().row(i))).is_zero()) return true;
  return false;
}

template <class S>
bool is_cosemisimple(const HopfDef<S>& h) {
  return is_semisimple(dual_hopf(h));
}

template <class S>
bool is_commutative(const HopfDef<S>& h) {
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j)
      if (!equal(RowVec<S>(h.algebra.table[static_cast<std::size_t>(i)].row(j)),
                 RowVec<S>(h.algebra.table[static_cast<std::size_t>(j)].row(i))))
        return false;
  return true;
}

template <class S>
bool is_cocommutative(const HopfDef<S>& h) {
  for (Index i = 0; i < h.dim(); ++i) {
    const auto& d = h.delta[static_cast<std::size_t>(i)];
    for (Index j = 0; j < h.dim(); ++j)
      for (Index k = j + 1; k < h.dim(); ++k)
        if (d(j, k) != d(k, j)) return false;
  }
  return true;
}

template <class S>
bool is_grouplike(const HopfDef<S>& h, const RowVec<S>& g) {
  if (h.counit_of(g) != S(h.field(), 1)) return false;
  const Index n = h.dim();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      S lhs(h.field(), 0);
      for (Index i = 0; i < n; ++i) lhs += g(i) * h.delta[static_cast<std::size_t>(i)](a, b);
      if (lhs != g(a) * g(b)) return false;
    }
  return true;
}

/// All grouplike elements, by exhaustive search over the finite field.
template <class S>
std::vector<RowVec<S>> grouplikes(const HopfDef<S>& h) {
  std::vector<RowVec<S>> out;
  for (const auto& g : enumerate_vectors<S>(h.field(), h.dim(), 4096))
    if (is_grouplike(h, g)) out.push_back(g);
  return out;
}

}  // namespace hopfrad
