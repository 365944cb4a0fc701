#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrad/hopf.hpp"

namespace hopfrad {

/// A weak action of a Hopf algebra on an algebra, with an optional
/// convolution-invertible cocycle. Construction via action_make verifies the
/// measuring axioms and, when a cocycle is present, normality, the cocycle
/// identity and the twisted-module identity; the convolution inverse is
/// always computed, never supplied.
template <class S>
struct ActionBundle {
  HopfDef<S> hopf;
  AlgebraDef<S> target;
  std::vector<Mat<S>> act;        // act[i](j,k): h_i . e_j = sum_k t_ijk e_k
  bool sigma_supplied = false;
  std::vector<Mat<S>> sigma;      // sigma[i].row(j) = sigma(h_i, h_j) in R
  std::vector<Mat<S>> sigma_inv;  // same layout
  std::vector<Mat<S>> d2;         // cached double coproduct of hopf

  Index hdim() const { return hopf.dim(); }
  Index rdim() const { return target.dim; }
  FieldSpec field() const { return target.field; }

  /// Matrix of r -> h . r for a general element h of H.
  Mat<S> act_mat(const RowVec<S>& h) const {
    Mat<S> m = zeros<S>(field(), rdim(), rdim());
    for (Index i = 0; i < hdim(); ++i)
      if (!h(i).is_zero()) m += h(i) * act[static_cast<std::size_t>(i)];
    return m;
  }

  RowVec<S> apply(const RowVec<S>& h, const RowVec<S>& r) const {
    if (h.size() != hdim() || r.size() != rdim())
      throw Error::internal("DimensionMismatch", "action applied to mismatched elements");
    return r * act_mat(h);
  }

  RowVec<S> sigma_of(const RowVec<S>& h, const RowVec<S>& k) const {
    RowVec<S> out = zero_row<S>(field(), rdim());
    for (Index i = 0; i < hdim(); ++i) {
      if (h(i).is_zero()) continue;
      for (Index j = 0; j < hdim(); ++j)
        if (!k(j).is_zero()) out += h(i) * k(j) * sigma[static_cast<std::size_t>(i)].row(j);
    }
    return out;
  }

  bool trivial_sigma() const {
    for (Index i = 0; i < hdim(); ++i)
      for (Index j = 0; j < hdim(); ++j) {
        RowVec<S> want = hopf.counit(i) * hopf.counit(j) * target.unit;
        if (!equal(RowVec<S>(sigma[static_cast<std::size_t>(i)].row(j)), want)) return false;
      }
    return true;
  }
};

namespace detail {

/// Convolution product of two Hom(H (x) H, R) tensors in the sigma layout.
template <class S>
std::vector<Mat<S>> convolve2(const HopfDef<S>& h, const AlgebraDef<S>& r, const std::vector<Mat<S>>& f,
                              const std::vector<Mat<S>>& g) {
  const Index n = h.dim();
  std::vector<Mat<S>> out(static_cast<std::size_t>(n), zeros<S>(r.field, n, r.dim));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      RowVec<S> acc = zero_row<S>(r.field, r.dim);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          const S& c1 = h.delta[static_cast<std::size_t>(i)](a, b);
          if (c1.is_zero()) continue;
          for (Index c = 0; c < n; ++c)
            for (Index d = 0; d < n; ++d) {
              S c2 = c1 * h.delta[static_cast<std::size_t>(j)](c, d);
              if (c2.is_zero()) continue;
              acc += c2 * r.mul(RowVec<S>(f[static_cast<std::size_t>(a)].row(c)),
                                RowVec<S>(g[static_cast<std::size_t>(b)].row(d)));
            }
        }
      out[static_cast<std::size_t>(i)].row(j) = acc;
    }
  return out;
}

template <class S>
std::vector<Mat<S>> trivial_sigma_tensor(const HopfDef<S>& h, const AlgebraDef<S>& r) {
  std::vector<Mat<S>> s(static_cast<std::size_t>(h.dim()), zeros<S>(r.field, h.dim(), r.dim));
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j)
      s[static_cast<std::size_t>(i)].row(j) = h.counit(i) * h.counit(j) * r.unit;
  return s;
}

template <class S>
bool is_counit_unit_tensor(const HopfDef<S>& h, const AlgebraDef<S>& r, const std::vector<Mat<S>>& f) {
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j) {
      RowVec<S> want = h.counit(i) * h.counit(j) * r.unit;
      if (!equal(RowVec<S>(f[static_cast<std::size_t>(i)].row(j)), want)) return false;
    }
  return true;
}

/// Solves sigma * tau = counit (x) counit * 1 for tau. In the
/// finite-dimensional convolution algebra a one-sided inverse is two-sided;
/// both sides are verified regardless.
template <class S>
std::vector<Mat<S>> convolution_inverse2(const HopfDef<S>& h, const AlgebraDef<S>& r,
                                         const std::vector<Mat<S>>& sigma) {
  const Index n = h.dim(), dr = r.dim;
  FieldSpec f = r.field;
  const Index big = n * n * dr;
  Mat<S> system = zeros<S>(f, big, big);
  RowVec<S> rhs = zero_row<S>(f, big);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      for (Index m = 0; m < dr; ++m) rhs((i * n + j) * dr + m) = h.counit(i) * h.counit(j) * r.unit(m);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          const S& c1 = h.delta[static_cast<std::size_t>(i)](a, b);
          if (c1.is_zero()) continue;
          for (Index c = 0; c < n; ++c)
            for (Index d = 0; d < n; ++d) {
              S c2 = c1 * h.delta[static_cast<std::size_t>(j)](c, d);
              if (c2.is_zero()) continue;
              Mat<S> lm = r.lmat(RowVec<S>(sigma[static_cast<std::size_t>(a)].row(c)));
              for (Index m = 0; m < dr; ++m)
                for (Index k = 0; k < dr; ++k)
                  system((b * n + d) * dr + m, (i * n + j) * dr + k) += c2 * lm(m, k);
            }
        }
    }
  auto x = solve_left<S>(f, system, rhs);
  if (!x) throw Error::axiom("NotConvolutionInvertible", "cocycle has no convolution inverse");
  std::vector<Mat<S>> tau(static_cast<std::size_t>(n), zeros<S>(f, n, dr));
  for (Index b = 0; b < n; ++b)
    for (Index d = 0; d < n; ++d)
      for (Index m = 0; m < dr; ++m) tau[static_cast<std::size_t>(b)](d, m) = (*x)((b * n + d) * dr + m);
  if (!is_counit_unit_tensor(h, r, convolve2(h, r, sigma, tau)) ||
      !is_counit_unit_tensor(h, r, convolve2(h, r, tau, sigma)))
    throw Error::axiom("NotConvolutionInvertible", "computed convolution inverse fails a side check");
  return tau;
}

}  // namespace detail

template <class S>
ActionBundle<S> action_make(HopfDef<S> hopf, AlgebraDef<S> target, std::vector<Mat<S>> act,
                            std::optional<std::vector<Mat<S>>> sigma = std::nullopt) {
  const Index n = hopf.dim(), dr = target.dim;
  FieldSpec f = target.field;
  if (!(hopf.field() == f)) throw Error::axiom("FieldMismatch", "Hopf algebra and target over different fields");
  if (static_cast<Index>(act.size()) != n)
    throw Error::axiom("BadShape", "action tensor must have one slice per Hopf basis element");
  for (const auto& m : act)
    if (m.rows() != dr || m.cols() != dr) throw Error::axiom("BadShape", "action slice of wrong shape");
  if (sigma) {
    if (static_cast<Index>(sigma->size()) != n) throw Error::axiom("BadShape", "cocycle tensor of wrong shape");
    for (const auto& m : *sigma)
      if (m.rows() != n || m.cols() != dr) throw Error::axiom("BadShape", "cocycle slice of wrong shape");
  }

  ActionBundle<S> b;
  b.hopf = std::move(hopf);
  b.target = std::move(target);
  b.act = std::move(act);
  b.sigma_supplied = sigma.has_value();
  b.sigma = sigma ? std::move(*sigma) : detail::trivial_sigma_tensor(b.hopf, b.target);
  b.d2 = sweedler2(b.hopf);

  // measuring: h.(ab) = sum (h1.a)(h2.b), h.1 = counit(h) 1, 1.a = a
  for (Index i = 0; i < n; ++i) {
    for (Index a = 0; a < dr; ++a)
      for (Index c = 0; c < dr; ++c) {
        RowVec<S> lhs = b.target.table[static_cast<std::size_t>(a)].row(c) * b.act[static_cast<std::size_t>(i)];
        RowVec<S> rhs = zero_row<S>(f, dr);
        for (Index u = 0; u < n; ++u)
          for (Index v = 0; v < n; ++v) {
            const S& cc = b.hopf.delta[static_cast<std::size_t>(i)](u, v);
            if (cc.is_zero()) continue;
            rhs += cc * b.target.mul(RowVec<S>(b.act[static_cast<std::size_t>(u)].row(a)),
                                     RowVec<S>(b.act[static_cast<std::size_t>(v)].row(c)));
          }
        if (!equal(lhs, rhs))
          throw Error::axiom("MeasuringViolation", "h" + std::to_string(i) + " . (e" + std::to_string(a) +
                                                       " e" + std::to_string(c) + ")");
      }
    RowVec<S> on_unit = b.target.unit * b.act[static_cast<std::size_t>(i)];
    if (!equal(on_unit, RowVec<S>(b.hopf.counit(i) * b.target.unit)))
      throw Error::axiom("MeasuringViolation", "h" + std::to_string(i) + " . 1 != counit(h) 1");
  }
  if (!equal(b.act_mat(b.hopf.algebra.unit), identity<S>(f, dr)))
    throw Error::axiom("MeasuringViolation", "unit of H does not act as the identity");

  // cocycle data
  b.sigma_inv = detail::convolution_inverse2(b.hopf, b.target, b.sigma);
  for (Index i = 0; i < n; ++i) {
    RowVec<S> want = b.hopf.counit(i) * b.target.unit;
    if (!equal(b.sigma_of(b.hopf.algebra.basis_row(i), b.hopf.algebra.unit), want) ||
        !equal(b.sigma_of(b.hopf.algebra.unit, b.hopf.algebra.basis_row(i)), want))
      throw Error::axiom("CocycleViolation", "cocycle is not normal at basis index " + std::to_string(i));
  }
  // cocycle identity: sum [h1.sigma(k1,m1)] sigma(h2, k2 m2) = sum sigma(h1,k1) sigma(h1 k2, m)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        RowVec<S> lhs = zero_row<S>(f, dr), rhs = zero_row<S>(f, dr);
        for (Index u = 0; u < n; ++u)
          for (Index v = 0; v < n; ++v) {
            const S& ci = b.hopf.delta[static_cast<std::size_t>(i)](u, v);
            if (ci.is_zero()) continue;
            for (Index s = 0; s < n; ++s)
              for (Index t = 0; t < n; ++t) {
                S cj = ci * b.hopf.delta[static_cast<std::size_t>(j)](s, t);
                if (cj.is_zero()) continue;
                // rhs term: sigma(u,s) sigma(v t, l)
                RowVec<S> tail = zero_row<S>(f, dr);
                for (Index w = 0; w < n; ++w) {
                  const S& cw = b.hopf.algebra.table[static_cast<std::size_t>(v)](t, w);
                  if (!cw.is_zero()) tail += cw * b.sigma[static_cast<std::size_t>(w)].row(l);
                }
                rhs += cj * b.target.mul(RowVec<S>(b.sigma[static_cast<std::size_t>(u)].row(s)), tail);
                // lhs term: [h_u . sigma(s, m1)] sigma(v, t m2)
                for (Index a = 0; a < n; ++a)
                  for (Index c2 = 0; c2 < n; ++c2) {
                    S cl = cj * b.hopf.delta[static_cast<std::size_t>(l)](a, c2);
                    if (cl.is_zero()) continue;
                    RowVec<S> head =
                        b.sigma[static_cast<std::size_t>(s)].row(a) * b.act[static_cast<std::size_t>(u)];
                    RowVec<S> tail2 = zero_row<S>(f, dr);
                    for (Index w = 0; w < n; ++w) {
                      const S& cw = b.hopf.algebra.table[static_cast<std::size_t>(t)](c2, w);
                      if (!cw.is_zero()) tail2 += cw * b.sigma[static_cast<std::size_t>(v)].row(w);
                    }
                    lhs += cl * b.target.mul(head, tail2);
                  }
              }
          }
        if (!equal(lhs, rhs))
          throw Error::axiom("CocycleViolation", "cocycle identity fails at (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ", " + std::to_string(l) + ")");
      }
  // twisted module: h.(k.r) = sum sigma(h1,k1) ((h2 k2).r) sigma^{-1}(h3,k3)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index r0 = 0; r0 < dr; ++r0) {
        RowVec<S> lhs = (b.target.basis_row(r0) * b.act[static_cast<std::size_t>(j)]) *
                        b.act[static_cast<std::size_t>(i)];
        RowVec<S> rhs = zero_row<S>(f, dr);
        const Mat<S>& d2i = b.d2[static_cast<std::size_t>(i)];
        const Mat<S>& d2j = b.d2[static_cast<std::size_t>(j)];
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y)
            for (Index z = 0; z < n; ++z) {
              const S& ci = d2i(x, y * n + z);
              if (ci.is_zero()) continue;
              for (Index s = 0; s < n; ++s)
                for (Index t = 0; t < n; ++t)
                  for (Index u = 0; u < n; ++u) {
                    S cj = ci * d2j(s, t * n + u);
                    if (cj.is_zero()) continue;
                    RowVec<S> mid = zero_row<S>(f, dr);
                    for (Index w = 0; w < n; ++w) {
                      const S& cw = b.hopf.algebra.table[static_cast<std::size_t>(y)](t, w);
                      if (!cw.is_zero()) mid += cw * (b.target.basis_row(r0) * b.act[static_cast<std::size_t>(w)]);
                    }
                    RowVec<S> term = b.target.mul(RowVec<S>(b.sigma[static_cast<std::size_t>(x)].row(s)), mid);
                    term = b.target.mul(term, RowVec<S>(b.sigma_inv[static_cast<std::size_t>(z)].row(u)));
                    rhs += cj * term;
                  }
            }
        if (!equal(lhs, rhs))
          throw Error::axiom("TwistedModuleViolation", "at (h" + std::to_string(i) + ", h" + std::to_string(j) +
                                                           ", e" + std::to_string(r0) + ")");
      }
  return b;
}

template <class S>
ActionBundle<S> trivial_bundle(const HopfDef<S>& hopf, const AlgebraDef<S>& target) {
  std::vector<Mat<S>> act(static_cast<std::size_t>(hopf.dim()), zeros<S>(target.field, target.dim, target.dim));
  for (Index i = 0; i < hopf.dim(); ++i)
    act[static_cast<std::size_t>(i)] = hopf.counit(i) * identity<S>(target.field, target.dim);
  return action_make<S>(hopf, target, std::move(act));
}

/// Inner weak action h . r = sum u(h1) r u^{-1}(h2) from a convolution
/// invertible u : H -> R with u(1) = 1.
template <class S>
ActionBundle<S> inner_bundle(const HopfDef<S>& hopf, const AlgebraDef<S>& target, const Mat<S>& u,
                             std::optional<std::vector<Mat<S>>> sigma = std::nullopt) {
  const Index n = hopf.dim(), dr = target.dim;
  FieldSpec f = target.field;
  if (u.rows() != n || u.cols() != dr) throw Error::axiom("BadShape", "inner witness of wrong shape");
  if (!equal(RowVec<S>(hopf.algebra.unit * u), target.unit))
    throw Error::axiom("BadInnerWitness", "u(1) != 1");
  // one-variable convolution inverse: sum u(h1) v(h2) = counit(h) 1
  Mat<S> system = zeros<S>(f, n * dr, n * dr);
  RowVec<S> rhs = zero_row<S>(f, n * dr);
  for (Index i = 0; i < n; ++i) {
    for (Index m = 0; m < dr; ++m) rhs(i * dr + m) = hopf.counit(i) * target.unit(m);
    for (Index a = 0; a < n; ++a)
      for (Index c = 0; c < n; ++c) {
        const S& cc = hopf.delta[static_cast<std::size_t>(i)](a, c);
        if (cc.is_zero()) continue;
        Mat<S> lm = target.lmat(RowVec<S>(u.row(a)));
        for (Index m = 0; m < dr; ++m)
          for (Index k = 0; k < dr; ++k) system(c * dr + m, i * dr + k) += cc * lm(m, k);
      }
  }
  auto x = solve_left<S>(f, system, rhs);
  if (!x) throw Error::axiom("BadInnerWitness", "u has no convolution inverse");
  Mat<S> uinv = zeros<S>(f, n, dr);
  for (Index c = 0; c < n; ++c)
    for (Index m = 0; m < dr; ++m) uinv(c, m) = (*x)(c * dr + m);
  std::vector<Mat<S>> act(static_cast<std::size_t>(n), zeros<S>(f, dr, dr));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < dr; ++j) {
      RowVec<S> acc = zero_row<S>(f, dr);
      for (Index a = 0; a < n; ++a)
        for (Index c = 0; c < n; ++c) {
          const S& cc = hopf.delta[static_cast<std::size_t>(i)](a, c);
          if (cc.is_zero()) continue;
          acc += cc * target.mul(target.mul(RowVec<S>(u.row(a)), target.basis_row(j)), RowVec<S>(uinv.row(c)));
        }
      act[static_cast<std::size_t>(i)].row(j) = acc;
    }
  return action_make<S>(hopf, target, std::move(act), std::move(sigma));
}

// ---- crossed products -------------------------------------------------------

/// R #sigma H on basis (e_r # h_j), index r dimH + j, with the multiplication
/// (a#h)(b#k) = sum a (h1.b) sigma(h2,k1) # h3 k2. Associativity and the unit
/// are re-verified exhaustively on construction.
template <class S>
struct CrossedProduct {
  ActionBundle<S> bundle;
  AlgebraDef<S> algebra;
  Mat<S> embed_r;    // dimR x dimA, r -> r # 1
  Mat<S> section_h;  // dimH x dimA, h -> 1 # h
  Subspace<S> r_image;

  Index aindex(Index r, Index h) const { return r * bundle.hdim() + h; }
};

template <class S>
CrossedProduct<S> crossed_product(const ActionBundle<S>& b) {
  const Index n = b.hdim(), dr = b.rdim(), da = dr * n;
  FieldSpec f = b.field();
  std::vector<Mat<S>> table(static_cast<std::size_t>(da), zeros<S>(f, da, da));
  for (Index a = 0; a < dr; ++a)
    for (Index h = 0; h < n; ++h) {
      const Mat<S>& d2h = b.d2[static_cast<std::size_t>(h)];
      Mat<S>& slice = table[static_cast<std::size_t>(a * n + h)];
      for (Index c = 0; c < dr; ++c)
        for (Index k = 0; k < n; ++k)
          for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
              for (Index z = 0; z < n; ++z) {
                const S& ch = d2h(x, y * n + z);
                if (ch.is_zero()) continue;
                for (Index s = 0; s < n; ++s)
                  for (Index t = 0; t < n; ++t) {
                    S ck = ch * b.hopf.delta[static_cast<std::size_t>(k)](s, t);
                    if (ck.is_zero()) continue;
                    RowVec<S> rpart = b.target.mul(
                        b.target.mul(b.target.basis_row(a), RowVec<S>(b.act[static_cast<std::size_t>(x)].row(c))),
                        RowVec<S>(b.sigma[static_cast<std::size_t>(y)].row(s)));
                    for (Index w = 0; w < n; ++w) {
                      S cw = ck * b.hopf.algebra.table[static_cast<std::size_t>(z)](t, w);
                      if (cw.is_zero()) continue;
                      for (Index m = 0; m < dr; ++m)
                        if (!rpart(m).is_zero()) slice(c * n + k, m * n + w) += cw * rpart(m);
                    }
                  }
              }
    }
  RowVec<S> unit = zero_row<S>(f, da);
  for (Index r = 0; r < dr; ++r)
    for (Index h = 0; h < n; ++h) unit(r * n + h) = b.target.unit(r) * b.hopf.algebra.unit(h);
  std::vector<std::string> labels;
  for (Index r = 0; r < dr; ++r)
    for (Index h = 0; h < n; ++h) labels.push_back(b.target.label(r) + "#" + b.hopf.algebra.label(h));

  CrossedProduct<S> cp{b, algebra_make<S>(f, std::move(table), std::move(unit), std::move(labels)),
                       Mat<S>(), Mat<S>(), Subspace<S>(f, da)};
  cp.embed_r = zeros<S>(f, dr, da);
  for (Index r = 0; r < dr; ++r)
    for (Index h = 0; h < n; ++h) cp.embed_r(r, r * n + h) = b.hopf.algebra.unit(h);
  cp.section_h = zeros<S>(f, n, da);
  for (Index h = 0; h < n; ++h)
    for (Index r = 0; r < dr; ++r) cp.section_h(h, r * n + h) = b.target.unit(r);
  cp.r_image = Subspace<S>::span(f, cp.embed_r);
  for (Index x = 0; x < dr; ++x)
    for (Index y = 0; y < dr; ++y) {
      RowVec<S> lhs = b.target.mul(b.target.basis_row(x), b.target.basis_row(y)) * cp.embed_r;
      RowVec<S> rhs = cp.algebra.mul(RowVec<S>(cp.embed_r.row(x)), RowVec<S>(cp.embed_r.row(y)));
      if (!equal(lhs, rhs))
        throw Error::internal("AssertionFailure", "base embedding is not an algebra map");
    }
  return cp;
}

/// The subspace I #sigma H of the crossed product, for a subspace I of R.
template <class S>
Subspace<S> hash_subspace(const CrossedProduct<S>& cp, const Subspace<S>& i) {
  const Index n = cp.bundle.hdim(), da = cp.algebra.dim;
  FieldSpec f = cp.algebra.field;
  Mat<S> rows = zeros<S>(f, i.dim() * n, da);
  Index r = 0;
  for (Index t = 0; t < i.dim(); ++t)
    for (Index h = 0; h < n; ++h, ++r)
      for (Index m = 0; m < i.ambient(); ++m) rows(r, m * n + h) = i.basis()(t, m);
  return Subspace<S>::span(f, rows);
}

/// Pullback {r in R : r # 1 in W} of a subspace of the crossed product.
template <class S>
Subspace<S> base_pullback(const CrossedProduct<S>& cp, const Subspace<S>& w) {
  return preimage<S>(cp.embed_r, w);
}

/// The dual Hopf algebra acting on the crossed product by f.(a#h) = f(h2) a#h1.
template <class S>
ActionBundle<S> dual_action(const CrossedProduct<S>& cp) {
  const Index n = cp.bundle.hdim(), dr = cp.bundle.rdim(), da = cp.algebra.dim;
  FieldSpec f = cp.algebra.field;
  std::vector<Mat<S>> act(static_cast<std::size_t>(n), zeros<S>(f, da, da));
  for (Index ff = 0; ff < n; ++ff)
    for (Index c = 0; c < dr; ++c)
      for (Index j = 0; j < n; ++j)
        for (Index u = 0; u < n; ++u) {
          const S& cc = cp.bundle.hopf.delta[static_cast<std::size_t>(j)](u, ff);
          if (!cc.is_zero()) act[static_cast<std::size_t>(ff)](c * n + j, c * n + u) += cc;
        }
  return action_make<S>(dual_hopf(cp.bundle.hopf), cp.algebra, std::move(act));
}

template <class S>
CrossedProduct<S> double_product(const CrossedProduct<S>& cp) {
  return crossed_product(dual_action(cp));
}

/// A crossed product together with its dual action and double product
/// (R #sigma H) # H*; the carrier for the ideal correspondence.
template <class S>
struct SmashTower {
  CrossedProduct<S> cp;    // A = R #sigma H
  ActionBundle<S> dual;    // H* acting on A
  CrossedProduct<S> dcp;   // A # H*
  Mat<S> embed_r_full;     // dimR x dim(A#H*)

  /// Module action of the basis element (e_c # p_f) of A#H* on e_b of A.
  RowVec<S> module_apply(Index c, Index f, Index b) const {
    return cp.algebra.mul(cp.algebra.basis_row(c), RowVec<S>(dual.act[static_cast<std::size_t>(f)].row(b)));
  }
};

template <class S>
SmashTower<S> smash_tower(const ActionBundle<S>& b) {
  CrossedProduct<S> cp = crossed_product(b);
  ActionBundle<S> dual = dual_action(cp);
  CrossedProduct<S> dcp = crossed_product(dual);
  Mat<S> embed_full = cp.embed_r * dcp.embed_r;
  return SmashTower<S>{std::move(cp), std::move(dual), std::move(dcp), std::move(embed_full)};
}

/// The ideal correspondence I(R) -> I((R#sigma H)#H*). The general route
/// realizes A#H* as endomorphisms of A as a right R-module and takes
/// {u : u A <= A I}; for H-stable I the explicit (I #sigma H) # H* form is
/// also computed and both are required to agree.
template <class S>
Subspace<S> phi_map(const SmashTower<S>& t, const Subspace<S>& i, bool h_stable = false) {
  require_ideal(t.cp.bundle.target, i, "phi_map");
  const Index da = t.cp.algebra.dim, big = t.dcp.algebra.dim;
  FieldSpec f = t.cp.algebra.field;
  const Index n = t.cp.bundle.hdim();
  // A I as a subspace of A
  Mat<S> ai_rows = zeros<S>(f, da * i.dim(), da);
  Index r = 0;
  for (Index a = 0; a < da; ++a)
    for (Index v = 0; v < i.dim(); ++v, ++r)
      ai_rows.row(r) = t.cp.algebra.mul(t.cp.algebra.basis_row(a), RowVec<S>(i.basis().row(v) * t.cp.embed_r));
  Subspace<S> ai = Subspace<S>::span(f, ai_rows);
  Mat<S> cw = ai.annihilator();
  Mat<S> cond = zeros<S>(f, big, da * cw.cols());
  for (Index c = 0; c < da; ++c)
    for (Index ff = 0; ff < n; ++ff) {
      const Index row = c * n + ff;
      for (Index b = 0; b < da; ++b) {
        RowVec<S> res = t.module_apply(c, ff, b) * cw;
        for (Index s = 0; s < cw.cols(); ++s) cond(row, b * cw.cols() + s) = res(s);
      }
    }
  Subspace<S> phi = left_kernel<S>(f, cond);
  require_ideal(t.dcp.algebra, phi, "phi_map image");
  if (h_stable) {
    Subspace<S> direct = hash_subspace(t.dcp, hash_subspace(t.cp, i));
    if (!(direct == phi))
      throw Error::internal("AssertionFailure", "stable-ideal route disagrees with the module route in phi_map");
  }
  return phi;
}

/// Inverse correspondence: J -> {r in R : A r <= J A}; the round trip
/// phi(psi(J)) = J is asserted.
template <class S>
Subspace<S> psi_map(const SmashTower<S>& t, const Subspace<S>& j) {
  require_ideal(t.dcp.algebra, j, "psi_map");
  const Index da = t.cp.algebra.dim, dr = t.cp.bundle.rdim();
  FieldSpec f = t.cp.algebra.field;
  const Index n = t.cp.bundle.hdim();
  // J A as a subspace of A
  Mat<S> ja_rows = zeros<S>(f, j.dim() * da, da);
  Index r = 0;
  for (Index u = 0; u < j.dim(); ++u)
    for (Index b = 0; b < da; ++b, ++r) {
      RowVec<S> acc = zero_row<S>(f, da);
      for (Index c = 0; c < da; ++c)
        for (Index ff = 0; ff < n; ++ff) {
          const S& coeff = j.basis()(u, c * n + ff);
          if (!coeff.is_zero()) acc += coeff * t.module_apply(c, ff, b);
        }
      ja_rows.row(r) = acc;
    }
  Subspace<S> ja = Subspace<S>::span(f, ja_rows);
  Mat<S> cw = ja.annihilator();
  Mat<S> cond = zeros<S>(f, dr, da * cw.cols());
  for (Index x = 0; x < dr; ++x) {
    RowVec<S> embedded = t.cp.embed_r.row(x);
    for (Index a = 0; a < da; ++a) {
      RowVec<S> res = t.cp.algebra.mul(t.cp.algebra.basis_row(a), embedded) * cw;
      for (Index s = 0; s < cw.cols(); ++s) cond(x, a * cw.cols() + s) = res(s);
    }
  }
  Subspace<S> out = left_kernel<S>(f, cond);
  require_ideal(t.cp.bundle.target, out, "psi_map image");
  if (!(phi_map(t, out) == j))
    throw Error::internal("NoPreimage", "phi(psi(J)) != J; the correspondence is not surjective here");
  return out;
}

/// Restriction of a bundle to the quotient by an H-stable ideal.
template <class S>
ActionBundle<S> quotient_bundle(const ActionBundle<S>& b, const Subspace<S>& ideal) {
  auto q = quotient(b.target, ideal);
  const Index n = b.hdim(), dq = q.algebra.dim;
  std::vector<Mat<S>> act(static_cast<std::size_t>(n), zeros<S>(b.field(), dq, dq));
  for (Index i = 0; i < n; ++i)
    act[static_cast<std::size_t>(i)] = q.lift * b.act[static_cast<std::size_t>(i)] * q.project;
  std::optional<std::vector<Mat<S>>> sigma;
  if (b.sigma_supplied) {
    sigma.emplace(static_cast<std::size_t>(n), zeros<S>(b.field(), n, dq));
    for (Index i = 0; i < n; ++i) (*sigma)[static_cast<std::size_t>(i)] = b.sigma[static_cast<std::size_t>(i)] * q.project;
  }
  return action_make<S>(b.hopf, q.algebra, std::move(act), std::move(sigma));
}

}  // namespace hopfrad
