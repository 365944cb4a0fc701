#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfrad/action.hpp"

namespace hopfrad {

template <class S>
bool is_h_stable(const ActionBundle<S>& b, const Subspace<S>& v) {
  for (Index t = 0; t < v.dim(); ++t)
    for (Index i = 0; i < b.hdim(); ++i)
      if (!v.contains(RowVec<S>(v.basis().row(t) * b.act[static_cast<std::size_t>(i)]))) return false;
  return true;
}

/// (I : H) = {x : H . x <= I}, the largest H-stable ideal inside the ideal I.
/// A single linear system; that the result really is an H-stable two-sided
/// ideal is verified rather than assumed.
template <class S>
Subspace<S> colon_h(const ActionBundle<S>& b, const Subspace<S>& ideal) {
  require_ideal(b.target, ideal, "colon_h");
  FieldSpec f = b.field();
  const Index dr = b.rdim(), n = b.hdim();
  Mat<S> cw = ideal.annihilator();
  Mat<S> cond = zeros<S>(f, dr, n * cw.cols());
  for (Index i = 0; i < n; ++i) {
    Mat<S> block = b.act[static_cast<std::size_t>(i)] * cw;
    for (Index r = 0; r < dr; ++r)
      for (Index c = 0; c < cw.cols(); ++c) cond(r, i * cw.cols() + c) = block(r, c);
  }
  Subspace<S> out = left_kernel<S>(f, cond);
  if (!is_ideal(b.target, out) || !is_h_stable(b, out))
    throw Error::internal("StabilityAssertionFailure", "(I : H) is not an H-stable two-sided ideal");
  return out;
}

/// H-ideal generated by the rows of gens, computed both by span closure and
/// by the closed formula (H.E) + R(H.E) + (H.E)R + R(H.E)R; the two must
/// agree.
template <class S>
Subspace<S> h_ideal_generated(const ActionBundle<S>& b, const Mat<S>& gens) {
  FieldSpec f = b.field();
  const Index dr = b.rdim(), n = b.hdim();
  // closure route
  Subspace<S> v = Subspace<S>::span(f, gens);
  for (Index round = 0; round <= dr; ++round) {
    Mat<S> rows = zeros<S>(f, v.dim() * (2 * dr + n + 1), dr);
    Index r = 0;
    for (Index t = 0; t < v.dim(); ++t) {
      RowVec<S> row = v.basis().row(t);
      rows.row(r++) = row;
      for (Index i = 0; i < n; ++i) rows.row(r++) = row * b.act[static_cast<std::size_t>(i)];
      for (Index j = 0; j < dr; ++j) {
        rows.row(r++) = row * b.target.table[static_cast<std::size_t>(j)];
        rows.row(r++) = row * b.target.rtable[static_cast<std::size_t>(j)];
      }
    }
    Subspace<S> next = Subspace<S>::span(f, rows);
    if (next == v) break;
    if (round == dr) throw Error::internal("ClosureDiverged", "H-ideal closure failed to stabilize");
    v = next;
  }
  // closed formula
  Mat<S> he_rows = zeros<S>(f, gens.rows() * n, dr);
  for (Index g = 0; g < gens.rows(); ++g)
    for (Index i = 0; i < n; ++i) he_rows.row(g * n + i) = gens.row(g) * b.act[static_cast<std::size_t>(i)];
  Subspace<S> he = Subspace<S>::span(f, he_rows);
  Mat<S> formula_rows = zeros<S>(f, he.dim() * (1 + 2 * dr + dr * dr), dr);
  Index r = 0;
  for (Index t = 0; t < he.dim(); ++t) {
    RowVec<S> row = he.basis().row(t);
    formula_rows.row(r++) = row;
    for (Index j = 0; j < dr; ++j) {
      RowVec<S> left = row * b.target.table[static_cast<std::size_t>(j)];
      formula_rows.row(r++) = left;
      formula_rows.row(r++) = row * b.target.rtable[static_cast<std::size_t>(j)];
      for (Index k = 0; k < dr; ++k) formula_rows.row(r++) = left * b.target.rtable[static_cast<std::size_t>(k)];
    }
  }
  Subspace<S> formula = Subspace<S>::span(f, formula_rows);
  if (!(formula == v))
    throw Error::internal("FormulaMismatch", "closed-form H-ideal disagrees with the closure");
  return v;
}

template <class S>
Subspace<S> h_ideal_generated(const ActionBundle<S>& b, const RowVec<S>& gen) {
  Mat<S> m(1, gen.size());
  m.row(0) = gen;
  return h_ideal_generated(b, m);
}

namespace detail {

template <class S>
void check_element_bound(const ActionBundle<S>& b) {
  if (!space_size(b.field(), b.rdim(), kElementEnumBound))
    throw Error::too_large("elementwise search needs |R| <= " + std::to_string(kElementEnumBound) +
                           " over a finite field");
}

/// Span of (H.a) R (H.b) from basis triples.
template <class S>
Subspace<S> sandwich_span(const ActionBundle<S>& b, const RowVec<S>& a, const RowVec<S>& c) {
  FieldSpec f = b.field();
  const Index dr = b.rdim(), n = b.hdim();
  Mat<S> rows = zeros<S>(f, n * dr * n, dr);
  Index r = 0;
  for (Index i = 0; i < n; ++i) {
    RowVec<S> left = a * b.act[static_cast<std::size_t>(i)];
    for (Index j = 0; j < dr; ++j) {
      RowVec<S> mid = left * b.target.rtable[static_cast<std::size_t>(j)];  // (h_i.a) e_j
      for (Index k = 0; k < n; ++k) rows.row(r++) = b.target.mul(mid, RowVec<S>(c * b.act[static_cast<std::size_t>(k)]));
    }
  }
  return Subspace<S>::span(f, rows);
}

}  // namespace detail

/// Element criterion: R is H-semiprime iff (H.a) R (H.a) = 0 forces a = 0.
/// Exhaustive over the finite field; cross-checked against the colon form
/// (r_b(R) : H) = 0 which also serves the infinite-field case.
template <class S>
bool is_h_semiprime(const ActionBundle<S>& b) {
  bool colon_verdict = colon_h(b, baer_radical(b.target).value).is_zero_space();
  if (b.field().characteristic != 0 && space_size(b.field(), b.rdim(), kElementEnumBound)) {
    bool element_verdict = true;
    for (const auto& a : enumerate_vectors<S>(b.field(), b.rdim(), kElementEnumBound)) {
      if (is_zero(a)) continue;
      if (detail::sandwich_span(b, a, a).is_zero_space()) {
        element_verdict = false;
        break;
      }
    }
    if (element_verdict != colon_verdict)
      throw Error::internal("CrossCheckFailure", "H-semiprime element criterion disagrees with (r_b : H)");
  }
  return colon_verdict;
}

/// Element criterion for H-primeness of a proper H-stable ideal.
template <class S>
bool is_h_prime_ideal(const ActionBundle<S>& b, const Subspace<S>& p) {
  if (p.is_full()) throw Error::axiom("PNotProper", "H-prime ideals are required proper");
  require_ideal(b.target, p, "is_h_prime_ideal");
  if (!is_h_stable(b, p)) throw Error::axiom("NotAnIdeal", "H-prime candidate is not H-stable");
  detail::check_element_bound(b);
  auto elements = enumerate_vectors<S>(b.field(), b.rdim(), kElementEnumBound);
  for (const auto& x : elements) {
    if (p.contains(x)) continue;
    for (const auto& y : elements) {
      if (p.contains(y)) continue;
      if (p.contains(detail::sandwich_span(b, x, y))) return false;
    }
  }
  return true;
}

template <class S>
std::vector<Subspace<S>> enumerate_h_ideals(const ActionBundle<S>& b) {
  std::vector<Subspace<S>> out;
  for (auto& i : enumerate_ideals(b.target))
    if (is_h_stable(b, i)) out.push_back(std::move(i));
  return out;
}

/// All H-prime ideals, with the element and H-ideal-pair criteria asserted
/// to agree on the enumerated lattice.
template <class S>
std::vector<Subspace<S>> h_spectrum(const ActionBundle<S>& b) {
  auto h_ideals = enumerate_h_ideals(b);
  std::vector<Subspace<S>> out;
  for (const auto& p : h_ideals) {
    if (p.is_full()) continue;
    bool by_elements = is_h_prime_ideal(b, p);
    bool by_pairs = true;
    for (const auto& i : h_ideals) {
      if (p.contains(i)) continue;
      for (const auto& j : h_ideals) {
        if (p.contains(j)) continue;
        if (p.contains(ideal_product(b.target, i, j))) {
          by_pairs = false;
          break;
        }
      }
      if (!by_pairs) break;
    }
    if (by_elements != by_pairs)
      throw Error::internal("CrossCheckFailure", "H-prime element and ideal-pair criteria disagree");
    if (by_elements) out.push_back(p);
  }
  return out;
}

template <class S>
Subspace<S> h_spectrum_intersection(const ActionBundle<S>& b) {
  Subspace<S> acc = Subspace<S>::full(b.field(), b.rdim());
  for (const auto& p : h_spectrum(b)) acc = intersect(acc, p);
  return acc;
}

/// H-prime radical, as the colon (r_b(R) : H); cross-checked against
/// r_b(R #sigma H) pulled back to R.
template <class S>
Subspace<S> r_hb(const SmashTower<S>& t) {
  const ActionBundle<S>& b = t.cp.bundle;
  Subspace<S> via_colon = colon_h(b, baer_radical(b.target).value);
  Subspace<S> via_top = base_pullback(t.cp, baer_radical(t.cp.algebra).value);
  if (!(via_colon == via_top))
    throw Error::internal("CrossCheckFailure", "(r_b(R):H) != r_b(R#H) pulled back to R");
  return via_colon;
}

/// H-Jacobson radical r_j(R #sigma H) pulled back to R; asserted equal to
/// the colon form (r_j(R) : H).
template <class S>
Subspace<S> r_hj(const SmashTower<S>& t) {
  const ActionBundle<S>& b = t.cp.bundle;
  Subspace<S> via_top = base_pullback(t.cp, jacobson_radical(t.cp.algebra).value);
  Subspace<S> via_colon = colon_h(b, jacobson_radical(b.target).value);
  if (!(via_top == via_colon))
    throw Error::internal("CrossCheckFailure", "r_j(R#H) cap R != (r_j(R):H)");
  return via_top;
}

template <class S>
Subspace<S> r_jh(const ActionBundle<S>& b) {
  return colon_h(b, jacobson_radical(b.target).value);
}

// ---- the m-sequence graph oracle -------------------------------------------

namespace detail {

template <class S>
std::uint64_t index_of_vector(FieldSpec f, const RowVec<S>& v) {
  std::uint64_t idx = 0, mult = 1;
  for (Index j = 0; j < v.size(); ++j) {
    idx += static_cast<std::uint64_t>(v(j).residue()) * mult;
    mult *= f.characteristic;
  }
  return idx;
}

struct SccResult {
  std::vector<int> comp;  // component id per node
  std::vector<int> size;  // component sizes
};

/// Iterative Tarjan on a dense successor structure.
inline SccResult tarjan(const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> low(n, -1), num(n, -1);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t child;
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> frames{{s, 0}};
    num[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.child < adj[fr.v].size()) {
        std::uint32_t w = adj[fr.v][fr.child++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
      } else {
        if (low[fr.v] == num[fr.v]) {
          int id = static_cast<int>(res.size.size());
          int sz = 0;
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = id;
            ++sz;
          } while (w != fr.v);
          res.size.push_back(sz);
        }
        std::uint32_t v = fr.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return res;
}

}  // namespace detail

/// The set of m-sequence-nilpotent elements, by reachability: in the graph
/// with edges x -> (h.x) b (h'.x) over all h, h' in H and b in R, an element
/// is nilpotent iff no nonzero cycle is reachable from it. Since h -> h.x is
/// linear, the middle factors range over the orbit subspace {h.x : h in H}.
/// The result is required to be a subspace.
template <class S>
Subspace<S> w_h_oracle(const ActionBundle<S>& b) {
  FieldSpec f = b.field();
  auto r_size = space_size(f, b.rdim(), kElementEnumBound);
  auto h_size = space_size(f, b.hdim(), 16);
  if (!r_size || !h_size)
    throw Error::too_large("m-sequence oracle needs |R| <= 256 and |H| <= 16 over a finite field");
  const std::uint32_t total = static_cast<std::uint32_t>(*r_size);
  std::vector<RowVec<S>> elems;
  elems.reserve(total);
  for (std::uint32_t i = 0; i < total; ++i) elems.push_back(vector_from_index<S>(f, b.rdim(), i));
  // dense product table
  std::vector<std::uint32_t> prod(static_cast<std::size_t>(total) * total);
  for (std::uint32_t i = 0; i < total; ++i)
    for (std::uint32_t j = 0; j < total; ++j)
      prod[static_cast<std::size_t>(i) * total + j] =
          static_cast<std::uint32_t>(detail::index_of_vector(f, RowVec<S>(b.target.mul(elems[i], elems[j]))));
  // successor sets
  std::vector<std::vector<std::uint32_t>> adj(total);
  std::vector<bool> self_loop(total, false);
  for (std::uint32_t x = 1; x < total; ++x) {
    Mat<S> orbit_rows = zeros<S>(f, b.hdim(), b.rdim());
    for (Index i = 0; i < b.hdim(); ++i) orbit_rows.row(i) = elems[x] * b.act[static_cast<std::size_t>(i)];
    Subspace<S> orbit = Subspace<S>::span(f, orbit_rows);
    std::vector<std::uint32_t> orbit_idx;
    for (const auto& u : enumerate_elements(orbit, kElementEnumBound))
      orbit_idx.push_back(static_cast<std::uint32_t>(detail::index_of_vector(f, u)));
    std::vector<bool> seen(total, false);
    for (std::uint32_t u : orbit_idx)
      for (std::uint32_t mid = 0; mid < total; ++mid) {
        std::uint32_t um = prod[static_cast<std::size_t>(u) * total + mid];
        for (std::uint32_t v : orbit_idx) {
          std::uint32_t y = prod[static_cast<std::size_t>(um) * total + v];
          if (y != 0 && !seen[y]) {
            seen[y] = true;
            adj[x].push_back(y);
            if (y == x) self_loop[x] = true;
          }
        }
      }
  }
  auto scc = detail::tarjan(adj);
  std::vector<bool> bad(total, false);
  for (std::uint32_t x = 1; x < total; ++x)
    if (self_loop[x] || scc.size[static_cast<std::size_t>(scc.comp[x])] > 1) bad[x] = true;
  // backward closure of bad nodes
  std::vector<std::vector<std::uint32_t>> radj(total);
  for (std::uint32_t x = 1; x < total; ++x)
    for (std::uint32_t y : adj[x]) radj[y].push_back(x);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t x = 1; x < total; ++x)
    if (bad[x]) queue.push_back(x);
  while (!queue.empty()) {
    std::uint32_t y = queue.back();
    queue.pop_back();
    for (std::uint32_t x : radj[y])
      if (!bad[x]) {
        bad[x] = true;
        queue.push_back(x);
      }
  }
  Mat<S> rows = zeros<S>(f, total, b.rdim());
  Index r = 0;
  std::uint64_t member_count = 0;
  for (std::uint32_t x = 0; x < total; ++x)
    if (!bad[x]) {
      rows.row(r++) = elems[x];
      ++member_count;
    }
  rows.conservativeResize(r, b.rdim());
  Subspace<S> w = Subspace<S>::span(f, rows);
  if (pow_u64(f.characteristic, static_cast<std::uint64_t>(w.dim()), 1ULL << 62) != member_count)
    throw Error::internal("NotASubspace", "m-sequence-nilpotent set is not a linear subspace");
  return w;
}

// ---- H-von Neumann regularity ----------------------------------------------

/// a is H-regular iff a lies in the span of (h_i . a) e_j (h_k . a).
template <class S>
bool is_h_regular(const ActionBundle<S>& b, const RowVec<S>& a) {
  return detail::sandwich_span(b, a, a).contains(a);
}

/// Multiplication and action restricted to an H-stable ideal (no unit).
template <class S>
struct HModuleView {
  FieldSpec field;
  Index dim = 0;
  Index hdim = 0;
  std::vector<Mat<S>> mul_slices;   // lmat slices in view coordinates
  std::vector<Mat<S>> rmul_slices;
  std::vector<Mat<S>> act;          // act[i] in view coordinates
  Subspace<S> carrier;

  RowVec<S> mul(const RowVec<S>& x, const RowVec<S>& y) const {
    RowVec<S> out = zero_row<S>(field, dim);
    for (Index i = 0; i < dim; ++i)
      if (!x(i).is_zero()) out += x(i) * (y * mul_slices[static_cast<std::size_t>(i)]);
    return out;
  }
};

template <class S>
HModuleView<S> whole_view(const ActionBundle<S>& b) {
  return HModuleView<S>{b.field(), b.rdim(), b.hdim(), b.target.table, b.target.rtable, b.act,
                        Subspace<S>::full(b.field(), b.rdim())};
}

template <class S>
HModuleView<S> ideal_view(const ActionBundle<S>& b, const Subspace<S>& ideal) {
  require_ideal(b.target, ideal, "ideal_view");
  if (!is_h_stable(b, ideal)) throw Error::axiom("NotAnIdeal", "view requires an H-stable ideal");
  FieldSpec f = b.field();
  const Index d = ideal.dim();
  HModuleView<S> v{f, d, b.hdim(), {}, {}, {}, ideal};
  v.mul_slices.assign(static_cast<std::size_t>(d), zeros<S>(f, d, d));
  v.rmul_slices.assign(static_cast<std::size_t>(d), zeros<S>(f, d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      RowVec<S> prod = b.target.mul(RowVec<S>(ideal.basis().row(i)), RowVec<S>(ideal.basis().row(j)));
      RowVec<S> coords = ideal.coordinates(prod);
      v.mul_slices[static_cast<std::size_t>(i)].row(j) = coords;
      v.rmul_slices[static_cast<std::size_t>(j)].row(i) = coords;
    }
  v.act.assign(static_cast<std::size_t>(b.hdim()), zeros<S>(f, d, d));
  for (Index h = 0; h < b.hdim(); ++h)
    for (Index i = 0; i < d; ++i)
      v.act[static_cast<std::size_t>(h)].row(i) =
          ideal.coordinates(RowVec<S>(ideal.basis().row(i) * b.act[static_cast<std::size_t>(h)]));
  return v;
}

namespace detail {

template <class S>
Subspace<S> h_ideal_closure_in_view(const HModuleView<S>& v, const RowVec<S>& a) {
  FieldSpec f = v.field;
  Mat<S> seed = zeros<S>(f, v.hdim, v.dim);
  for (Index i = 0; i < v.hdim; ++i) seed.row(i) = a * v.act[static_cast<std::size_t>(i)];
  Subspace<S> cur = Subspace<S>::span(f, seed);
  for (Index round = 0; round <= v.dim; ++round) {
    Mat<S> rows = zeros<S>(f, cur.dim() * (1 + v.hdim + 2 * v.dim), v.dim);
    Index r = 0;
    for (Index t = 0; t < cur.dim(); ++t) {
      RowVec<S> row = cur.basis().row(t);
      rows.row(r++) = row;
      for (Index i = 0; i < v.hdim; ++i) rows.row(r++) = row * v.act[static_cast<std::size_t>(i)];
      for (Index j = 0; j < v.dim; ++j) {
        rows.row(r++) = row * v.mul_slices[static_cast<std::size_t>(j)];
        rows.row(r++) = row * v.rmul_slices[static_cast<std::size_t>(j)];
      }
    }
    Subspace<S> next = Subspace<S>::span(f, rows);
    if (next == cur) return cur;
    cur = next;
  }
  throw Error::internal("ClosureDiverged", "H-ideal closure in view failed to stabilize");
}

template <class S>
bool is_h_regular_in_view(const HModuleView<S>& v, const RowVec<S>& a) {
  FieldSpec f = v.field;
  Mat<S> rows = zeros<S>(f, v.hdim * v.dim * v.hdim, v.dim);
  Index r = 0;
  for (Index i = 0; i < v.hdim; ++i) {
    RowVec<S> left = a * v.act[static_cast<std::size_t>(i)];
    for (Index j = 0; j < v.dim; ++j) {
      RowVec<S> mid = left * v.rmul_slices[static_cast<std::size_t>(j)];
      for (Index k = 0; k < v.hdim; ++k) rows.row(r++) = v.mul(mid, RowVec<S>(a * v.act[static_cast<std::size_t>(k)]));
    }
  }
  return Subspace<S>::span(f, rows).contains(a);
}

}  // namespace detail

/// r_Hn inside a view: the elements whose generated H-ideal consists of
/// H-regular elements. Exhaustive; requires a small finite carrier.
template <class S>
Subspace<S> r_hn_view(const HModuleView<S>& v) {
  FieldSpec f = v.field;
  if (!space_size(f, v.dim, kElementEnumBound))
    throw Error::too_large("r_Hn enumeration needs |carrier| <= " + std::to_string(kElementEnumBound));
  std::uint64_t member_count = 0;
  Mat<S> rows = zeros<S>(f, 0, v.dim);
  std::vector<RowVec<S>> members;
  for (const auto& a : enumerate_vectors<S>(f, v.dim, kElementEnumBound)) {
    Subspace<S> gen = detail::h_ideal_closure_in_view(v, a);
    bool all_regular = true;
    for (const auto& u : enumerate_elements(gen, kElementEnumBound))
      if (!detail::is_h_regular_in_view(v, u)) {
        all_regular = false;
        break;
      }
    if (all_regular) {
      members.push_back(a);
      ++member_count;
    }
  }
  Mat<S> mrows = zeros<S>(f, static_cast<Index>(members.size()), v.dim);
  for (Index i = 0; i < static_cast<Index>(members.size()); ++i) mrows.row(i) = members[static_cast<std::size_t>(i)];
  Subspace<S> out = Subspace<S>::span(f, mrows);
  if (pow_u64(f.characteristic, static_cast<std::uint64_t>(out.dim()), 1ULL << 62) != member_count)
    throw Error::internal("NotASubspace", "r_Hn member set is not a linear subspace");
  return out;
}

/// H-von Neumann regular radical of the bundle target. Asserted to be an
/// H-stable ideal whose quotient has vanishing r_Hn.
template <class S>
Subspace<S> r_hn(const ActionBundle<S>& b, bool check_quotient = true) {
  Subspace<S> out = r_hn_view(whole_view(b));
  if (!is_ideal(b.target, out) || !is_h_stable(b, out))
    throw Error::internal("AssertionFailure", "r_Hn is not an H-stable ideal");
  if (check_quotient && !out.is_full() && !out.is_zero_space()) {
    ActionBundle<S> qb = quotient_bundle(b, out);
    if (!r_hn(qb, false).is_zero_space())
      throw Error::internal("AssertionFailure", "r_Hn of the quotient by r_Hn is nonzero");
  }
  return out;
}

// ---- gradings through dual group algebras -----------------------------------

template <class S>
struct Grading {
  GroupMeta group;
  std::vector<Subspace<S>> parts;  // indexed by group element
};

/// Reads off the G-grading R_g = p_g . R carried by an action of (kG)*;
/// verifies directness and multiplicativity of the grading.
template <class S>
Grading<S> grading_from_dual(const ActionBundle<S>& b) {
  if (!b.hopf.group || !b.hopf.group->dual)
    throw Error::axiom("NotAGrading", "grading requires an action of a dual group algebra");
  FieldSpec f = b.field();
  Grading<S> g{*b.hopf.group, {}};
  Index dim_sum = 0;
  Subspace<S> total(f, b.rdim());
  for (Index i = 0; i < b.hdim(); ++i) {
    Subspace<S> part = Subspace<S>::span(f, b.act[static_cast<std::size_t>(i)]);
    dim_sum += part.dim();
    total = sum(total, part);
    g.parts.push_back(std::move(part));
  }
  if (dim_sum != b.rdim() || !total.is_full())
    throw Error::axiom("NotAGrading", "homogeneous components do not decompose R");
  for (std::size_t x = 0; x < g.parts.size(); ++x)
    for (std::size_t y = 0; y < g.parts.size(); ++y) {
      int z = g.group.table[x][y];
      Subspace<S> prod = ideal_product(b.target, g.parts[x], g.parts[y]);
      if (!g.parts[static_cast<std::size_t>(z)].contains(prod))
        throw Error::axiom("NotAGrading", "R_g R_h escapes R_{gh}");
    }
  return g;
}

/// Every homogeneous a admits b with a = a b a; equivalently a lies in the
/// span of {a e_j a}.
template <class S>
bool is_gr_regular(const AlgebraDef<S>& r, const Grading<S>& g) {
  for (const auto& part : g.parts)
    for (const auto& a : enumerate_elements(part, kElementEnumBound)) {
      Mat<S> rows = zeros<S>(r.field, r.dim, r.dim);
      for (Index j = 0; j < r.dim; ++j)
        rows.row(j) = r.mul(RowVec<S>(a * r.rtable[static_cast<std::size_t>(j)]), a);
      if (!Subspace<S>::span(r.field, rows).contains(a)) return false;
    }
  return true;
}

/// Every element of R is H-regular (exhaustive over the finite field).
template <class S>
bool is_h_regular_algebra(const ActionBundle<S>& b) {
  detail::check_element_bound(b);
  for (const auto& a : enumerate_vectors<S>(b.field(), b.rdim(), kElementEnumBound))
    if (!is_h_regular(b, a)) return false;
  return true;
}

}  // namespace hopfrad
