#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hopfrad/error.hpp"
#include "hopfrad/scalar.hpp"

namespace hopfrad {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Mat<S> zeros(FieldSpec f, Index rows, Index cols) {
  Mat<S> m(rows, cols);
  m.fill(S(f, 0));
  return m;
}

template <class S>
RowVec<S> zero_row(FieldSpec f, Index n) {
  RowVec<S> v(n);
  v.fill(S(f, 0));
  return v;
}

template <class S>
Mat<S> identity(FieldSpec f, Index n) {
  Mat<S> m = zeros<S>(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = S(f, 1);
  return m;
}

template <class S>
RowVec<S> unit_row(FieldSpec f, Index n, Index i) {
  RowVec<S> v = zero_row<S>(f, n);
  v(i) = S(f, 1);
  return v;
}

template <class S>
bool is_zero(const Mat<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S>
bool is_zero(const RowVec<S>& v) {
  for (Index j = 0; j < v.size(); ++j)
    if (!v(j).is_zero()) return false;
  return true;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
bool equal(const RowVec<S>& a, const RowVec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index j = 0; j < a.size(); ++j)
    if (a(j) != b(j)) return false;
  return true;
}

template <class S>
std::vector<std::string> row_strings(const RowVec<S>& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Index j = 0; j < v.size(); ++j) out.push_back(v(j).str());
  return out;
}

template <class S>
struct Rref {
  Mat<S> reduced;               // same shape as input, zero rows at the bottom
  std::vector<Index> pivots;    // strictly increasing pivot columns
  Index rank = 0;
};

/// Unique reduced row echelon form over an exact field.
template <class S>
Rref<S> rref(Mat<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  Rref<S> out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    S inv = m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) / inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S factor = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

/// Canonically stored linear subspace: basis kept in RREF with no zero rows,
/// so equality of subspaces is plain entrywise equality of the bases.
template <class S>
class Subspace {
 public:
  Subspace() : field_{0}, ambient_(0), basis_(0, 0) {}
  Subspace(FieldSpec f, Index ambient) : field_(f), ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(FieldSpec f, const Mat<S>& rows) {
    Subspace out(f, rows.cols());
    auto rr = rref(rows);
    out.basis_ = zeros<S>(f, rr.rank, rows.cols());
    for (Index i = 0; i < rr.rank; ++i) out.basis_.row(i) = rr.reduced.row(i);
    out.pivots_ = std::move(rr.pivots);
    return out;
  }

  static Subspace span_row(FieldSpec f, const RowVec<S>& row) {
    Mat<S> m(1, row.size());
    m.row(0) = row;
    return span(f, m);
  }

  static Subspace full(FieldSpec f, Index n) { return span(f, identity<S>(f, n)); }

  FieldSpec field() const { return field_; }
  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  bool is_zero_space() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Residual of v after eliminating all pivot coordinates.
  RowVec<S> reduce(RowVec<S> v) const {
    for (Index i = 0; i < dim(); ++i) {
      S c = v(pivots_[static_cast<std::size_t>(i)]);
      if (!c.is_zero()) v -= c * basis_.row(i);
    }
    return v;
  }

  bool contains(const RowVec<S>& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(RowVec<S>(other.basis_.row(i)))) return false;
    return true;
  }

  /// Coordinates of v in this basis; requires containment.
  RowVec<S> coordinates(const RowVec<S>& v) const {
    RowVec<S> c = zero_row<S>(field_, dim());
    RowVec<S> rest = v;
    for (Index i = 0; i < dim(); ++i) {
      c(i) = rest(pivots_[static_cast<std::size_t>(i)]);
      if (!c(i).is_zero()) rest -= c(i) * basis_.row(i);
    }
    if (!is_zero(rest)) throw Error::internal("NotContained", "vector outside subspace in coordinates()");
    return c;
  }

  /// Columns C with basis * C = 0; v lies in the subspace iff v * C = 0.
  Mat<S> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  FieldSpec field_;
  Index ambient_;
  Mat<S> basis_;
  std::vector<Index> pivots_;
};

/// Right kernel {x : m x^T = 0}, returned as rows.
template <class S>
Subspace<S> kernel(FieldSpec f, const Mat<S>& m) {
  const Index cols = m.cols();
  auto rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<S> rows = zeros<S>(f, cols - rr.rank, cols);
  Index k = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    rows(k, c) = S(f, 1);
    for (Index i = 0; i < rr.rank; ++i) rows(k, rr.pivots[static_cast<std::size_t>(i)]) = -rr.reduced(i, c);
    ++k;
  }
  return Subspace<S>::span(f, rows);
}

/// Left kernel {v : v m = 0}, returned as rows.
template <class S>
Subspace<S> left_kernel(FieldSpec f, const Mat<S>& m) {
  return kernel<S>(f, Mat<S>(m.transpose()));
}

template <class S>
Mat<S> Subspace<S>::annihilator() const {
  Subspace<S> k = kernel<S>(field_, basis_);
  return Mat<S>(k.basis().transpose());
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw Error::internal("DimensionMismatch", "subspace sum of different ambient dimensions");
  Mat<S> rows = zeros<S>(a.field(), a.dim() + b.dim(), a.ambient());
  for (Index i = 0; i < a.dim(); ++i) rows.row(i) = a.basis().row(i);
  for (Index i = 0; i < b.dim(); ++i) rows.row(a.dim() + i) = b.basis().row(i);
  return Subspace<S>::span(a.field(), rows);
}

/// Intersection via the kernel of the stacked coordinate system:
/// pairs (x, y) with x A + y B = 0 parameterize the common vectors x A.
template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw Error::internal("DimensionMismatch", "subspace intersection of different ambient dimensions");
  FieldSpec f = a.field();
  Mat<S> stacked = zeros<S>(f, a.dim() + b.dim(), a.ambient());
  for (Index i = 0; i < a.dim(); ++i) stacked.row(i) = a.basis().row(i);
  for (Index i = 0; i < b.dim(); ++i) stacked.row(a.dim() + i) = b.basis().row(i);
  Subspace<S> lk = left_kernel<S>(f, stacked);
  Mat<S> rows = zeros<S>(f, lk.dim(), a.ambient());
  for (Index i = 0; i < lk.dim(); ++i) {
    RowVec<S> coeff = lk.basis().row(i);
    RowVec<S> v = zero_row<S>(f, a.ambient());
    for (Index j = 0; j < a.dim(); ++j) v += coeff(j) * a.basis().row(j);
    rows.row(i) = v;
  }
  return Subspace<S>::span(f, rows);
}

/// Image of a subspace under the linear map v -> v * e (rows convention).
template <class S>
Subspace<S> image(const Subspace<S>& v, const Mat<S>& e) {
  return Subspace<S>::span(v.field(), Mat<S>(v.basis() * e));
}

/// Preimage {x : x * e in w} of a subspace under v -> v * e.
template <class S>
Subspace<S> preimage(const Mat<S>& e, const Subspace<S>& w) {
  if (e.cols() != w.ambient())
    throw Error::internal("DimensionMismatch", "preimage map/subspace shape mismatch");
  Mat<S> cond = e * w.annihilator();
  return left_kernel<S>(w.field(), cond);
}

/// One solution of x B = rhs (free variables set to zero), if consistent.
template <class S>
std::optional<RowVec<S>> solve_left(FieldSpec f, const Mat<S>& b, const RowVec<S>& rhs) {
  const Index n = b.rows(), m = b.cols();
  if (rhs.size() != m) throw Error::internal("DimensionMismatch", "solve_left shape mismatch");
  Mat<S> aug = zeros<S>(f, m, n + 1);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) aug(i, j) = b(j, i);
    aug(i, n) = rhs(i);
  }
  auto rr = rref(aug);
  RowVec<S> x = zero_row<S>(f, n);
  for (Index r = 0; r < rr.rank; ++r) {
    Index c = rr.pivots[static_cast<std::size_t>(r)];
    if (c == n) return std::nullopt;  // inconsistent
    x(c) = rr.reduced(r, n);
  }
  return x;
}

/// Deterministic total order on subspaces: by dimension, then basis entries.
template <class S>
bool subspace_less(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.ambient(); ++j) {
      const S &x = a.basis()(i, j), &y = b.basis()(i, j);
      if (x != y) return x < y;
    }
  return false;
}

/// Characteristic polynomial of a square matrix by the division-free
/// Berkowitz recursion. Returns c with det(t I - m) = sum c[i] t^(n-i),
/// c[0] = 1; exact over any commutative coefficient ring.
template <class S>
std::vector<S> charpoly(FieldSpec f, const Mat<S>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw Error::internal("DimensionMismatch", "charpoly of non-square matrix");
  std::vector<S> c{S(f, 1)};
  for (Index r = 1; r <= n; ++r) {
    // Toeplitz column for the leading r x r block.
    std::vector<S> t(static_cast<std::size_t>(r) + 1, S(f, 0));
    t[0] = S(f, 1);
    t[1] = -m(r - 1, r - 1);
    if (r >= 2) {
      RowVec<S> row = m.row(r - 1).head(r - 1);
      Eigen::Matrix<S, Eigen::Dynamic, 1> w = m.col(r - 1).head(r - 1);
      for (Index k = 2; k <= r; ++k) {
        S dot = S(f, 0);
        for (Index j = 0; j < r - 1; ++j) dot += row(j) * w(j);
        t[static_cast<std::size_t>(k)] = -dot;
        if (k < r) w = m.topLeftCorner(r - 1, r - 1) * w;
      }
    }
    std::vector<S> next(static_cast<std::size_t>(r) + 1, S(f, 0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(r); ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

// ---- finite-field enumeration -------------------------------------------

inline std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}

/// Number of vectors in GF(p)^n, or nullopt when over `cap` or char 0.
inline std::optional<std::uint64_t> space_size(FieldSpec f, Index n, std::uint64_t cap) {
  if (f.characteristic == 0) return std::nullopt;
  std::uint64_t total = pow_u64(f.characteristic, static_cast<std::uint64_t>(n), cap);
  if (total > cap) return std::nullopt;
  return total;
}

template <class S>
RowVec<S> vector_from_index(FieldSpec f, Index n, std::uint64_t idx) {
  RowVec<S> v = zero_row<S>(f, n);
  for (Index j = 0; j < n; ++j) {
    v(j) = S(f, static_cast<long long>(idx % f.characteristic));
    idx /= f.characteristic;
  }
  return v;
}

template <class S>
std::vector<RowVec<S>> enumerate_vectors(FieldSpec f, Index n, std::uint64_t cap) {
  auto total = space_size(f, n, cap);
  if (!total)
    throw Error::too_large("cannot enumerate GF(" + std::to_string(f.characteristic) + ")^" +
                           std::to_string(n));
  std::vector<RowVec<S>> out;
  out.reserve(static_cast<std::size_t>(*total));
  for (std::uint64_t i = 0; i < *total; ++i) out.push_back(vector_from_index<S>(f, n, i));
  return out;
}

/// All coefficient combinations over the subspace basis (p^dim elements).
template <class S>
std::vector<RowVec<S>> enumerate_elements(const Subspace<S>& v, std::uint64_t cap) {
  FieldSpec f = v.field();
  auto combos = enumerate_vectors<S>(f, v.dim(), cap);
  std::vector<RowVec<S>> out;
  out.reserve(combos.size());
  for (const auto& c : combos) {
    RowVec<S> x = zero_row<S>(f, v.ambient());
    for (Index j = 0; j < v.dim(); ++j) x += c(j) * v.basis().row(j);
    out.push_back(std::move(x));
  }
  return out;
}

/// All subspaces of GF(p)^n, enumerated as RREF matrices per pivot set.
template <class S>
std::vector<Subspace<S>> enumerate_subspaces(FieldSpec f, Index n) {
  if (f.characteristic == 0) throw Error::too_large("cannot enumerate subspaces over the rationals");
  const std::uint64_t p = f.characteristic;
  std::vector<Subspace<S>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<Index> piv;
    for (Index j = 0; j < n; ++j)
      if (mask & (1ULL << j)) piv.push_back(j);
    const Index r = static_cast<Index>(piv.size());
    // free entries: (i, j) with j > piv[i] and j not itself a pivot column
    std::vector<std::pair<Index, Index>> free_slots;
    for (Index i = 0; i < r; ++i)
      for (Index j = piv[static_cast<std::size_t>(i)] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_slots.emplace_back(i, j);
    std::uint64_t total = pow_u64(p, free_slots.size(), 1ULL << 62);
    for (std::uint64_t asg = 0; asg < total; ++asg) {
      Mat<S> b = zeros<S>(f, r, n);
      std::uint64_t rest = asg;
      for (Index i = 0; i < r; ++i) b(i, piv[static_cast<std::size_t>(i)]) = S(f, 1);
      for (auto [i, j] : free_slots) {
        b(i, j) = S(f, static_cast<long long>(rest % p));
        rest /= p;
      }
      out.push_back(Subspace<S>::span(f, b));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace<S>& a, const Subspace<S>& b) { return subspace_less(a, b); });
  return out;
}

}  // namespace hopfrad
