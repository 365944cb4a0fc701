#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "hopfrad/error.hpp"

namespace hopfrad {

/// Base field selector: characteristic 0 is the rationals, otherwise a
/// prime field GF(p) with p <= 97.
struct FieldSpec {
  std::uint32_t characteristic = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec rationals() { return FieldSpec{0}; }

inline FieldSpec gf(std::uint32_t p) {
  if (!is_prime_u32(p) || p > 97)
    throw Error::axiom("BadField", "characteristic must be a prime <= 97, got " + std::to_string(p));
  return FieldSpec{p};
}

inline FieldSpec make_field(std::uint32_t characteristic) {
  return characteristic == 0 ? rationals() : gf(characteristic);
}

/// Element of a prime field GF(p), canonical residue 0..p-1.
///
/// A default-constructed or int-constructed value carries no modulus yet
/// ("integer literal"); it binds to the modulus of the first bound operand
/// it meets. Eigen's Scalar(0)/Scalar(1) paths produce such literals.
class Fp {
 public:
  Fp() = default;
  explicit Fp(long long v) : v_(v) {}
  Fp(FieldSpec f, long long v) : p_(f.characteristic) {
    if (p_ == 0) throw Error::internal("FieldMismatch", "Fp requires positive characteristic");
    v_ = reduce(v, p_);
  }

  std::uint32_t characteristic() const { return p_; }
  bool bound() const { return p_ != 0; }
  std::int64_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  static Fp from_string(FieldSpec f, std::string_view s);

  std::string str() const { return std::to_string(v_); }

  friend Fp operator+(Fp a, Fp b) {
    align(a, b);
    return make(a.v_ + b.v_, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    align(a, b);
    return make(a.v_ - b.v_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    align(a, b);
    return make(a.v_ * b.v_, a.p_);
  }
  friend Fp operator/(Fp a, Fp b) {
    align(a, b);
    if (b.v_ == 0) throw Error::internal("DivisionByZero", "GF(p) division by zero");
    if (a.p_ == 0) {
      // two literals: only trivial denominators can appear on this path
      if (b.v_ == 1) return a;
      if (b.v_ == -1) return Fp(-a.v_);
      throw Error::internal("FieldMismatch", "unbound GF(p) division");
    }
    return make(a.v_ * inverse_mod(b.v_, a.p_), a.p_);
  }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : make(-v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) {
    align(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
  friend bool operator<(Fp a, Fp b) {
    align(a, b);
    return a.v_ < b.v_;
  }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  static Fp make(std::int64_t v, std::uint32_t p) {
    Fp r;
    r.p_ = p;
    r.v_ = p == 0 ? v : reduce(v, p);
    return r;
  }
  static std::int64_t inverse_mod(std::int64_t a, std::uint32_t p) {
    std::int64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = reduce(r * b, p);
      b = reduce(b * b, p);
      e >>= 1;
    }
    return r;
  }
  static void align(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
      a.v_ = reduce(a.v_, b.p_);
      a.p_ = b.p_;
    } else if (b.p_ == 0) {
      b.v_ = reduce(b.v_, a.p_);
      b.p_ = a.p_;
    } else {
      throw Error::internal("FieldMismatch", "mixed GF(p) moduli " + std::to_string(a.p_) + " and " +
                                                 std::to_string(b.p_));
    }
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline Fp Fp::from_string(FieldSpec f, std::string_view s) {
  if (s.empty()) throw Error::parse("empty GF(p) scalar");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error::parse("bad GF(p) scalar '" + std::string(s) + "'");
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error::parse("bad GF(p) scalar '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
    if (v > (1LL << 40)) throw Error::parse("GF(p) scalar out of range '" + std::string(s) + "'");
  }
  if (s[0] == '-') v = -v;
  return Fp(f, v);
}

/// Arbitrary-precision rational, always in canonical form (reduced,
/// positive denominator). Backed by GMP.
class Rat {
 public:
  Rat() = default;
  explicit Rat(long long v) : v_(static_cast<long>(v)) {}
  Rat(FieldSpec, long long v) : v_(static_cast<long>(v)) {}

  std::uint32_t characteristic() const { return 0; }
  bool is_zero() const { return sgn(v_) == 0; }
  std::int64_t residue() const {
    throw Error::internal("FieldMismatch", "rationals have no modular residue");
  }

  static Rat from_string(FieldSpec, std::string_view s);

  std::string str() const { return v_.get_str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error::internal("DivisionByZero", "rational division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

inline Rat Rat::from_string(FieldSpec, std::string_view s) {
  if (s.empty()) throw Error::parse("empty rational scalar");
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = s;
  if (body[0] == '-' || body[0] == '+') body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok = slash == std::string_view::npos
                ? digits(body)
                : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw Error::parse("bad rational scalar '" + std::string(s) + "'");
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0) throw Error::parse("bad rational scalar '" + std::string(s) + "'");
  if (v.get_den() == 0) throw Error::parse("zero denominator in '" + std::string(s) + "'");
  v.canonicalize();
  Rat r;
  r.v_ = v;
  return r;
}

template <class S>
std::string to_str(const S& s) {
  return s.str();
}

}  // namespace hopfrad

namespace Eigen {

template <>
struct NumTraits<hopfrad::Fp> {
  using Real = hopfrad::Fp;
  using NonInteger = hopfrad::Fp;
  using Literal = hopfrad::Fp;
  using Nested = hopfrad::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 3; }
};

template <>
struct NumTraits<hopfrad::Rat> {
  using Real = hopfrad::Rat;
  using NonInteger = hopfrad::Rat;
  using Literal = hopfrad::Rat;
  using Nested = hopfrad::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 40,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
