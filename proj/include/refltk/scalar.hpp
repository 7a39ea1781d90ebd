#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "refltk/errors.hpp"

namespace refltk {

/// Exact element of Q or of a real quadratic extension Q(sqrt d), stored as
/// a + b*sqrt(d) with rational a, b. The tag d = 0 means the element lies in Q
/// (then b = 0); otherwise d is a square-free integer > 1. Elements of
/// different quadratic fields never mix: arithmetic on incompatible tags
/// throws FieldMismatch. All arithmetic is exact and the representation is
/// canonical (reduced fractions, b = 0 forces d = 0), so operator== decides
/// true field equality.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}   // NOLINT: implicit by design
  Scalar(long v) : a_(v), b_(0), d_(0) {}  // NOLINT
  Scalar(mpq_class v) : a_(std::move(v)), b_(0), d_(0) { a_.canonicalize(); }  // NOLINT
  Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    canonicalize();
  }

  /// The element sqrt(d) of Q(sqrt d).
  static Scalar sqrt_of(long d) {
    require(d > 1, ErrorCode::FieldMismatch, "sqrt tag must be an integer > 1");
    return Scalar(0, 1, d);
  }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  long field_tag() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    long d = merged_tag(x, y);
    return Scalar(raw_t{}, x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    long d = merged_tag(x, y);
    return Scalar(raw_t{}, x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    long d = merged_tag(x, y);
    if (x.b_ == 0 && y.b_ == 0) return Scalar(raw_t{}, x.a_ * y.a_, mpq_class(0), 0);
    return Scalar(raw_t{}, x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar operator-() const {
    Scalar r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero");
    if (b_ == 0) return Scalar(raw_t{}, mpq_class(1) / a_, mpq_class(0), 0);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm cannot vanish
    // for a nonzero element because sqrt(d) is irrational.
    mpq_class norm = a_ * a_ - b_ * b_ * d_;
    return Scalar(raw_t{}, a_ / norm, -b_ / norm, d_);
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Exact sign: -1, 0, or +1 under the real embedding with sqrt(d) > 0.
  int sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // Signs differ: |a| vs |b|*sqrt(d) decides, compare a^2 with b^2 d.
    int cmp = ::cmp(a_ * a_, b_ * b_ * d_);
    return cmp > 0 ? sa : sb;  // cmp == 0 impossible, d is not a square
  }

  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Canonical literal: "-3/2", "r", "1+2r", "-1/2-3r", where r = sqrt(d).
  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string out;
    if (a_ != 0) out += a_.get_str();
    if (b_ > 0 && a_ != 0) out += '+';
    if (b_ == -1)
      out += '-';
    else if (b_ != 1)
      out += b_.get_str();
    out += 'r';
    return out;
  }

  /// Appends a compact canonical byte key (length-prefixed limb export);
  /// injective on canonical values, used for hashing and deterministic order.
  void append_key(std::string& out) const {
    append_mpz_key(out, mpq_numref(a_.get_mpq_t()));
    append_mpz_key(out, mpq_denref(a_.get_mpq_t()));
    append_mpz_key(out, mpq_numref(b_.get_mpq_t()));
    if (b_ != 0) {
      append_mpz_key(out, mpq_denref(b_.get_mpq_t()));
      auto tag = static_cast<std::int16_t>(d_);
      out.append(reinterpret_cast<const char*>(&tag), sizeof(tag));
    }
  }

 private:
  static void append_mpz_key(std::string& out, mpz_srcptr z) {
    auto limbs = static_cast<std::int16_t>(mpz_size(z));
    std::int16_t header = mpz_sgn(z) < 0 ? static_cast<std::int16_t>(-limbs) : limbs;
    out.append(reinterpret_cast<const char*>(&header), sizeof(header));
    if (limbs == 0) return;
    std::size_t old = out.size();
    out.resize(old + static_cast<std::size_t>(limbs) * sizeof(mp_limb_t));
    std::size_t written = 0;
    mpz_export(out.data() + old, &written, -1, sizeof(mp_limb_t), 0, 0, z);
  }

  // GMP arithmetic keeps canonical inputs canonical; this tag skips the
  // reduction pass on operator results.
  struct raw_t {};
  Scalar(raw_t, mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) d_ = 0;
  }

  void canonicalize() {
    if (b_ == 0) {
      d_ = 0;
    } else {
      require(d_ > 1, ErrorCode::FieldMismatch, "radical part over Q requires a field tag > 1");
    }
  }

  static long merged_tag(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    fail(ErrorCode::FieldMismatch, "cannot combine Q(sqrt " + std::to_string(x.d_) +
                                       ") with Q(sqrt " + std::to_string(y.d_) + ")");
  }

  mpq_class a_, b_;
  long d_;
};

inline Scalar abs(const Scalar& x) { return x.abs(); }

/// Parses a reduced rational literal like "7", "-3/2".
mpq_class parse_rational(const std::string& text);

/// Parses a scalar literal in the exact-fraction syntax, where the token 'r'
/// denotes sqrt(field_tag). Literals containing 'r' require field_tag > 1.
Scalar parse_scalar(const std::string& text, long field_tag);

/// True iff d is a square-free integer (no repeated prime factor).
bool is_square_free(long d);

}  // namespace refltk

namespace Eigen {

template <>
struct NumTraits<refltk::Scalar> {
  using Self = refltk::Scalar;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Self epsilon() { return Self(0); }
  static inline Self dummy_precision() { return Self(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
