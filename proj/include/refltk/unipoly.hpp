#pragma once

#include <string>
#include <vector>

#include "refltk/scalar.hpp"

namespace refltk {

/// Dense univariate polynomial over Scalar (coefficient of t^i at index i,
/// trailing zeros trimmed; the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Scalar& v) { return UniPoly({v}); }
  static UniPoly one() { return constant(Scalar(1)); }
  /// 1 - t^k.
  static UniPoly one_minus_power(int k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Scalar(1); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Scalar& v) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Exact division with remainder; divisor must be nonzero.
  struct DivMod {
    UniPoly quotient, remainder;
  };
  DivMod divmod(const UniPoly& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor (Euclid over the exact field).
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Reduced rational function num/den with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly::one()) {}
  RatFunc(UniPoly num, UniPoly den);
  static RatFunc of(const UniPoly& p) { return RatFunc(p, UniPoly::one()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_one() const { return num_ == den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc scaled(const Scalar& v) const;
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Power-series coefficients 0..degree; requires den(0) != 0.
  std::vector<Scalar> series(int degree) const;

 private:
  UniPoly num_, den_;
};

}  // namespace refltk
