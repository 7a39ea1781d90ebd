#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "refltk/linalg.hpp"

namespace refltk {

/// Polynomials support up to this many variables; exponents are packed into a
/// fixed-width key so monomial hashing stays allocation-free.
inline constexpr int kMaxPolyVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxPolyVars> e{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Sparse multivariate polynomial over Scalar: monomial -> coefficient map
/// with zero coefficients absent. Serialization uses graded lexicographic
/// monomial order, making printed polynomials canonical.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0);

  static Polynomial constant(int nvars, const Scalar& c);
  static Polynomial variable(int nvars, int i);
  /// Linear form sum_i coeffs(i) * x_i.
  static Polynomial linear_form(const Vec& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;

  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
  }

  /// Substitutes x_i -> sum_j m(i, j) x_j; with m = w^{-1} this is the dual
  /// action (w.f)(x) = f(w^{-1} x) extended multiplicatively from linear forms.
  Polynomial substitute_linear(const Mat& m) const;

  Scalar evaluate(const Vec& point) const;

  /// Terms in graded-lex order (degree, then exponent vector, ascending).
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  int nvars_;
  std::unordered_map<Monomial, Scalar, MonomialHash> terms_;
};

}  // namespace refltk
