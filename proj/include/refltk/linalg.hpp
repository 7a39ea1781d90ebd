#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "refltk/scalar.hpp"

namespace refltk {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Result of exact Gauss-Jordan elimination.
struct Echelon {
  Mat mat;                  // reduced row-echelon form, zero rows trimmed
  std::vector<int> pivots;  // pivot column per row of mat
};

/// Reduced row-echelon form over the exact field (pivots normalized to 1).
Echelon rref(const Mat& m);

int rank(const Mat& m);

/// Exact determinant via elimination; requires a square matrix.
Scalar determinant(const Mat& m);

/// Exact inverse; throws SingularGram if the matrix is not invertible.
Mat inverse(const Mat& m);

bool mat_eq(const Mat& x, const Mat& y);
bool is_identity(const Mat& m);

/// Canonical byte key of a matrix (entry-wise canonical scalar keys); equal
/// keys iff equal matrices, suitable for hashing and deterministic ordering.
std::string mat_key(const Mat& m);
std::string vec_key(const Vec& v);

/// Lexicographic order on vectors under the exact real embedding.
int lex_compare(const Vec& x, const Vec& y);

/// Scales v so its first nonzero coordinate is 1: the canonical representative
/// of the line K*v. Returns the zero vector unchanged.
Vec monic(const Vec& v);

/// Sign of the coefficient relating v to monic(v): +1, -1, or 0 for v = 0.
int monic_sign(const Vec& v);

/// Clears denominators and divides by the integer content of all rational
/// coordinates (both parts of quadratic entries), then fixes the sign so the
/// first nonzero coordinate is positive. Deterministic integral scaling used
/// for display and for class representatives.
Vec content_normalize(const Vec& v);

/// Subspace of an ambient exact vector space, held as a row-basis in reduced
/// row-echelon form so that equality and containment are pure data checks.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Canonicalizes an arbitrary spanning set (rows) into an RREF basis.
  static Subspace from_rows(const Mat& rows);
  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  /// True iff *this is contained in other (ambient dims must agree).
  bool leq(const Subspace& other) const;
  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && mat_eq(x.basis_, y.basis_);
  }

 private:
  int ambient_;
  Mat basis_;
};

/// Kernel {x : Mx = 0} with canonical RREF basis; rank-nullity holds exactly.
Subspace kernel(const Mat& m);

}  // namespace refltk
