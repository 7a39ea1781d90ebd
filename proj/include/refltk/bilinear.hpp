#pragma once

#include "refltk/linalg.hpp"

namespace refltk {

/// True iff the matrix is symmetric with nonzero determinant. Throws
/// InvalidForm when the input is not symmetric (a regularity question only
/// makes sense for a form).
bool is_regular(const Mat& gram);

/// Regular symmetric bilinear space (V, b) over the exact field: a dimension
/// together with the Gram matrix of b in the standard basis. Immutable.
class BilinearSpace {
 public:
  explicit BilinearSpace(Mat gram);

  int dim() const { return dim_; }
  const Mat& gram() const { return gram_; }
  /// Gram matrix of the induced form on the dual space (inverse of gram).
  const Mat& dual_gram() const { return dual_gram_; }

  /// b(v, w) = v^T * gram * w.
  Scalar evaluate(const Vec& v, const Vec& w) const;

  /// Coefficient vector of the linear form v^dual = b(-, v).
  Vec dual_form(const Vec& v) const;

 private:
  int dim_;
  Mat gram_;
  Mat dual_gram_;
};

}  // namespace refltk
