#include "refltk/bilinear.hpp"

namespace refltk {

bool is_regular(const Mat& gram) {
  require(gram.rows() == gram.cols(), ErrorCode::InvalidForm, "gram matrix not square");
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = i + 1; j < gram.cols(); ++j)
      require(gram(i, j) == gram(j, i), ErrorCode::InvalidForm, "gram matrix not symmetric");
  return !determinant(gram).is_zero();
}

BilinearSpace::BilinearSpace(Mat gram) : dim_(static_cast<int>(gram.rows())) {
  require(dim_ > 0, ErrorCode::InvalidForm, "bilinear space needs positive dimension");
  require(is_regular(gram), ErrorCode::SingularGram, "gram matrix is singular");
  gram_ = std::move(gram);
  dual_gram_ = inverse(gram_);
}

Scalar BilinearSpace::evaluate(const Vec& v, const Vec& w) const {
  require(v.size() == dim_ && w.size() == dim_, ErrorCode::DimensionError,
          "form arguments must have the space dimension");
  Scalar acc(0);
  for (int i = 0; i < dim_; ++i) {
    if (v(i).is_zero()) continue;
    Scalar row(0);
    for (int j = 0; j < dim_; ++j) {
      if (!w(j).is_zero()) row += gram_(i, j) * w(j);
    }
    acc += v(i) * row;
  }
  return acc;
}

Vec BilinearSpace::dual_form(const Vec& v) const {
  require(v.size() == dim_, ErrorCode::DimensionError, "dual_form argument dimension");
  return gram_ * v;
}

}  // namespace refltk
