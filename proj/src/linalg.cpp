#include "refltk/linalg.hpp"

#include <algorithm>

namespace refltk {

Echelon rref(const Mat& m) {
  Mat a = m;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Scalar inv = a(r, c).inverse();
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon out;
  out.mat = a.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).mat.rows()); }

Scalar determinant(const Mat& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionError, "determinant of non-square matrix");
  Mat a = m;
  const int n = static_cast<int>(a.rows());
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionError, "inverse of non-square matrix");
  const int n = static_cast<int>(m.rows());
  Mat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat::Identity(n, n);
  Echelon e = rref(aug);
  require(static_cast<int>(e.mat.rows()) == n && e.pivots.back() < n, ErrorCode::SingularGram,
          "matrix not invertible");
  return e.mat.rightCols(n);
}

bool mat_eq(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return false;
  return true;
}

bool is_identity(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

std::string mat_key(const Mat& m) {
  std::string key;
  key.reserve(static_cast<std::size_t>(m.size()) * 4);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      m(i, j).append_key(key);
      key += ';';
    }
  }
  return key;
}

std::string vec_key(const Vec& v) {
  std::string key;
  key.reserve(static_cast<std::size_t>(v.size()) * 4);
  for (int i = 0; i < v.size(); ++i) {
    v(i).append_key(key);
    key += ';';
  }
  return key;
}

int lex_compare(const Vec& x, const Vec& y) {
  require(x.size() == y.size(), ErrorCode::DimensionError, "lex_compare size mismatch");
  for (int i = 0; i < x.size(); ++i) {
    int s = (x(i) - y(i)).sign();
    if (s != 0) return s;
  }
  return 0;
}

Vec monic(const Vec& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      Vec out = v;
      Scalar inv = v(i).inverse();
      for (int j = i; j < v.size(); ++j) out(j) *= inv;
      out(i) = Scalar(1);
      return out;
    }
  }
  return v;
}

int monic_sign(const Vec& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return v(i).sign();
  }
  return 0;
}

Vec content_normalize(const Vec& v) {
  mpz_class lcm_den(1), gcd_num(0);
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    lcm_den = l;
  };
  for (int i = 0; i < v.size(); ++i) {
    absorb(v(i).rational_part());
    absorb(v(i).radical_part());
  }
  auto absorb_num = [&](const mpq_class& q) {
    if (q == 0) return;
    mpz_class n = q.get_num() * (lcm_den / q.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    gcd_num = g;
  };
  for (int i = 0; i < v.size(); ++i) {
    absorb_num(v(i).rational_part());
    absorb_num(v(i).radical_part());
  }
  if (gcd_num == 0) return v;  // zero vector
  Scalar factor{mpq_class(lcm_den) / mpq_class(gcd_num)};
  Vec out = v;
  for (int i = 0; i < out.size(); ++i) out(i) *= factor;
  if (monic_sign(out) < 0) out = -out;
  return out;
}

Subspace Subspace::from_rows(const Mat& rows) {
  Subspace s(static_cast<int>(rows.cols()));
  s.basis_ = rref(rows).mat;
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::Identity(ambient_dim, ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  require(static_cast<int>(v.size()) == ambient_, ErrorCode::DimensionError,
          "vector/subspace ambient mismatch");
  Vec r = v;
  // Reduce against the echelon basis; membership iff the residual vanishes.
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) {
        p = j;
        break;
      }
    }
    if (p < 0 || r(p).is_zero()) continue;
    Scalar f = r(p);  // pivot is normalized to 1
    for (int j = p; j < ambient_; ++j) r(j) -= f * basis_(i, j);
  }
  for (int j = 0; j < ambient_; ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

bool Subspace::leq(const Subspace& other) const {
  require(ambient_ == other.ambient_, ErrorCode::DimensionError,
          "subspace ambient dimensions differ");
  for (int i = 0; i < basis_.rows(); ++i) {
    if (!other.contains(basis_.row(i).transpose())) return false;
  }
  return true;
}

Subspace kernel(const Mat& m) {
  const int cols = static_cast<int>(m.cols());
  Echelon e = rref(m);
  const int rk = static_cast<int>(e.mat.rows());
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;

  Mat basis(cols - rk, cols);
  basis.setConstant(Scalar(0));
  int row = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    for (int i = 0; i < rk; ++i) basis(row, e.pivots[i]) = -e.mat(i, f);
    basis(row, f) = Scalar(1);
    ++row;
  }
  return Subspace::from_rows(basis);
}

}  // namespace refltk
