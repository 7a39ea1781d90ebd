#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refltk/bilinear.hpp"
#include "refltk/linalg.hpp"
#include "refltk/util.hpp"

using namespace refltk;

namespace {

Mat mat2(int a, int b, int c, int d) {
  Mat m(2, 2);
  m << Scalar(a), Scalar(b), Scalar(c), Scalar(d);
  return m;
}

Vec vec(std::initializer_list<int> entries) {
  Vec v(static_cast<int>(entries.size()));
  int i = 0;
  for (int e : entries) v(i++) = Scalar(e);
  return v;
}

Mat random_matrix(DeterministicRng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Scalar(mpq_class(rng.range(-9, 9), rng.range(1, 3)));
  return m;
}

}  // namespace

TEST_CASE("regularity of gram matrices") {
  CHECK(is_regular(mat2(1, 0, 0, 1)));
  CHECK_FALSE(is_regular(mat2(0, 0, 0, 0)));
  Mat cartan = mat2(2, -1, -1, 2);
  CHECK(is_regular(cartan));
  CHECK(determinant(cartan) == Scalar(3));
  try {
    is_regular(mat2(1, 2, 3, 4));
    FAIL("expected InvalidForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidForm);
  }
}

TEST_CASE("bilinear form evaluation") {
  BilinearSpace euclid{Mat::Identity(2, 2)};
  CHECK(euclid.evaluate(vec({1, 0}), vec({1, 0})) == Scalar(1));
  CHECK(euclid.evaluate(vec({1, 0}), vec({0, 1})) == Scalar(0));
  BilinearSpace cartan{mat2(2, -1, -1, 2)};
  CHECK(cartan.evaluate(vec({1, 0}), vec({1, 0})) == Scalar(2));
  CHECK_THROWS_AS(euclid.evaluate(vec({1, 0, 0}), vec({1, 0})), Error);
}

TEST_CASE("kernel computation with canonical bases") {
  CHECK(kernel(Mat::Identity(3, 3)).dim() == 0);
  Mat zero(2, 2);
  zero.setConstant(Scalar(0));
  CHECK(kernel(zero) == Subspace::full(2));

  // diag(-1,1,1) - id has kernel spanned by e2, e3.
  Mat m(3, 3);
  m.setConstant(Scalar(0));
  m(0, 0) = Scalar(-2);
  Subspace fix = kernel(m);
  CHECK(fix.dim() == 2);
  CHECK(fix.contains(vec({0, 1, 0})));
  CHECK(fix.contains(vec({0, 0, 1})));
  CHECK_FALSE(fix.contains(vec({1, 0, 0})));
}

TEST_CASE("rank-nullity holds exactly on sampled matrices") {
  DeterministicRng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m = random_matrix(rng, 3, 4);
    CHECK(kernel(m).dim() + rank(m) == 4);
  }
}

TEST_CASE("subspace containment") {
  CHECK(Subspace::zero(3).leq(Subspace::full(3)));
  Mat hyper(1, 2);
  hyper << Scalar(0), Scalar(1);
  Subspace h = Subspace::from_rows(hyper);
  CHECK(Subspace::zero(2).leq(h));
  CHECK_FALSE(Subspace::full(2).leq(h));
  CHECK(h.leq(Subspace::full(2)));

  // span{e2} inside Ker(e1^dual) for the identity form.
  BilinearSpace euclid{Mat::Identity(2, 2)};
  Mat form_matrix(1, 2);
  form_matrix << euclid.dual_form(vec({1, 0}))(0), euclid.dual_form(vec({1, 0}))(1);
  Subspace ker = kernel(form_matrix);
  Mat e2(1, 2);
  e2 << Scalar(0), Scalar(1);
  CHECK(Subspace::from_rows(e2).leq(ker));

  CHECK_THROWS_AS(Subspace::zero(2).leq(Subspace::zero(3)), Error);
}

TEST_CASE("form symmetry and dual-form isometry on sampled vectors") {
  DeterministicRng rng(11);
  Mat gram = mat2(2, -1, -1, 2);
  BilinearSpace space{gram};
  for (int trial = 0; trial < 25; ++trial) {
    Vec v = random_matrix(rng, 2, 1);
    Vec w = random_matrix(rng, 2, 1);
    Scalar bvw = space.evaluate(v, w);
    CHECK(bvw == space.evaluate(w, v));
    // b_dual(v_dual, w_dual) = b(v, w) with v_dual = gram * v.
    Vec vd = space.dual_form(v), wd = space.dual_form(w);
    Scalar dual_value = (vd.transpose() * space.dual_gram() * wd)(0, 0);
    CHECK(dual_value == bvw);
  }
}

TEST_CASE("canonicalization is idempotent") {
  DeterministicRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_matrix(rng, 3, 3);
    Subspace once = Subspace::from_rows(m);
    Subspace twice = Subspace::from_rows(once.basis());
    CHECK(once == twice);

    Vec v = random_matrix(rng, 3, 1);
    CHECK(mat_eq(monic(monic(v)), monic(v)));
    CHECK(mat_eq(content_normalize(content_normalize(v)), content_normalize(v)));
  }
}

TEST_CASE("content normalization produces primitive integral vectors over Q") {
  Vec v(3);
  v << Scalar(mpq_class(-2, 3)), Scalar(mpq_class(4, 3)), Scalar(mpq_class(-2, 1));
  Vec n = content_normalize(v);
  CHECK(n(0) == Scalar(1));
  CHECK(n(1) == Scalar(-2));
  CHECK(n(2) == Scalar(3));
}

TEST_CASE("exact inverse") {
  Mat g = mat2(2, -1, -1, 2);
  CHECK(mat_eq(g * inverse(g), Mat::Identity(2, 2)));
  try {
    inverse(mat2(1, 2, 2, 4));
    FAIL("expected SingularGram");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularGram);
  }
}
