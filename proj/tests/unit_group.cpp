#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "refltk/group.hpp"
#include "refltk/util.hpp"

using namespace refltk;

namespace {

Vec vec(std::initializer_list<int> entries) {
  Vec v(static_cast<int>(entries.size()));
  int i = 0;
  for (int e : entries) v(i++) = Scalar(e);
  return v;
}

ReflectionGroup closed_named(const std::string& type, int rank, long cap = kDefaultOrderCap) {
  NamedGroup g = named_weyl(type, rank);
  return close_group(g.space, g.generators, cap);
}

}  // namespace

TEST_CASE("reflection matrices from the defining formula") {
  BilinearSpace euclid3{Mat::Identity(3, 3)};
  Reflection s = reflection(euclid3, vec({1, 0, 0}));
  Mat expected = Mat::Identity(3, 3);
  expected(0, 0) = Scalar(-1);
  CHECK(mat_eq(s.matrix, expected));

  // Cartan form of rank 2, root e1: matrix [[-1,1],[0,1]] (column images).
  Mat cartan(2, 2);
  cartan << Scalar(2), Scalar(-1), Scalar(-1), Scalar(2);
  BilinearSpace a2{cartan};
  Reflection t = reflection(a2, vec({1, 0}));
  Mat expected2(2, 2);
  expected2 << Scalar(-1), Scalar(1), Scalar(0), Scalar(1);
  CHECK(mat_eq(t.matrix, expected2));

  // Every reflection negates its root, squares to id, is orthogonal.
  DeterministicRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Vec v(2);
    v << Scalar(rng.range(-4, 4)), Scalar(rng.range(-4, 4));
    if (a2.evaluate(v, v).is_zero()) continue;
    Reflection r = reflection(a2, v);
    CHECK(mat_eq(r.matrix * v, Mat(-v)));
    CHECK(mat_eq(r.matrix * r.matrix, Mat::Identity(2, 2)));
    CHECK(is_orthogonal(a2, r.matrix));
    CHECK(determinant(r.matrix) == Scalar(-1));
  }
}

TEST_CASE("isotropic roots are rejected") {
  Mat hyperbolic(2, 2);
  hyperbolic << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  BilinearSpace space{hyperbolic};
  try {
    reflection(space, vec({1, 1}));
    FAIL("expected IsotropicVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsotropicVector);
  }
}

TEST_CASE("orthogonality test") {
  BilinearSpace euclid{Mat::Identity(2, 2)};
  CHECK(is_orthogonal(euclid, Mat::Identity(2, 2)));
  Mat twice = Mat::Identity(2, 2);
  twice(0, 0) = twice(1, 1) = Scalar(2);
  CHECK_FALSE(is_orthogonal(euclid, twice));
}

TEST_CASE("closure of a single reflection") {
  BilinearSpace euclid{Mat::Identity(2, 2)};
  ReflectionGroup w = close_group(euclid, {reflection(euclid, vec({1, 0}))});
  CHECK(w.order() == 2);
  CHECK(w.reflections().size() == 1);
}

TEST_CASE("named closures at small rank") {
  struct Row {
    const char* type;
    int rank;
    long order;
    int reflections;
  };
  const Row rows[] = {
      {"A", 1, 2, 1},   {"A", 2, 6, 3},    {"B", 2, 8, 4},     {"G", 2, 12, 6},
      {"A", 3, 24, 6},  {"B", 3, 48, 9},   {"C", 3, 48, 9},    {"D", 2, 4, 2},
      {"D", 3, 24, 6},  {"I2(5)", 2, 10, 5}, {"I2(8)", 2, 16, 8}, {"I2(10)", 2, 20, 10},
      {"I2(12)", 2, 24, 12}, {"H", 3, 120, 15},
  };
  for (const Row& r : rows) {
    CAPTURE(r.type);
    CAPTURE(r.rank);
    ReflectionGroup w = closed_named(r.type, r.rank);
    CHECK(w.order() == r.order);
    CHECK(static_cast<int>(w.reflections().size()) == r.reflections);
  }
}

TEST_CASE("invalid named data raise UnknownType") {
  const std::pair<const char*, int> bad[] = {
      {"E", 8}, {"A", 0}, {"B", 1}, {"F", 3}, {"G", 3}, {"H", 2}, {"H", 5},
      {"I2(7)", 2}, {"I2(9)", 2}, {"I2(2)", 2}, {"I2(5)", 3}, {"Z", 1},
  };
  for (const auto& [type, rank] : bad) {
    try {
      named_weyl(type, rank);
      FAIL("expected UnknownType for " << type);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownType);
    }
  }
}

TEST_CASE("closure respects the order cap") {
  NamedGroup a2 = named_weyl("A", 2);
  try {
    close_group(a2.space, a2.generators, 4);
    FAIL("expected OrderCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
}

TEST_CASE("closure is generator-order independent") {
  NamedGroup b3 = named_weyl("B", 3);
  auto gens = b3.generators;
  ReflectionGroup w1 = close_group(b3.space, gens);
  std::reverse(gens.begin(), gens.end());
  ReflectionGroup w2 = close_group(b3.space, gens);
  REQUIRE(w1.order() == w2.order());
  for (long i = 0; i < w1.order(); ++i) {
    CHECK(mat_eq(w1.element(static_cast<int>(i)), w2.element(static_cast<int>(i))));
  }
}

TEST_CASE("index-level products match matrix products") {
  ReflectionGroup w = closed_named("B", 2);
  for (int i = 0; i < w.order(); ++i) {
    CHECK(w.product(i, w.inverse(i)) == w.identity_index());
    for (int j = 0; j < w.order(); ++j) {
      CHECK(w.product(i, j) == w.index_of(Mat(w.element(i) * w.element(j))));
    }
  }
}

TEST_CASE("conjugacy classes of reflections") {
  ReflectionGroup a2 = closed_named("A", 2);
  std::vector<int> refl;
  for (const auto& r : a2.reflections()) refl.push_back(r.element);
  auto classes = conjugacy_classes(a2, refl);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].size() == 3);

  ReflectionGroup b2 = closed_named("B", 2);
  refl.clear();
  for (const auto& r : b2.reflections()) refl.push_back(r.element);
  classes = conjugacy_classes(b2, refl);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 2);
  CHECK(classes[1].size() == 2);

  auto singleton = conjugacy_classes(b2, std::vector<int>{b2.identity_index()});
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0] == std::vector<int>{b2.identity_index()});
}

TEST_CASE("foreign matrices are not a subset") {
  ReflectionGroup a2 = closed_named("A", 2);
  Mat twice = Mat::Identity(2, 2);
  twice(0, 0) = twice(1, 1) = Scalar(2);
  try {
    conjugacy_classes(a2, std::vector<Mat>{twice});
    FAIL("expected NotASubset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubset);
  }
}

TEST_CASE("Lagrange sanity: cyclic orders divide the group order") {
  ReflectionGroup b3 = closed_named("B", 3);
  for (int i = 0; i < b3.order(); ++i) {
    CHECK(b3.order() % b3.element_order(i) == 0);
  }
}

TEST_CASE("reflection lookup by root line") {
  ReflectionGroup b2 = closed_named("B", 2);
  int pos = b2.reflection_on_line(vec({0, 3}));  // any scaling of e2
  REQUIRE(pos >= 0);
  const auto& gr = b2.reflections()[static_cast<std::size_t>(pos)];
  CHECK(mat_eq(b2.element(gr.element) * vec({0, 1}), Mat(-vec({0, 1}))));
  CHECK(b2.reflection_on_line(vec({1, 2})) == -1);
}
