#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refltk/scalar.hpp"

using refltk::Error;
using refltk::ErrorCode;
using refltk::Scalar;

namespace {

Scalar golden() { return Scalar(mpq_class(1, 2), mpq_class(1, 2), 5); }  // (1+sqrt5)/2

}  // namespace

TEST_CASE("rational arithmetic is exact and closed") {
  Scalar third{mpq_class(1, 3)};
  Scalar sixth{mpq_class(1, 6)};
  CHECK(third + sixth == Scalar(mpq_class(1, 2)));
  CHECK(third * Scalar(3) == Scalar(1));
  CHECK((Scalar(7) / Scalar(2)).to_string() == "7/2");
  CHECK(Scalar(mpq_class(2, 4)) == Scalar(mpq_class(1, 2)));  // canonical on entry
}

TEST_CASE("quadratic arithmetic follows the sqrt(d) relation") {
  Scalar phi = golden();
  CHECK(phi * phi == phi + Scalar(1));             // x^2 = x + 1
  CHECK(phi * (phi - Scalar(1)) == Scalar(1));     // conjugate-root product
  CHECK(phi.inverse() == phi - Scalar(1));
  Scalar r2 = Scalar::sqrt_of(2);
  CHECK(r2 * r2 == Scalar(2));
  CHECK((Scalar(1) / (Scalar(1) + r2)) == r2 - Scalar(1));
}

TEST_CASE("field tags never mix") {
  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), Error);
  try {
    Scalar::sqrt_of(2) * Scalar::sqrt_of(5);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  // Rationals embed into any quadratic field.
  CHECK((Scalar(2) + Scalar::sqrt_of(5)).field_tag() == 5);
  // Radical parts cancelling collapses back to Q.
  Scalar x = Scalar::sqrt_of(5) - Scalar::sqrt_of(5) + Scalar(3);
  CHECK(x.is_rational());
  CHECK(x + Scalar::sqrt_of(2) == Scalar(3) + Scalar::sqrt_of(2));
}

TEST_CASE("exact sign and ordering") {
  Scalar r2 = Scalar::sqrt_of(2);
  CHECK((r2 - Scalar(1)).sign() == 1);
  CHECK((Scalar(1) - r2).sign() == -1);
  CHECK((Scalar(3) - Scalar(2) * r2).sign() == 1);   // 3 > 2*1.414...
  CHECK((Scalar(2) * r2 - Scalar(3)).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK(golden() > Scalar(1));
  CHECK(golden() < Scalar(2));
  CHECK(refltk::abs(Scalar(1) - r2) == r2 - Scalar(1));
}

TEST_CASE("division by zero is rejected") {
  try {
    Scalar x = Scalar(1) / Scalar(0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("literals round-trip through the canonical syntax") {
  const char* rationals[] = {"0", "7", "-3/2", "1/6"};
  for (const char* s : rationals) {
    CHECK(refltk::parse_scalar(s, 0).to_string() == s);
    CHECK(refltk::parse_scalar(s, 5).to_string() == s);
  }
  const char* quadratics[] = {"r", "-r", "2r", "-1/2r", "1+2r", "1-r", "-1/2+3/4r", "3-5/2r"};
  for (const char* s : quadratics) {
    CHECK(refltk::parse_scalar(s, 5).to_string() == s);
  }
  CHECK(refltk::parse_scalar("1+2r", 5) == Scalar(1, 2, 5));
}

TEST_CASE("malformed literals raise ParseError") {
  const char* bad[] = {"", "3//2", "1+", "abc", "r5", "2rr", "1.5", "3/-2", "/2", "-"};
  for (const char* s : bad) {
    try {
      refltk::parse_scalar(s, 5);
      FAIL("expected ParseError for " << s);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  // Radical literal in a plain rational field.
  try {
    refltk::parse_scalar("1+2r", 0);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("square-free check") {
  CHECK(refltk::is_square_free(5));
  CHECK(refltk::is_square_free(6));
  CHECK(refltk::is_square_free(2));
  CHECK_FALSE(refltk::is_square_free(4));
  CHECK_FALSE(refltk::is_square_free(12));
  CHECK_FALSE(refltk::is_square_free(0));
}
