#include "refltk/unipoly.hpp"

#include <algorithm>

#include "refltk/errors.hpp"

namespace refltk {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::one_minus_power(int k) {
  require(k >= 1, ErrorCode::DimensionError, "power must be positive");
  std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
  c[0] = Scalar(1);
  c[static_cast<std::size_t>(k)] = Scalar(-1);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Scalar& v) const {
  if (v.is_zero()) return UniPoly();
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= v;
  return UniPoly(std::move(c));
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
  require(!divisor.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1, Scalar(0));
  Scalar lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coefficient(j);
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    Scalar c = coefficient(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inverse());  // monic
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::one();
    return;
  }
  UniPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).quotient;
    den_ = den_.divmod(g).quotient;
  }
  Scalar lead_inv = den_.leading().inverse();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::scaled(const Scalar& v) const { return RatFunc(num_.scaled(v), den_); }

std::vector<Scalar> RatFunc::series(int degree) const {
  require(!den_.coefficient(0).is_zero(), ErrorCode::DivisionByZero,
          "series expansion needs den(0) != 0");
  std::vector<Scalar> out(static_cast<std::size_t>(degree) + 1, Scalar(0));
  Scalar d0_inv = den_.coefficient(0).inverse();
  for (int k = 0; k <= degree; ++k) {
    Scalar acc = num_.coefficient(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) {
      acc -= den_.coefficient(j) * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = acc * d0_inv;
  }
  return out;
}

}  // namespace refltk
