#include "refltk/polynomial.hpp"

#include <algorithm>

namespace refltk {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  require(nvars >= 0 && nvars <= kMaxPolyVars, ErrorCode::DimensionError,
          "polynomials support at most " + std::to_string(kMaxPolyVars) + " variables");
}

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  require(i >= 0 && i < nvars, ErrorCode::DimensionError, "variable index out of range");
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Scalar(1));
  return p;
}

Polynomial Polynomial::linear_form(const Vec& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (int i = 0; i < coeffs.size(); ++i) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, coeffs(i));
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require(nvars_ == o.nvars_, ErrorCode::DimensionError, "polynomial arity mismatch");
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(nvars_ == o.nvars_, ErrorCode::DimensionError, "polynomial arity mismatch");
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (int i = 0; i < nvars_; ++i) {
        m.e[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(i)] +
                                       mb.e[static_cast<std::size_t>(i)]);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute_linear(const Mat& m) const {
  require(static_cast<int>(m.rows()) == nvars_ && static_cast<int>(m.cols()) == nvars_,
          ErrorCode::DimensionError, "substitution matrix must be nvars x nvars");
  // Memoize powers of the substituted variables.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nvars_));
  std::vector<int> max_exp(static_cast<std::size_t>(nvars_), 0);
  for (const auto& [mono, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) {
      max_exp[static_cast<std::size_t>(i)] =
          std::max(max_exp[static_cast<std::size_t>(i)],
                   static_cast<int>(mono.e[static_cast<std::size_t>(i)]));
    }
  }
  for (int i = 0; i < nvars_; ++i) {
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.push_back(Polynomial::constant(nvars_, Scalar(1)));
    if (max_exp[static_cast<std::size_t>(i)] == 0) continue;
    Polynomial base = Polynomial::linear_form(m.row(i).transpose());
    for (int k = 1; k <= max_exp[static_cast<std::size_t>(i)]; ++k) pw.push_back(pw.back() * base);
  }
  Polynomial out(nvars_);
  for (const auto& [mono, c] : terms_) {
    Polynomial term = Polynomial::constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i) {
      int e = mono.e[static_cast<std::size_t>(i)];
      if (e > 0) term = term * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
    }
    out = out + term;
  }
  return out;
}

Scalar Polynomial::evaluate(const Vec& point) const {
  require(static_cast<int>(point.size()) == nvars_, ErrorCode::DimensionError,
          "evaluation point arity mismatch");
  Scalar acc(0);
  for (const auto& [mono, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < mono.e[static_cast<std::size_t>(i)]; ++k) t *= point(i);
    }
    acc += t;
  }
  return acc;
}

std::vector<std::pair<Monomial, Scalar>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int dx = x.first.degree(), dy = y.first.degree();
    if (dx != dy) return dx < dy;
    return x.first.e < y.first.e;
  });
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.to_string();
    out += ')';
    for (int i = 0; i < nvars_; ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace refltk
