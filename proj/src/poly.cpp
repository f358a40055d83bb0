#include "nmd/poly.hpp"

#include <cmath>

namespace nmd {

long long monomial_count(int n_vars, int degree) {
  // C(n_vars + degree - 1, degree), computed as a running product.
  long long num = 1;
  for (int i = 1; i <= degree; ++i) {
    num = num * (n_vars - 1 + i) / i;  // exact: product of i consecutive ints divisible by i!
  }
  return num;
}

Poly Poly::constant(int n_vars, int max_degree, Complex c) {
  Poly p(n_vars, max_degree);
  p.add_term(Monomial(std::size_t(n_vars)), c);
  return p;
}

Poly Poly::variable(int n_vars, int max_degree, int var) {
  Poly p(n_vars, max_degree);
  Monomial m(std::size_t(n_vars));
  m.e[var] = 1;
  p.add_term(m, 1.0);
  return p;
}

void Poly::add_term(const Monomial& m, Complex c) {
  if (m.degree() > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kCoeffDropTol) terms_.erase(it);
}

void Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
}

void Poly::operator*=(Complex s) {
  if (std::abs(s) < kCoeffDropTol) {
    terms_.clear();
    return;
  }
  for (auto& [m, c] : terms_) c *= s;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(n_vars_, max_degree_);
  for (const auto& [ma, ca] : terms_) {
    int da = ma.degree();
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.degree() > max_degree_) continue;
      Monomial m = ma;
      for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::pow(int p) const {
  Poly out = Poly::constant(n_vars_, max_degree_, 1.0);
  for (int i = 0; i < p; ++i) out = out * *this;
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out(n_vars_, max_degree_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] == 0) continue;
    Monomial d = m;
    d.e[var] -= 1;
    out.add_term(d, c * double(m.e[var]));
  }
  return out;
}

Complex Poly::eval(const Complex* z, int n) const {
  Complex acc = 0.0;
  for (const auto& [m, c] : terms_) {
    Complex t = c;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < int(m.e[v]); ++k) t *= z[v];
    acc += t;
  }
  return acc;
}

double Poly::max_abs_coeff() const {
  double mx = 0.0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, std::abs(c));
  return mx;
}

}  // namespace nmd
