#pragma once

#include <complex>
#include <map>

#include "nmd/monomial.hpp"

namespace nmd {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped after arithmetic.
inline constexpr double kCoeffDropTol = 1e-12;

/** Sparse multivariate polynomial over complex coefficients, truncated at a
 *  fixed maximum total degree. Degrees 0..max_degree are all representable;
 *  products discard anything beyond the truncation degree eagerly. */
class Poly {
public:
  Poly() : n_vars_(0), max_degree_(0) {}
  Poly(int n_vars, int max_degree) : n_vars_(n_vars), max_degree_(max_degree) {}

  static Poly constant(int n_vars, int max_degree, Complex c);
  static Poly variable(int n_vars, int max_degree, int var);

  int n_vars() const { return n_vars_; }
  int max_degree() const { return max_degree_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Complex coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  /** Adds c to the coefficient of m; drops the term if it falls below the
   *  drop tolerance. Terms beyond the truncation degree are ignored. */
  void add_term(const Monomial& m, Complex c);

  void operator+=(const Poly& o);
  void operator*=(Complex s);
  Poly operator*(const Poly& o) const;  // truncated product
  Poly pow(int p) const;

  Poly derivative(int var) const;
  Complex eval(const Complex* z, int n) const;

  double max_abs_coeff() const;

private:
  int n_vars_;
  int max_degree_;
  std::map<Monomial, Complex> terms_;
};

}  // namespace nmd
