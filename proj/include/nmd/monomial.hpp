#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace nmd {

/** Exponent tuple of a monomial, one entry per state variable.
 *  Lexicographic comparison on the exponent sequence defines the canonical
 *  term order; a polynomial stores at most one coefficient per monomial. */
struct Monomial {
  std::vector<std::uint8_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t n_vars) : e(n_vars, 0) {}
  Monomial(std::initializer_list<std::uint8_t> init) : e(init) {}

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  std::size_t n_vars() const { return e.size(); }

  /** Swap exponents within each conjugate pair (2i, 2i+1), 0-based. */
  Monomial pair_swapped() const {
    Monomial m = *this;
    for (std::size_t p = 0; p + 1 < m.e.size(); p += 2) std::swap(m.e[p], m.e[p + 1]);
    return m;
  }

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial& o) const {
    return std::lexicographical_compare_three_way(e.begin(), e.end(), o.e.begin(), o.e.end());
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(int(e[i]));
    }
    return s;
  }
};

/** Number of monomials of exact total degree `degree` in `n_vars` variables:
 *  C(n_vars + degree - 1, degree). */
long long monomial_count(int n_vars, int degree);

}  // namespace nmd
