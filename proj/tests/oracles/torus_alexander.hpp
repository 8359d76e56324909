#pragma once

// a2 of a torus knot from its Alexander polynomial
//   Delta(t) = (t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1)),
// computed by exact polynomial long division. With Delta symmetrized as
// sum c_k t^k, a2 = Delta''(1) / 2 = sum c_k k^2 / 2.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // coefficient of t^i at index i

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Exact division by a monic divisor; throws when a remainder is left.
inline Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("divisor must be monic");
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("inexact division");
  return quot;
}

inline Poly t_power_minus_one(int k) {
  Poly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(k)] = 1;
  return p;
}

inline Poly torus_alexander(int r, int s) {
  return divide(multiply(t_power_minus_one(r * s), t_power_minus_one(1)),
                multiply(t_power_minus_one(r), t_power_minus_one(s)));
}

inline long long torus_a2(int r, int s) {
  const Poly d = torus_alexander(r, s);
  const long long deg = static_cast<long long>(d.size()) - 1;  // even for knots
  long long twice = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const long long k = static_cast<long long>(i) - deg / 2;
    twice += d[i] * k * k;
  }
  return twice / 2;
}

}  // namespace oracle
