#pragma once

#include "cwsurgery/rational.hpp"

namespace cwsurgery {

/// n = d^2 * p_prime with p_prime square-free; d is the largest such d.
struct SquareFreeDecomposition {
  Integer d;
  Integer p_prime;
};

/// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd_pair(const Integer& a, const Integer& b);

/// Trial-division decomposition of a positive integer. Throws DomainError
/// for n <= 0.
SquareFreeDecomposition squarefree_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

/// Floor-style residue in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

bool divides(const Integer& d, const Integer& n);

}  // namespace cwsurgery
