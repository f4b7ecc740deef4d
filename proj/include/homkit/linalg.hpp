#ifndef HOMKIT_LINALG_HPP
#define HOMKIT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "homkit/matrix.hpp"

namespace homkit {

/// U * M * V == D with U, V unimodular and D in Smith normal form.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Inverse of V, maintained alongside V so kernel coordinates are exact.
  IntMatrix V_inverse;

  /// Number of nonzero diagonal entries of D.
  std::size_t rank() const;
  /// Nonzero diagonal entries of D, in divisibility order.
  std::vector<Integer> diagonal() const;
};

/**
 * Smith normal form by gcd-pivot row/column reduction.
 *
 * The pivot at each stage is the entry of smallest nonzero absolute value in
 * the remaining submatrix. D is canonical: nonnegative, d_i | d_{i+1}, zeros
 * last. U and V are only determined up to the SnfResult invariants.
 */
SnfResult snf(const IntMatrix& m);

/// Invariant factors and free rank of Z^rows / (column span of M).
struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;  // each >= 2, divisibility chain
};

CokernelInvariants cokernel_invariants(const IntMatrix& relations);

std::size_t rational_rank(const IntMatrix& m);
std::size_t rational_rank(const RatMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Columns form a saturated Z-basis of {x in Z^cols : M x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/**
 * q-th exterior power of a square matrix. Basis of the exterior power is the
 * set of q-subsets of {0..d-1} in lexicographic order; entry (S, T) is the
 * S x T minor.
 */
RatMatrix exterior_power_matrix(const RatMatrix& m, std::size_t q);

/// All q-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t q);

/// Binomial coefficient; zero when k > n.
Integer binomial(std::size_t n, std::size_t k);

}  // namespace homkit

#endif  // HOMKIT_LINALG_HPP
