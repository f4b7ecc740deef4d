// Brute-force oracles for the test suites. Nothing in here calls the Smith
// normal form or homology code it is used to check.
#ifndef HOMKIT_TESTS_SUPPORT_HPP
#define HOMKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "homkit/complex.hpp"
#include "homkit/linalg.hpp"
#include "homkit/matrix.hpp"
#include "homkit/sampling.hpp"

namespace homkit::testing {

using homkit::random_complex;
using homkit::random_int_matrix;
using homkit::random_rat_matrix;
using homkit::random_unimodular;

/// Cofactor-expansion determinant; exponential, only for tiny matrices.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    det += ((j % 2) ? -1 : 1) * m(0, j) * cofactor_det(minor);
  }
  return det;
}

/**
 * Invariant factors from determinantal divisors: D_k = gcd of all k x k
 * minors and d_k = D_k / D_{k-1}. Independent of any row reduction.
 */
inline std::vector<Integer> determinantal_invariant_factors(const IntMatrix& m) {
  std::vector<Integer> divisors{1};
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for (const auto& rs : subsets_of_size(m.rows(), k))
      for (const auto& cs : subsets_of_size(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = gcd(g, cofactor_det(sub));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

}  // namespace homkit::testing

#endif  // HOMKIT_TESTS_SUPPORT_HPP
