// Seeded generators for randomized property checks.
#ifndef HOMKIT_SAMPLING_HPP
#define HOMKIT_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "homkit/abelian.hpp"
#include "homkit/complex.hpp"
#include "homkit/linalg.hpp"
#include "homkit/matrix.hpp"
#include "homkit/number_field.hpp"

namespace homkit {

using Rng = std::mt19937_64;

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline RatMatrix random_rat_matrix(Rng& rng, std::size_t n, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

/// Product of random elementary operations.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && (rng() & 1)) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) {
      u.negate_row(a);
      continue;
    }
    if (rng() % 4 == 0)
      u.swap_rows(a, b);
    else
      u.add_row_multiple(a, b, Integer(coef(rng)));
  }
  return u;
}

/**
 * Bounded complex over Z in degrees 0..top with ranks in [1, max_rank] and
 * entries in [lo, hi]. Each boundary's columns are combinations of a kernel
 * basis of the boundary below, resampled until in range; the zero map is the
 * fallback.
 */
inline ChainComplex random_complex(Rng& rng, int top, std::size_t max_rank, int lo, int hi) {
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(1 + rng() % max_rank);
  std::vector<IntMatrix> boundaries;
  for (int n = 1; n <= top; ++n) {
    const std::size_t rows = ranks[static_cast<std::size_t>(n - 1)], cols = ranks[static_cast<std::size_t>(n)];
    if (boundaries.empty()) {
      boundaries.push_back(random_int_matrix(rng, rows, cols, lo, hi));
      continue;
    }
    IntMatrix k = integer_kernel_basis(boundaries.back());
    IntMatrix chosen(rows, cols);
    for (int attempt = 0; attempt < 20; ++attempt) {
      IntMatrix candidate = k * random_int_matrix(rng, k.cols(), cols, -1, 1);
      bool in_range = true;
      for (const auto& x : candidate.entries()) in_range = in_range && x >= lo && x <= hi;
      if (in_range) {
        chosen = candidate;
        break;
      }
    }
    boundaries.push_back(chosen);
  }
  return ChainComplex(CoefficientRing::integers(), 0, ranks, boundaries);
}

/// Descriptor with free rank and multiplicities drawn from {0..3, INFINITE}.
inline GroupDescriptor random_descriptor(Rng& rng) {
  auto count = [&rng]() -> Cardinality {
    const auto c = rng() % 5;
    return c == 4 ? Cardinality::infinite() : Cardinality(c);
  };
  std::vector<TorsionSummand> torsion;
  for (std::size_t k = 0, n = rng() % 4; k < n; ++k) torsion.push_back({Integer(static_cast<long>(2 + rng() % 30)), count()});
  return GroupDescriptor(count(), torsion);
}

/// Nonzero element with coefficients num/den, |num| <= 6, den <= 3.
inline FieldElement random_field_element(Rng& rng, const Poly& f) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (;;) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    FieldElement a(f, c);
    if (!a.is_zero()) return a;
  }
}

}  // namespace homkit

#endif  // HOMKIT_SAMPLING_HPP
