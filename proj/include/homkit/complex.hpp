#ifndef HOMKIT_COMPLEX_HPP
#define HOMKIT_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homkit/abelian.hpp"
#include "homkit/matrix.hpp"

namespace homkit {

enum class RingKind { Integers, Localized, Rationals };

/// Z, Z[P^-1] or Q. Boundary matrices are always integral; localized and
/// rational homology are derived from the integral computation.
struct CoefficientRing {
  RingKind kind = RingKind::Integers;
  std::vector<Integer> inverted_primes;  // sorted, only for Localized

  static CoefficientRing integers() { return {}; }
  static CoefficientRing rationals() { return {RingKind::Rationals, {}}; }
  static CoefficientRing localized(std::vector<Integer> primes);

  /// Whether the integer x is a unit of the ring.
  bool is_unit(const Integer& x) const;
  std::string to_string() const;
  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

/**
 * Bounded chain complex of free modules in degrees [lo, lo + ranks.size()).
 * boundaries[k] maps degree lo+k+1 to degree lo+k and has shape
 * ranks[k] x ranks[k+1]. Construction rejects shape mismatches and any
 * composite boundary that is nonzero.
 */
class ChainComplex {
 public:
  ChainComplex(CoefficientRing ring, int lo, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

  const CoefficientRing& ring() const { return ring_; }
  int lo() const { return lo_; }
  /// Highest degree; lo - 1 for the empty complex.
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int degree) const;
  /// Boundary out of `degree`: rank(degree-1) x rank(degree), zero outside the stored range.
  IntMatrix boundary(int degree) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<IntMatrix>& boundaries() const { return boundaries_; }

  /// Two-term complex 0 -> Z^n --map--> Z^m -> 0 in degrees 1 and 0.
  static ChainComplex two_term(const IntMatrix& map, CoefficientRing ring = CoefficientRing::integers());
  /// Z^rank concentrated in one degree.
  static ChainComplex concentrated(int degree, std::size_t rank, CoefficientRing ring = CoefficientRing::integers());

 private:
  CoefficientRing ring_;
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

/// H_n = ker d_n / im d_{n+1}, with the image written in a saturated kernel basis.
GradedGroup homology(const ChainComplex& c);

/// (C (x) D)_n = sum_{p+q=n} C_p (x) D_q with d(x (x) y) = dx (x) y + (-1)^p x (x) dy.
/// Summands are ordered by p ascending; inside a summand the Kronecker order.
ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);

/**
 * Koszul complex computing H_*(Z^N, M) for M = R^m on which the i-th
 * generator acts by A_i. Degree p is M (x) Lambda^p R^N; the boundary sends
 * e_S (x) v to sum_k (-1)^k e_{S - s_k} (x) (A_{s_k} - I) v.
 */
ChainComplex koszul_complex(const std::vector<IntMatrix>& actions, std::size_t module_rank,
                            const CoefficientRing& ring = CoefficientRing::integers());

GradedGroup koszul_group_homology(const std::vector<IntMatrix>& actions, std::size_t module_rank,
                                  const CoefficientRing& ring = CoefficientRing::integers());

/// Periodic resolution ... -> M --N--> M --(T-I)--> M for Z/m acting by T,
/// truncated so that degrees 0..degree_max are exact.
ChainComplex cyclic_resolution_complex(unsigned long order, const IntMatrix& action, int degree_max);

GradedGroup cyclic_group_homology(unsigned long order, const IntMatrix& action, std::size_t module_rank,
                                  int degree_max);

struct KunnethCheck {
  bool pass = false;
  GradedGroup direct;     // homology of the tensor complex
  GradedGroup assembled;  // kunneth_assemble of the factor homologies
  std::string detail;
};

KunnethCheck kunneth_oracle_check(const ChainComplex& c, const ChainComplex& d);

}  // namespace homkit

#endif  // HOMKIT_COMPLEX_HPP
