#ifndef HOMKIT_INTDYN_HPP
#define HOMKIT_INTDYN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homkit/abelian.hpp"
#include "homkit/check.hpp"
#include "homkit/complex.hpp"

namespace homkit {

/// Default cap on |Sigma| for the chain-level computation.
inline constexpr std::size_t kDefaultMaxBruteForceN = 6;

/**
 * A pairwise coprime family Sigma of integers > 1 acting on Z by
 * multiplication. An infinite family is represented by a finite prefix; its g
 * is provisional unless the prefix is declared gcd-stable.
 */
struct SigmaProfile {
  std::vector<Integer> sigma;
  bool infinite_family = false;
  bool gcd_stable = false;
  /// gcd{s - 1 : s in Sigma}.
  Integer g = 0;
  /// Primes dividing some s in Sigma, increasing.
  std::vector<Integer> primes;

  std::size_t size() const { return sigma.size(); }
  bool g_provisional() const { return infinite_family && !gcd_stable; }
  std::string to_string() const;
};

/// Validates and sorts Sigma. Throws Error naming the first non-coprime pair.
SigmaProfile build_sigma(std::vector<Integer> values, bool infinite_family = false, bool gcd_stable = false);

/// H_*(G) in closed form, degrees 0..n_max.
GradedGroup homology_closed_form(const SigmaProfile& profile, int n_max);

/// Homology of the tensor product of the complexes 0 -> Z --(s-1)--> Z -> 0, s in Sigma.
GradedGroup relative_homology(const SigmaProfile& profile, std::size_t max_n = kDefaultMaxBruteForceN);

/// H_p(G) = Lambda^{p-1} Z^N + H_p(S, A), with H_p(S, A) from relative_homology.
GradedGroup homology_bruteforce(const SigmaProfile& profile, int n_max, std::size_t max_n = kDefaultMaxBruteForceN);

/**
 * Torsion K-groups from the E2 page (Z/g)^{C(N-1, p-1)}, p = 1..N. The page
 * computes the mapping torus over T^N; the parity is shifted by N to land on
 * the torsion subalgebra, which fixes K_0(O_s) = Z/(s-1) for N = 1 and is
 * invisible for N >= 2 where both parities agree.
 */
Z2Graded torsion_ktheory_e2(const SigmaProfile& profile);

/// Iterated graded Kuenneth over K_*(O_s) = (Z/(s-1), 0).
Z2Graded torsion_ktheory_kunneth(const SigmaProfile& profile);

/// Compares parity sums of H_* with the torsion K-groups and both K-theory routes.
Report hk_check(const SigmaProfile& profile);

/// Monotonicity of g and of per-degree ranks along an increasing chain of prefixes.
Report truncation_stability(const std::vector<SigmaProfile>& chain, int degree_max);

/// Every pairwise coprime subset of {2, ..., max_entry} with 1..max_size elements,
/// in lexicographic order.
std::vector<std::vector<Integer>> coprime_families(long max_entry, std::size_t max_size);

}  // namespace homkit

#endif  // HOMKIT_INTDYN_HPP
