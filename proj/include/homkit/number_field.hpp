#ifndef HOMKIT_NUMBER_FIELD_HPP
#define HOMKIT_NUMBER_FIELD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homkit/abelian.hpp"
#include "homkit/matrix.hpp"

namespace homkit {

/// Integer polynomial, coefficients in ascending degree, leading coefficient positive.
class Poly {
 public:
  explicit Poly(std::vector<Integer> ascending);

  /// Parses "x^3-2", "2*x^2 + x - 1", "x^2+x+1". The variable must be x.
  static Poly parse(std::string_view text);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// n-th cyclotomic polynomial.
Poly cyclotomic(unsigned long n);
unsigned long euler_phi(unsigned long n);

/// Number of real roots by Sturm's theorem. Throws Error if f is not squarefree.
std::size_t sturm_real_roots(const Poly& f);

/// Whether f has a root in Q (rational root test).
bool has_rational_root(const Poly& f);

enum class MuSource { Computed, Asserted };

struct NumberFieldProfile {
  Poly polynomial{{0, 1}};
  std::size_t degree = 1;
  std::size_t real_embeddings = 1;
  std::size_t complex_pairs = 0;
  unsigned long mu_order = 2;
  bool totally_imaginary = false;
  MuSource mu_source = MuSource::Computed;
  /// Which rule fixed |mu|: "real embedding", "cyclotomic Phi_n", "imaginary quadratic", "hint".
  std::string mu_rule;

  bool is_rationals() const { return degree == 1; }
};

/**
 * Signature from Sturm sequences; |mu| from, in order: a real embedding
 * (|mu| = 2), the cyclotomic table Phi_n with n <= 120, the imaginary
 * quadratic discriminant, and finally a caller-supplied hint. The caller
 * asserts irreducibility; it is sanity-checked (squarefree, and no rational
 * root when the degree is at most 3).
 */
NumberFieldProfile build_profile(const Poly& f, std::optional<unsigned long> mu_hint = std::nullopt);

/// Residue class modulo f with rational coefficients, stored with degree < deg f.
class FieldElement {
 public:
  FieldElement(const Poly& modulus, std::vector<Rational> coeffs);
  static FieldElement scalar(const Poly& modulus, const Rational& c) { return FieldElement(modulus, {c}); }
  /// The class of x.
  static FieldElement generator(const Poly& modulus) { return FieldElement(modulus, {0, 1}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Poly& modulus() const { return modulus_; }
  bool is_zero() const;

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Poly modulus_;
  std::vector<Rational> coeffs_;
};

/// Matrix of multiplication by a on the power basis; column j is x^j * a.
RatMatrix multiplication_matrix(const FieldElement& a);

/// Field norm N(a) = det(multiplication_matrix(a)).
Rational field_norm(const FieldElement& a);

/// N(a)/|N(a)|, the product of the signs of a under the real embeddings.
int sign_of(const FieldElement& a);

/// Exterior power of multiplication by a on Lambda^q, divided by |N(a)|.
RatMatrix theta_matrix(const FieldElement& a, std::size_t q);

/// True iff I - theta_matrix(a, q) is invertible over Q. Requires q < degree.
bool vanishing_check(const FieldElement& a, std::size_t q);

/// Closed-form groupoid homology of the multiplicative action of the ring of
/// integers, degrees 0..n_max.
GradedGroup theorem_a_homology(const NumberFieldProfile& profile, int n_max);

/**
 * The same groups assembled from chain-level data: H_{n-d}(K^*, Z_sign) is
 * built by Kuenneth from the periodic resolution of the roots of unity (and,
 * for an even positive number of real embeddings, the sign action of one
 * extra free generator) together with Lambda^* of an infinite-rank lattice.
 */
GradedGroup theorem_a_via_kunneth(const NumberFieldProfile& profile, int n_max);

struct TfgReport {
  /// H_n of the topological full group for 0 < n <= d.
  GradedGroup low_degree_homology;
  bool simple = false;
  GroupDescriptor abelianization;
  bool rationally_acyclic = false;
};

TfgReport tfg_report(const NumberFieldProfile& profile);

/// K-theory of the ring C*-algebra: infinite-rank groups with the structural formula.
struct SymbolicKTheory {
  Z2Graded groups;
  std::string formula;
  bool torsion_free = true;
};

SymbolicKTheory ring_cstar_ktheory(const NumberFieldProfile& profile);

/**
 * K-theory for a torsion-free submonoid with free abelian group of the given
 * rank and generator signs. All signs +1: K_n = Z^{sum_{p = n-d mod 2} C(r,p)};
 * otherwise K_n = (Z/2)^{sum_{p = n-d mod 2} C(r-1,p)}. Only the parity of
 * `degree` matters.
 */
Z2Graded torsionfree_submonoid_ktheory(std::size_t rank, const std::vector<int>& signs, std::size_t degree);

}  // namespace homkit

#endif  // HOMKIT_NUMBER_FIELD_HPP
