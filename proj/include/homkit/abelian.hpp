#ifndef HOMKIT_ABELIAN_HPP
#define HOMKIT_ABELIAN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homkit/matrix.hpp"

namespace homkit {

/**
 * A count that may be the symbol INFINITE. Only one infinite cardinal is
 * modelled: INFINITE + n = INFINITE, INFINITE * 0 = 0, INFINITE * n = INFINITE.
 */
class Cardinality {
 public:
  constexpr Cardinality() = default;
  constexpr Cardinality(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by design of counts
  static constexpr Cardinality infinite() {
    Cardinality c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Finite value; throws Error when infinite.
  std::uint64_t value() const;

  friend Cardinality operator+(Cardinality a, Cardinality b);
  friend Cardinality operator*(Cardinality a, Cardinality b);
  Cardinality& operator+=(Cardinality b) { return *this = *this + b; }

  friend constexpr bool operator==(const Cardinality&, const Cardinality&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinality& a, const Cardinality& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ..., d_i >= 2.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Validates the canonical-form invariants; use from_cyclic for arbitrary orders.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  /// Z^free_rank plus one cyclic summand Z/|o| per order; o == 0 adds a free
  /// summand and |o| == 1 is dropped.
  static FgAbGroup from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders);
  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer& order) { return from_cyclic(0, {order}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
  bool is_zero() const { return free_rank_ == 0 && invariant_factors_.empty(); }
  bool is_free() const { return invariant_factors_.empty(); }
  /// Product of the invariant factors.
  Integer torsion_order() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> invariant_factors_;
};

struct TorsionSummand {
  Integer order;
  Cardinality multiplicity;
  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

/**
 * Abelian group of the form Z^r + sum (Z/order)^mult where r and the
 * multiplicities may be INFINITE. Stored canonically: torsion orders strictly
 * increasing; finite-multiplicity orders form an invariant-factor chain after
 * absorption into the infinite-multiplicity summands.
 */
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  GroupDescriptor(const FgAbGroup& g);  // NOLINT: canonical embedding
  /// Canonicalizes an arbitrary list of cyclic summands.
  GroupDescriptor(Cardinality free_rank, const std::vector<TorsionSummand>& torsion);

  static GroupDescriptor zero() { return {}; }
  static GroupDescriptor free(Cardinality rank) { return GroupDescriptor(rank, {}); }
  static GroupDescriptor cyclic(const Integer& order, Cardinality mult = 1) {
    return GroupDescriptor(0, {{order, mult}});
  }

  Cardinality free_rank() const { return free_rank_; }
  const std::vector<TorsionSummand>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_.is_zero() && torsion_.empty(); }
  bool is_finitely_generated() const;
  bool is_torsion_free() const { return torsion_.empty(); }
  std::optional<FgAbGroup> to_fg() const;
  /// The torsion subgroup alone.
  GroupDescriptor torsion_part() const { return GroupDescriptor(0, torsion_); }
  /// Total number of cyclic torsion summands in this representation.
  Cardinality torsion_summand_count() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  /// Renders as "Z^3 + Z/2^2" (meaning Z^3 + (Z/2)^2); "0" for the zero group.
  std::string to_string() const;

 private:
  Cardinality free_rank_;
  std::vector<TorsionSummand> torsion_;
};

/// A group over Z[P^-1]: torsion orders are coprime to every inverted prime.
struct LocalizedGroup {
  std::vector<Integer> inverted_primes;
  /// Set when P is cofinal (all primes inverted); the torsion is then empty.
  bool all_primes = false;
  FgAbGroup group;
  friend bool operator==(const LocalizedGroup&, const LocalizedGroup&) = default;
};

/// Degree-indexed groups. Only nonzero degrees are stored; degrees above
/// computed_through (when set) are "not computed", never implicitly zero.
class GradedGroup {
 public:
  GradedGroup() = default;
  explicit GradedGroup(std::optional<int> computed_through) : computed_through_(computed_through) {}

  void set(int degree, const GroupDescriptor& g);
  /// Group in degree n; throws Error if n lies above computed_through.
  GroupDescriptor at(int degree) const;
  bool is_computed(int degree) const { return !computed_through_ || degree <= *computed_through_; }
  std::optional<int> computed_through() const { return computed_through_; }
  void set_computed_through(std::optional<int> d) { computed_through_ = d; }
  const std::map<int, GroupDescriptor>& groups() const { return groups_; }
  std::optional<int> lowest_degree() const;
  std::optional<int> highest_degree() const;
  bool is_zero() const { return groups_.empty(); }
  /// True iff every stored group is torsion free.
  bool degreewise_free() const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

 private:
  std::map<int, GroupDescriptor> groups_;
  std::optional<int> computed_through_;
};

/// Z/2-graded pair, e.g. (K_0, K_1).
struct Z2Graded {
  GroupDescriptor even;
  GroupDescriptor odd;
  friend bool operator==(const Z2Graded&, const Z2Graded&) = default;
};

FgAbGroup from_presentation(std::size_t generators, const IntMatrix& relations);

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups);

GroupDescriptor tensor(const GroupDescriptor& g, const GroupDescriptor& h);
GroupDescriptor tor(const GroupDescriptor& g, const GroupDescriptor& h);
GroupDescriptor direct_sum(const std::vector<GroupDescriptor>& groups);

/// Removes every prime of P from the torsion orders. `primes` must be primes.
LocalizedGroup localize(const FgAbGroup& g, const std::vector<Integer>& primes);

/// Rank of the q-th exterior power of Z^r.
Cardinality exterior_rank(Cardinality r, std::size_t q);

/// Degree n: sum_{p+q=n} H1_p (x) H2_q  +  sum_{p+q=n-1} Tor(H1_p, H2_q).
/// Assumes the Kuenneth sequence splits; callers record when neither input
/// is degreewise free.
GradedGroup kunneth_assemble(const GradedGroup& h1, const GradedGroup& h2);

/// Kuenneth for Z/2-graded K-theory pairs.
Z2Graded graded_kunneth_mod2(const Z2Graded& a, const Z2Graded& b);

}  // namespace homkit

#endif  // HOMKIT_ABELIAN_HPP
