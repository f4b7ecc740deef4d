#include "homkit/abelian.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "homkit/linalg.hpp"

namespace homkit {

// ---------------------------------------------------------------- Cardinality

std::uint64_t Cardinality::value() const {
  if (infinite_) throw Error("Cardinality: value() of INFINITE");
  return value_;
}

Cardinality operator+(Cardinality a, Cardinality b) {
  if (a.infinite_ || b.infinite_) return Cardinality::infinite();
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) throw Error("Cardinality: overflow");
  return Cardinality(a.value_ + b.value_);
}

Cardinality operator*(Cardinality a, Cardinality b) {
  if (a.is_zero() || b.is_zero()) return Cardinality(0);
  if (a.infinite_ || b.infinite_) return Cardinality::infinite();
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() / b.value_) throw Error("Cardinality: overflow");
  return Cardinality(a.value_ * b.value_);
}

std::string Cardinality::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

// ------------------------------------------------------------ canonicalizing

namespace {

// Refines the orders into a pairwise coprime base such that every order is a
// product of powers of base elements. Avoids integer factorization.
std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Integer& x) { return x <= 1; }), xs.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < xs.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
        Integer g = gcd(xs[i], xs[j]);
        if (g == 1) continue;
        Integer a = xs[i] / g, b = xs[j] / g;
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(j));
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* v : {&a, &b, &g})
          if (*v > 1) xs.push_back(*v);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        changed = true;
      }
  }
  return xs;
}

unsigned long valuation(Integer n, const Integer& b) {
  unsigned long k = 0;
  while (n % b == 0) {
    n /= b;
    ++k;
  }
  return k;
}

// Primary-style data relative to a coprime base: for each base element, the
// multiplicity of each exponent.
using PrimaryData = std::map<Integer, std::map<unsigned long, Cardinality>>;

PrimaryData decompose(const std::vector<TorsionSummand>& torsion) {
  std::vector<Integer> orders;
  for (const auto& t : torsion) orders.push_back(abs(t.order));
  const auto base = coprime_base(orders);
  PrimaryData data;
  for (const auto& t : torsion) {
    if (t.multiplicity.is_zero() || abs(t.order) <= 1) continue;
    for (const auto& b : base)
      if (auto e = valuation(abs(t.order), b); e > 0) data[b][e] += t.multiplicity;
  }
  return data;
}

// Reassembles invariant factors: the i-th largest factor is the product over
// base elements of their i-th largest prime-power part.
std::vector<TorsionSummand> assemble(const PrimaryData& data) {
  std::map<Integer, std::vector<unsigned long>> finite_exps, infinite_exps;
  for (const auto& [b, exps] : data)
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
      if (it->second.is_infinite()) {
        infinite_exps[b].push_back(it->first);
      } else {
        // decompose() already absorbed finite summands into infinite ones.
        for (std::uint64_t k = 0; k < it->second.value(); ++k) finite_exps[b].push_back(it->first);
      }
    }
  auto build = [](const std::map<Integer, std::vector<unsigned long>>& exps, Cardinality mult) {
    std::vector<Integer> factors;
    std::size_t depth = 0;
    for (const auto& [b, list] : exps) depth = std::max(depth, list.size());
    for (std::size_t i = 0; i < depth; ++i) {
      Integer f = 1;
      for (const auto& [b, list] : exps)
        if (i < list.size()) f *= pow(b, list[i]);
      factors.push_back(f);
    }
    std::map<Integer, Cardinality> counted;
    for (const auto& f : factors) counted[f] += mult.is_infinite() ? mult : Cardinality(1);
    return counted;
  };
  std::map<Integer, Cardinality> all = build(infinite_exps, Cardinality::infinite());
  for (const auto& [order, mult] : build(finite_exps, 1)) all[order] += mult;
  std::vector<TorsionSummand> out;
  for (const auto& [order, mult] : all) out.push_back({order, mult});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), invariant_factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (invariant_factors_[i] < 2) throw Error("FgAbGroup: invariant factor " + homkit::to_string(invariant_factors_[i]) + " < 2");
    if (i > 0 && invariant_factors_[i] % invariant_factors_[i - 1] != 0)
      throw Error("FgAbGroup: invariant factors do not form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders) {
  std::vector<TorsionSummand> torsion;
  for (const auto& o : orders) {
    if (o == 0)
      ++free_rank;
    else if (abs(o) > 1)
      torsion.push_back({abs(o), 1});
  }
  std::vector<Integer> factors;
  for (const auto& t : assemble(decompose(torsion)))
    for (std::uint64_t k = 0; k < t.multiplicity.value(); ++k) factors.push_back(t.order);
  return FgAbGroup(free_rank, std::move(factors));
}

Integer FgAbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors_) n *= d;
  return n;
}

std::string FgAbGroup::to_string() const { return GroupDescriptor(*this).to_string(); }

// ---------------------------------------------------------- GroupDescriptor

GroupDescriptor::GroupDescriptor(const FgAbGroup& g) : free_rank_(g.free_rank()) {
  for (const auto& d : g.invariant_factors()) {
    if (!torsion_.empty() && torsion_.back().order == d)
      torsion_.back().multiplicity += 1;
    else
      torsion_.push_back({d, 1});
  }
}

GroupDescriptor::GroupDescriptor(Cardinality free_rank, const std::vector<TorsionSummand>& torsion)
    : free_rank_(free_rank) {
  std::vector<TorsionSummand> cleaned;
  for (const auto& t : torsion) {
    if (t.order == 0)
      free_rank_ += t.multiplicity;
    else if (abs(t.order) > 1 && !t.multiplicity.is_zero())
      cleaned.push_back({abs(t.order), t.multiplicity});
  }
  torsion_ = assemble(decompose(cleaned));
}

bool GroupDescriptor::is_finitely_generated() const {
  if (free_rank_.is_infinite()) return false;
  return std::none_of(torsion_.begin(), torsion_.end(), [](const auto& t) { return t.multiplicity.is_infinite(); });
}

std::optional<FgAbGroup> GroupDescriptor::to_fg() const {
  if (!is_finitely_generated()) return std::nullopt;
  std::vector<Integer> factors;
  for (const auto& t : torsion_)
    for (std::uint64_t k = 0; k < t.multiplicity.value(); ++k) factors.push_back(t.order);
  return FgAbGroup(free_rank_.value(), std::move(factors));
}

Cardinality GroupDescriptor::torsion_summand_count() const {
  Cardinality c;
  for (const auto& t : torsion_) c += t.multiplicity;
  return c;
}

std::string GroupDescriptor::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (!free_rank_.is_zero()) {
    os << "Z";
    if (free_rank_ != Cardinality(1)) os << '^' << free_rank_.to_string();
    first = false;
  }
  for (const auto& t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t.order;
    if (t.multiplicity != Cardinality(1)) os << '^' << t.multiplicity.to_string();
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------------- GradedGroup

void GradedGroup::set(int degree, const GroupDescriptor& g) {
  if (g.is_zero())
    groups_.erase(degree);
  else
    groups_[degree] = g;
}

GroupDescriptor GradedGroup::at(int degree) const {
  if (!is_computed(degree))
    throw Error("GradedGroup: degree " + std::to_string(degree) + " not computed (computed through " +
                std::to_string(*computed_through_) + ")");
  auto it = groups_.find(degree);
  return it == groups_.end() ? GroupDescriptor::zero() : it->second;
}

std::optional<int> GradedGroup::lowest_degree() const {
  if (groups_.empty()) return std::nullopt;
  return groups_.begin()->first;
}

std::optional<int> GradedGroup::highest_degree() const {
  if (groups_.empty()) return std::nullopt;
  return groups_.rbegin()->first;
}

bool GradedGroup::degreewise_free() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const auto& kv) { return kv.second.is_torsion_free(); });
}

// --------------------------------------------------------------- operations

FgAbGroup from_presentation(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators && !(relations.cols() == 0 && relations.rows() == 0))
    throw Error("from_presentation: relation matrix has " + std::to_string(relations.rows()) + " rows, expected " +
                std::to_string(generators));
  if (relations.rows() == 0) return FgAbGroup::free(generators);
  CokernelInvariants c = cokernel_invariants(relations);
  return FgAbGroup(c.free_rank, std::move(c.invariant_factors));
}

GroupDescriptor tensor(const GroupDescriptor& g, const GroupDescriptor& h) {
  std::vector<TorsionSummand> t;
  for (const auto& a : h.torsion()) t.push_back({a.order, g.free_rank() * a.multiplicity});
  for (const auto& a : g.torsion()) t.push_back({a.order, h.free_rank() * a.multiplicity});
  for (const auto& a : g.torsion())
    for (const auto& b : h.torsion()) t.push_back({gcd(a.order, b.order), a.multiplicity * b.multiplicity});
  return GroupDescriptor(g.free_rank() * h.free_rank(), t);
}

GroupDescriptor tor(const GroupDescriptor& g, const GroupDescriptor& h) {
  std::vector<TorsionSummand> t;
  for (const auto& a : g.torsion())
    for (const auto& b : h.torsion()) t.push_back({gcd(a.order, b.order), a.multiplicity * b.multiplicity});
  return GroupDescriptor(0, t);
}

GroupDescriptor direct_sum(const std::vector<GroupDescriptor>& groups) {
  Cardinality rank;
  std::vector<TorsionSummand> t;
  for (const auto& g : groups) {
    rank += g.free_rank();
    t.insert(t.end(), g.torsion().begin(), g.torsion().end());
  }
  return GroupDescriptor(rank, t);
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) { return *tensor(GroupDescriptor(g), GroupDescriptor(h)).to_fg(); }

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h) { return *tor(GroupDescriptor(g), GroupDescriptor(h)).to_fg(); }

FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups) {
  std::size_t rank = 0;
  std::vector<Integer> orders;
  for (const auto& g : groups) {
    rank += g.free_rank();
    orders.insert(orders.end(), g.invariant_factors().begin(), g.invariant_factors().end());
  }
  return FgAbGroup::from_cyclic(rank, orders);
}

LocalizedGroup localize(const FgAbGroup& g, const std::vector<Integer>& primes) {
  std::vector<Integer> orders;
  for (Integer d : g.invariant_factors()) {
    for (const auto& p : primes) {
      if (p < 2) throw Error("localize: " + to_string(p) + " is not a prime");
      while (d % p == 0) d /= p;
    }
    orders.push_back(d);
  }
  std::vector<Integer> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return LocalizedGroup{std::move(sorted), false, FgAbGroup::from_cyclic(g.free_rank(), orders)};
}

Cardinality exterior_rank(Cardinality r, std::size_t q) {
  if (q == 0) return 1;
  if (r.is_infinite()) return Cardinality::infinite();
  Integer b = binomial(r.value(), q);
  if (!mpz_fits_ulong_p(b.get_mpz_t())) throw Error("exterior_rank: binomial overflows");
  return Cardinality(b.get_ui());
}

GradedGroup kunneth_assemble(const GradedGroup& h1, const GradedGroup& h2) {
  const bool h1_complete_zero = h1.is_zero() && !h1.computed_through();
  const bool h2_complete_zero = h2.is_zero() && !h2.computed_through();
  if (h1_complete_zero || h2_complete_zero) return GradedGroup();

  // Degree n of the product needs H1_p for p <= n - low(H2) and likewise for H2.
  std::optional<int> bound;
  auto tighten = [&bound](std::optional<int> t, std::optional<int> other_low) {
    if (!t) return;
    int b = *t + other_low.value_or(0);
    bound = bound ? std::min(*bound, b) : b;
  };
  tighten(h1.computed_through(), h2.lowest_degree());
  tighten(h2.computed_through(), h1.lowest_degree());

  GradedGroup out(bound);
  std::map<int, std::vector<GroupDescriptor>> parts;
  for (const auto& [p, a] : h1.groups())
    for (const auto& [q, b] : h2.groups()) {
      parts[p + q].push_back(tensor(a, b));
      parts[p + q + 1].push_back(tor(a, b));
    }
  for (const auto& [n, list] : parts)
    if (out.is_computed(n)) out.set(n, direct_sum(list));
  return out;
}

Z2Graded graded_kunneth_mod2(const Z2Graded& a, const Z2Graded& b) {
  return Z2Graded{
      direct_sum({tensor(a.even, b.even), tensor(a.odd, b.odd), tor(a.even, b.odd), tor(a.odd, b.even)}),
      direct_sum({tensor(a.even, b.odd), tensor(a.odd, b.even), tor(a.even, b.even), tor(a.odd, b.odd)}),
  };
}

}  // namespace homkit
