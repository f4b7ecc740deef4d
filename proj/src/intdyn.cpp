#include "homkit/intdyn.hpp"

#include <algorithm>
#include <numeric>

#include "homkit/linalg.hpp"

namespace homkit {

namespace {

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> primes;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

void require_finite(const SigmaProfile& profile) {
  if (profile.infinite_family) throw Error("this computation needs a finite family");
}

GroupDescriptor torsion_power(const Integer& g, const Integer& count) {
  return GroupDescriptor::cyclic(g, Cardinality(count.get_ui()));
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.get_str();
  return out;
}

}  // namespace

std::string SigmaProfile::to_string() const {
  return "{" + join(sigma) + (infinite_family ? ",...}" : "}");
}

SigmaProfile build_sigma(std::vector<Integer> values, bool infinite_family, bool gcd_stable) {
  if (values.empty()) throw Error("Sigma must be nonempty");
  for (const auto& s : values)
    if (s <= 1) throw Error("entries of Sigma must exceed 1, got " + s.get_str());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const Integer d = gcd(values[i], values[j]);
      if (d != 1)
        throw Error("Sigma is not pairwise coprime: (" + values[i].get_str() + ", " + values[j].get_str() + ") have gcd " +
                    d.get_str());
    }
  std::sort(values.begin(), values.end());
  SigmaProfile p;
  p.sigma = std::move(values);
  p.infinite_family = infinite_family;
  p.gcd_stable = gcd_stable;
  for (const auto& s : p.sigma) {
    p.g = gcd(p.g, s - 1);
    for (auto& q : prime_factors(s)) p.primes.push_back(q);
  }
  std::sort(p.primes.begin(), p.primes.end());
  return p;
}

GradedGroup homology_closed_form(const SigmaProfile& profile, int n_max) {
  if (n_max < 0) throw Error("degree bound must be non-negative");
  const auto inf = Cardinality::infinite();
  GradedGroup h(n_max);
  h.set(0, GroupDescriptor::cyclic(profile.g));
  if (profile.infinite_family) {
    for (int p = 1; p <= n_max; ++p) h.set(p, GroupDescriptor(inf, {{profile.g, inf}}));
    return h;
  }
  // Z^{C(N, n-1)} + (Z/g)^{C(N-1, n)}; at n = N and n = N + 1 the torsion term vanishes.
  const std::size_t n = profile.size();
  for (int k = 1; k <= n_max && k <= static_cast<int>(n) + 1; ++k) {
    const auto deg = static_cast<std::size_t>(k);
    const GroupDescriptor free = GroupDescriptor::free(binomial(n, deg - 1).get_ui());
    h.set(k, direct_sum({free, torsion_power(profile.g, binomial(n - 1, deg))}));
  }
  return h;
}

GradedGroup relative_homology(const SigmaProfile& profile, std::size_t max_n) {
  require_finite(profile);
  if (profile.size() > max_n)
    throw Error("|Sigma| = " + std::to_string(profile.size()) + " exceeds the brute-force bound " + std::to_string(max_n));
  ChainComplex acc = ChainComplex::concentrated(0, 1);
  for (const auto& s : profile.sigma) acc = tensor_complex(acc, ChainComplex::two_term(IntMatrix{{s - 1}}));
  GradedGroup h = homology(acc);
  // Over Z[P^-1] the answer is the same: gcd(s, s - 1) = 1 keeps the torsion prime to P.
  for (const auto& [degree, group] : h.groups())
    for (const auto& t : group.torsion())
      for (const auto& p : profile.primes)
        if (t.order % p == 0)
          throw Error("torsion Z/" + t.order.get_str() + " in degree " + std::to_string(degree) + " meets the prime " + p.get_str());
  return h;
}

GradedGroup homology_bruteforce(const SigmaProfile& profile, int n_max, std::size_t max_n) {
  if (n_max < 0) throw Error("degree bound must be non-negative");
  const GradedGroup rel = relative_homology(profile, max_n);
  const std::size_t n = profile.size();
  GradedGroup h(n_max);
  for (int p = 0; p <= n_max; ++p) {
    const GroupDescriptor exterior =
        p == 0 ? GroupDescriptor::zero() : GroupDescriptor::free(exterior_rank(n, static_cast<std::size_t>(p - 1)));
    h.set(p, direct_sum({exterior, rel.at(p)}));
  }
  return h;
}

Z2Graded torsion_ktheory_e2(const SigmaProfile& profile) {
  require_finite(profile);
  const std::size_t n = profile.size();
  Integer count[2] = {0, 0};
  for (std::size_t p = 1; p <= n; ++p) count[(p + n) % 2] += binomial(n - 1, p - 1);
  return {torsion_power(profile.g, count[0]), torsion_power(profile.g, count[1])};
}

Z2Graded torsion_ktheory_kunneth(const SigmaProfile& profile) {
  require_finite(profile);
  Z2Graded k{GroupDescriptor::free(1), GroupDescriptor::zero()};
  for (const auto& s : profile.sigma) k = graded_kunneth_mod2(k, {GroupDescriptor::cyclic(s - 1), GroupDescriptor::zero()});
  return k;
}

Report hk_check(const SigmaProfile& profile) {
  require_finite(profile);
  Report r;
  const std::size_t n = profile.size();
  if (n < 2) r.warnings.push_back("the torsion subalgebra decomposition assumes |Sigma| >= 2");

  const GradedGroup h = homology_closed_form(profile, static_cast<int>(n) + 1);
  std::vector<GroupDescriptor> parity[2];
  for (const auto& [degree, group] : h.groups()) parity[degree % 2].push_back(group);
  const GroupDescriptor even = direct_sum(parity[0]), odd = direct_sum(parity[1]);

  const Z2Graded e2 = torsion_ktheory_e2(profile), kun = torsion_ktheory_kunneth(profile);
  r.checks.push_back(make_check("even homology torsion = K_0 torsion", e2.even.to_string(), even.torsion_part().to_string()));
  r.checks.push_back(make_check("odd homology torsion = K_1 torsion", e2.odd.to_string(), odd.torsion_part().to_string()));
  r.checks.push_back(make_check("K_0: E2 page = Kuenneth", e2.even.to_string(), kun.even.to_string()));
  r.checks.push_back(make_check("K_1: E2 page = Kuenneth", e2.odd.to_string(), kun.odd.to_string()));
  const std::string half = pow(Integer(2), n - 1).get_str();
  r.checks.push_back(make_check("even homology free rank", half, even.free_rank().to_string()));
  r.checks.push_back(make_check("odd homology free rank", half, odd.free_rank().to_string()));
  return r;
}

Report truncation_stability(const std::vector<SigmaProfile>& chain, int degree_max) {
  if (chain.empty()) throw Error("the prefix chain is empty");
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& a = chain[k - 1].sigma;
    const auto& b = chain[k].sigma;
    if (b.size() <= a.size() || !std::includes(b.begin(), b.end(), a.begin(), a.end()))
      throw Error("prefix " + chain[k].to_string() + " does not strictly extend " + chain[k - 1].to_string());
  }
  Report r;
  if (chain.size() < 2) r.warnings.push_back("a single prefix cannot show stabilization");

  std::vector<GradedGroup> h;
  for (const auto& prefix : chain) {
    SigmaProfile finite = prefix;
    finite.infinite_family = false;
    h.push_back(homology_closed_form(finite, degree_max));
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const std::string step = chain[k - 1].to_string() + " -> " + chain[k].to_string();
    const bool divides = chain[k - 1].g % chain[k].g == 0;
    r.checks.push_back({"g divides along " + step, "true", divides ? "true" : "false", divides});
    for (int p = 1; p <= degree_max; ++p) {
      const GroupDescriptor before = h[k - 1].at(p), after = h[k].at(p);
      const bool free_ok = before.free_rank() <= after.free_rank();
      const bool tors_ok = before.torsion_summand_count() <= after.torsion_summand_count();
      const std::string degree = "H_" + std::to_string(p);
      r.checks.push_back({degree + " free rank non-decreasing along " + step, ">= " + before.free_rank().to_string(),
                          after.free_rank().to_string(), free_ok});
      r.checks.push_back({degree + " torsion multiplicity non-decreasing along " + step,
                          ">= " + before.torsion_summand_count().to_string(), after.torsion_summand_count().to_string(),
                          tors_ok});
    }
  }
  if (chain.size() >= 2)
    r.checks.push_back(make_check("g stabilized", chain[chain.size() - 2].g.get_str(), chain.back().g.get_str()));
  return r;
}

std::vector<std::vector<Integer>> coprime_families(long max_entry, std::size_t max_size) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> current;
  auto extend = [&](auto&& self, long next) -> void {
    for (long s = next; s <= max_entry; ++s) {
      bool coprime = true;
      for (long t : current) coprime = coprime && std::gcd(s, t) == 1;
      if (!coprime) continue;
      current.push_back(s);
      out.emplace_back(current.begin(), current.end());
      if (current.size() < max_size) self(self, s + 1);
      current.pop_back();
    }
  };
  extend(extend, 2);
  return out;
}

}  // namespace homkit
