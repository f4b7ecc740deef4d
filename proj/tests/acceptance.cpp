// Acceptance criteria 1-10. One line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "homkit/complex.hpp"
#include "homkit/intdyn.hpp"
#include "homkit/linalg.hpp"
#include "homkit/number_field.hpp"
#include "homkit/sampling.hpp"
#include "test_support.hpp"

using namespace homkit;

namespace {

constexpr std::uint64_t kSeed = 20240917;
const Cardinality kInf = Cardinality::infinite();

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (!ok && pass) detail = describe();
    pass = pass && ok;
  }
};

std::string to_text(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return "{" + s + "}";
}

// Pairwise coprime subsets of {2..max_entry}, enumerated here rather than by the library.
std::vector<std::vector<Integer>> families(long max_entry, std::size_t max_size) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> cur;
  std::function<void(long)> grow = [&](long from) {
    for (long s = from; s <= max_entry; ++s) {
      bool ok = true;
      for (long t : cur) ok = ok && std::gcd(s, t) == 1;
      if (!ok) continue;
      cur.push_back(s);
      out.emplace_back(cur.begin(), cur.end());
      if (cur.size() < max_size) grow(s + 1);
      cur.pop_back();
    }
  };
  grow(2);
  return out;
}

Integer family_gcd(const std::vector<Integer>& sigma) {
  Integer g = 0;
  for (const auto& s : sigma) g = gcd(g, s - 1);
  return g;
}

Integer choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GroupDescriptor free_plus_torsion(const Integer& rank, const Integer& g, const Integer& mult) {
  if (mult == 0) return GroupDescriptor::free(rank.get_ui());
  return GroupDescriptor(rank.get_ui(), {{g, mult.get_ui()}});
}

// H_n = Z^C(N,n-1) + (Z/g)^C(N-1,n), with H_0 = Z/g.
GroupDescriptor expected_intdyn(const std::vector<Integer>& sigma, int n) {
  const long big_n = static_cast<long>(sigma.size());
  const Integer g = family_gcd(sigma);
  if (n == 0) return GroupDescriptor::cyclic(g);
  return free_plus_torsion(choose(big_n, n - 1), g, choose(big_n - 1, n));
}

Outcome criterion_1() {
  Outcome o;
  for (const auto& sigma : families(20, 4)) {
    const SigmaProfile p = build_sigma(sigma);
    const int top = static_cast<int>(sigma.size()) + 2;
    const GradedGroup brute = homology_bruteforce(p, top), closed = homology_closed_form(p, top);
    for (int n = 0; n <= top; ++n) {
      const GroupDescriptor e = expected_intdyn(sigma, n);
      o.expect(brute.at(n) == closed.at(n) && closed.at(n) == e,
               [&] { return to_text(sigma) + " degree " + std::to_string(n) + ": " + brute.at(n).to_string() + " vs " +
                            closed.at(n).to_string(); });
    }
  }
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (const auto& sigma : families(20, 4)) {
    ChainComplex acc = ChainComplex::concentrated(0, 1);
    for (const auto& s : sigma) acc = tensor_complex(acc, ChainComplex::two_term(IntMatrix{{s - 1}}));
    const GradedGroup direct = homology(acc);
    const GradedGroup rel = relative_homology(build_sigma(sigma));
    const long big_n = static_cast<long>(sigma.size());
    for (int p = 0; p <= big_n + 1; ++p) {
      const GroupDescriptor e = free_plus_torsion(0, family_gcd(sigma), choose(big_n - 1, p));
      o.expect(direct.at(p) == e && rel.at(p) == e,
               [&] { return to_text(sigma) + " degree " + std::to_string(p) + ": " + direct.at(p).to_string(); });
    }
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (const auto& sigma : families(20, 5)) {
    const SigmaProfile p = build_sigma(sigma);
    o.expect(torsion_ktheory_e2(p) == torsion_ktheory_kunneth(p), [&] { return to_text(sigma); });
  }
  const SigmaProfile p35 = build_sigma({3, 5});
  const Z2Graded z2{GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(2)};
  o.expect(torsion_ktheory_e2(p35) == z2 && torsion_ktheory_kunneth(p35) == z2, [] { return std::string("{3,5}"); });
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (const auto& sigma : families(20, 4)) {
    if (sigma.size() < 2) continue;
    const SigmaProfile p = build_sigma(sigma);
    const long big_n = static_cast<long>(sigma.size());
    Integer free[2] = {0, 0}, tors[2] = {0, 0};
    for (int n = 0; n <= big_n + 1; ++n) {
      const GroupDescriptor h = expected_intdyn(sigma, n);
      free[n % 2] += h.free_rank().value();
      tors[n % 2] += n == 0 ? Integer(1) : choose(big_n - 1, n);
    }
    const Z2Graded k = torsion_ktheory_e2(p);
    const Integer half = Integer(1) << static_cast<unsigned long>(big_n - 1);
    o.expect(k.even == free_plus_torsion(0, p.g, tors[0]) && k.odd == free_plus_torsion(0, p.g, tors[1]) &&
                 free[0] == half && free[1] == half && hk_check(p).pass(),
             [&] { return to_text(sigma); });
  }
  return o;
}

Outcome criterion_5() {
  Outcome o;
  struct Row {
    const char* poly;
    std::size_t d;
    unsigned long mu;
    bool imaginary;
  };
  for (const Row& row : {Row{"x-1", 1, 2, false}, Row{"x^2+1", 2, 4, true}, Row{"x^2+x+1", 2, 6, true},
                         Row{"x^3-2", 3, 2, false}, Row{"x^4+1", 4, 8, true}}) {
    const NumberFieldProfile p = build_profile(Poly::parse(row.poly));
    o.expect(p.mu_order == row.mu, [&] { return std::string(row.poly) + " |mu| = " + std::to_string(p.mu_order); });
    const int d = static_cast<int>(row.d), top = d + 4;
    const GradedGroup h = theorem_a_homology(p, top);
    for (int n = 0; n <= top; ++n) {
      GroupDescriptor e;
      if (n < d) {
        e = GroupDescriptor::zero();
      } else if (row.imaginary) {
        e = n == d       ? GroupDescriptor::free(1)
            : n == d + 1 ? GroupDescriptor(kInf, {{Integer(row.mu), 1}})
                         : GroupDescriptor(kInf, {{Integer(row.mu), kInf}});
      } else {
        e = n == d ? GroupDescriptor::cyclic(2) : GroupDescriptor::cyclic(2, kInf);
      }
      o.expect(h.at(n) == e, [&] { return std::string(row.poly) + " H_" + std::to_string(n) + " = " + h.at(n).to_string(); });
    }
    const TfgReport t = tfg_report(p);
    const bool is_q = row.d == 1;
    o.expect(t.simple == !is_q, [&] { return std::string(row.poly) + " simplicity"; });
    if (is_q) o.expect(t.abelianization == GroupDescriptor::cyclic(2), [] { return std::string("Q abelianization"); });
  }
  return o;
}

// Z <-0- Z <-m- Z <-0- Z <-m- ... for Z/m acting trivially, built by hand.
GradedGroup periodic_oracle(long m, int degree_max) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(degree_max) + 2, 1);
  std::vector<IntMatrix> boundaries;
  for (int k = 1; k <= degree_max + 1; ++k) boundaries.push_back(IntMatrix{{k % 2 == 1 ? Integer(0) : Integer(m)}});
  return homology(ChainComplex(CoefficientRing::integers(), 0, ranks, boundaries));
}

Outcome criterion_6() {
  Outcome o;
  const GradedGroup sign = cyclic_group_homology(2, IntMatrix{{-1}}, 1, 8);
  for (int p = 0; p <= 8; ++p)
    o.expect(sign.at(p) == (p % 2 == 0 ? GroupDescriptor::cyclic(2) : GroupDescriptor::zero()),
             [&] { return "sign action degree " + std::to_string(p); });
  for (long m : {2L, 3L, 4L, 6L}) {
    const GradedGroup h = cyclic_group_homology(static_cast<unsigned long>(m), IntMatrix{{1}}, 1, 8);
    const GradedGroup oracle = periodic_oracle(m, 8);
    for (int p = 0; p <= 8; ++p) {
      const GroupDescriptor e =
          p == 0 ? GroupDescriptor::free(1) : (p % 2 == 1 ? GroupDescriptor::cyclic(m) : GroupDescriptor::zero());
      o.expect(h.at(p) == e && oracle.at(p) == e,
               [&] { return "Z/" + std::to_string(m) + " trivial, degree " + std::to_string(p) + ": " + h.at(p).to_string(); });
    }
  }
  return o;
}

Outcome criterion_7(Rng& rng) {
  Outcome o;
  for (int trial = 0; trial < 120; ++trial) {
    const ChainComplex c = random_complex(rng, static_cast<int>(rng() % 4), 3, -4, 4);
    const ChainComplex d = random_complex(rng, static_cast<int>(rng() % 4), 3, -4, 4);
    const GradedGroup direct = homology(tensor_complex(c, d));
    const GradedGroup assembled = kunneth_assemble(homology(c), homology(d));
    for (int n = c.lo() + d.lo(); n <= c.hi() + d.hi(); ++n)
      o.expect(direct.at(n) == assembled.at(n), [&] { return "trial " + std::to_string(trial) + " degree " + std::to_string(n); });
  }
  return o;
}

bool diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k && (d(i, i) == 0 ? d(i + 1, i + 1) != 0 : d(i + 1, i + 1) % d(i, i) != 0)) return false;
  }
  return true;
}

Outcome criterion_8(Rng& rng) {
  Outcome o;
  for (int trial = 0; trial < 520; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const IntMatrix m = random_int_matrix(rng, rows, cols, -9, 9);
    const SnfResult r = snf(m);
    const bool unimodular = abs(determinant(r.U)) == 1 && abs(determinant(r.V)) == 1;
    o.expect(r.U * m * r.V == r.D && unimodular && diagonal_chain(r.D), [&] { return "snf trial " + std::to_string(trial); });
    if (rows <= 5 && cols <= 5) {
      const auto factors = testing::determinantal_invariant_factors(m);
      for (std::size_t i = 0; i < factors.size(); ++i)
        o.expect(r.D(i, i) == factors[i], [&] { return "determinantal divisors, trial " + std::to_string(trial); });
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix a = random_rat_matrix(rng, 4, -5, 5, 4), b = random_rat_matrix(rng, 4, -5, 5, 4);
    for (std::size_t q = 0; q <= 4; ++q)
      o.expect(exterior_power_matrix(a * b, q) == exterior_power_matrix(a, q) * exterior_power_matrix(b, q),
               [&] { return "exterior trial " + std::to_string(trial) + " q = " + std::to_string(q); });
    o.expect(exterior_power_matrix(a, 4) == RatMatrix{{determinant(a)}}, [&] { return "top exterior power " + std::to_string(trial); });
  }
  return o;
}

Outcome criterion_9(Rng& rng) {
  Outcome o;
  for (const char* text : {"x^2+1", "x^2-2", "x^3-2"}) {
    const Poly f = Poly::parse(text);
    const std::size_t d = f.degree();
    for (int trial = 0; trial < 60; ++trial) {
      const FieldElement a = random_field_element(rng, f), b = random_field_element(rng, f);
      for (std::size_t q = 0; q <= d; ++q)
        o.expect(theta_matrix(a * b, q) == theta_matrix(a, q) * theta_matrix(b, q),
                 [&] { return std::string(text) + " multiplicativity, q = " + std::to_string(q); });
      o.expect(theta_matrix(a, d) == RatMatrix{{sign_of(a)}}, [&] { return std::string(text) + " top degree"; });
      const Rational n = field_norm(a);
      o.expect(sign_of(a) == (n > 0 ? 1 : -1), [&] { return std::string(text) + " sign vs norm"; });
    }
  }
  return o;
}

// Infinite-rank groups stay symbolic: cardinality "inf" with finite torsion data.
Outcome criterion_10() {
  Outcome o;
  const NumberFieldProfile qi = build_profile(Poly::parse("x^2+1"));
  const GradedGroup h = theorem_a_homology(qi, 4);
  o.expect(h.at(3).free_rank() == kInf && h.at(4).torsion_summand_count() == kInf, [] { return std::string("Q(i) symbolic ranks"); });
  const SymbolicKTheory k = ring_cstar_ktheory(qi);
  o.expect(k.torsion_free && k.groups.even == GroupDescriptor::free(kInf) && k.groups.odd == GroupDescriptor::free(kInf),
           [] { return std::string("Q(i) ring K-theory"); });
  return o;
}

}  // namespace

int main() {
  Rng rng(kSeed);
  struct Entry {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, "integral dynamics: chain-level homology equals the closed form, N <= 4, entries <= 20", criterion_1},
      {2, "tensor of two-term complexes has homology (Z/g)^C(N-1,p)", criterion_2},
      {3, "torsion K-theory: E2 page equals iterated Kuenneth, N <= 5; {3,5} gives (Z/2, Z/2)", criterion_3},
      {4, "HK property for N >= 2: parity torsion matches K-theory, free rank 2^(N-1) per parity", criterion_4},
      {5, "number-field homology tables and simplicity for x-1, x^2+1, x^2+x+1, x^3-2, x^4+1", criterion_5},
      {6, "cyclic group homology blocks through degree 8", criterion_6},
      {7, "Kuenneth assembly equals homology of the tensor complex, 120 random pairs", [&] { return criterion_7(rng); }},
      {8, "SNF on 520 random matrices up to 12x12; exterior powers on 100 pairs", [&] { return criterion_8(rng); }},
      {9, "theta action laws, 60 elements per field over Q(i), Q(sqrt 2), Q(2^(1/3))", [&] { return criterion_9(rng); }},
      {10,
       "abstract constructions are not reproducible at desk scale; covered by criteria 1-9, infinite ranks checked "
       "symbolically",
       criterion_10},
  };
  bool all = true;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", e.id, o.pass ? "PASS" : "FAIL", e.title, secs, o.pass ? "" : ": ",
                o.detail.c_str());
    all = all && o.pass;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
