#include "homkit/verify.hpp"

#include <functional>
#include <sstream>
#include <string>

#include "homkit/intdyn.hpp"
#include "homkit/linalg.hpp"
#include "homkit/number_field.hpp"
#include "homkit/report.hpp"
#include "homkit/sampling.hpp"

namespace homkit {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total_;
    if (ok) {
      ++passed_;
    } else if (first_failure_.empty()) {
      first_failure_ = describe();
    }
  }

  Check check() const {
    std::string actual = std::to_string(passed_) + " of " + std::to_string(total_);
    if (!first_failure_.empty()) actual += "; first failure: " + first_failure_;
    return {name_, std::to_string(total_) + " of " + std::to_string(total_), actual, passed_ == total_ && total_ > 0};
  }

 private:
  std::string name_;
  std::size_t total_ = 0, passed_ = 0;
  std::string first_failure_;
};

bool is_snf_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  bool seen_zero = false;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || (i > 0 && d(i, i) % d(i - 1, i - 1) != 0)) return false;
  }
  return true;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m;
  return out.str();
}

Check snf_family(Rng& rng) {
  Tally t("snf: U*M*V = D, U and V unimodular, divisibility chain");
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_int_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, -9, 9);
    const SnfResult r = snf(m);
    const bool ok = r.U * m * r.V == r.D && abs(determinant(r.U)) == 1 && abs(determinant(r.V)) == 1 &&
                    r.V * r.V_inverse == IntMatrix::identity(m.cols()) && is_snf_diagonal(r.D);
    t.record(ok, [&] { return matrix_text(m); });
  }
  return t.check();
}

Check exterior_family(Rng& rng) {
  Tally t("exterior powers are multiplicative on 4x4 rational matrices");
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix a = random_rat_matrix(rng, 4, -5, 5, 4), b = random_rat_matrix(rng, 4, -5, 5, 4);
    bool ok = true;
    for (std::size_t q = 0; q <= 4; ++q)
      ok = ok && exterior_power_matrix(a * b, q) == exterior_power_matrix(a, q) * exterior_power_matrix(b, q);
    t.record(ok, [&] { return "trial " + std::to_string(trial); });
  }
  return t.check();
}

Check kunneth_family(Rng& rng) {
  Tally t("Kuenneth assembly equals homology of the tensor complex");
  for (int trial = 0; trial < 100; ++trial) {
    const ChainComplex a = random_complex(rng, static_cast<int>(rng() % 4), 3, -4, 4);
    const ChainComplex b = random_complex(rng, static_cast<int>(rng() % 4), 3, -4, 4);
    const KunnethCheck k = kunneth_oracle_check(a, b);
    t.record(k.pass, [&] { return k.detail; });
  }
  return t.check();
}

std::vector<Check> sigma_families() {
  Tally brute("integral dynamics: chain-level homology equals the closed form");
  Tally torsion("tensor of two-term complexes has homology (Z/g)^C(N-1,p)");
  Tally ktheory("torsion K-theory: E2 page equals iterated Kuenneth");
  Tally hk("HK property for |Sigma| >= 2");
  for (const auto& family : coprime_families(20, 5)) {
    const SigmaProfile p = build_sigma(family);
    const std::size_t n = p.size();
    ktheory.record(torsion_ktheory_e2(p) == torsion_ktheory_kunneth(p), [&] { return p.to_string(); });
    if (n > 4) continue;
    const int top = static_cast<int>(n) + 2;
    brute.record(homology_bruteforce(p, top) == homology_closed_form(p, top), [&] { return p.to_string(); });
    const GradedGroup rel = relative_homology(p);
    bool torsion_ok = true;
    for (std::size_t q = 0; q <= n; ++q)
      torsion_ok = torsion_ok && rel.at(static_cast<int>(q)) == GroupDescriptor::cyclic(p.g, binomial(n - 1, q).get_ui());
    torsion.record(torsion_ok, [&] { return p.to_string(); });
    if (n >= 2) hk.record(hk_check(p).pass(), [&] { return p.to_string(); });
  }
  return {brute.check(), torsion.check(), ktheory.check(), hk.check()};
}

Check number_field_family() {
  Tally t("groupoid homology of number fields: closed form equals Kuenneth assembly");
  for (const char* text : {"x-1", "x^2+1", "x^2+x+1", "x^3-2", "x^4+1", "x^2-2", "x^4-10*x^2+1", "x^3-3*x+1"}) {
    const NumberFieldProfile p = build_profile(Poly::parse(text));
    t.record(theorem_a_via_kunneth(p, 8) == theorem_a_homology(p, 8), [&] { return std::string(text); });
  }
  return t.check();
}

std::vector<Check> element_families(Rng& rng) {
  Tally theta("theta action is multiplicative and equals the sign in top degree");
  Tally sign("sign is multiplicative");
  for (const char* text : {"x^2+1", "x^2-2", "x^3-2"}) {
    const Poly f = Poly::parse(text);
    const std::size_t d = f.degree();
    for (int trial = 0; trial < 50; ++trial) {
      const FieldElement a = random_field_element(rng, f), b = random_field_element(rng, f);
      bool ok = theta_matrix(a, d) == RatMatrix{{sign_of(a)}};
      for (std::size_t q = 0; q <= d; ++q) ok = ok && theta_matrix(a * b, q) == theta_matrix(a, q) * theta_matrix(b, q);
      theta.record(ok, [&] { return std::string(text) + " trial " + std::to_string(trial); });
      sign.record(sign_of(a * b) == sign_of(a) * sign_of(b), [&] { return std::string(text) + " trial " + std::to_string(trial); });
    }
  }
  return {theta.check(), sign.check()};
}

Check cyclic_family() {
  Tally t("cyclic group homology: sign and trivial actions through degree 8");
  const GradedGroup sign = cyclic_group_homology(2, IntMatrix{{-1}}, 1, 8);
  bool ok = true;
  for (int p = 0; p <= 8; ++p) ok = ok && sign.at(p) == (p % 2 == 0 ? GroupDescriptor::cyclic(2) : GroupDescriptor::zero());
  t.record(ok, [] { return std::string("Z/2 acting by -1"); });
  for (unsigned long m : {2UL, 3UL, 4UL, 6UL}) {
    const GradedGroup h = cyclic_group_homology(m, IntMatrix{{1}}, 1, 8);
    bool trivial_ok = h.at(0) == GroupDescriptor::free(1);
    for (int p = 1; p <= 8; ++p)
      trivial_ok = trivial_ok && h.at(p) == (p % 2 == 1 ? GroupDescriptor::cyclic(Integer(m)) : GroupDescriptor::zero());
    t.record(trivial_ok, [m] { return "Z/" + std::to_string(m) + " acting trivially"; });
  }
  return t.check();
}

Check json_family(Rng& rng) {
  Tally t("JSON round trip of groups, graded groups and complexes");
  for (int trial = 0; trial < 200; ++trial) {
    const GroupDescriptor g = random_descriptor(rng);
    t.record(group_from_json(Json::parse(to_json(g).dump())) == g, [&] { return g.to_string(); });
  }
  for (int trial = 0; trial < 50; ++trial) {
    const ChainComplex c = random_complex(rng, static_cast<int>(rng() % 4), 3, -4, 4);
    const ChainComplex back = complex_from_json(Json::parse(to_json(c).dump()));
    t.record(back.ranks() == c.ranks() && back.boundaries() == c.boundaries() && back.lo() == c.lo(),
             [&] { return to_json(c).dump(); });
    const GradedGroup h = homology(c);
    t.record(graded_from_json(Json::parse(to_json(h).dump())) == h, [&] { return to_json(h).dump(); });
  }
  return t.check();
}

}  // namespace

Report verify_all(std::uint64_t seed) {
  Rng rng(seed);
  Report r;
  r.checks.push_back(snf_family(rng));
  r.checks.push_back(exterior_family(rng));
  r.checks.push_back(kunneth_family(rng));
  for (auto& c : sigma_families()) r.checks.push_back(std::move(c));
  r.checks.push_back(number_field_family());
  for (auto& c : element_families(rng)) r.checks.push_back(std::move(c));
  r.checks.push_back(cyclic_family());
  r.checks.push_back(json_family(rng));
  return r;
}

}  // namespace homkit
