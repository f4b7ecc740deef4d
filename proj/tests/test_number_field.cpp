#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "homkit/linalg.hpp"
#include "homkit/number_field.hpp"
#include "homkit/sampling.hpp"

using namespace homkit;

namespace {

const Cardinality kInf = Cardinality::infinite();

// Roots of f from the eigenvalues of its companion matrix, in floating point.
std::vector<std::complex<double>> numeric_roots(const Poly& f) {
  const std::size_t d = f.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  const double lead = f.leading().get_d();
  for (std::size_t i = 1; i < d; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -f.coefficients()[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

std::vector<double> numeric_real_roots(const Poly& f) {
  std::vector<double> real;
  for (const auto& z : numeric_roots(f))
    if (std::abs(z.imag()) < 1e-9) real.push_back(z.real());
  return real;
}

// Product over the real embeddings of the sign of a, evaluated numerically.
int numeric_sign(const FieldElement& a) {
  int s = 1;
  for (double r : numeric_real_roots(a.modulus())) {
    double v = 0;
    for (std::size_t k = a.coefficients().size(); k-- > 0;) v = v * r + a.coefficients()[k].get_d();
    s *= (v < 0) ? -1 : 1;
  }
  return s;
}

std::vector<Poly> sample_fields() {
  return {Poly::parse("x^2+1"), Poly::parse("x^2-2"), Poly::parse("x^3-2"), Poly::parse("x^2+x+1"),
          Poly::parse("x^4+1"), Poly::parse("x^4-10*x^2+1"), Poly::parse("x^3-3*x+1"), Poly::parse("x-1")};
}

}  // namespace

TEST_CASE("polynomial parsing") {
  CHECK(Poly::parse("x^3-2").coefficients() == std::vector<Integer>{-2, 0, 0, 1});
  CHECK(Poly::parse("2*x^2 + x - 1").coefficients() == std::vector<Integer>{-1, 1, 2});
  CHECK(Poly::parse("x + x - 3").coefficients() == std::vector<Integer>{-3, 2});
  CHECK(Poly::parse("-1+x^2").coefficients() == std::vector<Integer>{-1, 0, 1});
  CHECK(Poly::parse("3x^2+1").coefficients() == std::vector<Integer>{1, 0, 3});
  for (const char* text : {"x^3-2", "x^2+x+1", "2*x^2-x+5", "x-1", "x^4-10*x^2+1"})
    CHECK(Poly::parse(Poly::parse(text).to_string()) == Poly::parse(text));
  CHECK(Poly::parse("x^3-2").to_string() == "x^3-2");
  CHECK_THROWS_AS(Poly::parse("5"), Error);
  CHECK_THROWS_AS(Poly::parse("-x^2+1"), Error);
  CHECK_THROWS_AS(Poly::parse("y^2+1"), Error);
  CHECK_THROWS_AS(Poly::parse("x^^2"), Error);
  CHECK_THROWS_AS(Poly::parse("x^2++1"), Error);
  CHECK_THROWS_AS(Poly::parse(""), Error);
}

TEST_CASE("cyclotomic polynomials and phi") {
  CHECK(cyclotomic(1) == Poly::parse("x-1"));
  CHECK(cyclotomic(4) == Poly::parse("x^2+1"));
  CHECK(cyclotomic(6) == Poly::parse("x^2-x+1"));
  CHECK(cyclotomic(8) == Poly::parse("x^4+1"));
  CHECK(cyclotomic(12) == Poly::parse("x^4-x^2+1"));
  for (unsigned long n = 1; n <= 60; ++n) {
    unsigned long coprime = 0;
    for (unsigned long k = 1; k <= n; ++k) coprime += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == coprime);
    CHECK(cyclotomic(n).degree() == coprime);
  }
}

TEST_CASE("sturm real root count") {
  CHECK(sturm_real_roots(Poly::parse("x^2+1")) == 0);
  CHECK(sturm_real_roots(Poly::parse("x^2-2")) == 2);
  CHECK(sturm_real_roots(Poly::parse("x^3-2")) == 1);
  CHECK_THROWS_AS(sturm_real_roots(Poly::parse("x^2+2*x+1")), Error);
  for (const auto& f : sample_fields()) CHECK(sturm_real_roots(f) == numeric_real_roots(f).size());

  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> coef(-9, 9);
  int checked = 0;
  while (checked < 80) {
    std::vector<Integer> c;
    const std::size_t d = 1 + rng() % 5;
    for (std::size_t i = 0; i < d; ++i) c.push_back(coef(rng));
    c.push_back(1 + rng() % 3);
    const Poly f(c);
    std::size_t count = 0;
    try {
      count = sturm_real_roots(f);
    } catch (const Error&) {
      continue;
    }
    // Skip near-degenerate cases where floating point cannot separate roots.
    bool well_separated = true;
    const auto roots = numeric_roots(f);
    for (const auto& z : roots) well_separated = well_separated && (std::abs(z.imag()) < 1e-12 || std::abs(z.imag()) > 1e-4);
    if (!well_separated) continue;
    CHECK(count == numeric_real_roots(f).size());
    ++checked;
  }
}

TEST_CASE("rational root test") {
  CHECK(has_rational_root(Poly::parse("2*x^2-x")));
  CHECK(has_rational_root(Poly::parse("3*x^2-5*x-2")));
  CHECK(!has_rational_root(Poly::parse("x^3-2")));
  CHECK(!has_rational_root(Poly::parse("x^2+1")));
}

TEST_CASE("build_profile") {
  auto q = build_profile(Poly::parse("x-1"));
  CHECK(q.degree == 1);
  CHECK(q.real_embeddings == 1);
  CHECK(q.mu_order == 2);

  auto gi = build_profile(Poly::parse("x^2+1"));
  CHECK(gi.degree == 2);
  CHECK(gi.real_embeddings == 0);
  CHECK(gi.complex_pairs == 1);
  CHECK(gi.totally_imaginary);
  CHECK(gi.mu_order == 4);
  CHECK(gi.mu_source == MuSource::Computed);

  auto c = build_profile(Poly::parse("x^3-2"));
  CHECK(c.real_embeddings == 1);
  CHECK(c.complex_pairs == 1);
  CHECK(c.mu_order == 2);

  CHECK(build_profile(Poly::parse("x^2+x+1")).mu_order == 6);
  CHECK(build_profile(Poly::parse("x^2+3")).mu_order == 6);
  CHECK(build_profile(Poly::parse("x^2+4")).mu_order == 4);
  CHECK(build_profile(Poly::parse("x^2+7")).mu_order == 2);
  CHECK(build_profile(Poly::parse("x^4+1")).mu_order == 8);
  CHECK(build_profile(Poly::parse("x^4-x^2+1")).mu_order == 12);
  CHECK(build_profile(Poly::parse("x^4+x^3+x^2+x+1")).mu_order == 10);

  // Totally imaginary, not cyclotomic, degree 4: |mu| must be asserted.
  const Poly f = Poly::parse("x^4+5");
  CHECK_THROWS_AS(build_profile(f), Error);
  auto asserted = build_profile(f, 2);
  CHECK(asserted.mu_source == MuSource::Asserted);
  CHECK(asserted.mu_order == 2);
  CHECK_THROWS_AS(build_profile(f, 3), Error);
  CHECK_THROWS_AS(build_profile(f, 14), Error);  // phi(14) = 6 does not divide 4

  CHECK_THROWS_AS(build_profile(Poly::parse("x^3-2"), 6), Error);
  CHECK_THROWS_AS(build_profile(Poly::parse("x^2+1"), 6), Error);
  CHECK(build_profile(Poly::parse("x^2+1"), 4).mu_source == MuSource::Computed);
  CHECK_THROWS_AS(build_profile(Poly::parse("x^2-1")), Error);
  CHECK_THROWS_AS(build_profile(Poly::parse("x^2+2*x+1")), Error);

  for (const auto& g : sample_fields()) {
    auto p = build_profile(g);
    CHECK(p.real_embeddings + 2 * p.complex_pairs == p.degree);
    CHECK(p.mu_order % 2 == 0);
    CHECK(p.degree % euler_phi(p.mu_order) == 0);
  }
}

TEST_CASE("multiplication matrix") {
  const Poly gi = Poly::parse("x^2+1");
  CHECK(multiplication_matrix(FieldElement::scalar(gi, 1)) == RatMatrix::identity(2));
  // x * 1 = x and x * x = -1.
  CHECK(multiplication_matrix(FieldElement::generator(gi)) == RatMatrix{{0, -1}, {1, 0}});
  CHECK(field_norm(FieldElement::generator(gi)) == 1);
  const Poly c = Poly::parse("x^3-2");
  CHECK(multiplication_matrix(FieldElement::scalar(c, 5)) == Rational(5) * RatMatrix::identity(3));
  CHECK(field_norm(FieldElement::scalar(c, 5)) == 125);
  CHECK(field_norm(FieldElement::generator(c)) == 2);
  CHECK_THROWS_AS(multiplication_matrix(FieldElement::scalar(c, 0)), Error);

  // Non-monic modulus: 2x^2 - 3, so x^2 = 3/2.
  const Poly nm = Poly::parse("2*x^2-3");
  CHECK(multiplication_matrix(FieldElement::generator(nm)) == RatMatrix{{0, Rational(3, 2)}, {1, 0}});
}

TEST_CASE("multiplication matrix is a ring homomorphism") {
  std::mt19937_64 rng(53);
  for (const auto& f : sample_fields())
    for (int trial = 0; trial < 10; ++trial) {
      FieldElement a = random_field_element(rng, f), b = random_field_element(rng, f);
      CHECK(multiplication_matrix(a * b) == multiplication_matrix(a) * multiplication_matrix(b));
      if (!(a + b).is_zero()) CHECK(multiplication_matrix(a + b) == multiplication_matrix(a) + multiplication_matrix(b));
    }
}

TEST_CASE("sign of an element") {
  const Poly gi = Poly::parse("x^2+1"), c = Poly::parse("x^3-2");
  CHECK(sign_of(FieldElement::scalar(c, 1)) == 1);
  CHECK(sign_of(FieldElement::scalar(c, -1)) == -1);
  CHECK(sign_of(FieldElement::scalar(gi, -1)) == 1);

  std::mt19937_64 rng(57);
  for (const auto& f : sample_fields())
    for (int trial = 0; trial < 15; ++trial) {
      FieldElement a = random_field_element(rng, f), b = random_field_element(rng, f);
      CHECK(sign_of(a * b) == sign_of(a) * sign_of(b));
      CHECK(sign_of(a) == numeric_sign(a));
      if (build_profile(f).totally_imaginary) CHECK(sign_of(a) == 1);
    }
}

TEST_CASE("theta matrix") {
  std::mt19937_64 rng(59);
  for (const auto& f : sample_fields()) {
    const std::size_t d = f.degree();
    for (int trial = 0; trial < 8; ++trial) {
      FieldElement a = random_field_element(rng, f), b = random_field_element(rng, f);
      const Rational norm = abs(field_norm(a));
      CHECK(theta_matrix(a, d) == RatMatrix{{sign_of(a)}});
      CHECK(theta_matrix(a, 0) == RatMatrix{{1 / norm}});
      for (std::size_t q = 0; q <= d; ++q) CHECK(theta_matrix(a * b, q) == theta_matrix(a, q) * theta_matrix(b, q));
    }
    for (long n : {2, 3, -2}) {
      const FieldElement a = FieldElement::scalar(f, n);
      for (std::size_t q = 0; q <= d; ++q) {
        // n^{q-d} times the sign of n^q.
        Rational expected(pow(Integer(n), q), pow(Integer(std::abs(n)), d));
        expected.canonicalize();
        CHECK(theta_matrix(a, q) == expected * RatMatrix::identity(binomial(d, q).get_ui()));
      }
    }
    CHECK_THROWS_AS(theta_matrix(FieldElement::scalar(f, 1), d + 1), Error);
  }
}

TEST_CASE("vanishing check") {
  const Poly gi = Poly::parse("x^2+1");
  CHECK(vanishing_check(FieldElement::scalar(gi, 2), 0));
  CHECK(!vanishing_check(FieldElement::scalar(gi, 1), 0));
  // i is a unit of finite order: theta_i on Lambda^0 is the identity.
  CHECK(!vanishing_check(FieldElement::generator(gi), 0));
  CHECK_THROWS_AS(vanishing_check(FieldElement::scalar(gi, 2), 2), Error);

  for (const auto& f : sample_fields())
    for (std::size_t q = 0; q < f.degree(); ++q) CHECK(vanishing_check(FieldElement::scalar(f, 2), q));
}

TEST_CASE("theorem A tables") {
  const GroupDescriptor zero, z = GroupDescriptor::free(1);
  const GroupDescriptor z2 = GroupDescriptor::cyclic(2), z2inf = GroupDescriptor::cyclic(2, kInf);

  GradedGroup q = theorem_a_homology(build_profile(Poly::parse("x-1")), 5);
  CHECK(q.at(0) == zero);
  CHECK(q.at(1) == z2);
  for (int n = 2; n <= 5; ++n) CHECK(q.at(n) == z2inf);
  CHECK(!q.is_computed(6));

  GradedGroup gi = theorem_a_homology(build_profile(Poly::parse("x^2+1")), 5);
  CHECK(gi.at(0) == zero);
  CHECK(gi.at(1) == zero);
  CHECK(gi.at(2) == z);
  CHECK(gi.at(3) == GroupDescriptor(kInf, {{4, 1}}));
  CHECK(gi.at(4) == GroupDescriptor(kInf, {{4, kInf}}));
  CHECK(gi.at(5) == GroupDescriptor(kInf, {{4, kInf}}));

  GradedGroup c = theorem_a_homology(build_profile(Poly::parse("x^3-2")), 5);
  for (int n = 0; n < 3; ++n) CHECK(c.at(n) == zero);
  CHECK(c.at(3) == z2);
  CHECK(c.at(4) == z2inf);
}

TEST_CASE("theorem A via Kuenneth") {
  for (const char* text : {"x-1", "x^2+1", "x^2+x+1", "x^3-2", "x^4+1", "x^2-2", "x^4-10*x^2+1", "x^3-3*x+1",
                           "x^4-x^2+1", "x^2+7"})
    for (int n_max : {0, 3, 7}) {
      const auto p = build_profile(Poly::parse(text));
      CAPTURE(text);
      CHECK(theorem_a_via_kunneth(p, n_max) == theorem_a_homology(p, n_max));
    }
  // Asserted |mu| also goes through the resolution route.
  const auto p = build_profile(Poly::parse("x^4+5"), 2);
  CHECK(theorem_a_via_kunneth(p, 8) == theorem_a_homology(p, 8));
}

TEST_CASE("theorem A low degrees follow the profile") {
  for (const auto& f : sample_fields()) {
    const auto p = build_profile(f);
    const int d = static_cast<int>(p.degree);
    const GradedGroup h = theorem_a_homology(p, d + 2);
    for (int n = 0; n < d; ++n) CHECK(h.at(n).is_zero());
    CHECK(h.at(d) == (p.totally_imaginary ? GroupDescriptor::free(1) : GroupDescriptor::cyclic(2)));
  }
}

TEST_CASE("topological full group report") {
  auto q = tfg_report(build_profile(Poly::parse("x-1")));
  CHECK(!q.simple);
  CHECK(q.abelianization == GroupDescriptor::cyclic(2));
  CHECK(q.rationally_acyclic);

  auto gi = tfg_report(build_profile(Poly::parse("x^2+1")));
  CHECK(gi.simple);
  CHECK(gi.low_degree_homology.at(1).is_zero());
  CHECK(gi.low_degree_homology.at(2) == GroupDescriptor::free(1));
  CHECK(gi.abelianization.is_zero());
  CHECK(!gi.rationally_acyclic);

  auto c = tfg_report(build_profile(Poly::parse("x^3-2")));
  CHECK(c.simple);
  CHECK(c.low_degree_homology.at(3) == GroupDescriptor::cyclic(2));
  CHECK(c.rationally_acyclic);
}

TEST_CASE("ring C*-algebra K-theory") {
  const auto inf = GroupDescriptor::free(kInf);
  auto gi = ring_cstar_ktheory(build_profile(Poly::parse("x^2+1")));
  CHECK(gi.groups == Z2Graded{inf, inf});
  CHECK(gi.formula == "Z^4 ⊗ ∧^*Γ");
  CHECK(gi.torsion_free);
  auto q = ring_cstar_ktheory(build_profile(Poly::parse("x-1")));
  CHECK(q.groups == Z2Graded{inf, inf});
  CHECK(q.formula == "∧^*Γ");
  CHECK(q.torsion_free);
}

TEST_CASE("torsion-free submonoid K-theory") {
  CHECK(torsionfree_submonoid_ktheory(2, {1, 1}, 0) == Z2Graded{GroupDescriptor::free(2), GroupDescriptor::free(2)});
  // Rank one with sign -1: K_n(B) = Z in degree d only, and 1 - (-1) = 2 is injective on it.
  CHECK(torsionfree_submonoid_ktheory(1, {-1}, 0) == Z2Graded{GroupDescriptor::cyclic(2), GroupDescriptor::zero()});
  CHECK(torsionfree_submonoid_ktheory(1, {-1}, 1) == Z2Graded{GroupDescriptor::zero(), GroupDescriptor::cyclic(2)});
  CHECK(torsionfree_submonoid_ktheory(1, {1}, 0) == Z2Graded{GroupDescriptor::free(1), GroupDescriptor::free(1)});
  // Odd degree swaps the parities: Lambda^even Z^3 = Z^4 sits in K_1.
  CHECK(torsionfree_submonoid_ktheory(3, {1, 1, 1}, 1).odd == GroupDescriptor::free(4));
  CHECK(torsionfree_submonoid_ktheory(3, {1, -1, 1}, 0) ==
        Z2Graded{GroupDescriptor::cyclic(2, 2), GroupDescriptor::cyclic(2, 2)});
  for (std::size_t r = 1; r <= 6; ++r) {
    auto k = torsionfree_submonoid_ktheory(r, std::vector<int>(r, 1), r);
    CHECK(k.even.free_rank() + k.odd.free_rank() == Cardinality(std::uint64_t{1} << r));
  }
  CHECK_THROWS_AS(torsionfree_submonoid_ktheory(0, {}, 0), Error);
  CHECK_THROWS_AS(torsionfree_submonoid_ktheory(2, {1}, 0), Error);
  CHECK_THROWS_AS(torsionfree_submonoid_ktheory(1, {0}, 0), Error);
}
