#include "homkit/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "homkit/complex.hpp"
#include "homkit/linalg.hpp"

namespace homkit {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const Poly& f) {
  QPoly p;
  for (const auto& c : f.coefficients()) p.emplace_back(c);
  return p;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Remainder of a modulo a nonzero b.
QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const Rational& q) { return sgn(q); }

// Sign changes in a sequence, zeros skipped.
std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational evaluate(const Poly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Exact division of integer polynomials; the divisor is monic.
std::vector<Integer> divide_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  std::vector<Integer> q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1];
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  return q;
}

std::vector<Integer> cyclotomic_coeffs(unsigned long n, std::map<unsigned long, std::vector<Integer>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Integer> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_coeffs(d, memo));
  memo[n] = p;
  return p;
}

std::optional<unsigned long> mu_from_cyclotomic_table(const Poly& f) {
  constexpr unsigned long kTableLimit = 120;
  std::map<unsigned long, std::vector<Integer>> memo;
  for (unsigned long n = 1; n <= kTableLimit; ++n) {
    if (euler_phi(n) != f.degree()) continue;
    if (cyclotomic_coeffs(n, memo) == f.coefficients()) return std::lcm(2UL, n);
  }
  return std::nullopt;
}

// Q(sqrt(D)) with D < 0 has 4 roots of unity for D ~ -1, 6 for D ~ -3, else 2.
unsigned long mu_of_imaginary_quadratic(const Poly& f) {
  const auto& c = f.coefficients();
  const Integer disc = c[1] * c[1] - 4 * c[2] * c[0];
  const Integer m = -disc;
  if (is_perfect_square(m)) return 4;
  if (m % 3 == 0 && is_perfect_square(m / 3)) return 6;
  return 2;
}

void require_nonzero(const FieldElement& a) {
  if (a.is_zero()) throw Error("field element must be nonzero");
}

GradedGroup lattice_homology(int degree_max) {
  GradedGroup h(degree_max);
  if (degree_max >= 0) h.set(0, GroupDescriptor::free(1));
  for (int q = 1; q <= degree_max; ++q) h.set(q, GroupDescriptor::free(Cardinality::infinite()));
  return h;
}

}  // namespace

Poly::Poly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw Error("polynomial must have degree at least 1");
  if (coeffs_.back() < 0) throw Error("leading coefficient must be positive");
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error("empty polynomial");

  std::map<std::size_t, Integer> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int term_sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      term_sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error("malformed polynomial '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error("malformed polynomial '" + std::string(text) + "'");
    pos = end;

    const auto x = term.find('x');
    Integer coeff = 1;
    std::size_t exponent = 0;
    if (x == std::string::npos) {
      coeff = parse_integer(term);
    } else {
      std::string head = term.substr(0, x);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = parse_integer(head);
      const std::string tail = term.substr(x + 1);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail[0] == '^' && tail.size() > 1) {
        const Integer e = parse_integer(tail.substr(1));
        if (e < 0 || !e.fits_ulong_p()) throw Error("bad exponent in '" + std::string(text) + "'");
        exponent = e.get_ui();
      } else {
        throw Error("malformed term '" + term + "'");
      }
    }
    terms[exponent] += term_sign * coeff;
  }
  std::vector<Integer> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Poly(std::move(coeffs));
}

std::string Poly::to_string() const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k > 0 && mag != 1) out += "*";
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Poly cyclotomic(unsigned long n) {
  if (n == 0) throw Error("cyclotomic index must be positive");
  std::map<unsigned long, std::vector<Integer>> memo;
  return Poly(cyclotomic_coeffs(n, memo));
}

std::size_t sturm_real_roots(const Poly& f) {
  std::vector<QPoly> chain{to_qpoly(f), derivative(to_qpoly(f))};
  for (;;) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (chain.back().size() > 1) throw Error("polynomial " + f.to_string() + " is not squarefree");
  std::vector<int> at_plus, at_minus;
  for (const auto& p : chain) {
    const int lead = sign(p.back());
    at_plus.push_back(lead);
    at_minus.push_back(((p.size() - 1) % 2 == 0) ? lead : -lead);
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

bool has_rational_root(const Poly& f) {
  const auto& c = f.coefficients();
  if (c.front() == 0) return true;
  for (const auto& p : positive_divisors(c.front()))
    for (const auto& q : positive_divisors(c.back()))
      for (int s : {1, -1}) {
        Rational x(s * p, q);
        x.canonicalize();
        if (evaluate(f, x) == 0) return true;
      }
  return false;
}

NumberFieldProfile build_profile(const Poly& f, std::optional<unsigned long> mu_hint) {
  NumberFieldProfile p;
  p.polynomial = f;
  p.degree = f.degree();
  p.real_embeddings = sturm_real_roots(f);
  if (p.degree > 1 && p.degree <= 3 && has_rational_root(f))
    throw Error("polynomial " + f.to_string() + " has a rational root and is reducible");
  p.complex_pairs = (p.degree - p.real_embeddings) / 2;
  p.totally_imaginary = p.real_embeddings == 0;

  std::optional<unsigned long> computed;
  if (!p.totally_imaginary) {
    computed = 2;
    p.mu_rule = "real embedding";
  } else if (auto n = mu_from_cyclotomic_table(f)) {
    computed = n;
    p.mu_rule = "cyclotomic table";
  } else if (p.degree == 2) {
    computed = mu_of_imaginary_quadratic(f);
    p.mu_rule = "imaginary quadratic";
  }

  if (mu_hint) {
    const unsigned long m = *mu_hint;
    if (m < 2 || m % 2 != 0) throw Error("|mu| must be even, got " + std::to_string(m));
    if (p.degree % euler_phi(m) != 0)
      throw Error("phi(" + std::to_string(m) + ") = " + std::to_string(euler_phi(m)) + " does not divide the degree " +
                  std::to_string(p.degree));
    if (!p.totally_imaginary && m != 2) throw Error("a field with a real embedding has |mu| = 2, hint was " + std::to_string(m));
    if (computed && *computed != m)
      throw Error("hint |mu| = " + std::to_string(m) + " conflicts with computed |mu| = " + std::to_string(*computed));
  }
  if (computed) {
    p.mu_order = *computed;
    p.mu_source = MuSource::Computed;
  } else if (mu_hint) {
    p.mu_order = *mu_hint;
    p.mu_source = MuSource::Asserted;
    p.mu_rule = "hint";
  } else {
    throw Error("cannot determine |mu| for " + f.to_string() + "; a hint is required");
  }
  return p;
}

FieldElement::FieldElement(const Poly& modulus, std::vector<Rational> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
  const auto& f = modulus_.coefficients();
  const std::size_t d = modulus_.degree();
  for (std::size_t k = coeffs_.size(); k-- > d;) {
    if (coeffs_[k] == 0) continue;
    const Rational c = coeffs_[k] / f[d];
    for (std::size_t i = 0; i <= d; ++i) coeffs_[k - d + i] -= c * f[i];
  }
  coeffs_.resize(d, 0);
  for (auto& c : coeffs_) c.canonicalize();
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (!(a.modulus_ == b.modulus_)) throw Error("field elements have different moduli");
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return FieldElement(a.modulus_, std::move(prod));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (!(a.modulus_ == b.modulus_)) throw Error("field elements have different moduli");
  std::vector<Rational> sum = a.coeffs_;
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
  return FieldElement(a.modulus_, std::move(sum));
}

RatMatrix multiplication_matrix(const FieldElement& a) {
  require_nonzero(a);
  const std::size_t d = a.modulus().degree();
  const FieldElement x = FieldElement::generator(a.modulus());
  RatMatrix m(d, d);
  FieldElement column = a;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = column.coefficients()[i];
    column = column * x;
  }
  return m;
}

Rational field_norm(const FieldElement& a) { return determinant(multiplication_matrix(a)); }

int sign_of(const FieldElement& a) { return sgn(field_norm(a)); }

RatMatrix theta_matrix(const FieldElement& a, std::size_t q) {
  const RatMatrix m = multiplication_matrix(a);
  if (q > m.rows()) throw Error("exterior degree " + std::to_string(q) + " exceeds the field degree");
  return Rational(1 / abs(determinant(m))) * exterior_power_matrix(m, q);
}

bool vanishing_check(const FieldElement& a, std::size_t q) {
  if (q >= a.modulus().degree()) throw Error("vanishing_check requires q below the field degree");
  const RatMatrix theta = theta_matrix(a, q);
  return determinant(RatMatrix::identity(theta.rows()) - theta) != 0;
}

GradedGroup theorem_a_homology(const NumberFieldProfile& profile, int n_max) {
  if (n_max < 0) throw Error("degree bound must be non-negative");
  const auto inf = Cardinality::infinite();
  const int d = static_cast<int>(profile.degree);
  const Integer mu(profile.mu_order);
  GradedGroup h(n_max);
  for (int n = d; n <= n_max; ++n) {
    if (profile.totally_imaginary) {
      if (n == d)
        h.set(n, GroupDescriptor::free(1));
      else
        h.set(n, GroupDescriptor(inf, {{mu, n == d + 1 ? Cardinality(1) : inf}}));
    } else {
      h.set(n, GroupDescriptor::cyclic(2, n == d ? Cardinality(1) : inf));
    }
  }
  return h;
}

GradedGroup theorem_a_via_kunneth(const NumberFieldProfile& profile, int n_max) {
  if (n_max < 0) throw Error("degree bound must be non-negative");
  const int d = static_cast<int>(profile.degree);
  GradedGroup shifted(n_max);
  const int m = n_max - d;
  if (m < 0) return shifted;

  // K^* = mu x Lambda with Lambda free of infinite rank.
  GradedGroup twisted;
  if (profile.totally_imaginary) {
    twisted = cyclic_group_homology(profile.mu_order, IntMatrix{{1}}, 1, m);
  } else if (profile.real_embeddings % 2 == 1) {
    // -1 has sign -1; Lambda can be chosen inside the kernel of the sign.
    twisted = cyclic_group_homology(2, IntMatrix{{-1}}, 1, m);
  } else {
    // -1 has sign +1; one basis vector of Lambda carries the sign.
    twisted = kunneth_assemble(cyclic_group_homology(2, IntMatrix{{1}}, 1, m), koszul_group_homology({IntMatrix{{-1}}}, 1));
  }
  const GradedGroup h = kunneth_assemble(twisted, lattice_homology(m));
  for (int n = 0; n <= m; ++n) shifted.set(n + d, h.at(n));
  return shifted;
}

TfgReport tfg_report(const NumberFieldProfile& profile) {
  const int d = static_cast<int>(profile.degree);
  const GradedGroup h = theorem_a_homology(profile, d);
  TfgReport r;
  r.low_degree_homology = GradedGroup(d);
  for (int n = 1; n <= d; ++n) r.low_degree_homology.set(n, h.at(n));
  r.simple = !profile.is_rationals();
  r.abelianization = r.low_degree_homology.at(1);
  r.rationally_acyclic = profile.real_embeddings > 0;
  return r;
}

SymbolicKTheory ring_cstar_ktheory(const NumberFieldProfile& profile) {
  const auto inf = GroupDescriptor::free(Cardinality::infinite());
  SymbolicKTheory k;
  k.groups = {inf, inf};
  k.torsion_free = true;
  k.formula = profile.totally_imaginary ? "Z^" + std::to_string(profile.mu_order) + " ⊗ ∧^*Γ" : "∧^*Γ";
  return k;
}

Z2Graded torsionfree_submonoid_ktheory(std::size_t rank, const std::vector<int>& signs, std::size_t degree) {
  if (rank == 0) throw Error("the submonoid needs at least one generator");
  if (signs.size() != rank) throw Error("expected one sign per generator");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error("signs must be +1 or -1");
  const bool trivial = std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
  const std::size_t n_choose = trivial ? rank : rank - 1;
  Integer parity_sum[2] = {0, 0};
  for (std::size_t p = 0; p <= n_choose; ++p) parity_sum[p % 2] += binomial(n_choose, p);
  auto group = [&](std::size_t n) {
    const std::uint64_t count = parity_sum[(n + degree) % 2].get_ui();
    return trivial ? GroupDescriptor::free(count) : GroupDescriptor::cyclic(2, count);
  };
  return {group(0), group(1)};
}

}  // namespace homkit
