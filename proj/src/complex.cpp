#include "homkit/complex.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "homkit/linalg.hpp"

namespace homkit {

CoefficientRing CoefficientRing::localized(std::vector<Integer> primes) {
  for (const auto& p : primes)
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw Error("Z[P^-1]: " + homkit::to_string(p) + " is not a prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) return integers();
  return {RingKind::Localized, std::move(primes)};
}

bool CoefficientRing::is_unit(const Integer& x) const {
  if (x == 0) return false;
  switch (kind) {
    case RingKind::Integers:
      return abs(x) == 1;
    case RingKind::Rationals:
      return true;
    case RingKind::Localized: {
      Integer r = abs(x);
      for (const auto& p : inverted_primes)
        while (r % p == 0) r /= p;
      return r == 1;
    }
  }
  return false;
}

std::string CoefficientRing::to_string() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::Localized: {
      std::ostringstream os;
      os << "Z[1/";
      for (std::size_t i = 0; i < inverted_primes.size(); ++i) os << (i ? "," : "") << inverted_primes[i];
      os << ']';
      return os.str();
    }
  }
  return "?";
}

// ------------------------------------------------------------- ChainComplex

ChainComplex::ChainComplex(CoefficientRing ring, int lo, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (boundaries_.size() != expected)
    throw Error("ChainComplex: expected " + std::to_string(expected) + " boundary matrices, got " +
                std::to_string(boundaries_.size()));
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    const auto& b = boundaries_[k];
    if (b.rows() != ranks_[k] || b.cols() != ranks_[k + 1])
      throw Error("ChainComplex: boundary out of degree " + std::to_string(lo_ + static_cast<int>(k) + 1) +
                  " has shape " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                  std::to_string(ranks_[k]) + "x" + std::to_string(ranks_[k + 1]));
  }
  for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k)
    if (!(boundaries_[k] * boundaries_[k + 1]).is_zero())
      throw Error("ChainComplex: d o d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k) + 2));
}

std::size_t ChainComplex::rank(int degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return ranks_[static_cast<std::size_t>(degree - lo_)];
}

IntMatrix ChainComplex::boundary(int degree) const {
  if (degree > lo_ && degree <= hi()) return boundaries_[static_cast<std::size_t>(degree - lo_ - 1)];
  return IntMatrix(rank(degree - 1), rank(degree));
}

ChainComplex ChainComplex::two_term(const IntMatrix& map, CoefficientRing ring) {
  return ChainComplex(std::move(ring), 0, {map.rows(), map.cols()}, {map});
}

ChainComplex ChainComplex::concentrated(int degree, std::size_t rank, CoefficientRing ring) {
  return ChainComplex(std::move(ring), degree, {rank}, {});
}

// ----------------------------------------------------------------- homology

GradedGroup homology(const ChainComplex& c) {
  GradedGroup out;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const IntMatrix out_map = c.boundary(n);
    const IntMatrix in_map = c.boundary(n + 1);
    SnfResult s = snf(out_map);
    const std::size_t r = s.rank();
    const std::size_t kernel_dim = c.rank(n) - r;
    if (c.ring().kind == RingKind::Rationals) {
      out.set(n, GroupDescriptor::free(kernel_dim - rational_rank(in_map)));
      continue;
    }
    // The image lies in the kernel = V[:, r:], so its kernel coordinates are
    // the trailing rows of V^-1 * image.
    IntMatrix coords = (s.V_inverse * in_map).row_block(r, kernel_dim);
    FgAbGroup h = from_presentation(kernel_dim, coords);
    if (c.ring().kind == RingKind::Localized) h = localize(h, c.ring().inverted_primes).group;
    out.set(n, h);
  }
  return out;
}

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d) {
  if (!(c.ring() == d.ring()))
    throw Error("tensor_complex: coefficient rings differ (" + c.ring().to_string() + " vs " + d.ring().to_string() + ")");
  if (c.ranks().empty() || d.ranks().empty()) return ChainComplex(c.ring(), 0, {}, {});

  const int lo = c.lo() + d.lo();
  const int hi = c.hi() + d.hi();
  // offset[n][p]: start of the C_p (x) D_{n-p} block inside degree n.
  auto block_offsets = [&](int n) {
    std::vector<std::pair<int, std::size_t>> offs;
    std::size_t acc = 0;
    for (int p = c.lo(); p <= c.hi(); ++p) {
      int q = n - p;
      if (q < d.lo() || q > d.hi()) continue;
      offs.emplace_back(p, acc);
      acc += c.rank(p) * d.rank(q);
    }
    return std::make_pair(offs, acc);
  };

  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(block_offsets(n).second);

  std::vector<IntMatrix> boundaries;
  for (int n = lo + 1; n <= hi; ++n) {
    auto [src, src_size] = block_offsets(n);
    auto [dst, dst_size] = block_offsets(n - 1);
    auto dst_offset = [&dst = dst](int p) -> std::optional<std::size_t> {
      for (auto [pp, off] : dst)
        if (pp == p) return off;
      return std::nullopt;
    };
    IntMatrix b(dst_size, src_size);
    for (auto [p, col_off] : src) {
      const int q = n - p;
      // dx (x) y lands in C_{p-1} (x) D_q.
      if (auto row_off = dst_offset(p - 1); row_off && c.rank(p - 1) > 0) {
        IntMatrix blk = kronecker(c.boundary(p), IntMatrix::identity(d.rank(q)));
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j) b(*row_off + i, col_off + j) = blk(i, j);
      }
      // (-1)^p x (x) dy lands in C_p (x) D_{q-1}.
      if (auto row_off = dst_offset(p); row_off && d.rank(q - 1) > 0) {
        IntMatrix blk = kronecker(IntMatrix::identity(c.rank(p)), d.boundary(q));
        const Integer sign = (p % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j) b(*row_off + i, col_off + j) = sign * blk(i, j);
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(c.ring(), lo, std::move(ranks), std::move(boundaries));
}

// ------------------------------------------------------------ group homology

ChainComplex koszul_complex(const std::vector<IntMatrix>& actions, std::size_t module_rank,
                            const CoefficientRing& ring) {
  const std::size_t n = actions.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = actions[i];
    if (a.rows() != module_rank || a.cols() != module_rank)
      throw Error("koszul: action " + std::to_string(i) + " is not " + std::to_string(module_rank) + "x" +
                  std::to_string(module_rank));
    if (!ring.is_unit(determinant(a)))
      throw Error("koszul: action " + std::to_string(i) + " has determinant " + to_string(determinant(a)) +
                  ", not a unit of " + ring.to_string());
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(a * actions[j] == actions[j] * a))
        throw Error("koszul: actions " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  }

  std::vector<IntMatrix> shifted;
  for (const auto& a : actions) shifted.push_back(a - IntMatrix::identity(module_rank));

  std::vector<std::vector<std::vector<std::size_t>>> bases;
  std::vector<std::size_t> ranks;
  for (std::size_t p = 0; p <= n; ++p) {
    bases.push_back(subsets_of_size(n, p));
    ranks.push_back(bases.back().size() * module_rank);
  }

  std::vector<IntMatrix> boundaries;
  for (std::size_t p = 1; p <= n; ++p) {
    IntMatrix b(ranks[p - 1], ranks[p]);
    const auto& lower = bases[p - 1];
    for (std::size_t col = 0; col < bases[p].size(); ++col) {
      const auto& subset = bases[p][col];
      for (std::size_t k = 0; k < subset.size(); ++k) {
        std::vector<std::size_t> face = subset;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        const std::size_t row = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
        const Integer sign = (k % 2 == 0) ? 1 : -1;
        const IntMatrix& blk = shifted[subset[k]];
        for (std::size_t i = 0; i < module_rank; ++i)
          for (std::size_t j = 0; j < module_rank; ++j)
            b(row * module_rank + i, col * module_rank + j) += sign * blk(i, j);
      }
    }
    boundaries.push_back(std::move(b));
  }
  return ChainComplex(ring, 0, std::move(ranks), std::move(boundaries));
}

GradedGroup koszul_group_homology(const std::vector<IntMatrix>& actions, std::size_t module_rank,
                                  const CoefficientRing& ring) {
  return homology(koszul_complex(actions, module_rank, ring));
}

ChainComplex cyclic_resolution_complex(unsigned long order, const IntMatrix& action, int degree_max) {
  if (order == 0) throw Error("cyclic_group_homology: order must be positive");
  if (action.rows() != action.cols()) throw Error("cyclic_group_homology: action is not square");
  if (degree_max < 0) throw Error("cyclic_group_homology: degree_max must be >= 0");
  const std::size_t m = action.rows();
  const IntMatrix id = IntMatrix::identity(m);
  IntMatrix power = id, norm(m, m);
  for (unsigned long i = 0; i < order; ++i) {
    norm = norm + power;
    power = power * action;
  }
  if (!(power == id)) throw Error("cyclic_group_homology: T^" + std::to_string(order) + " != I");

  const IntMatrix t_minus_i = action - id;
  // Degrees 0..degree_max+1 so that H_degree_max sees its incoming boundary.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(degree_max) + 2, m);
  std::vector<IntMatrix> boundaries;
  for (int p = 1; p <= degree_max + 1; ++p) boundaries.push_back(p % 2 == 1 ? t_minus_i : norm);
  return ChainComplex(CoefficientRing::integers(), 0, std::move(ranks), std::move(boundaries));
}

GradedGroup cyclic_group_homology(unsigned long order, const IntMatrix& action, std::size_t module_rank,
                                  int degree_max) {
  if (action.rows() != module_rank) throw Error("cyclic_group_homology: action size does not match module rank");
  GradedGroup h = homology(cyclic_resolution_complex(order, action, degree_max));
  GradedGroup out(degree_max);
  for (const auto& [n, g] : h.groups())
    if (n <= degree_max) out.set(n, g);
  return out;
}

KunnethCheck kunneth_oracle_check(const ChainComplex& c, const ChainComplex& d) {
  KunnethCheck r;
  r.direct = homology(tensor_complex(c, d));
  r.assembled = kunneth_assemble(homology(c), homology(d));
  r.pass = r.direct.groups() == r.assembled.groups();
  std::ostringstream os;
  const int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();
  for (int n = lo; n <= hi; ++n) {
    auto a = r.direct.at(n), b = r.assembled.at(n);
    if (!(a == b)) os << "degree " << n << ": tensor complex " << a.to_string() << " vs assembled " << b.to_string() << "; ";
  }
  r.detail = r.pass ? "agree in all degrees" : os.str();
  return r;
}

}  // namespace homkit
