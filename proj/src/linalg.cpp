#include "homkit/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace homkit {

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0, n = rank(); i < n; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Working state for the reduction: every operation on `a` is mirrored on the
// transforms so that U * M * V == a holds throughout.
struct SnfState {
  IntMatrix a, u, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  // col[dst] += f * col[src]; the inverse operation acts on rows of v_inv.
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
    v_inv.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    u.negate_row(r);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Rounded quotient so remainders stay at most |b|/2 in absolute value.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer r = a - q * b;
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = min_abs_entry(s.a, t);
    if (!pivot) break;
    s.swap_rows(t, pivot->first);
    s.swap_cols(t, pivot->second);

    for (;;) {
      const Integer p = s.a(t, t);
      for (std::size_t i = t + 1; i < s.a.rows(); ++i)
        if (s.a(i, t) != 0) s.add_row(i, t, -nearest_quotient(s.a(i, t), p));
      for (std::size_t j = t + 1; j < s.a.cols(); ++j)
        if (s.a(t, j) != 0) s.add_col(j, t, -nearest_quotient(s.a(t, j), p));

      // A nonzero remainder in the pivot row/column is strictly smaller than
      // the pivot: promote the smallest one and repeat.
      std::optional<std::pair<std::size_t, std::size_t>> smaller;
      Integer smaller_abs;
      for (std::size_t i = t + 1; i < s.a.rows(); ++i)
        if (s.a(i, t) != 0 && (!smaller || abs(s.a(i, t)) < smaller_abs)) {
          smaller = {i, t};
          smaller_abs = abs(s.a(i, t));
        }
      for (std::size_t j = t + 1; j < s.a.cols(); ++j)
        if (s.a(t, j) != 0 && (!smaller || abs(s.a(t, j)) < smaller_abs)) {
          smaller = {t, j};
          smaller_abs = abs(s.a(t, j));
        }
      if (smaller) {
        s.swap_rows(t, smaller->first);
        s.swap_cols(t, smaller->second);
        continue;
      }

      // Row and column cleared; enforce divisibility of the remaining block.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < s.a.rows() && !offending_row; ++i)
        for (std::size_t j = t + 1; j < s.a.cols(); ++j)
          if (s.a(i, j) % p != 0) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      s.add_row(t, *offending_row, 1);
    }
    if (s.a(t, t) < 0) s.negate_row(t);
  }
  return SnfResult{std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.v_inv)};
}

CokernelInvariants cokernel_invariants(const IntMatrix& relations) {
  SnfResult r = snf(relations);
  CokernelInvariants out;
  out.free_rank = relations.rows() - r.rank();
  for (const auto& d : r.diagonal())
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

std::size_t rational_rank(const IntMatrix& m) {
  // Fraction-free elimination: cross-multiply and strip row content.
  IntMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pr = rank;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(rank, pr);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = a(i, c), g = a(rank, c);
      Integer content = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = g * a(i, j) - f * a(rank, j);
        content = gcd(content, a(i, j));
      }
      if (content > 1)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) /= content;
    }
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pr = rank;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(rank, pr);
    for (std::size_t i = rank + 1; i < a.rows(); ++i)
      if (a(i, c) != 0) a.add_row_multiple(i, rank, Rational(-a(i, c) / a(rank, c)));
    ++rank;
  }
  return rank;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < a.rows(); ++c) {
    std::size_t pr = c;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) return 0;
    if (pr != c) {
      a.swap_rows(c, pr);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i)
      if (a(i, c) != 0) a.add_row_multiple(i, c, Rational(-a(i, c) / a(c, c)));
  }
  return det;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  SnfResult r = snf(m);
  const std::size_t rank = r.rank();
  return r.V.column_block(rank, m.cols() - rank);
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> cur(q);
  for (std::size_t i = 0; i < q; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = q;
    while (i > 0 && cur[i - 1] == n - q + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < q; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

RatMatrix exterior_power_matrix(const RatMatrix& m, std::size_t q) {
  if (m.rows() != m.cols()) throw Error("exterior_power_matrix: matrix is not square");
  if (q > m.rows()) throw Error("exterior_power_matrix: degree " + std::to_string(q) + " exceeds size " +
                                std::to_string(m.rows()));
  const auto basis = subsets_of_size(m.rows(), q);
  RatMatrix out(basis.size(), basis.size());
  RatMatrix minor(q, q);
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (std::size_t t = 0; t < basis.size(); ++t) {
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) minor(i, j) = m(basis[s][i], basis[t][j]);
      out(s, t) = determinant(minor);
    }
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace homkit
