#include "logsurf/linalg.hpp"

#include <numeric>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

// Row-reduces m in place (partial pivoting on the first nonzero entry) and
// returns the pivot columns. When `sign` is given it tracks row swaps.
std::vector<std::size_t> row_echelon(QMatrix& m, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix solve_linear(const QMatrix& a, const QMatrix& b) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "solve_linear needs a square matrix");
  if (b.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t n = a.rows();
  const std::size_t w = n + b.cols();
  QMatrix aug(n, w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular: " + a.str());
    if (p != c) {
      for (std::size_t j = 0; j < w; ++j) std::swap(aug(p, j), aug(c, j));
    }
    const Rational inv = Rational(1) / aug(c, c);
    for (std::size_t j = c; j < w; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c).is_zero()) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = c; j < w; ++j) {
        if (!aug(c, j).is_zero()) aug(i, j) -= f * aug(c, j);
      }
    }
  }
  QMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  }
  return x;
}

QVector solve_linear(const QMatrix& a, const QVector& b) {
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve_linear(a, rhs).column(0);
}

std::optional<QVector> solve_consistent(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_echelon(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  QVector x(n);
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    Rational s = aug(r, n);
    for (std::size_t j = c + 1; j < n; ++j) {
      if (!aug(r, j).is_zero()) s -= aug(r, j) * x[j];
    }
    x[c] = s / aug(r, c);
  }
  return x;
}

Rational determinant(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  QMatrix m = a;
  int sign = 1;
  const auto pivots = row_echelon(m, &sign);
  if (pivots.size() < m.rows()) return Rational(0);
  Rational det(sign);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::vector<std::size_t> pivot_columns(const QMatrix& a) {
  QMatrix m = a;
  return row_echelon(m);
}

std::size_t rank(const QMatrix& a) {
  QMatrix m = a;
  return row_echelon(m).size();
}

std::vector<Rational> leading_principal_minors(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "minors of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> minors;
  minors.reserve(n);
  // Elimination without row exchanges: the k-th leading minor is the product
  // of the first k pivots for as long as no pivot vanishes.
  QMatrix m = a;
  Rational running(1);
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (m(k, k).is_zero()) break;
    running *= m(k, k);
    minors.push_back(running);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      }
    }
  }
  for (; k < n; ++k) {
    std::vector<std::size_t> idx(k + 1);
    std::iota(idx.begin(), idx.end(), 0);
    minors.push_back(determinant(a.principal_submatrix(idx)));
  }
  return minors;
}

bool is_negative_definite(const QMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric: " + a.str());
  const std::size_t n = a.rows();
  QMatrix m = a;
  for (std::size_t k = 0; k < n; ++k) {
    // k-th pivot = minor_{k+1} / minor_k; negative definiteness forces every
    // pivot negative, which is the alternating-sign condition on the minors.
    if (m(k, k).sign() >= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      }
    }
  }
  return true;
}

std::optional<QVector> find_nonnegative_combination(std::span<const QVector> columns, const QVector& target) {
  const std::size_t d = target.size();
  const std::size_t k = columns.size();
  for (const auto& c : columns) {
    if (c.size() != d) throw Error(ErrorCode::DimensionMismatch, "cone generator dimension mismatch");
  }
  // Tableau columns: [lambda_0..lambda_{k-1} | artificial_0..artificial_{d-1} | rhs].
  const std::size_t width = k + d + 1;
  const std::size_t rhs = k + d;
  QMatrix t(d, width);
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) {
    const bool flip = target[i].sign() < 0;
    for (std::size_t j = 0; j < k; ++j) t(i, j) = flip ? -columns[j][i] : columns[j][i];
    t(i, k + i) = 1;
    t(i, rhs) = flip ? -target[i] : target[i];
    basis[i] = k + i;
  }
  // Phase-one objective: minimise the sum of artificials. obj holds reduced costs
  // and obj[rhs] holds minus the current objective value.
  QVector obj(width);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) obj[j] -= t(i, j);
    obj[rhs] -= t(i, rhs);
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = d;
    Rational best;
    for (std::size_t i = 0; i < d; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) throw Error(ErrorCode::Internal, "phase-one simplex reported unbounded");
    const Rational inv = Rational(1) / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) {
      if (!t(leave, j).is_zero()) t(leave, j) *= inv;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) {
        if (!t(leave, j).is_zero()) t(i, j) -= f * t(leave, j);
      }
    }
    if (!obj[enter].is_zero()) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (!t(leave, j).is_zero()) obj[j] -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }
  if (!obj[rhs].is_zero()) return std::nullopt;
  QVector lambda(k);
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i] < k) lambda[basis[i]] = t(i, rhs);
  }
  return lambda;
}

}  // namespace logsurf
