#include "tenscat/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace tenscat {

std::optional<FieldSpec> common_field(const Matrix& m) {
  std::optional<FieldSpec> field;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const Scalar& s = m(i, j);
      if (!s.typed()) continue;
      if (!field) {
        field = s.field();
      } else if (!(*field == s.field())) {
        throw FieldMismatch("matrix mixes entries from " + field->to_string() + " and " + s.field().to_string());
      }
    }
  return field;
}

std::optional<FieldSpec> common_field(const Matrix& a, const Matrix& b) {
  const auto fa = common_field(a);
  const auto fb = common_field(b);
  if (fa && fb && !(*fa == *fb))
    throw FieldMismatch("matrices over " + fa->to_string() + " and " + fb->to_string());
  return fa ? fa : fb;
}

Matrix in_field(const Matrix& m, const FieldSpec& field) {
  Matrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).in_field(field);
  return out;
}

bool is_zero(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimensions differ");
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& bkj = b(k, j);
      if (bkj.is_zero()) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        const Scalar& aik = a(i, k);
        if (!aik.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column counts differ");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

Matrix zeros(Index rows, Index cols) { return Matrix::Zero(rows, cols); }
Matrix identity(Index n) { return Matrix::Identity(n, n); }

namespace {

// Fraction-free forward elimination on an integer matrix followed by exact
// back-substitution over Q. Entries stay minors of the input during the
// forward pass, so every division is exact.
RowEchelon rref_rational(const Matrix& m, const std::optional<FieldSpec>& field) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (Index i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (Index j = 0; j < cols; ++j) {
      const mpq_class v = m(i, j).rational_value();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (Index j = 0; j < cols; ++j) {
      const mpq_class v = m(i, j).rational_value();
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num() * (lcm / v.get_den());
    }
  }

  RowEchelon out;
  mpz_class prev = 1;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(cols) && prow < static_cast<std::size_t>(rows); ++c) {
    std::size_t piv = prow;
    while (piv < static_cast<std::size_t>(rows) && a[piv][c] == 0) ++piv;
    if (piv == static_cast<std::size_t>(rows)) continue;
    std::swap(a[piv], a[prow]);
    const mpz_class p = a[prow][c];
    for (std::size_t i = prow + 1; i < static_cast<std::size_t>(rows); ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < static_cast<std::size_t>(cols); ++j) {
        mpz_class v = p * a[i][j] - f * a[prow][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = p;
    out.pivots.push_back(static_cast<Index>(c));
    ++prow;
  }
  out.rank = static_cast<Index>(out.pivots.size());

  std::vector<std::vector<mpq_class>> r(static_cast<std::size_t>(rows), std::vector<mpq_class>(static_cast<std::size_t>(cols)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(rows); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) r[i][j] = a[i][j];
  for (std::size_t k = static_cast<std::size_t>(out.rank); k-- > 0;) {
    const auto pc = static_cast<std::size_t>(out.pivots[k]);
    const mpq_class inv = 1 / r[k][pc];
    for (std::size_t j = pc; j < static_cast<std::size_t>(cols); ++j) r[k][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (r[i][pc] == 0) continue;
      const mpq_class f = r[i][pc];
      for (std::size_t j = pc; j < static_cast<std::size_t>(cols); ++j) r[i][j] -= f * r[k][j];
    }
  }
  out.reduced.resize(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const mpq_class& v = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out.reduced(i, j) = field ? Scalar::from_rational(v, *field) : Scalar::untyped(v);
    }
  return out;
}

RowEchelon rref_field(Matrix a) {
  RowEchelon out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index prow = 0;
  for (Index c = 0; c < cols && prow < rows; ++c) {
    Index piv = prow;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != prow) a.row(piv).swap(a.row(prow));
    const Scalar inv = a(prow, c).inverse();
    for (Index j = c; j < cols; ++j) a(prow, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == prow || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (Index j = c; j < cols; ++j)
        if (!a(prow, j).is_zero()) a(i, j) -= f * a(prow, j);
    }
    out.pivots.push_back(c);
    ++prow;
  }
  out.rank = prow;
  out.reduced = std::move(a);
  return out;
}

}  // namespace

RowEchelon rref(const Matrix& m) {
  const auto field = common_field(m);
  if (!field || field->kind == FieldKind::rationals) return rref_rational(m, field);
  return rref_field(in_field(m, *field));
}

Index rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_matrix(const Matrix& m) {
  const RowEchelon e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix k = Matrix::Zero(cols, cols - e.rank);
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, out) = Scalar(1);
    for (Index i = 0; i < e.rank; ++i) k(e.pivots[static_cast<std::size_t>(i)], out) = -e.reduced(i, f);
    ++out;
  }
  if (const auto field = common_field(m)) return in_field(k, *field);
  return k;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Matrix k = kernel_matrix(m);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(k.cols()));
  for (Index j = 0; j < k.cols(); ++j) out.emplace_back(k.col(j));
  return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong number of rows");
  const RowEchelon e = rref(hcat(m, b));
  for (Index p : e.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x = Matrix::Zero(m.cols(), b.cols());
  for (Index i = 0; i < e.rank; ++i) x.row(e.pivots[static_cast<std::size_t>(i)]) = e.reduced.block(i, m.cols(), 1, b.cols());
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  Matrix rhs = b;
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  return Vector(x->col(0));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, identity(m.rows()));
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = m;
  if (const auto field = common_field(m)) a = in_field(m, *field);
  Scalar det(1);
  const Index n = a.rows();
  for (Index c = 0; c < n; ++c) {
    Index piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return det * Scalar(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix column_space(const Matrix& m) {
  const RowEchelon e = rref(m);
  Matrix out(m.rows(), e.rank);
  for (Index i = 0; i < e.rank; ++i) out.col(i) = m.col(e.pivots[static_cast<std::size_t>(i)]);
  return out;
}

Matrix complement_basis(const Matrix& basis) {
  const Index n = basis.rows();
  const RowEchelon e = rref(hcat(basis, identity(n)));
  std::vector<Index> extra;
  for (Index p : e.pivots)
    if (p >= basis.cols()) extra.push_back(p - basis.cols());
  Matrix out = Matrix::Zero(n, static_cast<Index>(extra.size()));
  for (std::size_t j = 0; j < extra.size(); ++j) out(extra[j], static_cast<Index>(j)) = Scalar(1);
  return out;
}

Matrix permutation_matrix(const std::vector<Index>& image) {
  const auto n = static_cast<Index>(image.size());
  Matrix p = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) p(image[static_cast<std::size_t>(j)], j) = Scalar(1);
  return p;
}

}  // namespace tenscat
