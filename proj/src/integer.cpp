#include "tenscat/integer.hpp"

#include <stdexcept>

namespace tenscat {

IntMatrix int_identity(Index n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(const IntMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : a_(m), u_(int_identity(m.rows())), ui_(int_identity(m.rows())), v_(int_identity(m.cols())), vi_(int_identity(m.cols())) {}

  SmithDecomposition run() {
    const Index r = a_.rows();
    const Index c = a_.cols();
    Index t = 0;
    for (; t < std::min(r, c); ++t) {
      Index pi = -1, pj = -1;
      if (!smallest(t, r, t, c, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clear = true;
        for (Index i = t + 1; i < r; ++i) {
          if (a_(i, t) == 0) continue;
          add_row(i, t, -BigInt(a_(i, t) / a_(t, t)));
          if (a_(i, t) != 0) clear = false;
        }
        for (Index j = t + 1; j < c; ++j) {
          if (a_(t, j) == 0) continue;
          add_col(j, t, -BigInt(a_(t, j) / a_(t, t)));
          if (a_(t, j) != 0) clear = false;
        }
        if (!clear) {
          // A remainder survived: it is smaller than the pivot, so move it up.
          Index bi = t, bj = t;
          for (Index i = t; i < r; ++i)
            if (a_(i, t) != 0 && abs(a_(i, t)) < abs(a_(bi, bj))) bi = i, bj = t;
          for (Index j = t; j < c; ++j)
            if (a_(t, j) != 0 && abs(a_(t, j)) < abs(a_(bi, bj))) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        Index bad = -1;
        for (Index i = t + 1; i < r && bad < 0; ++i)
          for (Index j = t + 1; j < c; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, BigInt(1));
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.rank = t;
    out.d = std::move(a_);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(ui_);
    out.v_inv = std::move(vi_);
    return out;
  }

 private:
  bool smallest(Index r0, Index r1, Index c0, Index c1, Index& pi, Index& pj) const {
    bool found = false;
    BigInt best;
    for (Index j = c0; j < c1; ++j)
      for (Index i = r0; i < r1; ++i) {
        if (a_(i, j) == 0) continue;
        const BigInt v = abs(a_(i, j));
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  // row_i += q * row_k
  void add_row(Index i, Index k, const BigInt& q) {
    a_.row(i) += q * a_.row(k);
    u_.row(i) += q * u_.row(k);
    ui_.col(k) -= q * ui_.col(i);
  }
  // col_j += q * col_k
  void add_col(Index j, Index k, const BigInt& q) {
    a_.col(j) += q * a_.col(k);
    v_.col(j) += q * v_.col(k);
    vi_.row(k) -= q * vi_.row(j);
  }
  void swap_rows(Index i, Index k) {
    if (i == k) return;
    a_.row(i).swap(a_.row(k));
    u_.row(i).swap(u_.row(k));
    ui_.col(i).swap(ui_.col(k));
  }
  void swap_cols(Index j, Index k) {
    if (j == k) return;
    a_.col(j).swap(a_.col(k));
    v_.col(j).swap(v_.col(k));
    vi_.row(j).swap(vi_.row(k));
  }
  void negate_row(Index i) {
    a_.row(i) = -a_.row(i);
    u_.row(i) = -u_.row(i);
    ui_.col(i) = -ui_.col(i);
  }

  IntMatrix a_, u_, ui_, v_, vi_;
};

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& m) { return SmithWorker(m).run(); }

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithDecomposition full = smith_decomposition(m);
  return SmithForm{std::move(full.u), std::move(full.d), std::move(full.v), full.rank};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  return s.v.rightCols(m.cols() - s.rank);
}

std::optional<IntMatrix> integer_solve(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("integer_solve: right-hand side has wrong length");
  const SmithForm s = smith_normal_form(m);
  const IntMatrix ub = s.u * b;
  IntMatrix y = IntMatrix::Zero(m.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      if (i < s.rank) {
        if (ub(i, j) % s.d(i, i) != 0) return std::nullopt;
        y(i, j) = ub(i, j) / s.d(i, i);
      } else if (ub(i, j) != 0) {
        return std::nullopt;
      }
    }
  return IntMatrix(s.v * y);
}

std::optional<IntVector> integer_solve(const IntMatrix& m, const IntVector& b) {
  auto x = integer_solve(m, IntMatrix(b));
  if (!x) return std::nullopt;
  return IntVector(x->col(0));
}

BigInt integer_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  IntMatrix a = m;
  const Index n = a.rows();
  BigInt prev = 1;
  int sign = 1;
  for (Index k = 0; k < n; ++k) {
    Index piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? BigInt(1) : BigInt(sign * a(n - 1, n - 1));
}

}  // namespace tenscat
