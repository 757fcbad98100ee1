#pragma once

// Dense exact matrices over a field, stored as Eigen matrices of Scalar.
//
// Block order for tensor products is fixed once here: in kronecker(A, B) the
// left factor is the outer index, (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l).
// Every tensor construction downstream relies on that convention.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "tenscat/scalar.hpp"

namespace tenscat {

using Index = Eigen::Index;

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = Mat<Scalar>;
using Vector = Vec<Scalar>;

template <class Derived1, class Derived2>
Mat<typename Derived1::Scalar> kronecker(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using T = typename Derived1::Scalar;
  Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  const T zero(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      auto blk = out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols());
      if (a(i, j) == zero)
        blk.setZero();
      else
        blk = a(i, j) * b;
    }
  return out;
}

/// Field shared by all typed entries, if any entry is typed.
/// Throws FieldMismatch when two entries disagree.
std::optional<FieldSpec> common_field(const Matrix& m);
std::optional<FieldSpec> common_field(const Matrix& a, const Matrix& b);

/// Copy of `m` with every untyped constant expressed in `field`.
Matrix in_field(const Matrix& m, const FieldSpec& field);

bool is_zero(const Matrix& m);

/// Product that skips zero entries; the exact scalars make this much faster
/// than the dense Eigen product on the sparse matrices tensor constructions
/// produce.
Matrix mul(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix zeros(Index rows, Index cols);
Matrix identity(Index n);

struct RowEchelon {
  Matrix reduced;
  std::vector<Index> pivots;
  Index rank = 0;
};

/// Reduced row echelon form. Rational matrices go through fraction-free
/// (Bareiss) elimination before back-substitution.
RowEchelon rref(const Matrix& m);
Index rank(const Matrix& m);

/// Basis of {v : M v = 0}, one column per vector.
Matrix kernel_matrix(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with M x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Some X with M X = B.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Columns of `m` at its pivot positions: a basis of the column space.
Matrix column_space(const Matrix& m);

/// Standard basis vectors completing the independent columns of `basis` to
/// a basis of the ambient space.
Matrix complement_basis(const Matrix& basis);

Matrix permutation_matrix(const std::vector<Index>& image);  // column j -> e_{image[j]}

}  // namespace tenscat
