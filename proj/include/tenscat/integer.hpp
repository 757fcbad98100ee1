#pragma once

// Arbitrary-precision integer matrices and the Smith normal form.

#include <optional>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "tenscat/matrix.hpp"

namespace tenscat {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;

struct SmithForm {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, d_1 | d_2 | ... , d_i >= 0
  IntMatrix v;  // unimodular, cols x cols
  Index rank = 0;
};

/// U M V = D with smallest-absolute-value pivoting.
SmithForm smith_normal_form(const IntMatrix& m);

/// Same decomposition, additionally returning U^{-1} and V^{-1}.
struct SmithDecomposition : SmithForm {
  IntMatrix u_inv;
  IntMatrix v_inv;
};
SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Z-basis of {x in Z^cols : M x = 0}, one column per generator.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some integer x with M x = b, if one exists.
std::optional<IntVector> integer_solve(const IntMatrix& m, const IntVector& b);
/// Some integer X with M X = B, if one exists (one Smith decomposition for all columns).
std::optional<IntMatrix> integer_solve(const IntMatrix& m, const IntMatrix& b);

BigInt integer_determinant(const IntMatrix& m);

IntMatrix int_identity(Index n);
bool is_zero(const IntMatrix& m);

}  // namespace tenscat
