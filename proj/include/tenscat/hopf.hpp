#pragma once

// Finite-dimensional Hopf algebras given by structure constants.
//
// Basis e_0..e_{d-1}. Products: e_i e_j = sum_k c[i][j][k] e_k. The
// comultiplication is a d^2 x d matrix whose column i holds Delta(e_i) in the
// basis e_a (x) e_b at row a*d + b (the kronecker order of matrix.hpp).

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tenscat/matrix.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

class FiniteDimAlgebra {
 public:
  /// `mult` has d^3 entries, c[i][j][k] at (i*d + j)*d + k.
  FiniteDimAlgebra(FieldSpec field, Index dim, std::vector<Scalar> mult, Vector unit);

  const FieldSpec& field() const { return field_; }
  Index dim() const { return dim_; }
  const Scalar& mult(Index i, Index j, Index k) const { return mult_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)]; }
  const std::vector<Scalar>& mult_table() const { return mult_; }
  const Vector& unit() const { return unit_; }

  /// Nonzero terms (k, c[i][j][k]) of e_i e_j.
  const std::vector<std::pair<Index, Scalar>>& product(Index i, Index j) const {
    return terms_[static_cast<std::size_t>(i * dim_ + j)];
  }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Product in the r-fold tensor power; vectors have length d^r.
  Vector multiply_tensor(const Vector& a, const Vector& b, int r) const;
  Vector basis_vector(Index i) const;
  Vector zero_vector() const;
  /// Matrix of v |-> a v.
  Matrix left_multiplication(const Vector& a) const;
  std::optional<Vector> inverse_element(const Vector& a) const;

 private:
  FieldSpec field_;
  Index dim_;
  std::vector<Scalar> mult_;
  Vector unit_;
  std::vector<std::vector<std::pair<Index, Scalar>>> terms_;
};

class HopfAlgebra {
 public:
  /// `antipode_inverse` is computed by matrix inversion when absent; it stays
  /// absent only if S is singular, which marks corrupted input.
  HopfAlgebra(FiniteDimAlgebra algebra, Matrix comult, Vector counit, Matrix antipode,
              std::optional<Matrix> antipode_inverse = std::nullopt, std::string name = {});

  const FiniteDimAlgebra& algebra() const { return algebra_; }
  const FieldSpec& field() const { return algebra_.field(); }
  Index dim() const { return algebra_.dim(); }
  const Matrix& comult() const { return comult_; }
  const Vector& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  const std::optional<Matrix>& antipode_inverse() const { return antipode_inverse_; }
  const std::string& name() const { return name_; }

  /// Basis indices that generate the algebra; intertwiner systems only need
  /// these. Defaults to every basis element.
  const std::vector<Index>& generators() const { return generators_; }
  void set_generators(std::vector<Index> g);
  void set_name(std::string n) { name_ = std::move(n); }

  /// Nonzero terms (a, b, coefficient) of Delta(e_i).
  const std::vector<std::tuple<Index, Index, Scalar>>& coproduct(Index i) const {
    return coproduct_terms_[static_cast<std::size_t>(i)];
  }
  Vector comultiply(const Vector& v) const;
  Vector apply_antipode(const Vector& v) const;

  /// Bit-level equality of all structure data.
  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  FiniteDimAlgebra algebra_;
  Matrix comult_;
  Vector counit_;
  Matrix antipode_;
  std::optional<Matrix> antipode_inverse_;
  std::string name_;
  std::vector<Index> generators_;
  std::vector<std::vector<std::tuple<Index, Index, Scalar>>> coproduct_terms_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Cases: associativity, unit, coassociativity, counit, bialgebra_compatibility,
/// antipode, antipode_inverse. Failures carry the first failing basis tuple.
VerificationReport check_hopf_axioms(const HopfAlgebra& h);

/// Group algebra from a multiplication table (table[a][b] = index of ab).
HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table, const FieldSpec& field = FieldSpec::rationals(),
                          std::string name = "group");
/// Basis {1, g, x, gx}.
HopfAlgebra sweedler_algebra(const FieldSpec& field = FieldSpec::rationals());
/// Basis g^i x^j at index j*n + i. Uses a primitive n-th root of unity of the
/// field unless `q` is given.
HopfAlgebra taft_algebra(int n, const FieldSpec& field, std::optional<Scalar> q = std::nullopt);
/// Default field for taft_algebra(n): Q for n = 2, Q(zeta_n) otherwise.
FieldSpec taft_default_field(int n);

/// Multiplication tables of the groups of order <= 8 by name: C1..C8, C2xC2,
/// C2xC4, C2xC2xC2, S3, D4, Q8.
std::vector<std::vector<int>> group_table(const std::string& name);
std::vector<std::string> group_names();

/// Built-in Hopf algebras by name: "sweedler", "taft" (with n), "kC2",
/// "kS3", ..., or a bare group name.
HopfAlgebra builtin_hopf(const std::string& name, int n = 0, std::optional<FieldSpec> field = std::nullopt);
std::vector<std::pair<std::string, int>> builtin_hopf_list();

struct TwistElement {
  Vector element;  // J in H (x) H, length d^2
  Vector inverse;  // J^{-1}
};

TwistElement trivial_twist(const HopfAlgebra& h);
/// J = (u (x) u) Delta(u^{-1}) for invertible u with eps(u) = 1: always a
/// valid twist.
TwistElement coboundary_twist(const HopfAlgebra& h, const Vector& u);

/// Cases: invertibility, counit_normalization, cocycle.
VerificationReport validate_twist(const HopfAlgebra& h, const TwistElement& j);

class InvalidTwist : public std::invalid_argument {
 public:
  InvalidTwist(const std::string& what, VerificationReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// H^J with Delta^J = J Delta(.) J^{-1} and S^J = U S(.) U^{-1},
/// U = m(id (x) S)(J). Throws InvalidTwist naming the failed clause.
HopfAlgebra drinfeld_twist(const HopfAlgebra& h, const TwistElement& j);

/// Seeded search for an invertible, counit-normalized J = 1(x)1 + t a(x)b
/// (a, b in ker eps) that is not a 2-cocycle.
std::optional<TwistElement> non_cocycle_perturbation(const HopfAlgebra& h, std::uint64_t seed, int attempts = 200);

}  // namespace tenscat
