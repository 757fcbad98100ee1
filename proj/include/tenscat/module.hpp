#pragma once

// Right modules over a finite-dimensional Hopf algebra.
//
// A module of dimension m stores one m x m matrix per algebra basis element:
// x . e_i = rho_i x. The right-module law reads rho_j rho_i = rho(e_i e_j).
// Tensor products act through the comultiplication, (m (x) n) . h =
// m . h_(1) (x) n . h_(2), with the kronecker block order of matrix.hpp.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tenscat/hopf.hpp"
#include "tenscat/linrep.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

class HModule {
 public:
  HModule() = default;
  /// Validates shapes and the right-module law.
  HModule(HopfPtr algebra, std::vector<Matrix> action);
  static HModule unchecked(HopfPtr algebra, Index dim, std::vector<Matrix> action);
  /// Same algebra, representation data replaced.
  HModule with_rep(LinRep rep) const;

  const HopfPtr& algebra() const { return algebra_; }
  const FieldSpec& field() const { return rep_->field; }
  Index dim() const { return rep_->dims.front(); }
  const Matrix& action(Index i) const { return rep_->ops[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& actions() const { return rep_->ops; }
  const LinRep& rep() const { return *rep_; }
  /// Operators that generate the action; intertwiner systems use only these.
  std::vector<std::size_t> constraint_ops() const;

  friend bool operator==(const HModule& a, const HModule& b);

 private:
  HopfPtr algebra_;
  std::shared_ptr<const LinRep> rep_;
};

/// First violation of the right-module law, as a description, if any.
std::optional<std::string> module_law_violation(const HopfAlgebra& h, const std::vector<Matrix>& action);

struct ModuleHom {
  HModule source;
  HModule target;
  Matrix matrix;  // target.dim() x source.dim()

  /// Validates shape and the intertwining property.
  static ModuleHom make(HModule source, HModule target, Matrix matrix);
};

bool same_algebra(const HModule& a, const HModule& b);
void require_same_algebra(const HModule& a, const HModule& b);

HModule trivial_module(const HopfPtr& h);
HModule regular_module(const HopfPtr& h);
/// One-dimensional module with e_i acting by chi[i].
HModule one_dim_module(const HopfPtr& h, const std::vector<Scalar>& chi);
/// Conjugate action P rho_i P^{-1}; P becomes an isomorphism M -> result.
HModule base_change(const HModule& m, const Matrix& p);

struct SubModule {
  HModule module;
  ModuleHom inclusion;
};
struct QuotientModule {
  HModule module;
  ModuleHom projection;
};
SubModule submodule(const HModule& m, const Matrix& basis);
QuotientModule quotient_module(const HModule& m, const Matrix& basis);
/// Span of v . H.
SubModule cyclic_submodule(const HModule& m, const Vector& v);

HModule direct_sum(const std::vector<HModule>& parts);
HModule tensor_module(const HModule& m, const HModule& n);
ModuleHom tensor_hom(const ModuleHom& f, const ModuleHom& g);

ModuleHom identity_hom(const HModule& m);
ModuleHom zero_hom(const HModule& a, const HModule& b);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);  // g after f

struct DualData {
  HModule dual;
  ModuleHom ev;    // left: M* (x) M -> k;  right: M (x) *M -> k
  ModuleHom coev;  // left: k -> M (x) M*;  right: k -> *M (x) M
};

/// M* with (f . h)(x) = f(x . S^{-1}(h)); ev(f (x) x) = f(x).
DualData left_dual_module(const HModule& m);
/// *M with (f . h)(x) = f(x . S(h)); ev'(x (x) f) = f(x).
DualData right_dual_module(const HModule& m);

/// Cases: ev_is_module_map, coev_is_module_map, zigzag_object, zigzag_dual.
VerificationReport check_duality(const HModule& m, const DualData& d, bool left);

std::vector<ModuleHom> hom_space(const HModule& m, const HModule& n);

struct ModuleIso {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::optional<ModuleHom> witness;
  std::string reason;
};
ModuleIso is_isomorphic(const HModule& m, const HModule& n);

/// Standard modules of the built-in algebras used by the examples.
/// kC2 over a field of characteristic != 2: g acts by -1.
HModule sign_module(const HopfPtr& kc2);
/// Sweedler: g -> -1, x -> 0.
HModule sweedler_character(const HopfPtr& sweedler);
/// Sweedler: the projective cover e H of the trivial module, dimension 2.
HModule sweedler_projective(const HopfPtr& sweedler);

}  // namespace tenscat
