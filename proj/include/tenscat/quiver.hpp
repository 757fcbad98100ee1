#pragma once

// Finite-dimensional representations of finite quivers, with the pointwise
// tensor product (V (x) W)_a = V_a (x) W_a, phi_alpha (x) psi_alpha.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenscat/linrep.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target)

  bool is_acyclic() const;
  /// 1 -> 2, stored as vertices 0 and 1 with one arrow 0 -> 1.
  static Quiver a2();
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

class QuiverRep {
 public:
  QuiverRep() = default;
  /// Validates arrow shapes against the vertex dimensions.
  QuiverRep(Quiver quiver, FieldSpec field, std::vector<Index> dims, std::vector<Matrix> maps);
  QuiverRep with_rep(LinRep rep) const;

  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return rep_->field; }
  const std::vector<Index>& dims() const { return rep_->dims; }
  const Matrix& map(std::size_t arrow) const { return rep_->ops[arrow]; }
  const LinRep& rep() const { return *rep_; }
  std::vector<std::size_t> constraint_ops() const;
  bool is_zero() const { return rep_->is_zero(); }

  friend bool operator==(const QuiverRep& a, const QuiverRep& b);

 private:
  Quiver quiver_;
  std::shared_ptr<const LinRep> rep_;
};

struct QuiverHom {
  QuiverRep source;
  QuiverRep target;
  Components maps;  // one matrix per vertex

  static QuiverHom make(QuiverRep source, QuiverRep target, Components maps);
};

void require_same_quiver(const QuiverRep& a, const QuiverRep& b);

QuiverRep unit_rep(const Quiver& q, const FieldSpec& field = FieldSpec::rationals());
QuiverRep zero_rep(const Quiver& q, const FieldSpec& field = FieldSpec::rationals());
QuiverRep tensor_rep(const QuiverRep& v, const QuiverRep& w);
QuiverHom tensor_hom(const QuiverHom& f, const QuiverHom& g);
QuiverRep direct_sum(const std::vector<QuiverRep>& parts);
QuiverHom identity_hom(const QuiverRep& v);
QuiverHom compose(const QuiverHom& g, const QuiverHom& f);  // g after f
std::vector<QuiverHom> hom_space(const QuiverRep& v, const QuiverRep& w);
struct QuiverIso {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::optional<QuiverHom> witness;
  std::string reason;
};
QuiverIso is_isomorphic(const QuiverRep& v, const QuiverRep& w);

/// For each nonzero V in the sample, V (x) V is nonzero.
VerificationReport rep_tensor_reduced_check(const std::vector<QuiverRep>& sample);

// Type A2. Indecomposables S1 = (k, 0, 0), S2 = (0, k, 0), P2 = (k, k, id).
QuiverRep a2_s1(const FieldSpec& field = FieldSpec::rationals());
QuiverRep a2_s2(const FieldSpec& field = FieldSpec::rationals());
QuiverRep a2_p2(const FieldSpec& field = FieldSpec::rationals());
/// The proper subobject (0, k) of the unit on A2.
QuiverHom a2_unit_socle(const FieldSpec& field = FieldSpec::rationals());

/// S1^a + S2^b + P2^c in the fixed ordered basis
///   vertex 1: [S1 block (a), P2 block (c)]
///   vertex 2: [S2 block (b), P2 block (c)]
/// so the arrow is [[0, 0], [0, I_c]].
struct A2Multiplicities {
  int a = 0, b = 0, c = 0;
};
QuiverRep a2_object(A2Multiplicities m, const FieldSpec& field = FieldSpec::rationals());

/// The endofunctor F with F(S1) = F(S2) = 0 and F(P2) = S2. On a morphism f
/// it keeps the P2 -> P2 block of the vertex 2 component, which is the
/// restriction of f to the image of the arrow.
QuiverRep a2_functor_object(A2Multiplicities m, const FieldSpec& field = FieldSpec::rationals());
QuiverHom a2_functor_hom(A2Multiplicities src, A2Multiplicities tgt, const QuiverHom& f);
/// The displayed recipe read literally: keep the S2 -> S2 block. Absent when
/// that block does not have the shape of a map F(M) -> F(N).
std::optional<QuiverHom> a2_functor_hom_literal(A2Multiplicities src, A2Multiplicities tgt, const QuiverHom& f);

/// Additivity, F o F = 0 on objects and on hom-space bases for all
/// multiplicities up to `bound`, F nonzero, and functoriality.
VerificationReport a2_functor_example(int bound = 3);

}  // namespace tenscat
