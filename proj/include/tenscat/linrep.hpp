#pragma once

// Shared linear-algebra core of the two field backends.
//
// A LinRep is a family of vector spaces V_v (one per vertex) with linear
// operators op_k: V_src -> V_tgt. A module over an algebra is the one-vertex
// case with one operator per basis element; a quiver representation has one
// operator per arrow. Morphisms are per-vertex matrices commuting with
// every operator.

#include <optional>
#include <string>
#include <vector>

#include "tenscat/matrix.hpp"

namespace tenscat {

struct OpShape {
  int src = 0;
  int tgt = 0;
  friend bool operator==(const OpShape&, const OpShape&) = default;
};

struct LinRep {
  FieldSpec field;
  std::vector<Index> dims;
  std::vector<OpShape> shapes;
  std::vector<Matrix> ops;

  Index total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  /// Throws unless every operator has the shape its endpoints require.
  void validate() const;
};

using Components = std::vector<Matrix>;  // one matrix per vertex

enum class IsoVerdict { iso, not_iso, undetermined };
std::string to_string(IsoVerdict v);

Components identity_components(const LinRep& a);
Components zero_components(const LinRep& a, const LinRep& b);
Components compose(const Components& g, const Components& f);  // g after f
Components add(const Components& f, const Components& g);
Components negate(const Components& f);
bool is_zero(const Components& f);
bool equal(const Components& f, const Components& g);

/// Index of the first operator f fails to intertwine, if any. `only`
/// restricts the check to the listed operators.
std::optional<std::size_t> first_non_intertwined(const LinRep& a, const LinRep& b, const Components& f,
                                                 const std::vector<std::size_t>* only = nullptr);

struct SubRep {
  LinRep rep;
  Components map;  // inclusion into, or projection from, the ambient rep
};

/// Subrepresentation spanned by the columns of `basis` (per vertex, full
/// column rank, invariant under all operators).
SubRep sub_rep(const LinRep& a, const Components& basis);
/// Quotient by the subrepresentation spanned by the columns of `basis`.
SubRep quotient_rep(const LinRep& a, const Components& basis);

SubRep kernel_rep(const LinRep& a, const Components& f);
SubRep cokernel_rep(const LinRep& b, const Components& f);

/// g with mono o g = f.
Components lift_components(const Components& mono, const Components& f);
/// g with g o epi = f.
Components descend_components(const Components& epi, const Components& f);

bool is_injective(const Components& f);
bool is_surjective(const Components& f);
bool is_invertible(const Components& f);

/// Block-diagonal sum, summands in order.
LinRep direct_sum_rep(const std::vector<const LinRep*>& parts);
/// Morphism between direct sums from a grid of blocks; blocks[i][j] maps
/// source summand j to target summand i, nullptr meaning zero.
Components assemble_components(const std::vector<const LinRep*>& sources, const std::vector<const LinRep*>& targets,
                               const std::vector<std::vector<const Components*>>& blocks);

/// Basis of the intertwiners a -> b, imposing only the listed operators
/// (which must generate the rest).
std::vector<Components> hom_basis(const LinRep& a, const LinRep& b, const std::vector<std::size_t>& constraint_ops);

struct RepIso {
  IsoVerdict verdict = IsoVerdict::undetermined;
  std::optional<Components> witness;
  std::string reason;
};

/// Search for an invertible intertwiner: deterministic sweep over
/// coefficient vectors in -3..3 when dim Hom <= 4, otherwise 32 seeded random
/// rational combinations. Negative answers are only given when they are
/// certain (dimension or hom-dimension mismatch, empty hom space, or a
/// one-dimensional hom space spanned by a singular map).
RepIso find_isomorphism(const LinRep& a, const LinRep& b, const std::vector<std::size_t>& constraint_ops);

}  // namespace tenscat
