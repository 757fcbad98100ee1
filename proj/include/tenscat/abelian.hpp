#pragma once

// Finitely generated abelian groups by presentation: Z^m / (column span of R).

#include <optional>
#include <string>
#include <vector>

#include "tenscat/integer.hpp"

namespace tenscat {

class FgAbelianGroup {
 public:
  FgAbelianGroup() : relations_(0, 0) {}  // the zero group
  FgAbelianGroup(Index generators, IntMatrix relations);

  static FgAbelianGroup free(Index rank);
  /// Z/n; n = 0 gives Z.
  static FgAbelianGroup cyclic(long n);
  /// Canonical presentation with one generator per factor (0 meaning Z).
  static FgAbelianGroup from_invariant_factors(const std::vector<BigInt>& factors);

  Index generators() const { return gens_; }
  const IntMatrix& relations() const { return relations_; }

  /// Whether v lies in the relation subgroup, i.e. represents 0.
  bool is_relation(const IntVector& v) const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b);

 private:
  Index gens_ = 0;
  IntMatrix relations_;
};

class GroupHom {
 public:
  /// Validates that every source relation maps into the target relations.
  GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);
  static GroupHom unchecked(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  GroupHom() = default;
  FgAbelianGroup source_, target_;
  IntMatrix matrix_;
};

/// d_1 | d_2 | ... with trivial factors dropped and 0 standing for Z; the
/// free part is listed last.
std::vector<BigInt> invariant_factors(const FgAbelianGroup& a);
bool is_trivial(const FgAbelianGroup& a);
std::string describe_group(const FgAbelianGroup& a);  // e.g. "Z/2 + Z"

FgAbelianGroup tensor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b);
GroupHom tensor_homs(const GroupHom& f, const GroupHom& g);
FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& parts);

GroupHom identity_hom(const FgAbelianGroup& a);
GroupHom zero_hom(const FgAbelianGroup& a, const FgAbelianGroup& b);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom add(const GroupHom& f, const GroupHom& g);
GroupHom negate(const GroupHom& f);
GroupHom scale(const GroupHom& f, long k);
bool is_zero_hom(const GroupHom& f);
bool equal_homs(const GroupHom& f, const GroupHom& g);

/// Canonical presentation of `a` (diagonal relations from its invariant
/// factors) together with mutually inverse isomorphisms.
struct Minimized {
  FgAbelianGroup group;
  GroupHom to;    // a -> group
  GroupHom from;  // group -> a
};
Minimized minimize(const FgAbelianGroup& a);

struct GroupKernel {
  FgAbelianGroup object;
  GroupHom inclusion;
};
struct GroupCokernel {
  FgAbelianGroup object;
  GroupHom projection;
};
GroupKernel kernel(const GroupHom& f);
GroupCokernel cokernel(const GroupHom& f);

/// g with mono o g = f; requires im f inside im mono.
GroupHom lift(const GroupHom& mono, const GroupHom& f);
/// g with g o epi = f; requires f to vanish on ker epi.
GroupHom descend(const GroupHom& epi, const GroupHom& f);

bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);
/// An isomorphism a -> b when the invariant factors agree.
std::optional<GroupHom> isomorphism(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// ker(d_out) / im(d_in).
FgAbelianGroup homology_at(const GroupHom& d_in, const GroupHom& d_out);

}  // namespace tenscat
