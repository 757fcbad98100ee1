#pragma once

// Dual complexes over the module backend.
//
// Left dual: Y^k = (X^{-k})* with d_Y^k = (-1)^k (d_X^{-k-1})^T, i.e. the
// differential (-1)^{n+1} (d_X^{-n})^* from Y^{n-1} to Y^n.
//   eps : Y (x) X -> 1   is (-1)^i ev_i on the summand Y^{-i} (x) X^i,
//   eta : 1 -> X (x) Y   is (-1)^i coev_i into the summand X^i (x) Y^{-i}.
// Without the (-1)^i the componentwise sums are not chain maps.
// Right dual: Z^k = *(X^{-k}) with the same differential signs; there the
// plain sums ev' : X (x) Z -> 1 and coev' : 1 -> Z (x) X are chain maps.

#include <stdexcept>

#include "tenscat/backends.hpp"
#include "tenscat/complex.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

using ModuleComplex = BoundedComplex<ModuleBackend>;
using ModuleChainMap = ChainMap<ModuleBackend>;

struct DualComplex {
  ModuleComplex dual;
  ModuleChainMap ev;    // left: Y (x) X -> 1;  right: X (x) Z -> 1
  ModuleChainMap coev;  // left: 1 -> X (x) Y;  right: 1 -> Z (x) X
};

class NonRigidBackend : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DualComplex left_dual_complex(const ModuleBackend& b, const ModuleComplex& x);
DualComplex right_dual_complex(const ModuleBackend& b, const ModuleComplex& x);

/// Only the module backend carries duals.
[[noreturn]] void left_dual_complex(const GroupBackend& b, const BoundedComplex<GroupBackend>& x);
[[noreturn]] void left_dual_complex(const QuiverBackend& b, const BoundedComplex<QuiverBackend>& x);

/// (X (x) Y) (x) Z -> X (x) (Y (x) Z): a basis permutation in each degree.
ModuleChainMap associator(const ModuleBackend& b, const ModuleComplex& x, const ModuleComplex& y,
                          const ModuleComplex& z);
ModuleChainMap associator_inverse(const ModuleBackend& b, const ModuleComplex& x, const ModuleComplex& y,
                                  const ModuleComplex& z);

/// Degreewise matrices of the two zig-zag composites X -> X and D -> D
/// (D the dual), computed without materializing triple tensor modules.
struct ZigZags {
  int object_lo = 0;
  std::vector<Matrix> on_object;
  int dual_lo = 0;
  std::vector<Matrix> on_dual;
};
ZigZags zigzag_composites(const ModuleBackend& b, const ModuleComplex& x, const DualComplex& d, bool left);

/// Cases: d_squared, terms_are_duals, ev_chain_map, coev_chain_map,
/// zigzag_object, zigzag_dual.
VerificationReport check_dual_complex(const ModuleBackend& b, const ModuleComplex& x, const DualComplex& d, bool left);

}  // namespace tenscat
