#pragma once

// Named verification suites run by the command-line tool and the
// acceptance harness. Backend selectors: a built-in Hopf algebra name
// (sweedler, taft, kC2, ...) for modules, "a2" for representations of the
// A2 quiver, "z" for finitely generated abelian groups.

#include <cstdint>
#include <optional>
#include <string>

#include "tenscat/report.hpp"
#include "tenscat/scalar.hpp"

namespace tenscat {

struct SuiteConfig {
  std::string builtin = "sweedler";
  int n = 0;
  std::optional<FieldSpec> field;
  int cases = 20;
  std::uint64_t seed = 1;
};

VerificationReport kunneth_suite(const SuiteConfig& c);
/// Truncation contract for n in {-1, 0, 1}, aisle bookkeeping, top
/// cohomology squares, and for module backends the dual of complexes in
/// degrees <= 0 landing in D>=0.
VerificationReport aisle_suite(const SuiteConfig& c);
VerificationReport deviation_suite(const SuiteConfig& c);
VerificationReport reduced_suite(const SuiteConfig& c);
VerificationReport unit_suite(const SuiteConfig& c);
/// Module backends only; throws NonRigidBackend otherwise.
VerificationReport dual_zigzag_suite(const SuiteConfig& c);
/// Z/6 against Z --(x2)--> Z: cohomology, heart membership, Kunneth and the
/// monoidal conditions at n = 0.
VerificationReport z6_counterexample();

}  // namespace tenscat
