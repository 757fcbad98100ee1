#pragma once

// Object files: JSON documents for Hopf algebras, modules, quiver
// representations and bounded complexes.
//
// Scalars are strings "p/q" (Q), "k mod p" (F_p) or arrays of rational
// strings holding power-basis coefficients (Q(zeta_n)). Matrices are arrays
// of rows. Every writer emits a document its reader maps back to an equal
// value.
//
//   hopf algebra  {kind, name, dim, field {kind, parameter}, mult (d x d x d),
//                  unit, comult (d^2 rows of d), counit, antipode,
//                  antipode_inverse}
//   module        {kind, algebra, dim, action (one d x d matrix per basis element)}
//   quiver rep    {kind, field, quiver {vertices, arrows}, dims, maps}
//   complex       {kind, backend, range [lo, hi], objects, differentials}
//
// A module's "algebra" is either an inline Hopf algebra document or a
// built-in reference {builtin, n, field}. Complex backends are "module"
// (with a top-level "algebra"), "quiver" (with "field" and "quiver") and
// "group" (objects {generators, relation_count, relations}).

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "tenscat/backends.hpp"
#include "tenscat/complex.hpp"
#include "tenscat/hopf.hpp"
#include "tenscat/module.hpp"
#include "tenscat/quiver.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

/// Malformed input. The message starts with "line L, column C" for syntax
/// errors and with "field /path" for structural ones.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json parse_document(const std::string& text);
json read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const json& doc);

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);
json scalar_to_json(const Scalar& s);

json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const json& j);

json module_to_json(const HModule& m);
HModule module_from_json(const json& j);
/// Reads a module whose algebra equals `h`, sharing the pointer.
HModule module_from_json(const json& j, const HopfPtr& h);

json quiver_rep_to_json(const QuiverRep& v);
QuiverRep quiver_rep_from_json(const json& j);

using ModuleComplex = BoundedComplex<ModuleBackend>;
using QuiverComplex = BoundedComplex<QuiverBackend>;
using GroupComplex = BoundedComplex<GroupBackend>;

json complex_to_json(const ModuleBackend& b, const ModuleComplex& x);
json complex_to_json(const QuiverBackend& b, const QuiverComplex& x);
json complex_to_json(const GroupBackend& b, const GroupComplex& x);

template <class B>
struct LoadedComplex {
  B backend;
  BoundedComplex<B> complex;
};
using AnyComplex = std::variant<LoadedComplex<ModuleBackend>, LoadedComplex<QuiverBackend>, LoadedComplex<GroupBackend>>;

/// Validates shapes, morphism conditions and d^2 = 0.
AnyComplex complex_from_json(const json& j);

/// "hopf_algebra", "module", "quiver_rep" or "complex"; documents without a
/// kind field are Hopf algebras.
std::string document_kind(const json& j);

}  // namespace tenscat
