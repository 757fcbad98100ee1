#pragma once

// Backends for complex.hpp: right Hopf modules, quiver representations and
// finitely generated abelian groups.

#include <optional>
#include <string>
#include <vector>

#include "tenscat/abelian.hpp"
#include "tenscat/complex.hpp"
#include "tenscat/module.hpp"
#include "tenscat/quiver.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

// Adaptors letting one template serve both field backends.
inline Components components(const ModuleHom& f) { return {f.matrix}; }
inline Components components(const QuiverHom& f) { return f.maps; }
inline ModuleHom rebuild(const HModule& s, const HModule& t, Components c) { return ModuleHom{s, t, std::move(c.front())}; }
inline QuiverHom rebuild(const QuiverRep& s, const QuiverRep& t, Components c) { return QuiverHom{s, t, std::move(c)}; }
inline HModule tensor_objects(const HModule& a, const HModule& b) { return tensor_module(a, b); }
inline QuiverRep tensor_objects(const QuiverRep& a, const QuiverRep& b) { return tensor_rep(a, b); }

/// Backend over a category of linear representations sharing one shape.
template <class Obj, class Hom>
class LinearBackend {
 public:
  using Object = Obj;
  using Morphism = Hom;
  struct Sub {
    Object object;
    Morphism map;
  };

  LinearBackend(Object unit, Object zero, std::string name)
      : unit_(std::move(unit)), zero_(std::move(zero)), name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  Object zero() const { return zero_; }
  Object unit() const { return unit_; }
  bool is_zero(const Object& a) const { return a.rep().is_zero(); }

  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }
  Morphism identity(const Object& a) const { return rebuild(a, a, identity_components(a.rep())); }
  Morphism zero_map(const Object& a, const Object& b) const { return rebuild(a, b, zero_components(a.rep(), b.rep())); }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    return rebuild(f.source, g.target, tenscat::compose(components(g), components(f)));
  }
  Morphism add(const Morphism& f, const Morphism& g) const {
    return rebuild(f.source, f.target, tenscat::add(components(f), components(g)));
  }
  Morphism negate(const Morphism& f) const { return rebuild(f.source, f.target, tenscat::negate(components(f))); }
  bool is_zero_map(const Morphism& f) const { return tenscat::is_zero(components(f)); }
  bool equal(const Morphism& f, const Morphism& g) const { return tenscat::equal(components(f), components(g)); }

  Object direct_sum(const std::vector<Object>& parts) const {
    if (parts.empty()) return zero_;
    if (parts.size() == 1) return parts.front();
    std::vector<const LinRep*> reps;
    for (const auto& p : parts) reps.push_back(&p.rep());
    return parts.front().with_rep(direct_sum_rep(reps));
  }
  Morphism assemble(const std::vector<Object>& sources, const std::vector<Object>& targets,
                    const std::vector<std::vector<std::optional<Morphism>>>& blocks) const {
    std::vector<const LinRep*> s, t;
    for (const auto& o : sources) s.push_back(&o.rep());
    for (const auto& o : targets) t.push_back(&o.rep());
    std::vector<std::vector<Components>> comps(targets.size(), std::vector<Components>(sources.size()));
    std::vector<std::vector<const Components*>> grid(targets.size(), std::vector<const Components*>(sources.size()));
    for (std::size_t i = 0; i < targets.size(); ++i)
      for (std::size_t j = 0; j < sources.size(); ++j)
        if (blocks[i][j]) {
          comps[i][j] = components(*blocks[i][j]);
          grid[i][j] = &comps[i][j];
        }
    const Object src = direct_sum(sources);
    const Object tgt = direct_sum(targets);
    if (sources.empty() || targets.empty()) return zero_map(src, tgt);
    return rebuild(src, tgt, assemble_components(s, t, grid));
  }

  Object tensor(const Object& a, const Object& b) const { return tensor_objects(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const {
    const Components cf = components(f), cg = components(g);
    Components out;
    for (std::size_t v = 0; v < cf.size(); ++v) out.push_back(kronecker(cf[v], cg[v]));
    return rebuild(tensor_objects(f.source, g.source), tensor_objects(f.target, g.target), std::move(out));
  }

  Sub kernel(const Morphism& f) const {
    SubRep s = kernel_rep(f.source.rep(), components(f));
    Object k = f.source.with_rep(std::move(s.rep));
    return Sub{k, rebuild(k, f.source, std::move(s.map))};
  }
  Sub cokernel(const Morphism& f) const {
    SubRep s = cokernel_rep(f.target.rep(), components(f));
    Object c = f.target.with_rep(std::move(s.rep));
    return Sub{c, rebuild(f.target, c, std::move(s.map))};
  }
  Morphism lift(const Morphism& mono, const Morphism& f) const {
    return rebuild(f.source, mono.source, lift_components(components(mono), components(f)));
  }
  Morphism descend(const Morphism& epi, const Morphism& f) const {
    return rebuild(epi.target, f.target, descend_components(components(epi), components(f)));
  }

  bool is_iso(const Morphism& f) const { return is_invertible(components(f)); }
  IsoVerdict isomorphic(const Object& a, const Object& b) const {
    return find_isomorphism(a.rep(), b.rep(), a.constraint_ops()).verdict;
  }
  /// A spanning set of Hom(a, b); here a basis.
  std::vector<Morphism> hom_generators(const Object& a, const Object& b) const {
    std::vector<Morphism> out;
    for (auto& c : hom_basis(a.rep(), b.rep(), a.constraint_ops())) out.push_back(rebuild(a, b, std::move(c)));
    return out;
  }
  Morphism scale(const Morphism& f, long k) const {
    Components c = components(f);
    for (auto& m : c) m *= Scalar(k);
    return rebuild(f.source, f.target, std::move(c));
  }
  json describe(const Object& a) const { return json{{"dims", a.rep().dims}}; }
  std::string describe_text(const Object& a) const {
    std::string s;
    for (std::size_t v = 0; v < a.rep().dims.size(); ++v) s += (v ? "," : "") + std::to_string(a.rep().dims[v]);
    return "dim(" + s + ")";
  }
  /// Dimensions and ranks, per vertex and in total, for counting arguments.
  Index dimension(const Object& a) const { return a.rep().total_dim(); }
  std::vector<Index> dims(const Object& a) const { return a.rep().dims; }
  std::vector<Index> ranks(const Morphism& f) const {
    std::vector<Index> out;
    for (const auto& m : components(f)) out.push_back(rank(m));
    return out;
  }

 private:
  Object unit_;
  Object zero_;
  std::string name_;
};

using ModuleBackend = LinearBackend<HModule, ModuleHom>;
using QuiverBackend = LinearBackend<QuiverRep, QuiverHom>;

ModuleBackend module_backend(const HopfPtr& h);
QuiverBackend quiver_backend(const Quiver& q, const FieldSpec& field = FieldSpec::rationals());

/// Finitely generated abelian groups (the Z-module backend).
class GroupBackend {
 public:
  using Object = FgAbelianGroup;
  using Morphism = GroupHom;
  struct Sub {
    Object object;
    Morphism map;
  };

  std::string name() const { return "Z"; }
  Object zero() const { return FgAbelianGroup(); }
  Object unit() const { return FgAbelianGroup::free(1); }
  bool is_zero(const Object& a) const { return is_trivial(a); }

  const Object& source(const Morphism& f) const { return f.source(); }
  const Object& target(const Morphism& f) const { return f.target(); }
  Morphism identity(const Object& a) const { return identity_hom(a); }
  Morphism zero_map(const Object& a, const Object& b) const { return zero_hom(a, b); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return tenscat::compose(g, f); }
  Morphism add(const Morphism& f, const Morphism& g) const { return tenscat::add(f, g); }
  Morphism negate(const Morphism& f) const { return tenscat::negate(f); }
  bool is_zero_map(const Morphism& f) const { return is_zero_hom(f); }
  bool equal(const Morphism& f, const Morphism& g) const { return equal_homs(f, g); }

  Object direct_sum(const std::vector<Object>& parts) const;
  Morphism assemble(const std::vector<Object>& sources, const std::vector<Object>& targets,
                    const std::vector<std::vector<std::optional<Morphism>>>& blocks) const;

  Object tensor(const Object& a, const Object& b) const { return tensor_groups(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return tensor_homs(f, g); }

  Sub kernel(const Morphism& f) const;
  Sub cokernel(const Morphism& f) const;
  Morphism lift(const Morphism& mono, const Morphism& f) const { return tenscat::lift(mono, f); }
  Morphism descend(const Morphism& epi, const Morphism& f) const { return tenscat::descend(epi, f); }

  bool is_iso(const Morphism& f) const { return is_isomorphism(f); }
  /// Generators of Hom(a, b) as an abelian group.
  std::vector<Morphism> hom_generators(const Object& a, const Object& b) const;
  Morphism scale(const Morphism& f, long k) const { return tenscat::scale(f, k); }
  IsoVerdict isomorphic(const Object& a, const Object& b) const {
    return invariant_factors(a) == invariant_factors(b) ? IsoVerdict::iso : IsoVerdict::not_iso;
  }
  json describe(const Object& a) const { return json{{"invariant_factors", bigints_to_json(invariant_factors(a))}}; }
  std::string describe_text(const Object& a) const { return describe_group(a); }
};

}  // namespace tenscat
