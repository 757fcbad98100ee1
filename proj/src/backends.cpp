#include "tenscat/backends.hpp"

namespace tenscat {

ModuleBackend module_backend(const HopfPtr& h) {
  const HModule unit = trivial_module(h);
  std::vector<Matrix> none(static_cast<std::size_t>(h->dim()), zeros(0, 0));
  return ModuleBackend(unit, HModule::unchecked(h, 0, std::move(none)), "modules");
}

QuiverBackend quiver_backend(const Quiver& q, const FieldSpec& field) {
  return QuiverBackend(unit_rep(q, field), zero_rep(q, field), "quiver");
}

FgAbelianGroup GroupBackend::direct_sum(const std::vector<Object>& parts) const {
  if (parts.size() == 1) return parts.front();
  return tenscat::direct_sum(parts);
}

GroupHom GroupBackend::assemble(const std::vector<Object>& sources, const std::vector<Object>& targets,
                                const std::vector<std::vector<std::optional<Morphism>>>& blocks) const {
  const FgAbelianGroup src = direct_sum(sources);
  const FgAbelianGroup tgt = direct_sum(targets);
  IntMatrix m = IntMatrix::Zero(tgt.generators(), src.generators());
  Index row = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Index col = 0;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      if (blocks[i][j]) m.block(row, col, targets[i].generators(), sources[j].generators()) = blocks[i][j]->matrix();
      col += sources[j].generators();
    }
    row += targets[i].generators();
  }
  return GroupHom::unchecked(src, tgt, std::move(m));
}

GroupBackend::Sub GroupBackend::kernel(const Morphism& f) const {
  GroupKernel k = tenscat::kernel(f);
  return Sub{std::move(k.object), std::move(k.inclusion)};
}

GroupBackend::Sub GroupBackend::cokernel(const Morphism& f) const {
  GroupCokernel c = tenscat::cokernel(f);
  return Sub{std::move(c.object), std::move(c.projection)};
}

std::vector<GroupHom> GroupBackend::hom_generators(const Object& a, const Object& b) const {
  // M with M R_a = R_b Y for some integer Y: the integer kernel of
  // (M, Y) -> M R_a - R_b Y, read off in the M coordinates.
  const Index ga = a.generators(), gb = b.generators();
  const Index ra = a.relations().cols(), rb = b.relations().cols();
  const Index m_vars = gb * ga, y_vars = rb * ra;
  IntMatrix eq = IntMatrix::Zero(gb * ra, m_vars + y_vars);
  for (Index i = 0; i < gb; ++i)
    for (Index j = 0; j < ra; ++j) {
      const Index row = i * ra + j;
      for (Index k = 0; k < ga; ++k) eq(row, i * ga + k) += a.relations()(k, j);
      for (Index l = 0; l < rb; ++l) eq(row, m_vars + l * ra + j) -= b.relations()(i, l);
    }
  std::vector<GroupHom> out;
  const IntMatrix ker = m_vars + y_vars == 0 ? IntMatrix(0, 0) : integer_kernel(eq);
  for (Index c = 0; c < ker.cols(); ++c) {
    IntMatrix m(gb, ga);
    for (Index i = 0; i < gb; ++i)
      for (Index k = 0; k < ga; ++k) m(i, k) = ker(i * ga + k, c);
    GroupHom f(a, b, std::move(m));
    if (is_zero_hom(f)) continue;
    bool seen = false;
    for (const auto& g : out) seen = seen || equal_homs(f, g);
    if (!seen) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace tenscat
