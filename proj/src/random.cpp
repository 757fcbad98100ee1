#include "tenscat/random.hpp"

#include <algorithm>

namespace tenscat {

namespace {

Vector sparse_vector(Rng& rng, Index n) {
  Vector v = Vector::Zero(n);
  const int nonzero = uniform_int(rng, 1, 2);
  for (int k = 0; k < nonzero; ++k) v(uniform_int(rng, 0, static_cast<int>(n) - 1)) = Scalar(uniform_int(rng, 1, 2));
  return v;
}

bool contains(const std::vector<HModule>& pool, const HModule& m) {
  return std::any_of(pool.begin(), pool.end(), [&](const HModule& p) { return p == m; });
}

}  // namespace

std::vector<HModule> module_pool(const HopfPtr& h, Index max_dim) {
  Rng rng(0x5eed);
  std::vector<HModule> pool = {trivial_module(h)};
  const HModule reg = regular_module(h);
  auto add = [&](const HModule& m) {
    if (m.dim() >= 1 && m.dim() <= max_dim && !contains(pool, m)) pool.push_back(m);
  };
  add(reg);
  for (int round = 0; round < 24; ++round) {
    const SubModule c = cyclic_submodule(reg, sparse_vector(rng, reg.dim()));
    add(c.module);
    if (c.module.dim() < 2) continue;
    const SubModule inner = cyclic_submodule(c.module, sparse_vector(rng, c.module.dim()));
    if (inner.module.dim() < c.module.dim()) add(quotient_module(c.module, inner.inclusion.matrix).module);
  }
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i; j < base; ++j) add(direct_sum({pool[i], pool[j]}));
  std::stable_sort(pool.begin(), pool.end(), [](const HModule& a, const HModule& b) { return a.dim() < b.dim(); });
  return pool;
}

HModule random_module(Rng& rng, const std::vector<HModule>& pool) {
  return pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))];
}

QuiverRep random_quiver_rep(Rng& rng, const Quiver& q, Index max_total_dim, const FieldSpec& field) {
  std::vector<Index> dims(static_cast<std::size_t>(q.vertices), 0);
  const int total = uniform_int(rng, 1, static_cast<int>(max_total_dim));
  for (int k = 0; k < total; ++k) ++dims[static_cast<std::size_t>(uniform_int(rng, 0, q.vertices - 1))];
  std::vector<Matrix> maps;
  for (const auto& [s, t] : q.arrows) {
    Matrix m(dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]);
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = Scalar::from_int(uniform_int(rng, -1, 1), field);
    maps.push_back(m);
  }
  return QuiverRep(q, field, dims, maps);
}

FgAbelianGroup random_group(Rng& rng) {
  static const long orders[] = {0, 2, 3, 4, 6};
  std::vector<FgAbelianGroup> parts;
  const int count = uniform_int(rng, 1, 2);
  for (int k = 0; k < count; ++k) parts.push_back(FgAbelianGroup::cyclic(orders[uniform_int(rng, 0, 4)]));
  return count == 1 ? parts.front() : direct_sum(parts);
}

}  // namespace tenscat
