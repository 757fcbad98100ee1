#pragma once

// Seeded generators of objects, morphisms and complexes for the property
// checks. A fixed seed reproduces every sample exactly.

#include <random>
#include <vector>

#include "tenscat/backends.hpp"
#include "tenscat/complex.hpp"

namespace tenscat {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small modules over h: trivial module, cyclic submodules of the regular
/// module, their quotients by cyclic submodules, and direct sums, all of
/// dimension 1..max_dim. Deterministic; sorted by dimension.
std::vector<HModule> module_pool(const HopfPtr& h, Index max_dim = 4);

HModule random_module(Rng& rng, const std::vector<HModule>& pool);
QuiverRep random_quiver_rep(Rng& rng, const Quiver& q, Index max_total_dim = 4,
                            const FieldSpec& field = FieldSpec::rationals());
/// Direct sum of one or two cyclic groups drawn from Z, Z/2, Z/3, Z/4, Z/6.
FgAbelianGroup random_group(Rng& rng);

/// Integer combination of hom generators with coefficients in -2..2.
template <class B>
typename B::Morphism random_hom(const B& b, Rng& rng, const typename B::Object& s, const typename B::Object& t) {
  auto f = b.zero_map(s, t);
  for (const auto& g : b.hom_generators(s, t)) {
    const int c = uniform_int(rng, -2, 2);
    if (c != 0) f = b.add(f, b.scale(g, c));
  }
  return f;
}

struct ComplexShape {
  int min_degree = -3;
  int max_degree = 3;
  int max_length = 4;
};

/// d^n = g o pi with pi : X^n -> coker d^{n-1} and g a random morphism out
/// of the cokernel, so d^{n+1} d^n = 0 holds by construction.
template <class B, class Gen>
BoundedComplex<B> random_complex(const B& b, Rng& rng, const ComplexShape& shape, Gen gen) {
  const int span = shape.max_degree - shape.min_degree + 1;
  const int len = uniform_int(rng, 1, std::min(shape.max_length, span));
  const int lo = uniform_int(rng, shape.min_degree, shape.max_degree - len + 1);
  std::vector<typename B::Object> objects;
  for (int i = 0; i < len; ++i) objects.push_back(gen(rng));
  std::vector<typename B::Morphism> diffs;
  for (int i = 0; i + 1 < len; ++i) {
    const auto& src = objects[static_cast<std::size_t>(i)];
    const auto& tgt = objects[static_cast<std::size_t>(i + 1)];
    if (i == 0) {
      diffs.push_back(random_hom(b, rng, src, tgt));
      continue;
    }
    const auto c = b.cokernel(diffs.back());
    diffs.push_back(b.compose(random_hom(b, rng, c.object, tgt), c.map));
  }
  return make_complex(b, lo, std::move(objects), std::move(diffs));
}

}  // namespace tenscat
