#include <doctest.h>

#include "tenscat/backends.hpp"
#include "tenscat/complex.hpp"
#include "tenscat/dual.hpp"

using namespace tenscat;

namespace {

using GroupComplex = BoundedComplex<GroupBackend>;
using QuiverComplex = BoundedComplex<QuiverBackend>;

std::vector<BigInt> factors(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

GroupHom times(long k, const FgAbelianGroup& a) { return scale(identity_hom(a), k); }

HopfPtr sweedler() { return std::make_shared<const HopfAlgebra>(builtin_hopf("sweedler", 0)); }

// Z --(x2)--> Z in degrees -1, 0.
GroupComplex doubling(const GroupBackend& g) {
  const FgAbelianGroup z = FgAbelianGroup::free(1);
  return make_complex(g, -1, {z, z}, {times(2, z)});
}

// Sweedler: chi -> P -> k in degrees -1, 0, 1 (socle inclusion, top projection).
ModuleComplex sweedler_three_term(const ModuleBackend& b, const HopfPtr& h) {
  const HModule chi = sweedler_character(h), p = sweedler_projective(h), k = trivial_module(h);
  return make_complex(b, -1, {chi, p, k}, {hom_space(chi, p).front(), hom_space(p, k).front()});
}

// ker(eps) -> H in degrees -1, 0: a resolution of the trivial stalk.
ModuleComplex augmentation_kernel(const ModuleBackend& b, const HopfPtr& h) {
  const HModule reg = regular_module(h);
  const ModuleHom eps = hom_space(reg, trivial_module(h)).front();
  const auto k = b.kernel(eps);
  return make_complex(b, -1, {k.object, reg}, {k.map});
}

template <class B>
bool all_exact(const B& b, const BoundedComplex<B>& x) {
  return cohomology_support(b, x).empty();
}

template <class B>
void check_truncation_triangle(const B& b, const BoundedComplex<B>& x, int n) {
  const Truncation<B> le = truncate_le(b, x, n);
  const Truncation<B> ge = truncate_ge(b, x, n + 1);
  CHECK_FALSE(d_squared_failure(b, le.complex));
  CHECK_FALSE(d_squared_failure(b, ge.complex));
  CHECK_FALSE(chain_map_failure(b, le.map));
  CHECK_FALSE(chain_map_failure(b, ge.map));
  const auto [lo, hi] = union_range(x, x);
  for (int i = lo - 1; i <= hi + 1; ++i) {
    CHECK(b.is_zero_map(b.compose(component(b, ge.map, i), component(b, le.map, i))));
    if (i <= n) {
      CHECK(b.is_iso(induced_map_on_cohomology(b, le.map, i)));
      CHECK(b.is_zero(cohomology(b, ge.complex, i)));
    } else {
      CHECK(b.is_zero(cohomology(b, le.complex, i)));
      CHECK(b.is_iso(induced_map_on_cohomology(b, ge.map, i)));
    }
  }
}

bool identity_components_of(const ModuleBackend& b, const ModuleComplex& x, const ModuleChainMap& f) {
  for (int n = x.lo; n <= x.hi(); ++n) {
    const Matrix& m = component(b, f, n).matrix;
    if (!is_zero(Matrix(m - identity(object_at(b, x, n).dim())))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("stalk tensor stalk is the stalk of the tensor") {
  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const HModule p = sweedler_projective(h), chi = sweedler_character(h);
  const ModuleComplex t = total_tensor(b, stalk(b, p, 0), stalk(b, chi, 0));
  REQUIRE(t.objects.size() == 1);
  CHECK(t.lo == 0);
  CHECK(t.objects.front() == tensor_module(p, chi));

  const GroupBackend g;
  const GroupComplex gt = total_tensor(g, stalk(g, FgAbelianGroup::cyclic(4), 2), stalk(g, FgAbelianGroup::cyclic(6), -1));
  CHECK(gt.lo == 1);
  CHECK(invariant_factors(cohomology(g, gt, 1)) == factors({2}));
}

TEST_CASE("Z/6 tensored with the doubling complex") {
  const GroupBackend g;
  const GroupComplex x = doubling(g);
  const GroupComplex t = total_tensor(g, stalk(g, FgAbelianGroup::cyclic(6), 0), x);
  REQUIRE(t.objects.size() == 2);
  CHECK(t.lo == -1);
  for (const auto& o : t.objects) CHECK(invariant_factors(o) == factors({6}));
  CHECK(t.diffs.front().matrix()(0, 0) == 2);
  CHECK(invariant_factors(cohomology(g, t, -1)) == factors({2}));
  CHECK(invariant_factors(cohomology(g, t, 0)) == factors({2}));
  CHECK(g.is_zero(cohomology(g, t, 1)));
  CHECK(g.is_zero(cohomology(g, t, -2)));
  // Truncation below degree 0 keeps only the Z/2 at -1.
  const GroupComplex le = truncate_le(g, t, -1).complex;
  CHECK(cohomology_support(g, le) == std::vector<int>{-1});
  CHECK(invariant_factors(cohomology(g, le, -1)) == factors({2}));
}

TEST_CASE("cohomology of exact complexes and stalks") {
  const GroupBackend g;
  const FgAbelianGroup a = FgAbelianGroup::cyclic(12);
  CHECK(all_exact(g, make_complex(g, 0, {a, a}, {identity_hom(a)})));
  const GroupComplex s = stalk(g, a, 3);
  CHECK(cohomology_support(g, s) == std::vector<int>{3});
  CHECK(invariant_factors(cohomology(g, s, 3)) == factors({12}));

  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex x = sweedler_three_term(b, h);
  CHECK_FALSE(d_squared_failure(b, x));
  CHECK(all_exact(b, x));
  const QuiverBackend q = quiver_backend(Quiver::a2());
  const QuiverRep s1 = a2_s1(), s2 = a2_s2(), p2 = a2_p2();
  const QuiverComplex qx = make_complex(q, 0, {s2, p2, s1}, {hom_space(s2, p2).front(), hom_space(p2, s1).front()});
  CHECK(all_exact(q, qx));
}

TEST_CASE("unit stalk is a two-sided unit") {
  const GroupBackend g;
  const GroupComplex x = doubling(g);
  const GroupComplex ux = total_tensor(g, stalk(g, g.unit(), 0), x);
  REQUIRE(ux.lo == x.lo);
  REQUIRE(ux.objects.size() == x.objects.size());
  // Reindexing 1 (x) X^n -> X^n is the identity matrix on generators.
  const auto reindex = make_chain_map(g, ux, x, [&](int n) {
    return GroupHom(object_at(g, ux, n), object_at(g, x, n), int_identity(object_at(g, x, n).generators()));
  });
  CHECK_FALSE(chain_map_failure(g, reindex));
  CHECK(is_quasi_isomorphism(g, reindex) == IsoVerdict::iso);

  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex m = sweedler_three_term(b, h);
  const ModuleComplex um = total_tensor(b, stalk(b, b.unit(), 0), m);
  const ModuleComplex mu = total_tensor(b, m, stalk(b, b.unit(), 0));
  for (int n = m.lo; n <= m.hi(); ++n) {
    CHECK(object_at(b, um, n) == object_at(b, m, n));
    CHECK(object_at(b, mu, n) == object_at(b, m, n));
  }
  CHECK(b.equal(um.diffs[0], m.diffs[0]));
  CHECK(b.equal(mu.diffs[1], m.diffs[1]));
}

TEST_CASE("shift") {
  const GroupBackend g;
  const FgAbelianGroup a = FgAbelianGroup::cyclic(5);
  const GroupComplex s = shift(g, stalk(g, a, 0), 1);
  CHECK(s.lo == -1);
  CHECK(s.objects.size() == 1);
  const GroupComplex x = doubling(g);
  const GroupComplex back = shift(g, shift(g, x, 1), -1);
  CHECK(back.lo == x.lo);
  CHECK(g.equal(back.diffs.front(), x.diffs.front()));
  CHECK(g.equal(shift(g, x, 1).diffs.front(), times(-2, FgAbelianGroup::free(1))));

  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex m = sweedler_three_term(b, h);
  for (int k : {-3, -1, 1, 3}) {
    const ModuleComplex sm = shift(b, m, k);
    CHECK_FALSE(d_squared_failure(b, sm));
    CHECK(sm.lo == m.lo - k);
    CHECK(b.equal(sm.diffs[1], b.negate(m.diffs[1])));
  }
  // Shift moves cohomology: H^n(Sigma^k X) = H^{n+k}(X).
  const GroupComplex t = total_tensor(g, stalk(g, FgAbelianGroup::cyclic(6), 0), x);
  const GroupComplex st = shift(g, t, 2);
  CHECK(cohomology_support(g, st) == std::vector<int>{-3, -2});
}

TEST_CASE("total tensor satisfies d^2 = 0") {
  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex x = sweedler_three_term(b, h);
  const ModuleComplex y = augmentation_kernel(b, h);
  for (const auto& [l, r] : std::vector<std::pair<ModuleComplex, ModuleComplex>>{{x, y}, {y, x}, {x, shift(b, x, 1)}}) {
    const ModuleComplex t = total_tensor(b, l, r);
    CHECK(t.lo == l.lo + r.lo);
    CHECK(t.hi() == l.hi() + r.hi());
    CHECK_FALSE(d_squared_failure(b, t));
  }
  const GroupBackend g;
  const GroupComplex d = doubling(g);
  CHECK_FALSE(d_squared_failure(g, total_tensor(g, d, total_tensor(g, d, d))));
}

TEST_CASE("quasi-isomorphisms") {
  const GroupBackend g;
  const GroupComplex x = doubling(g);
  CHECK(is_quasi_isomorphism(g, identity_chain_map(g, x)) == IsoVerdict::iso);
  const GroupComplex z2 = stalk(g, FgAbelianGroup::cyclic(2), 0);
  CHECK(is_quasi_isomorphism(g, zero_chain_map(g, z2, z2)) == IsoVerdict::not_iso);
  const auto proj = make_chain_map(g, x, z2, [&](int n) {
    if (n == 0) return GroupHom(FgAbelianGroup::free(1), FgAbelianGroup::cyclic(2), IntMatrix::Ones(1, 1));
    return g.zero_map(object_at(g, x, n), object_at(g, z2, n));
  });
  CHECK_FALSE(chain_map_failure(g, proj));
  CHECK(is_quasi_isomorphism(g, proj) == IsoVerdict::iso);
}

TEST_CASE("induced maps on cohomology") {
  const GroupBackend g;
  const FgAbelianGroup z6 = FgAbelianGroup::cyclic(6);
  const GroupComplex s = stalk(g, z6, 0);
  const auto twice = make_chain_map(g, s, s, [&](int) { return times(2, z6); });
  const GroupHom h = induced_map_on_cohomology(g, twice, 0);
  CHECK_FALSE(is_zero_hom(h));
  CHECK_FALSE(is_isomorphism(h));
  CHECK(equal_homs(h, times(2, h.source())));
  CHECK(g.equal(induced_map_on_cohomology(g, identity_chain_map(g, s), 0), identity_hom(cohomology(g, s, 0))));
  // Functoriality on a composite.
  const auto thrice = make_chain_map(g, s, s, [&](int) { return times(3, z6); });
  const GroupHom hc = induced_map_on_cohomology(g, compose(g, thrice, twice), 0);
  CHECK(g.equal(hc, compose(induced_map_on_cohomology(g, thrice, 0), h)));
  CHECK(is_zero_hom(hc));

  const HopfPtr hh = sweedler();
  const ModuleBackend b = module_backend(hh);
  const ModuleComplex y = augmentation_kernel(b, hh);
  const ModuleComplex k = stalk(b, b.unit(), 0);
  const auto eps = make_chain_map(b, y, k, [&](int n) {
    if (n == 0) return hom_space(regular_module(hh), trivial_module(hh)).front();
    return b.zero_map(object_at(b, y, n), object_at(b, k, n));
  });
  CHECK_FALSE(chain_map_failure(b, eps));
  CHECK(is_quasi_isomorphism(b, eps) == IsoVerdict::iso);
  const ModuleChainMap id = identity_chain_map(b, y);
  CHECK(b.equal(induced_map_on_cohomology(b, compose(b, eps, id), 0), induced_map_on_cohomology(b, eps, 0)));
}

TEST_CASE("tensor preserves quasi-isomorphisms over field backends") {
  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex y = augmentation_kernel(b, h);
  const ModuleComplex k = stalk(b, b.unit(), 0);
  const auto eps = make_chain_map(b, y, k, [&](int n) {
    if (n == 0) return hom_space(regular_module(h), trivial_module(h)).front();
    return b.zero_map(object_at(b, y, n), object_at(b, k, n));
  });
  const ModuleComplex x = sweedler_three_term(b, h);
  const std::vector<ModuleComplex> others = {x, y, stalk(b, sweedler_projective(h), 1),
                                             stalk(b, sweedler_character(h), -1), shift(b, y, 1)};
  for (const auto& o : others) {
    const ModuleChainMap f = tensor_chain_maps(b, eps, identity_chain_map(b, o));
    CHECK_FALSE(chain_map_failure(b, f));
    CHECK(is_quasi_isomorphism(b, f) == IsoVerdict::iso);
    const ModuleChainMap fl = tensor_chain_maps(b, identity_chain_map(b, o), eps);
    CHECK(is_quasi_isomorphism(b, fl) == IsoVerdict::iso);
  }

  const QuiverBackend q = quiver_backend(Quiver::a2());
  const QuiverRep s1 = a2_s1(), s2 = a2_s2(), p2 = a2_p2();
  const QuiverComplex r = make_complex(q, -1, {s2, p2}, {hom_space(s2, p2).front()});
  const QuiverComplex t = stalk(q, s1, 0);
  const auto proj = make_chain_map(q, r, t, [&](int n) {
    if (n == 0) return hom_space(p2, s1).front();
    return q.zero_map(object_at(q, r, n), object_at(q, t, n));
  });
  REQUIRE(is_quasi_isomorphism(q, proj) == IsoVerdict::iso);
  for (const auto& o : {r, t, stalk(q, p2, 0), stalk(q, q.unit(), 2)}) {
    CHECK(is_quasi_isomorphism(q, tensor_chain_maps(q, proj, identity_chain_map(q, o))) == IsoVerdict::iso);
  }
}

TEST_CASE("truncations") {
  const GroupBackend g;
  const GroupComplex z2 = stalk(g, FgAbelianGroup::cyclic(2), 0);
  const Truncation<GroupBackend> same = truncate_le(g, z2, 0);
  CHECK(is_quasi_isomorphism(g, same.map) == IsoVerdict::iso);
  CHECK(all_exact(g, truncate_le(g, z2, -1).complex));
  const GroupComplex t = total_tensor(g, stalk(g, FgAbelianGroup::cyclic(6), 0), doubling(g));
  for (int n = -3; n <= 1; ++n) check_truncation_triangle(g, t, n);
  check_truncation_triangle(g, doubling(g), -1);

  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex y = augmentation_kernel(b, h);
  const ModuleComplex x = total_tensor(b, y, shift(b, y, -1));
  for (int n = -2; n <= 2; ++n) check_truncation_triangle(b, x, n);
}

TEST_CASE("dual complexes") {
  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex u = stalk(b, b.unit(), 0);
  const DualComplex du = left_dual_complex(b, u);
  REQUIRE(du.dual.objects.size() == 1);
  CHECK(du.dual.lo == 0);
  CHECK(du.dual.objects.front() == b.unit());

  const HModule p = sweedler_projective(h);
  const DualComplex dp = left_dual_complex(b, stalk(b, p, 2));
  CHECK(dp.dual.lo == -2);
  CHECK(dp.dual.objects.front() == left_dual_module(p).dual);

  const ModuleComplex x = sweedler_three_term(b, h);
  const ModuleComplex y = augmentation_kernel(b, h);
  for (const auto& c : {u, stalk(b, p, 2), x, y, shift(b, x, 1), shift(b, y, -2)}) {
    const DualComplex l = left_dual_complex(b, c);
    CHECK(check_dual_complex(b, c, l, true).passed());
    const DualComplex r = right_dual_complex(b, c);
    CHECK(check_dual_complex(b, c, r, false).passed());
    const ZigZags z = zigzag_composites(b, c, l, true);
    REQUIRE(z.on_object.size() == c.objects.size());
    for (const auto& m : z.on_object) CHECK(is_zero(Matrix(m - identity(m.rows()))));
    for (const auto& m : z.on_dual) CHECK(is_zero(Matrix(m - identity(m.rows()))));
  }
  // Differential sign: d_Y^k = (-1)^k (d_X^{-k-1})^T.
  const DualComplex l = left_dual_complex(b, x);
  CHECK(l.dual.lo == -1);
  CHECK(is_zero(Matrix(l.dual.diffs[0].matrix + x.diffs[1].matrix.transpose())));
  CHECK(is_zero(Matrix(l.dual.diffs[1].matrix - x.diffs[0].matrix.transpose())));

  const GroupBackend g;
  CHECK_THROWS_AS(left_dual_complex(g, doubling(g)), NonRigidBackend);
  const QuiverBackend q = quiver_backend(Quiver::a2());
  CHECK_THROWS_AS(left_dual_complex(q, stalk(q, a2_p2(), 0)), NonRigidBackend);
}

TEST_CASE("associator is a chain isomorphism") {
  const HopfPtr h = sweedler();
  const ModuleBackend b = module_backend(h);
  const ModuleComplex x = sweedler_three_term(b, h);
  const ModuleComplex y = augmentation_kernel(b, h);
  const ModuleChainMap a = associator(b, x, y, shift(b, y, 1));
  CHECK_FALSE(chain_map_failure(b, a));
  for (const auto& c : a.comps) CHECK_FALSE(first_non_intertwined(c.source.rep(), c.target.rep(), {c.matrix}));
  const ModuleChainMap ai = associator_inverse(b, x, y, shift(b, y, 1));
  CHECK(identity_components_of(b, a.source, compose(b, ai, a)));
}
