#include <doctest.h>

#include <numeric>

#include "tenscat/dual.hpp"
#include "tenscat/random.hpp"
#include "tenscat/suites.hpp"
#include "tenscat/verify.hpp"

using namespace tenscat;

namespace {

using GroupComplex = BoundedComplex<GroupBackend>;

std::vector<BigInt> factors(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

HopfPtr make(const std::string& name, int n = 0) { return std::make_shared<const HopfAlgebra>(builtin_hopf(name, n)); }

GroupComplex doubling(const GroupBackend& g) {
  const FgAbelianGroup z = FgAbelianGroup::free(1);
  return make_complex(g, -1, {z, z}, {scale(identity_hom(z), 2)});
}

const AisleSpec le0{0, AisleSide::le}, ge0{0, AisleSide::ge};

// Test-side oracle: dim H^n of the total complex from raw matrices. The
// total differential is rebuilt here from the kronecker products of the
// component differentials, independently of the library's assembly.
Matrix raw_differential(const ModuleComplex& x, int n) {
  const Index rows = x.in_range(n + 1) ? x.objects[static_cast<std::size_t>(n + 1 - x.lo)].dim() : 0;
  const Index cols = x.in_range(n) ? x.objects[static_cast<std::size_t>(n - x.lo)].dim() : 0;
  if (x.in_range(n) && x.in_range(n + 1)) return x.diffs[static_cast<std::size_t>(n - x.lo)].matrix;
  return zeros(rows, cols);
}

Index raw_dim(const ModuleComplex& x, int p) { return x.in_range(p) ? x.objects[static_cast<std::size_t>(p - x.lo)].dim() : 0; }

Matrix raw_total_differential(const ModuleComplex& x, const ModuleComplex& y, int n) {
  std::vector<std::pair<int, Index>> src, tgt;  // (p, offset)
  Index s = 0, t = 0;
  for (int p = x.lo; p <= x.hi(); ++p) {
    src.emplace_back(p, s);
    s += raw_dim(x, p) * raw_dim(y, n - p);
    tgt.emplace_back(p, t);
    t += raw_dim(x, p) * raw_dim(y, n + 1 - p);
  }
  tgt.emplace_back(x.hi() + 1, t);
  Matrix d = zeros(t, s);
  for (const auto& [p, off] : src) {
    const int q = n - p;
    if (raw_dim(x, p) * raw_dim(y, q) == 0) continue;
    for (const auto& [p2, off2] : tgt) {
      if (p2 == p + 1 && raw_dim(x, p + 1) * raw_dim(y, q) > 0) {
        const Matrix k = kronecker(raw_differential(x, p), identity(raw_dim(y, q)));
        d.block(off2, off, k.rows(), k.cols()) = k;
      }
      if (p2 == p && raw_dim(x, p) * raw_dim(y, q + 1) > 0) {
        Matrix k = kronecker(identity(raw_dim(x, p)), raw_differential(y, q));
        if (p % 2 != 0) k = -k;
        d.block(off2, off, k.rows(), k.cols()) = k;
      }
    }
  }
  return d;
}

Index raw_cohomology_dim(const ModuleComplex& x, int p) {
  return raw_dim(x, p) - rank(raw_differential(x, p)) - rank(raw_differential(x, p - 1));
}

Index raw_tensor_cohomology_dim(const ModuleComplex& x, const ModuleComplex& y, int n) {
  Index dim = 0;
  for (int p = x.lo; p <= x.hi(); ++p) dim += raw_dim(x, p) * raw_dim(y, n - p);
  const Matrix out = raw_total_differential(x, y, n);
  const Matrix in = raw_total_differential(x, y, n - 1);
  return dim - rank(out) - rank(in);
}

}  // namespace

TEST_CASE("aisle and heart membership") {
  const GroupBackend g;
  const FgAbelianGroup a = FgAbelianGroup::cyclic(5);
  const GroupComplex s = stalk(g, a, 0);
  CHECK(aisle_membership(g, s, le0));
  CHECK(aisle_membership(g, s, ge0));
  CHECK_FALSE(aisle_membership(g, shift(g, s, 1), ge0));
  const GroupComplex t = total_tensor(g, stalk(g, FgAbelianGroup::cyclic(6), 0), doubling(g));
  CHECK_FALSE(aisle_membership(g, t, ge0));
  CHECK(aisle_membership(g, t, le0));
  CHECK(heart_membership(g, s));
  CHECK_FALSE(heart_membership(g, stalk(g, a, 1)));
  CHECK_FALSE(heart_membership(g, t));
  // The doubling complex itself is in the heart: H^-1 = 0, H^0 = Z/2.
  CHECK(heart_membership(g, doubling(g)));
}

TEST_CASE("aisle properties on random complexes") {
  Rng rng(41);
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  for (int i = 0; i < 15; ++i) {
    const auto x = random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); });
    CHECK(aisle_properties(b, x).passed());
    for (int k = -2; k <= 2; ++k)
      for (int n = -2; n <= 2; ++n)
        CHECK(aisle_membership(b, x, {n, AisleSide::le}) == aisle_membership(b, shift(b, x, -k), {n + k, AisleSide::le}));
    CHECK(heart_membership(b, x) == (aisle_membership(b, x, le0) && aisle_membership(b, x, ge0)));
  }
}

TEST_CASE("random complexes respect the generator contract") {
  Rng rng(3);
  const HopfPtr h = make("taft", 3);
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  for (const auto& m : pool) {
    CHECK(m.dim() <= 4);
    CHECK_FALSE(module_law_violation(*h, m.actions()));
  }
  for (int i = 0; i < 20; ++i) {
    const auto x = random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); });
    CHECK(x.lo >= -3);
    CHECK(x.hi() <= 3);
    CHECK(x.objects.size() <= 4);
    CHECK_FALSE(d_squared_failure(b, x));
    for (const auto& d : x.diffs) CHECK_FALSE(first_non_intertwined(d.source.rep(), d.target.rep(), {d.matrix}));
  }
  const GroupBackend g;
  for (int i = 0; i < 20; ++i) {
    const auto x = random_complex(g, rng, {}, [](Rng& r) { return random_group(r); });
    CHECK_FALSE(d_squared_failure(g, x));
  }
  const QuiverBackend q = quiver_backend(Quiver::a2());
  for (int i = 0; i < 20; ++i) {
    const auto x = random_complex(q, rng, {}, [](Rng& r) { return random_quiver_rep(r, Quiver::a2()); });
    CHECK_FALSE(d_squared_failure(q, x));
  }
}

TEST_CASE("random generators are deterministic") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  Rng r1(9), r2(9);
  for (int i = 0; i < 5; ++i) {
    const auto x = random_complex(b, r1, {}, [&](Rng& r) { return random_module(r, pool); });
    const auto y = random_complex(b, r2, {}, [&](Rng& r) { return random_module(r, pool); });
    REQUIRE(x.objects.size() == y.objects.size());
    CHECK(x.lo == y.lo);
    for (std::size_t k = 0; k < x.diffs.size(); ++k) CHECK(b.equal(x.diffs[k], y.diffs[k]));
  }
}

TEST_CASE("Kunneth on stalks and on random Sweedler complexes") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const VerificationReport s = kunneth_check(b, stalk(b, sweedler_projective(h), 1), stalk(b, sweedler_character(h), -2));
  CHECK(s.passed());
  CHECK(s.cases.size() == 1);

  const auto pool = module_pool(h);
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_complex(b, rng, {-3, 3, 3}, [&](Rng& r) { return random_module(r, pool); });
    const auto y = random_complex(b, rng, {-3, 3, 3}, [&](Rng& r) { return random_module(r, pool); });
    const VerificationReport r = kunneth_check(b, x, y);
    CHECK(r.passed());
    // Independent count: sum dim H^p(X) dim H^q(Y) against dim H^n of the
    // total complex rebuilt in the test.
    for (int n = x.lo + y.lo; n <= x.hi() + y.hi(); ++n) {
      Index lhs = 0;
      for (int p = x.lo; p <= x.hi(); ++p) lhs += raw_cohomology_dim(x, p) * raw_cohomology_dim(y, n - p);
      CHECK(lhs == raw_tensor_cohomology_dim(x, y, n));
      const CaseRecord* c = r.find_case("degree " + std::to_string(n));
      REQUIRE(c != nullptr);
      CHECK(c->data["lhs_count"][0].get<Index>() == lhs);
    }
  }
}

TEST_CASE("Kunneth over A2 and kC2") {
  const QuiverBackend q = quiver_backend(Quiver::a2());
  Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    const auto x = random_complex(q, rng, {}, [](Rng& r) { return random_quiver_rep(r, Quiver::a2()); });
    const auto y = random_complex(q, rng, {}, [](Rng& r) { return random_quiver_rep(r, Quiver::a2()); });
    CHECK(kunneth_check(q, x, y).passed());
  }
  const HopfPtr h = make("kC2");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  for (int i = 0; i < 8; ++i) {
    const auto x = random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); });
    const auto y = random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); });
    CHECK(kunneth_check(b, x, y).passed());
  }
}

TEST_CASE("Kunneth fails over Z on the Z/6 pair") {
  const GroupBackend g;
  const VerificationReport r = kunneth_check(g, stalk(g, FgAbelianGroup::cyclic(6), 0), doubling(g));
  CHECK_FALSE(r.passed());
  const CaseRecord* m1 = r.find_case("degree -1");
  REQUIRE(m1 != nullptr);
  CHECK(m1->verdict == Verdict::fail);
  CHECK(m1->data["lhs"]["invariant_factors"].empty());
  CHECK(m1->data["rhs"]["invariant_factors"] == bigints_to_json(factors({2})));
  const CaseRecord* m0 = r.find_case("degree 0");
  REQUIRE(m0 != nullptr);
  CHECK(m0->verdict == Verdict::pass);
}

TEST_CASE("monoidal aisle conditions") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  Rng rng(12);
  std::vector<ModuleComplex> sample;
  for (int i = 0; i < 6; ++i)
    sample.push_back(random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); }));
  CHECK(monoidal_aisle_check(b, sample, 0).passed());
  CHECK(monoidal_aisle_check(b, std::vector<ModuleComplex>{}, 0).passed());

  const GroupBackend g;
  const VerificationReport z = monoidal_aisle_check(g, {stalk(g, FgAbelianGroup::cyclic(6), 0), doubling(g)}, 0);
  CHECK_FALSE(z.passed());
  const CaseRecord* c2 = z.find_case("condition_2");
  REQUIRE(c2 != nullptr);
  CHECK(c2->verdict == Verdict::fail);
  CHECK(c2->data["witness"]["degree"] == -1);
  CHECK(z.find_case("condition_1")->verdict == Verdict::pass);
}

TEST_CASE("deviation probe") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  Rng rng(2);
  std::vector<ModuleComplex> sample;
  for (int i = 0; i < 4; ++i)
    sample.push_back(random_complex(b, rng, {}, [&](Rng& r) { return random_module(r, pool); }));
  const VerificationReport r = deviation_probe(b, sample, {-2, -1, 0, 1, 2});
  CHECK(r.passed());
  for (int n : {-2, -1, 1, 2}) {
    const CaseRecord* c = r.find_case("n=" + std::to_string(n));
    REQUIRE(c != nullptr);
    CHECK(c->data["refuted"] == true);
    CHECK(c->data["condition"] == (n > 0 ? "condition_1" : "condition_2"));
    CHECK(c->data.contains("witness"));
  }
  CHECK(r.find_case("n=0")->data["refuted"] == false);
  CHECK(deviation_probe(b, sample, {}).cases.empty());
  // Without the unit stalks an exact-only sample cannot refute anything.
  const VerificationReport bare = deviation_probe(b, std::vector<ModuleComplex>{}, {1}, false);
  CHECK(bare.find_case("n=1")->data["refuted"] == false);
}

TEST_CASE("tensor reduced") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  CHECK(tensor_reduced_check(b, {trivial_module(h), sweedler_character(h), sweedler_projective(h)}).passed());
  const VerificationReport z = tensor_reduced_check(b, {b.zero()});
  CHECK(z.passed());
  CHECK(z.cases.front().data.contains("excluded"));

  const GroupBackend g;
  const VerificationReport r = tensor_reduced_check(g, {FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(3)});
  CHECK(r.passed());
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes.front().find("cross-annihilation") != std::string::npos);
  // gcd oracle for Z/a (x) Z/b.
  for (long a = 1; a <= 8; ++a)
    for (long c = 1; c <= 8; ++c) {
      const auto t = tensor_groups(FgAbelianGroup::cyclic(a), FgAbelianGroup::cyclic(c));
      const long d = std::gcd(a, c);
      CHECK(invariant_factors(t) == (d == 1 ? factors({}) : factors({d})));
    }
}

TEST_CASE("unit concentration") {
  CHECK(unit_concentration_check(module_backend(make("sweedler"))).passed());
  CHECK(unit_concentration_check(module_backend(make("taft", 3))).passed());
  CHECK(unit_concentration_check(quiver_backend(Quiver::a2())).passed());
  const VerificationReport z = unit_concentration_check(GroupBackend{});
  CHECK(z.passed());
  CHECK(z.find_case("shifted_unit_not_concentrated") != nullptr);
  CHECK(z.find_case("unit_plus_exact") != nullptr);
}

TEST_CASE("top cohomology squares") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const VerificationReport s = top_cohomology_square_check(b, stalk(b, sweedler_projective(h), 3));
  CHECK(s.passed());
  CHECK(s.find_case("top")->data["degree"] == 6);
  // ker(eps) -> H has H^0 = k, H^-1 = 0: top degree 0.
  const HModule reg = regular_module(h);
  const auto eps = hom_space(reg, trivial_module(h)).front();
  const auto k = b.kernel(eps);
  const ModuleComplex two = make_complex(b, -1, {k.object, reg}, {k.map});
  const VerificationReport t = top_cohomology_square_check(b, two);
  CHECK(t.passed());
  CHECK(t.find_case("top")->data["m"] == 0);
  const VerificationReport u = top_cohomology_square_check(b, shift(b, two, 1));
  CHECK(u.passed());
  CHECK(u.find_case("top")->data["degree"] == -2);
  CHECK_THROWS_AS(top_cohomology_square_check(b, ModuleComplex{}), std::invalid_argument);
  CHECK_THROWS_AS(top_cohomology_square_check(b, make_complex(b, 0, {reg, reg}, {b.identity(reg)})),
                  std::invalid_argument);
}

TEST_CASE("truncation contract on random complexes") {
  Rng rng(19);
  const GroupBackend g;
  for (int i = 0; i < 10; ++i) {
    const auto x = random_complex(g, rng, {}, [](Rng& r) { return random_group(r); });
    for (int n : {-1, 0, 1}) CHECK(truncation_check(g, x, n).passed());
  }
  const QuiverBackend q = quiver_backend(Quiver::a2());
  for (int i = 0; i < 10; ++i) {
    const auto x = random_complex(q, rng, {}, [](Rng& r) { return random_quiver_rep(r, Quiver::a2()); });
    for (int n : {-1, 0, 1}) CHECK(truncation_check(q, x, n).passed());
  }
}

TEST_CASE("dual of a nonpositive complex is nonnegative") {
  const HopfPtr h = make("sweedler");
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_complex(b, rng, {-3, 0, 4}, [&](Rng& r) { return random_module(r, pool); });
    REQUIRE(aisle_membership(b, x, le0));
    const DualComplex d = left_dual_complex(b, x);
    CHECK(aisle_membership(b, d.dual, ge0));
    // Cohomology dimensions reflect: dim H^{-i}(X*) = dim H^i(X).
    for (int n = x.lo; n <= x.hi(); ++n)
      CHECK(b.dimension(cohomology(b, d.dual, -n)) == b.dimension(cohomology(b, x, n)));
  }
}

TEST_CASE("Z/6 counterexample report") {
  const VerificationReport r = z6_counterexample();
  CHECK_FALSE(r.passed());
  CHECK(r.find_case("H^-1")->data["invariant_factors"] == bigints_to_json(factors({2})));
  CHECK(r.find_case("H^0")->data["invariant_factors"] == bigints_to_json(factors({2})));
  CHECK(r.find_case("monoidal_aisle/condition_2")->verdict == Verdict::fail);
  CHECK(r.find_case("monoidal_aisle/condition_2")->data["n"] == 0);
  CHECK(r.find_case("kunneth/degree -1")->verdict == Verdict::fail);
}

TEST_CASE("suites are deterministic") {
  SuiteConfig c;
  c.cases = 4;
  c.seed = 11;
  CHECK(kunneth_suite(c).to_json().dump() == kunneth_suite(c).to_json().dump());
  CHECK(kunneth_suite(c).passed());
  c.builtin = "a2";
  CHECK(aisle_suite(c).passed());
  c.builtin = "z";
  CHECK(reduced_suite(c).passed());
  CHECK(unit_suite(c).passed());
  CHECK_FALSE(kunneth_suite(c).passed());
  CHECK_THROWS_AS(dual_zigzag_suite(c), NonRigidBackend);
  c.builtin = "sweedler";
  CHECK(dual_zigzag_suite(c).passed());
  CHECK(deviation_suite(c).passed());
}
