#include <doctest.h>

#include <random>

#include "tenscat/module.hpp"

using namespace tenscat;

namespace {

HopfPtr make(const std::string& name, int n = 0) { return std::make_shared<const HopfAlgebra>(builtin_hopf(name, n)); }

bool is_identity(const Matrix& m) { return m.rows() == m.cols() && is_zero(Matrix(m - identity(m.rows()))); }

// Every module the tests build, over one algebra.
std::vector<HModule> corpus(const HopfPtr& h) {
  std::vector<HModule> out = {trivial_module(h), regular_module(h)};
  const HModule reg = regular_module(h);
  for (Index i = 0; i < h->dim(); ++i) {
    Vector v = Vector::Zero(h->dim());
    v(i) = Scalar(1);
    if (i + 1 < h->dim()) v(i + 1) = Scalar(2);
    out.push_back(cyclic_submodule(reg, v).module);
  }
  return out;
}

}  // namespace

TEST_CASE("regular and trivial modules satisfy the module law") {
  for (const auto& [name, n] : builtin_hopf_list()) {
    const HopfPtr h = make(name, n);
    CHECK_FALSE(module_law_violation(*h, regular_module(h).actions()));
    CHECK_FALSE(module_law_violation(*h, trivial_module(h).actions()));
  }
}

TEST_CASE("module law rejects a non-module") {
  const HopfPtr h = make("sweedler");
  std::vector<Matrix> act = trivial_module(h).actions();
  act[2](0, 0) = Scalar(1);  // x acting by 1 contradicts x^2 = 0
  CHECK_THROWS_AS(HModule(h, act), std::invalid_argument);
}

TEST_CASE("tensor unit law and the C2 sign module") {
  const HopfPtr kc2 = make("kC2");
  const HModule triv = trivial_module(kc2);
  const HModule sign = sign_module(kc2);
  const HModule ss = tensor_module(sign, sign);
  CHECK(ss.dim() == 1);
  const ModuleIso iso = is_isomorphic(ss, triv);
  REQUIRE(iso.verdict == IsoVerdict::iso);
  // 1-dim oracle: g acts on sign (x) sign by (-1)(-1) = 1.
  CHECK(ss.action(1)(0, 0) == Scalar(1));
  CHECK(hom_space(triv, sign).empty());
  CHECK(is_isomorphic(triv, sign).verdict == IsoVerdict::not_iso);

  for (const HModule& m : corpus(make("sweedler"))) {
    const HModule t = tensor_module(trivial_module(m.algebra()), m);
    CHECK(t == m);
    CHECK(tensor_module(m, trivial_module(m.algebra())) == m);
  }
}

TEST_CASE("Sweedler character squares to the trivial module") {
  const HopfPtr h = make("sweedler");
  const HModule chi = sweedler_character(h);
  const ModuleIso iso = is_isomorphic(tensor_module(chi, chi), trivial_module(h));
  CHECK(iso.verdict == IsoVerdict::iso);
  CHECK(is_isomorphic(chi, trivial_module(h)).verdict == IsoVerdict::not_iso);
}

TEST_CASE("Sweedler projective is two-dimensional and indecomposable") {
  const HopfPtr h = make("sweedler");
  const HModule p = sweedler_projective(h);
  CHECK(p.dim() == 2);
  // P = eH with e = (1 + g)/2 has top k_eps and socle chi, so End(P) = eHe
  // is one-dimensional, P maps onto the trivial module and not onto chi.
  CHECK(hom_space(p, p).size() == 1);
  CHECK(hom_space(p, trivial_module(h)).size() == 1);
  CHECK(hom_space(p, sweedler_character(h)).empty());
  CHECK(hom_space(sweedler_character(h), p).size() == 1);
}

TEST_CASE("duals: unit, sign, and zig-zag identities") {
  const HopfPtr kc2 = make("kC2");
  const HModule triv = trivial_module(kc2);
  CHECK(is_isomorphic(left_dual_module(triv).dual, triv).verdict == IsoVerdict::iso);
  CHECK(is_isomorphic(right_dual_module(triv).dual, triv).verdict == IsoVerdict::iso);
  const HModule sign = sign_module(kc2);
  CHECK(is_isomorphic(left_dual_module(sign).dual, sign).verdict == IsoVerdict::iso);
  CHECK(is_isomorphic(right_dual_module(sign).dual, sign).verdict == IsoVerdict::iso);

  const HopfPtr sw = make("sweedler");
  const HModule p = sweedler_projective(sw);
  const DualData l = left_dual_module(p);
  const Matrix i2 = identity(2);
  CHECK(is_identity(mul(kronecker(i2, l.ev.matrix), kronecker(l.coev.matrix, i2))));
  CHECK(is_identity(mul(kronecker(l.ev.matrix, i2), kronecker(i2, l.coev.matrix))));
  CHECK(check_duality(p, l, true).passed());
  CHECK(check_duality(p, right_dual_module(p), false).passed());

  for (const auto& [name, n] : builtin_hopf_list()) {
    const HopfPtr h = make(name, n);
    for (const HModule& m : corpus(h)) {
      INFO(name << " " << n << " dim " << m.dim());
      const DualData ld = left_dual_module(m);
      const DualData rd = right_dual_module(m);
      CHECK(check_duality(m, ld, true).passed());
      CHECK(check_duality(m, rd, false).passed());
    }
  }
}

TEST_CASE("the naive S action breaks the left evaluation map on Sweedler") {
  // Regression guard for the dual convention: with S in place of S^{-1} the
  // left evaluation stops being a module map.
  const HopfPtr sw = make("sweedler");
  const HModule p = sweedler_projective(sw);
  const DualData wrong = right_dual_module(p);  // action through S
  const HModule unit = trivial_module(sw);
  Vector delta = Vector::Zero(4);
  delta(0) = Scalar(1);
  delta(3) = Scalar(1);
  CHECK_THROWS(ModuleHom::make(tensor_module(wrong.dual, p), unit, Matrix(delta.transpose())));
}

TEST_CASE("hom space additivity and identity membership") {
  const HopfPtr h = make("taft", 3);
  for (const HModule& m : corpus(h)) {
    const auto end = hom_space(m, m);
    REQUIRE(!end.empty());
    Matrix span(m.dim() * m.dim(), static_cast<Index>(end.size()));
    for (std::size_t k = 0; k < end.size(); ++k)
      span.col(static_cast<Index>(k)) = end[k].matrix.reshaped();
    CHECK(solve(span, Vector(identity(m.dim()).reshaped())).has_value());
    CHECK(hom_space(direct_sum({m, m}), m).size() == 2 * end.size());
  }
}

TEST_CASE("is_isomorphic: reflexive, symmetric, base-change invariant") {
  const HopfPtr h = make("sweedler");
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (const HModule& m : corpus(h)) {
    const ModuleIso self = is_isomorphic(m, m);
    CHECK(self.verdict == IsoVerdict::iso);
    Matrix p;
    do {
      p = Matrix(m.dim(), m.dim());
      for (Index i = 0; i < p.rows(); ++i)
        for (Index j = 0; j < p.cols(); ++j) p(i, j) = Scalar(dist(rng));
    } while (rank(p) < m.dim());
    const HModule n = base_change(m, p);
    CHECK_FALSE(module_law_violation(*h, n.actions()));
    const ModuleIso fwd = is_isomorphic(m, n);
    const ModuleIso back = is_isomorphic(n, m);
    CHECK(fwd.verdict == IsoVerdict::iso);
    CHECK(back.verdict == IsoVerdict::iso);
    REQUIRE(fwd.witness);
    CHECK(ModuleHom::make(m, n, fwd.witness->matrix).matrix.rows() == m.dim());
    // Simultaneous base change keeps the verdict against the trivial module.
    const HModule t = trivial_module(h);
    CHECK(is_isomorphic(m, t).verdict == is_isomorphic(n, t).verdict);
  }
  CHECK(is_isomorphic(trivial_module(h), regular_module(h)).verdict == IsoVerdict::not_iso);
}

TEST_CASE("associator is the identity matrix and a module map") {
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"taft", 3}, {"S3", 0}}) {
    const HopfPtr h = make(name, n);
    const auto c = corpus(h);
    const HModule& a = c[2];
    const HModule& b = c[1];
    const HModule& d = c.back();
    const HModule left = tensor_module(tensor_module(a, b), d);
    const HModule right = tensor_module(a, tensor_module(b, d));
    CHECK_NOTHROW(ModuleHom::make(left, right, identity(left.dim())));
    CHECK(left.dim() == a.dim() * b.dim() * d.dim());
  }
}

TEST_CASE("modules of different algebras are rejected") {
  const HModule a = trivial_module(make("kC2"));
  const HModule b = trivial_module(make("sweedler"));
  CHECK_THROWS_AS(hom_space(a, b), std::invalid_argument);
  CHECK_THROWS_AS(tensor_module(a, b), std::invalid_argument);
}
