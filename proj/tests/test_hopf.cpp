#include <random>

#include "doctest.h"
#include "tenscat/hopf.hpp"

using namespace tenscat;

namespace {

bool all_pass(const VerificationReport& r) {
  for (const auto& c : r.cases)
    if (c.verdict != Verdict::pass) return false;
  return r.passed() && !r.cases.empty();
}

// Test-side oracle: product in H^(x)3 straight from the structure constants.
Vector naive_triple_product(const HopfAlgebra& h, const Vector& a, const Vector& b) {
  const Index d = h.dim();
  Vector out = Vector::Zero(d * d * d);
  for (Index i1 = 0; i1 < d; ++i1)
    for (Index i2 = 0; i2 < d; ++i2)
      for (Index i3 = 0; i3 < d; ++i3) {
        const Scalar& x = a((i1 * d + i2) * d + i3);
        if (x.is_zero()) continue;
        for (Index j1 = 0; j1 < d; ++j1)
          for (Index j2 = 0; j2 < d; ++j2)
            for (Index j3 = 0; j3 < d; ++j3) {
              const Scalar& y = b((j1 * d + j2) * d + j3);
              if (y.is_zero()) continue;
              for (Index k1 = 0; k1 < d; ++k1)
                for (Index k2 = 0; k2 < d; ++k2)
                  for (Index k3 = 0; k3 < d; ++k3)
                    out((k1 * d + k2) * d + k3) += x * y * h.algebra().mult(i1, j1, k1) * h.algebra().mult(i2, j2, k2) *
                                                   h.algebra().mult(i3, j3, k3);
            }
      }
  return out;
}

bool cocycle_holds_naively(const HopfAlgebra& h, const Vector& j) {
  const Index d = h.dim();
  const Vector& u = h.algebra().unit();
  Vector dl = Vector::Zero(d * d * d), dr = Vector::Zero(d * d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index x = 0; x < d; ++x)
        for (Index y = 0; y < d; ++y) {
          dl((x * d + y) * d + b) += j(a * d + b) * h.comult()(x * d + y, a);
          dr((a * d + x) * d + y) += j(a * d + b) * h.comult()(x * d + y, b);
        }
  const Vector lhs = naive_triple_product(h, kronecker(j, u), dl);
  const Vector rhs = naive_triple_product(h, kronecker(u, j), dr);
  for (Index i = 0; i < lhs.size(); ++i)
    if (lhs(i) != rhs(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("group algebras") {
  SUBCASE("C1") {
    const HopfAlgebra h = builtin_hopf("kC1");
    CHECK(h.dim() == 1);
    CHECK(h.antipode() == in_field(identity(1), h.field()));
    CHECK(all_pass(check_hopf_axioms(h)));
  }
  SUBCASE("C2") {
    const HopfAlgebra h = builtin_hopf("kC2");
    CHECK(h.dim() == 2);
    CHECK(h.antipode() == in_field(identity(2), h.field()));
    CHECK(all_pass(check_hopf_axioms(h)));
  }
  SUBCASE("S3 antipode is the inversion permutation") {
    const auto table = group_table("S3");
    const HopfAlgebra h = group_algebra(table);
    CHECK(h.dim() == 6);
    CHECK(all_pass(check_hopf_axioms(h)));
    for (int g = 0; g < 6; ++g)
      for (int k = 0; k < 6; ++k) {
        const bool inverse_pair = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] == 0;
        CHECK(h.antipode()(k, g) == Scalar(inverse_pair ? 1 : 0));
      }
  }
  SUBCASE("not a group") {
    CHECK_THROWS(group_algebra({{0, 1}, {1, 1}}));
    CHECK_THROWS(group_algebra({{0, 1}, {0, 1}}));
    CHECK_THROWS(group_algebra({{0, 2}, {1, 0}}));
  }
}

TEST_CASE("all built-ins satisfy the axioms") {
  for (const auto& [name, n] : builtin_hopf_list()) {
    CAPTURE(name);
    CAPTURE(n);
    const HopfAlgebra h = builtin_hopf(name, n);
    CHECK(all_pass(check_hopf_axioms(h)));
  }
  for (const auto& g : group_names()) {
    CAPTURE(g);
    CHECK(all_pass(check_hopf_axioms(group_algebra(group_table(g), FieldSpec::prime(5)))));
  }
}

TEST_CASE("Sweedler algebra") {
  const HopfAlgebra h = sweedler_algebra();
  CHECK(h.dim() == 4);
  CHECK(all_pass(check_hopf_axioms(h)));

  // By hand: m(S (x) id) Delta(x) = S(x) 1 + S(g) x = -gx + gx = 0 = eps(x) 1.
  const FiniteDimAlgebra& a = h.algebra();
  const Vector one = a.basis_vector(0), g = a.basis_vector(1), x = a.basis_vector(2);
  const Vector lhs = a.multiply(h.apply_antipode(x), one) + a.multiply(h.apply_antipode(g), x);
  CHECK(is_zero(Matrix(lhs)));
  CHECK(h.counit()(2).is_zero());

  const Matrix s = h.antipode();
  const Matrix s2 = s * s;
  CHECK(s2 != in_field(identity(4), h.field()));
  CHECK(Vector(s2 * x) == Vector(-x));
  CHECK(in_field(Matrix(s2 * s2), h.field()) == in_field(identity(4), h.field()));

  CHECK_THROWS(sweedler_algebra(FieldSpec::prime(2)));
}

TEST_CASE("corrupting Delta(x) to x (x) 1 breaks the axioms") {
  const HopfAlgebra h = sweedler_algebra();
  Matrix delta = h.comult();
  delta(1 * 4 + 2, 2) = Scalar(0);  // drop g (x) x
  const HopfAlgebra bad(h.algebra(), delta, h.counit(), h.antipode());
  const VerificationReport r = check_hopf_axioms(bad);
  CHECK(r.verdict == Verdict::fail);
  const bool broken = r.find_case("coassociativity")->verdict == Verdict::fail ||
                      r.find_case("bialgebra_compatibility")->verdict == Verdict::fail ||
                      r.find_case("antipode")->verdict == Verdict::fail;
  CHECK(broken);
}

TEST_CASE("single-entry mutations of Delta, eps and S are caught") {
  std::mt19937 rng(23);
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"kS3", 0}, {"taft", 3}}) {
    const HopfAlgebra h = builtin_hopf(name, n);
    const Index d = h.dim();
    std::uniform_int_distribution<Index> row2(0, d * d - 1), row(0, d - 1);
    for (int trial = 0; trial < 12; ++trial) {
      const Scalar bump = Scalar::from_int(1 + trial % 3, h.field());
      Matrix delta = h.comult();
      delta(row2(rng), row(rng)) += bump;
      CHECK(check_hopf_axioms(HopfAlgebra(h.algebra(), delta, h.counit(), h.antipode())).verdict == Verdict::fail);
      Vector eps = h.counit();
      eps(row(rng)) += bump;
      CHECK(check_hopf_axioms(HopfAlgebra(h.algebra(), h.comult(), eps, h.antipode())).verdict == Verdict::fail);
      Matrix s = h.antipode();
      s(row(rng), row(rng)) += bump;
      CHECK(check_hopf_axioms(HopfAlgebra(h.algebra(), h.comult(), h.counit(), s)).verdict == Verdict::fail);
    }
  }
}

TEST_CASE("Taft algebras") {
  SUBCASE("n = 2 over Q is the Sweedler algebra") {
    const HopfAlgebra t = taft_algebra(2, FieldSpec::rationals());
    const HopfAlgebra s = sweedler_algebra();
    CHECK(t.algebra().mult_table() == s.algebra().mult_table());
    CHECK(t.comult() == s.comult());
    CHECK(t.counit() == s.counit());
    CHECK(t.antipode() == s.antipode());
  }
  SUBCASE("n = 3 over Q(zeta_3)") {
    const HopfAlgebra t = taft_algebra(3, FieldSpec::cyclotomic(3));
    CHECK(t.dim() == 9);
    CHECK(all_pass(check_hopf_axioms(t)));
  }
  SUBCASE("n = 3 over F_7") {
    const HopfAlgebra t = taft_algebra(3, FieldSpec::prime(7));
    CHECK(all_pass(check_hopf_axioms(t)));
  }
  SUBCASE("q must be primitive") {
    CHECK_THROWS(taft_algebra(2, FieldSpec::rationals(), Scalar::one(FieldSpec::rationals())));
    CHECK_THROWS(taft_algebra(3, FieldSpec::rationals()));
    CHECK_THROWS(taft_algebra(3, FieldSpec::prime(5)));
  }
  SUBCASE("x g = q g x") {
    const HopfAlgebra t = taft_algebra(4, FieldSpec::cyclotomic(4));
    const FiniteDimAlgebra& a = t.algebra();
    const Vector g = a.basis_vector(1), x = a.basis_vector(4);
    Vector qgx = a.multiply(g, x);
    const Scalar q = cyclotomic_primitive_root(4);
    for (Index k = 0; k < qgx.size(); ++k) qgx(k) *= q;
    CHECK(a.multiply(x, g) == qgx);
  }
}

TEST_CASE("identity twist reproduces every built-in exactly") {
  for (const auto& [name, n] : builtin_hopf_list()) {
    CAPTURE(name);
    const HopfAlgebra h = builtin_hopf(name, n);
    const HopfAlgebra t = drinfeld_twist(h, trivial_twist(h));
    CHECK(t == h);
  }
}

TEST_CASE("coboundary twists are valid and give Hopf algebras") {
  const HopfAlgebra h = sweedler_algebra();
  const Vector u = h.algebra().basis_vector(0) + h.algebra().basis_vector(2);  // 1 + x
  const TwistElement j = coboundary_twist(h, u);
  CHECK(validate_twist(h, j).passed());
  CHECK(cocycle_holds_naively(h, j.element));
  const HopfAlgebra hj = drinfeld_twist(h, j);
  CHECK(all_pass(check_hopf_axioms(hj)));
  CHECK(hj.comult() != h.comult());

  const HopfAlgebra t3 = taft_algebra(3, FieldSpec::cyclotomic(3));
  const Vector v = t3.algebra().basis_vector(0) + t3.algebra().basis_vector(3) * Scalar::from_int(2, t3.field());
  CHECK(all_pass(check_hopf_axioms(drinfeld_twist(t3, coboundary_twist(t3, v)))));
}

TEST_CASE("non-cocycle perturbations are rejected") {
  const HopfAlgebra h = sweedler_algebra();
  const auto j = non_cocycle_perturbation(h, 42);
  REQUIRE(j.has_value());
  CHECK_FALSE(cocycle_holds_naively(h, j->element));
  try {
    (void)drinfeld_twist(h, *j);
    FAIL("twist accepted");
  } catch (const InvalidTwist& e) {
    CHECK(std::string(e.what()).find("cocycle") != std::string::npos);
    CHECK(e.report().find_case("cocycle")->verdict == Verdict::fail);
    CHECK(e.report().find_case("invertibility")->verdict == Verdict::pass);
  }
}
