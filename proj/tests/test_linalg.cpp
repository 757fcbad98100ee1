#include <random>

#include "doctest.h"
#include "tenscat/integer.hpp"
#include "tenscat/matrix.hpp"

using namespace tenscat;

namespace {

Matrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto q = FieldSpec::rationals();
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = Scalar::from_int(v, q);
    ++i;
  }
  return m;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, Index rows, Index cols, const FieldSpec& field, int range = 3) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::uniform_int_distribution<int> sparse(0, 2);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      if (field.kind == FieldKind::cyclotomic) {
        std::vector<mpq_class> c(static_cast<std::size_t>(field.degree()));
        for (auto& x : c) x = sparse(rng) ? 0 : coef(rng);
        m(i, j) = Scalar::from_cyclotomic(field.param, c);
      } else {
        m(i, j) = sparse(rng) == 0 ? Scalar::zero(field) : Scalar::from_int(coef(rng), field);
      }
    }
  return m;
}

// Test-side oracle: every 2x2 minor of m.
std::vector<Scalar> all_two_by_two_minors(const Matrix& m) {
  std::vector<Scalar> out;
  for (Index r0 = 0; r0 < m.rows(); ++r0)
    for (Index r1 = r0 + 1; r1 < m.rows(); ++r1)
      for (Index c0 = 0; c0 < m.cols(); ++c0)
        for (Index c1 = c0 + 1; c1 < m.cols(); ++c1)
          out.push_back(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0));
  return out;
}

}  // namespace

TEST_CASE("rref on the small fixed cases") {
  SUBCASE("rank one symmetric") {
    const RowEchelon e = rref(rational_matrix({{1, 1}, {1, 1}}));
    CHECK(e.rank == 1);
    REQUIRE(e.pivots.size() == 1);
    CHECK(e.pivots[0] == 0);
    CHECK(e.reduced == rational_matrix({{1, 1}, {0, 0}}));
  }
  SUBCASE("identity is its own reduced form") {
    const Matrix id = in_field(identity(3), FieldSpec::rationals());
    const RowEchelon e = rref(id);
    CHECK(e.rank == 3);
    CHECK(e.reduced == id);
  }
  SUBCASE("proportional columns") {
    const Matrix m = rational_matrix({{2, 4}, {1, 2}, {3, 6}});
    for (const Scalar& minor : all_two_by_two_minors(m)) CHECK(minor.is_zero());
    const RowEchelon e = rref(m);
    CHECK(e.rank == 1);
    CHECK(e.reduced == rational_matrix({{1, 2}, {0, 0}, {0, 0}}));
  }
  SUBCASE("fractions go through the fraction-free path") {
    Matrix m = rational_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    m(0, 0) = Scalar::from_rational(mpq_class(1, 3), FieldSpec::rationals());
    CHECK(rref(m).rank == 3);
    CHECK(rref(m).reduced == in_field(identity(3), FieldSpec::rationals()));
  }
}

TEST_CASE("mixed fields are rejected") {
  Matrix m = rational_matrix({{1, 2}, {3, 4}});
  m(1, 1) = Scalar::from_int(4, FieldSpec::prime(7));
  CHECK_THROWS_AS(rref(m), FieldMismatch);
  CHECK_THROWS_AS(kernel_basis(m), FieldMismatch);
  CHECK_THROWS_AS(solve(m, Vector(Vector::Zero(2))), FieldMismatch);
}

TEST_CASE("kernel_basis") {
  SUBCASE("single row") {
    const auto k = kernel_basis(rational_matrix({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK((k[0](0) + k[0](1)).is_zero());
    CHECK(!k[0](0).is_zero());
  }
  SUBCASE("invertible matrix has trivial kernel") {
    CHECK(kernel_basis(rational_matrix({{2, 1}, {1, 1}})).empty());
  }
  SUBCASE("hand-solved 2x3") {
    const Matrix m = rational_matrix({{1, 0, 1}, {0, 1, 1}});
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(Matrix(m * k[0])));
    // spans (1, 1, -1)
    const Scalar s = k[0](0);
    CHECK(k[0](1) == s);
    CHECK(k[0](2) == -s);
  }
}

TEST_CASE("solve") {
  const auto q = FieldSpec::rationals();
  SUBCASE("identity returns b") {
    Vector b(3);
    b << Scalar::from_int(4, q), Scalar::from_int(-1, q), Scalar::from_rational(mpq_class(2, 7), q);
    auto x = solve(in_field(identity(3), q), b);
    REQUIRE(x);
    CHECK(*x == b);
  }
  SUBCASE("underdetermined") {
    Vector b(1);
    b << Scalar::zero(q);
    const Matrix m = rational_matrix({{1, 1}});
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(Vector(m * *x) == b);
  }
  SUBCASE("inconsistent") {
    Vector b(2);
    b << Scalar::zero(q), Scalar::one(q);
    CHECK_FALSE(solve(rational_matrix({{1}, {0}}), b).has_value());
  }
}

TEST_CASE("kronecker block order") {
  const Matrix a = rational_matrix({{0, 1}, {0, 0}});
  CHECK(kronecker(a, rational_matrix({{1}})) == a);
  CHECK(kronecker(identity(2), identity(3)) == identity(6));
  CHECK(kronecker(a, rational_matrix({{2}})) == rational_matrix({{0, 2}, {0, 0}}));
  const Matrix b = rational_matrix({{1, 2}, {3, 4}});
  const Matrix k = kronecker(b, a);
  // (A (x) B)(i*rB + k, j*cB + l) = A(i,j) B(k,l)
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index r = 0; r < 2; ++r)
        for (Index c = 0; c < 2; ++c) CHECK(k(i * 2 + r, j * 2 + c) == b(i, j) * a(r, c));
}

TEST_CASE("smith normal form fixed cases") {
  SUBCASE("1x1") {
    const SmithForm s = smith_normal_form(int_matrix({{2}}));
    CHECK(s.d == int_matrix({{2}}));
  }
  SUBCASE("diag(2,3) becomes diag(1,6)") {
    const IntMatrix m = int_matrix({{2, 0}, {0, 3}});
    const SmithForm s = smith_normal_form(m);
    CHECK(s.d == int_matrix({{1, 0}, {0, 6}}));
    CHECK(IntMatrix(s.u * m * s.v) == s.d);
  }
  SUBCASE("zero matrix") {
    const IntMatrix z = IntMatrix::Zero(2, 3);
    const SmithForm s = smith_normal_form(z);
    CHECK(is_zero(s.d));
    CHECK(s.u == int_identity(2));
    CHECK(s.v == int_identity(3));
    CHECK(s.rank == 0);
  }
}

TEST_CASE("smith normal form properties on random integer matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = coef(rng) * (trial % 3 == 0 ? 2 : 1);
    const SmithDecomposition s = smith_decomposition(m);
    CHECK(IntMatrix(s.u * m * s.v) == s.d);
    CHECK(abs(integer_determinant(s.u)) == 1);
    CHECK(abs(integer_determinant(s.v)) == 1);
    CHECK(IntMatrix(s.u * s.u_inv) == int_identity(m.rows()));
    CHECK(IntMatrix(s.v * s.v_inv) == int_identity(m.cols()));
    for (Index i = 0; i < s.d.rows(); ++i)
      for (Index j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (Index i = 0; i < s.rank; ++i) {
      CHECK(s.d(i, i) > 0);
      if (i + 1 < s.rank) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
    for (Index i = s.rank; i < std::min(m.rows(), m.cols()); ++i) CHECK(s.d(i, i) == 0);

    const IntMatrix k = integer_kernel(m);
    CHECK(is_zero(IntMatrix(m * k)));
    IntVector x(m.cols());
    for (Index j = 0; j < m.cols(); ++j) x(j) = coef(rng);
    const IntVector b = m * x;
    const auto y = integer_solve(m, b);
    REQUIRE(y);
    CHECK(IntVector(m * *y) == b);
  }
}

TEST_CASE("integer_solve detects divisibility obstructions") {
  IntVector b(1);
  b << 3;
  CHECK_FALSE(integer_solve(int_matrix({{2}}), b).has_value());
  b << 4;
  CHECK(integer_solve(int_matrix({{2}}), b).has_value());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(FieldSpec::cyclotomic(9).degree() == 6);
}

TEST_CASE("cyclotomic_primitive_root") {
  CHECK(cyclotomic_primitive_root(1).is_one());
  CHECK(cyclotomic_primitive_root(2) == Scalar::from_int(-1, FieldSpec::cyclotomic(2)));

  // n = 4: zeta is x in Q[x]/(x^2 + 1). Square the coefficient vector by hand
  // and reduce with x^2 = -1.
  const Scalar z = cyclotomic_primitive_root(4);
  const auto& c = z.cyclotomic_coefficients();
  REQUIRE(c.size() == 2);
  const mpq_class c0 = c[0] * c[0] - c[1] * c[1];
  const mpq_class c1 = 2 * c[0] * c[1];
  CHECK(c0 + 1 == 0);
  CHECK(c1 == 0);
  CHECK((z * z + Scalar(1)).is_zero());

  for (std::uint32_t n = 1; n <= 12; ++n) {
    const Scalar zeta = cyclotomic_primitive_root(n);
    CHECK(multiplicative_order(zeta, 2 * n) == n);
  }
}

TEST_CASE("exact arithmetic laws") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  const auto q = FieldSpec::rationals();
  for (int i = 0; i < 50; ++i) {
    long a = num(rng);
    if (a == 0) a = 1;
    const long b = den(rng);
    mpq_class qa(a, b), qb(b, a);
    qa.canonicalize();
    qb.canonicalize();
    const Scalar x = Scalar::from_rational(qa, q);
    const Scalar y = Scalar::from_rational(qb, q);
    CHECK((x * y).is_one());
  }
  const auto f7 = FieldSpec::prime(7);
  for (long v = 1; v < 7; ++v) CHECK((Scalar::from_int(v, f7) * Scalar::from_int(v, f7).inverse()).is_one());
  const auto c5 = FieldSpec::cyclotomic(5);
  const Scalar w = Scalar::from_cyclotomic(5, {1, 2, 0, -1});
  CHECK((w * w.inverse()).is_one());
  CHECK(Scalar::from_int(3, c5) / Scalar::from_int(3, c5) == Scalar(1));
}

TEST_CASE("scalar parsing and printing") {
  const auto q = FieldSpec::rationals();
  CHECK(Scalar::parse("-3/6", q) == Scalar::from_rational(mpq_class(-1, 2), q));
  CHECK(Scalar::parse("-3/6", q).to_string() == "-1/2");
  const auto f5 = FieldSpec::prime(5);
  CHECK(Scalar::parse("3 mod 5", f5).to_string() == "3 mod 5");
  CHECK(Scalar::parse("1/2", f5) == Scalar::from_int(3, f5));
  CHECK_THROWS(Scalar::parse("1 mod 7", f5));
  const auto c3 = FieldSpec::cyclotomic(3);
  CHECK(Scalar::parse("[0, 1]", c3) == cyclotomic_primitive_root(3));
  CHECK(cyclotomic_primitive_root(3).to_string() == "[0, 1]");
  CHECK(FieldSpec::parse("cyc:3") == c3);
  CHECK(FieldSpec::parse("fp:5") == f5);
  CHECK_THROWS(FieldSpec::parse("fp:6"));
  CHECK_THROWS(FieldSpec::parse("r"));
}

TEST_CASE("random matrix invariants over several fields") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> dim(1, 5);
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(5), FieldSpec::cyclotomic(3), FieldSpec::cyclotomic(8)}) {
    CAPTURE(field.to_string());
    for (int trial = 0; trial < 25; ++trial) {
      const Matrix m = random_matrix(rng, dim(rng), dim(rng), field);
      const Matrix mt = m.transpose();
      CHECK(rank(m) == rank(mt));
      const auto ker = kernel_basis(m);
      CHECK(static_cast<Index>(ker.size()) == m.cols() - rank(m));
      for (const auto& v : ker) CHECK(is_zero(Matrix(m * v)));

      const Matrix a = random_matrix(rng, 2, 3, field);
      const Matrix b = random_matrix(rng, 2, 2, field);
      const Matrix c = random_matrix(rng, 3, 2, field);
      const Matrix d = random_matrix(rng, 2, 1, field);
      CHECK(Matrix(kronecker(a, b) * kronecker(c, d)) == kronecker(Matrix(a * c), Matrix(b * d)));

      if (m.rows() == m.cols()) {
        const auto inv = inverse(m);
        CHECK(inv.has_value() == !determinant(m).is_zero());
        if (inv) CHECK(Matrix(m * *inv) == identity(m.rows()));
      }
    }
  }
}

TEST_CASE("complement basis completes a subspace") {
  const Matrix basis = rational_matrix({{1}, {1}, {0}});
  const Matrix comp = complement_basis(basis);
  CHECK(comp.cols() == 2);
  Matrix all(3, 3);
  all << basis, comp;
  CHECK(rank(all) == 3);
}
