#include "tenscat/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tenscat {

namespace {

Vector typed_zeros(Index n, const FieldSpec& field) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Scalar::zero(field);
  return v;
}

Index ipow(Index b, int e) {
  Index r = 1;
  while (e-- > 0) r *= b;
  return r;
}

json index_tuple(std::initializer_list<Index> idx) {
  json j = json::array();
  for (Index i : idx) j.push_back(i);
  return j;
}

}  // namespace

// ---------------------------------------------------------------- algebra

FiniteDimAlgebra::FiniteDimAlgebra(FieldSpec field, Index dim, std::vector<Scalar> mult, Vector unit)
    : field_(field), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (dim_ <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (static_cast<Index>(mult_.size()) != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constants must have dim^3 entries");
  if (unit_.size() != dim_) throw std::invalid_argument("unit vector must have length dim");
  for (auto& c : mult_) c = c.in_field(field_);
  for (Index i = 0; i < dim_; ++i) unit_(i) = unit_(i).in_field(field_);
  terms_.resize(static_cast<std::size_t>(dim_ * dim_));
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      for (Index k = 0; k < dim_; ++k)
        if (!this->mult(i, j, k).is_zero()) terms_[static_cast<std::size_t>(i * dim_ + j)].emplace_back(k, this->mult(i, j, k));
}

Vector FiniteDimAlgebra::zero_vector() const { return typed_zeros(dim_, field_); }

Vector FiniteDimAlgebra::basis_vector(Index i) const {
  Vector v = zero_vector();
  v(i) = Scalar::one(field_);
  return v;
}

Vector FiniteDimAlgebra::multiply(const Vector& a, const Vector& b) const { return multiply_tensor(a, b, 1); }

Vector FiniteDimAlgebra::multiply_tensor(const Vector& a, const Vector& b, int r) const {
  const Index n = ipow(dim_, r);
  if (a.size() != n || b.size() != n) throw std::invalid_argument("multiply_tensor: vector length mismatch");
  Vector out = typed_zeros(n, field_);
  std::vector<Index> ia(static_cast<std::size_t>(r)), ib(static_cast<std::size_t>(r));
  for (Index x = 0; x < n; ++x) {
    if (a(x).is_zero()) continue;
    for (Index y = 0; y < n; ++y) {
      if (b(y).is_zero()) continue;
      // Decompose multi-indices (first factor outermost).
      Index xx = x, yy = y;
      for (int s = r - 1; s >= 0; --s) {
        ia[static_cast<std::size_t>(s)] = xx % dim_;
        ib[static_cast<std::size_t>(s)] = yy % dim_;
        xx /= dim_;
        yy /= dim_;
      }
      const Scalar coef = a(x) * b(y);
      // Expand the product factor by factor.
      std::vector<std::pair<Index, Scalar>> acc{{0, coef}};
      for (int s = 0; s < r; ++s) {
        const auto& t = product(ia[static_cast<std::size_t>(s)], ib[static_cast<std::size_t>(s)]);
        std::vector<std::pair<Index, Scalar>> next;
        next.reserve(acc.size() * t.size());
        for (const auto& [idx, c] : acc)
          for (const auto& [k, ck] : t) next.emplace_back(idx * dim_ + k, c * ck);
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (const auto& [idx, c] : acc) out(idx) += c;
    }
  }
  return out;
}

Matrix FiniteDimAlgebra::left_multiplication(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) m.col(j) = multiply(a, basis_vector(j));
  return m;
}

std::optional<Vector> FiniteDimAlgebra::inverse_element(const Vector& a) const {
  // Finite-dimensional: a left-invertible element is invertible.
  auto x = solve(left_multiplication(a), unit_);
  if (!x) return std::nullopt;
  return in_field(Matrix(*x), field_).col(0);
}

// ---------------------------------------------------------------- Hopf

HopfAlgebra::HopfAlgebra(FiniteDimAlgebra algebra, Matrix comult, Vector counit, Matrix antipode,
                         std::optional<Matrix> antipode_inverse, std::string name)
    : algebra_(std::move(algebra)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      antipode_inverse_(std::move(antipode_inverse)),
      name_(std::move(name)) {
  const Index d = algebra_.dim();
  const FieldSpec& f = algebra_.field();
  if (comult_.rows() != d * d || comult_.cols() != d) throw std::invalid_argument("comultiplication must be dim^2 x dim");
  if (counit_.size() != d) throw std::invalid_argument("counit must have length dim");
  if (antipode_.rows() != d || antipode_.cols() != d) throw std::invalid_argument("antipode must be dim x dim");
  comult_ = in_field(comult_, f);
  counit_ = in_field(Matrix(counit_), f).col(0);
  antipode_ = in_field(antipode_, f);
  if (antipode_inverse_) {
    if (antipode_inverse_->rows() != d || antipode_inverse_->cols() != d)
      throw std::invalid_argument("antipode inverse must be dim x dim");
    antipode_inverse_ = in_field(*antipode_inverse_, f);
  } else if (auto inv = inverse(antipode_)) {
    antipode_inverse_ = in_field(*inv, f);
  }
  coproduct_terms_.resize(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i)
    for (Index r = 0; r < d * d; ++r)
      if (!comult_(r, i).is_zero()) coproduct_terms_[static_cast<std::size_t>(i)].emplace_back(r / d, r % d, comult_(r, i));
  generators_.resize(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) generators_[static_cast<std::size_t>(i)] = i;
}

void HopfAlgebra::set_generators(std::vector<Index> g) {
  for (Index i : g)
    if (i < 0 || i >= dim()) throw std::invalid_argument("generator index out of range");
  generators_ = std::move(g);
}

Vector HopfAlgebra::comultiply(const Vector& v) const { return in_field(Matrix(comult_ * v), field()).col(0); }
Vector HopfAlgebra::apply_antipode(const Vector& v) const { return in_field(Matrix(antipode_ * v), field()).col(0); }

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.field() == b.field() && a.dim() == b.dim() && a.algebra().mult_table() == b.algebra().mult_table() &&
         a.algebra().unit() == b.algebra().unit() && a.comult_ == b.comult_ && a.counit_ == b.counit_ &&
         a.antipode_ == b.antipode_ && a.antipode_inverse_.has_value() == b.antipode_inverse_.has_value() &&
         (!a.antipode_inverse_ || *a.antipode_inverse_ == *b.antipode_inverse_);
}

// ---------------------------------------------------------------- axioms

VerificationReport check_hopf_axioms(const HopfAlgebra& h) {
  VerificationReport rep("hopf_axioms");
  const FiniteDimAlgebra& alg = h.algebra();
  const Index d = h.dim();
  const FieldSpec& f = h.field();
  const Scalar one = Scalar::one(f);
  rep.note("algebra " + (h.name().empty() ? std::string("(unnamed)") : h.name()) + ", dim " + std::to_string(d) +
           ", field " + f.to_string());

  // associativity
  {
    std::optional<json> bad;
    for (Index i = 0; i < d && !bad; ++i)
      for (Index j = 0; j < d && !bad; ++j) {
        for (Index k = 0; k < d && !bad; ++k) {
          Vector lhs = alg.zero_vector(), rhs = alg.zero_vector();
          for (const auto& [m, c] : alg.product(i, j))
            for (const auto& [t, ct] : alg.product(m, k)) lhs(t) += c * ct;
          for (const auto& [m, c] : alg.product(j, k))
            for (const auto& [t, ct] : alg.product(i, m)) rhs(t) += c * ct;
          if (lhs != rhs) bad = json{{"basis_triple", index_tuple({i, j, k})}};
        }
      }
    rep.add_case("associativity", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // unit
  {
    std::optional<json> bad;
    for (Index i = 0; i < d && !bad; ++i) {
      const Vector e = alg.basis_vector(i);
      if (alg.multiply(alg.unit(), e) != e) bad = json{{"basis_index", i}, {"side", "left"}};
      else if (alg.multiply(e, alg.unit()) != e) bad = json{{"basis_index", i}, {"side", "right"}};
    }
    rep.add_case("unit", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // coassociativity
  {
    std::optional<json> bad;
    for (Index i = 0; i < d && !bad; ++i) {
      Vector lhs = typed_zeros(d * d * d, f), rhs = typed_zeros(d * d * d, f);
      for (const auto& [a, b, c] : h.coproduct(i)) {
        for (const auto& [x, y, cx] : h.coproduct(a)) lhs((x * d + y) * d + b) += c * cx;
        for (const auto& [x, y, cx] : h.coproduct(b)) rhs((a * d + x) * d + y) += c * cx;
      }
      for (Index k = 0; k < d * d * d && !bad; ++k)
        if (lhs(k) != rhs(k))
          bad = json{{"basis_index", i},
                     {"triple", json::array({k / (d * d), (k / d) % d, k % d})},
                     {"(Delta x id)Delta", lhs(k).to_string()},
                     {"(id x Delta)Delta", rhs(k).to_string()}};
    }
    rep.add_case("coassociativity", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // counit
  {
    std::optional<json> bad;
    for (Index i = 0; i < d && !bad; ++i) {
      Vector left = alg.zero_vector(), right = alg.zero_vector();
      for (const auto& [a, b, c] : h.coproduct(i)) {
        left(b) += h.counit()(a) * c;
        right(a) += h.counit()(b) * c;
      }
      const Vector e = alg.basis_vector(i);
      if (left != e) bad = json{{"basis_index", i}, {"side", "(eps x id)"}};
      else if (right != e) bad = json{{"basis_index", i}, {"side", "(id x eps)"}};
    }
    rep.add_case("counit", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // bialgebra compatibility: Delta and eps are unital algebra maps
  {
    std::optional<json> bad;
    std::vector<Vector> deltas;
    for (Index i = 0; i < d; ++i) deltas.push_back(h.comult().col(i));
    const Vector unit2 = kronecker(alg.unit(), alg.unit());
    if (in_field(Matrix(h.comult() * alg.unit()), f).col(0) != unit2) bad = json{{"clause", "Delta(1) = 1 (x) 1"}};
    Scalar eps_unit = Scalar::zero(f);
    for (Index k = 0; k < d; ++k) eps_unit += h.counit()(k) * alg.unit()(k);
    if (!bad && eps_unit != one) bad = json{{"clause", "eps(1) = 1"}};
    for (Index i = 0; i < d && !bad; ++i)
      for (Index j = 0; j < d && !bad; ++j) {
        Vector lhs = typed_zeros(d * d, f);
        Scalar eps_prod = Scalar::zero(f);
        for (const auto& [k, c] : alg.product(i, j)) {
          for (const auto& [a, b, ck] : h.coproduct(k)) lhs(a * d + b) += c * ck;
          eps_prod += c * h.counit()(k);
        }
        if (lhs != alg.multiply_tensor(deltas[static_cast<std::size_t>(i)], deltas[static_cast<std::size_t>(j)], 2))
          bad = json{{"clause", "Delta(e_i e_j) = Delta(e_i) Delta(e_j)"}, {"basis_pair", index_tuple({i, j})}};
        else if (eps_prod != h.counit()(i) * h.counit()(j))
          bad = json{{"clause", "eps(e_i e_j) = eps(e_i) eps(e_j)"}, {"basis_pair", index_tuple({i, j})}};
      }
    rep.add_case("bialgebra_compatibility", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // antipode
  {
    std::optional<json> bad;
    for (Index i = 0; i < d && !bad; ++i) {
      Vector left = alg.zero_vector(), right = alg.zero_vector();
      for (const auto& [a, b, c] : h.coproduct(i))
        for (Index s = 0; s < d; ++s) {
          if (!h.antipode()(s, a).is_zero())
            for (const auto& [k, ck] : alg.product(s, b)) left(k) += c * h.antipode()(s, a) * ck;
          if (!h.antipode()(s, b).is_zero())
            for (const auto& [k, ck] : alg.product(a, s)) right(k) += c * h.antipode()(s, b) * ck;
        }
      Vector expect = alg.unit();
      for (Index k = 0; k < d; ++k) expect(k) *= h.counit()(i);
      if (left != expect) bad = json{{"basis_index", i}, {"side", "m(S x id)Delta"}};
      else if (right != expect) bad = json{{"basis_index", i}, {"side", "m(id x S)Delta"}};
    }
    rep.add_case("antipode", bad ? Verdict::fail : Verdict::pass, bad.value_or(json::object()));
  }
  // antipode inverse
  {
    if (!h.antipode_inverse()) {
      rep.add_case("antipode_inverse", Verdict::fail, json{{"clause", "antipode matrix is singular"}});
    } else {
      const Matrix id = in_field(identity(d), f);
      const bool ok = in_field(Matrix(h.antipode() * *h.antipode_inverse()), f) == id &&
                      in_field(Matrix(*h.antipode_inverse() * h.antipode()), f) == id;
      rep.add_case("antipode_inverse", ok ? Verdict::pass : Verdict::fail,
                   ok ? json::object() : json{{"clause", "S S^-1 = S^-1 S = id"}});
    }
  }
  return rep;
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<Index> group_generators(const std::vector<std::vector<int>>& t, int identity) {
  const auto n = static_cast<int>(t.size());
  std::set<int> span{identity};
  std::vector<Index> gens;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(span.begin(), span.end());
      for (int a : cur)
        for (int g : gens)
          if (span.insert(t[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)]).second) grew = true;
    }
  };
  for (int g = 0; g < n; ++g) {
    if (span.count(g)) continue;
    gens.push_back(g);
    close();
  }
  return gens;
}

}  // namespace

HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table, const FieldSpec& field, std::string name) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("not a group: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("not a group: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("not a group: product out of range");
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw std::invalid_argument("not a group: associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(c, a) == a && at(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) throw std::invalid_argument("not a group: no identity element");
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == e && at(b, a) == e) inv[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inv[static_cast<std::size_t>(a)] < 0) throw std::invalid_argument("not a group: element " + std::to_string(a) + " has no inverse");

  const Index d = n;
  std::vector<Scalar> mult(static_cast<std::size_t>(d * d * d), Scalar::zero(field));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>((a * d + b) * d + at(a, b))] = Scalar::one(field);
  Vector unit = typed_zeros(d, field);
  unit(e) = Scalar::one(field);
  Matrix comult = in_field(zeros(d * d, d), field);
  Matrix antipode = in_field(zeros(d, d), field);
  Vector counit(d);
  for (int g = 0; g < n; ++g) {
    comult(g * d + g, g) = Scalar::one(field);
    antipode(inv[static_cast<std::size_t>(g)], g) = Scalar::one(field);
    counit(g) = Scalar::one(field);
  }
  HopfAlgebra h(FiniteDimAlgebra(field, d, std::move(mult), unit), comult, counit, antipode, std::nullopt, std::move(name));
  h.set_generators(group_generators(table, e));
  return h;
}

HopfAlgebra sweedler_algebra(const FieldSpec& field) {
  if (field.characteristic() == 2) throw std::invalid_argument("Sweedler algebra needs characteristic other than 2");
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  const Index d = 4;
  std::vector<Scalar> mult(64, Scalar::zero(field));
  auto set = [&](Index i, Index j, Index k, long c) { mult[static_cast<std::size_t>((i * d + j) * d + k)] = Scalar::from_int(c, field); };
  for (Index i = 0; i < d; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  // x x, x gx, gx x, gx gx all vanish
  Vector unit = typed_zeros(d, field);
  unit(0) = Scalar::one(field);

  Matrix comult = in_field(zeros(d * d, d), field);
  auto dl = [&](Index col, Index a, Index b, long c) { comult(a * d + b, col) = Scalar::from_int(c, field); };
  dl(0, 0, 0, 1);
  dl(1, 1, 1, 1);
  dl(2, 2, 0, 1);  // x (x) 1
  dl(2, 1, 2, 1);  // g (x) x
  dl(3, 3, 1, 1);  // gx (x) g
  dl(3, 0, 3, 1);  // 1 (x) gx
  Vector counit(d);
  counit << Scalar::one(field), Scalar::one(field), Scalar::zero(field), Scalar::zero(field);
  Matrix s = in_field(zeros(d, d), field);
  s(0, 0) = Scalar::one(field);
  s(1, 1) = Scalar::one(field);
  s(3, 2) = Scalar::from_int(-1, field);  // S(x) = -gx
  s(2, 3) = Scalar::one(field);           // S(gx) = x
  HopfAlgebra h(FiniteDimAlgebra(field, d, std::move(mult), unit), comult, counit, s, std::nullopt, "sweedler");
  h.set_generators({1, 2});
  return h;
}

FieldSpec taft_default_field(int n) {
  if (n == 2) return FieldSpec::rationals();
  return FieldSpec::cyclotomic(static_cast<std::uint32_t>(n));
}

HopfAlgebra taft_algebra(int n, const FieldSpec& field, std::optional<Scalar> q_in) {
  if (n < 2) throw std::invalid_argument("Taft algebra needs n >= 2");
  Scalar q;
  if (q_in) {
    q = q_in->in_field(field);
    if (multiplicative_order(q, static_cast<std::uint32_t>(n)) != static_cast<std::uint32_t>(n))
      throw std::invalid_argument("q = " + q.to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
  } else if (!primitive_root_of_unity(static_cast<std::uint32_t>(n), field, q)) {
    throw std::invalid_argument("field " + field.to_string() + " has no primitive " + std::to_string(n) + "-th root of unity");
  }
  const Index d = static_cast<Index>(n) * n;
  auto idx = [n](Index i, Index j) { return j * n + i; };  // g^i x^j
  std::vector<Scalar> qpow(static_cast<std::size_t>(n));
  qpow[0] = Scalar::one(field);
  for (int k = 1; k < n; ++k) qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;

  std::vector<Scalar> mult(static_cast<std::size_t>(d * d * d), Scalar::zero(field));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) {
          if (b + e >= n) continue;
          // (g^a x^b)(g^c x^e) = q^{bc} g^{a+c} x^{b+e}
          mult[static_cast<std::size_t>((idx(a, b) * d + idx(c, e)) * d + idx((a + c) % n, b + e))] =
              qpow[static_cast<std::size_t>((b * c) % n)];
        }
  Vector unit = typed_zeros(d, field);
  unit(0) = Scalar::one(field);
  FiniteDimAlgebra alg(field, d, std::move(mult), unit);

  auto e1 = [&](Index i) { return alg.basis_vector(i); };
  const Vector g = e1(idx(1, 0));
  const Vector x = e1(idx(0, 1));
  const Vector one2 = kronecker(unit, unit);
  const Vector dg = kronecker(g, g);
  const Vector dx = Vector(kronecker(x, unit) + kronecker(g, x));

  Matrix comult(d * d, d);
  Matrix s(d, d);
  Vector counit(d);
  // S is an anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i.
  Vector sg = e1(idx(n - 1, 0));
  Vector sx = alg.multiply(sg, x);
  for (Index k = 0; k < d; ++k) sx(k) = -sx(k);
  Vector dgi = one2;
  Vector sgi = unit;
  for (Index i = 0; i < n; ++i) {
    Vector dgx = dgi;
    Vector sxj = unit;
    for (Index j = 0; j < n; ++j) {
      comult.col(idx(i, j)) = dgx;
      s.col(idx(i, j)) = alg.multiply(sxj, sgi);
      counit(idx(i, j)) = Scalar::from_int(j == 0 ? 1 : 0, field);
      dgx = alg.multiply_tensor(dgx, dx, 2);
      sxj = alg.multiply(sxj, sx);
    }
    dgi = alg.multiply_tensor(dgi, dg, 2);
    sgi = alg.multiply(sgi, sg);
  }
  HopfAlgebra h(std::move(alg), comult, counit, s, std::nullopt, "taft" + std::to_string(n));
  h.set_generators({idx(1, 0), idx(0, 1)});
  return h;
}

namespace {

using Table = std::vector<std::vector<int>>;

Table cyclic_table(int n) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

Table product_table(const Table& x, const Table& y) {
  const auto n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  Table t(static_cast<std::size_t>(n * m), std::vector<int>(static_cast<std::size_t>(n * m)));
  for (int a = 0; a < n * m; ++a)
    for (int b = 0; b < n * m; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          x[static_cast<std::size_t>(a / m)][static_cast<std::size_t>(b / m)] * m +
          y[static_cast<std::size_t>(a % m)][static_cast<std::size_t>(b % m)];
  return t;
}

Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

Table d4_table() {
  // r^i s^j at index j*4 + i, s r s = r^-1
  Table t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
      const int rot = (i + (j ? 4 - k : k)) % 4;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ((j + l) % 2) * 4 + rot;
    }
  return t;
}

Table q8_table() {
  // sign*4 + u with u in {1, i, j, k}
  const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Table t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      int neg = (sa + sb + (unit_sign[ua][ub] < 0 ? 1 : 0)) % 2;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = neg * 4 + unit_prod[ua][ub];
    }
  return t;
}

}  // namespace

std::vector<std::string> group_names() {
  return {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4", "C2xC2xC2", "S3", "D4", "Q8"};
}

std::vector<std::vector<int>> group_table(const std::string& name) {
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '1' && name[1] <= '8') return cyclic_table(name[1] - '0');
  if (name == "C2xC2") return product_table(cyclic_table(2), cyclic_table(2));
  if (name == "C2xC4") return product_table(cyclic_table(2), cyclic_table(4));
  if (name == "C2xC2xC2") return product_table(product_table(cyclic_table(2), cyclic_table(2)), cyclic_table(2));
  if (name == "S3") return s3_table();
  if (name == "D4") return d4_table();
  if (name == "Q8") return q8_table();
  throw std::invalid_argument("unknown group '" + name + "'");
}

HopfAlgebra builtin_hopf(const std::string& name, int n, std::optional<FieldSpec> field) {
  if (name == "sweedler") return sweedler_algebra(field.value_or(FieldSpec::rationals()));
  if (name == "taft") {
    if (n == 0) n = 3;
    return taft_algebra(n, field.value_or(taft_default_field(n)));
  }
  std::string g = name;
  if (g.rfind("k", 0) == 0) g = g.substr(1);
  if (g == "C" && n > 0) g = "C" + std::to_string(n);
  return group_algebra(group_table(g), field.value_or(FieldSpec::rationals()), "k" + g);
}

std::vector<std::pair<std::string, int>> builtin_hopf_list() {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& g : group_names()) out.emplace_back("k" + g, 0);
  out.emplace_back("sweedler", 0);
  for (int n = 2; n <= 4; ++n) out.emplace_back("taft", n);
  return out;
}

// ---------------------------------------------------------------- twists

TwistElement trivial_twist(const HopfAlgebra& h) {
  const Vector one2 = kronecker(h.algebra().unit(), h.algebra().unit());
  return TwistElement{one2, one2};
}

TwistElement coboundary_twist(const HopfAlgebra& h, const Vector& u) {
  const FiniteDimAlgebra& alg = h.algebra();
  const auto uinv = alg.inverse_element(u);
  if (!uinv) throw std::invalid_argument("coboundary_twist: u is not invertible");
  const Vector uu = kronecker(u, u);
  const Vector uinv_uinv = kronecker(*uinv, *uinv);
  const Vector j = alg.multiply_tensor(uu, h.comultiply(*uinv), 2);
  const Vector jinv = alg.multiply_tensor(h.comultiply(u), uinv_uinv, 2);
  return TwistElement{j, jinv};
}

VerificationReport validate_twist(const HopfAlgebra& h, const TwistElement& jt) {
  VerificationReport rep("twist_validity");
  const FiniteDimAlgebra& alg = h.algebra();
  const Index d = h.dim();
  const FieldSpec& f = h.field();
  if (jt.element.size() != d * d || jt.inverse.size() != d * d)
    throw std::invalid_argument("twist element and inverse must have length dim^2");
  const Vector j = in_field(Matrix(jt.element), f).col(0);
  const Vector ji = in_field(Matrix(jt.inverse), f).col(0);
  const Vector& unit = alg.unit();
  const Vector one2 = kronecker(unit, unit);

  {
    const bool right = alg.multiply_tensor(j, ji, 2) == one2;
    const bool left = alg.multiply_tensor(ji, j, 2) == one2;
    json data = json::object();
    if (!right) data["clause"] = "J J^-1 = 1 (x) 1";
    else if (!left) data["clause"] = "J^-1 J = 1 (x) 1";
    rep.add_case("invertibility", right && left ? Verdict::pass : Verdict::fail, data);
  }
  {
    Vector left = alg.zero_vector(), right = alg.zero_vector();
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b) {
        const Scalar& c = j(a * d + b);
        if (c.is_zero()) continue;
        left(b) += h.counit()(a) * c;
        right(a) += h.counit()(b) * c;
      }
    json data = json::object();
    if (left != unit) data["clause"] = "(eps x id)(J) = 1";
    else if (right != unit) data["clause"] = "(id x eps)(J) = 1";
    rep.add_case("counit_normalization", data.empty() ? Verdict::pass : Verdict::fail, data);
  }
  {
    // (J (x) 1)(Delta (x) id)(J) = (1 (x) J)(id (x) Delta)(J) in H^(x)3
    const Vector j1 = kronecker(j, unit);
    const Vector one_j = kronecker(unit, j);
    Vector dj_left = typed_zeros(d * d * d, f), dj_right = typed_zeros(d * d * d, f);
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b) {
        const Scalar& c = j(a * d + b);
        if (c.is_zero()) continue;
        for (const auto& [x, y, cx] : h.coproduct(a)) dj_left((x * d + y) * d + b) += c * cx;
        for (const auto& [x, y, cx] : h.coproduct(b)) dj_right((a * d + x) * d + y) += c * cx;
      }
    const Vector lhs = alg.multiply_tensor(j1, dj_left, 3);
    const Vector rhs = alg.multiply_tensor(one_j, dj_right, 3);
    json data = json::object();
    if (lhs != rhs) {
      Index first = 0;
      while (lhs(first) == rhs(first)) ++first;
      data["clause"] = "(J (x) 1)(Delta (x) id)(J) = (1 (x) J)(id (x) Delta)(J)";
      data["first_differing_coordinate"] = index_tuple({first / (d * d), (first / d) % d, first % d});
      data["lhs"] = lhs(first).to_string();
      data["rhs"] = rhs(first).to_string();
    }
    rep.add_case("cocycle", data.empty() ? Verdict::pass : Verdict::fail, data);
  }
  return rep;
}

HopfAlgebra drinfeld_twist(const HopfAlgebra& h, const TwistElement& jt) {
  const VerificationReport rep = validate_twist(h, jt);
  if (!rep.passed()) {
    std::string failed;
    for (const auto& c : rep.cases)
      if (c.verdict != Verdict::pass) failed += (failed.empty() ? "" : ", ") + c.id;
    throw InvalidTwist("invalid twist: " + failed + " violated", rep);
  }
  const FiniteDimAlgebra& alg = h.algebra();
  const Index d = h.dim();
  const FieldSpec& f = h.field();
  const Vector j = in_field(Matrix(jt.element), f).col(0);
  const Vector ji = in_field(Matrix(jt.inverse), f).col(0);

  Matrix comult(d * d, d);
  for (Index i = 0; i < d; ++i) comult.col(i) = alg.multiply_tensor(alg.multiply_tensor(j, h.comult().col(i), 2), ji, 2);

  // U = m(id (x) S)(J)
  Vector u = alg.zero_vector();
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const Scalar& c = j(a * d + b);
      if (c.is_zero()) continue;
      const Vector term = alg.multiply(alg.basis_vector(a), h.antipode().col(b));
      for (Index k = 0; k < d; ++k) u(k) += c * term(k);
    }
  const auto uinv = alg.inverse_element(u);
  if (!uinv) throw std::logic_error("drinfeld_twist: U is not invertible although J is a valid twist");
  Matrix s(d, d);
  for (Index i = 0; i < d; ++i) s.col(i) = alg.multiply(alg.multiply(u, h.antipode().col(i)), *uinv);

  HopfAlgebra out(alg, comult, h.counit(), s, std::nullopt, h.name().empty() ? "twisted" : h.name() + "^J");
  out.set_generators(h.generators());
  return out;
}

std::optional<TwistElement> non_cocycle_perturbation(const HopfAlgebra& h, std::uint64_t seed, int attempts) {
  const FiniteDimAlgebra& alg = h.algebra();
  const Index d = h.dim();
  const FieldSpec& f = h.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, d - 1);
  std::uniform_int_distribution<int> coef(1, 3);
  // ker eps is spanned by e_i - eps(e_i) 1.
  auto kernel_element = [&]() {
    Vector v = alg.basis_vector(pick(rng));
    Scalar e = Scalar::zero(f);
    for (Index k = 0; k < d; ++k) e += h.counit()(k) * v(k);
    for (Index k = 0; k < d; ++k) v(k) -= e * alg.unit()(k);
    return v;
  };
  const Vector one2 = kronecker(alg.unit(), alg.unit());
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const Vector a = kernel_element();
    const Vector b = kernel_element();
    bool zero = true;
    for (Index k = 0; k < d && zero; ++k) zero = a(k).is_zero();
    if (zero) continue;
    const Scalar t = Scalar::from_int(coef(rng) * (rng() % 2 ? 1 : -1), f);
    Vector j = one2;
    const Vector ab = kronecker(a, b);
    for (Index k = 0; k < d * d; ++k) j(k) += t * ab(k);
    // Invert J through its left multiplication on H (x) H.
    Matrix lm(d * d, d * d);
    for (Index c = 0; c < d * d; ++c) {
      Vector e = typed_zeros(d * d, f);
      e(c) = Scalar::one(f);
      lm.col(c) = alg.multiply_tensor(j, e, 2);
    }
    const auto inv = solve(lm, one2);
    if (!inv) continue;
    TwistElement cand{j, in_field(Matrix(*inv), f).col(0)};
    const VerificationReport rep = validate_twist(h, cand);
    const CaseRecord* co = rep.find_case("cocycle");
    if (rep.find_case("invertibility")->verdict == Verdict::pass &&
        rep.find_case("counit_normalization")->verdict == Verdict::pass && co && co->verdict == Verdict::fail)
      return cand;
  }
  return std::nullopt;
}

}  // namespace tenscat
