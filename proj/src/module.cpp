#include "tenscat/module.hpp"

#include <stdexcept>

namespace tenscat {

namespace {

LinRep one_vertex(const FieldSpec& field, Index dim, std::vector<Matrix> ops) {
  LinRep r;
  r.field = field;
  r.dims = {dim};
  r.shapes.assign(ops.size(), OpShape{0, 0});
  r.ops = std::move(ops);
  return r;
}

Vector delta_vector(Index n) {
  Vector v = Vector::Zero(n * n);
  for (Index a = 0; a < n; ++a) v(a * n + a) = Scalar(1);
  return v;
}

// Action of sum_k t(k, i) e_k, transposed: the dual action through T.
std::vector<Matrix> dual_action(const HModule& m, const Matrix& t) {
  const Index d = m.algebra()->dim();
  std::vector<Matrix> out;
  for (Index i = 0; i < d; ++i) {
    Matrix acc = zeros(m.dim(), m.dim());
    for (Index k = 0; k < d; ++k)
      if (!t(k, i).is_zero()) acc += t(k, i) * m.action(k);
    out.push_back(in_field(Matrix(acc.transpose()), m.field()));
  }
  return out;
}

}  // namespace

std::optional<std::string> module_law_violation(const HopfAlgebra& h, const std::vector<Matrix>& action) {
  const Index d = h.dim();
  if (static_cast<Index>(action.size()) != d) return "expected one action matrix per basis element";
  const Index m = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m) return "action matrices must be square of one size";
  Matrix unit = zeros(m, m);
  for (Index k = 0; k < d; ++k)
    if (!h.algebra().unit()(k).is_zero()) unit += h.algebra().unit()(k) * action[static_cast<std::size_t>(k)];
  if (!is_zero(Matrix(unit - identity(m)))) return "the unit does not act as the identity";
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Matrix rhs = zeros(m, m);
      for (const auto& [k, c] : h.algebra().product(i, j)) rhs += c * action[static_cast<std::size_t>(k)];
      const Matrix lhs = mul(action[static_cast<std::size_t>(j)], action[static_cast<std::size_t>(i)]);
      if (!is_zero(Matrix(lhs - rhs)))
        return "acting by e_" + std::to_string(i) + " then e_" + std::to_string(j) + " differs from e_" +
               std::to_string(i) + "e_" + std::to_string(j);
    }
  return std::nullopt;
}

HModule::HModule(HopfPtr algebra, std::vector<Matrix> action) {
  if (!algebra) throw std::invalid_argument("module needs an algebra");
  if (auto v = module_law_violation(*algebra, action)) throw std::invalid_argument("not a right module: " + *v);
  const Index m = action.empty() ? 0 : action.front().rows();
  for (auto& a : action) a = in_field(a, algebra->field());
  algebra_ = std::move(algebra);
  rep_ = std::make_shared<const LinRep>(one_vertex(algebra_->field(), m, std::move(action)));
}

HModule HModule::unchecked(HopfPtr algebra, Index dim, std::vector<Matrix> action) {
  HModule out;
  const FieldSpec f = algebra->field();
  out.algebra_ = std::move(algebra);
  out.rep_ = std::make_shared<const LinRep>(one_vertex(f, dim, std::move(action)));
  return out;
}

HModule HModule::with_rep(LinRep rep) const {
  HModule out;
  out.algebra_ = algebra_;
  out.rep_ = std::make_shared<const LinRep>(std::move(rep));
  return out;
}

std::vector<std::size_t> HModule::constraint_ops() const {
  std::vector<std::size_t> out;
  for (Index g : algebra_->generators()) out.push_back(static_cast<std::size_t>(g));
  return out;
}

bool operator==(const HModule& a, const HModule& b) {
  if (!same_algebra(a, b) || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.actions().size(); ++i)
    if (!(a.actions()[i] == b.actions()[i])) return false;
  return true;
}

bool same_algebra(const HModule& a, const HModule& b) {
  return a.algebra() == b.algebra() || (a.algebra() && b.algebra() && *a.algebra() == *b.algebra());
}

void require_same_algebra(const HModule& a, const HModule& b) {
  if (!same_algebra(a, b)) throw std::invalid_argument("modules are over different algebras");
}

ModuleHom ModuleHom::make(HModule source, HModule target, Matrix matrix) {
  require_same_algebra(source, target);
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw std::invalid_argument("module map has the wrong shape");
  matrix = in_field(matrix, source.field());
  if (auto k = first_non_intertwined(source.rep(), target.rep(), {matrix}))
    throw std::invalid_argument("matrix does not intertwine the action of e_" + std::to_string(*k));
  return ModuleHom{std::move(source), std::move(target), std::move(matrix)};
}

HModule trivial_module(const HopfPtr& h) {
  std::vector<Matrix> act;
  for (Index i = 0; i < h->dim(); ++i) {
    Matrix m(1, 1);
    m(0, 0) = h->counit()(i);
    act.push_back(m);
  }
  return HModule::unchecked(h, 1, std::move(act));
}

HModule regular_module(const HopfPtr& h) {
  const Index d = h->dim();
  std::vector<Matrix> act;
  for (Index i = 0; i < d; ++i) {
    Matrix m = Matrix::Constant(d, d, Scalar::zero(h->field()));
    for (Index j = 0; j < d; ++j)
      for (const auto& [k, c] : h->algebra().product(j, i)) m(k, j) = c;
    act.push_back(std::move(m));
  }
  return HModule::unchecked(h, d, std::move(act));
}

HModule one_dim_module(const HopfPtr& h, const std::vector<Scalar>& chi) {
  std::vector<Matrix> act;
  for (const auto& c : chi) {
    Matrix m(1, 1);
    m(0, 0) = c;
    act.push_back(m);
  }
  return HModule(h, std::move(act));
}

HModule base_change(const HModule& m, const Matrix& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("base change needs an invertible matrix");
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(mul(p, mul(a, *pinv)));
  return HModule::unchecked(m.algebra(), m.dim(), std::move(act));
}

SubModule submodule(const HModule& m, const Matrix& basis) {
  SubRep s = sub_rep(m.rep(), {basis});
  HModule sub = m.with_rep(std::move(s.rep));
  return SubModule{sub, ModuleHom{sub, m, s.map.front()}};
}

QuotientModule quotient_module(const HModule& m, const Matrix& basis) {
  SubRep s = quotient_rep(m.rep(), {basis});
  HModule q = m.with_rep(std::move(s.rep));
  return QuotientModule{q, ModuleHom{m, q, s.map.front()}};
}

SubModule cyclic_submodule(const HModule& m, const Vector& v) {
  Matrix span(m.dim(), m.algebra()->dim());
  for (Index i = 0; i < m.algebra()->dim(); ++i) span.col(i) = mul(m.action(i), Matrix(v));
  return submodule(m, column_space(span));
}

HModule direct_sum(const std::vector<HModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum needs at least one summand");
  std::vector<const LinRep*> reps;
  for (const auto& p : parts) {
    require_same_algebra(parts.front(), p);
    reps.push_back(&p.rep());
  }
  return parts.front().with_rep(direct_sum_rep(reps));
}

namespace {

// acc += c * kronecker(x, y), touching only nonzero products.
void add_kronecker(Matrix& acc, const Scalar& c, const Matrix& x, const Matrix& y) {
  const Scalar zero(0);
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) {
      if (x(i, j) == zero) continue;
      const Scalar cx = c * x(i, j);
      for (Index k = 0; k < y.rows(); ++k)
        for (Index l = 0; l < y.cols(); ++l)
          if (y(k, l) != zero) acc(i * y.rows() + k, j * y.cols() + l) += cx * y(k, l);
    }
}

}  // namespace

HModule tensor_module(const HModule& m, const HModule& n) {
  require_same_algebra(m, n);
  const HopfAlgebra& h = *m.algebra();
  const Index dim = m.dim() * n.dim();
  std::vector<Matrix> act;
  act.reserve(static_cast<std::size_t>(h.dim()));
  for (Index i = 0; i < h.dim(); ++i) {
    Matrix acc = zeros(dim, dim);
    for (const auto& [a, b, c] : h.coproduct(i)) add_kronecker(acc, c, m.action(a), n.action(b));
    act.push_back(std::move(acc));
  }
  return HModule::unchecked(m.algebra(), dim, std::move(act));
}

ModuleHom tensor_hom(const ModuleHom& f, const ModuleHom& g) {
  return ModuleHom{tensor_module(f.source, g.source), tensor_module(f.target, g.target), kronecker(f.matrix, g.matrix)};
}

ModuleHom identity_hom(const HModule& m) { return ModuleHom{m, m, identity(m.dim())}; }

ModuleHom zero_hom(const HModule& a, const HModule& b) { return ModuleHom{a, b, zeros(b.dim(), a.dim())}; }

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  if (g.source.dim() != f.target.dim()) throw std::invalid_argument("compose: middle modules differ");
  return ModuleHom{f.source, g.target, mul(g.matrix, f.matrix)};
}

DualData left_dual_module(const HModule& m) {
  const auto& sinv = m.algebra()->antipode_inverse();
  if (!sinv) throw std::invalid_argument("left dual needs an invertible antipode");
  const HModule dual = HModule::unchecked(m.algebra(), m.dim(), dual_action(m, *sinv));
  const HModule unit = trivial_module(m.algebra());
  const Vector delta = delta_vector(m.dim());
  return DualData{dual, ModuleHom{tensor_module(dual, m), unit, Matrix(delta.transpose())},
                  ModuleHom{unit, tensor_module(m, dual), Matrix(delta)}};
}

DualData right_dual_module(const HModule& m) {
  if (!m.algebra()->antipode_inverse()) throw std::invalid_argument("right dual: antipode is singular");
  const HModule dual = HModule::unchecked(m.algebra(), m.dim(), dual_action(m, m.algebra()->antipode()));
  const HModule unit = trivial_module(m.algebra());
  const Vector delta = delta_vector(m.dim());
  return DualData{dual, ModuleHom{tensor_module(m, dual), unit, Matrix(delta.transpose())},
                  ModuleHom{unit, tensor_module(dual, m), Matrix(delta)}};
}

VerificationReport check_duality(const HModule& m, const DualData& d, bool left) {
  VerificationReport r;
  r.check = left ? "left_dual" : "right_dual";
  const Index n = m.dim();
  const Matrix in = identity(n);
  if (auto law = module_law_violation(*m.algebra(), d.dual.actions()))
    r.add_case("dual_is_module", Verdict::fail, json{{"violation", *law}});
  else
    r.add_case("dual_is_module", Verdict::pass);
  auto map_case = [&](const std::string& id, const ModuleHom& f) {
    const auto k = first_non_intertwined(f.source.rep(), f.target.rep(), {f.matrix});
    if (k)
      r.add_case(id, Verdict::fail, json{{"operator", *k}});
    else
      r.add_case(id, Verdict::pass);
  };
  map_case("ev_is_module_map", d.ev);
  map_case("coev_is_module_map", d.coev);
  const Matrix& ev = d.ev.matrix;
  const Matrix& coev = d.coev.matrix;
  // Left: (id (x) ev)(coev (x) id) on M and (ev (x) id)(id (x) coev) on M*.
  // Right: (ev (x) id)(id (x) coev) on M and (id (x) ev)(coev (x) id) on *M.
  const Matrix snake_a = mul(kronecker(in, ev), kronecker(coev, in));
  const Matrix snake_b = mul(kronecker(ev, in), kronecker(in, coev));
  const Matrix& on_object = left ? snake_a : snake_b;
  const Matrix& on_dual = left ? snake_b : snake_a;
  auto id_case = [&](const std::string& id, const Matrix& z) {
    if (is_zero(Matrix(z - in)))
      r.add_case(id, Verdict::pass);
    else
      r.add_case(id, Verdict::fail, json{{"composite", matrix_to_json(z)}});
  };
  id_case("zigzag_object", on_object);
  id_case("zigzag_dual", on_dual);
  return r;
}

std::vector<ModuleHom> hom_space(const HModule& m, const HModule& n) {
  require_same_algebra(m, n);
  std::vector<ModuleHom> out;
  for (auto& c : hom_basis(m.rep(), n.rep(), m.constraint_ops())) out.push_back(ModuleHom{m, n, std::move(c.front())});
  return out;
}

ModuleIso is_isomorphic(const HModule& m, const HModule& n) {
  require_same_algebra(m, n);
  RepIso r = find_isomorphism(m.rep(), n.rep(), m.constraint_ops());
  ModuleIso out{r.verdict, std::nullopt, r.reason};
  if (r.witness) out.witness = ModuleHom{m, n, r.witness->front()};
  return out;
}

HModule sign_module(const HopfPtr& kc2) {
  if (kc2->dim() != 2) throw std::invalid_argument("sign module needs the group algebra of C2");
  return one_dim_module(kc2, {Scalar::one(kc2->field()), Scalar::from_int(-1, kc2->field())});
}

HModule sweedler_character(const HopfPtr& sweedler) {
  const FieldSpec& f = sweedler->field();
  return one_dim_module(sweedler,
                        {Scalar::one(f), Scalar::from_int(-1, f), Scalar::zero(f), Scalar::zero(f)});
}

HModule sweedler_projective(const HopfPtr& sweedler) {
  const FieldSpec& f = sweedler->field();
  Vector e(4);
  e << Scalar::from_rational(mpq_class(1, 2), f), Scalar::from_rational(mpq_class(1, 2), f), Scalar::zero(f),
      Scalar::zero(f);
  return cyclic_submodule(regular_module(sweedler), e).module;
}

}  // namespace tenscat
