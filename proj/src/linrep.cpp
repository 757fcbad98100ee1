#include "tenscat/linrep.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace tenscat {

Index LinRep::total_dim() const {
  Index n = 0;
  for (Index d : dims) n += d;
  return n;
}

void LinRep::validate() const {
  if (shapes.size() != ops.size()) throw std::invalid_argument("operator count does not match shape count");
  const auto nv = static_cast<int>(dims.size());
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const OpShape& s = shapes[k];
    if (s.src < 0 || s.src >= nv || s.tgt < 0 || s.tgt >= nv)
      throw std::invalid_argument("operator " + std::to_string(k) + " refers to a missing vertex");
    if (ops[k].rows() != dims[static_cast<std::size_t>(s.tgt)] || ops[k].cols() != dims[static_cast<std::size_t>(s.src)])
      throw std::invalid_argument("operator " + std::to_string(k) + " has the wrong shape");
  }
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::iso:
      return "iso";
    case IsoVerdict::not_iso:
      return "not_iso";
    case IsoVerdict::undetermined:
      break;
  }
  return "undetermined";
}

Components identity_components(const LinRep& a) {
  Components out;
  for (Index d : a.dims) out.push_back(identity(d));
  return out;
}

Components zero_components(const LinRep& a, const LinRep& b) {
  if (a.dims.size() != b.dims.size()) throw std::invalid_argument("representations have different vertex sets");
  Components out;
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.push_back(zeros(b.dims[v], a.dims[v]));
  return out;
}

Components compose(const Components& g, const Components& f) {
  if (g.size() != f.size()) throw std::invalid_argument("compose: vertex counts differ");
  Components out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(mul(g[v], f[v]));
  return out;
}

Components add(const Components& f, const Components& g) {
  if (g.size() != f.size()) throw std::invalid_argument("add: vertex counts differ");
  Components out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].rows() != g[v].rows() || f[v].cols() != g[v].cols()) throw std::invalid_argument("add: shapes differ");
    out.push_back(f[v] + g[v]);
  }
  return out;
}

Components negate(const Components& f) {
  Components out;
  for (const auto& m : f) out.push_back(-m);
  return out;
}

bool is_zero(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Matrix& m) { return is_zero(m); });
}

bool equal(const Components& f, const Components& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v].rows() != g[v].rows() || f[v].cols() != g[v].cols()) return false;
    if (!is_zero(Matrix(f[v] - g[v]))) return false;
  }
  return true;
}

std::optional<std::size_t> first_non_intertwined(const LinRep& a, const LinRep& b, const Components& f,
                                                 const std::vector<std::size_t>* only) {
  auto check = [&](std::size_t k) {
    const OpShape& s = a.shapes[k];
    const Matrix lhs = mul(f[static_cast<std::size_t>(s.tgt)], a.ops[k]);
    const Matrix rhs = mul(b.ops[k], f[static_cast<std::size_t>(s.src)]);
    return is_zero(Matrix(lhs - rhs));
  };
  if (only) {
    for (std::size_t k : *only)
      if (!check(k)) return k;
    return std::nullopt;
  }
  for (std::size_t k = 0; k < a.ops.size(); ++k)
    if (!check(k)) return k;
  return std::nullopt;
}

SubRep sub_rep(const LinRep& a, const Components& basis) {
  LinRep r{a.field, {}, a.shapes, {}};
  for (const auto& b : basis) r.dims.push_back(b.cols());
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    const OpShape& s = a.shapes[k];
    const Matrix& bs = basis[static_cast<std::size_t>(s.src)];
    const Matrix& bt = basis[static_cast<std::size_t>(s.tgt)];
    const auto x = solve(bt, mul(a.ops[k], bs));
    if (!x) throw std::invalid_argument("subspace is not invariant under operator " + std::to_string(k));
    r.ops.push_back(*x);
  }
  return SubRep{std::move(r), basis};
}

SubRep quotient_rep(const LinRep& a, const Components& basis) {
  LinRep r{a.field, {}, a.shapes, {}};
  Components proj, section;
  for (const auto& c : basis) {
    const Matrix q = complement_basis(c);
    const auto t_inv = inverse(hcat(c, q));
    if (!t_inv) throw std::invalid_argument("quotient: spanning columns are dependent");
    proj.push_back(t_inv->bottomRows(q.cols()));
    section.push_back(q);
    r.dims.push_back(q.cols());
  }
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    const OpShape& s = a.shapes[k];
    r.ops.push_back(mul(proj[static_cast<std::size_t>(s.tgt)], mul(a.ops[k], section[static_cast<std::size_t>(s.src)])));
  }
  return SubRep{std::move(r), std::move(proj)};
}

SubRep kernel_rep(const LinRep& a, const Components& f) {
  Components basis;
  for (const auto& m : f) basis.push_back(kernel_matrix(m));
  return sub_rep(a, basis);
}

SubRep cokernel_rep(const LinRep& b, const Components& f) {
  Components basis;
  for (const auto& m : f) basis.push_back(column_space(m));
  return quotient_rep(b, basis);
}

Components lift_components(const Components& mono, const Components& f) {
  Components out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    const auto x = solve(mono[v], f[v]);
    if (!x) throw std::invalid_argument("lift: map does not factor through the monomorphism");
    out.push_back(*x);
  }
  return out;
}

Components descend_components(const Components& epi, const Components& f) {
  Components out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    const auto x = solve(Matrix(epi[v].transpose()), Matrix(f[v].transpose()));
    if (!x) throw std::invalid_argument("descend: map does not vanish on the kernel");
    out.push_back(x->transpose());
  }
  return out;
}

bool is_injective(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Matrix& m) { return rank(m) == m.cols(); });
}

bool is_surjective(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Matrix& m) { return rank(m) == m.rows(); });
}

bool is_invertible(const Components& f) {
  return std::all_of(f.begin(), f.end(), [](const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); });
}

LinRep direct_sum_rep(const std::vector<const LinRep*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no summands needs a shape");
  const LinRep& first = *parts.front();
  LinRep r{first.field, std::vector<Index>(first.dims.size(), 0), first.shapes, {}};
  for (const LinRep* p : parts) {
    if (p->dims.size() != first.dims.size() || !(p->shapes == first.shapes))
      throw std::invalid_argument("direct sum: summands have different shapes");
    for (std::size_t v = 0; v < r.dims.size(); ++v) r.dims[v] += p->dims[v];
  }
  for (std::size_t k = 0; k < first.ops.size(); ++k) {
    const OpShape& s = first.shapes[k];
    Matrix m = zeros(r.dims[static_cast<std::size_t>(s.tgt)], r.dims[static_cast<std::size_t>(s.src)]);
    Index ro = 0, co = 0;
    for (const LinRep* p : parts) {
      const Matrix& op = p->ops[k];
      m.block(ro, co, op.rows(), op.cols()) = op;
      ro += op.rows();
      co += op.cols();
    }
    r.ops.push_back(std::move(m));
  }
  return r;
}

Components assemble_components(const std::vector<const LinRep*>& sources, const std::vector<const LinRep*>& targets,
                               const std::vector<std::vector<const Components*>>& blocks) {
  const LinRep* shape = !sources.empty() ? sources.front() : (!targets.empty() ? targets.front() : nullptr);
  if (!shape) return {};
  const std::size_t nv = shape->dims.size();
  Components out;
  for (std::size_t v = 0; v < nv; ++v) {
    Index rows = 0, cols = 0;
    for (const LinRep* t : targets) rows += t->dims[v];
    for (const LinRep* s : sources) cols += s->dims[v];
    Matrix m = zeros(rows, cols);
    Index ro = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Index co = 0;
      for (std::size_t j = 0; j < sources.size(); ++j) {
        const Components* b = blocks[i][j];
        if (b) m.block(ro, co, targets[i]->dims[v], sources[j]->dims[v]) = (*b)[v];
        co += sources[j]->dims[v];
      }
      ro += targets[i]->dims[v];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Components> hom_basis(const LinRep& a, const LinRep& b, const std::vector<std::size_t>& constraint_ops) {
  if (a.dims.size() != b.dims.size() || !(a.shapes == b.shapes))
    throw std::invalid_argument("hom space: representations have different shapes");
  const std::size_t nv = a.dims.size();
  // Unknown T_v is b.dims[v] x a.dims[v], stored row-major after offset[v].
  std::vector<Index> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
  const Index unknowns = offset[nv];
  auto var = [&](std::size_t v, Index r, Index c) { return offset[v] + r * a.dims[v] + c; };

  Index eqs = 0;
  for (std::size_t k : constraint_ops) {
    const OpShape& s = a.shapes[k];
    eqs += b.dims[static_cast<std::size_t>(s.tgt)] * a.dims[static_cast<std::size_t>(s.src)];
  }
  Matrix sys = zeros(eqs, unknowns);
  Index row = 0;
  for (std::size_t k : constraint_ops) {
    const auto s = static_cast<std::size_t>(a.shapes[k].src);
    const auto t = static_cast<std::size_t>(a.shapes[k].tgt);
    const Matrix& oa = a.ops[k];
    const Matrix& ob = b.ops[k];
    // (T_t oa - ob T_s)(i, j) = 0
    for (Index i = 0; i < b.dims[t]; ++i)
      for (Index j = 0; j < a.dims[s]; ++j, ++row) {
        for (Index l = 0; l < a.dims[t]; ++l)
          if (!oa(l, j).is_zero()) sys(row, var(t, i, l)) += oa(l, j);
        for (Index l = 0; l < b.dims[s]; ++l)
          if (!ob(i, l).is_zero()) sys(row, var(s, l, j)) -= ob(i, l);
      }
  }
  const Matrix ker = eqs > 0 ? kernel_matrix(sys) : identity(unknowns);
  std::vector<Components> out;
  for (Index c = 0; c < ker.cols(); ++c) {
    Components comp;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix m(b.dims[v], a.dims[v]);
      for (Index r = 0; r < b.dims[v]; ++r)
        for (Index q = 0; q < a.dims[v]; ++q) m(r, q) = ker(var(v, r, q), c);
      comp.push_back(in_field(m, a.field));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

Components combination(const std::vector<Components>& basis, const std::vector<Scalar>& coeffs) {
  Components out = basis.front();
  for (auto& m : out) m = zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += coeffs[i] * basis[i][v];
  }
  return out;
}

}  // namespace

RepIso find_isomorphism(const LinRep& a, const LinRep& b, const std::vector<std::size_t>& constraint_ops) {
  if (!(a.field == b.field)) throw FieldMismatch("representations are over different fields");
  if (a.dims != b.dims) return {IsoVerdict::not_iso, std::nullopt, "dimension vectors differ"};
  if (a.total_dim() == 0) return {IsoVerdict::iso, identity_components(a), "both zero"};
  const auto basis = hom_basis(a, b, constraint_ops);
  if (basis.empty()) return {IsoVerdict::not_iso, std::nullopt, "hom space is zero"};
  // An isomorphism a -> b identifies Hom(a, b) with End(a).
  const auto end_dim = hom_basis(a, a, constraint_ops).size();
  if (end_dim != basis.size()) return {IsoVerdict::not_iso, std::nullopt, "dim Hom(a,b) differs from dim End(a)"};
  if (basis.size() == 1) {
    if (is_invertible(basis.front())) return {IsoVerdict::iso, basis.front(), "one-dimensional hom space"};
    return {IsoVerdict::not_iso, std::nullopt, "hom space spanned by a singular map"};
  }
  const std::size_t k = basis.size();
  if (k <= 4) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> c(k, -3);
    while (true) {
      if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) candidates.push_back(c);
      std::size_t i = 0;
      while (i < k && c[i] == 3) c[i++] = -3;
      if (i == k) break;
      ++c[i];
    }
    auto l1 = [](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += std::abs(x);
      return s;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const std::vector<int>& x, const std::vector<int>& y) { return l1(x) < l1(y); });
    for (const auto& cand : candidates) {
      std::vector<Scalar> coeffs;
      for (int x : cand) coeffs.push_back(Scalar::from_int(x, a.field));
      Components f = combination(basis, coeffs);
      if (is_invertible(f)) return {IsoVerdict::iso, std::move(f), "coefficient sweep"};
    }
    return {IsoVerdict::undetermined, std::nullopt, "coefficient sweep found no invertible intertwiner"};
  }
  std::mt19937_64 rng(0x7e5ca7ULL);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 9);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < k; ++i) {
      const long n = num(rng);
      long d = den(rng);
      if (a.field.kind == FieldKind::prime && d % static_cast<long>(a.field.param) == 0) d = 1;
      coeffs.push_back(Scalar::from_rational(mpq_class(n, d), a.field));
    }
    Components f = combination(basis, coeffs);
    if (is_invertible(f)) return {IsoVerdict::iso, std::move(f), "random combination"};
  }
  return {IsoVerdict::undetermined, std::nullopt, "32 random combinations were all singular"};
}

}  // namespace tenscat
