#include "tenscat/quiver.hpp"

#include <stdexcept>

namespace tenscat {

bool Quiver::is_acyclic() const {
  // Kahn's algorithm: acyclic iff every vertex gets removed.
  std::vector<int> indeg(static_cast<std::size_t>(vertices), 0);
  for (const auto& [s, t] : arrows) ++indeg[static_cast<std::size_t>(t)];
  std::vector<int> ready;
  for (int v = 0; v < vertices; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& [s, t] : arrows)
      if (s == v && --indeg[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
  }
  return removed == vertices;
}

Quiver Quiver::a2() { return Quiver{2, {{0, 1}}}; }

QuiverRep::QuiverRep(Quiver quiver, FieldSpec field, std::vector<Index> dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)) {
  if (static_cast<int>(dims.size()) != quiver_.vertices)
    throw std::invalid_argument("representation needs one dimension per vertex");
  if (maps.size() != quiver_.arrows.size()) throw std::invalid_argument("representation needs one map per arrow");
  LinRep r;
  r.field = field;
  r.dims = std::move(dims);
  for (const auto& [s, t] : quiver_.arrows) r.shapes.push_back(OpShape{s, t});
  for (auto& m : maps) r.ops.push_back(in_field(m, field));
  r.validate();
  rep_ = std::make_shared<const LinRep>(std::move(r));
}

QuiverRep QuiverRep::with_rep(LinRep rep) const {
  QuiverRep out;
  out.quiver_ = quiver_;
  out.rep_ = std::make_shared<const LinRep>(std::move(rep));
  return out;
}

std::vector<std::size_t> QuiverRep::constraint_ops() const {
  std::vector<std::size_t> out(quiver_.arrows.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
  return out;
}

bool operator==(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.quiver() == b.quiver()) || !(a.field() == b.field()) || a.dims() != b.dims()) return false;
  for (std::size_t k = 0; k < a.rep().ops.size(); ++k)
    if (!(a.map(k) == b.map(k))) return false;
  return true;
}

QuiverHom QuiverHom::make(QuiverRep source, QuiverRep target, Components maps) {
  require_same_quiver(source, target);
  if (maps.size() != source.dims().size()) throw std::invalid_argument("quiver map needs one matrix per vertex");
  for (std::size_t v = 0; v < maps.size(); ++v) {
    if (maps[v].rows() != target.dims()[v] || maps[v].cols() != source.dims()[v])
      throw std::invalid_argument("quiver map has the wrong shape at vertex " + std::to_string(v));
    maps[v] = in_field(maps[v], source.field());
  }
  if (auto k = first_non_intertwined(source.rep(), target.rep(), maps))
    throw std::invalid_argument("quiver map does not commute with arrow " + std::to_string(*k));
  return QuiverHom{std::move(source), std::move(target), std::move(maps)};
}

void require_same_quiver(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.quiver() == b.quiver())) throw std::invalid_argument("representations of different quivers");
  if (!(a.field() == b.field())) throw FieldMismatch("representations over different fields");
}

QuiverRep unit_rep(const Quiver& q, const FieldSpec& field) {
  return QuiverRep(q, field, std::vector<Index>(static_cast<std::size_t>(q.vertices), 1),
                   std::vector<Matrix>(q.arrows.size(), identity(1)));
}

QuiverRep zero_rep(const Quiver& q, const FieldSpec& field) {
  return QuiverRep(q, field, std::vector<Index>(static_cast<std::size_t>(q.vertices), 0),
                   std::vector<Matrix>(q.arrows.size(), zeros(0, 0)));
}

QuiverRep tensor_rep(const QuiverRep& v, const QuiverRep& w) {
  require_same_quiver(v, w);
  LinRep r = v.rep();
  for (std::size_t a = 0; a < r.dims.size(); ++a) r.dims[a] = v.dims()[a] * w.dims()[a];
  for (std::size_t k = 0; k < r.ops.size(); ++k) r.ops[k] = kronecker(v.map(k), w.map(k));
  return v.with_rep(std::move(r));
}

QuiverHom tensor_hom(const QuiverHom& f, const QuiverHom& g) {
  Components maps;
  for (std::size_t v = 0; v < f.maps.size(); ++v) maps.push_back(kronecker(f.maps[v], g.maps[v]));
  return QuiverHom{tensor_rep(f.source, g.source), tensor_rep(f.target, g.target), std::move(maps)};
}

QuiverRep direct_sum(const std::vector<QuiverRep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum needs at least one summand");
  std::vector<const LinRep*> reps;
  for (const auto& p : parts) {
    require_same_quiver(parts.front(), p);
    reps.push_back(&p.rep());
  }
  return parts.front().with_rep(direct_sum_rep(reps));
}

QuiverHom identity_hom(const QuiverRep& v) { return QuiverHom{v, v, identity_components(v.rep())}; }

QuiverHom compose(const QuiverHom& g, const QuiverHom& f) {
  return QuiverHom{f.source, g.target, tenscat::compose(g.maps, f.maps)};
}

std::vector<QuiverHom> hom_space(const QuiverRep& v, const QuiverRep& w) {
  require_same_quiver(v, w);
  std::vector<QuiverHom> out;
  for (auto& c : hom_basis(v.rep(), w.rep(), v.constraint_ops())) out.push_back(QuiverHom{v, w, std::move(c)});
  return out;
}

QuiverIso is_isomorphic(const QuiverRep& v, const QuiverRep& w) {
  require_same_quiver(v, w);
  RepIso r = find_isomorphism(v.rep(), w.rep(), v.constraint_ops());
  QuiverIso out{r.verdict, std::nullopt, r.reason};
  if (r.witness) out.witness = QuiverHom{v, w, std::move(*r.witness)};
  return out;
}

VerificationReport rep_tensor_reduced_check(const std::vector<QuiverRep>& sample) {
  VerificationReport r("rep_tensor_reduced");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const QuiverRep& v = sample[i];
    const std::string id = "sample_" + std::to_string(i);
    json dims = v.dims();
    if (v.is_zero()) {
      r.add_case(id, Verdict::pass, json{{"dims", dims}, {"excluded", "zero representation"}});
      continue;
    }
    const QuiverRep sq = tensor_rep(v, v);
    r.add_case(id, sq.is_zero() ? Verdict::fail : Verdict::pass, json{{"dims", dims}, {"square_dims", sq.dims()}});
  }
  return r;
}

QuiverRep a2_s1(const FieldSpec& field) { return a2_object({1, 0, 0}, field); }
QuiverRep a2_s2(const FieldSpec& field) { return a2_object({0, 1, 0}, field); }
QuiverRep a2_p2(const FieldSpec& field) { return a2_object({0, 0, 1}, field); }

QuiverHom a2_unit_socle(const FieldSpec& field) {
  const QuiverRep unit = unit_rep(Quiver::a2(), field);
  return QuiverHom::make(a2_s2(field), unit, {zeros(1, 0), identity(1)});
}

QuiverRep a2_object(A2Multiplicities m, const FieldSpec& field) {
  if (m.a < 0 || m.b < 0 || m.c < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  Matrix arrow = zeros(m.b + m.c, m.a + m.c);
  for (int i = 0; i < m.c; ++i) arrow(m.b + i, m.a + i) = Scalar(1);
  return QuiverRep(Quiver::a2(), field, {m.a + m.c, m.b + m.c}, {arrow});
}

QuiverRep a2_functor_object(A2Multiplicities m, const FieldSpec& field) { return a2_object({0, m.c, 0}, field); }

QuiverHom a2_functor_hom(A2Multiplicities src, A2Multiplicities tgt, const QuiverHom& f) {
  const Matrix block = f.maps[1].bottomRightCorner(tgt.c, src.c);
  return QuiverHom{a2_functor_object(src, f.source.field()), a2_functor_object(tgt, f.source.field()),
                   {zeros(0, 0), block}};
}

std::optional<QuiverHom> a2_functor_hom_literal(A2Multiplicities src, A2Multiplicities tgt, const QuiverHom& f) {
  if (src.b != src.c || tgt.b != tgt.c) return std::nullopt;
  const Matrix block = f.maps[1].topLeftCorner(tgt.b, src.b);
  return QuiverHom{a2_functor_object(src, f.source.field()), a2_functor_object(tgt, f.source.field()),
                   {zeros(0, 0), block}};
}

namespace {

A2Multiplicities image_multiplicities(A2Multiplicities m) { return {0, m.c, 0}; }

}  // namespace

VerificationReport a2_functor_example(int bound) {
  VerificationReport r("a2_functor");
  const FieldSpec q = FieldSpec::rationals();
  std::vector<A2Multiplicities> objs;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) objs.push_back({a, b, c});

  auto verdict = [](bool ok) { return ok ? Verdict::pass : Verdict::fail; };
  r.add_case("F(S1)=0", verdict(a2_functor_object({1, 0, 0}).is_zero()));
  r.add_case("F(S2)=0", verdict(a2_functor_object({0, 1, 0}).is_zero()));
  r.add_case("F(P2)=S2", verdict(a2_functor_object({0, 0, 1}) == a2_s2(q)));
  r.add_case("F_nonzero", verdict(!a2_functor_object({0, 0, 1}).is_zero()),
             json{{"witness", "F(P2) = S2 is nonzero"}});

  // Additivity on objects: F(M + N) = F(M) + F(N), checked on the
  // decomposition of each object into its three isotypic parts.
  bool additive = true;
  for (const auto& m : objs) {
    const QuiverRep whole = a2_functor_object(m);
    const QuiverRep parts = direct_sum({a2_functor_object({m.a, 0, 0}), a2_functor_object({0, m.b, 0}),
                                        a2_functor_object({0, 0, m.c})});
    additive = additive && whole.dims() == parts.dims();
    const QuiverRep direct = direct_sum({a2_object({m.a, 0, 0}), a2_object({0, m.b, 0}), a2_object({0, 0, m.c})});
    additive = additive && direct.dims() == a2_object(m).dims();
  }
  r.add_case("additive_on_objects", verdict(additive), json{{"objects", objs.size()}});

  bool ff_objects = true;
  for (const auto& m : objs) ff_objects = ff_objects && a2_functor_object(image_multiplicities(m)).is_zero();
  r.add_case("FF_zero_on_objects", verdict(ff_objects), json{{"objects", objs.size()}});

  std::size_t hom_elements = 0, literal_typed = 0;
  bool ff_homs = true, well_defined = true, additive_homs = true;
  for (const auto& s : objs)
    for (const auto& t : objs) {
      const auto basis = hom_space(a2_object(s), a2_object(t));
      for (const auto& f : basis) {
        ++hom_elements;
        const QuiverHom ff = a2_functor_hom(s, t, f);
        well_defined = well_defined && !first_non_intertwined(ff.source.rep(), ff.target.rep(), ff.maps);
        const QuiverHom fff = a2_functor_hom(image_multiplicities(s), image_multiplicities(t), ff);
        ff_homs = ff_homs && is_zero(fff.maps);
        if (a2_functor_hom_literal(s, t, f)) ++literal_typed;
      }
      // F is additive on hom spaces: F(f + g) = F(f) + F(g).
      if (basis.size() >= 2) {
        const QuiverHom sum{basis[0].source, basis[0].target, add(basis[0].maps, basis[1].maps)};
        additive_homs = additive_homs && equal(a2_functor_hom(s, t, sum).maps,
                                               add(a2_functor_hom(s, t, basis[0]).maps, a2_functor_hom(s, t, basis[1]).maps));
      }
    }
  r.add_case("F_maps_are_morphisms", verdict(well_defined), json{{"hom_basis_elements", hom_elements}});
  r.add_case("additive_on_homs", verdict(additive_homs));
  r.add_case("FF_zero_on_homs", verdict(ff_homs), json{{"hom_basis_elements", hom_elements}});

  bool identities = true;
  for (const auto& m : objs) {
    const QuiverHom id = identity_hom(a2_object(m));
    identities = identities && equal(a2_functor_hom(m, m, id).maps, identity_components(a2_functor_object(m).rep()));
  }
  r.add_case("F_preserves_identities", verdict(identities));

  // Composition on a fixed grid of objects and every pair of basis maps.
  const std::vector<A2Multiplicities> grid = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 2}, {2, 0, 1}};
  bool composition = true;
  std::size_t triples = 0;
  for (const auto& x : grid)
    for (const auto& y : grid)
      for (const auto& z : grid) {
        const auto fs = hom_space(a2_object(x), a2_object(y));
        const auto gs = hom_space(a2_object(y), a2_object(z));
        for (const auto& f : fs)
          for (const auto& g : gs) {
            ++triples;
            const QuiverHom gf = compose(g, f);
            composition = composition && equal(a2_functor_hom(x, z, gf).maps,
                                               tenscat::compose(a2_functor_hom(y, z, g).maps, a2_functor_hom(x, y, f).maps));
          }
      }
  r.add_case("F_preserves_composition", verdict(composition), json{{"composable_pairs", triples}});

  // The displayed block recipe taken literally keeps the S2 -> S2 block.
  // That block maps S2^b to S2^b', while F(M) = S2^c, so it only has the
  // right shape when b = c and b' = c'.
  const QuiverHom id_p2 = identity_hom(a2_p2(q));
  const bool literal_id_p2 = a2_functor_hom_literal({0, 0, 1}, {0, 0, 1}, id_p2).has_value();
  r.note("basis order: vertex 1 = [S1 block, P2 block], vertex 2 = [S2 block, P2 block]");
  r.note("F on morphisms keeps the P2 -> P2 block at vertex 2 (restriction to the image of the arrow)");
  r.note("literal S2 -> S2 block recipe: well-typed for " + std::to_string(literal_typed) + " of " +
         std::to_string(hom_elements) + " hom basis elements; on id_P2 it " +
         (literal_id_p2 ? "is well-typed" : "has no S2 block and cannot give id_S2 = F(id_P2)"));
  r.note("Fun[A,A] not tensor reduced: F is nonzero and F o F = 0");
  return r;
}

}  // namespace tenscat
