#include "tenscat/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace tenscat {

namespace {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// Drops zero columns so relation matrices stay small.
IntMatrix prune(const IntMatrix& r) {
  std::vector<Index> keep;
  for (Index j = 0; j < r.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < r.rows() && zero; ++i) zero = r(i, j) == 0;
    if (!zero) keep.push_back(j);
  }
  IntMatrix out(r.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Index>(k)) = r.col(keep[k]);
  return out;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(Index generators, IntMatrix relations) : gens_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != gens_ && !(relations_.cols() == 0 && relations_.size() == 0))
    throw std::invalid_argument("relation matrix must have one row per generator");
  if (relations_.rows() != gens_) relations_.resize(gens_, 0);
}

FgAbelianGroup FgAbelianGroup::free(Index rank) { return FgAbelianGroup(rank, IntMatrix(rank, 0)); }

FgAbelianGroup FgAbelianGroup::cyclic(long n) {
  if (n == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = n < 0 ? -n : n;
  return FgAbelianGroup(1, r);
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(const std::vector<BigInt>& factors) {
  const auto m = static_cast<Index>(factors.size());
  std::vector<Index> torsion;
  for (Index i = 0; i < m; ++i)
    if (factors[static_cast<std::size_t>(i)] != 0) torsion.push_back(i);
  IntMatrix r = IntMatrix::Zero(m, static_cast<Index>(torsion.size()));
  for (std::size_t k = 0; k < torsion.size(); ++k)
    r(torsion[k], static_cast<Index>(k)) = abs(factors[static_cast<std::size_t>(torsion[k])]);
  return FgAbelianGroup(m, r);
}

bool FgAbelianGroup::is_relation(const IntVector& v) const {
  if (v.size() != gens_) throw std::invalid_argument("vector length does not match generator count");
  bool zero = true;
  for (Index i = 0; i < v.size() && zero; ++i) zero = v(i) == 0;
  if (zero) return true;
  return integer_solve(relations_, v).has_value();
}

bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a.gens_ == b.gens_ && a.relations_.cols() == b.relations_.cols() && a.relations_ == b.relations_;
}

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
    throw std::invalid_argument("group hom matrix must be (target generators) x (source generators)");
  const IntMatrix images = matrix_ * source_.relations();
  if (images.cols() > 0 && !is_zero(images) && !integer_solve(target_.relations(), images))
    throw std::invalid_argument("group hom is not well defined: a source relation maps outside the target relations");
}

GroupHom GroupHom::unchecked(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix) {
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.matrix_ = std::move(matrix);
  return h;
}

std::vector<BigInt> invariant_factors(const FgAbelianGroup& a) {
  const SmithForm s = smith_normal_form(a.relations());
  std::vector<BigInt> out;
  for (Index i = 0; i < s.rank; ++i)
    if (s.d(i, i) != 1) out.push_back(s.d(i, i));
  for (Index i = s.rank; i < a.generators(); ++i) out.push_back(0);
  return out;
}

bool is_trivial(const FgAbelianGroup& a) { return invariant_factors(a).empty(); }

std::string describe_group(const FgAbelianGroup& a) {
  const auto f = invariant_factors(a);
  if (f.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " + ";
    if (f[i] == 0)
      os << "Z";
    else
      os << "Z/" << f[i];
  }
  return os.str();
}

FgAbelianGroup tensor_groups(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const IntMatrix left = kronecker(a.relations(), int_identity(b.generators()));
  const IntMatrix right = kronecker(int_identity(a.generators()), b.relations());
  return FgAbelianGroup(a.generators() * b.generators(), prune(hcat(left, right)));
}

GroupHom tensor_homs(const GroupHom& f, const GroupHom& g) {
  return GroupHom::unchecked(tensor_groups(f.source(), g.source()), tensor_groups(f.target(), g.target()),
                             kronecker(f.matrix(), g.matrix()));
}

FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& parts) {
  Index gens = 0, rels = 0;
  for (const auto& p : parts) {
    gens += p.generators();
    rels += p.relations().cols();
  }
  IntMatrix r = IntMatrix::Zero(gens, rels);
  Index gi = 0, ri = 0;
  for (const auto& p : parts) {
    r.block(gi, ri, p.generators(), p.relations().cols()) = p.relations();
    gi += p.generators();
    ri += p.relations().cols();
  }
  return FgAbelianGroup(gens, r);
}

GroupHom identity_hom(const FgAbelianGroup& a) { return GroupHom::unchecked(a, a, int_identity(a.generators())); }

GroupHom zero_hom(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return GroupHom::unchecked(a, b, IntMatrix::Zero(b.generators(), a.generators()));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (g.source().generators() != f.target().generators())
    throw std::invalid_argument("compose: middle groups do not match");
  return GroupHom::unchecked(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupHom add(const GroupHom& f, const GroupHom& g) {
  if (f.matrix().rows() != g.matrix().rows() || f.matrix().cols() != g.matrix().cols())
    throw std::invalid_argument("add: shapes differ");
  return GroupHom::unchecked(f.source(), f.target(), f.matrix() + g.matrix());
}

GroupHom negate(const GroupHom& f) { return GroupHom::unchecked(f.source(), f.target(), -f.matrix()); }

GroupHom scale(const GroupHom& f, long k) {
  return GroupHom::unchecked(f.source(), f.target(), f.matrix() * BigInt(k));
}

bool is_zero_hom(const GroupHom& f) {
  if (is_zero(f.matrix())) return true;
  return integer_solve(f.target().relations(), f.matrix()).has_value();
}

bool equal_homs(const GroupHom& f, const GroupHom& g) { return is_zero_hom(add(f, negate(g))); }

Minimized minimize(const FgAbelianGroup& a) {
  const SmithDecomposition s = smith_decomposition(a.relations());
  const Index m = a.generators();
  // In coordinates y = U x the relations become diag(d); coordinates with
  // d_i = 1 are zero in the quotient.
  std::vector<Index> keep;
  std::vector<BigInt> factors;
  for (Index i = 0; i < m; ++i) {
    const BigInt d = i < s.rank ? s.d(i, i) : BigInt(0);
    if (d == 1) continue;
    keep.push_back(i);
    factors.push_back(d);
  }
  const auto k = static_cast<Index>(keep.size());
  IntMatrix to(k, m), from(m, k);
  for (Index r = 0; r < k; ++r) {
    to.row(r) = s.u.row(keep[static_cast<std::size_t>(r)]);
    from.col(r) = s.u_inv.col(keep[static_cast<std::size_t>(r)]);
  }
  FgAbelianGroup canon = FgAbelianGroup::from_invariant_factors(factors);
  return Minimized{canon, GroupHom::unchecked(a, canon, to), GroupHom::unchecked(canon, a, from)};
}

GroupKernel kernel(const GroupHom& f) {
  const FgAbelianGroup& a = f.source();
  const FgAbelianGroup& b = f.target();
  // x with F x in im R_B: project the kernel of [F | R_B] onto its first block.
  const IntMatrix big = integer_kernel(hcat(f.matrix(), b.relations()));
  const IntMatrix gens = prune(big.topRows(a.generators()));
  // Relations among those generators: z with K z in im R_A.
  const IntMatrix rel_big = integer_kernel(hcat(gens, a.relations()));
  const IntMatrix rels = prune(rel_big.topRows(gens.cols()));
  const FgAbelianGroup raw(gens.cols(), rels);
  const Minimized mini = minimize(raw);
  const GroupHom incl = GroupHom::unchecked(mini.group, a, gens * mini.from.matrix());
  return GroupKernel{mini.group, incl};
}

GroupCokernel cokernel(const GroupHom& f) {
  const FgAbelianGroup& b = f.target();
  const FgAbelianGroup raw(b.generators(), prune(hcat(b.relations(), f.matrix())));
  const Minimized mini = minimize(raw);
  return GroupCokernel{mini.group, GroupHom::unchecked(b, mini.group, mini.to.matrix())};
}

GroupHom lift(const GroupHom& mono, const GroupHom& f) {
  const FgAbelianGroup& k = mono.source();
  const IntMatrix sys = hcat(mono.matrix(), mono.target().relations());
  const auto sol = integer_solve(sys, f.matrix());
  if (!sol) throw std::invalid_argument("lift: image does not factor through the given monomorphism");
  return GroupHom::unchecked(f.source(), k, sol->topRows(k.generators()));
}

GroupHom descend(const GroupHom& epi, const GroupHom& f) {
  const FgAbelianGroup& q = epi.target();
  // Preimage under epi of each generator of q, then apply f.
  const IntMatrix sys = hcat(epi.matrix(), q.relations());
  const auto sol = integer_solve(sys, int_identity(q.generators()));
  if (!sol) throw std::invalid_argument("descend: map is not surjective");
  const IntMatrix pre = sol->topRows(epi.source().generators());
  const GroupHom g = GroupHom::unchecked(q, f.target(), f.matrix() * pre);
  if (!equal_homs(compose(g, epi), f)) throw std::invalid_argument("descend: map does not vanish on the kernel");
  return g;
}

bool is_injective(const GroupHom& f) { return is_trivial(kernel(f).object); }
bool is_surjective(const GroupHom& f) { return is_trivial(cokernel(f).object); }
bool is_isomorphism(const GroupHom& f) { return is_injective(f) && is_surjective(f); }

std::optional<GroupHom> isomorphism(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const Minimized ma = minimize(a);
  const Minimized mb = minimize(b);
  if (!(ma.group == mb.group)) return std::nullopt;
  return compose(mb.from, ma.to);
}

FgAbelianGroup homology_at(const GroupHom& d_in, const GroupHom& d_out) {
  if (!(d_in.target() == d_out.source())) throw std::invalid_argument("homology_at: maps are not composable");
  if (!is_zero_hom(compose(d_out, d_in))) throw std::invalid_argument("homology_at: composite is not zero");
  const GroupKernel k = kernel(d_out);
  return cokernel(lift(k.inclusion, d_in)).object;
}

}  // namespace tenscat
