#include "tenscat/dual.hpp"

namespace tenscat {

namespace {

bool odd(int i) { return i % 2 != 0; }

Matrix transpose(const Matrix& m) { return m.transpose(); }

struct Terms {
  std::vector<DualData> data;  // data[i - x.lo] belongs to X^i
  const DualData& at(const ModuleComplex& x, int i) const { return data[static_cast<std::size_t>(i - x.lo)]; }
};

Terms dual_terms(const ModuleComplex& x, bool left) {
  Terms t;
  for (const auto& m : x.objects) t.data.push_back(left ? left_dual_module(m) : right_dual_module(m));
  return t;
}

/// The complex Y^k = dual(X^{-k}), d_Y^k = (-1)^k (d_X^{-k-1})^T.
ModuleComplex dual_of(const ModuleBackend& b, const ModuleComplex& x, const Terms& t) {
  if (x.empty()) return ModuleComplex{};
  std::vector<HModule> objects;
  std::vector<ModuleHom> diffs;
  for (int k = -x.hi(); k <= -x.lo; ++k) objects.push_back(t.at(x, -k).dual);
  for (int k = -x.hi(); k < -x.lo; ++k) {
    Matrix m = transpose(differential(b, x, -k - 1).matrix);
    if (odd(k)) m = -m;
    diffs.push_back(ModuleHom{t.at(x, -k).dual, t.at(x, -k - 1).dual, std::move(m)});
  }
  return make_complex(b, -x.hi(), std::move(objects), std::move(diffs));
}

ModuleComplex unit_stalk(const ModuleBackend& b) { return stalk(b, b.unit(), 0); }

using Blocks = std::vector<std::vector<std::optional<ModuleHom>>>;

/// Chain map a (x) c -> unit stalk, summand (p, q) sent by pick(p, q).
template <class Pick>
ModuleChainMap pairing(const ModuleBackend& b, const ModuleComplex& a, const ModuleComplex& c, Pick pick) {
  const TensorData<ModuleBackend> t = total_tensor_data(b, a, c);
  const ModuleComplex u = unit_stalk(b);
  return make_chain_map(b, t.complex, u, [&](int n) {
    if (n != 0 || !t.complex.in_range(0)) return b.zero_map(object_at(b, t.complex, n), object_at(b, u, n));
    const auto& slots = t.slots.at(0);
    Blocks blocks(1, std::vector<std::optional<ModuleHom>>(slots.size()));
    for (std::size_t j = 0; j < slots.size(); ++j) blocks[0][j] = pick(slots[j].p, slots[j].q);
    return b.assemble(t.parts.at(0), {b.unit()}, blocks);
  });
}

/// Chain map unit stalk -> a (x) c, summand (p, q) reached by pick(p, q).
template <class Pick>
ModuleChainMap copairing(const ModuleBackend& b, const ModuleComplex& a, const ModuleComplex& c, Pick pick) {
  const TensorData<ModuleBackend> t = total_tensor_data(b, a, c);
  const ModuleComplex u = unit_stalk(b);
  return make_chain_map(b, u, t.complex, [&](int n) {
    if (n != 0 || !t.complex.in_range(0)) return b.zero_map(object_at(b, u, n), object_at(b, t.complex, n));
    const auto& slots = t.slots.at(0);
    Blocks blocks(slots.size(), std::vector<std::optional<ModuleHom>>(1));
    for (std::size_t i = 0; i < slots.size(); ++i) blocks[i][0] = pick(slots[i].p, slots[i].q);
    return b.assemble({b.unit()}, t.parts.at(0), blocks);
  });
}

ModuleHom signed_hom(ModuleHom f, bool negative) {
  if (negative) f.matrix = -f.matrix;
  return f;
}

}  // namespace

DualComplex left_dual_complex(const ModuleBackend& b, const ModuleComplex& x) {
  const Terms t = dual_terms(x, true);
  ModuleComplex y = dual_of(b, x, t);
  // Slot (p, q) = (-i, i) of Y (x) X and (i, -i) of X (x) Y.
  ModuleChainMap ev = pairing(b, y, x, [&](int, int i) { return signed_hom(t.at(x, i).ev, odd(i)); });
  ModuleChainMap coev = copairing(b, x, y, [&](int i, int) { return signed_hom(t.at(x, i).coev, odd(i)); });
  return DualComplex{std::move(y), std::move(ev), std::move(coev)};
}

DualComplex right_dual_complex(const ModuleBackend& b, const ModuleComplex& x) {
  const Terms t = dual_terms(x, false);
  ModuleComplex z = dual_of(b, x, t);
  // Slot (i, -i) of X (x) Z and (-i, i) of Z (x) X.
  ModuleChainMap ev = pairing(b, x, z, [&](int i, int) { return t.at(x, i).ev; });
  ModuleChainMap coev = copairing(b, z, x, [&](int, int i) { return t.at(x, i).coev; });
  return DualComplex{std::move(z), std::move(ev), std::move(coev)};
}

void left_dual_complex(const GroupBackend&, const BoundedComplex<GroupBackend>&) {
  throw NonRigidBackend("abelian groups have no duals: Z/n is not rigid");
}

void left_dual_complex(const QuiverBackend&, const BoundedComplex<QuiverBackend>&) {
  throw NonRigidBackend("quiver representations under the pointwise tensor have no duals");
}

namespace {

std::vector<Index> degree_dims(const ModuleBackend& b, const ModuleComplex& x) {
  std::vector<Index> d;
  for (const auto& o : x.objects) d.push_back(o.dim());
  (void)b;
  return d;
}

/// Dimensions of a complex, enough to lay out tensor summands.
struct Graded {
  int lo = 0;
  std::vector<Index> dims;
  bool empty() const { return dims.empty(); }
  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  Index at(int n) const { return n >= lo && n <= hi() ? dims[static_cast<std::size_t>(n - lo)] : 0; }
};

Graded graded(const ModuleBackend& b, const ModuleComplex& x) { return {x.lo, degree_dims(b, x)}; }

Graded tensor_graded(const Graded& x, const Graded& y) {
  if (x.empty() || y.empty()) return {};
  Graded t{x.lo + y.lo, {}};
  for (int n = t.lo; n <= x.hi() + y.hi(); ++n) {
    Index d = 0;
    for (int p = x.lo; p <= x.hi(); ++p) d += x.at(p) * y.at(n - p);
    t.dims.push_back(d);
  }
  return t;
}

/// Offsets of the summands X^p (x) Y^{n-p} inside (X (x) Y)^n, keyed by p.
std::map<int, Index> offsets(const Graded& x, const Graded& y, int n) {
  std::map<int, Index> out;
  if (x.empty() || y.empty()) return out;
  Index off = 0;
  for (int p = std::max(x.lo, n - y.hi()); p <= std::min(x.hi(), n - y.lo); ++p) {
    out[p] = off;
    off += x.at(p) * y.at(n - p);
  }
  return out;
}

/// Position in (X (x) (Y (x) Z))^n of each basis vector of ((X (x) Y) (x) Z)^n.
std::vector<Index> associator_image(const Graded& x, const Graded& y, const Graded& z, int n) {
  const Graded xy = tensor_graded(x, y), yz = tensor_graded(y, z);
  std::vector<Index> image(static_cast<std::size_t>(tensor_graded(xy, z).at(n)));
  const auto right_off = offsets(x, yz, n);
  for (const auto& [s, l_off] : offsets(xy, z, n)) {
    const Index dz = z.at(n - s);
    for (const auto& [p, p_off] : offsets(x, y, s)) {
      const int q = s - p, t = n - p;
      const Index dx = x.at(p), dy = y.at(q), e = yz.at(t);
      const Index yz_off = offsets(y, z, t).at(q);
      const Index r_off = right_off.at(p);
      for (Index i = 0; i < dx; ++i)
        for (Index j = 0; j < dy; ++j)
          for (Index k = 0; k < dz; ++k)
            image[static_cast<std::size_t>(l_off + ((p_off + i * dy + j) * dz + k))] = r_off + i * e + yz_off + j * dz + k;
    }
  }
  return image;
}

/// Degree-n matrix of f (x) g, where f : A -> C and g : B -> D are given by
/// their components (zero outside the stored range).
Matrix tensor_component(const ModuleBackend& b, const ModuleChainMap& f, const Graded& a, const Graded& c,
                        const ModuleChainMap& g, const Graded& bb, const Graded& d, int n) {
  const Graded src = tensor_graded(a, bb), tgt = tensor_graded(c, d);
  Matrix out = zeros(tgt.at(n), src.at(n));
  const auto so = offsets(a, bb, n), to = offsets(c, d, n);
  for (const auto& [p, s_off] : so) {
    const auto it = to.find(p);
    if (it == to.end()) continue;
    const Matrix fp = component(b, f, p).matrix, gq = component(b, g, n - p).matrix;
    if (fp.size() == 0 || gq.size() == 0) continue;
    const Matrix k = kronecker(fp, gq);
    out.block(it->second, s_off, k.rows(), k.cols()) = k;
  }
  return out;
}

Matrix permute_rows(const Matrix& m, const std::vector<Index>& image, Index rows) {
  Matrix out = zeros(rows, m.cols());
  for (std::size_t i = 0; i < image.size(); ++i) out.row(image[i]) = m.row(static_cast<Index>(i));
  return out;
}

Matrix unpermute_rows(const Matrix& m, const std::vector<Index>& image) {
  Matrix out = zeros(static_cast<Index>(image.size()), m.cols());
  for (std::size_t i = 0; i < image.size(); ++i) out.row(static_cast<Index>(i)) = m.row(image[i]);
  return out;
}

}  // namespace

ModuleChainMap associator(const ModuleBackend& b, const ModuleComplex& x, const ModuleComplex& y,
                          const ModuleComplex& z) {
  const ModuleComplex left = total_tensor(b, total_tensor(b, x, y), z);
  const ModuleComplex right = total_tensor(b, x, total_tensor(b, y, z));
  const Graded gx = graded(b, x), gy = graded(b, y), gz = graded(b, z);
  return make_chain_map(b, left, right, [&](int n) {
    return ModuleHom{object_at(b, left, n), object_at(b, right, n),
                     permutation_matrix(associator_image(gx, gy, gz, n))};
  });
}

ModuleChainMap associator_inverse(const ModuleBackend& b, const ModuleComplex& x, const ModuleComplex& y,
                                  const ModuleComplex& z) {
  ModuleChainMap a = associator(b, x, y, z);
  ModuleChainMap inv{a.target, a.source, a.lo, {}};
  for (const auto& c : a.comps) inv.comps.push_back(ModuleHom{c.target, c.source, transpose(c.matrix)});
  return inv;
}

ZigZags zigzag_composites(const ModuleBackend& b, const ModuleComplex& x, const DualComplex& d, bool left) {
  // Each composite is computed degreewise as (tensor) . (associator) .
  // (tensor) on matrices; the unit isomorphisms 1 (x) A = A = A (x) 1 are
  // identity matrices.
  const ModuleComplex& y = d.dual;
  const Graded gx = graded(b, x), gy = graded(b, y), gu{0, {1}};
  const ModuleChainMap idx = identity_chain_map(b, x), idy = identity_chain_map(b, y);
  ZigZags out{x.lo, {}, y.lo, {}};
  const Graded gxy = tensor_graded(gx, gy), gyx = tensor_graded(gy, gx);
  for (int n = x.lo; !x.empty() && n <= x.hi(); ++n) {
    Matrix m;
    if (left) {
      // X -> (X (x) Y) (x) X -> X (x) (Y (x) X) -> X.
      const Matrix a = tensor_component(b, d.coev, gu, gxy, idx, gx, gx, n);
      const auto image = associator_image(gx, gy, gx, n);
      const Matrix c = tensor_component(b, idx, gx, gx, d.ev, gyx, gu, n);
      m = mul(c, permute_rows(a, image, static_cast<Index>(image.size())));
    } else {
      // X -> X (x) (Z (x) X) -> (X (x) Z) (x) X -> X.
      const Matrix a = tensor_component(b, idx, gx, gx, d.coev, gu, gyx, n);
      const auto image = associator_image(gx, gy, gx, n);
      const Matrix c = tensor_component(b, d.ev, gxy, gu, idx, gx, gx, n);
      m = mul(c, unpermute_rows(a, image));
    }
    out.on_object.push_back(std::move(m));
  }
  for (int n = y.lo; !y.empty() && n <= y.hi(); ++n) {
    Matrix m;
    if (left) {
      // Y -> Y (x) (X (x) Y) -> (Y (x) X) (x) Y -> Y.
      const Matrix a = tensor_component(b, idy, gy, gy, d.coev, gu, gxy, n);
      const auto image = associator_image(gy, gx, gy, n);
      const Matrix c = tensor_component(b, d.ev, gyx, gu, idy, gy, gy, n);
      m = mul(c, unpermute_rows(a, image));
    } else {
      // Z -> (Z (x) X) (x) Z -> Z (x) (X (x) Z) -> Z.
      const Matrix a = tensor_component(b, d.coev, gu, gyx, idy, gy, gy, n);
      const auto image = associator_image(gy, gx, gy, n);
      const Matrix c = tensor_component(b, idy, gy, gy, d.ev, gxy, gu, n);
      m = mul(c, permute_rows(a, image, static_cast<Index>(image.size())));
    }
    out.on_dual.push_back(std::move(m));
  }
  return out;
}

namespace {

/// First degree whose matrix is not the identity.
std::optional<int> non_identity_degree(int lo, const std::vector<Matrix>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Matrix& m = comps[i];
    if (m.rows() != m.cols() || !is_zero(Matrix(m - identity(m.rows())))) return lo + static_cast<int>(i);
  }
  return std::nullopt;
}

void chain_case(VerificationReport& r, const std::string& id, std::optional<int> bad) {
  if (bad)
    r.add_case(id, Verdict::fail, json{{"degree", *bad}});
  else
    r.add_case(id, Verdict::pass);
}

}  // namespace

VerificationReport check_dual_complex(const ModuleBackend& b, const ModuleComplex& x, const DualComplex& d,
                                      bool left) {
  VerificationReport r(left ? "left_dual_complex" : "right_dual_complex");
  chain_case(r, "d_squared", d_squared_failure(b, d.dual));
  std::optional<int> bad_term;
  for (int k = d.dual.lo; !d.dual.empty() && k <= d.dual.hi() && !bad_term; ++k) {
    const HModule& m = object_at(b, x, -k);
    const DualData dd = left ? left_dual_module(m) : right_dual_module(m);
    if (!(object_at(b, d.dual, k) == dd.dual)) bad_term = k;
  }
  chain_case(r, "terms_are_duals", bad_term);
  std::optional<int> bad_map;
  for (std::size_t i = 0; i < d.dual.diffs.size() && !bad_map; ++i) {
    const ModuleHom& c = d.dual.diffs[i];
    if (first_non_intertwined(c.source.rep(), c.target.rep(), {c.matrix})) bad_map = d.dual.lo + static_cast<int>(i);
  }
  chain_case(r, "differentials_are_module_maps", bad_map);
  chain_case(r, "ev_chain_map", chain_map_failure(b, d.ev));
  chain_case(r, "coev_chain_map", chain_map_failure(b, d.coev));
  const ZigZags z = zigzag_composites(b, x, d, left);
  chain_case(r, "zigzag_object", non_identity_degree(z.object_lo, z.on_object));
  chain_case(r, "zigzag_dual", non_identity_degree(z.dual_lo, z.on_dual));
  return r;
}

}  // namespace tenscat
