#pragma once

// Checks of the standard t-structure and its monoidal behaviour on finite
// samples. Each check returns a VerificationReport; a failing case always
// carries the offending degree, pair or object.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tenscat/backends.hpp"
#include "tenscat/complex.hpp"
#include "tenscat/report.hpp"

namespace tenscat {

enum class AisleSide { le, ge };

struct AisleSpec {
  int n = 0;
  AisleSide side = AisleSide::le;
};

/// Degrees with nonzero cohomology, read off once and reused by every
/// aisle question about the same complex.
using Support = std::vector<int>;

inline bool in_aisle(const Support& s, const AisleSpec& a) {
  if (s.empty()) return true;
  return a.side == AisleSide::le ? s.back() <= a.n : s.front() >= a.n;
}

/// Backends that expose per-vertex dimensions and ranks.
template <class B>
concept Counting = requires(const B& b, const typename B::Object& a, const typename B::Morphism& f) {
  b.dims(a);
  b.ranks(f);
};

/// Per-vertex dim H^n computed from ranks of the differential matrices alone.
template <Counting B>
std::vector<Index> cohomology_dims_by_ranks(const B& b, const BoundedComplex<B>& x, int n) {
  std::vector<Index> d = b.dims(object_at(b, x, n));
  const std::vector<Index> out = b.ranks(differential(b, x, n)), in = b.ranks(differential(b, x, n - 1));
  for (std::size_t v = 0; v < d.size(); ++v) d[v] -= out[v] + in[v];
  return d;
}

inline bool all_zero(const std::vector<Index>& d) {
  return std::all_of(d.begin(), d.end(), [](Index k) { return k == 0; });
}

template <class B>
Support support(const B& b, const BoundedComplex<B>& x) {
  if constexpr (Counting<B>) {
    Support s;
    for (int n = x.lo; !x.empty() && n <= x.hi(); ++n)
      if (!all_zero(cohomology_dims_by_ranks(b, x, n))) s.push_back(n);
    return s;
  } else {
    return cohomology_support(b, x);
  }
}

/// X in D^{<=n} iff H^i(X) = 0 for i >= n + 1; X in D^{>=n} iff H^i(X) = 0
/// for i <= n - 1.
template <class B>
bool aisle_membership(const B& b, const BoundedComplex<B>& x, const AisleSpec& a) {
  return in_aisle(cohomology_support(b, x), a);
}

/// H^i(X) = 0 for every i != 0.
template <class B>
bool heart_membership(const B& b, const BoundedComplex<B>& x) {
  const Support s = cohomology_support(b, x);
  return std::all_of(s.begin(), s.end(), [](int i) { return i == 0; });
}

template <class B>
json support_json(const B& b, const BoundedComplex<B>& x, const Support& s) {
  json out = json::object();
  for (int i : s) out[std::to_string(i)] = b.describe(cohomology(b, x, i));
  return out;
}

/// The natural map kappa : sum_{p+q=n} H^p(X) (x) H^q(Y) -> H^n(X (x) Y)
/// induced by the tensor of cycle inclusions; pass iff kappa is an
/// isomorphism in every degree. Field backends also compare dimensions
/// through rank counting on the raw differentials.
template <class B>
VerificationReport kunneth_check(const B& b, const BoundedComplex<B>& x, const BoundedComplex<B>& y) {
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;
  VerificationReport r("kunneth");
  if (x.empty() || y.empty()) {
    r.note("empty complex: both sides vanish");
    return r;
  }
  const TensorData<B> t = total_tensor_data(b, x, y);
  std::map<int, CohomologyData<B>> hx, hy;
  for (int p = x.lo; p <= x.hi(); ++p) hx.emplace(p, cohomology_data(b, x, p));
  for (int q = y.lo; q <= y.hi(); ++q) hy.emplace(q, cohomology_data(b, y, q));
  for (int n = t.complex.lo; n <= t.complex.hi(); ++n) {
    const auto& slots = t.slots.at(n);
    const auto& parts = t.parts.at(n);
    std::vector<Object> cycles, lhs_parts;
    std::vector<std::vector<std::optional<Morphism>>> incl(slots.size(),
                                                           std::vector<std::optional<Morphism>>(slots.size()));
    std::vector<std::vector<std::optional<Morphism>>> proj(slots.size(),
                                                           std::vector<std::optional<Morphism>>(slots.size()));
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto& cx = hx.at(slots[k].p);
      const auto& cy = hy.at(slots[k].q);
      cycles.push_back(b.tensor(cx.cycles, cy.cycles));
      lhs_parts.push_back(b.tensor(cx.object, cy.object));
      incl[k][k] = b.tensor(cx.inclusion, cy.inclusion);
      proj[k][k] = b.tensor(cx.projection, cy.projection);
    }
    const Morphism iota = b.assemble(cycles, parts, incl);
    const Morphism epi = b.assemble(cycles, lhs_parts, proj);
    const CohomologyData<B> ht = cohomology_data(b, t.complex, n);
    const Morphism phi = b.compose(ht.projection, b.lift(ht.inclusion, iota));
    const Morphism kappa = b.descend(epi, phi);
    const Object& lhs = b.target(epi);
    const bool iso = b.is_iso(kappa);
    json data{{"degree", n}, {"lhs", b.describe(lhs)}, {"rhs", b.describe(ht.object)}};
    bool counts_agree = true;
    if constexpr (Counting<B>) {
      // Tensor products are computed vertexwise, so counts are too.
      std::vector<Index> lhs_count(b.dims(lhs).size(), 0);
      for (const auto& s : slots) {
        const auto hp = cohomology_dims_by_ranks(b, x, s.p), hq = cohomology_dims_by_ranks(b, y, s.q);
        for (std::size_t v = 0; v < lhs_count.size(); ++v) lhs_count[v] += hp[v] * hq[v];
      }
      const std::vector<Index> rhs_count = cohomology_dims_by_ranks(b, t.complex, n);
      data["lhs_count"] = lhs_count;
      data["rhs_count"] = rhs_count;
      counts_agree = lhs_count == b.dims(lhs) && rhs_count == b.dims(ht.object) && lhs_count == rhs_count;
      data["counts_agree"] = counts_agree;
    }
    r.add_case("degree " + std::to_string(n), iso && counts_agree ? Verdict::pass : Verdict::fail, std::move(data));
  }
  return r;
}

/// Cohomology supports of X, Y and X (x) Y for one ordered pair.
struct PairSupport {
  std::size_t x = 0, y = 0;
  Support sx, sy, sxy;
};

template <class B>
std::vector<PairSupport> pair_supports(const B& b, const std::vector<BoundedComplex<B>>& sample,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Support> single;
  for (const auto& c : sample) single.push_back(support(b, c));
  std::vector<PairSupport> out;
  for (const auto& [i, j] : pairs)
    out.push_back({i, j, single[i], single[j], support(b, total_tensor(b, sample[i], sample[j]))});
  return out;
}

template <class T>
std::vector<std::pair<std::size_t, std::size_t>> all_pairs(const std::vector<T>& sample) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) out.emplace_back(i, j);
  return out;
}

/// First degree of X (x) Y outside the required aisle.
inline std::optional<int> aisle_violation(const Support& s, const AisleSpec& a) {
  for (int i : s)
    if (a.side == AisleSide::le ? i > a.n : i < a.n) return i;
  return std::nullopt;
}

/// Conditions (1) X in D<=0, Y in D<=n => X (x) Y in D<=0 and
/// (2) X in D>=0, Y in D>=n => X (x) Y in D>=0, on precomputed supports.
VerificationReport monoidal_aisle_report(const std::vector<PairSupport>& pairs, int n,
                                         const std::vector<std::string>& labels);

template <class B>
VerificationReport monoidal_aisle_check(const B& b, const std::vector<BoundedComplex<B>>& sample, int n,
                                        std::vector<std::string> labels = {}) {
  while (labels.size() < sample.size()) labels.push_back("sample[" + std::to_string(labels.size()) + "]");
  return monoidal_aisle_report(pair_supports(b, sample, all_pairs(sample)), n, labels);
}

/// Runs both conditions for every n in the range. With `augment`, shifted
/// unit stalks in degrees 0 and every probed n are added to the sample, so
/// each n != 0 meets the pair (unit stalk, unit stalk in degree n).
template <class B>
VerificationReport deviation_probe(const B& b, std::vector<BoundedComplex<B>> sample, const std::vector<int>& range,
                                   bool augment = true) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sample.size(); ++i) labels.push_back("sample[" + std::to_string(i) + "]");
  const std::size_t random_count = sample.size();
  if (augment) {
    std::vector<int> degrees{0};
    for (int n : range)
      if (std::find(degrees.begin(), degrees.end(), n) == degrees.end()) degrees.push_back(n);
    for (int d : degrees) {
      sample.push_back(stalk(b, b.unit(), d));
      labels.push_back("unit[" + std::to_string(d) + "]");
    }
  }
  const auto supports = pair_supports(b, sample, all_pairs(sample));
  VerificationReport r("deviation");
  for (int n : range) {
    const VerificationReport m = monoidal_aisle_report(supports, n, labels);
    const bool refuted = !m.passed();
    json data{{"n", n}, {"refuted", refuted}, {"pairs", supports.size()}};
    if (refuted)
      for (const auto& c : m.cases)
        if (c.verdict == Verdict::fail) {
          data["witness"] = c.data;
          data["condition"] = c.id;
          break;
        }
    // dev = {0} predicts a refutation exactly for n != 0.
    const bool expected = (n != 0) == refuted;
    r.add_case("n=" + std::to_string(n), expected ? Verdict::pass : Verdict::fail, std::move(data));
  }
  r.note(std::to_string(random_count) + " sampled complexes, " + std::to_string(sample.size() - random_count) +
         " unit stalks added");
  r.note("n = 0 surviving a finite sample is evidence, not a proof");
  return r;
}

/// X (x) X != 0 for every nonzero X; zero objects are excluded. Pairs of
/// distinct objects with vanishing tensor are noted, not failed.
template <class B>
VerificationReport tensor_reduced_check(const B& b, const std::vector<typename B::Object>& sample) {
  VerificationReport r("reduced");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& a = sample[i];
    const std::string id = "object[" + std::to_string(i) + "]";
    if (b.is_zero(a)) {
      r.add_case(id, Verdict::pass, json{{"excluded", "zero object"}});
      continue;
    }
    const auto sq = b.tensor(a, a);
    r.add_case(id, b.is_zero(sq) ? Verdict::fail : Verdict::pass,
               json{{"object", b.describe(a)}, {"square", b.describe(sq)}});
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (b.is_zero(sample[i]) || b.is_zero(sample[j])) continue;
      if (b.is_zero(b.tensor(sample[i], sample[j])))
        r.note("cross-annihilation: object[" + std::to_string(i) + "] (x) object[" + std::to_string(j) +
               "] = 0 (allowed: reducedness only concerns X (x) X)");
    }
  return r;
}

inline Verdict from_iso(IsoVerdict v) {
  return v == IsoVerdict::iso ? Verdict::pass : v == IsoVerdict::not_iso ? Verdict::fail : Verdict::undetermined;
}

/// H^i(1) = 0 for i != 0 and H^0(1) = 1, with a shifted-unit negative
/// control and the unit plus an exact complex.
template <class B>
VerificationReport unit_concentration_check(const B& b) {
  VerificationReport r("unit");
  const auto u = b.unit();
  auto concentrated = [&](const BoundedComplex<B>& x) {
    const Support s = cohomology_support(b, x);
    return s == Support{0};
  };
  const BoundedComplex<B> stalk0 = stalk(b, u, 0);
  r.add_case("unit_stalk", concentrated(stalk0) ? from_iso(b.isomorphic(cohomology(b, stalk0, 0), u)) : Verdict::fail,
             json{{"support", cohomology_support(b, stalk0)}});
  const BoundedComplex<B> shifted = shift(b, stalk0, 1);
  r.add_case("shifted_unit_not_concentrated", concentrated(shifted) ? Verdict::fail : Verdict::pass,
             json{{"support", cohomology_support(b, shifted)}});
  // 1 -> 1 + 1 in degrees -1, 0, the identity onto the second summand.
  const auto sum = b.direct_sum({u, u});
  std::vector<std::vector<std::optional<typename B::Morphism>>> blocks{{std::nullopt}, {b.identity(u)}};
  const BoundedComplex<B> padded = make_complex(b, -1, {u, sum}, {b.assemble({u}, {u, u}, blocks)});
  r.add_case("unit_plus_exact",
             concentrated(padded) ? from_iso(b.isomorphic(cohomology(b, padded, 0), u)) : Verdict::fail,
             json{{"support", cohomology_support(b, padded)}});
  return r;
}

/// For m the top degree with H^m(X) != 0, H^{2m}(X (x) X) != 0; likewise at
/// the bottom degree.
template <class B>
VerificationReport top_cohomology_square_check(const B& b, const BoundedComplex<B>& x) {
  const Support s = cohomology_support(b, x);
  if (s.empty()) throw std::invalid_argument("top cohomology check needs a complex with nonzero cohomology");
  VerificationReport r("top_cohomology_square");
  const BoundedComplex<B> sq = total_tensor(b, x, x);
  for (const auto& [id, m] : {std::pair<std::string, int>{"top", s.back()}, {"bottom", s.front()}}) {
    const auto h = cohomology(b, sq, 2 * m);
    r.add_case(id, b.is_zero(h) ? Verdict::fail : Verdict::pass,
               json{{"m", m}, {"degree", 2 * m}, {"H", b.describe(h)}});
  }
  return r;
}

/// Truncation contract at cut n: H^i(tau<=n X) = H^i(X) for i <= n and 0
/// above; H^i(tau>=n X) = H^i(X) for i >= n and 0 below. Agreement is
/// through the induced maps of the truncation morphisms.
template <class B>
VerificationReport truncation_check(const B& b, const BoundedComplex<B>& x, int n) {
  VerificationReport r("truncation");
  const Truncation<B> le = truncate_le(b, x, n);
  const Truncation<B> ge = truncate_ge(b, x, n);
  std::optional<int> bad_le, bad_ge;
  const auto [lo, hi] = union_range(x, x);
  for (int i = lo - 1; i <= hi + 1; ++i) {
    const bool ok_le = i <= n ? b.is_iso(induced_map_on_cohomology(b, le.map, i)) : b.is_zero(cohomology(b, le.complex, i));
    const bool ok_ge = i >= n ? b.is_iso(induced_map_on_cohomology(b, ge.map, i)) : b.is_zero(cohomology(b, ge.complex, i));
    if (!ok_le && !bad_le) bad_le = i;
    if (!ok_ge && !bad_ge) bad_ge = i;
  }
  const bool chain_ok = !chain_map_failure(b, le.map) && !chain_map_failure(b, ge.map) &&
                        !d_squared_failure(b, le.complex) && !d_squared_failure(b, ge.complex);
  r.add_case("le", bad_le ? Verdict::fail : Verdict::pass, bad_le ? json{{"degree", *bad_le}} : json::object());
  r.add_case("ge", bad_ge ? Verdict::fail : Verdict::pass, bad_ge ? json{{"degree", *bad_ge}} : json::object());
  r.add_case("chain_maps", chain_ok ? Verdict::pass : Verdict::fail);
  return r;
}

/// Aisle bookkeeping on one complex: shift compatibility and heart = both
/// aisles.
template <class B>
VerificationReport aisle_properties(const B& b, const BoundedComplex<B>& x) {
  VerificationReport r("aisle_properties");
  const Support s = cohomology_support(b, x);
  bool shift_ok = true;
  for (int k = -2; k <= 2; ++k) {
    const Support sk = cohomology_support(b, shift(b, x, -k));
    for (int n = -3; n <= 3; ++n)
      for (AisleSide side : {AisleSide::le, AisleSide::ge})
        shift_ok = shift_ok && in_aisle(s, {n, side}) == in_aisle(sk, {n + k, side});
  }
  r.add_case("shift_compatibility", shift_ok ? Verdict::pass : Verdict::fail);
  const bool heart = heart_membership(b, x);
  const bool both = in_aisle(s, {0, AisleSide::le}) && in_aisle(s, {0, AisleSide::ge});
  r.add_case("heart_is_both_aisles", heart == both ? Verdict::pass : Verdict::fail, json{{"heart", heart}});
  return r;
}

}  // namespace tenscat
