#include "tenscat/suites.hpp"

#include <cmath>
#include <type_traits>

#include "tenscat/dual.hpp"
#include "tenscat/random.hpp"
#include "tenscat/verify.hpp"

namespace tenscat {

namespace {

template <class B>
constexpr bool is_module_backend = std::is_same_v<std::decay_t<B>, ModuleBackend>;

template <class B>
json complex_summary(const B& b, const BoundedComplex<B>& x) {
  json objects = json::array();
  for (const auto& o : x.objects) objects.push_back(b.describe(o));
  return json{{"lo", x.lo}, {"objects", std::move(objects)}};
}

/// One case standing for a whole sub-report, listing its failing cases.
void summarize(VerificationReport& r, const std::string& id, const VerificationReport& sub, json data = json::object()) {
  json failures = json::array();
  for (const auto& c : sub.cases)
    if (c.verdict != Verdict::pass) failures.push_back(json{{"id", sub.check + "/" + c.id}, {"data", c.data}});
  data["checks"] = sub.cases.size();
  if (!failures.empty()) data["failures"] = std::move(failures);
  r.add_case(id, sub.verdict, std::move(data));
}

void merge(VerificationReport& into, const VerificationReport& from) {
  for (const auto& c : from.cases) into.add_case(from.check + "/" + c.id, c.verdict, c.data);
}

std::string backend_label(const SuiteConfig& c) {
  if (c.builtin == "z") return "abelian groups";
  if (c.builtin == "a2") return "A2 quiver representations";
  return "right modules over " + c.builtin + (c.builtin == "taft" ? "(" + std::to_string(c.n == 0 ? 3 : c.n) + ")" : "");
}

/// Calls fn(backend, object generator) for the selected backend.
template <class Fn>
VerificationReport on_backend(const SuiteConfig& c, Fn fn) {
  if (c.builtin == "z") {
    const GroupBackend b;
    return fn(b, [](Rng& rng) { return random_group(rng); });
  }
  if (c.builtin == "a2") {
    const FieldSpec field = c.field.value_or(FieldSpec::rationals());
    const QuiverBackend b = quiver_backend(Quiver::a2(), field);
    return fn(b, [&](Rng& rng) { return random_quiver_rep(rng, Quiver::a2(), 4, field); });
  }
  const HopfPtr h = std::make_shared<const HopfAlgebra>(builtin_hopf(c.builtin, c.n, c.field));
  const ModuleBackend b = module_backend(h);
  const std::vector<HModule> pool = module_pool(h);
  return fn(b, [&](Rng& rng) { return random_module(rng, pool); });
}

BoundedComplex<GroupBackend> doubling(const GroupBackend& g) {
  const FgAbelianGroup z = FgAbelianGroup::free(1);
  return make_complex(g, -1, {z, z}, {scale(identity_hom(z), 2)});
}

}  // namespace

VerificationReport kunneth_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto gen) {
    VerificationReport r("kunneth");
    r.note("backend: " + backend_label(c));
    if constexpr (std::is_same_v<std::decay_t<decltype(b)>, GroupBackend>) {
      const auto x = stalk(b, FgAbelianGroup::cyclic(6), 0);
      const VerificationReport z6 = kunneth_check(b, x, doubling(b));
      for (const auto& k : z6.cases) r.add_case("z6_pair/" + k.id, k.verdict, k.data);
    }
    Rng rng(c.seed);
    const ComplexShape shape{-3, 3, 4};
    for (int i = 0; i < c.cases; ++i) {
      const auto x = random_complex(b, rng, shape, gen);
      const auto y = random_complex(b, rng, shape, gen);
      summarize(r, "pair[" + std::to_string(i) + "]", kunneth_check(b, x, y),
                json{{"x", complex_summary(b, x)}, {"y", complex_summary(b, y)}});
    }
    return r;
  });
}

VerificationReport aisle_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto gen) {
    VerificationReport r("aisle");
    r.note("backend: " + backend_label(c));
    Rng rng(c.seed);
    const ComplexShape shape{-3, 3, 4};
    for (int i = 0; i < c.cases; ++i) {
      const auto x = random_complex(b, rng, shape, gen);
      VerificationReport sub("complex");
      for (int n : {-1, 0, 1}) {
        VerificationReport t = truncation_check(b, x, n);
        t.check = "truncation n=" + std::to_string(n);
        merge(sub, t);
      }
      merge(sub, aisle_properties(b, x));
      if constexpr (Counting<std::decay_t<decltype(b)>>)
        if (!cohomology_support(b, x).empty()) merge(sub, top_cohomology_square_check(b, x));
      summarize(r, "complex[" + std::to_string(i) + "]", sub, json{{"x", complex_summary(b, x)}});
    }
    if constexpr (is_module_backend<decltype(b)>) {
      const ComplexShape nonpositive{-3, 0, 4};
      for (int i = 0; i < std::max(1, c.cases / 2); ++i) {
        const auto x = random_complex(b, rng, nonpositive, gen);
        const auto d = left_dual_complex(b, x).dual;
        const Support s = support(b, d);
        r.add_case("dual_aisle[" + std::to_string(i) + "]", in_aisle(s, {0, AisleSide::ge}) ? Verdict::pass : Verdict::fail,
                   json{{"x", complex_summary(b, x)}, {"dual_support", s}});
      }
    }
    return r;
  });
}

VerificationReport deviation_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto gen) {
    Rng rng(c.seed);
    const ComplexShape shape{-3, 3, 4};
    const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(c.cases, 1)))));
    std::vector<std::decay_t<decltype(random_complex(b, rng, shape, gen))>> sample;
    for (int i = 0; i < k; ++i) sample.push_back(random_complex(b, rng, shape, gen));
    VerificationReport r = deviation_probe(b, sample, {-2, -1, 0, 1, 2});
    r.note("backend: " + backend_label(c));
    return r;
  });
}

VerificationReport reduced_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto gen) {
    using B = std::decay_t<decltype(b)>;
    std::vector<typename B::Object> sample;
    if constexpr (std::is_same_v<B, GroupBackend>) {
      for (long n : {2L, 3L, 0L}) sample.push_back(FgAbelianGroup::cyclic(n));
    } else if constexpr (std::is_same_v<B, QuiverBackend>) {
      const FieldSpec f = c.field.value_or(FieldSpec::rationals());
      sample = {a2_s1(f), a2_s2(f), a2_p2(f)};
    } else {
      sample.push_back(b.unit());
    }
    sample.push_back(b.zero());
    Rng rng(c.seed);
    for (int i = 0; i < c.cases; ++i) sample.push_back(gen(rng));
    VerificationReport r = tensor_reduced_check(b, sample);
    r.note("backend: " + backend_label(c));
    return r;
  });
}

VerificationReport unit_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto) {
    VerificationReport r = unit_concentration_check(b);
    r.note("backend: " + backend_label(c));
    return r;
  });
}

VerificationReport dual_zigzag_suite(const SuiteConfig& c) {
  return on_backend(c, [&](const auto& b, auto gen) {
    using B = std::decay_t<decltype(b)>;
    if constexpr (!std::is_same_v<B, ModuleBackend>) {
      left_dual_complex(b, BoundedComplex<B>{});
      return VerificationReport("dual_zigzag");
    } else {
      VerificationReport r("dual_zigzag");
      r.note("backend: " + backend_label(c));
      Rng rng(c.seed);
      for (int i = 0; i < c.cases; ++i) {
        const HModule m = gen(rng);
        VerificationReport sub("module");
        merge(sub, check_duality(m, left_dual_module(m), true));
        merge(sub, check_duality(m, right_dual_module(m), false));
        summarize(r, "module[" + std::to_string(i) + "]", sub, json{{"dim", m.dim()}});
      }
      const ComplexShape shape{-3, 3, 4};
      for (int i = 0; i < std::max(1, c.cases * 2 / 5); ++i) {
        const auto x = random_complex(b, rng, shape, gen);
        VerificationReport sub("complex");
        merge(sub, check_dual_complex(b, x, left_dual_complex(b, x), true));
        merge(sub, check_dual_complex(b, x, right_dual_complex(b, x), false));
        summarize(r, "complex[" + std::to_string(i) + "]", sub, json{{"x", complex_summary(b, x)}});
      }
      return r;
    }
  });
}

VerificationReport z6_counterexample() {
  const GroupBackend g;
  const auto x = stalk(g, FgAbelianGroup::cyclic(6), 0);
  const auto y = doubling(g);
  const auto t = total_tensor(g, x, y);
  VerificationReport r("z6_counterexample");
  r.add_case("tensor_complex", Verdict::pass, complex_summary(g, t));
  for (int n : {-1, 0}) r.add_case("H^" + std::to_string(n), Verdict::pass, g.describe(cohomology(g, t, n)));
  r.add_case("heart_membership", Verdict::pass,
             json{{"x", heart_membership(g, x)}, {"y", heart_membership(g, y)}, {"x_tensor_y", heart_membership(g, t)}});
  merge(r, kunneth_check(g, x, y));
  merge(r, monoidal_aisle_check(g, {x, y}, 0, {"Z/6 stalk", "Z -(x2)-> Z"}));
  r.note("Z/6 (x) (Z -(x2)-> Z) has H^-1 = H^0 = Z/2, so the tensor of two heart objects leaves the heart");
  return r;
}

}  // namespace tenscat
