// Acceptance harness: one line per criterion, "criterion K: PASS|FAIL ...".
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "tenscat/dual.hpp"
#include "tenscat/io.hpp"
#include "tenscat/random.hpp"
#include "tenscat/suites.hpp"
#include "tenscat/verify.hpp"

using namespace tenscat;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

std::string failing_ids(const VerificationReport& r, std::size_t limit = 3) {
  std::string out;
  std::size_t k = 0;
  for (const auto& c : r.cases) {
    if (c.verdict == Verdict::pass) continue;
    if (k++ == limit) return out + ", ...";
    out += (out.empty() ? "" : ", ") + c.id;
  }
  return out;
}

// -------------------------------------------------------------- criteria

Outcome z6_counterexample_criterion() {
  const auto t0 = Clock::now();
  const VerificationReport r = z6_counterexample();
  const double s = seconds_since(t0);
  const json two = json::array({2});
  const auto* hm1 = r.find_case("H^-1");
  const auto* h0 = r.find_case("H^0");
  const auto* c2 = r.find_case("monoidal_aisle/condition_2");
  const bool factors = hm1 && h0 && hm1->data.at("invariant_factors") == two && h0->data.at("invariant_factors") == two;
  const bool violated = c2 && c2->verdict == Verdict::fail && c2->data.at("n") == 0;
  const bool ok = factors && violated && r.verdict == Verdict::fail && s < 1.0;
  return {ok, "H^-1 = H^0 = [2]: " + std::string(factors ? "yes" : "no") + ", condition (2) violated at n=0: " +
                  (violated ? "yes" : "no") + ", " + fmt_seconds(s) + " (limit 1 s)"};
}

Outcome kunneth_criterion() {
  const auto t0 = Clock::now();
  std::string detail, bad;
  std::size_t pairs = 0;
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"taft", 3}, {"kC2", 0}, {"a2", 0}}) {
    SuiteConfig c;
    c.builtin = name;
    c.n = n;
    c.cases = 100;
    c.seed = 2024;
    const VerificationReport r = kunneth_suite(c);
    pairs += r.cases.size();
    // Every pair case covers the natural map and the rank-count cross-check.
    bool counted = true;
    for (const auto& k : r.cases) counted = counted && k.data.value("checks", 0) > 0;
    if (!r.passed() || r.cases.size() != 100 || !counted) bad += (bad.empty() ? "" : ", ") + name + " (" + failing_ids(r) + ")";
  }
  const double s = seconds_since(t0);
  detail = std::to_string(pairs) + " pairs over sweedler, taft(3), kC2, A2";
  if (!bad.empty()) detail += "; failures: " + bad;
  return {bad.empty() && s < 60.0, detail + ", " + fmt_seconds(s) + " (limit 60 s)"};
}

Outcome kunneth_negative_control() {
  SuiteConfig c;
  c.builtin = "z";
  c.cases = 0;
  const VerificationReport r = kunneth_suite(c);
  const auto* k = r.find_case("z6_pair/degree -1");
  const bool ok = k && k->verdict == Verdict::fail && k->data.at("lhs").at("invariant_factors") == json::array() &&
                  k->data.at("rhs").at("invariant_factors") == json::array({2});
  return {ok, k ? "degree -1: " + to_string(k->verdict) + ", lhs " + k->data.at("lhs").dump() + ", rhs " + k->data.at("rhs").dump()
                : "degree -1 case missing"};
}

Outcome zigzag_criterion() {
  std::string bad;
  std::size_t modules = 0, complexes = 0;
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"taft", 2}, {"taft", 3}}) {
    SuiteConfig c;
    c.builtin = name;
    c.n = n;
    c.cases = 50;
    c.seed = 4;
    const VerificationReport r = dual_zigzag_suite(c);
    for (const auto& k : r.cases) {
      if (k.id.rfind("module[", 0) == 0) ++modules;
      if (k.id.rfind("complex[", 0) == 0) ++complexes;
    }
    if (!r.passed()) bad += (bad.empty() ? "" : ", ") + name + std::to_string(n) + " (" + failing_ids(r) + ")";
  }
  const bool counts = modules == 150 && complexes == 60;
  return {bad.empty() && counts, std::to_string(modules) + " modules, " + std::to_string(complexes) +
                                     " complexes, left and right duals" + (bad.empty() ? "" : "; failures: " + bad)};
}

Outcome hopf_axiom_criterion() {
  std::string bad;
  std::size_t builtins = 0;
  for (const auto& [name, n] : builtin_hopf_list()) {
    ++builtins;
    if (!check_hopf_axioms(builtin_hopf(name, n)).passed()) bad += (bad.empty() ? "" : ", ") + name;
  }
  // Single-entry corruptions, each of which must trip at least one axiom.
  std::mt19937_64 rng(5);
  std::size_t caught[3] = {0, 0, 0}, tried[3] = {0, 0, 0};
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"taft", 3}, {"kS3", 0}, {"kQ8", 0}}) {
    const HopfAlgebra h = builtin_hopf(name, n);
    const Index d = h.dim();
    std::uniform_int_distribution<Index> sq(0, d * d - 1), lin(0, d - 1);
    for (int trial = 0; trial < 5; ++trial) {
      const Scalar bump = Scalar::from_int(1 + trial % 3, h.field());
      Matrix delta = h.comult();
      delta(sq(rng), lin(rng)) += bump;
      Vector eps = h.counit();
      eps(lin(rng)) += bump;
      Matrix s = h.antipode();
      s(lin(rng), lin(rng)) += bump;
      const HopfAlgebra mutants[3] = {HopfAlgebra(h.algebra(), delta, h.counit(), h.antipode()),
                                      HopfAlgebra(h.algebra(), h.comult(), eps, h.antipode()),
                                      HopfAlgebra(h.algebra(), h.comult(), h.counit(), s)};
      for (int k = 0; k < 3; ++k) {
        ++tried[k];
        if (check_hopf_axioms(mutants[k]).verdict == Verdict::fail) ++caught[k];
      }
    }
  }
  bool mutations = true;
  for (int k = 0; k < 3; ++k) mutations = mutations && tried[k] >= 10 && caught[k] == tried[k];
  std::ostringstream os;
  os << builtins << " built-ins " << (bad.empty() ? "pass" : "FAIL: " + bad) << "; mutations caught: Delta " << caught[0] << "/"
     << tried[0] << ", eps " << caught[1] << "/" << tried[1] << ", S " << caught[2] << "/" << tried[2];
  return {bad.empty() && mutations, os.str()};
}

Outcome a2_functor_criterion() {
  const VerificationReport r = a2_functor_example(3);
  bool named = true;
  for (const char* id : {"F(S1)=0", "F(S2)=0", "F(P2)=S2", "FF_zero_on_objects", "FF_zero_on_homs"}) {
    const auto* c = r.find_case(id);
    named = named && c && c->verdict == Verdict::pass;
  }
  std::size_t objects = 0, homs = 0;
  if (const auto* c = r.find_case("FF_zero_on_objects")) objects = c->data.value("objects", std::size_t{0});
  if (const auto* c = r.find_case("FF_zero_on_homs")) homs = c->data.value("hom_basis_elements", std::size_t{0});
  return {r.passed() && named, "F(P2)=S2, F(S1)=F(S2)=0, FF=0 on " + std::to_string(objects) + " objects and " + std::to_string(homs) +
                                   " hom basis maps" + (r.passed() ? "" : "; failures: " + failing_ids(r))};
}

Outcome deviation_criterion() {
  const auto t0 = Clock::now();
  SuiteConfig c;
  c.builtin = "sweedler";
  c.cases = 100;
  c.seed = 7;
  const VerificationReport r = deviation_suite(c);
  const double s = seconds_since(t0);
  bool ok = true;
  std::string detail;
  for (int n : {-2, -1, 0, 1, 2}) {
    const auto* k = r.find_case("n=" + std::to_string(n));
    if (!k) {
      ok = false;
      continue;
    }
    const bool refuted = k->data.at("refuted").get<bool>();
    const bool expected = n != 0 ? refuted && k->data.contains("witness") : !refuted && k->data.at("pairs").get<int>() >= 100;
    ok = ok && expected;
    detail += "n=" + std::to_string(n) + (refuted ? " refuted" : " survives " + k->data.at("pairs").dump() + " pairs") + "; ";
  }
  return {ok && s < 30.0, detail + fmt_seconds(s) + " (limit 30 s)"};
}

Outcome twist_criterion() {
  std::string bad;
  std::size_t identical = 0, rejected = 0, perturbed = 0;
  bool sweedler_rejected = false;
  for (const auto& [name, n] : builtin_hopf_list()) {
    const HopfAlgebra h = builtin_hopf(name, n);
    const HopfAlgebra t = drinfeld_twist(h, trivial_twist(h));
    // Structure data serialized byte for byte; only the label may change.
    json st = hopf_to_json(t), sh = hopf_to_json(h);
    st.erase("name");
    sh.erase("name");
    if (t == h && st.dump() == sh.dump())
      ++identical;
    else
      bad += (bad.empty() ? "" : ", ") + name;
    const auto j = non_cocycle_perturbation(h, 17);
    if (!j) continue;
    ++perturbed;
    try {
      drinfeld_twist(h, *j);
    } catch (const InvalidTwist& e) {
      const auto* cocycle = e.report().find_case("cocycle");
      if (cocycle && cocycle->verdict == Verdict::fail && std::string(e.what()).find("cocycle") != std::string::npos) {
        ++rejected;
        if (name == "sweedler") sweedler_rejected = true;
      }
    }
  }
  const bool ok = bad.empty() && sweedler_rejected && rejected == perturbed;
  return {ok, std::to_string(identical) + "/" + std::to_string(builtin_hopf_list().size()) +
                  " built-ins bit-identical under 1(x)1; non-cocycle perturbations rejected naming the cocycle clause: " +
                  std::to_string(rejected) + "/" + std::to_string(perturbed) + (bad.empty() ? "" : "; differ: " + bad)};
}

template <class B, class Gen>
std::size_t truncation_failures(const B& b, Gen gen, std::uint64_t seed, int count) {
  Rng rng(seed);
  std::size_t failures = 0;
  for (int i = 0; i < count; ++i) {
    const auto x = random_complex(b, rng, {}, gen);
    for (int n : {-1, 0, 1})
      if (!truncation_check(b, x, n).passed()) ++failures;
  }
  return failures;
}

Outcome truncation_criterion() {
  std::string detail;
  std::size_t failures = 0;
  auto record = [&](const std::string& label, std::size_t f) {
    failures += f;
    detail += (detail.empty() ? "" : ", ") + label + (f == 0 ? " ok" : " " + std::to_string(f) + " failures");
  };
  for (const auto& [name, n] : std::vector<std::pair<std::string, int>>{{"sweedler", 0}, {"taft", 3}, {"kC2", 0}}) {
    const HopfPtr h = std::make_shared<const HopfAlgebra>(builtin_hopf(name, n));
    const auto pool = module_pool(h);
    record(h->name(), truncation_failures(module_backend(h), [&](Rng& r) { return random_module(r, pool); }, 9, 50));
  }
  record("A2", truncation_failures(quiver_backend(Quiver::a2()), [](Rng& r) { return random_quiver_rep(r, Quiver::a2()); }, 9, 50));
  record("Z", truncation_failures(GroupBackend(), [](Rng& r) { return random_group(r); }, 9, 50));
  return {failures == 0, "50 complexes per backend, n in {-1, 0, 1}: " + detail};
}

Outcome dual_aisle_criterion() {
  const HopfPtr h = std::make_shared<const HopfAlgebra>(builtin_hopf("sweedler"));
  const ModuleBackend b = module_backend(h);
  const auto pool = module_pool(h);
  Rng rng(10);
  std::size_t inside = 0, nontrivial = 0;
  for (int i = 0; i < 25; ++i) {
    const auto x = random_complex(b, rng, {-3, 0, 4}, [&](Rng& r) { return random_module(r, pool); });
    if (x.hi() > 0) continue;
    if (!cohomology_support(b, x).empty()) ++nontrivial;
    if (in_aisle(support(b, left_dual_complex(b, x).dual), {0, AisleSide::ge})) ++inside;
  }
  return {inside == 25, std::to_string(inside) + "/25 duals in D>=0 (" + std::to_string(nontrivial) +
                            " with nonzero cohomology)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, z6_counterexample_criterion}, {2, kunneth_criterion},     {3, kunneth_negative_control},
      {4, zigzag_criterion},            {5, hopf_axiom_criterion},  {6, a2_functor_criterion},
      {7, deviation_criterion},         {8, twist_criterion},       {9, truncation_criterion},
      {10, dual_aisle_criterion},
  };
  int failed = 0;
  for (const auto& [k, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << "criterion " << k << ": " << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
