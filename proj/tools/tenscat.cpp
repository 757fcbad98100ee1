// tenscat: build algebras, modules and complexes from files or built-ins,
// and run the verification suites.
//
//   tenscat <algebra|module|complex|verify> <subcommand> [FILES...]
//     [--builtin NAME] [--n K] [--field q|fp:P|cyc:N] [--cases N] [--seed S]
//     [--format text|structured] [--out PATH]
//
// Exit codes: 0 pass, 1 fail, 2 input error, 3 undetermined.

#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "tenscat/dual.hpp"
#include "tenscat/io.hpp"
#include "tenscat/random.hpp"
#include "tenscat/suites.hpp"
#include "tenscat/verify.hpp"

using namespace tenscat;

namespace {

constexpr int input_error = 2;

struct Options {
  std::string builtin;
  int n = 0;
  std::string field;
  int cases = 20;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::vector<std::string> files;
  std::string side;
  std::string module = "trivial";

  std::optional<FieldSpec> field_spec() const {
    if (field.empty()) return std::nullopt;
    return FieldSpec::parse(field);
  }
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------------ output

// Emitted objects go to --out when given; otherwise they ride along in the
// report so nothing is lost.
void emit_object(VerificationReport& r, const Options& o, const json& doc) {
  if (!o.out.empty()) {
    write_document(o.out, doc);
    r.add_case("object", Verdict::pass, json{{"path", o.out}, {"kind", doc.value("kind", "hopf_algebra")}});
  } else {
    r.add_case("object", Verdict::pass, doc);
  }
}

int finish(const VerificationReport& r, const Options& o, bool report_to_out = false) {
  const std::string text = o.format == "structured" ? r.to_json().dump(2) + "\n" : r.to_text();
  if (report_to_out && !o.out.empty())
    write_document(o.out, r.to_json());
  std::cout << text;
  return exit_code(r.verdict);
}

void require_files(const Options& o, std::size_t n, const char* what) {
  if (o.files.size() != n) throw InputError(std::string(what) + " expects " + std::to_string(n) + " input file(s)");
}

// ------------------------------------------------------------------ algebra

HopfAlgebra load_algebra(const Options& o) {
  if (!o.files.empty()) {
    require_files(o, 1, "algebra");
    return hopf_from_json(read_document(o.files.front()));
  }
  if (o.builtin.empty()) throw InputError("give an algebra file or --builtin NAME");
  return builtin_hopf(o.builtin, o.n, o.field_spec());
}

std::string algebra_label(const HopfAlgebra& h) { return h.name().empty() ? std::string("algebra") : h.name(); }

int cmd_algebra_check(const Options& o) {
  const HopfAlgebra h = load_algebra(o);
  VerificationReport r = check_hopf_axioms(h);
  r.cases.insert(r.cases.begin(),
                 CaseRecord{"structure", Verdict::pass, json{{"name", h.name()}, {"dim", h.dim()}, {"field", h.field().to_string()}}});
  return finish(r, o, true);
}

int cmd_algebra_emit(const Options& o) {
  const HopfAlgebra h = load_algebra(o);
  VerificationReport r("algebra_emit");
  r.note(algebra_label(h) + ": dim " + std::to_string(h.dim()));
  emit_object(r, o, hopf_to_json(h));
  return finish(r, o);
}

int cmd_algebra_twist(const Options& o) {
  const HopfAlgebra h = load_algebra(o);
  VerificationReport r("twist");
  const HopfAlgebra t = drinfeld_twist(h, trivial_twist(h));
  r.add_case("trivial_twist_is_identity", t == h ? Verdict::pass : Verdict::fail);
  r.add_case("twisted_axioms", check_hopf_axioms(t).verdict, json{{"twist", "1 (x) 1"}});
  if (const auto bad = non_cocycle_perturbation(h, o.seed)) {
    try {
      drinfeld_twist(h, *bad);
      r.add_case("perturbation_rejected", Verdict::fail, json{{"element", json::array()}});
    } catch (const InvalidTwist& e) {
      json failed = json::array();
      for (const auto& c : e.report().cases)
        if (c.verdict != Verdict::pass) failed.push_back(c.id);
      r.add_case("perturbation_rejected", Verdict::pass, json{{"reason", e.what()}, {"failed_clauses", failed}});
    }
  } else {
    r.note("no non-cocycle perturbation found for this algebra");
  }
  return finish(r, o);
}

// ------------------------------------------------------------------ modules

using AnyObject = std::variant<HModule, QuiverRep>;

AnyObject load_object(const std::string& path) {
  const json doc = read_document(path);
  const std::string kind = document_kind(doc);
  if (kind == "module") return module_from_json(doc);
  if (kind == "quiver_rep") return quiver_rep_from_json(doc);
  throw InputError(path + ": expected a module or quiver_rep document, found " + kind);
}

json object_to_json(const HModule& m) { return module_to_json(m); }
json object_to_json(const QuiverRep& v) { return quiver_rep_to_json(v); }
json object_summary(const HModule& m) { return json{{"dim", m.dim()}}; }
json object_summary(const QuiverRep& v) { return json{{"dims", v.dims()}}; }
HModule unit_like(const HModule& m) { return trivial_module(m.algebra()); }
QuiverRep unit_like(const QuiverRep& v) { return unit_rep(v.quiver(), v.field()); }
HModule tensor_pair(const HModule& a, const HModule& b) { return tensor_module(a, b); }
QuiverRep tensor_pair(const QuiverRep& a, const QuiverRep& b) { return tensor_rep(a, b); }
json witness_json(const ModuleHom& f) { return matrix_to_json(f.matrix); }
json witness_json(const QuiverHom& f) {
  json out = json::array();
  for (const auto& m : f.maps) out.push_back(matrix_to_json(m));
  return out;
}
void require_compatible(const HModule& a, const HModule& b) {
  if (!same_algebra(a, b)) throw InputError("modules are over different algebras");
}
void require_compatible(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.quiver() == b.quiver()) || !(a.field() == b.field()))
    throw InputError("representations are of different quivers or over different fields");
}

template <class Fn>
auto on_pair(const AnyObject& a, const AnyObject& b, Fn fn) {
  if (a.index() != b.index()) throw InputError("cannot combine a module with a quiver representation");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        require_compatible(x, y);
        return fn(x, y);
      },
      a);
}

template <class T>
json iso_case(VerificationReport& r, const std::string& id, const T& a, const T& b, bool verdict_counts) {
  const auto iso = is_isomorphic(a, b);
  json data{{"verdict", to_string(iso.verdict)}, {"reason", iso.reason}};
  if (iso.witness) data["witness"] = witness_json(*iso.witness);
  Verdict v = iso.verdict == IsoVerdict::iso ? Verdict::pass
              : iso.verdict == IsoVerdict::not_iso ? Verdict::fail
                                                   : Verdict::undetermined;
  r.add_case(id, verdict_counts ? v : Verdict::pass, data);
  return data;
}

HModule builtin_module(const Options& o) {
  const std::string name = o.builtin.empty() ? std::string("sweedler") : o.builtin;
  const HopfPtr h = std::make_shared<const HopfAlgebra>(builtin_hopf(name, o.n, o.field_spec()));
  if (o.module == "trivial") return trivial_module(h);
  if (o.module == "regular") return regular_module(h);
  if (o.module == "sign") return sign_module(h);
  if (o.module == "character") return sweedler_character(h);
  if (o.module == "projective") return sweedler_projective(h);
  throw InputError("unknown module '" + o.module + "' (trivial, regular, sign, character, projective, s1, s2, p2)");
}

QuiverRep builtin_rep(const Options& o) {
  const FieldSpec f = o.field_spec().value_or(FieldSpec::rationals());
  if (o.module == "trivial") return unit_rep(Quiver::a2(), f);
  if (o.module == "s1") return a2_s1(f);
  if (o.module == "s2") return a2_s2(f);
  if (o.module == "p2") return a2_p2(f);
  throw InputError("unknown A2 representation '" + o.module + "' (trivial, s1, s2, p2)");
}

int cmd_module_emit(const Options& o) {
  VerificationReport r("module_emit");
  if (o.builtin == "a2") {
    const QuiverRep v = builtin_rep(o);
    r.note("A2 representation " + o.module);
    emit_object(r, o, quiver_rep_to_json(v));
  } else {
    const HModule m = builtin_module(o);
    r.note(o.module + " module, dim " + std::to_string(m.dim()));
    emit_object(r, o, module_to_json(m));
  }
  return finish(r, o);
}

int cmd_module_tensor(const Options& o) {
  require_files(o, 2, "module tensor");
  const AnyObject a = load_object(o.files[0]), b = load_object(o.files[1]);
  VerificationReport r("module_tensor");
  on_pair(a, b, [&](const auto& x, const auto& y) {
    const auto t = tensor_pair(x, y);
    r.add_case("result", Verdict::pass, json{{"left", object_summary(x)}, {"right", object_summary(y)}, {"tensor", object_summary(t)}});
    const auto u = unit_like(t);
    const json iso = iso_case(r, "compare_with_unit", t, u, false);
    if (iso["verdict"] == "iso") r.note("the tensor product is isomorphic to the unit object");
    emit_object(r, o, object_to_json(t));
    return 0;
  });
  return finish(r, o);
}

int cmd_module_dual(const Options& o) {
  require_files(o, 1, "module dual");
  const AnyObject a = load_object(o.files[0]);
  if (!std::holds_alternative<HModule>(a)) throw NonRigidBackend("quiver representations have no duals here");
  const HModule& m = std::get<HModule>(a);
  if (!o.side.empty() && o.side != "left" && o.side != "right") throw InputError("--side must be left or right");
  const bool left = o.side != "right";
  const DualData d = left ? left_dual_module(m) : right_dual_module(m);
  VerificationReport r = check_duality(m, d, left);
  r.check = left ? "left_dual" : "right_dual";
  r.note(std::string(left ? "left" : "right") + " dual of a " + std::to_string(m.dim()) + "-dimensional module; zig-zag identities checked exactly");
  emit_object(r, o, module_to_json(d.dual));
  return finish(r, o);
}

int cmd_module_hom(const Options& o) {
  require_files(o, 2, "module hom");
  const AnyObject a = load_object(o.files[0]), b = load_object(o.files[1]);
  VerificationReport r("module_hom");
  on_pair(a, b, [&](const auto& x, const auto& y) {
    json basis = json::array();
    for (const auto& f : hom_space(x, y)) basis.push_back(witness_json(f));
    r.add_case("hom_space", Verdict::pass, json{{"dim", basis.size()}, {"basis", std::move(basis)}});
    return 0;
  });
  return finish(r, o);
}

int cmd_module_iso(const Options& o) {
  require_files(o, 2, "module iso");
  const AnyObject a = load_object(o.files[0]), b = load_object(o.files[1]);
  VerificationReport r("module_iso");
  on_pair(a, b, [&](const auto& x, const auto& y) {
    iso_case(r, "isomorphic", x, y, true);
    return 0;
  });
  return finish(r, o);
}

// ------------------------------------------------------------------ complexes

template <class Fn>
auto with_complex(const std::string& path, Fn fn) {
  return std::visit([&](const auto& l) { return fn(l.backend, l.complex); }, complex_from_json(read_document(path)));
}

int cmd_complex_check(const Options& o) {
  require_files(o, 1, "complex check");
  VerificationReport r("complex");
  with_complex(o.files[0], [&](const auto& b, const auto& x) {
    r.add_case("d_squared", Verdict::pass, json{{"range", json::array({x.lo, x.hi()})}});
    const Support s = cohomology_support(b, x);
    r.add_case("cohomology", Verdict::pass, json{{"support", s}, {"groups", support_json(b, x, s)}});
    r.add_case("heart_membership", Verdict::pass, json{{"in_heart", heart_membership(b, x)}});
    return 0;
  });
  return finish(r, o);
}

int cmd_complex_tensor(const Options& o) {
  require_files(o, 2, "complex tensor");
  const AnyComplex a = complex_from_json(read_document(o.files[0]));
  const AnyComplex c = complex_from_json(read_document(o.files[1]));
  if (a.index() != c.index()) throw InputError("complexes live over different backends");
  VerificationReport r("complex_tensor");
  std::visit(
      [&](const auto& lx) {
        using L = std::decay_t<decltype(lx)>;
        const L& ly = std::get<L>(c);
        const auto& b = lx.backend;
        if constexpr (std::is_same_v<L, LoadedComplex<ModuleBackend>>) {
          if (!lx.complex.empty() && !ly.complex.empty())
            require_compatible(lx.complex.objects.front(), ly.complex.objects.front());
        } else if constexpr (std::is_same_v<L, LoadedComplex<QuiverBackend>>) {
          require_compatible(b.unit(), ly.backend.unit());
        }
        r.absorb(kunneth_check(b, lx.complex, ly.complex), "kunneth/");
        emit_object(r, o, complex_to_json(b, total_tensor(b, lx.complex, ly.complex)));
      },
      a);
  return finish(r, o);
}

int cmd_complex_dual(const Options& o) {
  require_files(o, 1, "complex dual");
  if (!o.side.empty() && o.side != "left" && o.side != "right") throw InputError("--side must be left or right");
  const bool left = o.side != "right";
  VerificationReport r(left ? "left_dual_complex" : "right_dual_complex");
  with_complex(o.files[0], [&](const auto& b, const auto& x) {
    using B = std::decay_t<decltype(b)>;
    if constexpr (!std::is_same_v<B, ModuleBackend>) {
      left_dual_complex(b, x);
    } else {
      const DualComplex d = left ? left_dual_complex(b, x) : right_dual_complex(b, x);
      r.absorb(check_dual_complex(b, x, d, left), "");
      emit_object(r, o, complex_to_json(b, d.dual));
    }
    return 0;
  });
  return finish(r, o);
}

int cmd_complex_truncate(const Options& o) {
  require_files(o, 1, "complex truncate");
  if (!o.side.empty() && o.side != "le" && o.side != "ge") throw InputError("--side must be le or ge for truncation");
  VerificationReport r("truncation");
  with_complex(o.files[0], [&](const auto& b, const auto& x) {
    r.absorb(truncation_check(b, x, o.n), "");
    const auto t = o.side != "ge" ? truncate_le(b, x, o.n) : truncate_ge(b, x, o.n);
    emit_object(r, o, complex_to_json(b, t.complex));
    return 0;
  });
  return finish(r, o);
}

int cmd_complex_random(const Options& o) {
  VerificationReport r("complex_random");
  Rng rng(o.seed);
  const ComplexShape shape;
  const std::string name = o.builtin.empty() ? std::string("sweedler") : o.builtin;
  if (name == "z") {
    const GroupBackend b;
    emit_object(r, o, complex_to_json(b, random_complex(b, rng, shape, [](Rng& g) { return random_group(g); })));
  } else if (name == "a2") {
    const FieldSpec f = o.field_spec().value_or(FieldSpec::rationals());
    const QuiverBackend b = quiver_backend(Quiver::a2(), f);
    emit_object(r, o, complex_to_json(b, random_complex(b, rng, shape, [&](Rng& g) { return random_quiver_rep(g, Quiver::a2(), 4, f); })));
  } else {
    const HopfPtr h = std::make_shared<const HopfAlgebra>(builtin_hopf(name, o.n, o.field_spec()));
    const ModuleBackend b = module_backend(h);
    const auto pool = module_pool(h);
    emit_object(r, o, complex_to_json(b, random_complex(b, rng, shape, [&](Rng& g) { return random_module(g, pool); })));
  }
  return finish(r, o);
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const Options& o) {
  SuiteConfig c;
  if (!o.builtin.empty()) c.builtin = o.builtin;
  c.n = o.n;
  c.field = o.field_spec();
  c.cases = o.cases;
  c.seed = o.seed;
  if (c.cases < 0) throw InputError("--cases must be nonnegative");
  VerificationReport r;
  if (suite == "kunneth") r = kunneth_suite(c);
  else if (suite == "aisle") r = aisle_suite(c);
  else if (suite == "deviation") r = deviation_suite(c);
  else if (suite == "reduced") r = reduced_suite(c);
  else if (suite == "unit") r = unit_suite(c);
  else if (suite == "dual-zigzag") r = dual_zigzag_suite(c);
  else if (suite == "z6-counterexample") r = z6_counterexample();
  else if (suite == "a2-functor") r = a2_functor_example(o.n > 0 ? o.n : 3);
  else throw InputError("unknown suite '" + suite + "'");
  return finish(r, o, true);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("files", o.files, "Input files");
  cmd->add_option("--builtin", o.builtin, "Built-in algebra or backend: sweedler, taft, kC2, kS3, ..., a2, z");
  cmd->add_option("--n", o.n, "Parameter of the built-in (taft n, C_n order, truncation degree, functor bound)");
  cmd->add_option("--field", o.field, "Field: q, fp:P or cyc:N");
  cmd->add_option("--cases", o.cases, "Number of random cases");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", o.out, "Output path for emitted objects or reports");
  cmd->add_option("--side", o.side, "left or right for duals, le or ge for truncation");
  cmd->add_option("--module", o.module, "Built-in module for 'module emit'");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact checks for tensor categories, t-structures and Hopf algebra modules", "tenscat"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  struct Group {
    const char* name;
    const char* help;
    std::vector<std::tuple<const char*, const char*, std::function<int(const Options&)>>> subs;
  };
  const std::vector<Group> groups = {
      {"algebra", "Hopf algebras", {{"check", "Check the Hopf axioms", cmd_algebra_check},
        {"emit", "Write an algebra file", cmd_algebra_emit},
        {"twist", "Twist by a 2-cocycle and recheck", cmd_algebra_twist}}},
      {"module",
       "Modules and quiver representations",
       {{"emit", "Write a built-in module file", cmd_module_emit},
        {"tensor", "Tensor two modules", cmd_module_tensor},
        {"dual", "Left or right dual with zig-zag check", cmd_module_dual},
        {"hom", "Basis of the hom space", cmd_module_hom},
        {"iso", "Decide isomorphism", cmd_module_iso}}},
      {"complex",
       "Bounded complexes",
       {{"check", "Validate and report cohomology", cmd_complex_check},
        {"tensor", "Total tensor with Kunneth check", cmd_complex_tensor},
        {"dual", "Dual complex", cmd_complex_dual},
        {"truncate", "Canonical truncation at --n", cmd_complex_truncate},
        {"random", "Write a random complex", cmd_complex_random}}},
  };
  for (const auto& g : groups) {
    CLI::App* group = app.add_subcommand(g.name, g.help);
    group->require_subcommand(1);
    for (const auto& [name, help, fn] : g.subs) {
      CLI::App* sub = group->add_subcommand(name, help);
      add_common(sub, o);
      sub->callback([&action, &o, fn = fn] { action = [&o, fn] { return fn(o); }; });
    }
  }
  CLI::App* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> suites = {
      {"kunneth", "Cohomology of total tensors against the Kunneth formula"},
      {"aisle", "Tensor closure of the aisle D<=0"},
      {"deviation", "Search for a deviation from the standard t-structure"},
      {"reduced", "Tensor-reducedness of nonzero objects"},
      {"unit", "Unit concentrated in the heart"},
      {"dual-zigzag", "Zig-zag identities for module duals"},
      {"z6-counterexample", "Z/6 tensor complex with cohomology outside degree 0"},
      {"a2-functor", "The functor F with F o F = 0 on A2 representations"},
  };
  for (const auto& [suite, help] : suites) {
    CLI::App* sub = verify->add_subcommand(suite, help);
    add_common(sub, o);
    sub->callback([&action, &o, s = std::string(suite)] { action = [&o, s] { return cmd_verify(s, o); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "tenscat: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
