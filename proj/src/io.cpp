#include "tenscat/io.hpp"

#include <fstream>
#include <sstream>

namespace tenscat {

namespace {

// A position in a document, carrying its JSON pointer for diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& value() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("field " + (path_.empty() ? std::string("/") : path_) + ": " + msg);
  }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Node operator[](const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing field '") + key + "'");
    return Node(j_.at(key), path_ + "/" + key);
  }

  Node operator[](std::size_t i) const { return Node(j_.at(i), path_ + "/" + std::to_string(i)); }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  std::size_t size(std::size_t expected) const {
    if (size() != expected)
      fail("expected " + std::to_string(expected) + " entries, found " + std::to_string(j_.size()));
    return expected;
  }

  long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long>();
  }

  Index count() const {
    const long v = integer();
    if (v < 0) fail("expected a nonnegative integer");
    return static_cast<Index>(v);
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

 private:
  const json& j_;
  std::string path_;
};

template <class Fn>
auto guarded(const Node& n, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    n.fail(e.what());
  }
}

Scalar read_scalar(const Node& n, const FieldSpec& f) {
  return guarded(n, [&] {
    const json& j = n.value();
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_array()) {
      if (f.kind != FieldKind::cyclotomic) n.fail("coefficient lists are only valid over cyclotomic fields");
      std::vector<mpq_class> c;
      for (std::size_t i = 0; i < j.size(); ++i) {
        const Scalar s = Scalar::parse(n[i].string(), FieldSpec::rationals());
        c.push_back(s.rational_value());
      }
      if (c.size() > static_cast<std::size_t>(f.degree())) n.fail("more coefficients than the field degree");
      return Scalar::from_cyclotomic(f.param, std::move(c));
    }
    n.fail("expected a scalar");
  });
}

Vector read_vector(const Node& n, Index len, const FieldSpec& f) {
  n.size(static_cast<std::size_t>(len));
  Vector v(len);
  for (Index i = 0; i < len; ++i) v(i) = read_scalar(n[static_cast<std::size_t>(i)], f);
  return v;
}

Matrix read_matrix(const Node& n, Index rows, Index cols, const FieldSpec& f) {
  n.size(static_cast<std::size_t>(rows));
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Node row = n[static_cast<std::size_t>(i)];
    row.size(static_cast<std::size_t>(cols));
    for (Index k = 0; k < cols; ++k) m(i, k) = read_scalar(row[static_cast<std::size_t>(k)], f);
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

BigInt read_bigint(const Node& n) {
  const json& j = n.value();
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (!j.is_string()) n.fail("expected an integer");
  return guarded(n, [&] { return BigInt(j.get<std::string>()); });
}

IntMatrix read_int_matrix(const Node& n, Index rows, Index cols) {
  n.size(static_cast<std::size_t>(rows));
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Node row = n[static_cast<std::size_t>(i)];
    row.size(static_cast<std::size_t>(cols));
    for (Index k = 0; k < cols; ++k) m(i, k) = read_bigint(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

FieldSpec read_field(const Node& n) {
  const std::string kind = n["kind"].string();
  if (kind == "q") return FieldSpec::rationals();
  if (kind != "fp" && kind != "cyc") n["kind"].fail("unknown field kind '" + kind + "' (expected q, fp or cyc)");
  const long p = n["parameter"].integer();
  if (p <= 0) n["parameter"].fail("expected a positive integer");
  return guarded(n, [&] {
    return kind == "fp" ? FieldSpec::prime(static_cast<std::uint32_t>(p)) : FieldSpec::cyclotomic(static_cast<std::uint32_t>(p));
  });
}

void check_kind(const Node& n, const char* expected) {
  if (n.has("kind") && n["kind"].string() != expected)
    n["kind"].fail("expected '" + std::string(expected) + "', found '" + n["kind"].string() + "'");
}

HopfAlgebra read_hopf(const Node& n) {
  check_kind(n, "hopf_algebra");
  const Index d = n["dim"].count();
  if (d == 0) n["dim"].fail("dimension must be positive");
  const FieldSpec f = read_field(n["field"]);
  std::vector<Scalar> mult;
  mult.reserve(static_cast<std::size_t>(d * d * d));
  const Node m = n["mult"];
  m.size(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    const Node mi = m[static_cast<std::size_t>(i)];
    mi.size(static_cast<std::size_t>(d));
    for (Index j = 0; j < d; ++j) {
      const Node mij = mi[static_cast<std::size_t>(j)];
      mij.size(static_cast<std::size_t>(d));
      for (Index k = 0; k < d; ++k) mult.push_back(read_scalar(mij[static_cast<std::size_t>(k)], f));
    }
  }
  Vector unit = read_vector(n["unit"], d, f);
  Matrix comult = read_matrix(n["comult"], d * d, d, f);
  Vector counit = read_vector(n["counit"], d, f);
  Matrix antipode = read_matrix(n["antipode"], d, d, f);
  std::optional<Matrix> sinv;
  if (n.has("antipode_inverse")) sinv = read_matrix(n["antipode_inverse"], d, d, f);
  std::string name = n.has("name") ? n["name"].string() : std::string();
  HopfAlgebra h = guarded(n, [&] {
    return HopfAlgebra(FiniteDimAlgebra(f, d, std::move(mult), std::move(unit)), std::move(comult), std::move(counit),
                       std::move(antipode), std::move(sinv), std::move(name));
  });
  if (n.has("generators")) {
    const Node g = n["generators"];
    std::vector<Index> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Index k = g[i].count();
      if (k >= d) g[i].fail("basis index out of range");
      gens.push_back(k);
    }
    h.set_generators(std::move(gens));
  }
  return h;
}

HopfPtr read_algebra_ref(const Node& n) {
  if (n.has("builtin")) {
    const std::string name = n["builtin"].string();
    const int k = n.has("n") ? static_cast<int>(n["n"].integer()) : 0;
    std::optional<FieldSpec> f;
    if (n.has("field")) f = read_field(n["field"]);
    return guarded(n, [&] { return std::make_shared<const HopfAlgebra>(builtin_hopf(name, k, f)); });
  }
  return std::make_shared<const HopfAlgebra>(read_hopf(n));
}

HModule read_module_body(const Node& n, const HopfPtr& h) {
  const Index m = n["dim"].count();
  const Node a = n["action"];
  a.size(static_cast<std::size_t>(h->dim()));
  std::vector<Matrix> action;
  for (Index i = 0; i < h->dim(); ++i) action.push_back(read_matrix(a[static_cast<std::size_t>(i)], m, m, h->field()));
  if (m == 0) return HModule::unchecked(h, 0, std::move(action));
  return guarded(n, [&] { return HModule(h, std::move(action)); });
}

json module_body(const HModule& m) {
  json action = json::array();
  for (const auto& a : m.actions()) action.push_back(matrix_to_json(a));
  return json{{"dim", m.dim()}, {"action", std::move(action)}};
}

Quiver read_quiver(const Node& n) {
  Quiver q;
  q.vertices = static_cast<int>(n["vertices"].count());
  const Node arrows = n["arrows"];
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const Node a = arrows[k];
    a.size(2);
    const long s = a[std::size_t{0}].integer(), t = a[std::size_t{1}].integer();
    if (s < 0 || s >= q.vertices || t < 0 || t >= q.vertices) a.fail("arrow endpoint out of range");
    q.arrows.emplace_back(static_cast<int>(s), static_cast<int>(t));
  }
  return q;
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows) arrows.push_back(json::array({s, t}));
  return json{{"vertices", q.vertices}, {"arrows", std::move(arrows)}};
}

QuiverRep read_rep_body(const Node& n, const Quiver& q, const FieldSpec& f) {
  const Node dn = n["dims"];
  dn.size(static_cast<std::size_t>(q.vertices));
  std::vector<Index> dims;
  for (std::size_t v = 0; v < static_cast<std::size_t>(q.vertices); ++v) dims.push_back(dn[v].count());
  const Node mn = n["maps"];
  mn.size(q.arrows.size());
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto [s, t] = q.arrows[k];
    maps.push_back(read_matrix(mn[k], dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)], f));
  }
  return guarded(n, [&] { return QuiverRep(q, f, std::move(dims), std::move(maps)); });
}

json rep_body(const QuiverRep& v) {
  json maps = json::array();
  for (std::size_t k = 0; k < v.quiver().arrows.size(); ++k) maps.push_back(matrix_to_json(v.map(k)));
  return json{{"dims", v.dims()}, {"maps", std::move(maps)}};
}

FgAbelianGroup read_group(const Node& n) {
  const Index g = n["generators"].count();
  const Index r = n["relation_count"].count();
  IntMatrix rel = read_int_matrix(n["relations"], g, r);
  return guarded(n, [&] { return FgAbelianGroup(g, std::move(rel)); });
}

json group_body(const FgAbelianGroup& a) {
  return json{{"generators", a.generators()},
              {"relation_count", a.relations().cols()},
              {"relations", int_matrix_to_json(a.relations())}};
}

json complex_header(const char* backend, int lo, int hi) {
  return json{{"kind", "complex"}, {"backend", backend}, {"range", json::array({lo, hi})}};
}

// Range and object/differential counts shared by all backends.
struct Frame {
  int lo = 0;
  std::size_t terms = 0;
};

Frame read_frame(const Node& n) {
  const Node r = n["range"];
  r.size(2);
  const long lo = r[std::size_t{0}].integer(), hi = r[std::size_t{1}].integer();
  if (hi < lo - 1) r.fail("range [lo, hi] needs hi >= lo - 1");
  const std::size_t terms = static_cast<std::size_t>(hi - lo + 1);
  n["objects"].size(terms);
  n["differentials"].size(terms == 0 ? 0 : terms - 1);
  return {static_cast<int>(lo), terms};
}

template <class B>
BoundedComplex<B> finish(const Node& n, const B& b, BoundedComplex<B> x) {
  if (const auto k = d_squared_failure(b, x))
    n["differentials"].fail("d^" + std::to_string(*k + 1) + " d^" + std::to_string(*k) + " is not zero");
  return x;
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

json read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_document(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

json field_to_json(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::rationals: return json{{"kind", "q"}, {"parameter", 0}};
    case FieldKind::prime: return json{{"kind", "fp"}, {"parameter", f.param}};
    case FieldKind::cyclotomic: return json{{"kind", "cyc"}, {"parameter", f.param}};
  }
  return {};
}

FieldSpec field_from_json(const json& j) { return read_field(Node(j, "")); }

json scalar_to_json(const Scalar& s) {
  if (s.typed() && s.field().kind == FieldKind::cyclotomic) {
    json c = json::array();
    for (const auto& q : s.cyclotomic_coefficients()) c.push_back(q.get_str());
    return c;
  }
  return s.to_string();
}

json hopf_to_json(const HopfAlgebra& h) {
  const Index d = h.dim();
  json mult = json::array();
  for (Index i = 0; i < d; ++i) {
    json mi = json::array();
    for (Index j = 0; j < d; ++j) {
      json mij = json::array();
      for (Index k = 0; k < d; ++k) mij.push_back(scalar_to_json(h.algebra().mult(i, j, k)));
      mi.push_back(std::move(mij));
    }
    mult.push_back(std::move(mi));
  }
  json out{{"kind", "hopf_algebra"},
           {"name", h.name()},
           {"dim", d},
           {"field", field_to_json(h.field())},
           {"mult", std::move(mult)},
           {"unit", vector_to_json(h.algebra().unit())},
           {"comult", matrix_to_json(h.comult())},
           {"counit", vector_to_json(h.counit())},
           {"antipode", matrix_to_json(h.antipode())}};
  if (h.antipode_inverse()) out["antipode_inverse"] = matrix_to_json(*h.antipode_inverse());
  out["generators"] = h.generators();
  return out;
}

HopfAlgebra hopf_from_json(const json& j) { return read_hopf(Node(j, "")); }

json module_to_json(const HModule& m) {
  json out{{"kind", "module"}, {"algebra", hopf_to_json(*m.algebra())}};
  out.update(module_body(m));
  return out;
}

HModule module_from_json(const json& j) {
  const Node n(j, "");
  check_kind(n, "module");
  return read_module_body(n, read_algebra_ref(n["algebra"]));
}

HModule module_from_json(const json& j, const HopfPtr& h) {
  const Node n(j, "");
  check_kind(n, "module");
  const HopfPtr own = read_algebra_ref(n["algebra"]);
  if (!(*own == *h)) n["algebra"].fail("module is over a different algebra");
  return read_module_body(n, h);
}

json quiver_rep_to_json(const QuiverRep& v) {
  json out{{"kind", "quiver_rep"}, {"field", field_to_json(v.field())}, {"quiver", quiver_to_json(v.quiver())}};
  out.update(rep_body(v));
  return out;
}

QuiverRep quiver_rep_from_json(const json& j) {
  const Node n(j, "");
  check_kind(n, "quiver_rep");
  return read_rep_body(n, read_quiver(n["quiver"]), read_field(n["field"]));
}

json complex_to_json(const ModuleBackend& b, const ModuleComplex& x) {
  json out = complex_header("module", x.lo, x.hi());
  out["algebra"] = hopf_to_json(x.empty() ? *b.unit().algebra() : *x.objects.front().algebra());
  out["objects"] = json::array();
  for (const auto& o : x.objects) out["objects"].push_back(module_body(o));
  out["differentials"] = json::array();
  for (const auto& d : x.diffs) out["differentials"].push_back(matrix_to_json(d.matrix));
  return out;
}

json complex_to_json(const QuiverBackend& b, const QuiverComplex& x) {
  const QuiverRep& any = x.empty() ? b.unit() : x.objects.front();
  json out = complex_header("quiver", x.lo, x.hi());
  out["field"] = field_to_json(any.field());
  out["quiver"] = quiver_to_json(any.quiver());
  out["objects"] = json::array();
  for (const auto& o : x.objects) out["objects"].push_back(rep_body(o));
  out["differentials"] = json::array();
  for (const auto& d : x.diffs) {
    json comps = json::array();
    for (const auto& m : d.maps) comps.push_back(matrix_to_json(m));
    out["differentials"].push_back(std::move(comps));
  }
  return out;
}

json complex_to_json(const GroupBackend&, const GroupComplex& x) {
  json out = complex_header("group", x.lo, x.hi());
  out["objects"] = json::array();
  for (const auto& o : x.objects) out["objects"].push_back(group_body(o));
  out["differentials"] = json::array();
  for (const auto& d : x.diffs) out["differentials"].push_back(int_matrix_to_json(d.matrix()));
  return out;
}

AnyComplex complex_from_json(const json& j) {
  const Node n(j, "");
  check_kind(n, "complex");
  const std::string backend = n["backend"].string();
  const Frame fr = read_frame(n);
  const Node objs = n["objects"], diffs = n["differentials"];
  if (backend == "module") {
    const HopfPtr h = read_algebra_ref(n["algebra"]);
    const ModuleBackend b = module_backend(h);
    ModuleComplex x{fr.lo, {}, {}};
    for (std::size_t i = 0; i < fr.terms; ++i) x.objects.push_back(read_module_body(objs[i], h));
    for (std::size_t i = 0; i + 1 < fr.terms; ++i) {
      const HModule &s = x.objects[i], &t = x.objects[i + 1];
      Matrix m = read_matrix(diffs[i], t.dim(), s.dim(), h->field());
      x.diffs.push_back(guarded(diffs[i], [&] { return ModuleHom::make(s, t, std::move(m)); }));
    }
    return LoadedComplex<ModuleBackend>{b, finish(n, b, std::move(x))};
  }
  if (backend == "quiver") {
    const Quiver q = read_quiver(n["quiver"]);
    const FieldSpec f = read_field(n["field"]);
    const QuiverBackend b = quiver_backend(q, f);
    QuiverComplex x{fr.lo, {}, {}};
    for (std::size_t i = 0; i < fr.terms; ++i) x.objects.push_back(read_rep_body(objs[i], q, f));
    for (std::size_t i = 0; i + 1 < fr.terms; ++i) {
      const QuiverRep &s = x.objects[i], &t = x.objects[i + 1];
      const Node d = diffs[i];
      d.size(static_cast<std::size_t>(q.vertices));
      Components comps;
      for (std::size_t v = 0; v < static_cast<std::size_t>(q.vertices); ++v)
        comps.push_back(read_matrix(d[v], t.dims()[v], s.dims()[v], f));
      x.diffs.push_back(guarded(d, [&] { return QuiverHom::make(s, t, std::move(comps)); }));
    }
    return LoadedComplex<QuiverBackend>{b, finish(n, b, std::move(x))};
  }
  if (backend == "group") {
    const GroupBackend b;
    GroupComplex x{fr.lo, {}, {}};
    for (std::size_t i = 0; i < fr.terms; ++i) x.objects.push_back(read_group(objs[i]));
    for (std::size_t i = 0; i + 1 < fr.terms; ++i) {
      const FgAbelianGroup &s = x.objects[i], &t = x.objects[i + 1];
      IntMatrix m = read_int_matrix(diffs[i], t.generators(), s.generators());
      x.diffs.push_back(guarded(diffs[i], [&] { return GroupHom(s, t, std::move(m)); }));
    }
    return LoadedComplex<GroupBackend>{b, finish(n, b, std::move(x))};
  }
  n["backend"].fail("unknown backend '" + backend + "' (expected module, quiver or group)");
}

std::string document_kind(const json& j) {
  const Node n(j, "");
  if (!j.is_object()) n.fail("expected an object");
  return n.has("kind") ? n["kind"].string() : std::string("hopf_algebra");
}

}  // namespace tenscat
