#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tenscat/io.hpp"
#include "tenscat/module.hpp"

using namespace tenscat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("tenscat_cli_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path workdir() {
  static const Scratch s;
  return s.dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args) {
  const fs::path err = workdir() / "stderr.txt";
  const std::string cmd = "cd '" + workdir().string() + "' && '" TENSCAT_BIN "' " + args + " 2>'" + err.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

json structured(const Run& r) { return json::parse(r.out); }

const json* find_case(const json& report, const std::string& id) {
  for (const auto& c : report.at("cases"))
    if (c.at("id") == id) return &c;
  return nullptr;
}

fs::path file(const std::string& name) { return workdir() / name; }

}  // namespace

TEST_CASE("algebra check on built-ins and on a corrupted file") {
  CHECK(cli("algebra check --builtin sweedler").code == 0);
  const Run taft = cli("algebra check --builtin taft --n 3 --format structured");
  CHECK(taft.code == 0);
  const json taft_report = structured(taft);
  CHECK(find_case(taft_report, "structure")->at("data").at("dim") == 9);

  REQUIRE(cli("algebra emit --builtin sweedler --out sweedler.json").code == 0);
  json doc = read_document(file("sweedler.json"));
  doc["comult"][1][2] = "1";  // Delta(x) gains a 1 (x) g term
  write_document(file("broken.json"), doc);
  const Run bad = cli("algebra check broken.json --format structured");
  CHECK(bad.code == 1);
  const json bad_report = structured(bad);
  const json* coassoc = find_case(bad_report, "coassociativity");
  REQUIRE(coassoc != nullptr);
  CHECK(coassoc->at("verdict") == "fail");
  CHECK(coassoc->at("data").at("triple").size() == 3);
}

TEST_CASE("verify suites report the documented exit codes") {
  const Run z6 = cli("verify z6-counterexample --format structured");
  CHECK(z6.code == 1);
  const json r = structured(z6);
  CHECK(find_case(r, "H^-1")->at("data").at("invariant_factors") == json::array({2}));
  CHECK(find_case(r, "H^0")->at("data").at("invariant_factors") == json::array({2}));
  CHECK(cli("verify z6-counterexample").out.find("[2]") != std::string::npos);

  CHECK(cli("verify kunneth --builtin sweedler --cases 50 --seed 7").code == 0);
  CHECK(cli("verify a2-functor").code == 0);
  CHECK(cli("verify unit --builtin kC2").code == 0);
  CHECK(cli("verify kunneth --builtin z --cases 3").code == 1);
  CHECK(exit_code(Verdict::undetermined) == 3);
}

TEST_CASE("module operations") {
  REQUIRE(cli("module emit --builtin kC2 --module sign --out sign.json").code == 0);
  const Run t = cli("module tensor sign.json sign.json --out sign2.json --format structured");
  CHECK(t.code == 0);
  const json tensor_report = structured(t);
  const json* cmp = find_case(tensor_report, "compare_with_unit");
  REQUIRE(cmp != nullptr);
  CHECK(cmp->at("data").at("verdict") == "iso");
  CHECK(cmp->at("data").contains("witness"));
  const HModule sq = module_from_json(read_document(file("sign2.json")));
  CHECK(is_isomorphic(sq, trivial_module(sq.algebra())).verdict == IsoVerdict::iso);

  REQUIRE(cli("module emit --builtin sweedler --module projective --out proj.json").code == 0);
  const Run d = cli("module dual proj.json --out proj_dual.json --format structured");
  CHECK(d.code == 0);
  const json dual_report = structured(d);
  CHECK(find_case(dual_report, "zigzag_object")->at("verdict") == "pass");
  CHECK(find_case(dual_report, "zigzag_dual")->at("verdict") == "pass");
  const HModule p = module_from_json(read_document(file("proj.json")));
  CHECK(module_from_json(read_document(file("proj_dual.json"))) == left_dual_module(p).dual);

  CHECK(cli("module hom sign.json proj.json").code == 2);
  CHECK(cli("module tensor sign.json proj.json").code == 2);
  CHECK(cli("module iso sign.json sign.json").code == 0);
  CHECK(cli("module iso sign2.json sign.json").code == 1);

  REQUIRE(cli("module emit --builtin a2 --module p2 --out p2.json").code == 0);
  CHECK(cli("module tensor p2.json p2.json").code == 0);
  CHECK(cli("module dual p2.json").code == 2);
  CHECK(cli("module hom p2.json sign.json").code == 2);
}

TEST_CASE("complex operations") {
  REQUIRE(cli("complex random --builtin sweedler --seed 3 --out x.json").code == 0);
  REQUIRE(cli("complex random --builtin sweedler --seed 4 --out y.json").code == 0);
  CHECK(cli("complex check x.json").code == 0);
  CHECK(cli("complex tensor x.json y.json --out xy.json").code == 0);
  CHECK(cli("complex dual x.json --side right --out xd.json").code == 0);
  CHECK(cli("complex truncate xy.json --n 0 --side ge --out xt.json").code == 0);
  REQUIRE(cli("complex random --builtin z --seed 3 --out z.json").code == 0);
  CHECK(cli("complex dual z.json").code == 2);
  CHECK(cli("complex tensor x.json z.json").code == 2);
}

TEST_CASE("input errors exit with 2 and a diagnostic") {
  std::ofstream(file("garbage.json")) << "{\n  \"dim\": 4,\n  \"field\": }\n";
  const Run g = cli("algebra check garbage.json");
  CHECK(g.code == 2);
  CHECK(g.err.find("line 3") != std::string::npos);
  json doc = read_document(file("sweedler.json"));
  doc["antipode"][0].erase(0);
  write_document(file("short.json"), doc);
  const Run s = cli("algebra check short.json");
  CHECK(s.code == 2);
  CHECK(s.err.find("field /antipode/0") != std::string::npos);
  CHECK(cli("verify frobnicate").code == 2);
  CHECK(cli("verify kunneth --format yaml").code == 2);
  CHECK(cli("algebra check --builtin taft --n 2 --field fp:2").code == 2);
  CHECK(cli("algebra check missing.json").code == 2);
  CHECK(cli("verify dual-zigzag --builtin z").code == 2);
}

TEST_CASE("structured output is deterministic for a fixed seed") {
  for (const std::string cmd : {"verify kunneth --builtin kC2 --cases 10 --seed 5 --format structured",
                                "verify deviation --builtin sweedler --cases 16 --seed 5 --format structured",
                                "verify aisle --builtin a2 --cases 5 --seed 2 --format structured",
                                "complex random --builtin taft --n 3 --seed 9 --format structured"}) {
    CAPTURE(cmd);
    const Run a = cli(cmd), b = cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(cli("verify kunneth --builtin kC2 --cases 10 --seed 5 --format structured").out !=
        cli("verify kunneth --builtin kC2 --cases 10 --seed 6 --format structured").out);
}

TEST_CASE("emitted files re-parse to equal values") {
  REQUIRE(cli("algebra emit --builtin taft --n 3 --out taft3.json").code == 0);
  const HopfAlgebra h = hopf_from_json(read_document(file("taft3.json")));
  CHECK(h == builtin_hopf("taft", 3));
  CHECK(cli("algebra emit taft3.json --out taft3b.json").code == 0);
  CHECK(slurp(file("taft3.json")) == slurp(file("taft3b.json")));

  for (const char* builtin : {"sweedler", "a2", "z"}) {
    CAPTURE(builtin);
    REQUIRE(cli(std::string("complex random --builtin ") + builtin + " --seed 12 --out r.json").code == 0);
    const json first = read_document(file("r.json"));
    std::visit([&](const auto& l) { CHECK(complex_to_json(l.backend, l.complex) == first); }, complex_from_json(first));
  }
}
