#include "tenscat/report.hpp"

#include <sstream>
#include <stdexcept>

namespace tenscat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "undetermined") return Verdict::undetermined;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::undetermined || b == Verdict::undetermined) return Verdict::undetermined;
  return Verdict::pass;
}

CaseRecord& VerificationReport::add_case(std::string id, Verdict v, json data) {
  verdict = combine(verdict, v);
  cases.push_back(CaseRecord{std::move(id), v, std::move(data)});
  return cases.back();
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.cases) add_case(prefix + c.id, c.verdict, c.data);
  for (const auto& n : other.notes) notes.push_back(n);
  verdict = combine(verdict, other.verdict);
}

const CaseRecord* VerificationReport::find_case(const std::string& id) const {
  for (const auto& c : cases)
    if (c.id == id) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json j;
  j["check"] = check;
  j["verdict"] = to_string(verdict);
  j["cases"] = json::array();
  for (const auto& c : cases) j["cases"].push_back({{"id", c.id}, {"verdict", to_string(c.verdict)}, {"data", c.data}});
  j["notes"] = notes;
  return j;
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r(j.at("check").get<std::string>());
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const auto& c : j.at("cases"))
    r.cases.push_back(CaseRecord{c.at("id").get<std::string>(), verdict_from_string(c.at("verdict").get<std::string>()), c.at("data")});
  for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << check << ": " << to_string(verdict) << "\n";
  std::size_t failed = 0, undetermined = 0;
  for (const auto& c : cases) {
    if (c.verdict == Verdict::fail) ++failed;
    if (c.verdict == Verdict::undetermined) ++undetermined;
  }
  os << "  cases: " << cases.size() << " (" << failed << " failed, " << undetermined << " undetermined)\n";
  // Passing cases are summarized; the interesting ones are spelled out.
  for (const auto& c : cases) {
    if (c.verdict == Verdict::pass && cases.size() > 12) continue;
    os << "  [" << to_string(c.verdict) << "] " << c.id;
    if (!c.data.empty()) os << "  " << c.data.dump();
    os << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::undetermined: return 3;
  }
  return 1;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar& s = m(i, j);
      if (s.typed() && s.field().kind == FieldKind::cyclotomic) {
        json c = json::array();
        for (const auto& q : s.cyclotomic_coefficients()) c.push_back(q.get_str());
        row.push_back(c);
      } else {
        row.push_back(s.to_string());
      }
    }
    rows.push_back(row);
  }
  return rows;
}

json int_matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json bigints_to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.compare(BigInt(std::numeric_limits<long>::max())) <= 0 && x.compare(BigInt(std::numeric_limits<long>::min())) >= 0)
      out.push_back(x.convert_to<long>());
    else
      out.push_back(x.str());
  }
  return out;
}

}  // namespace tenscat
