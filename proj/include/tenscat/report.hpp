#pragma once

// Structured outcome of a verification run. The JSON schema is stable:
//   { "check": str, "verdict": "pass"|"fail"|"undetermined",
//     "cases": [ { "id": str, "verdict": ..., "data": {...} } ],
//     "notes": [str] }
// Nothing time- or address-dependent goes into a report, so a fixed seed
// reproduces it byte for byte.

#include <string>
#include <vector>

#include "json.hpp"

#include "tenscat/integer.hpp"
#include "tenscat/matrix.hpp"

namespace tenscat {

using json = nlohmann::ordered_json;

enum class Verdict { pass, fail, undetermined };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);
/// fail dominates undetermined, which dominates pass.
Verdict combine(Verdict a, Verdict b);

struct CaseRecord {
  std::string id;
  Verdict verdict = Verdict::pass;
  json data = json::object();
};

struct VerificationReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  std::vector<CaseRecord> cases;
  std::vector<std::string> notes;

  explicit VerificationReport(std::string name = {}) : check(std::move(name)) {}

  CaseRecord& add_case(std::string id, Verdict v, json data = json::object());
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Appends all cases and notes of `other`, prefixing case ids.
  void absorb(const VerificationReport& other, const std::string& prefix);

  bool passed() const { return verdict == Verdict::pass; }
  const CaseRecord* find_case(const std::string& id) const;

  json to_json() const;
  std::string to_text() const;
  static VerificationReport from_json(const json& j);
};

/// Process exit code for a verdict: 0 pass, 1 fail, 3 undetermined.
int exit_code(Verdict v);

json matrix_to_json(const Matrix& m);
json int_matrix_to_json(const IntMatrix& m);
json bigints_to_json(const std::vector<BigInt>& v);

}  // namespace tenscat
