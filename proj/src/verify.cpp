#include "tenscat/verify.hpp"

namespace tenscat {

VerificationReport monoidal_aisle_report(const std::vector<PairSupport>& pairs, int n,
                                         const std::vector<std::string>& labels) {
  VerificationReport r("monoidal_aisle");
  struct Condition {
    const char* id;
    AisleSpec x, y, result;
  };
  const Condition conditions[] = {
      {"condition_1", {0, AisleSide::le}, {n, AisleSide::le}, {0, AisleSide::le}},
      {"condition_2", {0, AisleSide::ge}, {n, AisleSide::ge}, {0, AisleSide::ge}},
  };
  for (const auto& c : conditions) {
    std::size_t checked = 0;
    json witness;
    for (const auto& p : pairs) {
      if (!in_aisle(p.sx, c.x) || !in_aisle(p.sy, c.y)) continue;
      ++checked;
      if (const auto bad = aisle_violation(p.sxy, c.result); bad && witness.is_null())
        witness = json{{"x", labels[p.x]}, {"y", labels[p.y]}, {"degree", *bad}, {"support", p.sxy}};
    }
    json data{{"n", n}, {"pairs_checked", checked}};
    const bool failed = !witness.is_null();
    if (failed) data["witness"] = std::move(witness);
    r.add_case(c.id, failed ? Verdict::fail : Verdict::pass, std::move(data));
  }
  return r;
}

}  // namespace tenscat
