#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace commprob::cli {

Json to_json(const GroupReport& r) {
  Json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["k"] = r.class_count;
  j["d"] = r.d.to_string();
  j["acs"] = r.acs.to_string();
  j["parity"] = r.odd ? "odd" : "even";
  j["center_order"] = r.center_order;
  j["derived_order"] = r.derived_order;
  j["derived_index"] = r.derived_index;
  j["abelian"] = r.abelian;
  j["nilpotent"] = r.nilpotent;
  j["supersolvable"] = r.supersolvable;
  j["solvable"] = r.solvable;
  j["stem"] = r.stem;
  j["isoclinic_to_A4"] = r.isoclinic_to_a4;
  j["quotient_by_center_isoclinic_to_A4"] = r.quotient_by_center_isoclinic_to_a4;
  j["isoclinic_to_C5C5C3"] = r.isoclinic_to_c5c5c3;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json jv;
    jv["statement"] = v.statement;
    jv["status"] = to_string(v.status);
    jv["applicable"] = v.applicable();
    jv["holds"] = v.holds();
    jv["detail"] = v.detail;
    if (v.witness_class_size) jv["witness_class_size"] = *v.witness_class_size;
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

Json to_json(const VerificationSummary& s) {
  Json j;
  j["groups"] = s.groups;
  j["verdicts"] = s.verdicts;
  j["applicable"] = s.applicable;
  j["holds"] = s.holds;
  j["vacuous"] = s.vacuous;
  j["failures"] = s.failures;
  j["precondition_failures"] = s.precondition_failures;
  Json wrapped;
  wrapped["summary"] = std::move(j);
  return wrapped;
}

std::string to_table(const GroupReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "group " << (r.name.empty() ? "(unnamed)" : r.name) << '\n';
  out << "  order " << r.order << ", k " << r.class_count << ", d " << r.d << ", acs " << r.acs << ", "
      << (r.odd ? "odd" : "even") << '\n';
  out << "  |Z| " << r.center_order << ", |G'| " << r.derived_order << ", [G:G'] " << r.derived_index << '\n';
  out << "  abelian " << yes(r.abelian) << ", nilpotent " << yes(r.nilpotent) << ", supersolvable "
      << yes(r.supersolvable) << ", solvable " << yes(r.solvable) << ", stem " << yes(r.stem) << '\n';
  out << "  isoclinic to A4 " << yes(r.isoclinic_to_a4) << ", G/Z isoclinic to A4 "
      << yes(r.quotient_by_center_isoclinic_to_a4) << ", isoclinic to (C5xC5):C3 " << yes(r.isoclinic_to_c5c5c3)
      << '\n';
  for (const auto& v : r.verdicts) {
    out << "  " << std::left << std::setw(20) << to_string(v.status) << std::setw(32) << v.statement << v.detail
        << '\n';
  }
  return out.str();
}

std::string to_table(const VerificationSummary& s) {
  std::ostringstream out;
  out << "summary: " << s.groups << " groups, " << s.verdicts << " verdicts, " << s.applicable << " applicable, "
      << s.holds << " held, " << s.vacuous << " vacuous, " << s.failures << " failed, " << s.precondition_failures
      << " precondition failures\n";
  return out.str();
}

}  // namespace commprob::cli
