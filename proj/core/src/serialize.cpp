#include "egstat/serialize.hpp"

namespace egstat {

void to_json(nlohmann::json& j, const Permutation& p) { j = p.one_line(); }

void from_json(const nlohmann::json& j, Permutation& p) {
  p = Permutation::from_one_line(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Partition& shape) { j = shape.parts(); }

void from_json(const nlohmann::json& j, Partition& shape) {
  shape = Partition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Tableau& t) {
  j = {{"shape", t.shape()}, {"rows", t.rows()}};
}

void from_json(const nlohmann::json& j, Tableau& t) {
  t = Tableau(j.at("shape").get<Partition>(),
              j.at("rows").get<std::vector<std::vector<int>>>());
}

void to_json(nlohmann::json& j, const EGTableau& t) {
  to_json(j, t.tableau);
  j["reading_word"] = t.reading;
  j["perm"] = Permutation::from_word(t.reading);
}

void to_json(nlohmann::json& j, const Counterexample& c) {
  j = {{"reason", c.reason}, {"data", c.data}};
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = {{"suite_name", report.suite_name},
       {"parameters", report.parameters},
       {"checked_count", report.checked_count},
       {"passed", report.passed},
       {"counterexamples", report.counterexamples},
       {"wall_time", report.wall_time.count()}};
}

}  // namespace egstat
