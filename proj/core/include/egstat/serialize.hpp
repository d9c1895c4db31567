#pragma once

#include <nlohmann/json.hpp>

#include "egstat/eg.hpp"
#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"
#include "egstat/tableau.hpp"
#include "egstat/verify.hpp"

namespace egstat {

// JSON conventions:
//   Permutation        -> one-line array, trimmed; identity = []
//   Word               -> array of letters (plain std::vector<int>)
//   Partition          -> array of parts
//   Tableau            -> { "shape": [parts], "rows": [[labels per row]] }
//   EGTableau          -> tableau fields plus "reading_word" and "perm"
//   VerificationReport -> all fields; wall_time in seconds

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

void to_json(nlohmann::json& j, const Partition& shape);
void from_json(const nlohmann::json& j, Partition& shape);

void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

void to_json(nlohmann::json& j, const EGTableau& t);

void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const VerificationReport& report);

}  // namespace egstat
