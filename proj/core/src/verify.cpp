#include "egstat/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <queue>
#include <sstream>

#include "egstat/eg.hpp"
#include "egstat/serialize.hpp"
#include "egstat/tableau.hpp"

namespace egstat {
namespace {

using steady_clock = std::chrono::steady_clock;

void finalize(VerificationReport& report, steady_clock::time_point start) {
  report.passed = report.counterexamples.empty();
  report.wall_time = steady_clock::now() - start;
}

std::vector<Permutation> canonical_perms_up_to(int n_max) {
  std::vector<Permutation> out;
  for (int n = 0; n <= n_max; ++n)
    for (Permutation& p : enumerate_length_n(n)) out.push_back(std::move(p));
  return out;
}

std::set<int> letter_set(const Word& word) { return {word.begin(), word.end()}; }

bool has_monotone_word(const Permutation& p, bool decreasing) {
  for (const Word& word : reduced_words(p)) {
    bool monotone = true;
    for (std::size_t i = 1; i < word.size(); ++i) {
      const bool ok = decreasing ? word[i] < word[i - 1] : word[i] > word[i - 1];
      if (!ok) {
        monotone = false;
        break;
      }
    }
    if (monotone) return true;
  }
  return false;
}

// All strictly increasing fillings of `shape` over letters [1, max_letter].
// Only the injectivity fault path uses this; genuine EG enumeration also
// constrains the reading word.
std::vector<Tableau> increasing_fillings(const Partition& shape, int max_letter) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) grid[r].assign(shape.row_length(r), 0);

  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r == shape.rows()) {
      out.emplace_back(shape, grid);
      return;
    }
    const int next_r = (c + 1 < shape.row_length(r)) ? r : r + 1;
    const int next_c = (c + 1 < shape.row_length(r)) ? c + 1 : 0;
    const int left = c > 0 ? grid[r][c - 1] : 0;
    const int above = r > 0 && shape.contains(r - 1, c) ? grid[r - 1][c] : 0;
    for (int a = std::max(left, above) + 1; a <= max_letter; ++a) {
      grid[r][c] = a;
      self(self, next_r, next_c);
    }
  };
  if (shape.rows() == 0)
    out.emplace_back(shape, grid);
  else
    fill(fill, 0, 0);
  return out;
}

void check_classification_into(const Partition& shape, VerificationReport& report) {
  const bool single_row = shape.rows() <= 1;
  const bool single_col = shape.cols() <= 1;
  for (const Permutation& p : enumerate_length_n(shape.size())) {
    bool predicted;
    if (single_row)
      predicted = has_monotone_word(p, /*decreasing=*/true);
    else if (single_col)
      predicted = has_monotone_word(p, /*decreasing=*/false);
    else
      predicted = is_totally_commutative(p);
    const bool actual = is_lambda_maximal(p, shape);
    ++report.checked_count;
    if (predicted != actual)
      report.counterexamples.push_back(
          {"lambda-maximality disagrees with the case prediction",
           {{"shape", shape}, {"perm", p}, {"predicted", predicted}, {"actual", actual}}});
  }
}

}  // namespace

VerificationReport check_support_invariance(int n_max, const InjectedWords& injected) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "support",
                            .parameters = {{"max_length", n_max}}};

  std::map<Permutation, std::vector<Word>> extras;
  for (const Word& word : injected) extras[Permutation::from_word(word)].push_back(word);

  std::set<Permutation> targets;
  for (Permutation& p : canonical_perms_up_to(n_max)) targets.insert(std::move(p));
  for (const auto& [p, words] : extras) targets.insert(p);

  for (const Permutation& p : targets) {
    std::vector<Word> words = reduced_words(p);
    if (const auto it = extras.find(p); it != extras.end())
      words.insert(words.end(), it->second.begin(), it->second.end());
    ++report.checked_count;
    const std::set<int> first = letter_set(words.front());
    for (const Word& word : words) {
      if (letter_set(word) != first) {
        report.counterexamples.push_back(
            {"reduced words with different letter sets",
             {{"perm", p}, {"word_a", words.front()}, {"word_b", word}}});
        break;
      }
    }
  }
  finalize(report, start);
  return report;
}

VerificationReport check_order_lemma(int n_max) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "order",
                            .parameters = {{"max_length", n_max}}};

  for (const Permutation& p : canonical_perms_up_to(n_max)) {
    const std::vector<Word> words = reduced_words(p);
    const std::set<int> supp = support(p);
    for (int a : supp) {
      if (!supp.contains(a + 1)) continue;
      for (const auto [x, y] : {std::pair{a, a + 1}, std::pair{a + 1, a}}) {
        std::size_t holds = 0;
        for (const Word& word : words) {
          std::size_t last_x = 0, first_y = word.size();
          for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] == x) last_x = i;
            if (word[i] == y && first_y == word.size()) first_y = i;
          }
          if (last_x < first_y) ++holds;
        }
        ++report.checked_count;
        if (holds != 0 && holds != words.size())
          report.counterexamples.push_back(
              {"letter order is not constant across the reduced words",
               {{"perm", p}, {"before", x}, {"after", y}}});
      }
    }
  }
  finalize(report, start);
  return report;
}

VerificationReport check_tits_connectivity(int n_max) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "tits",
                            .parameters = {{"max_length", n_max}}};

  for (const Permutation& p : canonical_perms_up_to(n_max)) {
    const std::vector<Word> words = reduced_words(p);
    std::set<Word> reached{words.front()};
    std::queue<Word> frontier;
    frontier.push(words.front());
    while (!frontier.empty()) {
      const Word current = std::move(frontier.front());
      frontier.pop();
      for (const Word& next : tits_neighbors(current))
        if (reached.insert(next).second) frontier.push(next);
    }
    ++report.checked_count;
    if (reached.size() != words.size()) {
      for (const Word& word : words)
        if (!reached.contains(word)) {
          report.counterexamples.push_back(
              {"reduced word unreachable by commutation and braid moves",
               {{"perm", p}, {"start", words.front()}, {"unreachable", word}}});
          break;
        }
    }
  }
  finalize(report, start);
  return report;
}

VerificationReport check_injectivity(int n_max, const std::optional<InjectivityFault>& fault) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "injectivity",
                            .parameters = {{"max_length", n_max}}};

  if (fault) {
    report.parameters["fault_max_letter"] = fault->max_letter;
    std::map<Tableau, std::vector<Tableau>> by_std;
    for (Tableau& filling : increasing_fillings(fault->shape, fault->max_letter)) {
      ++report.checked_count;
      by_std[standardize(filling)].push_back(std::move(filling));
    }
    for (const auto& [standardized, fillings] : by_std)
      if (fillings.size() >= 2)
        report.counterexamples.push_back(
            {"standardization collision",
             {{"shape", fault->shape},
              {"std", standardized},
              {"first", fillings[0]},
              {"second", fillings[1]},
              {"class_size", fillings.size()}}});
    finalize(report, start);
    return report;
  }

  for (const Permutation& p : canonical_perms_up_to(n_max)) {
    for (const Partition& shape : partitions_of(p.coxeter_length())) {
      const std::vector<EGTableau> tableaux = enumerate_eg(shape, p);
      ++report.checked_count;
      std::map<Tableau, const EGTableau*> seen;
      for (const EGTableau& t : tableaux) {
        const Tableau standardized = standardize(t.tableau);
        if (const auto [it, inserted] = seen.emplace(standardized, &t); !inserted)
          report.counterexamples.push_back(
              {"standardization collision on EG tableaux",
               {{"perm", p},
                {"shape", shape},
                {"first", it->second->tableau},
                {"second", t.tableau},
                {"std", standardized}}});
      }
      if (tableaux.size() > hook_count(shape))
        report.counterexamples.push_back(
            {"EG tableau count exceeds the standard tableau count",
             {{"perm", p},
              {"shape", shape},
              {"eg_count", tableaux.size()},
              {"syt_count", hook_count(shape)}}});
    }
  }
  finalize(report, start);
  return report;
}

VerificationReport check_max_theorem(int n) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "max", .parameters = {{"n", n}}};

  const std::uint64_t expected = involutions(n);
  const std::vector<Permutation> perms = enumerate_length_n(n);
  std::uint64_t best = 0;
  std::set<Permutation> argmax, commutative;
  for (const Permutation& p : perms) {
    const std::uint64_t value = eg_statistic(p);
    ++report.checked_count;
    best = std::max(best, value);
    if (value == expected) argmax.insert(p);
    if (is_totally_commutative(p)) commutative.insert(p);
    if (value > expected)
      report.counterexamples.push_back(
          {"EG statistic exceeds the involution count",
           {{"perm", p}, {"eg", value}, {"involutions", expected}}});
  }
  report.parameters["max_eg"] = static_cast<std::int64_t>(best);
  report.parameters["involutions"] = static_cast<std::int64_t>(expected);
  if (best != expected)
    report.counterexamples.push_back(
        {"maximum differs from the involution count",
         {{"max_eg", best}, {"involutions", expected}}});
  for (const Permutation& p : argmax)
    if (!commutative.contains(p))
      report.counterexamples.push_back(
          {"maximizer is not totally commutative", {{"perm", p}}});
  for (const Permutation& p : commutative)
    if (!argmax.contains(p))
      report.counterexamples.push_back(
          {"totally commutative permutation does not attain the maximum",
           {{"perm", p}, {"eg", eg_statistic(p)}}});

  // Support normalization keeps the statistic intact: for small n the raw
  // search over S_{2n+1} must find the same maximum.
  if (n <= 4) {
    std::uint64_t raw_best = 0;
    std::uint64_t raw_checked = 0;
    for (const Permutation& p : permutations_with_length(n, 2 * n)) {
      raw_best = std::max(raw_best, eg_statistic(p));
      ++raw_checked;
    }
    report.checked_count += raw_checked;
    report.parameters["cross_checked"] = static_cast<std::int64_t>(raw_checked);
    if (raw_best != expected)
      report.counterexamples.push_back(
          {"maximum over the full symmetric group differs from the canonical one",
           {{"raw_max", raw_best}, {"involutions", expected}}});
  }
  finalize(report, start);
  return report;
}

VerificationReport check_classification(const Partition& shape) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "classification",
                            .parameters = {{"size", shape.size()}}};
  check_classification_into(shape, report);
  finalize(report, start);
  return report;
}

VerificationReport check_classification_up_to(int size_max) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "classification",
                            .parameters = {{"size_max", size_max}}};
  for (int n = 0; n <= size_max; ++n)
    for (const Partition& shape : partitions_of(n))
      check_classification_into(shape, report);
  finalize(report, start);
  return report;
}

VerificationReport check_sweep_proposition(int size_max) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "sweep",
                            .parameters = {{"size_max", size_max}}};
  for (int n = 0; n <= size_max; ++n)
    for (const Partition& shape : partitions_of(n))
      for (const Tableau& t : enumerate_syt(shape)) {
        ++report.checked_count;
        const Tableau swept = sweep_map(t);
        if (classify(swept) == TableauClass::neither)
          report.counterexamples.push_back(
              {"sweep image is not semistandard", {{"syt", t}, {"sweep", swept}}});
      }
  finalize(report, start);
  return report;
}

VerificationReport check_schensted_identity(int n_max) {
  const auto start = steady_clock::now();
  VerificationReport report{.suite_name = "schensted",
                            .parameters = {{"max_n", n_max}}};
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t total = 0;
    for (const Partition& shape : partitions_of(n)) total += hook_count(shape);
    ++report.checked_count;
    if (total != involutions(n))
      report.counterexamples.push_back(
          {"hook-length counts do not sum to the involution count",
           {{"n", n}, {"sum", total}, {"involutions", involutions(n)}}});
    if (n <= 8) {
      for (const Partition& shape : partitions_of(n)) {
        ++report.checked_count;
        const std::uint64_t enumerated = enumerate_syt(shape).size();
        if (enumerated != hook_count(shape))
          report.counterexamples.push_back(
              {"hook-length count disagrees with exhaustive enumeration",
               {{"shape", shape}, {"hook", hook_count(shape)}, {"enumerated", enumerated}}});
      }
    }
  }
  finalize(report, start);
  return report;
}

namespace {

struct SuiteSpec {
  const char* name;
  int default_cap;
  int hard_cap;
  bool size_based;  // capped by |lambda| instead of Coxeter length
};

// Defaults keep every suite under ~2 minutes on commodity hardware; the hard
// caps bound runaway requests and can be overridden (EG_MAX_CAP).
constexpr SuiteSpec kSuites[] = {
    {"support", 5, 7, false},  {"order", 5, 7, false},
    {"tits", 5, 6, false},     {"schensted", 8, 12, false},
    {"sweep", 7, 9, true},     {"injectivity", 5, 6, false},
    {"classification", 5, 6, true}, {"max", 5, 6, false},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteSpec& spec : kSuites) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  std::set<std::string> selected;
  bool all = config.suites.empty();
  for (const std::string& name : config.suites) {
    if (name == "all") {
      all = true;
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw std::invalid_argument("unknown suite: " + name);
    selected.insert(name);
  }

  std::vector<VerificationReport> reports;
  for (const SuiteSpec& spec : kSuites) {
    if (!all && !selected.contains(spec.name)) continue;
    int cap;
    if (spec.size_based)
      cap = config.size_max.value_or(config.max_length.value_or(spec.default_cap));
    else
      cap = config.max_length.value_or(spec.default_cap);
    const int hard = config.cap_override.value_or(spec.hard_cap);
    if (cap > hard)
      throw CapExceeded("suite '" + std::string(spec.name) + "' bound " +
                        std::to_string(cap) + " exceeds the resource cap " +
                        std::to_string(hard));

    const std::string name = spec.name;
    if (name == "support") reports.push_back(check_support_invariance(cap));
    else if (name == "order") reports.push_back(check_order_lemma(cap));
    else if (name == "tits") reports.push_back(check_tits_connectivity(cap));
    else if (name == "schensted") reports.push_back(check_schensted_identity(cap));
    else if (name == "sweep") reports.push_back(check_sweep_proposition(cap));
    else if (name == "injectivity") reports.push_back(check_injectivity(cap));
    else if (name == "classification") reports.push_back(check_classification_up_to(cap));
    else if (name == "max")
      for (int n = 1; n <= cap; ++n) reports.push_back(check_max_theorem(n));
  }
  return reports;
}

std::string render_reports_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "suite" << std::setw(28) << "parameters"
      << std::right << std::setw(10) << "checked" << std::setw(8) << "result"
      << std::setw(10) << "time" << '\n';
  for (const VerificationReport& report : reports) {
    std::ostringstream params;
    bool first = true;
    for (const auto& [key, value] : report.parameters) {
      if (!first) params << ' ';
      params << key << '=' << value;
      first = false;
    }
    out << std::left << std::setw(16) << report.suite_name << std::setw(28)
        << params.str() << std::right << std::setw(10) << report.checked_count
        << std::setw(8) << (report.passed ? "PASS" : "FAIL") << std::setw(9)
        << std::fixed << std::setprecision(2) << report.wall_time.count() << 's'
        << '\n';
    for (const Counterexample& ce : report.counterexamples)
      out << "  counterexample: " << ce.reason << "\n    " << ce.data.dump() << '\n';
  }
  return out.str();
}

}  // namespace egstat
