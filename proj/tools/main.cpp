// Command-line front end: computes the EG statistic and its per-shape
// breakdown, lists EG tableaux and reduced words, searches for maximizers,
// and drives the verification suites. Output formats: plain, json, csv.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "egstat/eg.hpp"
#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"
#include "egstat/serialize.hpp"
#include "egstat/tableau.hpp"
#include "egstat/verify.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format: " + name);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = token.find_last_not_of(" \t");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token.substr(begin, end - begin + 1), &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
    if (used != end - begin + 1) throw UsageError("not an integer list: " + text);
    out.push_back(value);
  }
  return out;
}

egstat::Permutation permutation_from(const std::optional<std::string>& perm,
                                     const std::optional<std::string>& word) {
  if (perm && word) throw UsageError("give either --perm or --word, not both");
  if (perm) return egstat::Permutation::from_one_line(parse_int_list(*perm));
  if (word) return egstat::Permutation::from_word(parse_int_list(*word));
  throw UsageError("a permutation is required (--perm or --word)");
}

std::string csv_quote(const json& j) {
  std::string dumped = j.dump();
  std::string out = "\"";
  for (char c : dumped) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::string render_list(const std::vector<int>& values, char open, char close) {
  std::ostringstream out;
  out << open;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << close;
  return out.str();
}

std::string render_tableau_grid(const egstat::Tableau& t, const std::string& indent) {
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    out << indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::optional<int> env_cap_override() {
  if (const char* raw = std::getenv("EG_MAX_CAP")) {
    try {
      return std::stoi(raw);
    } catch (const std::exception&) {
      throw UsageError("EG_MAX_CAP must be an integer");
    }
  }
  return std::nullopt;
}

int run_compute(const egstat::Permutation& w, Format format) {
  const int length = w.coxeter_length();
  const std::set<int> supp = egstat::support(w);
  const bool commutative = egstat::is_totally_commutative(w);
  const std::vector<egstat::Partition> shapes = egstat::partitions_of(length);

  std::uint64_t total = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (a, f) per shape
  for (const egstat::Partition& shape : shapes) {
    counts.emplace_back(egstat::eg_count(shape, w), egstat::hook_count(shape));
    total += counts.back().first;
  }

  switch (format) {
    case Format::plain: {
      std::cout << "permutation: " << render_list(w.one_line(), '[', ']') << '\n'
                << "coxeter length: " << length << '\n'
                << "support: " << render_list({supp.begin(), supp.end()}, '{', '}') << '\n'
                << "totally commutative: " << (commutative ? "yes" : "no") << '\n'
                << "EG statistic: " << total << '\n'
                << "shape counts (a_{w,lambda} of f^lambda):\n";
      for (std::size_t i = 0; i < shapes.size(); ++i)
        std::cout << "  " << render_list(shapes[i].parts(), '(', ')') << "  "
                  << counts[i].first << " of " << counts[i].second << '\n';
      break;
    }
    case Format::json: {
      json shapes_json = json::array();
      for (std::size_t i = 0; i < shapes.size(); ++i)
        shapes_json.push_back({{"shape", shapes[i]},
                               {"eg_count", counts[i].first},
                               {"syt_count", counts[i].second}});
      std::cout << json{{"perm", w},
                        {"length", length},
                        {"support", supp},
                        {"totally_commutative", commutative},
                        {"eg", total},
                        {"shapes", shapes_json}}
                       .dump(2)
                << '\n';
      break;
    }
    case Format::csv: {
      std::cout << "shape,eg_count,syt_count\n";
      for (std::size_t i = 0; i < shapes.size(); ++i)
        std::cout << csv_quote(json(shapes[i])) << ',' << counts[i].first << ','
                  << counts[i].second << '\n';
      break;
    }
  }
  return 0;
}

int run_tableaux(const egstat::Partition& shape, const egstat::Permutation& w,
                 Format format) {
  const std::vector<egstat::EGTableau> tableaux = egstat::enumerate_eg(shape, w);
  switch (format) {
    case Format::plain: {
      std::cout << tableaux.size() << " EG tableaux of shape "
                << render_list(shape.parts(), '(', ')') << " for "
                << render_list(w.one_line(), '[', ']') << '\n';
      for (const egstat::EGTableau& t : tableaux) {
        std::cout << render_tableau_grid(t.tableau, "  ")
                  << "  reading word: " << render_list(t.reading, '[', ']') << '\n';
      }
      break;
    }
    case Format::json:
      std::cout << json{{"shape", shape}, {"perm", w}, {"count", tableaux.size()},
                        {"tableaux", tableaux}}
                       .dump(2)
                << '\n';
      break;
    case Format::csv: {
      std::cout << "index,rows,reading_word\n";
      for (std::size_t i = 0; i < tableaux.size(); ++i)
        std::cout << i << ',' << csv_quote(json(tableaux[i].tableau.rows())) << ','
                  << csv_quote(json(tableaux[i].reading)) << '\n';
      break;
    }
  }
  return 0;
}

int run_reduced_words(const egstat::Permutation& w, Format format) {
  const std::vector<egstat::Word> words = egstat::reduced_words(w);
  switch (format) {
    case Format::plain:
      std::cout << words.size() << " reduced words of "
                << render_list(w.one_line(), '[', ']') << '\n';
      for (const egstat::Word& word : words)
        std::cout << "  " << render_list(word, '[', ']') << '\n';
      break;
    case Format::json:
      std::cout << json{{"perm", w}, {"count", words.size()}, {"words", words}}.dump(2)
                << '\n';
      break;
    case Format::csv:
      std::cout << "index,word\n";
      for (std::size_t i = 0; i < words.size(); ++i)
        std::cout << i << ',' << csv_quote(json(words[i])) << '\n';
      break;
  }
  return 0;
}

int run_maximizers(int length, Format format) {
  if (length < 1) throw UsageError("--length must be >= 1");
  const int hard_cap = env_cap_override().value_or(6);
  if (length > hard_cap)
    throw egstat::CapExceeded("maximizers bound " + std::to_string(length) +
                              " exceeds the resource cap " + std::to_string(hard_cap));

  const std::uint64_t target = egstat::involutions(length);
  std::vector<egstat::Permutation> maximizers;
  std::vector<egstat::Permutation> commutative;
  for (const egstat::Permutation& p : egstat::enumerate_length_n(length)) {
    if (egstat::eg_statistic(p) == target) maximizers.push_back(p);
    if (egstat::is_totally_commutative(p)) commutative.push_back(p);
  }
  const bool agree = maximizers == commutative;

  switch (format) {
    case Format::plain:
      std::cout << "length: " << length << '\n'
                << "involutions: " << target << '\n'
                << "maximizers (EG = " << target << "):\n";
      for (const egstat::Permutation& p : maximizers)
        std::cout << "  " << render_list(p.one_line(), '[', ']') << '\n';
      std::cout << "maximizers are exactly the totally commutative permutations: "
                << (agree ? "yes" : "NO") << '\n';
      break;
    case Format::json:
      std::cout << json{{"length", length},
                        {"involutions", target},
                        {"maximizers", maximizers},
                        {"totally_commutative_match", agree}}
                       .dump(2)
                << '\n';
      break;
    case Format::csv:
      std::cout << "perm,eg\n";
      for (const egstat::Permutation& p : maximizers)
        std::cout << csv_quote(json(p)) << ',' << target << '\n';
      break;
  }
  return agree ? 0 : 1;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

int run_verify(const std::string& suites, std::optional<int> max_length,
               std::optional<int> size_max, Format format) {
  egstat::SuiteConfig config{split_names(suites), max_length, size_max,
                             env_cap_override()};
  const std::vector<egstat::VerificationReport> reports = egstat::run_suite(config);
  bool all_passed = true;
  for (const egstat::VerificationReport& report : reports)
    all_passed = all_passed && report.passed;

  switch (format) {
    case Format::plain:
      std::cout << egstat::render_reports_table(reports)
                << (all_passed ? "all suites passed\n" : "FAILURES above\n");
      break;
    case Format::json:
      std::cout << json(reports).dump(2) << '\n';
      break;
    case Format::csv:
      std::cout << "suite,parameters,checked,passed,wall_time\n";
      for (const egstat::VerificationReport& report : reports)
        std::cout << report.suite_name << ',' << csv_quote(json(report.parameters))
                  << ',' << report.checked_count << ','
                  << (report.passed ? "true" : "false") << ','
                  << report.wall_time.count() << '\n';
      break;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edelman-Greene statistic toolkit"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  app.add_option("--format", format_name, "output format: plain, json, csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  std::optional<std::string> perm_text, word_text;
  std::string shape_text, suites = "all";
  int length = 0;
  std::optional<int> max_length, size_max;

  CLI::App* compute = app.add_subcommand(
      "compute", "EG statistic and per-shape counts of a permutation");
  compute->add_option("--perm", perm_text, "one-line form, comma separated");
  compute->add_option("--word", word_text, "word letters, comma separated");

  CLI::App* tableaux = app.add_subcommand(
      "tableaux", "list EG tableaux of a given shape and permutation");
  tableaux->add_option("--shape", shape_text, "partition, comma separated")->required();
  tableaux->add_option("--perm", perm_text, "one-line form, comma separated");
  tableaux->add_option("--word", word_text, "word letters, comma separated");

  CLI::App* reduced = app.add_subcommand("reduced-words",
                                         "list all reduced words of a permutation");
  reduced->add_option("--perm", perm_text, "one-line form, comma separated");
  reduced->add_option("--word", word_text, "word letters, comma separated");

  CLI::App* maximizers = app.add_subcommand(
      "maximizers", "canonical length-n permutations attaining the EG maximum");
  maximizers->add_option("--length", length, "Coxeter length n")->required();

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "comma-separated suite names, or 'all'");
  verify->add_option("--max-length", max_length, "cap on Coxeter length");
  verify->add_option("--size-max", size_max, "cap on partition size");

  for (CLI::App* sub : {compute, tableaux, reduced, maximizers, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (*compute) return run_compute(permutation_from(perm_text, word_text), format);
    if (*tableaux)
      return run_tableaux(egstat::Partition(parse_int_list(shape_text)),
                          permutation_from(perm_text, word_text), format);
    if (*reduced) return run_reduced_words(permutation_from(perm_text, word_text), format);
    if (*maximizers) return run_maximizers(length, format);
    if (*verify) return run_verify(suites, max_length, size_max, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const egstat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
