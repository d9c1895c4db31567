#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"

namespace egstat {

// Thrown when a requested bound exceeds a suite's hard resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counterexamples carry fully serialized objects, so a failure is
// reproducible from the report alone.
struct Counterexample {
  std::string reason;
  nlohmann::json data;
};

struct VerificationReport {
  std::string suite_name;
  std::map<std::string, std::int64_t> parameters;
  std::uint64_t checked_count = 0;
  bool passed = true;  // always equals counterexamples.empty()
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> wall_time{0};
};

// ---- test-only fault switches --------------------------------------------
// These exist so the suites can demonstrably fail; production paths never
// enable them.

// Drops the reduced-word requirement from the injectivity suite: every
// strictly increasing filling of `shape` with letters in [1, max_letter] is
// admitted, so standardization collisions appear.
struct InjectivityFault {
  Partition shape;
  int max_letter = 0;
};

// check_support_invariance treats each injected word as a reduced word of
// the permutation it multiplies to, alongside the genuine ones.
using InjectedWords = std::vector<Word>;

// ---- suites ---------------------------------------------------------------

// All reduced words of each canonical w with l(w) <= n_max share one letter
// set.
VerificationReport check_support_invariance(int n_max, const InjectedWords& injected = {});

// For adjacent support letters a, b = a+1 of each canonical w with
// l(w) <= n_max, the predicate "all a's occur before all b's" is constant
// across Red(w) (both orientations).
VerificationReport check_order_lemma(int n_max);

// The graph on Red(w) whose edges are single commutation or braid moves is
// connected for each canonical w with l(w) <= n_max.
VerificationReport check_tits_connectivity(int n_max);

// Standardization is injective on EG(lambda, w) for every canonical w with
// l(w) <= n_max and every lambda of that size; also guards the corollary
// a_{w,lambda} <= f^lambda at each pair visited.
VerificationReport check_injectivity(int n_max,
                                     const std::optional<InjectivityFault>& fault = std::nullopt);

// max{EG(w)} over canonical length-n permutations equals the involution
// count, attained exactly on the totally commutative ones. For n <= 4 the
// maximum is also cross-checked over all of S_{2n+1} with length n, which
// validates the support normalization empirically.
VerificationReport check_max_theorem(int n);

// Over all canonical w with l(w) = |shape|, lambda-maximality matches the
// case prediction: one row <-> a strictly decreasing reduced word exists,
// one column <-> a strictly increasing one, otherwise <-> totally
// commutative.
VerificationReport check_classification(const Partition& shape);

// check_classification over every shape with |shape| <= size_max, merged
// into one report.
VerificationReport check_classification_up_to(int size_max);

// sweep_map lands in the semistandard tableaux for every standard tableau of
// size <= size_max.
VerificationReport check_sweep_proposition(int size_max);

// Sum of hook-length counts over |lambda| = n equals the involution count
// for n <= n_max; hook counts are cross-checked against exhaustive SYT
// enumeration for sizes <= 8.
VerificationReport check_schensted_identity(int n_max);

// ---- driver ---------------------------------------------------------------

struct SuiteConfig {
  std::vector<std::string> suites;  // names from suite_names(), or "all"; empty = all
  std::optional<int> max_length;    // cap on Coxeter length (permutation suites)
  std::optional<int> size_max;      // cap on |lambda| (shape suites)
  std::optional<int> cap_override;  // replaces the built-in hard caps (EG_MAX_CAP)
};

// Suite names understood by run_suite, in execution order.
const std::vector<std::string>& suite_names();

// Runs the selected suites with the configured caps; deterministic report
// order. Throws std::invalid_argument on unknown suite names and CapExceeded
// when a requested bound exceeds the hard cap.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

// Human-readable rendering: one row per report plus counterexample details.
std::string render_reports_table(const std::vector<VerificationReport>& reports);

}  // namespace egstat
