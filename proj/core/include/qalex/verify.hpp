#ifndef QALEX_VERIFY_HPP
#define QALEX_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalex/json_io.hpp"
#include "qalex/rational.hpp"
#include "qalex/series.hpp"

namespace qalex {

struct VerifyOptions {
  std::string suite;
  int max_strands = 5;
  int max_length = 12;
  std::uint64_t seed = 1;
  int order = kDefaultOrder;
  int samples = 200;           // size of the seeded random corpus
  int exhaustive_length = 6;   // words in B_2, B_3 up to this length
  int degree = 12;             // hopf suite: monomial degree bound
  std::optional<Rational> lambda;  // hopf suite: single lambda instead of the grid
  bool timing = false;         // include per-item wall time in the JSON report
};

struct ItemResult {
  std::string input;
  bool pass = false;
  std::string detail;  // failure description, empty on success
  double millis = 0;
};

struct RunReport {
  std::string command;
  std::string suite;
  std::vector<ItemResult> items;  // sorted by input before emission
  int passed = 0;
  int failed = 0;

  bool ok() const { return failed == 0 && !items.empty(); }
  Json to_json(bool with_timing) const;
  std::string to_text() const;
};

// thm1, thm2, lemma2, schur, rowrel, cable, markov, hopf
const std::vector<std::string>& known_suites();

// Runs one suite. Throws std::invalid_argument for an unknown suite name.
RunReport run_suite(const VerifyOptions& options);

}  // namespace qalex

#endif  // QALEX_VERIFY_HPP
