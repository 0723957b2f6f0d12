#ifndef QALEX_CORPUS_HPP
#define QALEX_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "qalex/braid.hpp"

namespace qalex {

// Deterministic 64-bit generator (splitmix64). Output is identical on every
// platform, unlike the std distributions.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Every word of length <= max_length in B_strands, shortest first.
std::vector<BraidWord> all_words(int strands, int max_length);

// Knot-closure words of length <= max_length in B_2 and B_3.
std::vector<BraidWord> exhaustive_knot_corpus(int max_length);

struct RandomCorpusOptions {
  std::uint64_t seed = 1;
  int count = 200;
  int min_strands = 2;
  int max_strands = 5;
  int max_length = 12;
  bool knots_only = true;
};

/// Seeded random words with uniform letters in {+-1, ..., +-(n-1)}.
///
/// With knots_only, a word whose closure is a link is repaired by appending
/// sigma_{n-1} when that merges it into a single cycle (and the length bound
/// allows), and is discarded otherwise.
std::vector<BraidWord> random_corpus(const RandomCorpusOptions& options);

}  // namespace qalex

#endif  // QALEX_CORPUS_HPP
