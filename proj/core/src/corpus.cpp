#include "qalex/corpus.hpp"

#include <stdexcept>

namespace qalex {

std::uint64_t CorpusRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int CorpusRng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

std::vector<BraidWord> all_words(int strands, int max_length) {
  std::vector<BraidWord> out;
  std::vector<std::vector<int>> layer{{}};
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  for (int len = 0; len <= max_length; ++len) {
    for (const auto& w : layer) out.emplace_back(strands, w);
    if (len == max_length || alphabet.empty()) break;
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer)
      for (int l : alphabet) {
        next.push_back(w);
        next.back().push_back(l);
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<BraidWord> exhaustive_knot_corpus(int max_length) {
  std::vector<BraidWord> out;
  for (int n : {2, 3})
    for (auto& w : all_words(n, max_length))
      if (is_knot_closure(w)) out.push_back(std::move(w));
  return out;
}

std::vector<BraidWord> random_corpus(const RandomCorpusOptions& options) {
  if (options.min_strands < 1 || options.max_strands < options.min_strands)
    throw std::invalid_argument("invalid strand range for random corpus");
  if (options.max_length < 0) throw std::invalid_argument("negative maximum length");
  CorpusRng rng(options.seed);
  std::vector<BraidWord> out;
  // Bounded so that an unsatisfiable request cannot spin forever.
  const long budget = 1000L * (options.count + 1);
  for (long attempt = 0; attempt < budget && static_cast<int>(out.size()) < options.count; ++attempt) {
    const int n = rng.uniform(options.min_strands, options.max_strands);
    const int len = n == 1 ? 0 : rng.uniform(0, options.max_length);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
      const int g = rng.uniform(1, n - 1);
      letters.push_back(rng.uniform(0, 1) ? g : -g);
    }
    BraidWord w(n, std::move(letters));
    if (options.knots_only && !is_knot_closure(w)) {
      if (n < 2 || static_cast<int>(w.length()) >= options.max_length) continue;
      BraidWord repaired = concat(w, BraidWord(n, {n - 1}));
      if (!is_knot_closure(repaired)) continue;
      w = std::move(repaired);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace qalex
