#ifndef QALEX_BRAID_HPP
#define QALEX_BRAID_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qalex {

/// Braid word on n strands: a sequence of signed Artin generator indices.
/// Letter +i stands for sigma_i, -i for its inverse; 1 <= |i| <= n - 1.
class BraidWord {
 public:
  // Throws PreconditionError if strands < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // "1 -2 1 -2"; the empty word prints as "".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Zero-based permutation: perm[i] is the end position of the strand starting
// at position i.
using Permutation = std::vector<int>;

// Parses whitespace-separated nonzero integers. Without `strands` the strand
// count is max|letter| + 1 (1 for the empty word). Throws ParseError with the
// offending token index.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

// Writhe of the closed braid diagram; the homomorphism B_n -> Z sending every
// generator to 1.
int exponent_sum(const BraidWord& b);

Permutation closure_permutation(const BraidWord& b);

// (second o first): apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

// Number of cycles of the underlying permutation.
int component_count(const BraidWord& b);

bool is_knot_closure(const BraidWord& b);

// Word concatenation; both words must have the same strand count.
BraidWord concat(const BraidWord& a, const BraidWord& b);

BraidWord inverse(const BraidWord& b);

// All signs flipped.
BraidWord mirror(const BraidWord& b);

// alpha * b * alpha^{-1}.
BraidWord conjugate(const BraidWord& b, const BraidWord& alpha);

// Markov stabilization b * sigma_n^{sign} in B_{n+1}.
BraidWord stabilize(const BraidWord& b, int sign);

// Removes adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& b);

// Full twist (sigma_1 ... sigma_{m-1})^m on the first m strands of B_strands.
BraidWord full_twist(int m, int strands);

/// m-strand cable of the knot closing `b`, composed with the braid that
/// brings the first strand under the other m - 1.
///
/// Each letter of b becomes the block crossing of two bundles of m parallel
/// strands. The bundle is then untwisted by exponent_sum(b) inverse full twists
/// so that the parallels follow the Seifert framing, and the cycling braid
/// sigma_1^{-1} ... sigma_{m-1}^{-1} closes the bundle into a single strand.
/// Result lives in B_{n*m}. Throws PreconditionError unless b closes to a knot
/// and m >= 1.
BraidWord cable(const BraidWord& b, int m);

}  // namespace qalex

#endif  // QALEX_BRAID_HPP
