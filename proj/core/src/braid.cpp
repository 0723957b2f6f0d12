#include "qalex/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "qalex/errors.hpp"

namespace qalex {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw PreconditionError("a braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) >= strands_)
      throw PreconditionError("generator " + std::to_string(l) + " is not in B_" + std::to_string(strands_));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t index = 0;
  int widest = 0;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError("malformed braid letter '" + token + "'", index);
    if (value == 0) throw ParseError("0 is not a generator index", index);
    if (strands && std::abs(value) >= *strands)
      throw ParseError("generator " + token + " out of range for " + std::to_string(*strands) + " strands", index);
    widest = std::max(widest, std::abs(value));
    letters.push_back(value);
    ++index;
  }
  const int n = strands.value_or(widest + 1);
  if (n < 1) throw ParseError("strand count must be positive", 0);
  return BraidWord(n, std::move(letters));
}

int exponent_sum(const BraidWord& b) {
  int g = 0;
  for (int l : b.letters()) g += l > 0 ? 1 : -1;
  return g;
}

Permutation closure_permutation(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands());
  // strand_at[p] = starting position of the strand currently at position p
  std::vector<int> strand_at(n);
  for (std::size_t i = 0; i < n; ++i) strand_at[i] = static_cast<int>(i);
  for (int l : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  Permutation perm(n);
  for (std::size_t p = 0; p < n; ++p) perm[static_cast<std::size_t>(strand_at[p])] = static_cast<int>(p);
  return perm;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[static_cast<std::size_t>(first[i])];
  return out;
}

int component_count(const BraidWord& b) {
  const Permutation perm = closure_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

bool is_knot_closure(const BraidWord& b) { return component_count(b) == 1; }

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw PreconditionError("concatenating braids with different strand counts");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& alpha) { return concat(concat(alpha, b), inverse(alpha)); }

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> out;
  for (int l : b.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(b.strands(), std::move(out));
}

BraidWord full_twist(int m, int strands) {
  std::vector<int> letters;
  for (int pass = 0; pass < m; ++pass)
    for (int i = 1; i < m; ++i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord cable(const BraidWord& b, int m) {
  if (m < 1) throw PreconditionError("cable multiplicity must be at least 1");
  if (!is_knot_closure(b)) throw PreconditionError("cabling requires a braid whose closure is a knot");
  const int strands = b.strands() * m;
  std::vector<int> letters;

  // sigma_i -> bundle i crosses bundle i+1; the strands of bundle i move right
  // one at a time, last strand first.
  for (int l : b.letters()) {
    const int sign = l > 0 ? 1 : -1;
    const int base = (std::abs(l) - 1) * m;
    for (int k = 0; k < m; ++k)
      for (int j = base + m - k; j <= base + 2 * m - 1 - k; ++j) letters.push_back(sign * j);
  }

  // Blackboard framing of the closed braid equals its writhe; undo it on the
  // first bundle.
  const int writhe = exponent_sum(b);
  const BraidWord twist = writhe > 0 ? inverse(full_twist(m, strands)) : full_twist(m, strands);
  for (int w = 0; w < std::abs(writhe); ++w) letters.insert(letters.end(), twist.letters().begin(), twist.letters().end());

  for (int i = 1; i < m; ++i) letters.push_back(-i);
  return BraidWord(strands, std::move(letters));
}

}  // namespace qalex
