#include "qalex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qalex/alexander.hpp"
#include "qalex/burau.hpp"
#include "qalex/corpus.hpp"
#include "qalex/errors.hpp"
#include "qalex/gaussian.hpp"
#include "qalex/hopf_rep.hpp"

namespace qalex {

namespace {

// Returns an empty string on success, otherwise a failure description.
using Check = std::function<std::string()>;

struct PendingItem {
  std::tuple<int, std::size_t, std::vector<int>, std::string> key;
  std::string input;
  Check check;
};

std::string braid_label(const BraidWord& b) { return "B" + std::to_string(b.strands()) + ": [" + b.to_string() + "]"; }

PendingItem braid_item(const BraidWord& b, Check check, const std::string& tag = "") {
  return {{b.strands(), b.length(), b.letters(), tag}, braid_label(b) + tag, std::move(check)};
}

std::vector<BraidWord> dedup(std::vector<BraidWord> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<BraidWord> knot_corpus(const VerifyOptions& o, int exhaustive_length) {
  std::vector<BraidWord> words = exhaustive_knot_corpus(exhaustive_length);
  auto random = random_corpus({o.seed, o.samples, 2, o.max_strands, o.max_length, true});
  words.insert(words.end(), random.begin(), random.end());
  return dedup(std::move(words));
}

std::vector<BraidWord> unrestricted_corpus(const VerifyOptions& o) {
  std::vector<BraidWord> words;
  for (int n : {2, 3}) {
    auto all = all_words(n, o.exhaustive_length);
    words.insert(words.end(), all.begin(), all.end());
  }
  auto random = random_corpus({o.seed, o.samples, 2, o.max_strands, o.max_length, false});
  words.insert(words.end(), random.begin(), random.end());
  return dedup(std::move(words));
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::vector<PendingItem> thm1_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  for (const auto& b : knot_corpus(o, o.exhaustive_length))
    items.push_back(braid_item(b, [b, order = o.order] {
      const InvariantSeries z = universal_invariant(b, order);
      const TruncSeries expected = series_inverse(alexander_at_a(b, order));
      if (!(z.series == expected))
        return "Z = " + z.series.to_string() + " but 1/Delta(1+h) = " + expected.to_string();
      return expect(z.series[0] == 1, "constant term is not 1");
    }));
  return items;
}

std::vector<PendingItem> thm2_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  for (const auto& b : knot_corpus(o, o.exhaustive_length))
    items.push_back(braid_item(b, [b] {
      const AlexanderPoly direct = alexander_thm2(b);
      const AlexanderPoly reduced = alexander_reduced(b);
      if (!(direct == reduced))
        return "Burau-minor route gives " + direct.poly.to_string() + ", reduced route gives " +
               reduced.poly.to_string();
      if (direct.value_at_one() != 1) return "Delta(1) = " + to_string(direct.value_at_one());
      return expect(direct.is_symmetric(), "Delta is not symmetric: " + direct.poly.to_string());
    }));
  return items;
}

std::vector<PendingItem> lemma2_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  for (const auto& b : unrestricted_corpus(o))
    items.push_back(braid_item(b, [b] { return expect(lemma2_check(b), "determinant identity fails"); }));
  return items;
}

std::vector<PendingItem> schur_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  for (const auto& b : knot_corpus(o, o.exhaustive_length))
    items.push_back(braid_item(b, [b, order = o.order] {
      if (!schur_identity_check(b)) return std::string("c adj(I - hat) b != (1 - d) det(I - hat)");
      const GaussianState s = evaluate_long_knot(b, order);
      return expect(s.form(0, 0) == TruncSeries::one(order), "long-knot form entry is " + s.form(0, 0).to_string());
    }));
  return items;
}

std::vector<PendingItem> rowrel_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  for (const auto& b : unrestricted_corpus(o))
    items.push_back(braid_item(b, [b] { return expect(row_relation_check(b), "row relation fails"); }));
  return items;
}

std::vector<PendingItem> cable_items(const VerifyOptions& o) {
  // Cables multiply the strand count, so the corpus is kept small: the
  // exhaustive part stops at length 4 and the random part at 3 strands.
  std::vector<BraidWord> words = exhaustive_knot_corpus(std::min(o.exhaustive_length, 4));
  auto random = random_corpus({o.seed, std::min(o.samples, 20), 2, std::min(o.max_strands, 3),
                               std::min(o.max_length, 6), true});
  words.insert(words.end(), random.begin(), random.end());
  words.push_back(BraidWord(2, {1, 1, 1}));
  words.push_back(BraidWord(3, {1, -2, 1, -2}));
  std::vector<PendingItem> items;
  for (const auto& b : dedup(std::move(words)))
    for (int m : {2, 3})
      items.push_back(braid_item(
          b,
          [b, m] {
            const LaurentPoly expected = substitute(alexander_thm2(b), m);
            const AlexanderPoly got = alexander_thm2(cable(b, m));
            return expect(got.poly == expected,
                          "Delta(cable) = " + got.poly.to_string() + ", Delta(t^m) = " + expected.to_string());
          },
          " m=" + std::to_string(m)));
  return items;
}

std::vector<PendingItem> markov_items(const VerifyOptions& o) {
  std::vector<PendingItem> items;
  std::size_t index = 0;
  for (const auto& b : knot_corpus(o, o.exhaustive_length)) {
    // Per-item conjugator derived from the seed and the item index.
    CorpusRng rng(o.seed ^ (0x5851f42d4c957f2dULL * (++index)));
    std::vector<int> letters;
    const int len = b.strands() > 1 ? rng.uniform(1, 4) : 0;
    for (int i = 0; i < len; ++i) {
      const int g = rng.uniform(1, b.strands() - 1);
      letters.push_back(rng.uniform(0, 1) ? g : -g);
    }
    const BraidWord alpha(b.strands(), std::move(letters));
    items.push_back(braid_item(b, [b, alpha, order = o.order] {
      const AlexanderPoly delta = alexander_thm2(b);
      const TruncSeries z = universal_invariant(b, order).series;
      const std::pair<const char*, BraidWord> variants[] = {
          {"positive stabilization", stabilize(b, 1)},
          {"negative stabilization", stabilize(b, -1)},
          {"conjugation", conjugate(b, alpha)},
      };
      for (const auto& [name, v] : variants) {
        if (!(alexander_thm2(v) == delta)) return std::string("Delta changes under ") + name + " -> " + v.to_string();
        if (!(universal_invariant(v, order).series == z))
          return std::string("invariant series changes under ") + name + " -> " + v.to_string();
      }
      return std::string();
    }));
  }
  return items;
}

std::vector<PendingItem> hopf_items(const VerifyOptions& o) {
  std::vector<Rational> lambdas;
  if (o.lambda)
    lambdas.push_back(*o.lambda);
  else
    lambdas = {Rational(0), Rational(1), Rational(-1), Rational(5, 2)};
  std::vector<PendingItem> items;
  int rank = 0;
  for (const auto& lambda : lambdas) {
    const std::string l = to_string(lambda);
    items.push_back({{0, 0, {rank}, "a"}, "commutators lambda=" + l, [lambda, o] {
                       const CommutatorReport r = commutator_check(lambda, o.order, o.degree);
                       return r.ok() ? std::string() : r.violations.front();
                     }});
    items.push_back({{0, 0, {rank}, "b"}, "central element lambda=" + l, [lambda, o] {
                       return expect(central_element_check(lambda, o.order, o.degree), "c != lambda hbar");
                     }});
    ++rank;
  }
  for (int total = 0; total <= o.degree; ++total)
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      items.push_back({{1, static_cast<std::size_t>(total), {p, q}, ""},
                       "r-matrix z0^" + std::to_string(p) + " z1^" + std::to_string(q),
                       [p, q, order = o.order] { return expect(r_matrix_action_check(p, q, order), "routes differ"); }});
    }
  return items;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {"thm1",   "thm2", "lemma2", "schur",
                                                  "rowrel", "cable", "markov", "hopf"};
  return suites;
}

RunReport run_suite(const VerifyOptions& o) {
  std::vector<PendingItem> pending;
  if (o.suite == "thm1")
    pending = thm1_items(o);
  else if (o.suite == "thm2")
    pending = thm2_items(o);
  else if (o.suite == "lemma2")
    pending = lemma2_items(o);
  else if (o.suite == "schur")
    pending = schur_items(o);
  else if (o.suite == "rowrel")
    pending = rowrel_items(o);
  else if (o.suite == "cable")
    pending = cable_items(o);
  else if (o.suite == "markov")
    pending = markov_items(o);
  else if (o.suite == "hopf")
    pending = hopf_items(o);
  else
    throw std::invalid_argument("unknown suite '" + o.suite + "'");

  std::sort(pending.begin(), pending.end(), [](const PendingItem& a, const PendingItem& b) { return a.key < b.key; });

  RunReport report;
  report.suite = o.suite;
  std::ostringstream cmd;
  cmd << "verify --suite " << o.suite << " --max-strands " << o.max_strands << " --max-length " << o.max_length
      << " --seed " << o.seed << " --order " << o.order;
  if (o.suite == "hopf") {
    cmd << " --degree " << o.degree;
    if (o.lambda) cmd << " --lambda " << to_string(*o.lambda);
  }
  report.command = cmd.str();

  for (auto& item : pending) {
    ItemResult r;
    r.input = item.input;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = item.check();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.pass = r.detail.empty();
    (r.pass ? report.passed : report.failed)++;
    report.items.push_back(std::move(r));
  }
  return report;
}

Json RunReport::to_json(bool with_timing) const {
  Json j;
  j["command"] = command;
  j["suite"] = suite;
  j["passed"] = passed;
  j["failed"] = failed;
  j["ok"] = ok();
  Json failures = Json::array();
  for (const auto& it : items)
    if (!it.pass) failures.push_back({{"input", it.input}, {"detail", it.detail}});
  j["failures"] = std::move(failures);
  Json all = Json::array();
  for (const auto& it : items) {
    Json e;
    e["input"] = it.input;
    e["pass"] = it.pass;
    if (with_timing) e["ms"] = it.millis;
    all.push_back(std::move(e));
  }
  j["items"] = std::move(all);
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command << '\n';
  for (const auto& it : items)
    if (!it.pass) os << "FAIL " << it.input << ": " << it.detail << '\n';
  os << suite << ": " << passed << " passed, " << failed << " failed" << (ok() ? " [OK]" : " [FAILED]") << '\n';
  return os.str();
}

}  // namespace qalex
