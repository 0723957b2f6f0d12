#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "qalex/alexander.hpp"
#include "qalex/braid.hpp"
#include "qalex/burau.hpp"
#include "qalex/errors.hpp"
#include "qalex/gaussian.hpp"
#include "qalex/json_io.hpp"
#include "qalex/verify.hpp"

namespace qalex::cli {

namespace {

struct BraidArgs {
  std::string braid;
  std::optional<int> strands;
};

void add_braid_options(CLI::App* cmd, BraidArgs& args) {
  cmd->add_option("--braid", args.braid, "Braid word, whitespace-separated signed generator indices")->required();
  cmd->add_option("--strands", args.strands, "Strand count (default: max |index| + 1)");
}

// Parses the braid and insists on a knot closure.
BraidWord knot_from(const BraidArgs& args) {
  BraidWord b = parse_braid(args.braid, args.strands);
  const int components = component_count(b);
  if (components != 1)
    throw PreconditionError("closure of '" + b.to_string() + "' in B_" + std::to_string(b.strands()) + " has " +
                            std::to_string(components) + " components, not a knot");
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomial and the B1 universal invariant of braid-closure knots", "qalex"};
  app.require_subcommand(1);

  BraidArgs alex_args;
  bool alex_json = false;
  bool alex_reduced = false;
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of the braid closure");
  add_braid_options(alexander, alex_args);
  alexander->add_flag("--json", alex_json, "Emit JSON");
  alexander->add_flag("--reduced", alex_reduced, "Use the reduced Burau route instead of the Burau minor");

  BraidArgs inv_args;
  int inv_order = kDefaultOrder;
  bool inv_json = false;
  auto* invariant = app.add_subcommand("invariant", "Universal invariant Z as a series in hbar = a - 1");
  add_braid_options(invariant, inv_args);
  invariant->add_option("--order", inv_order, "Truncation order N")->check(CLI::NonNegativeNumber);
  invariant->add_flag("--json", inv_json, "Emit JSON");

  BraidArgs burau_args;
  bool burau_reduced = false;
  auto* burau = app.add_subcommand("burau", "Burau matrix of the braid as JSON");
  add_braid_options(burau, burau_args);
  burau->add_flag("--reduced", burau_reduced, "Reduced representation instead of the unreduced one");

  BraidArgs cable_args;
  int cable_n = 2;
  bool cable_json = false;
  auto* cable_cmd = app.add_subcommand("cable", "Cable the knot and compose with the cycling braid");
  add_braid_options(cable_cmd, cable_args);
  cable_cmd->add_option("--n", cable_n, "Cable multiplicity")->check(CLI::PositiveNumber);
  cable_cmd->add_flag("--json", cable_json, "Emit JSON");

  VerifyOptions vopts;
  std::string lambda_text;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the braid corpus");
  verify->add_option("--suite", vopts.suite, "thm1|thm2|lemma2|schur|rowrel|cable|markov|hopf")->required();
  verify->add_option("--max-strands", vopts.max_strands, "Largest strand count in the random corpus")
      ->check(CLI::Range(2, 12));
  verify->add_option("--max-length", vopts.max_length, "Longest random word")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopts.seed, "Random corpus seed");
  verify->add_option("--order", vopts.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", vopts.samples, "Random corpus size")->check(CLI::NonNegativeNumber);
  verify->add_option("--degree", vopts.degree, "hopf: monomial degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--lambda", lambda_text, "hopf: single lambda as p/q");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  verify->add_flag("--timing", vopts.timing, "Include per-item wall time (makes output non-reproducible)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (alexander->parsed()) {
      const BraidWord b = knot_from(alex_args);
      const AlexanderPoly p = alex_reduced ? alexander_reduced(b) : alexander_thm2(b);
      if (alex_json)
        out << alexander_payload(p).dump() << '\n';
      else
        out << p.poly.to_string() << '\n';
    } else if (invariant->parsed()) {
      const BraidWord b = knot_from(inv_args);
      const InvariantSeries z = universal_invariant(b, inv_order);
      if (inv_json)
        out << invariant_payload(z).dump() << '\n';
      else
        out << z.series.to_string() << '\n';
    } else if (burau->parsed()) {
      const BraidWord b = parse_braid(burau_args.braid, burau_args.strands);
      const LaurentMatrix m = burau_reduced ? reduced_burau(b).matrix : psi_unreduced(b);
      out << matrix_to_json(m).dump() << '\n';
    } else if (cable_cmd->parsed()) {
      const BraidWord c = cable(knot_from(cable_args), cable_n);
      if (cable_json) {
        Json j;
        j["strands"] = c.strands();
        j["braid"] = c.to_string();
        out << j.dump() << '\n';
      } else {
        out << c.to_string() << '\n';
      }
    } else if (verify->parsed()) {
      const auto& suites = known_suites();
      if (std::find(suites.begin(), suites.end(), vopts.suite) == suites.end()) {
        err << "unknown suite '" << vopts.suite << "'\n";
        return kUsage;
      }
      if (!lambda_text.empty()) vopts.lambda = parse_rational(lambda_text);
      const RunReport report = run_suite(vopts);
      if (verify_json)
        out << report.to_json(vopts.timing).dump(2) << '\n';
      else
        out << report.to_text();
      return report.ok() ? kOk : kVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace qalex::cli
