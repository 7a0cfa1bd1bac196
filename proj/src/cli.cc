// Copyright 2026 The MARC Solver Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "marc/cli.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "marc/catalog.h"
#include "marc/commitment.h"
#include "marc/equilibrium.h"
#include "marc/errors.h"
#include "marc/game.h"
#include "marc/game_io.h"
#include "marc/harness.h"

namespace marc {

namespace {

using nlohmann::ordered_json;

enum class Format { kText, kMachine };

std::string Tuple(const std::vector<Rational>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].ToString();
  }
  return s + ")";
}

std::vector<Rational> Payoffs(const Game& game, const Profile& profile) {
  std::vector<Rational> u;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    u.push_back(ExpectedUtility(game, profile, i));
  }
  return u;
}

ordered_json RationalsJson(const std::vector<Rational>& values) {
  ordered_json a = ordered_json::array();
  for (const auto& v : values) a.push_back(v.ToString());
  return a;
}

ordered_json StrategyJson(const Game& game, const MixedStrategy& s) {
  ordered_json j;
  j["player"] = s.owner() + 1;
  j["display"] = FormatStrategy(game, s);
  ordered_json w = ordered_json::object();
  for (std::size_t k = 0; k < s.size(); ++k) {
    w[game.action_names(s.owner())[k]] = s[k].ToString();
  }
  j["weights"] = std::move(w);
  return j;
}

ordered_json ProfileJson(const Game& game, const Profile& p) {
  ordered_json a = ordered_json::array();
  for (const auto& s : p.strategies()) a.push_back(StrategyJson(game, s));
  return a;
}

ordered_json OpponentsJson(const Game& game, const OpponentProfile& o) {
  ordered_json a = ordered_json::array();
  for (const auto& s : o.strategies()) a.push_back(StrategyJson(game, s));
  return a;
}

std::string FormatOpponents(const Game& game, const OpponentProfile& o) {
  std::string s = "(";
  for (std::size_t k = 0; k < o.strategies().size(); ++k) {
    if (k) s += ", ";
    s += FormatStrategy(game, o.strategies()[k]);
  }
  return s + ")";
}

ordered_json TraceJson(const Game& game, const std::vector<Elimination>& t) {
  ordered_json a = ordered_json::array();
  for (const auto& e : t) {
    a.push_back({{"player", e.player + 1},
                 {"action", game.action_names(e.player)[e.action]},
                 {"dominator", StrategyJson(game, e.dominator)}});
  }
  return a;
}

void PrintTrace(const Game& game, const std::vector<Elimination>& trace,
                std::ostream& out) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto& e = trace[k];
    out << "  " << k + 1 << ". player " << e.player + 1 << " removes "
        << game.action_names(e.player)[e.action] << " (dominated by "
        << FormatStrategy(game, e.dominator) << ")\n";
  }
}

std::size_t PlayerIndex(const Game& game, int one_based) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > game.num_players()) {
    throw InputError("--player must be between 1 and " +
                     std::to_string(game.num_players()));
  }
  return static_cast<std::size_t>(one_based - 1);
}

void Emit(Format format, const ordered_json& doc, const std::string& text,
          std::ostream& out) {
  if (format == Format::kMachine) {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

int CmdNash(const Game& game, Format format, std::ostream& out) {
  const NashEnumeration nash = EnumerateExtremeNash(game);
  ordered_json doc;
  doc["command"] = "nash";
  doc["complete"] = nash.complete;
  doc["eliminations"] = TraceJson(game, nash.reduction.trace);
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "Nash equilibria: " << nash.equilibria.size()
       << (nash.complete ? " extreme (complete)"
                         : " (pure only; enumeration incomplete)")
       << "\n";
  for (const auto& eq : nash.equilibria) {
    const auto u = Payoffs(game, eq.profile);
    rows.push_back({{"profile", ProfileJson(game, eq.profile)},
                    {"payoffs", RationalsJson(u)},
                    {"degenerate", eq.degenerate}});
    text << "  " << FormatProfile(game, eq.profile) << "  payoffs "
         << Tuple(u) << (eq.degenerate ? "  [degenerate]" : "") << "\n";
  }
  doc["equilibria"] = std::move(rows);
  Emit(format, doc, text.str(), out);
  return kExitOk;
}

int CmdMaximin(const Game& game, int player, Format format, std::ostream& out) {
  const MaximinSolution m = Maximin(game, PlayerIndex(game, player));
  ordered_json doc;
  doc["command"] = "maximin";
  doc["player"] = m.player + 1;
  doc["value"] = m.value.ToString();
  doc["strategy"] = StrategyJson(game, m.strategy);
  doc["opponent_guard"] = StrategyJson(game, m.opponent_guard);
  std::ostringstream text;
  text << "player " << m.player + 1 << " maximin value " << m.value << "\n"
       << "strategy: " << FormatStrategy(game, m.strategy) << "\n"
       << "opponent guard: " << FormatStrategy(game, m.opponent_guard)
       << "\n";
  Emit(format, doc, text.str(), out);
  return kExitOk;
}

ordered_json SolutionJson(const Game& game, const CommitmentSolution& s) {
  ordered_json j;
  j["player"] = s.player + 1;
  j["mode"] = TieBreakName(s.mode);
  j["space"] = CommitmentSpaceName(s.space);
  j["value"] = s.value.ToString();
  j["attained"] = s.attained;
  j["exact"] = s.exact;
  j["best_attained"] =
      s.best_attained ? ordered_json(s.best_attained->ToString()) : nullptr;
  ordered_json w = ordered_json::array();
  for (const auto& c : s.witnesses) {
    w.push_back({{"commitment", StrategyJson(game, c.commitment)},
                 {"response", OpponentsJson(game, c.response)},
                 {"value", c.value.ToString()}});
  }
  j["witnesses"] = std::move(w);
  j["notes"] = s.notes;
  return j;
}

int CmdCommit(const Game& game, int player, const std::string& mode,
              const std::string& space, Format format, std::ostream& out) {
  const TieBreak tb =
      mode == "pessimistic" ? TieBreak::kPessimistic : TieBreak::kOptimistic;
  const CommitmentSpace sp =
      space == "pure" ? CommitmentSpace::kPure : CommitmentSpace::kMixed;
  const CommitmentSolution s =
      CommitmentOptimal(game, PlayerIndex(game, player), tb, sp);
  ordered_json doc;
  doc["command"] = "commit";
  doc.update(SolutionJson(game, s));
  std::ostringstream text;
  text << "player " << s.player + 1 << ", " << TieBreakName(s.mode) << ", "
       << CommitmentSpaceName(s.space) << " commitments\n"
       << "value " << s.value << (s.attained ? "" : " (supremum, not attained)")
       << (s.exact ? "" : " (lower bound)") << "\n";
  if (s.best_attained && !s.attained) {
    text << "best attained value " << *s.best_attained << "\n";
  }
  for (const auto& c : s.witnesses) {
    text << "commitment " << FormatStrategy(game, c.commitment)
         << ", response " << FormatOpponents(game, c.response) << ", payoff "
         << c.value << "\n";
  }
  for (const auto& note : s.notes) text << "note: " << note << "\n";
  Emit(format, doc, text.str(), out);
  return kExitOk;
}

int VerdictExit(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return kExitOk;
    case Verdict::kFails:
      return kExitFails;
    case Verdict::kUnknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

std::string Upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

int CmdMarc(const Game& game, const std::string& space, Format format,
            std::ostream& out) {
  const CommitmentSpace sp =
      space == "pure" ? CommitmentSpace::kPure : CommitmentSpace::kMixed;
  const MarcVerdict v = MarcCheck(game, sp);
  ordered_json doc;
  doc["command"] = "marc";
  doc["verdict"] = VerdictName(v.status);
  doc["space"] = CommitmentSpaceName(v.space);
  doc["values"] = RationalsJson(v.values);
  doc["values_exact"] = v.values_exact;
  doc["witness"] = v.witness ? ProfileJson(game, *v.witness) : nullptr;
  if (v.conjectures) {
    ordered_json c = ordered_json::array();
    for (std::size_t i = 0; i < v.conjectures->num_players(); ++i) {
      c.push_back({{"holder", i + 1},
                   {"beliefs", OpponentsJson(game, v.conjectures->of(i))}});
    }
    doc["conjectures"] = std::move(c);
  } else {
    doc["conjectures"] = nullptr;
  }
  ordered_json table = ordered_json::array();
  for (const auto& row : v.nash_table) {
    table.push_back(
        {{"profile", ProfileJson(game, row.profile)},
         {"payoffs", RationalsJson(row.payoffs)},
         {"degenerate", row.degenerate},
         {"mismatch_player",
          row.mismatch_player ? ordered_json(*row.mismatch_player + 1)
                              : ordered_json(nullptr)},
         {"mismatch_reason", row.mismatch_reason}});
  }
  doc["nash_table"] = std::move(table);
  doc["nash_complete"] = v.nash_complete;
  doc["eliminations"] = TraceJson(game, v.reduction_trace);
  doc["pessimistic"] = {{"values", RationalsJson(v.pessimistic_values)},
                        {"attained", v.pessimistic_attained},
                        {"verdict", VerdictName(v.pessimistic_status)}};
  doc["tie_break_sensitive"] = v.tie_break_sensitive;
  doc["reason"] = v.reason;

  std::ostringstream text;
  text << "MARC: " << Upper(VerdictName(v.status)) << "\n"
       << "space: " << CommitmentSpaceName(v.space) << " commitments\n"
       << "V = " << Tuple(v.values) << "\n";
  for (std::size_t i = 0; i < v.values_exact.size(); ++i) {
    if (!v.values_exact[i]) {
      text << "  V_" << i + 1 << " is a lower bound\n";
    }
  }
  if (!v.reduction_trace.empty()) {
    text << "dominance reduction:\n";
    PrintTrace(game, v.reduction_trace, text);
  }
  text << "Nash payoff table"
       << (v.nash_complete ? "" : " (pure equilibria only; incomplete)")
       << ":\n";
  for (const auto& row : v.nash_table) {
    text << "  " << FormatProfile(game, row.profile) << "  "
         << Tuple(row.payoffs);
    if (row.degenerate) text << " [degenerate]";
    if (row.mismatch_player) {
      text << "  player " << *row.mismatch_player + 1 << ": "
           << row.mismatch_reason;
    } else {
      text << "  matches V";
    }
    text << "\n";
  }
  if (v.witness) {
    text << "witness: " << FormatProfile(game, *v.witness) << "\n";
  }
  text << "pessimistic tie-breaking: V = " << Tuple(v.pessimistic_values)
       << ", MARC: " << Upper(VerdictName(v.pessimistic_status))
       << (v.tie_break_sensitive ? " (tie-break sensitive)" : "") << "\n";
  if (!v.reason.empty()) text << "reason: " << v.reason << "\n";
  Emit(format, doc, text.str(), out);
  return VerdictExit(v.status);
}

int CmdDominance(const Game& game, Format format, std::ostream& out) {
  const DominanceResult r = IteratedStrictDominance(game);
  ordered_json doc;
  doc["command"] = "dominance";
  doc["eliminations"] = TraceJson(game, r.trace);
  ordered_json remaining = ordered_json::array();
  std::ostringstream text;
  text << "eliminations: " << r.trace.size() << "\n";
  PrintTrace(game, r.trace, text);
  text << "remaining actions:\n";
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    ordered_json names = ordered_json::array();
    text << "  player " << i + 1 << ":";
    for (std::size_t a : r.surviving[i]) {
      names.push_back(game.action_names(i)[a]);
      text << ' ' << game.action_names(i)[a];
    }
    text << "\n";
    remaining.push_back(std::move(names));
  }
  doc["remaining"] = std::move(remaining);
  doc["dominance_solvable"] = r.reduced.num_profiles() == 1;
  if (r.reduced.num_profiles() == 1) {
    text << "dominance solvable\n";
  }
  Emit(format, doc, text.str(), out);
  return kExitOk;
}

int CmdCounterexample(int n, Format format, std::ostream& out) {
  if (n < 2) throw InputError("--n must be at least 2");
  const Game game = BuildCounterexample(static_cast<std::size_t>(n));
  const std::string document = WriteGame(game);
  ordered_json doc;
  doc["command"] = "counterexample";
  doc["players"] = n;
  doc["document"] = document;
  Emit(format, doc, document, out);
  return kExitOk;
}

int CmdSuite(const std::string& name, std::optional<std::uint64_t> seed,
             std::size_t count, Format format, std::ostream& out) {
  GeneratorSpec spec = DefaultSpec(name);
  if (seed) spec.seed = *seed;
  const SuiteReport r = RunSuite(name, spec, count);
  ordered_json doc;
  doc["command"] = "suite";
  doc["suite"] = r.name;
  doc["spec"] = {{"seed", std::to_string(spec.seed)},
                 {"players", {spec.min_players, spec.max_players}},
                 {"actions", {spec.min_actions, spec.max_actions}},
                 {"payoffs",
                  {std::to_string(spec.payoff_lo),
                   std::to_string(spec.payoff_hi)}},
                 {"class", GameClassName(spec.game_class)}};
  doc["count"] = r.count;
  doc["passed"] = r.passed;
  doc["failed"] = r.failed;
  doc["nontrivial"] = r.nontrivial;
  doc["nontrivial_meaning"] = r.nontrivial_meaning;
  doc["ok"] = r.ok();
  ordered_json trials = ordered_json::array();
  std::ostringstream text;
  text << "suite " << r.name << ", seed " << spec.seed << ", class "
       << GameClassName(spec.game_class) << ", " << r.count << " trials\n";
  for (const auto& t : r.trials) {
    trials.push_back({{"index", t.index},
                      {"passed", t.passed},
                      {"nontrivial", t.nontrivial},
                      {"detail", t.detail}});
    text << "trial " << t.index << ": " << (t.passed ? "pass" : "FAIL")
         << (t.nontrivial ? " *" : "") << "  " << t.detail << "\n";
  }
  doc["trials"] = std::move(trials);
  text << "passed " << r.passed << "/" << r.count << ", nontrivial "
       << r.nontrivial << " (" << r.nontrivial_meaning << ")\n"
       << "result: " << (r.ok() ? "OK" : "FAILED") << "\n";
  Emit(format, doc, text.str(), out);
  return r.ok() ? kExitOk : kExitInternal;
}

void ReportError(Format format, const std::string& kind,
                 const std::string& message, std::ostream& out,
                 std::ostream& err) {
  if (format == Format::kMachine) {
    ordered_json doc;
    doc["error"] = kind;
    doc["message"] = message;
    out << doc.dump(2) << "\n";
  }
  err << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact solver for rationality, correctness and commitment in "
               "finite normal-form games"};
  app.name("marc");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string file;
  int player = 0;
  std::string mode = "optimistic";
  std::string space = "mixed";
  int n = 0;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::size_t count = 100;

  auto* nash = app.add_subcommand("nash", "List extreme Nash equilibria");
  nash->add_option("file", file, "Game document")->required();

  auto* maximin = app.add_subcommand("maximin", "Maximin strategy (zero-sum)");
  maximin->add_option("file", file, "Game document")->required();
  maximin->add_option("--player", player, "Player (1-based)")->required();

  auto* commit =
      app.add_subcommand("commit", "Optimal strategy to commit to");
  commit->add_option("file", file, "Game document")->required();
  commit->add_option("--player", player, "Player (1-based)")->required();
  commit->add_option("--mode", mode, "Tie-breaking")
      ->check(CLI::IsMember({"optimistic", "pessimistic"}));
  commit->add_option("--space", space, "Commitment space")
      ->check(CLI::IsMember({"pure", "mixed"}));

  auto* marc = app.add_subcommand("marc", "Decide whether MARC holds");
  marc->add_option("file", file, "Game document")->required();
  marc->add_option("--space", space, "Commitment space")
      ->check(CLI::IsMember({"pure", "mixed"}));

  auto* dominance =
      app.add_subcommand("dominance", "Iterated strict dominance");
  dominance->add_option("file", file, "Game document")->required();

  auto* counter = app.add_subcommand(
      "counterexample", "Emit the n-player counterexample game document");
  counter->add_option("--n", n, "Number of players")->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run a property suite");
  suite_cmd->add_option("name", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(SuiteNames()));
  suite_cmd->add_option("--seed", seed, "Generator seed");
  suite_cmd->add_option("--count", count, "Number of trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const Format format =
      format_name == "machine" ? Format::kMachine : Format::kText;
  try {
    if (*counter) return CmdCounterexample(n, format, out);
    if (*suite_cmd) return CmdSuite(suite, seed, count, format, out);
    const Game game = ParseGameFile(file);
    if (*nash) return CmdNash(game, format, out);
    if (*maximin) return CmdMaximin(game, player, format, out);
    if (*commit) return CmdCommit(game, player, mode, space, format, out);
    if (*marc) return CmdMarc(game, space, format, out);
    if (*dominance) return CmdDominance(game, format, out);
  } catch (const ParseError& e) {
    ReportError(format, ParseErrorKindName(e.kind()), e.what(), out, err);
    return kExitInputError;
  } catch (const InputError& e) {
    ReportError(format, "input", e.what(), out, err);
    return kExitInputError;
  } catch (const std::exception& e) {
    ReportError(format, "internal", e.what(), out, err);
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace marc
