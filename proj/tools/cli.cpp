#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ncca/decide.hpp"
#include "ncca/error.hpp"
#include "ncca/oracle.hpp"
#include "ncca/rtree.hpp"
#include "ncca/serialize.hpp"
#include "ncca/synth.hpp"

namespace ncca::cli {

namespace {

// Rejects bad rule numbers while the command line is parsed.
const CLI::Validator kRuleVector(
    [](std::string& value) {
      try {
        RuleVector::parse(value);
      } catch (const InvalidInput& e) {
        return std::string(e.what());
      }
      return std::string();
    },
    "RULES", "rule vector");

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Either a JSON synthesis trace or a plain list "R0 a1 a2 ..." where R0 is
// the first rule and the rest are the free bits in consumption order.
// '#' starts a comment.
ReplayChoices load_choices(const std::string& path) {
  const std::string text = slurp(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return ReplayChoices(synthesis_trace_from_json(text));

  std::vector<long long> values;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(word, &used));
        if (used != word.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("choices file: not a number: '" + word + "'");
      }
    }
  }
  if (values.empty()) throw InvalidInput("choices file is empty");
  std::vector<int> bits;
  for (std::size_t i = 1; i < values.size(); ++i) bits.push_back(static_cast<int>(values[i]));
  return ReplayChoices(RuleTable::from_number(values[0]), std::move(bits));
}

std::vector<RuleTable> parse_alphabet(const std::string& text) {
  if (text.empty()) return {};
  return RuleVector::parse(text).rules();
}

int cmd_decide(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.rules.size() < 5) {
    err << "decide needs at least 5 cells; use `ncca oracle` for smaller rings\n";
    return kUsage;
  }
  const Verdict v = decide_ncca(c.rules, DecideOptions{c.trace});
  if (c.format == "json") {
    out << verdict_to_json(v) << "\n";
  } else {
    out << (v.accepted() ? "yes" : "no") << "\n";
    if (!v.accepted()) out << "reason: " << v.describe() << "\n";
    if (c.trace) out << super_nodes_to_json(v.trace) << "\n";
  }
  return v.accepted() ? kYes : kNo;
}

int cmd_synthesize(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n < 5) {
    err << "synthesize needs --n >= 5\n";
    return kUsage;
  }
  auto emit = [&](const SynthesisResult& r) {
    out << r.rules.to_string() << "\n";
    if (c.trace) out << synthesis_trace_to_json(r.trace) << "\n";
  };
  if (!c.choices_file.empty()) {
    ReplayChoices choices = load_choices(c.choices_file);
    emit(synthesize(c.n, choices, c.seed));
    if (choices.remaining() > 0) err << "note: " << choices.remaining() << " replayed choice(s) were not used\n";
    return kYes;
  }
  if (c.count < 1) {
    err << "--count must be at least 1\n";
    return kUsage;
  }
  for (int i = 0; i < c.count; ++i) emit(synthesize(c.n, c.seed + static_cast<std::uint64_t>(i)));
  return kYes;
}

int cmd_oracle(const CliConfig& c, std::ostream& out, std::ostream&) {
  const bool yes = brute_force_is_ncca(c.rules, OracleLimits{c.max_cells});
  out << (yes ? "yes" : "no") << "\n";
  return yes ? kYes : kNo;
}

int cmd_simulate(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.steps < 0) {
    err << "--steps must be non-negative\n";
    return kUsage;
  }
  Configuration state = Configuration::parse(c.init);
  out << state.to_string() << "\n";
  for (int t = 0; t < c.steps; ++t) {
    state = next_config(c.rules, state);
    out << state.to_string() << "\n";
  }
  return kYes;
}

int cmd_tree(const CliConfig& c, std::ostream& out, std::ostream&) {
  TreeOptions options;
  options.prune = c.prune;
  const ReachabilityTree tree = build_tree(c.rules, options);
  out << (c.format == "json" ? tree_to_json(tree) + "\n" : tree_to_dot(tree));
  return kYes;
}

int cmd_stg(const CliConfig& c, std::ostream& out, std::ostream&) {
  const StateTransitionGraph g = build_stg(c.rules, OracleLimits{c.max_cells});
  out << (c.format == "json" ? stg_to_json(g) + "\n" : stg_to_dot(g));
  return kYes;
}

int cmd_enumerate(const CliConfig& c, std::ostream& out, std::ostream&) {
  CensusOptions options;
  options.alphabet = parse_alphabet(c.alphabet);
  options.jobs = c.jobs;
  options.work_budget = c.budget;
  const Census census = count_ncca_vectors(c.n, options);
  if (c.format == "json") {
    out << census_to_json(census) << "\n";
  } else {
    out << census.count << "\n";
  }
  return kYes;
}

}  // namespace

ParseResult parse_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  std::string rules;
  CLI::App app{"Number-conserving non-uniform elementary cellular automata"};
  app.name("ncca");
  app.require_subcommand(1);

  auto add_rules = [&rules](CLI::App* sub) {
    sub->add_option("--rules", rules, "comma-separated Wolfram numbers, cell 0 first")
        ->required()
        ->check(kRuleVector);
  };

  auto* decide = app.add_subcommand("decide", "decide number conservation in linear time (n >= 5)");
  add_rules(decide);
  decide->add_flag("--trace", c.trace, "print the super node of every level");
  decide->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* synth = app.add_subcommand("synthesize", "generate number-conserving rule vectors");
  synth->add_option("--n", c.n, "number of cells")->required();
  synth->add_option("--seed", c.seed, "random seed");
  synth->add_option("--count", c.count, "vectors to emit, seeds seed, seed+1, ...");
  synth->add_option("--choices", c.choices_file, "replay free choices from a file")->check(CLI::ExistingFile);
  synth->add_flag("--trace", c.trace, "print the JSON synthesis trace after each vector");

  auto* oracle = app.add_subcommand("oracle", "exhaustive number-conservation check");
  add_rules(oracle);
  oracle->add_option("--max-cells", c.max_cells, "refuse rings larger than this");

  auto* simulate = app.add_subcommand("simulate", "evolve a configuration");
  add_rules(simulate);
  simulate->add_option("--init", c.init, "initial configuration, cell 0 first")->required();
  simulate->add_option("--steps", c.steps, "number of steps");

  auto* tree = app.add_subcommand("tree", "reachability tree as DOT or JSON");
  add_rules(tree);
  tree->add_flag("--prune", c.prune, "skip sub-nodes");
  tree->add_option("--format", c.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* stg = app.add_subcommand("stg", "state transition graph as DOT or JSON");
  add_rules(stg);
  stg->add_option("--format", c.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  stg->add_option("--max-cells", c.max_cells, "refuse rings larger than this");

  auto* enumerate = app.add_subcommand("enumerate", "count number-conserving rule vectors");
  enumerate->add_option("--n", c.n, "number of cells")->required();
  enumerate->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
  enumerate->add_option("--alphabet", c.alphabet, "rules to draw from (default: the nine conserving rules)")
      ->check(kRuleVector);
  enumerate->add_option("--budget", c.budget, "work cap in cell updates");
  enumerate->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return ParseResult{std::nullopt, code == 0 ? kYes : kUsage};
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (!rules.empty()) c.rules = RuleVector::parse(rules);
  return ParseResult{c, kYes};
}

int execute(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "decide") return cmd_decide(c, out, err);
    if (c.subcommand == "synthesize") return cmd_synthesize(c, out, err);
    if (c.subcommand == "oracle") return cmd_oracle(c, out, err);
    if (c.subcommand == "simulate") return cmd_simulate(c, out, err);
    if (c.subcommand == "tree") return cmd_tree(c, out, err);
    if (c.subcommand == "stg") return cmd_stg(c, out, err);
    if (c.subcommand == "enumerate") return cmd_enumerate(c, out, err);
    err << "unknown subcommand " << c.subcommand << "\n";
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ResourceLimit& e) {
    err << "limit: " << e.what() << "\n";
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_cli(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return execute(*parsed.config, out, err);
}

}  // namespace ncca::cli
