#include "nsplit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nsplit/errors.hpp"
#include "nsplit/generator.hpp"
#include "nsplit/json_io.hpp"
#include "nsplit/maxcut.hpp"
#include "nsplit/multigraph.hpp"
#include "nsplit/necklace.hpp"
#include "nsplit/oracle.hpp"
#include "nsplit/separability.hpp"
#include "nsplit/splitter.hpp"

namespace nsplit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int maxcut_limit_from_env() {
  const char* raw = std::getenv("NSPLIT_MAXCUT_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxCutVertexLimit;
  try {
    std::size_t used = 0;
    int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 1)
      throw MalformedInput("");
    return value;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("NSPLIT_MAXCUT_LIMIT must be a positive integer, got '") +
                         raw + "'");
  }
}

void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << "\n"; }

int cmd_solve(const std::string& file, int ell, bool quiet, std::ostream& out, std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  SolveResult result = solve(nk, ell);
  if (!result.has_splitting()) {
    emit(out, certificate_to_json(result.certificate()));
    if (!quiet) {
      err << "no reduction applies to the residual necklace: the input was not (n-1+" << ell
          << ")-separable\n";
    }
    return 2;
  }
  BalanceReport report = verify_splitting(nk, result.splitting());
  nlohmann::json doc{
      {"splitting", splitting_to_json(result.splitting())},
      {"balance", balance_report_to_json(report)},
      {"promise_checked", false},
  };
  emit(out, doc);
  if (!quiet) {
    err << "solved with " << result.splitting().splits.size() << " split points (depth "
        << result.recursion_depth << ")\n";
    for (const LiftNote& note : result.two_component_lifts) {
      err << "two-component lift on '" << note.color << "': parity " << note.parity_between
          << " -> shifted " << (note.shifted_left ? "left" : "right") << "\n";
    }
  }
  return 0;
}

int cmd_sep(const std::string& file, bool quiet, std::ostream& out, std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  auto [sep, witness] = sep_with_witness(nk);
  nlohmann::json doc{{"sep", sep}, {"witness", witness}};
  emit(out, doc);
  if (!quiet) err << "separability " << sep << " over " << nk.color_count() << " colors\n";
  return 0;
}

int cmd_check_sep(const std::string& file, int ell, bool quiet, std::ostream& out,
                  std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  Multigraph g = build_walk_graph(nk);
  SeparabilityVerdict verdict = decide_separability(g, ell, maxcut_limit_from_env());
  emit(out, verdict_to_json(verdict));
  if (!quiet) {
    err << "decision " << (verdict.decision ? "true" : "false") << " via "
        << to_string(verdict.fired_check) << "\n";
  }
  return verdict.decision ? 0 : 2;
}

int cmd_oracle(const std::string& file, bool quiet, std::ostream& out, std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  std::vector<Splitting> solutions = enumerate_solutions(nk);
  nlohmann::json list = nlohmann::json::array();
  for (const Splitting& s : solutions) list.push_back(splitting_to_json(s));
  nlohmann::json doc{{"count", solutions.size()}, {"solutions", list}};
  emit(out, doc);
  if (!quiet) err << solutions.size() << " balanced splittings\n";
  return 0;
}

int cmd_verify(const std::string& file, const std::string& splits_file, bool quiet,
               std::ostream& out, std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(splits_file));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid splitting document: ") + e.what());
  }
  BalanceReport report = verify_splitting(nk, splitting_from_json(doc));
  emit(out, balance_report_to_json(report));
  if (!quiet) err << (report.valid ? "balanced" : "not balanced") << "\n";
  return report.valid ? 0 : 2;
}

int cmd_gen(int colors, int max_points, std::uint64_t seed, int ell, bool has_ell, bool quiet,
            std::ostream& out, std::ostream& err) {
  if (has_ell) {
    auto nk = random_separable_necklace(colors, ell, seed, 10000, max_points);
    if (!nk) {
      if (!quiet) err << "no (n-1+" << ell << ")-separable draw within the attempt budget\n";
      return 2;
    }
    emit(out, necklace_to_json(*nk));
    return 0;
  }
  emit(out, necklace_to_json(random_necklace(colors, max_points, seed)));
  return 0;
}

int cmd_graph(const std::string& file, bool dot, bool quiet, std::ostream& out,
              std::ostream& err) {
  Necklace nk = parse_necklace(read_file(file));
  Multigraph g = build_walk_graph(nk);
  if (dot) {
    out << to_dot(g);
  } else {
    emit(out, multigraph_to_json(g));
  }
  if (!quiet) {
    err << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-thief necklace splitting: solver, separability tester, oracles"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress the human-readable summary on stderr");

  std::string file;
  std::string splits_file;
  int ell = 1;
  int colors = 3;
  int max_points = 5;
  std::uint64_t seed = 0;
  bool dot = false;

  auto* solve_cmd = app.add_subcommand("solve", "find a splitting of an instance file");
  solve_cmd->add_option("file", file, "instance document or compact string")->required();
  solve_cmd->add_option("--ell", ell, "promised separability gap (>= 1)")->default_val(1);

  auto* sep_cmd = app.add_subcommand("sep", "exact separability by subset enumeration");
  sep_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check-sep", "decide (n-1+ell)-separability");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--ell", ell, "separability gap to test")->default_val(1);

  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate every balanced splitting");
  oracle_cmd->add_option("file", file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a splitting document");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--splits", splits_file, "splitting document to check")->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit a seeded random instance");
  gen_cmd->add_option("--colors", colors)->required();
  gen_cmd->add_option("--max-points", max_points, "odd upper bound per color")->default_val(5);
  gen_cmd->add_option("--seed", seed)->default_val(0);
  auto* gen_ell = gen_cmd->add_option("--ell", ell, "reject draws that are not (n-1+ell)-separable");

  auto* graph_cmd = app.add_subcommand("graph", "emit the walk graph");
  graph_cmd->add_option("file", file)->required();
  graph_cmd->add_flag("--dot", dot, "DOT text instead of a document");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough(true);
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(file, ell, quiet, out, err);
    if (sep_cmd->parsed()) return cmd_sep(file, quiet, out, err);
    if (check_cmd->parsed()) return cmd_check_sep(file, ell, quiet, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(file, quiet, out, err);
    if (verify_cmd->parsed()) return cmd_verify(file, splits_file, quiet, out, err);
    if (gen_cmd->parsed())
      return cmd_gen(colors, max_points, seed, ell, gen_ell->count() > 0, quiet, out, err);
    if (graph_cmd->parsed()) return cmd_graph(file, dot, quiet, out, err);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalInconsistency& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace nsplit
