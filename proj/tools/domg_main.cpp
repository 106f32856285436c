// Command-line front end: exact solves, game numbers, family generators,
// corpus bound verification, and strategy matches. All randomness comes from
// explicit seeds; output is byte-deterministic for fixed inputs.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domg/bounds.hpp"
#include "domg/constructions.hpp"
#include "domg/graph_io.hpp"
#include "domg/solver.hpp"
#include "domg/strategies.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

domg::Player parse_player(const std::string& s) {
  if (s == "A" || s == "a") return domg::Player::Alice;
  if (s == "B" || s == "b") return domg::Player::Bob;
  throw CLI::ValidationError("--first must be A or B");
}

struct FamilyOptions {
  std::string family;
  int n = 36;
  int k = 3;
  int copies = 3;
  int size = 3;
  int t = 1;
  int s = 2;
  int ell = 2;
  bool doubled = false;
  std::vector<int> attachments;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& fam, bool family_positional) {
  if (family_positional)
    cmd->add_option("family", fam.family,
                    "one of: zelinka, two_pendant, tree, matching, cliques, clique_tree, "
                    "k4_pendant")
        ->required();
  else
    cmd->add_option("--family", fam.family, "graph family (same names as `gen`)")->required();
  cmd->add_option("--n", fam.n, "vertex count (zelinka, two_pendant)");
  cmd->add_option("--k", fam.k, "height parameter (tree)");
  cmd->add_option("--copies", fam.copies, "clique copies (cliques)");
  cmd->add_option("--size", fam.size, "clique order (cliques)");
  cmd->add_option("--t", fam.t, "clique parameter, cliques are K_{2t+1} (clique_tree)");
  cmd->add_option("--s", fam.s, "number of cliques (clique_tree)");
  cmd->add_option("--ell", fam.ell, "number of disjoint edges (matching)");
  cmd->add_flag("--doubled", fam.doubled, "two disjoint copies (tree)");
  cmd->add_option("--attach", fam.attachments, "attachment vertices (clique_tree)");
}

struct BuiltFamily {
  domg::Graph graph;
  std::optional<domg::ZelinkaLayout> zelinka;
  std::optional<domg::TreeLayout> tree;
  bool doubled = false;
  int copies = 0, size = 0;
};

BuiltFamily build_family(const FamilyOptions& fam) {
  using domg::Graph;
  if (fam.family == "zelinka") {
    domg::ZelinkaLayout layout = domg::gen_zelinka(fam.n);
    Graph g = layout.graph;
    return BuiltFamily{std::move(g), std::move(layout), std::nullopt, false, 0, 0};
  }
  if (fam.family == "two_pendant")
    return BuiltFamily{domg::gen_two_pendant(fam.n), std::nullopt, std::nullopt, false, 0, 0};
  if (fam.family == "tree") {
    domg::TreeLayout layout = domg::gen_tree_graph(fam.k);
    Graph g = fam.doubled ? domg::disjoint_union(layout.graph, layout.graph) : layout.graph;
    return BuiltFamily{std::move(g), std::nullopt, std::move(layout), fam.doubled, 0, 0};
  }
  if (fam.family == "matching")
    return BuiltFamily{domg::gen_matching(fam.ell), std::nullopt, std::nullopt, false, 0, 0};
  if (fam.family == "cliques")
    return BuiltFamily{domg::gen_disjoint_cliques(fam.copies, fam.size),
                       std::nullopt,
                       std::nullopt,
                       false,
                       fam.copies,
                       fam.size};
  if (fam.family == "clique_tree") {
    std::vector<int> attach = fam.attachments;
    if (attach.empty()) attach.assign(size_t(fam.s - 1), 0);
    return BuiltFamily{domg::gen_clique_tree(fam.t, fam.s, attach),
                       std::nullopt,
                       std::nullopt,
                       false,
                       0,
                       0};
  }
  if (fam.family == "k4_pendant")
    return BuiltFamily{domg::gen_k4_pendant(), std::nullopt, std::nullopt, false, 0, 0};
  throw domg::parse_error("unknown family: " + fam.family);
}

std::unique_ptr<domg::Strategy> build_policy(const std::string& name, domg::Player role,
                                             const BuiltFamily& built,
                                             const domg::SolveOptions& opt) {
  if (name == "random") return nullptr;  // caller instantiates one per seed
  if (name == "lowest") return domg::lowest_legal_strategy();
  if (name == "exact") return domg::exact_strategy(role, opt);
  if (name == "one_bob") return domg::one_bob();
  if (name == "zelinka") {
    if (!built.zelinka) throw domg::parse_error("policy 'zelinka' needs --family zelinka");
    return domg::zelinka_bob(*built.zelinka);
  }
  if (name == "tree") {
    if (!built.tree) throw domg::parse_error("policy 'tree' needs --family tree");
    return built.doubled ? domg::tree_bob_doubled(*built.tree) : domg::tree_bob(*built.tree);
  }
  if (name == "clique_alice") {
    if (built.copies == 0) throw domg::parse_error("policy 'clique_alice' needs --family cliques");
    return domg::clique_alice(built.copies, built.size);
  }
  if (name == "clique_phases") {
    if (built.copies == 0)
      throw domg::parse_error("policy 'clique_phases' needs --family cliques");
    return domg::clique_bob_phases(built.copies, built.size);
  }
  throw domg::parse_error("unknown policy: " + name);
}

std::string transcript_str(const std::vector<domg::Move>& moves) {
  std::string out;
  for (size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moves[i].vertex) + ":" + std::to_string(moves[i].color);
  }
  return out;
}

int cmd_solve(const std::string& input, const std::string& first, int palette,
              const std::string& variant, uint64_t budget, bool want_line) {
  domg::Graph g = domg::load_graph_file(input);
  domg::Player x = parse_player(first);
  domg::SolveOptions opt;
  opt.max_nodes = budget;
  opt.principal_line = want_line;
  domg::GameSpec spec;
  if (variant == "win")
    spec = domg::win_spec(palette, x);
  else if (variant == "score")
    spec = domg::score_spec(palette, x);
  else if (variant == "rscore")
    spec = domg::restricted_spec(palette, x);
  else
    throw domg::parse_error("--variant must be win, score or rscore");
  domg::SolveResult r = domg::solve(g, spec, opt);
  if (spec.variant == domg::Variant::Win)
    std::cout << (r.value == 1 ? "Alice" : "Bob") << '\n';
  else
    std::cout << r.value << '\n';
  std::cout << "nodes=" << r.nodes_expanded << " table_hits=" << r.table_hits << '\n';
  if (want_line) std::cout << "line=" << transcript_str(r.principal_line) << '\n';
  return kExitOk;
}

int cmd_gamenumber(const std::string& input, const std::string& first, uint64_t budget) {
  domg::Graph g = domg::load_graph_file(input);
  domg::SolveOptions opt;
  opt.max_nodes = budget;
  std::cout << domg::game_number(g, parse_player(first), opt) << '\n';
  return kExitOk;
}

int cmd_gen(const FamilyOptions& fam) {
  BuiltFamily built = build_family(fam);
  domg::serialize_graph(built.graph, std::cout);
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& files, const std::string& corpus_spec,
               const std::vector<std::string>& bounds, int ceiling, uint64_t budget,
               int workers, bool deletion, bool glue, bool selftest_fail) {
  if (selftest_fail) {
    // negative-path fixture: a report claiming a game number above the
    // domatic number must produce a FAIL record and exit 1
    domg::BoundReport fake;
    fake.id = "selftest";
    fake.n = 2;
    fake.min_deg = 1;
    fake.max_deg = 1;
    fake.gamma = 1;
    fake.dom = 1;
    fake.ceiling = 1;
    fake.domg[0] = 2;
    fake.domg[1] = 2;
    fake.win[0].assign(1, true);
    fake.win[1].assign(1, true);
    fake.score[0].assign(1, 1);
    fake.score[1].assign(1, 1);
    fake.rscore[0].assign(1, 1);
    fake.rscore[1].assign(1, 1);
    int fails = 0;
    for (const auto& v : domg::check_bounds(fake)) {
      std::cout << domg::format_verdict(v) << '\n';
      if (v.severity == domg::Severity::FAIL) ++fails;
    }
    std::cerr << "selftest failures=" << fails << '\n';
    return fails > 0 ? kExitFail : kExitOk;
  }

  std::vector<domg::Graph> corpus;
  if (!corpus_spec.empty()) {
    if (corpus_spec.rfind("n<=", 0) != 0)
      throw domg::parse_error("--corpus expects the form n<=K");
    int max_n = std::stoi(corpus_spec.substr(3));
    corpus = domg::corpus_vector(max_n, true);
  }
  for (const auto& f : files) corpus.push_back(domg::load_graph_file(f));
  if (corpus.empty()) throw domg::parse_error("verify: no graphs given (use --corpus or --file)");

  domg::SweepConfig config;
  config.score_ceiling = ceiling;
  config.solve.max_nodes = budget;
  config.workers = workers;
  config.deletion_checks = deletion;
  config.glue_catalog = glue;

  auto selected = [&](const std::string& bound_id) {
    if (bounds.empty()) return true;
    for (const auto& b : bounds)
      if (bound_id.rfind(b, 0) == 0) return true;
    return false;
  };
  domg::SweepSummary summary = domg::sweep_corpus(corpus, config, [&](const domg::BoundVerdict& v) {
    if (selected(v.bound_id)) std::cout << domg::format_verdict(v) << '\n';
  });
  std::cerr << "graphs=" << summary.graphs << " ok=" << summary.ok
            << " warnings=" << summary.warnings << " failures=" << summary.failures << '\n';
  for (const auto& [gap, count] : summary.first_player_gap_histogram)
    std::cerr << "first-player gap " << gap << ": " << count << " graph(s)\n";
  for (const auto& ce : summary.counterexamples) std::cerr << "counterexample " << ce << '\n';
  return summary.failures == 0 ? kExitOk : kExitFail;
}

int cmd_match(const FamilyOptions& fam, const std::string& first, int palette,
              const std::string& variant, const std::string& alice_name,
              const std::string& bob_name, int seeds, uint64_t seed_base, uint64_t budget) {
  BuiltFamily built = build_family(fam);
  domg::Player x = parse_player(first);
  domg::GameSpec spec = variant == "score" ? domg::score_spec(palette, x)
                                           : domg::win_spec(palette, x);
  if (variant != "win" && variant != "score")
    throw domg::parse_error("--variant must be win or score");
  domg::SolveOptions opt;
  opt.max_nodes = budget;

  int alice_wins = 0, bob_wins = 0, forfeits = 0;
  for (int i = 0; i < seeds; ++i) {
    uint64_t seed = seed_base + uint64_t(i);
    auto alice = alice_name == "random" ? domg::random_strategy(seed * 2 + 1)
                                        : build_policy(alice_name, domg::Player::Alice, built, opt);
    auto bob = bob_name == "random" ? domg::random_strategy(seed * 2 + 2)
                                    : build_policy(bob_name, domg::Player::Bob, built, opt);
    domg::MatchRecord rec = domg::play_match(built.graph, spec, *alice, *bob, seed);
    std::cout << seed << '\t'
              << (rec.winner ? std::string(1, domg::player_letter(*rec.winner)) : "-") << '\t'
              << (rec.score ? std::to_string(*rec.score) : "-") << '\t'
              << transcript_str(rec.transcript) << '\t';
    if (rec.violations.empty())
      std::cout << "-";
    else
      for (const auto& v : rec.violations) std::cout << v << ';';
    std::cout << '\n';
    if (rec.forfeited_by) ++forfeits;
    if (rec.winner == domg::Player::Alice) ++alice_wins;
    if (rec.winner == domg::Player::Bob) ++bob_wins;
  }
  std::cerr << "alice_wins=" << alice_wins << " bob_wins=" << bob_wins
            << " forfeits=" << forfeits << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domatic game toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "perfect-play value of one game");
  std::string solve_input, solve_first = "A", solve_variant = "win";
  int solve_palette = 2;
  uint64_t solve_budget = UINT64_MAX;
  bool solve_line = false;
  solve->add_option("--input", solve_input, "graph file")->required();
  solve->add_option("--first", solve_first, "first player, A or B");
  solve->add_option("--palette", solve_palette, "palette size");
  solve->add_option("--variant", solve_variant, "win, score or rscore");
  solve->add_option("--budget", solve_budget, "node ceiling");
  solve->add_flag("--line", solve_line, "print a principal line");

  // gamenumber
  auto* gamenum = app.add_subcommand("gamenumber", "largest Alice-winning palette");
  std::string gn_input, gn_first = "A";
  uint64_t gn_budget = UINT64_MAX;
  gamenum->add_option("--input", gn_input, "graph file")->required();
  gamenum->add_option("--first", gn_first, "first player, A or B");
  gamenum->add_option("--budget", gn_budget, "node ceiling");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a graph family member as a graph file");
  FamilyOptions gen_fam;
  add_family_flags(gen, gen_fam, true);

  // verify
  auto* verify = app.add_subcommand("verify", "check the bound catalog over graphs");
  std::vector<std::string> verify_files, verify_bounds;
  std::string verify_corpus;
  int verify_ceiling = 5, verify_workers = 1;
  uint64_t verify_budget = UINT64_MAX;
  bool verify_no_deletion = false, verify_no_glue = false, verify_selftest = false;
  verify->add_option("--file", verify_files, "graph file(s)");
  verify->add_option("--corpus", verify_corpus, "corpus spec, e.g. n<=4");
  verify->add_option("--bounds", verify_bounds, "bound id prefixes to report")->delimiter(',');
  verify->add_option("--ceiling", verify_ceiling, "score table palette ceiling");
  verify->add_option("--workers", verify_workers, "worker threads");
  verify->add_option("--budget", verify_budget, "node ceiling per solve");
  verify->add_flag("--no-deletion", verify_no_deletion, "skip deletion sweeps");
  verify->add_flag("--no-glue", verify_no_glue, "skip the glued-pair catalog");
  verify->add_flag("--selftest-fail", verify_selftest)->group("");

  // match
  auto* match = app.add_subcommand("match", "play strategies against each other");
  FamilyOptions match_fam;
  add_family_flags(match, match_fam, false);
  std::string match_first = "A", match_variant = "win", match_alice = "random",
              match_bob = "random";
  int match_palette = 2, match_seeds = 1;
  uint64_t match_seed_base = 1, match_budget = UINT64_MAX;
  match->add_option("--first", match_first, "first player, A or B");
  match->add_option("--palette", match_palette, "palette size");
  match->add_option("--variant", match_variant, "win or score");
  match->add_option("--alice", match_alice, "policy: random, lowest, exact, clique_alice");
  match->add_option("--bob", match_bob,
                    "policy: random, lowest, exact, one_bob, zelinka, tree, clique_phases");
  match->add_option("--seeds", match_seeds, "number of seeded matches");
  match->add_option("--seed", match_seed_base, "base seed");
  match->add_option("--budget", match_budget, "node ceiling for exact policies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve)
      return cmd_solve(solve_input, solve_first, solve_palette, solve_variant, solve_budget,
                       solve_line);
    if (*gamenum) return cmd_gamenumber(gn_input, gn_first, gn_budget);
    if (*gen) return cmd_gen(gen_fam);
    if (*verify)
      return cmd_verify(verify_files, verify_corpus, verify_bounds, verify_ceiling,
                        verify_budget, verify_workers, !verify_no_deletion, !verify_no_glue,
                        verify_selftest);
    if (*match)
      return cmd_match(match_fam, match_first, match_palette, match_variant, match_alice,
                       match_bob, match_seeds, match_seed_base, match_budget);
  } catch (const domg::budget_exhausted_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
