#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "nashpg/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::string game, alpha, eta, inner, outer, batch, seeds, out;
  std::string inner_tol, eval_every, kl_averaging, alphas;
  std::string anneal_alpha_final, anneal_eta_final, mode, save_checkpoints;
  std::string checkpoints, checkpoint, rounds, games_per_match, k_factor, tournament_seed;
};

void add_common_options(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "flat key=value config file");
  cmd->add_option("--game", f.game, "kuhn, leduc, or matrix:<path>");
  cmd->add_option("--alpha", f.alpha, "regularization strength");
  cmd->add_option("--eta", f.eta, "step size");
  cmd->add_option("--inner", f.inner, "inner iterations per outer round (K)");
  cmd->add_option("--outer", f.outer, "outer rounds (T)");
  cmd->add_option("--batch", f.batch, "trajectories per update");
  cmd->add_option("--seeds", f.seeds, "comma-separated seed list");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--inner-tol", f.inner_tol, "inner loop stopping tolerance");
  cmd->add_option("--eval-every", f.eval_every, "steps between exploitability checkpoints");
  cmd->add_option("--kl-averaging", f.kl_averaging, "visit or uniform");
  cmd->add_option("--alphas", f.alphas, "comma-separated sweep values");
  cmd->add_option("--anneal-alpha-final", f.anneal_alpha_final, "terminal alpha of the decay");
  cmd->add_option("--anneal-eta-final", f.anneal_eta_final, "terminal eta of the decay");
  cmd->add_option("--mode", f.mode, "anneal mode: sampled or exact");
  cmd->add_option("--save-checkpoints", f.save_checkpoints, "write policy checkpoints (true/false)");
  cmd->add_option("--checkpoints", f.checkpoints, "checkpoint directory (tournament input)");
  cmd->add_option("--checkpoint", f.checkpoint, "checkpoint prefix (evaluate input)");
  cmd->add_option("--rounds", f.rounds, "tournament rounds");
  cmd->add_option("--games-per-match", f.games_per_match, "games per tournament match");
  cmd->add_option("--k-factor", f.k_factor, "Elo K factor");
  cmd->add_option("--tournament-seed", f.tournament_seed, "tournament RNG seed");
}

void collect(nashpg::KeyValues& kv, const std::string& key, const std::string& value) {
  if (!value.empty()) kv.emplace_back(key, value);
}

nashpg::KeyValues overrides_from_flags(const CommonFlags& f) {
  nashpg::KeyValues kv;
  collect(kv, "game", f.game);
  collect(kv, "alpha", f.alpha);
  collect(kv, "eta", f.eta);
  collect(kv, "inner", f.inner);
  collect(kv, "outer", f.outer);
  collect(kv, "batch", f.batch);
  collect(kv, "seeds", f.seeds);
  collect(kv, "out", f.out);
  collect(kv, "inner_tol", f.inner_tol);
  collect(kv, "eval_every", f.eval_every);
  collect(kv, "kl_averaging", f.kl_averaging);
  collect(kv, "alphas", f.alphas);
  collect(kv, "anneal_alpha_final", f.anneal_alpha_final);
  collect(kv, "anneal_eta_final", f.anneal_eta_final);
  collect(kv, "mode", f.mode);
  collect(kv, "save_checkpoints", f.save_checkpoints);
  collect(kv, "checkpoints", f.checkpoints);
  collect(kv, "checkpoint", f.checkpoint);
  collect(kv, "rounds", f.rounds);
  collect(kv, "games_per_match", f.games_per_match);
  collect(kv, "k_factor", f.k_factor);
  collect(kv, "tournament_seed", f.tournament_seed);
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nashpg: zero-sum game solving by iteratively refined regularization"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* kind;
    const char* help;
  };
  const Sub subs[] = {
      {"solve", "solve", "exact iterative refinement on a matrix or converted game"},
      {"train", "train", "sampled self-play policy-gradient training"},
      {"anneal", "anneal", "decaying-regularization ablation"},
      {"sweep", "sweep", "train across several alpha values"},
      {"tournament", "tournament", "Swiss Elo tournament over saved checkpoints"},
      {"evaluate", "evaluate", "exact exploitability of one checkpoint"},
  };

  CommonFlags flags[std::size(subs)];
  CLI::App* cmds[std::size(subs)];
  for (std::size_t i = 0; i < std::size(subs); ++i) {
    cmds[i] = app.add_subcommand(subs[i].name, subs[i].help);
    add_common_options(cmds[i], flags[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (std::size_t i = 0; i < std::size(subs); ++i) {
    if (!cmds[i]->parsed()) continue;
    try {
      nashpg::KeyValues file_entries;
      if (!flags[i].config.empty())
        file_entries = nashpg::read_key_value_file(flags[i].config);
      nashpg::KeyValues overrides = overrides_from_flags(flags[i]);
      overrides.emplace_back("kind", subs[i].kind);
      const nashpg::ExperimentSpec spec = nashpg::parse_spec(file_entries, overrides);
      nashpg::run(spec);
      return 0;
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 1;
    } catch (const std::domain_error& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 1;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "runtime failure: %s\n", e.what());
      return 2;
    }
  }
  return 1;
}
