#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nashpg/elo.hpp"
#include "nashpg/solver.hpp"
#include "nashpg/train.hpp"

namespace nashpg {

enum class ExperimentKind {
  SolveNfg,       // iterative refinement on a matrix game
  SolveEfgExact,  // convert an extensive-form game, then solve exactly
  NashPg,         // sampled self-play training
  Anneal,         // decaying-alpha ablation (sampled or exact)
  AlphaSweep,     // NashPg across several alpha values
  Tournament,     // Swiss tournament over saved checkpoints
  Evaluate,       // exact exploitability of one checkpoint
};

const char* kind_name(ExperimentKind kind);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::SolveNfg;
  std::string game = "kuhn";
  SolverConfig solver;
  TrainConfig train;
  TournamentConfig tournament;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3};
  std::vector<double> alphas{0.1, 0.2, 0.4};  // sweep values
  std::string out_dir;
  std::string checkpoints_dir;    // tournament input
  std::string checkpoint_prefix;  // evaluate input
  std::string anneal_mode = "sampled";  // or "exact"
  bool save_checkpoints = false;

  void validate() const;  // throws std::invalid_argument
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat key=value lines; '#' starts a comment. Throws on malformed lines.
KeyValues read_key_value_file(const std::string& path);

// Builds a spec from file entries then command-line overrides (which win).
// Unknown keys and type mismatches throw std::invalid_argument.
ExperimentSpec parse_spec(const KeyValues& file_entries, const KeyValues& overrides);

// The resolved configuration in the same key=value format parse_spec
// accepts, written to <out>/manifest.txt by run().
std::string manifest_text(const ExperimentSpec& spec);

// Executes the experiment and writes per-seed CSVs, an aggregate CSV, and
// the manifest under spec.out_dir. Throws on failure.
void run(const ExperimentSpec& spec);

}  // namespace nashpg
