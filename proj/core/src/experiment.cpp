#include "nashpg/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "nashpg/efg_nfg.hpp"
#include "nashpg/games.hpp"
#include "nashpg/random.hpp"

namespace fs = std::filesystem;

namespace nashpg {

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::SolveNfg: return "solve_nfg";
    case ExperimentKind::SolveEfgExact: return "solve_efg_exact";
    case ExperimentKind::NashPg: return "nashpg";
    case ExperimentKind::Anneal: return "anneal";
    case ExperimentKind::AlphaSweep: return "alpha_sweep";
    case ExperimentKind::Tournament: return "tournament";
    case ExperimentKind::Evaluate: return "evaluate";
  }
  return "unknown";
}

namespace {

ExperimentKind kind_from_name(const std::string& name) {
  if (name == "solve" || name == "solve_nfg") return ExperimentKind::SolveNfg;
  if (name == "solve_efg_exact") return ExperimentKind::SolveEfgExact;
  if (name == "train" || name == "nashpg") return ExperimentKind::NashPg;
  if (name == "anneal") return ExperimentKind::Anneal;
  if (name == "sweep" || name == "alpha_sweep") return ExperimentKind::AlphaSweep;
  if (name == "tournament") return ExperimentKind::Tournament;
  if (name == "evaluate") return ExperimentKind::Evaluate;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("key " + key + ": expected a number, got \"" + value + "\"");
  }
  if (pos != value.size())
    throw std::invalid_argument("key " + key + ": expected a number, got \"" + value + "\"");
  return v;
}

long parse_long(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("key " + key + ": expected an integer, got \"" + value + "\"");
  }
  if (pos != value.size())
    throw std::invalid_argument("key " + key + ": expected an integer, got \"" + value + "\"");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("key " + key + ": expected true/false, got \"" + value + "\"");
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
  std::vector<T> out;
  std::string item;
  std::istringstream ss(value);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse(key, item));
  if (out.empty()) throw std::invalid_argument("key " + key + ": empty list");
  return out;
}

void apply_entry(ExperimentSpec& spec, const std::string& key, const std::string& value) {
  if (key == "kind") {
    spec.kind = kind_from_name(value);
  } else if (key == "game") {
    spec.game = value;
  } else if (key == "alpha") {
    const double v = parse_double(key, value);
    spec.solver.alpha = v;
    spec.train.alpha = v;
  } else if (key == "eta") {
    const double v = parse_double(key, value);
    spec.solver.eta = v;
    spec.train.eta = v;
  } else if (key == "inner") {
    const long v = parse_long(key, value);
    spec.solver.inner_max_iters = static_cast<int>(v);
    spec.train.inner_iters = static_cast<int>(v);
  } else if (key == "outer") {
    const long v = parse_long(key, value);
    spec.solver.outer_iters = static_cast<int>(v);
    spec.train.outer_iters = static_cast<int>(v);
  } else if (key == "inner_tol") {
    spec.solver.inner_tol = parse_double(key, value);
  } else if (key == "batch") {
    spec.train.batch_size = static_cast<int>(parse_long(key, value));
  } else if (key == "eval_every") {
    spec.train.eval_every = parse_long(key, value);
  } else if (key == "kl_averaging") {
    if (value == "visit")
      spec.train.kl_averaging = KlAveraging::VisitWeighted;
    else if (value == "uniform")
      spec.train.kl_averaging = KlAveraging::UniformOverVisited;
    else
      throw std::invalid_argument("key kl_averaging: expected visit or uniform");
  } else if (key == "seeds") {
    spec.seeds = parse_list<std::uint64_t>(key, value, [](const std::string& k, const std::string& v) {
      const long s = parse_long(k, v);
      if (s < 0) throw std::invalid_argument("key seeds: must be nonnegative");
      return static_cast<std::uint64_t>(s);
    });
  } else if (key == "alphas") {
    spec.alphas = parse_list<double>(key, value, parse_double);
  } else if (key == "out") {
    spec.out_dir = value;
  } else if (key == "checkpoints") {
    spec.checkpoints_dir = value;
  } else if (key == "checkpoint") {
    spec.checkpoint_prefix = value;
  } else if (key == "save_checkpoints") {
    spec.save_checkpoints = parse_bool(key, value);
  } else if (key == "mode") {
    if (value != "sampled" && value != "exact")
      throw std::invalid_argument("key mode: expected sampled or exact");
    spec.anneal_mode = value;
  } else if (key == "anneal_alpha_final") {
    if (!spec.solver.anneal) spec.solver.anneal = AnnealSchedule{};
    if (!spec.train.anneal) spec.train.anneal = AnnealSchedule{};
    const double v = parse_double(key, value);
    spec.solver.anneal->alpha_final = v;
    spec.train.anneal->alpha_final = v;
  } else if (key == "anneal_eta_final") {
    if (!spec.solver.anneal) spec.solver.anneal = AnnealSchedule{};
    if (!spec.train.anneal) spec.train.anneal = AnnealSchedule{};
    const double v = parse_double(key, value);
    spec.solver.anneal->eta_final = v;
    spec.train.anneal->eta_final = v;
  } else if (key == "rounds") {
    spec.tournament.rounds = static_cast<int>(parse_long(key, value));
  } else if (key == "games_per_match") {
    spec.tournament.games_per_match = static_cast<int>(parse_long(key, value));
  } else if (key == "k_factor") {
    spec.tournament.k_factor = parse_double(key, value);
  } else if (key == "tournament_seed") {
    spec.tournament.seed = static_cast<std::uint64_t>(parse_long(key, value));
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

}  // namespace

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  KeyValues entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const auto vstart = value.find_first_not_of(" \t");
    value = vstart == std::string::npos ? std::string{} : value.substr(vstart);
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

ExperimentSpec parse_spec(const KeyValues& file_entries, const KeyValues& overrides) {
  ExperimentSpec spec;
  for (const auto& [key, value] : file_entries) apply_entry(spec, key, value);
  for (const auto& [key, value] : overrides) apply_entry(spec, key, value);
  spec.validate();
  return spec;
}

void ExperimentSpec::validate() const {
  solver.validate();
  train.validate();
  tournament.validate();
  if (game.empty()) throw std::invalid_argument("game must be set");
  if (seeds.empty()) throw std::invalid_argument("seeds must be nonempty");
  if (kind == ExperimentKind::AlphaSweep) {
    if (alphas.empty()) throw std::invalid_argument("alphas must be nonempty");
    for (double a : alphas)
      if (!(a > 0.0)) throw std::invalid_argument("alphas must be positive");
  }
  if (kind == ExperimentKind::Tournament && checkpoints_dir.empty())
    throw std::invalid_argument("tournament requires checkpoints=<dir>");
  if (kind == ExperimentKind::Evaluate && checkpoint_prefix.empty())
    throw std::invalid_argument("evaluate requires checkpoint=<prefix>");
}

std::string manifest_text(const ExperimentSpec& spec) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "kind=" << kind_name(spec.kind) << '\n';
  out << "game=" << spec.game << '\n';
  out << "alpha=" << spec.train.alpha << '\n';
  out << "eta=" << spec.train.eta << '\n';
  out << "inner=" << spec.train.inner_iters << '\n';
  out << "outer=" << spec.train.outer_iters << '\n';
  out << "inner_tol=" << spec.solver.inner_tol << '\n';
  out << "batch=" << spec.train.batch_size << '\n';
  out << "eval_every=" << spec.train.eval_every << '\n';
  out << "kl_averaging="
      << (spec.train.kl_averaging == KlAveraging::VisitWeighted ? "visit" : "uniform") << '\n';
  out << "seeds=";
  for (std::size_t i = 0; i < spec.seeds.size(); ++i)
    out << (i ? "," : "") << spec.seeds[i];
  out << '\n';
  out << "alphas=";
  for (std::size_t i = 0; i < spec.alphas.size(); ++i)
    out << (i ? "," : "") << spec.alphas[i];
  out << '\n';
  if (spec.train.anneal) {
    out << "anneal_alpha_final=" << spec.train.anneal->alpha_final << '\n';
    if (spec.train.anneal->eta_final)
      out << "anneal_eta_final=" << *spec.train.anneal->eta_final << '\n';
  }
  out << "mode=" << spec.anneal_mode << '\n';
  out << "save_checkpoints=" << (spec.save_checkpoints ? "true" : "false") << '\n';
  if (!spec.checkpoints_dir.empty()) out << "checkpoints=" << spec.checkpoints_dir << '\n';
  if (!spec.checkpoint_prefix.empty()) out << "checkpoint=" << spec.checkpoint_prefix << '\n';
  out << "rounds=" << spec.tournament.rounds << '\n';
  out << "games_per_match=" << spec.tournament.games_per_match << '\n';
  out << "k_factor=" << spec.tournament.k_factor << '\n';
  out << "tournament_seed=" << spec.tournament.seed << '\n';
  if (!spec.out_dir.empty()) out << "out=" << spec.out_dir << '\n';
  return out.str();
}

namespace {

struct SeriesPoint {
  double key = 0.0;  // step or outer iteration
  double value = 0.0;
};

void write_aggregate_csv(const fs::path& path, const std::string& key_name,
                         const std::vector<std::vector<SeriesPoint>>& per_seed) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << std::setprecision(17);
  out << key_name << ",mean_exploitability,sd_exploitability\n";
  if (per_seed.empty()) return;
  const std::size_t rows = per_seed.front().size();
  for (const auto& series : per_seed)
    if (series.size() != rows)
      throw std::runtime_error("aggregate: per-seed series have different lengths");
  for (std::size_t r = 0; r < rows; ++r) {
    double mean = 0.0;
    for (const auto& series : per_seed) mean += series[r].value;
    mean /= static_cast<double>(per_seed.size());
    double var = 0.0;
    for (const auto& series : per_seed) {
      const double d = series[r].value - mean;
      var += d * d;
    }
    const double sd =
        per_seed.size() > 1 ? std::sqrt(var / static_cast<double>(per_seed.size() - 1)) : 0.0;
    out << per_seed.front()[r].key << ',' << mean << ',' << sd << '\n';
  }
}

fs::path prepare_out_dir(const ExperimentSpec& spec) {
  if (spec.out_dir.empty())
    throw std::invalid_argument("out directory must be set (out=<dir>)");
  fs::path dir(spec.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest) throw std::runtime_error("output directory not writable: " + dir.string());
  manifest << manifest_text(spec);
  return dir;
}

NormalFormGame resolve_matrix_game(const ExperimentSpec& spec, ExperimentKind kind) {
  if (spec.game.rfind("matrix:", 0) == 0) return NormalFormGame::load(spec.game.substr(7));
  if (kind == ExperimentKind::SolveNfg || kind == ExperimentKind::SolveEfgExact ||
      spec.anneal_mode == "exact") {
    const ExtensiveFormGame efg = make_game(spec.game);
    return efg_to_nfg(efg).game;
  }
  throw std::invalid_argument("game " + spec.game + " is not a matrix game");
}

void run_solve(const ExperimentSpec& spec) {
  const fs::path dir = prepare_out_dir(spec);
  const NormalFormGame game = resolve_matrix_game(spec, spec.kind);
  const BregmanGeometry geom;

  std::vector<std::vector<SeriesPoint>> series;
  double final_exploitability = 0.0;
  for (std::uint64_t seed : spec.seeds) {
    std::mt19937_64 rng(split_seed(seed, 0x736f6c76));
    const MixedProfile z0 = random_interior_profile(game.rows, game.cols, rng);
    const RunRecord record = spec.kind == ExperimentKind::Anneal
                                 ? mmd_anneal(game, geom, z0, spec.solver)
                                 : iterative_m(game, geom, z0, spec.solver);
    std::ofstream out(dir / ("seed" + std::to_string(seed) + ".csv"));
    out << std::setprecision(17);
    record.write_csv(out);
    std::vector<SeriesPoint> s;
    for (const auto& row : record.iterations)
      s.push_back({static_cast<double>(row.t), row.exploitability});
    final_exploitability = record.iterations.back().exploitability;
    series.push_back(std::move(s));
  }
  write_aggregate_csv(dir / "aggregate.csv", "t", series);
  std::printf("%s %s: final exploitability %.3g (last seed)\n", kind_name(spec.kind),
              spec.game.c_str(), final_exploitability);
}

TrainConfig train_config_for_seed(const ExperimentSpec& spec, std::uint64_t seed, bool anneal) {
  TrainConfig cfg = spec.train;
  cfg.seed = seed;
  if (anneal && !cfg.anneal) cfg.anneal = AnnealSchedule{};
  if (!anneal) cfg.anneal.reset();
  return cfg;
}

std::vector<TrainRecord> run_training_seeds(const ExtensiveFormGame& game,
                                            const ExperimentSpec& spec, bool anneal) {
  std::vector<std::future<TrainRecord>> futures;
  futures.reserve(spec.seeds.size());
  for (std::uint64_t seed : spec.seeds) {
    TrainConfig cfg = train_config_for_seed(spec, seed, anneal);
    futures.push_back(std::async(std::launch::async, [&game, cfg, anneal] {
      return anneal ? train_anneal(game, cfg) : train_nashpg(game, cfg);
    }));
  }
  std::vector<TrainRecord> records;
  records.reserve(futures.size());
  for (auto& f : futures) records.push_back(f.get());
  return records;
}

void write_train_outputs(const fs::path& dir, const ExperimentSpec& spec,
                         const std::vector<TrainRecord>& records) {
  std::vector<std::vector<SeriesPoint>> series;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const std::uint64_t seed = spec.seeds[k];
    std::ofstream out(dir / ("seed" + std::to_string(seed) + ".csv"));
    out << std::setprecision(17);
    records[k].write_csv(out);
    std::vector<SeriesPoint> s;
    for (const auto& cp : records[k].checkpoints)
      s.push_back({static_cast<double>(cp.step), cp.exploitability});
    series.push_back(std::move(s));

    if (spec.save_checkpoints) {
      const fs::path ckpt_dir = dir / "checkpoints" / ("seed" + std::to_string(seed));
      fs::create_directories(ckpt_dir);
      for (const auto& cp : records[k].checkpoints) {
        std::ostringstream name;
        name << "step" << std::setw(8) << std::setfill('0') << cp.step;
        save_checkpoint((ckpt_dir / name.str()).string(), cp.policies);
      }
    }
  }
  write_aggregate_csv(dir / "aggregate.csv", "step", series);
}

void run_train(const ExperimentSpec& spec, bool anneal) {
  const fs::path dir = prepare_out_dir(spec);
  if (anneal && spec.anneal_mode == "exact") {
    ExperimentSpec exact = spec;
    if (!exact.solver.anneal) exact.solver.anneal = AnnealSchedule{};
    run_solve(exact);
    return;
  }
  const ExtensiveFormGame game = make_game(spec.game);
  const std::vector<TrainRecord> records = run_training_seeds(game, spec, anneal);
  write_train_outputs(dir, spec, records);

  double mean_final = 0.0;
  for (const auto& r : records) mean_final += r.checkpoints.back().exploitability;
  mean_final /= static_cast<double>(records.size());
  std::printf("%s %s: mean final exploitability %.4g over %zu seeds\n",
              kind_name(spec.kind), spec.game.c_str(), mean_final, records.size());
}

void run_sweep(const ExperimentSpec& spec) {
  const fs::path dir = prepare_out_dir(spec);
  const ExtensiveFormGame game = make_game(spec.game);

  std::ofstream summary(dir / "summary.csv");
  summary << std::setprecision(17);
  summary << "alpha,game,mean_final_exploitability,sd_final_exploitability\n";
  for (double alpha : spec.alphas) {
    ExperimentSpec sub = spec;
    sub.train.alpha = alpha;
    const std::vector<TrainRecord> records = run_training_seeds(game, sub, false);

    std::ostringstream sub_name;
    sub_name << "alpha_" << alpha;
    ExperimentSpec sub_out = sub;
    sub_out.out_dir = (dir / sub_name.str()).string();
    const fs::path sub_dir = prepare_out_dir(sub_out);
    write_train_outputs(sub_dir, sub, records);

    double mean = 0.0;
    for (const auto& r : records) mean += r.checkpoints.back().exploitability;
    mean /= static_cast<double>(records.size());
    double var = 0.0;
    for (const auto& r : records) {
      const double d = r.checkpoints.back().exploitability - mean;
      var += d * d;
    }
    const double sd = records.size() > 1
                          ? std::sqrt(var / static_cast<double>(records.size() - 1))
                          : 0.0;
    summary << alpha << ',' << spec.game << ',' << mean << ',' << sd << '\n';
    std::printf("alpha_sweep %s alpha=%g: final exploitability %.4g +- %.4g\n",
                spec.game.c_str(), alpha, mean, sd);
  }
}

std::vector<TournamentEntry> load_checkpoint_dir(const std::string& dir,
                                                 const ExtensiveFormGame& game) {
  std::vector<std::string> prefixes;
  const std::string suffix = ".p1.policy";
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().string();
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      prefixes.push_back(name.substr(0, name.size() - suffix.size()));
  }
  std::sort(prefixes.begin(), prefixes.end());
  std::vector<TournamentEntry> entries;
  for (const std::string& prefix : prefixes)
    entries.push_back({fs::path(prefix).filename().string(), load_checkpoint(prefix, game)});
  if (entries.size() < 2)
    throw std::invalid_argument("tournament needs at least two checkpoints in " + dir);
  return entries;
}

void run_tournament(const ExperimentSpec& spec) {
  const fs::path dir = prepare_out_dir(spec);
  const ExtensiveFormGame game = make_game(spec.game);
  const std::vector<TournamentEntry> entries = load_checkpoint_dir(spec.checkpoints_dir, game);
  const TournamentResult result = swiss_tournament(game, entries, spec.tournament);

  std::ofstream history(dir / "history.csv");
  history << std::setprecision(17);
  result.write_history_csv(history);
  std::ofstream standings(dir / "standings.csv");
  standings << std::setprecision(17);
  result.write_standings_csv(standings);
  std::printf("tournament %s: %zu entries, winner %s (%.1f)\n", spec.game.c_str(),
              entries.size(), result.standings.front().id.c_str(),
              result.standings.front().rating);
}

void run_evaluate(const ExperimentSpec& spec) {
  const fs::path dir = prepare_out_dir(spec);
  const ExtensiveFormGame game = make_game(spec.game);
  const JointPolicy policies = load_checkpoint(spec.checkpoint_prefix, game);
  const BehavioralProfile profile = behavioral_from_policies(game, policies);
  const double expl = exploitability(game, profile);
  const double value = expected_payoff(game, profile);

  std::ofstream out(dir / "evaluate.csv");
  out << std::setprecision(17);
  out << "checkpoint,exploitability,expected_payoff_p1\n";
  out << fs::path(spec.checkpoint_prefix).filename().string() << ',' << expl << ',' << value
      << '\n';
  std::printf("evaluate %s: exploitability %.6g, expected payoff %.6g\n",
              spec.checkpoint_prefix.c_str(), expl, value);
}

}  // namespace

void run(const ExperimentSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ExperimentKind::SolveNfg:
    case ExperimentKind::SolveEfgExact:
      run_solve(spec);
      return;
    case ExperimentKind::NashPg:
      run_train(spec, false);
      return;
    case ExperimentKind::Anneal:
      run_train(spec, true);
      return;
    case ExperimentKind::AlphaSweep:
      run_sweep(spec);
      return;
    case ExperimentKind::Tournament:
      run_tournament(spec);
      return;
    case ExperimentKind::Evaluate:
      run_evaluate(spec);
      return;
  }
}

}  // namespace nashpg
