#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "nashpg/experiment.hpp"
#include "nashpg/games.hpp"

using namespace nashpg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str(const std::string& sub = "") const {
    return (sub.empty() ? path : path / sub).string();
  }
};

std::string write_matching_pennies(const TempDir& dir) {
  const std::string path = dir.str("mp.txt");
  std::ofstream out(path);
  out << "2 2\n1 -1\n-1 1\n";
  return path;
}

std::vector<std::vector<double>> read_csv_numbers(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("parse_spec: defaults resolve to the documented values") {
  const ExperimentSpec spec = parse_spec({}, {{"kind", "train"}, {"game", "kuhn"}});
  CHECK(spec.kind == ExperimentKind::NashPg);
  CHECK(spec.train.alpha == 0.2);
  CHECK(spec.train.outer_iters == 50);
  CHECK(spec.train.inner_iters == 1000);
  CHECK(spec.solver.outer_iters == 50);
  CHECK(spec.solver.inner_max_iters == 1000);
  CHECK(spec.seeds == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("parse_spec: command-line overrides beat file values") {
  const KeyValues file = {{"kind", "train"}, {"game", "kuhn"}, {"alpha", "0.3"}};
  const KeyValues overrides = {{"alpha", "0.4"}, {"eta", "0.07"}};
  const ExperimentSpec spec = parse_spec(file, overrides);
  CHECK(spec.train.alpha == 0.4);
  CHECK(spec.train.eta == 0.07);
}

TEST_CASE("parse_spec: rejects unknown keys, bad types, and bad values") {
  CHECK_THROWS_WITH_AS(parse_spec({}, {{"quux", "1"}}), doctest::Contains("unknown config key"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"alpha", "fast"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"alpha", "-1"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"inner", "2.5"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"kind", "dance"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"seeds", ""}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"kl_averaging", "fancy"}}), std::invalid_argument);
}

TEST_CASE("parse_spec: lists and kind aliases") {
  const ExperimentSpec spec = parse_spec(
      {}, {{"kind", "sweep"}, {"game", "kuhn"}, {"seeds", "5,6"}, {"alphas", "0.1,0.2"}});
  CHECK(spec.kind == ExperimentKind::AlphaSweep);
  CHECK(spec.seeds == std::vector<std::uint64_t>{5, 6});
  CHECK(spec.alphas == std::vector<double>{0.1, 0.2});
}

TEST_CASE("config files: key=value lines with comments") {
  TempDir dir("nashpg_cfg_test");
  {
    std::ofstream out(dir.str("run.cfg"));
    out << "# experiment settings\n";
    out << "kind = train\n";
    out << "game= kuhn\n";
    out << "alpha =0.25   # inline comment\n";
    out << "\n";
  }
  const KeyValues entries = read_key_value_file(dir.str("run.cfg"));
  const ExperimentSpec spec = parse_spec(entries, {});
  CHECK(spec.train.alpha == 0.25);
  CHECK(spec.game == "kuhn");

  {
    std::ofstream out(dir.str("broken.cfg"));
    out << "alpha 0.2\n";
  }
  CHECK_THROWS_WITH_AS(read_key_value_file(dir.str("broken.cfg")),
                       doctest::Contains("line 1"), std::invalid_argument);
}

TEST_CASE("manifest: reparsing reproduces the spec") {
  const ExperimentSpec spec = parse_spec({}, {{"kind", "train"},
                                              {"game", "leduc"},
                                              {"alpha", "0.35"},
                                              {"batch", "64"},
                                              {"seeds", "7,8"},
                                              {"anneal_alpha_final", "0.002"},
                                              {"out", "somewhere"}});
  const std::string manifest = manifest_text(spec);
  KeyValues entries;
  std::istringstream ss(manifest);
  std::string line;
  while (std::getline(ss, line)) {
    const auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    entries.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  const ExperimentSpec reparsed = parse_spec(entries, {});
  CHECK(manifest_text(reparsed) == manifest);
}

TEST_CASE("run: exact solve on a matrix game reaches 1e-6") {
  TempDir dir("nashpg_solve_test");
  const std::string mp = write_matching_pennies(dir);
  const ExperimentSpec spec = parse_spec({}, {{"kind", "solve"},
                                              {"game", "matrix:" + mp},
                                              {"outer", "80"},
                                              {"seeds", "0,1"},
                                              {"out", dir.str("out")}});
  run(spec);

  CHECK(fs::exists(dir.path / "out" / "manifest.txt"));
  const auto aggregate = read_csv_numbers(dir.str("out/aggregate.csv"));
  REQUIRE_FALSE(aggregate.empty());
  CHECK(aggregate.back()[1] < 1e-6);  // mean final exploitability

  // Aggregate equals a recomputation from the per-seed files.
  const auto s0 = read_csv_numbers(dir.str("out/seed0.csv"));
  const auto s1 = read_csv_numbers(dir.str("out/seed1.csv"));
  REQUIRE(s0.size() == aggregate.size());
  for (std::size_t r = 0; r < aggregate.size(); ++r) {
    const double mean = 0.5 * (s0[r][1] + s1[r][1]);
    CHECK(aggregate[r][1] == doctest::Approx(mean).epsilon(1e-12));
    const double d0 = s0[r][1] - mean, d1 = s1[r][1] - mean;
    CHECK(aggregate[r][2] == doctest::Approx(std::sqrt(d0 * d0 + d1 * d1)).epsilon(1e-9));
  }
}

TEST_CASE("run: training writes per-seed CSVs, checkpoints, and identical reruns") {
  TempDir dir("nashpg_train_test");
  const KeyValues overrides = {{"kind", "train"},    {"game", "kuhn"},
                               {"inner", "40"},      {"outer", "2"},
                               {"batch", "16"},      {"seeds", "0,1"},
                               {"eval_every", "20"}, {"save_checkpoints", "true"},
                               {"out", dir.str("out")}};
  run(parse_spec({}, overrides));

  CHECK(fs::exists(dir.path / "out" / "seed0.csv"));
  CHECK(fs::exists(dir.path / "out" / "seed1.csv"));
  CHECK(fs::exists(dir.path / "out" / "aggregate.csv"));
  CHECK(fs::exists(dir.path / "out" / "checkpoints" / "seed0" / "step00000080.p1.policy"));

  std::ifstream first(dir.str("out/seed0.csv"));
  std::stringstream first_content;
  first_content << first.rdbuf();

  run(parse_spec({}, overrides));
  std::ifstream second(dir.str("out/seed0.csv"));
  std::stringstream second_content;
  second_content << second.rdbuf();
  CHECK(first_content.str() == second_content.str());
}

TEST_CASE("run: sweep emits a summary shaped like the alpha table") {
  TempDir dir("nashpg_sweep_test");
  run(parse_spec({}, {{"kind", "sweep"},
                      {"game", "kuhn"},
                      {"inner", "30"},
                      {"outer", "2"},
                      {"batch", "16"},
                      {"eval_every", "30"},
                      {"alphas", "0.1,0.2"},
                      {"seeds", "0,1"},
                      {"out", dir.str("out")}}));
  std::ifstream in(dir.str("out/summary.csv"));
  std::string header;
  std::getline(in, header);
  CHECK(header == "alpha,game,mean_final_exploitability,sd_final_exploitability");
  int rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
  CHECK(fs::exists(dir.path / "out" / "alpha_0.1" / "aggregate.csv"));
  CHECK(fs::exists(dir.path / "out" / "alpha_0.2" / "aggregate.csv"));
}

TEST_CASE("run: tournament over saved checkpoints conserves rating mass") {
  TempDir dir("nashpg_tourney_test");
  run(parse_spec({}, {{"kind", "train"},
                      {"game", "kuhn"},
                      {"inner", "100"},
                      {"outer", "1"},
                      {"batch", "32"},
                      {"seeds", "0"},
                      {"eval_every", "25"},
                      {"save_checkpoints", "true"},
                      {"out", dir.str("train")}}));
  run(parse_spec({}, {{"kind", "tournament"},
                      {"game", "kuhn"},
                      {"checkpoints", dir.str("train/checkpoints/seed0")},
                      {"rounds", "10"},
                      {"games_per_match", "10"},
                      {"out", dir.str("tourney")}}));
  const auto standings = read_csv_numbers(dir.str("tourney/standings.csv"));
  REQUIRE(standings.size() == 4);  // checkpoints at steps 25, 50, 75, 100
  double total = 0.0;
  for (const auto& row : standings) total += row.back();
  CHECK(total == doctest::Approx(1500.0 * 4).epsilon(1e-9));
}

TEST_CASE("run: evaluate reports the exact exploitability of a checkpoint") {
  TempDir dir("nashpg_eval_test");
  const ExtensiveFormGame kuhn = build_kuhn();
  save_checkpoint(dir.str("uniform"), zero_joint_policy(kuhn));
  run(parse_spec({}, {{"kind", "evaluate"},
                      {"game", "kuhn"},
                      {"checkpoint", dir.str("uniform")},
                      {"out", dir.str("out")}}));
  const auto rows = read_csv_numbers(dir.str("out/evaluate.csv"));
  REQUIRE(rows.size() == 1);
  const double expl = rows[0][1];
  BehavioralProfile uniform = uniform_behavioral(kuhn);
  CHECK(expl == doctest::Approx(exploitability(kuhn, uniform)).epsilon(1e-12));
}

TEST_CASE("run: leduc cannot be solved through the normal-form reduction") {
  TempDir dir("nashpg_cap_test");
  const ExperimentSpec spec = parse_spec(
      {}, {{"kind", "solve"}, {"game", "leduc"}, {"seeds", "0"}, {"out", dir.str("out")}});
  CHECK_THROWS_WITH_AS(run(spec), doctest::Contains("cap"), std::invalid_argument);
}

TEST_CASE("run: missing requirements are config errors") {
  CHECK_THROWS_AS(parse_spec({}, {{"kind", "tournament"}, {"game", "kuhn"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_spec({}, {{"kind", "evaluate"}, {"game", "kuhn"}}),
                  std::invalid_argument);
  const ExperimentSpec no_out =
      parse_spec({}, {{"kind", "train"}, {"game", "kuhn"}});
  CHECK_THROWS_AS(run(no_out), std::invalid_argument);
}
