#include "nashpg/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nashpg {

NormalFormGame NormalFormGame::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("matrix game needs at least one row and column");
  NormalFormGame g;
  g.rows = static_cast<int>(rows.size());
  g.cols = static_cast<int>(rows.front().size());
  g.payoff.reserve(static_cast<std::size_t>(g.rows) * g.cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != g.cols)
      throw std::invalid_argument("matrix game rows have unequal lengths");
    for (double v : row) {
      if (!std::isfinite(v))
        throw std::invalid_argument("matrix game entries must be finite");
      g.payoff.push_back(v);
    }
  }
  return g;
}

NormalFormGame NormalFormGame::parse(std::istream& in, const std::string& source) {
  auto fail = [&](int line, const std::string& what) {
    std::ostringstream msg;
    msg << source << ": parse error at line " << line << ": " << what;
    throw std::invalid_argument(msg.str());
  };

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) fail(1, "missing header line \"m n\"");
  ++line_no;
  std::istringstream header(line);
  int m = 0, n = 0;
  if (!(header >> m >> n) || m < 1 || n < 1)
    fail(line_no, "expected two positive integers \"m n\"");

  NormalFormGame g;
  g.rows = m;
  g.cols = n;
  g.payoff.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) fail(line_no + 1, "missing matrix row");
    ++line_no;
    std::istringstream row(line);
    for (int j = 0; j < n; ++j) {
      double v;
      if (!(row >> v)) fail(line_no, "expected " + std::to_string(n) + " numeric entries");
      if (!std::isfinite(v)) fail(line_no, "entry is not finite");
      g.at(i, j) = v;
    }
    double extra;
    if (row >> extra) fail(line_no, "trailing entries beyond " + std::to_string(n) + " columns");
  }
  return g;
}

NormalFormGame NormalFormGame::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  return parse(in, path);
}

NormalFormGame matching_pennies() {
  return NormalFormGame::from_rows({{1, -1}, {-1, 1}});
}

NormalFormGame rock_paper_scissors() {
  return NormalFormGame::from_rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
}

static void check_dims(const NormalFormGame& game, const MixedProfile& z) {
  if (static_cast<int>(z.x.size()) != game.rows || static_cast<int>(z.y.size()) != game.cols)
    throw std::invalid_argument("profile dimensions do not match game");
}

double payoff(const NormalFormGame& game, const MixedProfile& z) {
  check_dims(game, z);
  double total = 0.0;
  for (int i = 0; i < game.rows; ++i) {
    double row = 0.0;
    for (int j = 0; j < game.cols; ++j) row += game.at(i, j) * z.y[j];
    total += z.x[i] * row;
  }
  return total;
}

std::vector<double> row_values(const NormalFormGame& game, const std::vector<double>& y) {
  if (static_cast<int>(y.size()) != game.cols)
    throw std::invalid_argument("y dimension does not match game");
  std::vector<double> v(static_cast<std::size_t>(game.rows), 0.0);
  for (int i = 0; i < game.rows; ++i)
    for (int j = 0; j < game.cols; ++j) v[i] += game.at(i, j) * y[j];
  return v;
}

std::vector<double> col_values(const NormalFormGame& game, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != game.rows)
    throw std::invalid_argument("x dimension does not match game");
  std::vector<double> v(static_cast<std::size_t>(game.cols), 0.0);
  for (int i = 0; i < game.rows; ++i)
    for (int j = 0; j < game.cols; ++j) v[j] += game.at(i, j) * x[i];
  return v;
}

double exploitability(const NormalFormGame& game, const MixedProfile& z) {
  check_dims(game, z);
  const std::vector<double> ay = row_values(game, z.y);
  const std::vector<double> atx = col_values(game, z.x);
  const double best_row = *std::max_element(ay.begin(), ay.end());
  const double best_col = *std::min_element(atx.begin(), atx.end());
  return 0.5 * (best_row - best_col);
}

double spectral_norm(const NormalFormGame& game) {
  // Power iteration on the Gram matrix A'A; sigma_max = sqrt(lambda_max).
  std::vector<double> v(static_cast<std::size_t>(game.cols));
  for (int j = 0; j < game.cols; ++j) v[j] = 1.0 + 1e-3 * (j + 1);
  double norm = 0.0;
  for (double p : v) norm += p * p;
  norm = std::sqrt(norm);
  for (double& p : v) p /= norm;

  double lambda = 0.0;
  for (int iter = 0; iter < 50; ++iter) {
    const std::vector<double> av = row_values(game, v);
    std::vector<double> w(static_cast<std::size_t>(game.cols), 0.0);
    for (int i = 0; i < game.rows; ++i)
      for (int j = 0; j < game.cols; ++j) w[j] += game.at(i, j) * av[i];
    double wnorm = 0.0;
    for (double p : w) wnorm += p * p;
    wnorm = std::sqrt(wnorm);
    if (wnorm == 0.0) return 0.0;
    for (double& p : w) p /= wnorm;
    if (std::abs(wnorm - lambda) <= 1e-10 * std::max(1.0, wnorm)) {
      lambda = wnorm;
      v = std::move(w);
      break;
    }
    lambda = wnorm;
    v = std::move(w);
  }
  return std::sqrt(lambda);
}

}  // namespace nashpg
