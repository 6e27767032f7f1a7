#include "nashpg/policy.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nashpg {

std::vector<double> softmax(std::span<const double> logits) {
  double max_logit = -std::numeric_limits<double>::infinity();
  for (double v : logits)
    if (v > max_logit) max_logit = v;
  std::vector<double> p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - max_logit);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

std::vector<double> SoftmaxPolicy::probs(int infoset) const {
  return softmax(logits[infoset]);
}

SoftmaxPolicy SoftmaxPolicy::zeros(const ExtensiveFormGame& game, int player) {
  SoftmaxPolicy p;
  p.logits.reserve(game.infoset_num_actions[player].size());
  for (int count : game.infoset_num_actions[player])
    p.logits.emplace_back(static_cast<std::size_t>(count), 0.0);
  return p;
}

JointPolicy zero_joint_policy(const ExtensiveFormGame& game) {
  return JointPolicy{SoftmaxPolicy::zeros(game, 0), SoftmaxPolicy::zeros(game, 1)};
}

BehavioralProfile behavioral_from_policies(const ExtensiveFormGame& game,
                                           const JointPolicy& policies) {
  BehavioralProfile prof;
  for (int p = 0; p < kNumPlayers; ++p) {
    if (policies[p].logits.size() != game.infoset_num_actions[p].size())
      throw std::invalid_argument("policy does not cover every infoset");
    prof.policy[p].reserve(policies[p].logits.size());
    for (std::size_t i = 0; i < policies[p].logits.size(); ++i) {
      std::vector<double> dist = policies[p].probs(static_cast<int>(i));
      clamp_to_interior(dist);
      prof.policy[p].push_back(std::move(dist));
    }
  }
  return prof;
}

void write_policy(std::ostream& out, const SoftmaxPolicy& policy) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < policy.logits.size(); ++i)
    for (std::size_t a = 0; a < policy.logits[i].size(); ++a)
      out << i << ' ' << a << ' ' << policy.logits[i][a] << '\n';
}

SoftmaxPolicy read_policy(std::istream& in, const ExtensiveFormGame& game, int player,
                          const std::string& source) {
  SoftmaxPolicy policy = SoftmaxPolicy::zeros(game, player);
  std::vector<std::vector<char>> seen;
  for (const auto& row : policy.logits) seen.emplace_back(row.size(), 0);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    long infoset, action;
    double logit;
    if (!(ss >> infoset >> action >> logit))
      throw std::invalid_argument(source + ": bad checkpoint line " + std::to_string(line_no));
    if (infoset < 0 || infoset >= static_cast<long>(policy.logits.size()) || action < 0 ||
        action >= static_cast<long>(policy.logits[infoset].size()))
      throw std::invalid_argument(source + ": checkpoint entry out of range at line " +
                                  std::to_string(line_no));
    policy.logits[infoset][action] = logit;
    seen[infoset][action] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t a = 0; a < seen[i].size(); ++a)
      if (!seen[i][a])
        throw std::invalid_argument(source + ": checkpoint missing logit for infoset " +
                                    std::to_string(i));
  return policy;
}

void save_checkpoint(const std::string& prefix, const JointPolicy& policies) {
  for (int p = 0; p < kNumPlayers; ++p) {
    const std::string path = prefix + ".p" + std::to_string(p + 1) + ".policy";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write checkpoint file: " + path);
    write_policy(out, policies[p]);
  }
}

JointPolicy load_checkpoint(const std::string& prefix, const ExtensiveFormGame& game) {
  JointPolicy policies = zero_joint_policy(game);
  for (int p = 0; p < kNumPlayers; ++p) {
    const std::string path = prefix + ".p" + std::to_string(p + 1) + ".policy";
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open checkpoint file: " + path);
    policies[p] = read_policy(in, game, p, path);
  }
  return policies;
}

}  // namespace nashpg
