#include "nashpg/efg_nfg.hpp"

#include <stdexcept>

namespace nashpg {

namespace {

double pure_value(const ExtensiveFormGame& game, int idx, const PureStrategy& row,
                  const PureStrategy& col) {
  const EfgNode& n = game.nodes[idx];
  switch (n.kind) {
    case NodeKind::Terminal:
      return n.payoff;
    case NodeKind::Chance: {
      double v = 0.0;
      for (std::size_t k = 0; k < n.children.size(); ++k)
        v += n.chance_probs[k] * pure_value(game, n.children[k], row, col);
      return v;
    }
    case NodeKind::Decision: {
      const int a = n.player == 0 ? row.action[n.infoset] : col.action[n.infoset];
      return pure_value(game, n.children[a], row, col);
    }
  }
  return 0.0;
}

}  // namespace

NfgConversion efg_to_nfg(const ExtensiveFormGame& game, long max_entries) {
  NfgConversion conv;
  for (int p = 0; p < kNumPlayers; ++p) {
    const auto& table = game.infoset_num_actions[p];
    conv.num_actions[p] = table;
    conv.strides[p].assign(table.size(), 1);
    long total = 1;
    for (int k = static_cast<int>(table.size()) - 1; k >= 0; --k) {
      conv.strides[p][k] = total;
      if (total > max_entries / table[k] + 1)
        throw std::invalid_argument(
            "efg_to_nfg: pure-strategy space of \"" + game.name + "\" exceeds the cap");
      total *= table[k];
    }
    conv.num_pure[p] = total;
  }
  if (conv.num_pure[0] > max_entries / conv.num_pure[1])
    throw std::invalid_argument("efg_to_nfg: payoff matrix for \"" + game.name +
                                "\" exceeds the entry cap");

  conv.game.rows = static_cast<int>(conv.num_pure[0]);
  conv.game.cols = static_cast<int>(conv.num_pure[1]);
  conv.game.payoff.resize(static_cast<std::size_t>(conv.num_pure[0]) * conv.num_pure[1]);
  for (long i = 0; i < conv.num_pure[0]; ++i) {
    const PureStrategy row = decode_pure(conv, 0, i);
    for (long j = 0; j < conv.num_pure[1]; ++j) {
      const PureStrategy col = decode_pure(conv, 1, j);
      conv.game.payoff[static_cast<std::size_t>(i) * conv.num_pure[1] + j] =
          pure_value(game, game.root, row, col);
    }
  }
  return conv;
}

PureStrategy decode_pure(const NfgConversion& conv, int player, long index) {
  if (index < 0 || index >= conv.num_pure[player])
    throw std::invalid_argument("decode_pure: index out of range");
  const auto& strides = conv.strides[player];
  PureStrategy pure;
  pure.action.resize(strides.size());
  for (std::size_t k = 0; k < strides.size(); ++k)
    pure.action[k] = static_cast<int>((index / strides[k]) % conv.num_actions[player][k]);
  return pure;
}

MixedProfile mixed_from_behavioral(const NfgConversion& conv, const ExtensiveFormGame& game,
                                   const BehavioralProfile& profile) {
  validate_behavioral(game, profile);
  MixedProfile z;
  for (int p = 0; p < kNumPlayers; ++p) {
    std::vector<double>& out = p == 0 ? z.x : z.y;
    out.resize(static_cast<std::size_t>(conv.num_pure[p]));
    for (long s = 0; s < conv.num_pure[p]; ++s) {
      const PureStrategy pure = decode_pure(conv, p, s);
      double w = 1.0;
      for (std::size_t k = 0; k < pure.action.size(); ++k)
        w *= profile.policy[p][k][pure.action[k]];
      out[static_cast<std::size_t>(s)] = w;
    }
  }
  return z;
}

}  // namespace nashpg
