#include "nashpg/games.hpp"

#include <stdexcept>
#include <utility>

namespace nashpg {

ExtensiveFormGame efg_from_matrix(const NormalFormGame& game, std::string name) {
  EfgBuilder b;
  std::vector<int> row_children;
  for (int i = 0; i < game.rows; ++i) {
    std::vector<int> col_children;
    for (int j = 0; j < game.cols; ++j) col_children.push_back(b.add_terminal(game.at(i, j)));
    // Every column node shares one infoset: the column player moves blind.
    row_children.push_back(b.add_decision(1, "col", std::move(col_children)));
  }
  const int root = b.add_decision(0, "row", std::move(row_children));
  return b.build(std::move(name), root);
}

ExtensiveFormGame make_game(const std::string& name) {
  if (name == "kuhn") return build_kuhn();
  if (name == "leduc") return build_leduc();
  if (name.rfind("matrix:", 0) == 0) {
    const std::string path = name.substr(7);
    if (path.empty()) throw std::invalid_argument("matrix game needs a path: matrix:<path>");
    return efg_from_matrix(NormalFormGame::load(path), name);
  }
  throw std::invalid_argument("unknown game \"" + name +
                              "\" (known: kuhn, leduc, matrix:<path>)");
}

}  // namespace nashpg
