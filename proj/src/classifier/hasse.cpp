#include <sstream>

#include "classifier/classifier.hpp"

namespace cs {

const std::vector<HasseNode>& hasse_nodes() {
  using C = ClassLabel;
  static const std::vector<HasseNode> nodes = {
      {C::O, "[0]", "", 0},           {C::A, "[6]", "", 2},         {C::VII, "[51]", "(5)", 3},
      {C::OO, "[33]", "", 3},         {C::V, "[411]", "(23)", 4},   {C::VI, "[3111]+CR", "(41)", 4},
      {C::IV, "M6=-1", "(311)", 5},   {C::II, "[3111]", "(221)", 5}, {C::I, "J0Jac=0", "(2111)", 6},
      {C::S, "[111111]", "(11111)", 7},
  };
  return nodes;
}

const std::vector<std::pair<ClassLabel, ClassLabel>>& hasse_edges() {
  using C = ClassLabel;
  static const std::vector<std::pair<C, C>> edges = {
      {C::O, C::A},   {C::A, C::VII}, {C::A, C::OO},  {C::VII, C::VI}, {C::VII, C::V}, {C::OO, C::VI}, {C::V, C::IV},
      {C::V, C::II},  {C::VI, C::II}, {C::VI, C::IV}, {C::IV, C::I},   {C::II, C::I},  {C::I, C::S},
  };
  return edges;
}

bool hasse_edge(ClassLabel a, ClassLabel b) {
  for (const auto& [x, y] : hasse_edges())
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

std::string hasse_dot() {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n";
  for (const auto& n : hasse_nodes()) {
    os << "  \"" << class_name(n.label) << "\" [label=\"" << class_name(n.label) << "\\n" << n.factor_structure;
    if (!n.bocher.empty()) os << " " << n.bocher;
    os << "\\nd=" << n.hilbert_dim << "\"];\n";
  }
  for (const auto& [a, b] : hasse_edges()) os << "  \"" << class_name(a) << "\" -> \"" << class_name(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cs
