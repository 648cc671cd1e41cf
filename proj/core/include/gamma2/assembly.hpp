#pragma once

#include <array>
#include <map>

#include "gamma2/complex.hpp"

namespace gamma2 {

/// Bookkeeping for the action-based assembly: the spanning tree on the orbit
/// vertices, the chosen oriented edges and based triangles, and the edge
/// words. Every edge carries the trivial word here (the group elements g_e
/// can all be chosen as the identity, so their symbols are eliminated up
/// front rather than carried as extra generators).
struct AssemblyPlan {
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;  // base point first
  std::map<std::pair<int, int>, Word> edge_words;
};

struct Assembly {
  Presentation presentation;
  AssemblyPlan plan;
  size_t vertex_systems = 0;
  size_t edge_systems = 0;
  size_t raw_generators = 0;  // before cross-stabilizer identification
  size_t raw_relators = 0;
};

/// Assemble a presentation of the level-2 group at dimension n from its
/// vertex stabilizers glued along edge relators: the seven-vertex mod-2
/// complex at n = 3, the basis-vertex orbit complex for n >= 4. Shared
/// generators are identified across stabilizers afterwards, so the output
/// generator set carries every E(i,j) and F(i) matrix.
Assembly brown_assemble(int n);

}  // namespace gamma2
