#pragma once

#include "qadv/anf.hpp"
#include "qadv/core.hpp"

#include <optional>

namespace qadv::classical {

// Per-variable assignment in {0, 1, *}.
struct Restriction {
  enum Mark : int8_t { Zero = 0, One = 1, Star = 2 };
  std::vector<Mark> marks;

  explicit Restriction(size_t n = 0) : marks(n, Star) {}
  size_t star_count() const;
  bool fixed(size_t i) const { return marks[i] != Star; }
  // this composed-with tau: tau further fixes this restriction's stars.
  Restriction then(const Restriction& tau) const;
  uint64_t fill(uint64_t alive_bits) const;  // plug alive bits into the stars
};

// i.i.d. per variable: alive with keep_prob, else fixed uniformly.
Restriction sample_restriction(size_t n, double keep_prob, Rng& rng);

// Binary decision tree; left child is the x_var = 1 branch. No variable
// repeats on a root-to-leaf path.
struct DTree {
  struct Node {
    int var = -1;  // -1: leaf
    int left = -1, right = -1;
    uint8_t leaf = 0;
  };
  std::vector<Node> nodes;
  int root = -1;

  static DTree leaf(uint8_t bit);
  static DTree split(int var, DTree when_one, DTree when_zero);
  bool evaluate(uint64_t x) const;
  int depth() const;
  bool is_leaf() const { return nodes[root].var < 0; }

 private:
  int depth_of(int node) const;
};

DTree restrict_tree(const DTree& t, const Restriction& rho);

// Algorithm-style converter: collect the paths that end in a true leaf as
// AND clauses and OR them together over F_2.
Anf dt_to_anf(const DTree& t);

// Random tree of depth <= depth over n variables (distinct per path):
// at each node, stop with probability leaf_prob or once depth is exhausted.
DTree random_tree(size_t n, int depth, double leaf_prob, Rng& rng);

std::string tree_to_json(const DTree& t);
DTree tree_from_json(const std::string& json);

// Depth-t global tree whose leaves each carry m local trees.
struct DecisionForest {
  DTree global;
  std::vector<std::vector<DTree>> leaf_trees;  // indexed by global leaf order
  std::vector<int> leaf_index;                 // node id -> leaf order
};

}  // namespace qadv::classical
