#ifndef ARENA_OCTREE_HPP
#define ARENA_OCTREE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arena/chebyshev.hpp"
#include "arena/common.hpp"
#include "arena/morton.hpp"

namespace arena {

/// Linear octree: complete, Morton-sorted set of leaf octants.
struct Octree {
  std::vector<MortonKey> leaves;
  uint32_t max_depth = 0;   // deepest level present
  bool balanced = false;

  /// Index of the leaf whose closed region covers the cell `k` (the leaf equals k,
  /// is an ancestor of k, or is k's first descendant when k is coarser than the
  /// local refinement). Returns -1 on an incomplete tree.
  int find_covering(const MortonKey& k) const;
};

Octree uniform_octree(uint32_t depth);

/// Checks Morton order, no duplicates, and exact partition of the unit cube.
bool is_complete_sorted(const Octree& t);

/// Leaves plus Chebyshev payload from adaptive refinement.
struct AdaptiveTree {
  Octree tree;
  std::vector<ChebCoeffs> leaf_data;   // aligned with tree.leaves
  bool tol_met = true;                 // false if max_depth capped refinement
  double tol_effective = 0.0;          // absolute tolerance actually used
};

enum class RefineMode { kRelative, kAbsolute };

/// Split every leaf whose top-shell coefficient sum exceeds tol until the estimate
/// passes or max_depth is hit. Relative mode scales tol by max |f| over the root samples.
AdaptiveTree refine_adaptive(const ScalarField& f, int q, double tol, uint32_t max_depth,
                             RefineMode mode = RefineMode::kRelative);

/// Subdivide leaves until every pair of touching leaves differs by at most one level.
Octree balance_2to1(const Octree& t, bool periodic);

/// Balance and re-approximate payload on the new leaves (unchanged leaves keep their data).
AdaptiveTree balance_with_payload(const AdaptiveTree& in, const ScalarField& f, bool periodic);

/// Octree with parent/child links over the full octant set (leaves plus ancestors).
struct LinkedTree {
  struct Node {
    MortonKey key;
    int32_t parent = -1;
    std::array<int32_t, 8> child{-1, -1, -1, -1, -1, -1, -1, -1};
    int32_t leaf_id = -1;              // index into Octree::leaves, -1 for internal
    bool is_leaf() const { return leaf_id >= 0; }
  };
  std::vector<Node> nodes;             // depth-first preorder; nodes[0] is the root
  std::vector<int32_t> leaf_node;      // leaf_id -> node index
  bool periodic = false;
  uint32_t depth = 0;

  int find(const MortonKey& k) const;  // exact match or -1
};

LinkedTree link_tree(const Octree& t, bool periodic);

/// One far/near interaction partner. For periodic trees the partner may act from an
/// image of the unit cell; wrap holds the image offset in whole-domain units.
struct Interaction {
  int32_t node;
  std::array<int8_t, 3> wrap{0, 0, 0};
};

struct InteractionLists {
  std::vector<std::vector<Interaction>> U, V, W, X;   // indexed by LinkedTree node id
  size_t total_U = 0, total_V = 0, total_W = 0, total_X = 0;
};

/// Requires a balanced tree (precondition violation otherwise).
InteractionLists build_interaction_lists(const LinkedTree& lt, const Octree& t);

/// Closed boxes touch when the source box is translated by wrap domain units.
bool touches_virtual(const MortonKey& src, const std::array<int8_t, 3>& wrap, const MortonKey& tgt);

/// "level x y z" per leaf, Morton order.
std::string octree_dump(const Octree& t);
Octree octree_parse(std::istream& in);

} // namespace arena

#endif
