#include "arena/octree.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace arena {

int Octree::find_covering(const MortonKey& k) const {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), k);
  if (it != leaves.end() && (*it == k || k.is_ancestor_of(*it))) return int(it - leaves.begin());
  if (it != leaves.begin() && std::prev(it)->is_ancestor_of(k)) return int(it - leaves.begin()) - 1;
  return -1;
}

Octree uniform_octree(uint32_t depth) {
  Octree t;
  t.max_depth = depth;
  const uint32_t n = 1u << depth;
  t.leaves.reserve(size_t(n) * n * n);
  std::vector<MortonKey> stack{MortonKey{}};
  while (!stack.empty()) {
    MortonKey k = stack.back();
    stack.pop_back();
    if (k.level == depth) {
      t.leaves.push_back(k);
      continue;
    }
    for (int c = 7; c >= 0; --c) stack.push_back(k.child(c));
  }
  t.balanced = true;
  return t;
}

bool is_complete_sorted(const Octree& t) {
  if (t.leaves.empty()) return false;
  std::vector<MortonKey> stack{MortonKey{}};
  for (const MortonKey& leaf : t.leaves) {
    if (stack.empty()) return false;
    MortonKey k = stack.back();
    stack.pop_back();
    while (k != leaf) {
      if (!k.is_ancestor_of(leaf)) return false;
      for (int c = 7; c >= 1; --c) stack.push_back(k.child(c));
      k = k.child(0);
    }
  }
  return stack.empty();
}

namespace {

struct RefineState {
  const ScalarField* f;
  int q;
  double tol_eff;
  uint32_t max_depth;
  AdaptiveTree out;
};

void refine_rec(RefineState& st, const MortonKey& key, ChebCoeffs&& c) {
  const double est = truncation_estimate(c);
  if (est <= st.tol_eff || key.level >= st.max_depth) {
    if (est > st.tol_eff) st.out.tol_met = false;
    st.out.tree.max_depth = std::max(st.out.tree.max_depth, key.level);
    st.out.tree.leaves.push_back(key);
    st.out.leaf_data.push_back(std::move(c));
    return;
  }
  for (int ch = 0; ch < 8; ++ch) {
    MortonKey k = key.child(ch);
    refine_rec(st, k, cheb_approx(*st.f, k, st.q));
  }
}

} // namespace

AdaptiveTree refine_adaptive(const ScalarField& f, int q, double tol, uint32_t max_depth, RefineMode mode) {
  if (q < 2) throw std::invalid_argument("refine_adaptive: q >= 2 required");
  if (!(tol > 0)) throw std::invalid_argument("refine_adaptive: tol > 0 required");
  if (max_depth > kMaxDepth) throw std::invalid_argument("refine_adaptive: max_depth exceeds limit");

  RefineState st;
  st.f = &f;
  st.q = q;
  st.max_depth = max_depth;

  MortonKey root{};
  ChebCoeffs rc = cheb_approx(f, root, q);
  if (mode == RefineMode::kRelative) {
    // scale by the max |f| sample on the root octant
    const auto nodes = cheb_gauss_nodes(q);
    double fmax = 0;
    for (double a : nodes)
      for (double b : nodes)
        for (double c : nodes)
          fmax = std::max(fmax, std::abs(f(Vec3{0.5 * (a + 1), 0.5 * (b + 1), 0.5 * (c + 1)})));
    st.tol_eff = tol * (fmax > 0 ? fmax : 1.0);
  } else {
    st.tol_eff = tol;
  }
  st.out.tol_effective = st.tol_eff;
  refine_rec(st, root, std::move(rc));
  return st.out;
}

Octree balance_2to1(const Octree& t, bool periodic) {
  if (!is_complete_sorted(t)) throw std::invalid_argument("balance_2to1: complete sorted tree required");
  Octree cur = t;
  static const std::array<int, 3>* kDirs = [] {
    static std::array<std::array<int, 3>, 26> dirs;
    int n = 0;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz)
          if (dx || dy || dz) dirs[n++] = {dx, dy, dz};
    return dirs.data();
  }();

  bool changed = true;
  while (changed) {
    changed = false;
    std::set<int> to_split;
    for (const MortonKey& leaf : cur.leaves) {
      if (leaf.level <= 1) continue;   // nothing can be two levels coarser
      for (int d = 0; d < 26; ++d) {
        auto nb = leaf.neighbor(kDirs[d], periodic);
        if (!nb) continue;
        const int idx = cur.find_covering(*nb);
        if (idx >= 0 && cur.leaves[idx].level + 1 < leaf.level) to_split.insert(idx);
      }
    }
    if (!to_split.empty()) {
      changed = true;
      std::vector<MortonKey> next;
      next.reserve(cur.leaves.size() + 7 * to_split.size());
      for (int i = 0; i < int(cur.leaves.size()); ++i) {
        if (to_split.count(i)) {
          for (int c = 0; c < 8; ++c) next.push_back(cur.leaves[i].child(c));
        } else {
          next.push_back(cur.leaves[i]);
        }
      }
      std::sort(next.begin(), next.end());
      cur.leaves = std::move(next);
    }
  }
  for (const MortonKey& k : cur.leaves) cur.max_depth = std::max(cur.max_depth, k.level);
  cur.balanced = true;
  return cur;
}

AdaptiveTree balance_with_payload(const AdaptiveTree& in, const ScalarField& f, bool periodic) {
  AdaptiveTree out;
  out.tol_met = in.tol_met;
  out.tol_effective = in.tol_effective;
  out.tree = balance_2to1(in.tree, periodic);
  std::map<MortonKey, int> old;
  for (int i = 0; i < int(in.tree.leaves.size()); ++i) old.emplace(in.tree.leaves[i], i);
  const int q = in.leaf_data.empty() ? 0 : in.leaf_data.front().q;
  out.leaf_data.reserve(out.tree.leaves.size());
  for (const MortonKey& k : out.tree.leaves) {
    auto it = old.find(k);
    if (it != old.end())
      out.leaf_data.push_back(in.leaf_data[it->second]);
    else
      out.leaf_data.push_back(cheb_approx(f, k, q));
  }
  return out;
}

int LinkedTree::find(const MortonKey& k) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), k,
                             [](const Node& n, const MortonKey& key) { return n.key < key; });
  if (it != nodes.end() && it->key == k) return int(it - nodes.begin());
  return -1;
}

LinkedTree link_tree(const Octree& t, bool periodic) {
  if (!is_complete_sorted(t)) throw std::invalid_argument("link_tree: complete sorted tree required");
  LinkedTree lt;
  lt.periodic = periodic;
  lt.depth = t.max_depth;
  std::set<MortonKey> keys;
  for (const MortonKey& leaf : t.leaves) {
    MortonKey k = leaf;
    while (keys.insert(k).second && k.level > 0) k = k.parent();
  }
  lt.nodes.reserve(keys.size());
  for (const MortonKey& k : keys) {
    LinkedTree::Node n;
    n.key = k;
    lt.nodes.push_back(n);
  }
  std::sort(lt.nodes.begin(), lt.nodes.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  lt.leaf_node.assign(t.leaves.size(), -1);
  for (int i = 0; i < int(lt.nodes.size()); ++i) {
    auto& n = lt.nodes[i];
    if (n.key.level > 0) {
      const int p = lt.find(n.key.parent());
      n.parent = p;
      lt.nodes[p].child[n.key.child_slot()] = i;
    }
  }
  for (int i = 0; i < int(t.leaves.size()); ++i) {
    const int idx = lt.find(t.leaves[i]);
    lt.nodes[idx].leaf_id = i;
    lt.leaf_node[i] = idx;
  }
  return lt;
}

bool touches_virtual(const MortonKey& src, const std::array<int8_t, 3>& wrap, const MortonKey& tgt) {
  for (int d = 0; d < 3; ++d) {
    const int64_t slo = (int64_t(src.anchor[d]) + int64_t(wrap[d]) * (int64_t(1) << src.level))
                        << (kMaxDepth - src.level);
    const int64_t shi = slo + (int64_t(1) << (kMaxDepth - src.level));
    const int64_t tlo = int64_t(tgt.anchor[d]) << (kMaxDepth - tgt.level);
    const int64_t thi = tlo + (int64_t(1) << (kMaxDepth - tgt.level));
    if (slo > thi || tlo > shi) return false;
  }
  return true;
}

namespace {

struct WrapKey {
  int32_t node;
  std::array<int8_t, 3> wrap;
  bool operator<(const WrapKey& o) const {
    if (node != o.node) return node < o.node;
    return wrap < o.wrap;
  }
};

// neighbor cell with the domain-image offset it was reached through
struct NbCell {
  MortonKey key;
  std::array<int8_t, 3> wrap;
};

std::vector<NbCell> neighbor_cells(const MortonKey& k, bool periodic) {
  std::vector<NbCell> out;
  out.reserve(26);
  const int64_t n = int64_t(1) << k.level;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dz = -1; dz <= 1; ++dz) {
        if (!dx && !dy && !dz) continue;
        const std::array<int, 3> d{dx, dy, dz};
        std::array<int8_t, 3> w{0, 0, 0};
        bool ok = true;
        std::array<uint32_t, 3> a;
        for (int ax = 0; ax < 3; ++ax) {
          int64_t c = int64_t(k.anchor[ax]) + d[ax];
          if (c < 0 || c >= n) {
            if (!periodic) {
              ok = false;
              break;
            }
            w[ax] = int8_t(c < 0 ? -1 : 1);
            c = (c + n) % n;
          }
          a[ax] = uint32_t(c);
        }
        if (ok) out.push_back({MortonKey{a, k.level}, w});
      }
  return out;
}

} // namespace

InteractionLists build_interaction_lists(const LinkedTree& lt, const Octree& t) {
  if (!t.balanced) throw std::invalid_argument("build_interaction_lists: balanced tree required");
  const int nn = int(lt.nodes.size());
  InteractionLists il;
  il.U.resize(nn);
  il.V.resize(nn);
  il.W.resize(nn);
  il.X.resize(nn);

  for (int b = 0; b < nn; ++b) {
    const auto& node = lt.nodes[b];
    const MortonKey& B = node.key;

    // V list: children of the parent's colleagues that do not touch B
    if (node.parent >= 0) {
      std::set<WrapKey> vset;
      for (const NbCell& pc : neighbor_cells(lt.nodes[node.parent].key, lt.periodic)) {
        const int p = lt.find(pc.key);
        if (p < 0 || lt.nodes[p].is_leaf()) continue;
        for (int c : lt.nodes[p].child) {
          if (c < 0) continue;
          if (!touches_virtual(lt.nodes[c].key, pc.wrap, B)) vset.insert({c, pc.wrap});
        }
      }
      il.V[b].assign(vset.size(), Interaction{});
      int i = 0;
      for (const WrapKey& wk : vset) il.V[b][i++] = {wk.node, wk.wrap};
    }

    if (!node.is_leaf()) continue;

    // U and W lists: walk the same-level neighborhood
    std::set<WrapKey> uset, wset;
    uset.insert({b, {0, 0, 0}});
    for (const NbCell& nc : neighbor_cells(B, lt.periodic)) {
      const int n = lt.find(nc.key);
      if (n < 0) {
        // region covered by a coarser leaf
        const int li = t.find_covering(nc.key);
        if (li >= 0 && t.leaves[li].level < nc.key.level) uset.insert({lt.leaf_node[li], nc.wrap});
        continue;
      }
      if (lt.nodes[n].is_leaf()) {
        uset.insert({n, nc.wrap});
        continue;
      }
      // descend: children of adjacent internal octants either touch B (recurse /
      // collect leaves into U) or go to W
      std::vector<int> stack{n};
      while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        for (int c : lt.nodes[cur].child) {
          if (c < 0) continue;
          if (touches_virtual(lt.nodes[c].key, nc.wrap, B)) {
            if (lt.nodes[c].is_leaf())
              uset.insert({c, nc.wrap});
            else
              stack.push_back(c);
          } else {
            wset.insert({c, nc.wrap});
          }
        }
      }
    }
    il.U[b].reserve(uset.size());
    for (const WrapKey& wk : uset) il.U[b].push_back({wk.node, wk.wrap});
    il.W[b].reserve(wset.size());
    for (const WrapKey& wk : wset) il.W[b].push_back({wk.node, wk.wrap});
  }

  // X is the dual of W
  for (int a = 0; a < nn; ++a) {
    if (!lt.nodes[a].is_leaf()) continue;
    for (const Interaction& w : il.W[a])
      il.X[w.node].push_back({a, {int8_t(-w.wrap[0]), int8_t(-w.wrap[1]), int8_t(-w.wrap[2])}});
  }

  for (int b = 0; b < nn; ++b) {
    il.total_U += il.U[b].size();
    il.total_V += il.V[b].size();
    il.total_W += il.W[b].size();
    il.total_X += il.X[b].size();
  }
  return il;
}

std::string octree_dump(const Octree& t) {
  std::ostringstream os;
  for (const MortonKey& k : t.leaves)
    os << k.level << " " << k.anchor[0] << " " << k.anchor[1] << " " << k.anchor[2] << "\n";
  return os.str();
}

Octree octree_parse(std::istream& in) {
  Octree t;
  uint32_t l, x, y, z;
  while (in >> l >> x >> y >> z) {
    t.leaves.push_back(morton_encode(l, {x, y, z}));
    t.max_depth = std::max(t.max_depth, l);
  }
  if (!is_complete_sorted(t)) throw std::runtime_error("octree_parse: not a complete sorted octree");
  return t;
}

} // namespace arena
