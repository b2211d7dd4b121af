#include "ramsearch/block_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ramsearch {

BlockSystem BlockSystem::from_blocks(int degree, std::vector<std::vector<int>> blocks_in) {
  BlockSystem bs;
  bs.blocks = std::move(blocks_in);
  for (auto& block : bs.blocks) std::sort(block.begin(), block.end());
  std::sort(bs.blocks.begin(), bs.blocks.end());
  bs.block_of.assign(static_cast<size_t>(degree), -1);
  size_t expected = bs.blocks.empty() ? 0 : bs.blocks.front().size();
  for (size_t b = 0; b < bs.blocks.size(); ++b) {
    if (bs.blocks[b].size() != expected) {
      throw std::invalid_argument("BlockSystem: blocks of unequal size");
    }
    for (int x : bs.blocks[b]) {
      if (x < 0 || x >= degree || bs.block_of[static_cast<size_t>(x)] != -1) {
        throw std::invalid_argument("BlockSystem: blocks do not partition the points");
      }
      bs.block_of[static_cast<size_t>(x)] = static_cast<int>(b);
    }
  }
  for (int owner : bs.block_of) {
    if (owner < 0) throw std::invalid_argument("BlockSystem: blocks do not cover the points");
  }
  return bs;
}

bool BlockSystem::preserved_by(const Permutation& g) const {
  if (g.degree() != degree()) return false;
  for (const auto& block : blocks) {
    int target = block_of[static_cast<size_t>(g(block.front()))];
    for (int x : block) {
      if (block_of[static_cast<size_t>(g(x))] != target) return false;
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  // returns the losing root, or -1 if already joined
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    parent[static_cast<size_t>(b)] = a;
    return b;
  }
};

// Minimal G-congruence containing {alpha, beta}: refine the seed union
// under the generators until every class maps into a class.
std::vector<int> minimal_block_classes(std::span<const Permutation> gens, int alpha, int beta) {
  int n = gens.front().degree();
  UnionFind uf(n);
  std::vector<int> queue;
  uf.unite(alpha, beta);
  queue.push_back(beta);
  std::vector<int> rep_of(static_cast<size_t>(n));
  std::iota(rep_of.begin(), rep_of.end(), 0);
  // rep_of tracks, for each absorbed root, the surviving root it merged into
  rep_of[static_cast<size_t>(beta)] = alpha;
  while (!queue.empty()) {
    int gamma = queue.back();
    queue.pop_back();
    int delta = rep_of[static_cast<size_t>(gamma)];
    for (const auto& g : gens) {
      int a = uf.find(g(gamma));
      int b = uf.find(g(delta));
      if (a == b) continue;
      int lost = uf.unite(a, b);
      int kept = lost == a ? b : a;
      rep_of[static_cast<size_t>(lost)] = kept;
      queue.push_back(lost);
    }
  }
  std::vector<int> cls(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) cls[static_cast<size_t>(x)] = uf.find(x);
  return cls;
}

}  // namespace

std::optional<BlockSystem> pair_block_system(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("pair_block_system: no generators");
  if (!is_transitive(gens)) throw std::invalid_argument("pair_block_system: generators not transitive");
  int n = gens.front().degree();
  if (n % 2 != 0) return std::nullopt;
  for (int beta = 1; beta < n; ++beta) {
    auto cls = minimal_block_classes(gens, 0, beta);
    int root0 = cls[0];
    int size0 = static_cast<int>(std::count(cls.begin(), cls.end(), root0));
    if (size0 != 2) continue;
    std::vector<std::vector<int>> blocks;
    std::vector<int> index(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      int root = cls[static_cast<size_t>(x)];
      if (index[static_cast<size_t>(root)] < 0) {
        index[static_cast<size_t>(root)] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[static_cast<size_t>(index[static_cast<size_t>(root)])].push_back(x);
    }
    return BlockSystem::from_blocks(n, std::move(blocks));
  }
  return std::nullopt;
}

std::vector<Permutation> block_action(std::span<const Permutation> gens, const BlockSystem& bs) {
  std::vector<Permutation> actions;
  actions.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> images(static_cast<size_t>(bs.block_count()));
    for (int b = 0; b < bs.block_count(); ++b) {
      int target = bs.block_of[static_cast<size_t>(g(bs.blocks[static_cast<size_t>(b)].front()))];
      for (int x : bs.blocks[static_cast<size_t>(b)]) {
        if (bs.block_of[static_cast<size_t>(g(x))] != target) {
          throw std::invalid_argument("block_action: generator does not preserve the blocks");
        }
      }
      images[static_cast<size_t>(b)] = target;
    }
    actions.emplace_back(std::move(images));
  }
  return actions;
}

namespace {

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::optional<long long> group_order_small(std::span<const Permutation> gens, long long cap) {
  if (gens.empty()) throw std::invalid_argument("group_order_small: no generators");
  if (cap < 1) throw std::invalid_argument("group_order_small: cap must be >= 1");
  int n = gens.front().degree();
  std::unordered_set<std::vector<int>, ImageHash> seen;
  std::vector<std::vector<int>> frontier;
  seen.insert(Permutation::identity(n).images());
  frontier.push_back(Permutation::identity(n).images());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& images : frontier) {
      for (const auto& g : gens) {
        std::vector<int> prod(images.size());
        for (int x = 0; x < n; ++x) prod[static_cast<size_t>(x)] = g(images[static_cast<size_t>(x)]);
        if (seen.insert(prod).second) {
          if (static_cast<long long>(seen.size()) > cap) return std::nullopt;
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

std::optional<DnSplit> verify_dn_partition(const Permutation& g1, const Permutation& g2,
                                           const Permutation& g3, const Permutation& g4, int n) {
  if (n < 2) throw std::invalid_argument("verify_dn_partition: n must be >= 2");
  int degree = 4 * n;
  if (g1.degree() != degree || g2.degree() != degree || g3.degree() != degree ||
      g4.degree() != degree) {
    throw std::invalid_argument("verify_dn_partition: degree must be 4n");
  }
  Partition involution_type = Partition::repeated(2, 2 * n);
  if (cycle_type(g1) != involution_type) {
    throw std::invalid_argument("verify_dn_partition: g1 is not of type 2^(2n)");
  }
  if (cycle_type(g2) != involution_type) {
    throw std::invalid_argument("verify_dn_partition: g2 is not of type 2^(2n)");
  }
  if (cycle_type(g3) != Partition::repeated(n, 4)) {
    throw std::invalid_argument("verify_dn_partition: g3 is not of type n^4");
  }
  auto is_transposition = [degree](const Permutation& g) {
    int moved = 0;
    for (int x = 0; x < degree; ++x) {
      if (g(x) != x) ++moved;
    }
    return moved == 2 && product(g, g).is_identity();
  };
  if (!is_transposition(g4)) {
    throw std::invalid_argument("verify_dn_partition: g4 is not a transposition");
  }
  if (!is_transposition(product(g1, g2, g3, g4))) {
    throw std::invalid_argument("verify_dn_partition: g1 g2 g3 g4 is not a transposition");
  }
  std::vector<Permutation> gens{g1, g2, g3, g4};
  if (!is_transitive(gens)) {
    throw std::invalid_argument("verify_dn_partition: group is not transitive");
  }

  // Orbits of <g1 g2> pair up under g1; pick a side per pair so that Z is
  // g3- and g4-closed.
  Permutation c = product(g1, g2);
  auto c_orbits = orbits(std::span<const Permutation>(&c, 1));
  std::vector<int> orbit_of(static_cast<size_t>(degree), -1);
  for (size_t i = 0; i < c_orbits.size(); ++i) {
    for (int x : c_orbits[i]) orbit_of[static_cast<size_t>(x)] = static_cast<int>(i);
  }
  int orbit_count = static_cast<int>(c_orbits.size());
  std::vector<int> partner(static_cast<size_t>(orbit_count), -1);
  std::vector<std::pair<int, int>> orbit_pairs;
  for (int i = 0; i < orbit_count; ++i) {
    int image = orbit_of[static_cast<size_t>(g1(c_orbits[static_cast<size_t>(i)].front()))];
    if (image == i) return std::nullopt;  // cannot happen under the hypotheses
    partner[static_cast<size_t>(i)] = image;
    if (i < image) orbit_pairs.emplace_back(i, image);
  }

  int pair_count = static_cast<int>(orbit_pairs.size());
  if (pair_count > 20) {
    throw std::invalid_argument("verify_dn_partition: too many orbit pairs for exhaustive split");
  }
  std::vector<int> side(static_cast<size_t>(orbit_count), 0);  // 0 = Y, 1 = Z
  for (unsigned mask = 0; mask < (1u << pair_count); ++mask) {
    for (int p = 0; p < pair_count; ++p) {
      int z_side = static_cast<int>((mask >> p) & 1u);
      side[static_cast<size_t>(orbit_pairs[static_cast<size_t>(p)].first)] = z_side;
      side[static_cast<size_t>(orbit_pairs[static_cast<size_t>(p)].second)] = 1 - z_side;
    }
    auto in_z = [&](int x) { return side[static_cast<size_t>(orbit_of[static_cast<size_t>(x)])] == 1; };
    bool ok = true;
    for (int x = 0; x < degree && ok; ++x) {
      bool zx = in_z(x);
      ok = in_z(g1(x)) != zx && in_z(g2(x)) != zx && in_z(g3(x)) == zx && in_z(g4(x)) == zx;
    }
    if (!ok) continue;
    DnSplit split;
    for (int x = 0; x < degree; ++x) {
      (in_z(x) ? split.z : split.y).push_back(x);
    }
    return split;
  }
  return std::nullopt;
}

}  // namespace ramsearch
