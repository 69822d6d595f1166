#include "blocklat/blocks.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "blocklat/error.hpp"

namespace blocklat
{

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : _parent(n)
  { std::iota(_parent.begin(), _parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    _parent[std::max(a, b)] = std::min(a, b);
    return true;
  }

  std::vector<std::size_t> labels()
  {
    std::vector<std::size_t> result(_parent.size());
    for (std::size_t x = 0; x < result.size(); ++x)
      result[x] = find(x);
    return result;
  }

private:
  std::vector<std::size_t> _parent;
};

void require_invariant(GroupTable const &g, BlockSystem const &e)
{
  if (e.degree() != g.degree() || !is_invariant(g, e))
    throw PreconditionError("partition is not invariant under the group");
}

void require_transitive(GroupTable const &g)
{
  if (!is_transitive(g))
    throw PreconditionError("group is not transitive");
}

} // anonymous namespace

BlockSystem BlockSystem::from_labels(std::vector<std::size_t> const &label)
{
  std::map<std::size_t, std::vector<Point>> by_label;
  for (Point x = 0; x < label.size(); ++x)
    by_label[label[x]].push_back(x);

  std::vector<std::vector<Point>> blocks;
  for (auto &[_, b] : by_label)
    blocks.push_back(std::move(b));

  return from_blocks(label.size(), std::move(blocks));
}

BlockSystem BlockSystem::from_blocks(std::size_t degree,
                                     std::vector<std::vector<Point>> blocks)
{
  if (degree == 0)
    throw PreconditionError("block system on an empty set");

  for (auto &b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());

  BlockSystem e;
  e._block_of.assign(degree, degree);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty() || blocks[i].size() != blocks[0].size())
      throw PreconditionError("blocks must be non-empty and of equal size");

    for (Point x : blocks[i]) {
      if (x >= degree || e._block_of[x] != degree)
        throw PreconditionError("blocks do not partition the points");
      e._block_of[x] = i;
    }
  }

  if (std::find(e._block_of.begin(), e._block_of.end(), degree)
      != e._block_of.end())
    throw PreconditionError("blocks do not cover the points");

  e._blocks = std::move(blocks);
  return e;
}

BlockSystem BlockSystem::singletons(std::size_t degree)
{
  std::vector<std::size_t> label(degree);
  std::iota(label.begin(), label.end(), std::size_t{0});
  return from_labels(label);
}

BlockSystem BlockSystem::one_block(std::size_t degree)
{
  return from_labels(std::vector<std::size_t>(degree, 0));
}

bool BlockSystem::refines(BlockSystem const &coarser) const
{
  for (auto const &b : _blocks) {
    std::size_t target = coarser.block_of(b.front());
    for (Point x : b) {
      if (coarser.block_of(x) != target)
        return false;
    }
  }
  return true;
}

bool is_invariant(GroupTable const &g, BlockSystem const &e)
{
  for (auto const &gen : g.generators()) {
    for (auto const &b : e.blocks()) {
      std::size_t target = e.block_of(gen[b.front()]);
      for (Point x : b) {
        if (e.block_of(gen[x]) != target)
          return false;
      }
    }
  }
  return true;
}

BlockSystem meet(BlockSystem const &e, BlockSystem const &f)
{
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::size_t> label(e.degree());
  for (Point x = 0; x < e.degree(); ++x) {
    auto key = std::make_pair(e.block_of(x), f.block_of(x));
    label[x] = ids.emplace(key, ids.size()).first->second;
  }
  return BlockSystem::from_labels(label);
}

BlockSystem join(BlockSystem const &e, BlockSystem const &f)
{
  UnionFind uf(e.degree());
  for (auto const *system : {&e, &f}) {
    for (auto const &b : system->blocks()) {
      for (Point x : b)
        uf.unite(b.front(), x);
    }
  }
  return BlockSystem::from_labels(uf.labels());
}

BlockSystem minimal_block_system(GroupTable const &g, Point omega,
                                 Point delta)
{
  require_transitive(g);
  if (omega >= g.degree() || delta >= g.degree())
    throw PreconditionError("point out of range");

  UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> pending;
  if (uf.unite(omega, delta))
    pending.emplace_back(omega, delta);

  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();

    for (auto const &gen : g.generators()) {
      Point x = gen[a], y = gen[b];
      if (uf.unite(x, y))
        pending.emplace_back(x, y);
    }
  }

  return BlockSystem::from_labels(uf.labels());
}

std::vector<BlockSystem> all_block_systems(GroupTable const &g, Point omega)
{
  require_transitive(g);

  std::set<BlockSystem> found{BlockSystem::singletons(g.degree())};
  std::vector<BlockSystem> work;
  for (Point delta = 0; delta < g.degree(); ++delta) {
    if (delta == omega)
      continue;
    auto atom = minimal_block_system(g, omega, delta);
    if (found.insert(atom).second)
      work.push_back(atom);
  }

  // Every system is the join of the atoms below it, so closing under
  // pairwise joins reaches all of E(G).
  std::vector<BlockSystem> seen(found.begin(), found.end());
  while (!work.empty()) {
    BlockSystem x = std::move(work.back());
    work.pop_back();

    std::vector<BlockSystem> fresh;
    for (auto const &y : seen) {
      auto z = join(x, y);
      if (found.insert(z).second) {
        fresh.push_back(z);
        work.push_back(z);
      }
    }
    seen.insert(seen.end(), fresh.begin(), fresh.end());
  }

  return {found.begin(), found.end()};
}

GroupTable block_stabilizer(GroupTable const &g, BlockSystem const &e,
                            Point omega)
{
  require_invariant(g, e);

  std::size_t target = e.block_of(omega);
  std::vector<Permutation> stab;
  std::copy_if(g.elements().begin(), g.elements().end(),
               std::back_inserter(stab), [&](Permutation const &p) {
                 return e.block_of(p[omega]) == target;
               });

  return GroupTable::from_elements(g.degree(), std::move(stab));
}

GroupTable kernel_on_blocks(GroupTable const &g, BlockSystem const &e)
{
  require_invariant(g, e);

  std::vector<Permutation> kernel;
  std::copy_if(g.elements().begin(), g.elements().end(),
               std::back_inserter(kernel), [&](Permutation const &p) {
                 for (auto const &b : e.blocks()) {
                   if (e.block_of(p[b.front()]) != e.block_of(b.front()))
                     return false;
                 }
                 return true;
               });

  return GroupTable::from_elements(g.degree(), std::move(kernel));
}

BlockSystem block_system_of(GroupTable const &g, GroupTable const &k,
                            Point omega)
{
  std::vector<Point> base = orbit(k, omega);

  std::set<std::vector<Point>> blocks;
  for (auto const &p : g.elements()) {
    std::vector<Point> image;
    image.reserve(base.size());
    for (Point x : base)
      image.push_back(p[x]);
    std::sort(image.begin(), image.end());
    blocks.insert(std::move(image));
  }

  return BlockSystem::from_blocks(
    g.degree(), std::vector<std::vector<Point>>(blocks.begin(), blocks.end()));
}

GroupTable core(GroupTable const &g, GroupTable const &a)
{
  if (!is_subgroup(a, g))
    throw PreconditionError("not a subgroup of the ambient group");

  std::vector<Permutation> kept = a.elements();
  for (auto const &x : g.elements()) {
    std::erase_if(kept, [&](Permutation const &c) {
      return !a.contains(conjugate(c, x));
    });
  }

  return GroupTable::from_elements(g.degree(), std::move(kept));
}

bool is_core_complementary(GroupTable const &g, Point omega,
                           GroupTable const &a)
{
  GroupTable stab = point_stabilizer(g, omega);
  if (!is_subgroup(stab, a) || !is_subgroup(a, g))
    throw PreconditionError("expected G_omega <= A <= G");

  return product_set(stab, core(g, a)) == a.elements();
}

bool is_normal_system(GroupTable const &g, BlockSystem const &e)
{
  GroupTable kernel = kernel_on_blocks(g, e);
  return orbits(kernel.generators(), g.degree()) == e.blocks();
}

BlockSystem orbit_system(GroupTable const &n)
{
  return BlockSystem::from_blocks(n.degree(),
                                  orbits(n.generators(), n.degree()));
}

HClassification classify_H(Permutation const &h, BlockSystem const &e)
{
  auto h_orbits = orbits(std::span<Permutation const>(&h, 1), h.degree());
  if (h_orbits.size() != 2)
    throw PreconditionError("h must have exactly two orbits");

  if (e.degree() != h.degree())
    throw PreconditionError("degree mismatch");

  for (auto const &b : e.blocks()) {
    for (Point x : b) {
      if (e.block_of(h[x]) != e.block_of(h[b.front()]))
        throw PreconditionError("block system is not invariant under h");
    }
  }

  HClassification c;
  c.n1 = h_orbits[0].size();
  c.n2 = h_orbits[1].size();
  c.block_size = e.block_size();

  // Orbit of <h> on block ids, started from the block of point 0.
  std::vector<bool> reached(e.block_count(), false);
  std::size_t count = 0;
  for (std::size_t b = e.block_of(0); !reached[b];
       b = e.block_of(h[e.blocks()[b].front()])) {
    reached[b] = true;
    ++count;
  }

  if (count == e.block_count()) {
    c.kind = HKind::transitive;
    c.d = count;
    return c;
  }

  c.kind = HKind::intransitive;

  std::vector<int> side(h.degree());
  for (Point x : h_orbits[1])
    side[x] = 1;

  for (auto const &b : e.blocks()) {
    for (Point x : b) {
      if (side[x] != side[b.front()])
        throw Error("H-intransitive block meets both orbits of h");
    }
    ++(side[b.front()] == 0 ? c.d1 : c.d2);
  }

  if (c.n1 != c.d1 * c.block_size || c.n2 != c.d2 * c.block_size)
    throw Error("n1/d1 = n2/d2 = n_E fails for an H-intransitive system");

  return c;
}

} // namespace blocklat
