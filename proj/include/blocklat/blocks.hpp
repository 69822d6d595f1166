#ifndef BLOCKLAT_BLOCKS_HPP
#define BLOCKLAT_BLOCKS_HPP

#include <cstddef>
#include <vector>

#include "blocklat/group.hpp"

namespace blocklat
{

// A partition of {0..degree-1} into blocks of equal size. Blocks are sorted
// and numbered by their smallest point, so equal partitions compare equal.
class BlockSystem
{
public:
  BlockSystem() = default;

  // `label[x]` is any block label for x. Throws PreconditionError if the
  // blocks do not all have the same size.
  static BlockSystem from_labels(std::vector<std::size_t> const &label);
  static BlockSystem from_blocks(std::size_t degree,
                                 std::vector<std::vector<Point>> blocks);

  static BlockSystem singletons(std::size_t degree);
  static BlockSystem one_block(std::size_t degree);

  std::size_t degree() const { return _block_of.size(); }
  std::size_t block_size() const { return _blocks.front().size(); }
  std::size_t block_count() const { return _blocks.size(); }

  std::size_t block_of(Point x) const { return _block_of[x]; }
  std::vector<std::vector<Point>> const &blocks() const { return _blocks; }
  std::vector<Point> const &block(Point x) const
  { return _blocks[_block_of[x]]; }

  bool is_trivial() const
  { return block_size() == 1 || block_count() == 1; }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(BlockSystem const &coarser) const;

  friend bool operator==(BlockSystem const &, BlockSystem const &) = default;
  friend auto operator<=>(BlockSystem const &a, BlockSystem const &b)
  {
    if (a.block_size() != b.block_size())
      return a.block_size() <=> b.block_size();
    return a._blocks <=> b._blocks;
  }

private:
  std::vector<std::size_t> _block_of;
  std::vector<std::vector<Point>> _blocks;
};

bool is_invariant(GroupTable const &g, BlockSystem const &e);

// Coarsest common refinement and finest common coarsening.
BlockSystem meet(BlockSystem const &e, BlockSystem const &f);
BlockSystem join(BlockSystem const &e, BlockSystem const &f);

// Finest G-invariant partition in which omega and delta share a block.
// omega == delta gives the singleton partition.
BlockSystem minimal_block_system(GroupTable const &g, Point omega,
                                 Point delta);

// The lattice E(G), smallest blocks first. G must be transitive.
std::vector<BlockSystem> all_block_systems(GroupTable const &g, Point omega);

// Setwise stabilizer of the block through omega.
GroupTable block_stabilizer(GroupTable const &g, BlockSystem const &e,
                            Point omega);

// Elements fixing every block setwise; a normal subgroup of g.
GroupTable kernel_on_blocks(GroupTable const &g, BlockSystem const &e);

// The block system {omega^(K g) : g in G} belonging to G_omega <= K <= G.
BlockSystem block_system_of(GroupTable const &g, GroupTable const &k,
                            Point omega);

// Largest normal subgroup of g contained in a: the intersection of all
// conjugates of a.
GroupTable core(GroupTable const &g, GroupTable const &a);

// a == G_omega * core_G(a) as sets. Requires G_omega <= a <= g.
bool is_core_complementary(GroupTable const &g, Point omega,
                           GroupTable const &a);

// Blocks of e are exactly the orbits of the kernel on blocks.
bool is_normal_system(GroupTable const &g, BlockSystem const &e);

// Orbits of n as a block system (n normal in a transitive group).
BlockSystem orbit_system(GroupTable const &n);

enum class HKind { transitive, intransitive };

// How the cyclic group <h> (two orbits of lengths n1, n2) permutes the
// blocks of a system. Orbit 1 is the h-orbit containing the smaller point.
//
// transitive:   every block meets orbit 1 in n1/d points and orbit 2 in
//               n2/d points, where d is the number of blocks.
// intransitive: every block lies inside one h-orbit; orbit 1 holds d1
//               blocks, orbit 2 holds d2 blocks, n1/d1 = n2/d2 = n_E.
struct HClassification
{
  HKind kind;
  std::size_t n1 = 0, n2 = 0;
  std::size_t d = 0;
  std::size_t d1 = 0, d2 = 0;
  std::size_t block_size = 0;
};

HClassification classify_H(Permutation const &h, BlockSystem const &e);

} // namespace blocklat

#endif // BLOCKLAT_BLOCKS_HPP
