#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "blocklat/blocks.hpp"
#include "blocklat/error.hpp"
#include "helpers.hpp"

using namespace blocklat;
using namespace blocklat::test;

namespace
{

// Oracle: every set partition of {0..n-1} into equal-size blocks that the
// generators map onto itself.
std::size_t brute_force_systems(GroupTable const &g)
{
  std::size_t n = g.degree();
  std::vector<std::size_t> label(n, 0);
  std::size_t count = 0;

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n) {
      std::vector<std::size_t> sizes(used, 0);
      for (auto l : label)
        ++sizes[l];
      if (std::adjacent_find(sizes.begin(), sizes.end(),
                             std::not_equal_to<>()) != sizes.end())
        return;
      for (auto const &gen : g.generators()) {
        std::vector<std::size_t> image(used, n);
        for (Point x = 0; x < n; ++x) {
          auto &slot = image[label[x]];
          if (slot == n)
            slot = label[gen[x]];
          else if (slot != label[gen[x]])
            return;
        }
      }
      ++count;
      return;
    }
    for (std::size_t l = 0; l <= used; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return count;
}

GroupTable brute_force_core(GroupTable const &g, GroupTable const &a)
{
  std::vector<Permutation> keep;
  for (auto const &x : a.elements()) {
    bool in_all = std::all_of(g.elements().begin(), g.elements().end(),
                              [&](Permutation const &y) {
                                return a.contains(conjugate(x, y));
                              });
    if (in_all)
      keep.push_back(x);
  }
  return GroupTable::from_elements(g.degree(), keep);
}

} // namespace

TEST(Blocks, D8HasThreeSystems)
{
  auto d8 = load("d8");
  EXPECT_EQ(brute_force_systems(d8), 3u);
  auto systems = all_block_systems(d8, 0);
  ASSERT_EQ(systems.size(), 3u);
  EXPECT_EQ(systems[1].blocks(),
            (std::vector<std::vector<Point>>{{0, 2}, {1, 3}}));
}

TEST(Blocks, CountMatchesBruteForce)
{
  for (auto name :
       {"c12", "d8", "d12", "d16", "a4", "s4", "a5", "f20", "q8_regular",
        "sl23_8", "twoorbit9", "s3wrc3"}) {
    auto g = load(name);
    EXPECT_EQ(all_block_systems(g, 0).size(), brute_force_systems(g)) << name;
  }
}

TEST(Blocks, SystemsAreInvariantAndClosed)
{
  for (auto name : {"d16", "c12", "sl23_8", "twoorbit9"}) {
    auto g = load(name);
    auto systems = all_block_systems(g, 0);
    for (auto const &e : systems) {
      EXPECT_TRUE(is_invariant(g, e));
      for (auto const &f : systems) {
        EXPECT_TRUE(std::binary_search(systems.begin(), systems.end(),
                                       meet(e, f)));
        EXPECT_TRUE(std::binary_search(systems.begin(), systems.end(),
                                       join(e, f)));
        EXPECT_TRUE(meet(e, f).refines(e));
        EXPECT_TRUE(e.refines(join(e, f)));
      }
    }
  }
}

TEST(Blocks, MinimalSystem)
{
  auto d8 = load("d8");
  EXPECT_TRUE(minimal_block_system(d8, 0, 0).is_trivial());
  EXPECT_EQ(minimal_block_system(d8, 0, 2).block_size(), 2u);
  EXPECT_EQ(minimal_block_system(d8, 0, 1).block_count(), 1u);
  EXPECT_THROW(minimal_block_system(group(4, {"(1 2)"}), 0, 1),
               PreconditionError);
}

TEST(Blocks, StabilizerCorrespondence)
{
  for (auto name : {"s4", "d12", "f20", "twoorbit9"}) {
    auto g = load(name);
    for (auto const &e : all_block_systems(g, 0)) {
      auto k = block_stabilizer(g, e, 0);
      EXPECT_EQ(k.order() * e.block_count(), g.order());
      EXPECT_EQ(block_system_of(g, k, 0), e);
      EXPECT_TRUE(is_normal(kernel_on_blocks(g, e), g));
    }
  }
}

TEST(Blocks, CoreMatchesIntersectionOfConjugates)
{
  for (auto name : {"s4", "d12", "sl23_8", "a4"}) {
    auto g = load(name);
    for (auto const &e : all_block_systems(g, 0)) {
      auto k = block_stabilizer(g, e, 0);
      EXPECT_EQ(core(g, k), brute_force_core(g, k)) << name;
    }
  }
}

TEST(BlocksProperty, NormalSystemIffCoreComplementary)
{
  for (auto name :
       {"c12", "d8", "d12", "d16", "a4", "s4", "a5", "f20", "q8_regular",
        "sl23_8", "twoorbit9", "s3wrc3", "a4_regular", "d12_regular"}) {
    auto g = load(name);
    for (auto const &e : all_block_systems(g, 0)) {
      auto k = block_stabilizer(g, e, 0);
      EXPECT_EQ(is_normal_system(g, e), is_core_complementary(g, 0, k))
        << name << " block size " << e.block_size();
    }
  }
}

TEST(Blocks, ClassifyOnRegularD12)
{
  auto g = load("d12_regular");
  auto h = two_orbit_elements(g);
  ASSERT_FALSE(h.empty());
  auto r = h.front();
  ASSERT_EQ(r.order(), 6u);

  auto orbit_sys = orbit_system(close(GroupSpec{12, {r}}));
  auto c = classify_H(r, orbit_sys);
  EXPECT_EQ(c.kind, HKind::intransitive);
  EXPECT_EQ(c.d1, 1u);
  EXPECT_EQ(c.d2, 1u);

  auto top = classify_H(r, BlockSystem::one_block(12));
  EXPECT_EQ(top.kind, HKind::transitive);
  EXPECT_EQ(top.d, 1u);

  // orbits of the centre <r^3>: blocks of size 2
  auto centre = orbit_system(close(GroupSpec{12, {power(r, 3)}}));
  auto z = classify_H(r, centre);
  EXPECT_EQ(z.kind, HKind::intransitive);
  EXPECT_EQ(z.d1, 3u);
  EXPECT_EQ(z.d2, 3u);
  EXPECT_EQ(z.block_size, 2u);
  EXPECT_EQ(z.n1, z.d1 * z.block_size);
}
