#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "blocklat/chains.hpp"
#include "blocklat/interval.hpp"
#include "blocklat/props.hpp"
#include "helpers.hpp"

using namespace blocklat;
using namespace blocklat::test;

namespace
{

FiniteLattice from_covers(std::size_t n,
                          std::vector<std::pair<NodeId, NodeId>> covers)
{
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (NodeId i = 0; i < n; ++i)
    leq[i][i] = true;
  for (auto [a, b] : covers)
    leq[a][b] = true;
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j])
          leq[i][j] = true;
  return FiniteLattice::from_order(
    n, [leq](NodeId a, NodeId b) { return bool(leq[a][b]); });
}

// Oracle: compare every pair of chains directly.
std::set<std::pair<std::size_t, std::size_t>>
brute_force_edges(std::vector<MaximalChain> const &chains)
{
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      if (chains[i].size() != chains[j].size())
        continue;
      std::size_t diff = 0;
      for (std::size_t k = 0; k < chains[i].size(); ++k)
        diff += chains[i][k] != chains[j][k];
      if (diff == 1)
        edges.emplace(i, j);
    }
  return edges;
}

std::map<std::size_t, std::size_t> lengths(std::vector<MaximalChain> const &c)
{
  std::map<std::size_t, std::size_t> h;
  for (auto const &m : c)
    ++h[chain_length(m)];
  return h;
}

} // namespace

TEST(Chains, RegularA4Census)
{
  auto l = build_interval(load("a4_regular"), 0);
  ASSERT_EQ(l.size(), 10u);
  auto chains = enumerate_maximal_chains(l.order(), l.bottom(), l.top());
  EXPECT_EQ(chains.size(), 7u);
  EXPECT_EQ(lengths(chains), (std::map<std::size_t, std::size_t>{{2, 4}, {3, 3}}));

  auto classes = r_equivalence_classes(l.order(), l.bottom(), l.top());
  ASSERT_EQ(classes.size(), 2u);
  for (auto const &c : classes) {
    auto h = lengths(c);
    EXPECT_EQ(h.size(), 1u);
  }
}

TEST(Chains, RegularS4ClassesAreLengths)
{
  auto l = build_interval(load("s4_regular"), 0);
  ASSERT_EQ(l.size(), 30u);
  auto classes = r_equivalence_classes(l.order(), l.bottom(), l.top());
  ASSERT_EQ(classes.size(), 2u);
  std::set<std::size_t> seen;
  for (auto const &c : classes) {
    auto h = lengths(c);
    ASSERT_EQ(h.size(), 1u);
    seen.insert(h.begin()->first);
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Chains, RegularA5SixClasses)
{
  auto l = build_interval(load("a5_regular"), 0);
  auto classes = r_equivalence_classes(l.order(), l.bottom(), l.top());
  ASSERT_EQ(classes.size(), 6u);

  std::size_t long_classes = 0, short_classes = 0;
  std::set<NodeId> a4s;
  for (auto const &c : classes) {
    auto h = lengths(c);
    ASSERT_EQ(h.size(), 1u);
    if (h.begin()->first == 4) {
      ++long_classes;
      // all chains of the class pass through the same A4 below the top
      std::set<NodeId> tops;
      for (auto const &m : c)
        tops.insert(m[m.size() - 2]);
      EXPECT_EQ(tops.size(), 1u);
      EXPECT_EQ(l.node(*tops.begin()).order(), 12u);
      a4s.insert(*tops.begin());
    } else {
      EXPECT_EQ(h.begin()->first, 3u);
      ++short_classes;
    }
  }
  EXPECT_EQ(long_classes, 5u);
  EXPECT_EQ(short_classes, 1u);
  EXPECT_EQ(a4s.size(), 5u);
}

TEST(ChainsProperty, RewriteGraphMatchesPairwiseComparison)
{
  for (auto name : {"a4_regular", "s4_regular", "d12_regular", "s3wrc3"}) {
    auto l = build_interval(load(name), 0);
    auto chains = enumerate_maximal_chains(l.order(), l.bottom(), l.top());
    auto g = rewrite_graph(chains);
    std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(),
                                                        g.edges.end());
    EXPECT_EQ(edges, brute_force_edges(chains)) << name;
    EXPECT_EQ(edges.size(), g.edges.size());
  }
}

TEST(ChainsProperty, ChainsAreMaximalAndDistinct)
{
  auto l = build_interval(load("s4_regular"), 0);
  auto const &o = l.order();
  auto chains = enumerate_maximal_chains(o, o.bottom(), o.top());
  EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
  EXPECT_EQ(std::adjacent_find(chains.begin(), chains.end()), chains.end());
  for (auto const &c : chains)
    for (std::size_t i = 1; i < c.size(); ++i)
      EXPECT_TRUE(o.covers(c[i - 1], c[i]));
}

TEST(ChainsProperty, SemimodularHypothesisGivesOneClass)
{
  for (auto name :
       {"c12", "d8", "d12", "d16", "d8_regular", "d12_regular", "d16_regular",
        "twoorbit9", "q8_regular", "sl23_8", "s3wrc3", "f20", "a4", "s4"}) {
    auto l = build_interval(load(name), 0);
    auto r = ritt_theorem_check(l.order(), true);
    if (!r.hypothesis)
      continue;
    EXPECT_EQ(r.class_count, 1u) << name;
    EXPECT_FALSE(r.split_pair) << name;
    EXPECT_TRUE(r.consistent()) << name;
  }
}

TEST(Chains, RegularD12Ritt)
{
  auto r = ritt_theorem_check(build_interval(load("d12_regular"), 0).order());
  EXPECT_TRUE(r.lower_semimodular);
  EXPECT_FALSE(r.semimodular);
  EXPECT_EQ(r.class_count, 1u);
}

TEST(Chains, RegularA4RittHypothesisFails)
{
  auto r = ritt_theorem_check(build_interval(load("a4_regular"), 0).order());
  EXPECT_FALSE(r.hypothesis);
  EXPECT_TRUE(r.semimodular_violation);
  EXPECT_TRUE(r.lower_semimodular_violation);
  EXPECT_EQ(r.class_count, 2u);
  ASSERT_TRUE(r.split_chains);
  EXPECT_NE(chain_length(r.split_chains->first),
            chain_length(r.split_chains->second));
}

TEST(Chains, ConverseFailsOnHandBuiltLattice)
{
  // Neither semimodular nor lower semimodular, yet one r-class.
  auto l = from_covers(9, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                           {3, 7}, {4, 5}, {4, 7}, {5, 8}, {6, 8}, {7, 8}});
  EXPECT_FALSE(is_semimodular(l));
  EXPECT_FALSE(is_lower_semimodular(l));
  auto r = ritt_theorem_check(l);
  EXPECT_EQ(r.chain_count, 5u);
  EXPECT_EQ(r.class_count, 1u);
}

TEST(Chains, PentagonHasTwoClasses)
{
  auto n5 = from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  auto classes = r_equivalence_classes(n5, 0, 4);
  EXPECT_EQ(classes.size(), 2u);
  EXPECT_EQ(enumerate_maximal_chains(n5, 1, 4).size(), 1u);
  EXPECT_EQ(enumerate_maximal_chains(n5, 2, 2).size(), 1u);
}
