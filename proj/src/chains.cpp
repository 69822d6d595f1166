#include "blocklat/chains.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "blocklat/error.hpp"
#include "blocklat/props.hpp"

namespace blocklat
{

std::vector<MaximalChain> enumerate_maximal_chains(FiniteLattice const &l,
                                                   NodeId a, NodeId b)
{
  if (!l.leq(a, b))
    throw PreconditionError("chain endpoints are not comparable");

  std::vector<MaximalChain> result;
  MaximalChain path{a};

  auto dfs = [&](auto &&self, NodeId x) -> void {
    if (x == b) {
      result.push_back(path);
      return;
    }
    for (NodeId y : l.upper_covers(x)) {
      if (!l.leq(y, b))
        continue;
      path.push_back(y);
      self(self, y);
      path.pop_back();
    }
  };

  dfs(dfs, a);
  return result;
}

std::vector<std::size_t> RewriteGraph::components() const
{
  std::vector<std::size_t> parent(chains.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (auto [i, j] : edges) {
    auto a = find(i), b = find(j);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> label(chains.size());
  std::vector<std::size_t> number(chains.size(), chains.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    auto r = find(i);
    if (number[r] == chains.size())
      number[r] = next++;
    label[i] = number[r];
  }
  return label;
}

RewriteGraph rewrite_graph(std::vector<MaximalChain> chains)
{
  constexpr NodeId hole = std::numeric_limits<NodeId>::max();

  // Chains with the same length that agree everywhere except at one
  // interior position share the key (chain with that position blanked).
  std::map<MaximalChain, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t pos = 1; pos + 1 < chains[i].size(); ++pos) {
      MaximalChain key = chains[i];
      key[pos] = hole;
      buckets[key].push_back(i);
    }
  }

  RewriteGraph g;
  for (auto const &[_, members] : buckets) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y)
        g.edges.emplace_back(members[x], members[y]);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.chains = std::move(chains);
  return g;
}

std::vector<std::vector<MaximalChain>>
r_equivalence_classes(FiniteLattice const &l, NodeId a, NodeId b)
{
  RewriteGraph g = rewrite_graph(enumerate_maximal_chains(l, a, b));
  auto label = g.components();

  std::size_t count = label.empty()
                        ? 0
                        : *std::max_element(label.begin(), label.end()) + 1;

  std::vector<std::vector<MaximalChain>> classes(count);
  for (std::size_t i = 0; i < g.chains.size(); ++i)
    classes[label[i]].push_back(g.chains[i]);
  return classes;
}

RittReport ritt_theorem_check(FiniteLattice const &l, bool exhaustive)
{
  RittReport r;
  r.semimodular_violation = blocklat::semimodular_violation(l);
  r.lower_semimodular_violation = blocklat::lower_semimodular_violation(l);
  r.semimodular = !r.semimodular_violation;
  r.lower_semimodular = !r.lower_semimodular_violation;
  r.hypothesis = r.semimodular || r.lower_semimodular;

  auto classes = r_equivalence_classes(l, l.bottom(), l.top());
  r.class_count = classes.size();
  for (auto const &cls : classes) {
    r.chain_count += cls.size();
    for (auto const &c : cls)
      ++r.length_histogram[chain_length(c)];
  }

  auto record_split = [&](NodeId a, NodeId b,
                          std::vector<std::vector<MaximalChain>> const &cls) {
    r.split_pair = std::make_pair(a, b);
    r.split_chains = std::make_pair(cls[0].front(), cls[1].front());
  };

  if (r.class_count > 1)
    record_split(l.bottom(), l.top(), classes);

  if (exhaustive && !r.split_pair) {
    for (NodeId a = 0; a < l.size() && !r.split_pair; ++a) {
      for (NodeId b = 0; b < l.size() && !r.split_pair; ++b) {
        if (a == b || !l.leq(a, b))
          continue;
        auto cls = r_equivalence_classes(l, a, b);
        if (cls.size() > 1)
          record_split(a, b, cls);
      }
    }
  }

  return r;
}

} // namespace blocklat
