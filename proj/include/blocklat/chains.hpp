#ifndef BLOCKLAT_CHAINS_HPP
#define BLOCKLAT_CHAINS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "blocklat/lattice.hpp"

namespace blocklat
{

// a = c[0] <. c[1] <. ... <. c[k] = b; the length is k = size() - 1.
using MaximalChain = std::vector<NodeId>;

inline std::size_t chain_length(MaximalChain const &c) { return c.size() - 1; }

// All maximal chains from a to b, in lexicographic order of node ids.
std::vector<MaximalChain> enumerate_maximal_chains(FiniteLattice const &l,
                                                   NodeId a, NodeId b);

// Chains are adjacent when they have equal length and differ in exactly one
// interior node.
struct RewriteGraph
{
  std::vector<MaximalChain> chains;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j

  // Component label of every chain; labels are numbered by the first chain
  // of each component.
  std::vector<std::size_t> components() const;
};

RewriteGraph rewrite_graph(std::vector<MaximalChain> chains);

// Connected components of the rewrite graph between a and b.
std::vector<std::vector<MaximalChain>>
r_equivalence_classes(FiniteLattice const &l, NodeId a, NodeId b);

struct RittReport
{
  bool semimodular = false;
  bool lower_semimodular = false;
  bool hypothesis = false; // semimodular or lower semimodular

  std::size_t chain_count = 0; // bottom to top
  std::size_t class_count = 0; // bottom to top
  std::map<std::size_t, std::size_t> length_histogram;

  // When the hypothesis fails: a pair violating each covering condition.
  std::optional<std::pair<NodeId, NodeId>> semimodular_violation;
  std::optional<std::pair<NodeId, NodeId>> lower_semimodular_violation;

  // First comparable pair (a, b) with more than one r-class, and one chain
  // from each of two different classes. Only searched over all pairs in
  // exhaustive mode; otherwise only bottom to top.
  std::optional<std::pair<NodeId, NodeId>> split_pair;
  std::optional<std::pair<MaximalChain, MaximalChain>> split_chains;

  // hypothesis implies a single class everywhere that was checked
  bool consistent() const { return !hypothesis || !split_pair; }
};

RittReport ritt_theorem_check(FiniteLattice const &l, bool exhaustive = false);

} // namespace blocklat

#endif // BLOCKLAT_CHAINS_HPP
