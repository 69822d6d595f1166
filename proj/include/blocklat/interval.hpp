#ifndef BLOCKLAT_INTERVAL_HPP
#define BLOCKLAT_INTERVAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blocklat/group.hpp"
#include "blocklat/lattice.hpp"

namespace blocklat
{

enum class IntervalStrategy
{
  // via_subgroups for regular actions, via_blocks otherwise
  automatic,
  // block stabilizers of all block systems
  via_blocks,
  // closure of the cyclic extensions <base, g> under joins
  via_subgroups
};

// The subgroups X with base <= X <= group, ordered by inclusion. Nodes are
// sorted by order and then by element list, so the bottom is node 0 and
// the top is the last node.
class IntervalLattice
{
public:
  IntervalLattice(GroupTable group, GroupTable base,
                  std::vector<GroupTable> nodes);

  GroupTable const &group() const { return _group; }
  GroupTable const &base() const { return _base; }

  std::size_t size() const { return _nodes.size(); }
  std::vector<GroupTable> const &nodes() const { return _nodes; }
  GroupTable const &node(NodeId id) const { return _nodes[id]; }

  FiniteLattice const &order() const { return _order; }
  NodeId bottom() const { return _order.bottom(); }
  NodeId top() const { return _order.top(); }
  std::vector<std::pair<NodeId, NodeId>> covers() const
  { return _order.cover_pairs(); }

  std::optional<NodeId> find(GroupTable const &x) const;

  friend bool operator==(IntervalLattice const &a, IntervalLattice const &b)
  { return a._nodes == b._nodes; }

private:
  GroupTable _group;
  GroupTable _base;
  std::vector<GroupTable> _nodes;
  FiniteLattice _order;
};

// L(G_omega, G). G must be transitive.
IntervalLattice build_interval(GroupTable const &g, Point omega,
                               IntervalStrategy strategy
                                 = IntervalStrategy::automatic,
                               std::size_t cap = default_order_cap);

// L(base, group) for any base <= group, by closing cyclic extensions.
IntervalLattice overgroup_lattice(GroupTable const &group,
                                  GroupTable const &base,
                                  std::size_t cap = default_order_cap);

// The full subgroup lattice L(group).
IntervalLattice subgroup_lattice(GroupTable const &group,
                                 std::size_t cap = default_order_cap);

// Node holding the intersection / generated subgroup of two nodes.
NodeId meet(IntervalLattice const &l, NodeId a, NodeId b);
NodeId join(IntervalLattice const &l, NodeId a, NodeId b);

// Divisors of n ordered by divisibility.
struct DivisorLattice
{
  std::size_t n = 1;
  std::vector<std::size_t> divisors;

  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  // Node i is divisors[i].
  FiniteLattice lattice() const;
};

DivisorLattice divisor_lattice(std::size_t n);

// X -> |X cap C| for a transitive cyclic subgroup C of order n = degree.
struct DedekindEmbedding
{
  IntervalLattice interval;
  std::size_t n;
  std::vector<std::size_t> divisor; // per node

  bool injective;
  bool preserves_meet; // |X cap Y cap C| = gcd
  bool preserves_join; // |<X,Y> cap C| = lcm

  bool embeds() const
  { return injective && preserves_meet && preserves_join; }
};

DedekindEmbedding dedekind_embedding(GroupTable const &g, Point omega,
                                     GroupTable const &c,
                                     std::size_t cap = default_order_cap);

// X == base * (X cap c) for every node X.
bool dedekind_identity_holds(IntervalLattice const &l, GroupTable const &c);

// Cover digraph, one node per subgroup (labelled with structure tag and
// order), edges pointing upwards.
std::string to_dot(IntervalLattice const &l);

} // namespace blocklat

#endif // BLOCKLAT_INTERVAL_HPP
