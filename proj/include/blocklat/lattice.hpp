#ifndef BLOCKLAT_LATTICE_HPP
#define BLOCKLAT_LATTICE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace blocklat
{

using NodeId = std::size_t;

// A finite lattice on nodes 0..size()-1, stored as its full order relation
// together with precomputed meet/join tables and the cover relation.
class FiniteLattice
{
public:
  FiniteLattice() = default;

  // `leq` must be a partial order on 0..n-1 in which every pair has a
  // unique greatest lower and least upper bound; PreconditionError
  // otherwise.
  static FiniteLattice from_order(std::size_t n,
                                  std::function<bool(NodeId, NodeId)> leq);

  std::size_t size() const { return _leq.size(); }

  bool leq(NodeId a, NodeId b) const { return _leq[a][b]; }
  NodeId meet(NodeId a, NodeId b) const { return _meet[a][b]; }
  NodeId join(NodeId a, NodeId b) const { return _join[a][b]; }

  // a <. b: a < b with nothing strictly in between.
  bool covers(NodeId a, NodeId b) const { return _cover[a][b]; }

  std::vector<NodeId> const &upper_covers(NodeId a) const
  { return _up[a]; }
  std::vector<NodeId> const &lower_covers(NodeId b) const
  { return _down[b]; }

  // All pairs (a, b) with a <. b, ordered by a then b.
  std::vector<std::pair<NodeId, NodeId>> cover_pairs() const;

  NodeId bottom() const { return _bottom; }
  NodeId top() const { return _top; }

  // The order dual: leq reversed, meet and join swapped.
  FiniteLattice dual() const;

  // Nodes x with a <= x <= b, as a lattice in its own right; `nodes`
  // receives the original ids in increasing order.
  FiniteLattice interval(NodeId a, NodeId b,
                         std::vector<NodeId> *nodes = nullptr) const;

private:
  std::vector<std::vector<char>> _leq;
  std::vector<std::vector<char>> _cover;
  std::vector<std::vector<NodeId>> _meet, _join;
  std::vector<std::vector<NodeId>> _up, _down;
  NodeId _bottom = 0, _top = 0;
};

// Order isomorphism between two finite lattices, found by backtracking over
// the cover digraph with degree-signature pruning. Returns the image of
// every node of `a`.
std::optional<std::vector<NodeId>> find_isomorphism(FiniteLattice const &a,
                                                    FiniteLattice const &b);

} // namespace blocklat

#endif // BLOCKLAT_LATTICE_HPP
