#include "blocklat/lattice.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "blocklat/error.hpp"

namespace blocklat
{

FiniteLattice FiniteLattice::from_order(
  std::size_t n, std::function<bool(NodeId, NodeId)> leq)
{
  if (n == 0)
    throw PreconditionError("a lattice needs at least one node");

  FiniteLattice l;
  l._leq.assign(n, std::vector<char>(n, 0));
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b)
      l._leq[a][b] = leq(a, b) ? 1 : 0;
    if (!l._leq[a][a])
      throw PreconditionError("order relation is not reflexive");
  }

  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (l._leq[a][b] && l._leq[b][a])
        throw PreconditionError("order relation is not antisymmetric");
    }
  }

  auto bound = [&](NodeId a, NodeId b, bool lower) -> NodeId {
    auto below = [&](NodeId x, NodeId y) {
      return lower ? l._leq[x][y] != 0 : l._leq[y][x] != 0;
    };

    std::vector<NodeId> candidates;
    for (NodeId c = 0; c < n; ++c) {
      if (below(c, a) && below(c, b))
        candidates.push_back(c);
    }

    for (NodeId c : candidates) {
      bool best = std::all_of(candidates.begin(), candidates.end(),
                              [&](NodeId d) { return below(d, c); });
      if (best)
        return c;
    }
    throw PreconditionError("nodes " + std::to_string(a) + " and "
                            + std::to_string(b) + " have no "
                            + (lower ? "meet" : "join"));
  };

  l._meet.assign(n, std::vector<NodeId>(n));
  l._join.assign(n, std::vector<NodeId>(n));
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a; b < n; ++b) {
      l._meet[a][b] = l._meet[b][a] = bound(a, b, true);
      l._join[a][b] = l._join[b][a] = bound(a, b, false);
    }
  }

  l._bottom = l._meet[0][0];
  l._top = l._join[0][0];
  for (NodeId a = 1; a < n; ++a) {
    l._bottom = l._meet[l._bottom][a];
    l._top = l._join[l._top][a];
  }

  l._cover.assign(n, std::vector<char>(n, 0));
  l._up.assign(n, {});
  l._down.assign(n, {});
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (a == b || !l._leq[a][b])
        continue;

      bool between = false;
      for (NodeId c = 0; c < n && !between; ++c) {
        between = c != a && c != b && l._leq[a][c] && l._leq[c][b];
      }

      if (!between) {
        l._cover[a][b] = 1;
        l._up[a].push_back(b);
        l._down[b].push_back(a);
      }
    }
  }

  return l;
}

std::vector<std::pair<NodeId, NodeId>> FiniteLattice::cover_pairs() const
{
  std::vector<std::pair<NodeId, NodeId>> result;
  for (NodeId a = 0; a < size(); ++a) {
    for (NodeId b : _up[a])
      result.emplace_back(a, b);
  }
  return result;
}

FiniteLattice FiniteLattice::dual() const
{
  return from_order(size(), [this](NodeId a, NodeId b) { return leq(b, a); });
}

FiniteLattice FiniteLattice::interval(NodeId a, NodeId b,
                                      std::vector<NodeId> *nodes) const
{
  if (!leq(a, b))
    throw PreconditionError("interval bounds are not comparable");

  std::vector<NodeId> ids;
  for (NodeId x = 0; x < size(); ++x) {
    if (leq(a, x) && leq(x, b))
      ids.push_back(x);
  }

  FiniteLattice sub = from_order(ids.size(), [&](NodeId x, NodeId y) {
    return leq(ids[x], ids[y]);
  });

  if (nodes)
    *nodes = std::move(ids);
  return sub;
}

namespace
{

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(FiniteLattice const &l)
{
  std::size_t n = l.size();

  // Longest cover path from the bottom; nodes sorted by the number of
  // elements below them form a linear extension.
  std::vector<std::size_t> below(n, 0), above(n, 0);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (l.leq(b, a))
        ++below[a];
      if (l.leq(a, b))
        ++above[a];
    }
  }

  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](NodeId x, NodeId y) { return below[x] < below[y]; });

  std::vector<std::size_t> height(n, 0);
  for (NodeId x : order) {
    for (NodeId y : l.lower_covers(x))
      height[x] = std::max(height[x], height[y] + 1);
  }

  std::vector<Signature> sig(n);
  for (NodeId a = 0; a < n; ++a) {
    sig[a] = {height[a], l.upper_covers(a).size(), l.lower_covers(a).size(),
              below[a], above[a]};
  }
  return sig;
}

} // anonymous namespace

std::optional<std::vector<NodeId>> find_isomorphism(FiniteLattice const &a,
                                                    FiniteLattice const &b)
{
  std::size_t n = a.size();
  if (b.size() != n)
    return std::nullopt;

  auto sig_a = signatures(a);
  auto sig_b = signatures(b);

  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
  }

  // Assign nodes of `a` bottom-up so that cover constraints bite early.
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    return sig_a[x][0] < sig_a[y][0];
  });

  constexpr NodeId unset = static_cast<NodeId>(-1);
  std::vector<NodeId> image(n, unset);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == n)
      return true;

    NodeId x = order[k];
    for (NodeId y = 0; y < n; ++y) {
      if (used[y] || sig_b[y] != sig_a[x])
        continue;

      bool consistent = true;
      for (std::size_t j = 0; j < k && consistent; ++j) {
        NodeId u = order[j];
        NodeId v = image[u];
        consistent = a.covers(u, x) == b.covers(v, y)
                     && a.covers(x, u) == b.covers(y, v);
      }
      if (!consistent)
        continue;

      image[x] = y;
      used[y] = true;
      if (assign(k + 1))
        return true;
      used[y] = false;
      image[x] = unset;
    }
    return false;
  };

  if (!assign(0))
    return std::nullopt;
  return image;
}

} // namespace blocklat
