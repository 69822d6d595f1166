#include "blocklat/interval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "blocklat/blocks.hpp"
#include "blocklat/error.hpp"
#include "blocklat/tags.hpp"

namespace blocklat
{

namespace
{

bool node_less(GroupTable const &a, GroupTable const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.elements() < b.elements();
}

bool is_regular(GroupTable const &g)
{
  return g.order() == g.degree() && is_transitive(g);
}

} // anonymous namespace

IntervalLattice::IntervalLattice(GroupTable group, GroupTable base,
                                 std::vector<GroupTable> nodes)
: _group(std::move(group)),
  _base(std::move(base)),
  _nodes(std::move(nodes))
{
  std::sort(_nodes.begin(), _nodes.end(), node_less);
  _nodes.erase(std::unique(_nodes.begin(), _nodes.end()), _nodes.end());

  _order = FiniteLattice::from_order(_nodes.size(), [this](NodeId a, NodeId b) {
    return a == b
           || (_nodes[a].order() < _nodes[b].order()
               && _nodes[b].order() % _nodes[a].order() == 0
               && is_subgroup(_nodes[a], _nodes[b]));
  });
}

std::optional<NodeId> IntervalLattice::find(GroupTable const &x) const
{
  auto it = std::lower_bound(_nodes.begin(), _nodes.end(), x, node_less);
  if (it == _nodes.end() || !(*it == x))
    return std::nullopt;
  return static_cast<NodeId>(it - _nodes.begin());
}

IntervalLattice overgroup_lattice(GroupTable const &group,
                                  GroupTable const &base, std::size_t cap)
{
  if (!is_subgroup(base, group))
    throw PreconditionError("base is not a subgroup of the group");

  std::map<std::vector<Permutation>, std::size_t> index;
  std::vector<GroupTable> found;

  auto add = [&](GroupTable x) -> bool {
    auto [it, fresh] = index.emplace(x.elements(), found.size());
    if (fresh)
      found.push_back(std::move(x));
    return fresh;
  };

  add(base);
  for (auto const &g : group.elements()) {
    if (!base.contains(g))
      add(extend(base, g, cap));
  }

  // Every overgroup of base is generated by base and finitely many
  // elements, i.e. it is a join of cyclic extensions.
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (is_subgroup(found[i], found[j]) || is_subgroup(found[j], found[i]))
        continue;
      add(join(found[i], found[j], cap));
    }
  }

  return IntervalLattice(group, base, std::move(found));
}

IntervalLattice subgroup_lattice(GroupTable const &group, std::size_t cap)
{
  return overgroup_lattice(
    group, close(GroupSpec{group.degree(), {group.identity()}}), cap);
}

IntervalLattice build_interval(GroupTable const &g, Point omega,
                               IntervalStrategy strategy, std::size_t cap)
{
  if (!is_transitive(g))
    throw PreconditionError("group is not transitive");
  if (g.order() > cap)
    throw CapExceeded(cap);

  if (strategy == IntervalStrategy::automatic)
    strategy = is_regular(g) ? IntervalStrategy::via_subgroups
                             : IntervalStrategy::via_blocks;

  GroupTable stab = point_stabilizer(g, omega);

  if (strategy == IntervalStrategy::via_subgroups)
    return overgroup_lattice(g, stab, cap);

  std::vector<GroupTable> nodes;
  for (auto const &e : all_block_systems(g, omega))
    nodes.push_back(block_stabilizer(g, e, omega));

  return IntervalLattice(g, std::move(stab), std::move(nodes));
}

NodeId meet(IntervalLattice const &l, NodeId a, NodeId b)
{
  auto id = l.find(intersection(l.node(a), l.node(b)));
  if (!id)
    throw Error("interval is not closed under intersection");
  return *id;
}

NodeId join(IntervalLattice const &l, NodeId a, NodeId b)
{
  auto id = l.find(join(l.node(a), l.node(b)));
  if (!id)
    throw Error("interval is not closed under joins");
  return *id;
}

std::size_t DivisorLattice::meet(std::size_t a, std::size_t b) const
{
  return std::gcd(a, b);
}

std::size_t DivisorLattice::join(std::size_t a, std::size_t b) const
{
  return std::lcm(a, b);
}

FiniteLattice DivisorLattice::lattice() const
{
  return FiniteLattice::from_order(divisors.size(), [this](NodeId a, NodeId b) {
    return divisors[b] % divisors[a] == 0;
  });
}

DivisorLattice divisor_lattice(std::size_t n)
{
  if (n == 0)
    throw PreconditionError("divisor lattice needs n >= 1");

  DivisorLattice l;
  l.n = n;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0)
      l.divisors.push_back(d);
  }
  return l;
}

DedekindEmbedding dedekind_embedding(GroupTable const &g, Point omega,
                                     GroupTable const &c, std::size_t cap)
{
  if (!is_subgroup(c, g))
    throw PreconditionError("C is not a subgroup of G");
  if (!cyclic_generator(c))
    throw PreconditionError("C is not cyclic");
  if (!is_transitive(c) || c.order() != g.degree())
    throw PreconditionError("C is not a transitive cyclic group of order "
                            "equal to the degree");

  DedekindEmbedding result{build_interval(g, omega,
                                          IntervalStrategy::automatic, cap),
                           c.order(), {}, true, true, true};

  auto const &l = result.interval;
  for (auto const &x : l.nodes())
    result.divisor.push_back(intersection(x, c).order());

  auto sorted = result.divisor;
  std::sort(sorted.begin(), sorted.end());
  result.injective =
    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  for (NodeId a = 0; a < l.size(); ++a) {
    for (NodeId b = 0; b < l.size(); ++b) {
      auto da = result.divisor[a], db = result.divisor[b];
      if (result.divisor[meet(l, a, b)] != std::gcd(da, db))
        result.preserves_meet = false;
      if (result.divisor[join(l, a, b)] != std::lcm(da, db))
        result.preserves_join = false;
    }
  }

  return result;
}

bool dedekind_identity_holds(IntervalLattice const &l, GroupTable const &c)
{
  for (auto const &x : l.nodes()) {
    if (product_set(l.base(), intersection(x, c)) != x.elements())
      return false;
  }
  return true;
}

std::string to_dot(IntervalLattice const &l)
{
  std::ostringstream ss;
  ss << "digraph interval {\n"
     << "  rankdir=BT;\n";

  for (NodeId i = 0; i < l.size(); ++i) {
    ss << "  n" << i << " [label=\"" << structure_tag(l.node(i))
       << "\\n|X|=" << l.node(i).order() << "\"];\n";
  }

  for (auto [a, b] : l.covers())
    ss << "  n" << a << " -> n" << b << ";\n";

  ss << "}\n";
  return ss.str();
}

} // namespace blocklat
