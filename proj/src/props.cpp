#include "blocklat/props.hpp"

#include <algorithm>
#include <iterator>

#include "blocklat/blocks.hpp"
#include "blocklat/error.hpp"
#include "blocklat/jh.hpp"

namespace blocklat
{

bool are_permutable(GroupTable const &a, GroupTable const &b)
{
  if (a.degree() != b.degree())
    throw PreconditionError("subgroups of different symmetric groups");

  return product_set(a, b) == product_set(b, a);
}

IndexInequality index_inequality_check(GroupTable const &a,
                                       GroupTable const &b, std::size_t cap)
{
  std::size_t joined = join(a, b, cap).order();
  std::size_t common = intersection(a, b).order();

  IndexInequality r;
  r.lhs = joined / b.order();
  r.rhs = a.order() / common;
  r.equality = r.lhs == r.rhs;
  r.permutable = are_permutable(a, b);

  if (r.lhs < r.rhs)
    throw Error("index inequality [<A,B>:B] >= [A:A cap B] violated");
  return r;
}

namespace
{

bool lower_condition(FiniteLattice const &l, NodeId a, NodeId b)
{
  NodeId m = l.meet(a, b);
  return l.covers(m, a) && l.covers(m, b);
}

bool upper_condition(FiniteLattice const &l, NodeId a, NodeId b)
{
  NodeId j = l.join(a, b);
  return l.covers(a, j) && l.covers(b, j);
}

} // anonymous namespace

std::optional<NodePair> semimodular_violation(FiniteLattice const &l)
{
  for (NodeId a = 0; a < l.size(); ++a) {
    for (NodeId b = a + 1; b < l.size(); ++b) {
      if (lower_condition(l, a, b) && !upper_condition(l, a, b))
        return NodePair{a, b};
    }
  }
  return std::nullopt;
}

std::optional<NodePair> lower_semimodular_violation(FiniteLattice const &l)
{
  for (NodeId a = 0; a < l.size(); ++a) {
    for (NodeId b = a + 1; b < l.size(); ++b) {
      if (upper_condition(l, a, b) && !lower_condition(l, a, b))
        return NodePair{a, b};
    }
  }
  return std::nullopt;
}

bool is_semimodular(FiniteLattice const &l)
{
  return !semimodular_violation(l);
}

bool is_lower_semimodular(FiniteLattice const &l)
{
  return !lower_semimodular_violation(l);
}

bool is_modular(FiniteLattice const &l)
{
  return is_semimodular(l) && is_lower_semimodular(l);
}

std::optional<std::size_t> is_dihedral(GroupTable const &h)
{
  if (h.order() < 2 || h.order() % 2 != 0)
    return std::nullopt;

  std::size_t m = h.order() / 2;

  std::vector<Permutation> involutions;
  for (auto const &x : h.elements()) {
    if (x.order() == 2)
      involutions.push_back(x);
  }

  for (auto const &r : h.elements()) {
    if (r.order() != m)
      continue;

    auto r_inv = r.inverse();
    std::vector<Permutation> rotations;
    for (std::size_t k = 0; k < m; ++k)
      rotations.push_back(power(r, static_cast<long long>(k)));
    std::sort(rotations.begin(), rotations.end());

    for (auto const &s : involutions) {
      if (std::binary_search(rotations.begin(), rotations.end(), s))
        continue;
      if (s * r * s == r_inv)
        return m;
    }
  }
  return std::nullopt;
}

GroupTable dihedral_group(std::size_t m)
{
  if (m == 0)
    throw PreconditionError("D_2m needs m >= 1");

  std::size_t degree = m + 2;

  std::vector<Point> rot(degree), refl(degree);
  for (Point x = 0; x < degree; ++x)
    rot[x] = refl[x] = x;

  for (Point x = 0; x < m; ++x) {
    rot[x] = static_cast<Point>((x + 1) % m);
    refl[x] = static_cast<Point>((m - x) % m);
  }
  std::swap(refl[m], refl[m + 1]);

  return close(GroupSpec{degree, {Permutation(rot), Permutation(refl)}});
}

std::optional<DihedralWitness>
dihedral_quotient_check(GroupTable const &e, GroupTable const &f,
                        std::size_t cap)
{
  GroupTable common = intersection(e, f);
  if (e.order() != 2 * common.order() || f.order() != 2 * common.order())
    return std::nullopt;

  DihedralWitness w;
  w.normal_subgroup = common;
  w.top = join(e, f, cap);
  w.m = w.top.order() / common.order() / 2;

  auto outside = [&](GroupTable const &x) {
    for (auto const &p : x.elements()) {
      if (!common.contains(p))
        return p;
    }
    throw Error("no element outside the intersection");
  };
  w.first = outside(e);
  w.second = outside(f);

  w.normal = is_normal(common, w.top);
  if (!w.normal)
    return w;

  // The quotient acts regularly on the cosets of the normal subgroup.
  InducedAction quotient = coset_action(w.top, common);
  auto m = is_dihedral(quotient.image);

  std::size_t product_order = 0;
  Permutation rot = w.first * w.second;
  Permutation acc = rot;
  for (std::size_t k = 1; k <= w.top.order(); ++k, acc = acc * rot) {
    if (common.contains(acc)) {
      product_order = k;
      break;
    }
  }

  w.quotient_dihedral = m && *m == w.m && product_order == w.m
                        && common.contains(w.first * w.first)
                        && common.contains(w.second * w.second);

  auto interval = overgroup_lattice(w.top, common, cap);
  auto model = subgroup_lattice(dihedral_group(w.m), cap);
  w.interval_isomorphic =
    find_isomorphism(interval.order(), model.order()).has_value();

  return w;
}

std::optional<DihedralWitness>
dihedral_quotient_check(IntervalLattice const &l, NodeId e, NodeId f,
                        std::size_t cap)
{
  return dihedral_quotient_check(l.node(e), l.node(f), cap);
}

std::optional<DihedralWitness>
find_dihedral_interval(IntervalLattice const &l, std::size_t cap)
{
  auto const &order = l.order();
  for (NodeId a = 0; a < l.size(); ++a) {
    for (NodeId b = a + 1; b < l.size(); ++b) {
      bool lower = lower_condition(order, a, b);
      bool upper = upper_condition(order, a, b);
      if (lower == upper)
        continue;

      if (auto w = dihedral_quotient_check(l, a, b, cap))
        return w;
    }
  }
  return std::nullopt;
}

LiftedPair lift_nonpermutable(GroupTable const &g, GroupTable const &a,
                              GroupTable const &b, std::size_t cap)
{
  if (!is_subgroup(a, g) || !is_subgroup(b, g))
    throw PreconditionError("A and B must be subgroups of G");
  if (are_permutable(a, b))
    throw PreconditionError("A and B are permutable");

  LiftedPair r{a, b, 0};
  for (;;) {
    GroupTable core_a = core(g, r.a);
    GroupTable core_b = core(g, r.b);
    if (core_a == core_b)
      return r;

    GroupTable next_a = join(r.a, core_b, cap);
    GroupTable next_b = join(r.b, core_a, cap);
    if (next_a == r.a && next_b == r.b)
      throw Error("core lifting reached a fixed point with distinct cores");

    r.a = std::move(next_a);
    r.b = std::move(next_b);
    ++r.steps;

    if (are_permutable(r.a, r.b))
      throw Error("core lifting produced a permutable pair");
  }
}

DihedralWitness gru0_witness(GroupTable const &g, Point omega,
                             GroupTable const &e, GroupTable const &f,
                             std::size_t cap)
{
  if (!is_transitive(g))
    throw PreconditionError("G is not transitive");
  if (two_orbit_elements(g).empty())
    throw PreconditionError("G has no cyclic subgroup with two orbits");

  GroupTable stab = point_stabilizer(g, omega);
  if (!is_subgroup(stab, e) || !is_subgroup(stab, f))
    throw PreconditionError("E and F must contain the point stabilizer");
  if (!(join(e, f, cap) == g))
    throw PreconditionError("E and F do not generate G");
  if (are_permutable(e, f))
    throw PreconditionError("E and F are permutable");

  LiftedPair lifted = lift_nonpermutable(g, e, f, cap);

  auto w = dihedral_quotient_check(lifted.a, lifted.b, cap);
  if (!w)
    throw Error("lifted pair does not have index 2 over its intersection");

  if (!is_subgroup(intersection(e, f), w->normal_subgroup))
    throw Error("E cap F is not contained in the dihedral kernel");

  return *w;
}

} // namespace blocklat
