#ifndef BLOCKLAT_GROUP_HPP
#define BLOCKLAT_GROUP_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blocklat/perm.hpp"

namespace blocklat
{

inline constexpr std::size_t default_order_cap = 20000;

struct GroupSpec
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// A fully enumerated permutation group: its generators plus the sorted,
// duplicate-free list of all elements.
class GroupTable
{
public:
  GroupTable() = default;

  // Wraps a set that is already known to be a group. The elements are
  // sorted here and a small generating set is extracted greedily. No closure
  // check is made; use close() for untrusted input.
  static GroupTable from_elements(std::size_t degree,
                                  std::vector<Permutation> elements);

  GroupSpec const &spec() const { return _spec; }
  std::vector<Permutation> const &generators() const
  { return _spec.generators; }
  std::vector<Permutation> const &elements() const { return _elements; }

  std::size_t degree() const { return _spec.degree; }
  std::size_t order() const { return _elements.size(); }

  bool contains(Permutation const &p) const;

  // Position of p in elements(), if present.
  std::optional<std::size_t> index_of(Permutation const &p) const;

  Permutation identity() const { return Permutation(degree()); }

  // Same element set (generators may differ).
  friend bool operator==(GroupTable const &a, GroupTable const &b)
  { return a._elements == b._elements; }

private:
  friend GroupTable close(GroupSpec const &spec, std::size_t cap);

  GroupSpec _spec;
  std::vector<Permutation> _elements;
};

// Smallest group containing the generators. Throws CapExceeded when the
// closure outgrows `cap`, PreconditionError on mixed degrees or an empty
// generator list.
GroupTable close(GroupSpec const &spec, std::size_t cap = default_order_cap);

// Orbit partition of <elements> on {0..degree-1}. Each orbit is sorted and
// the orbits are ordered by smallest point; fixed points form singletons.
std::vector<std::vector<Point>> orbits(std::span<Permutation const> elements,
                                       std::size_t degree);

std::vector<Point> orbit(GroupTable const &g, Point x);

bool is_transitive(GroupTable const &g);

GroupTable point_stabilizer(GroupTable const &g, Point omega);

// Subgroup utilities. Arguments are assumed to live in a common Sym(n).

bool is_subgroup(GroupTable const &sub, GroupTable const &group);
bool is_normal(GroupTable const &sub, GroupTable const &group);

GroupTable intersection(GroupTable const &a, GroupTable const &b);

// <a, b>
GroupTable join(GroupTable const &a, GroupTable const &b,
                std::size_t cap = default_order_cap);

// <group, extra>
GroupTable extend(GroupTable const &group, Permutation const &extra,
                  std::size_t cap = default_order_cap);

// The set {x * y : x in a, y in b}, sorted.
std::vector<Permutation> product_set(GroupTable const &a, GroupTable const &b);

GroupTable conjugate(GroupTable const &a, Permutation const &g);

// Element of order |g| if the group is cyclic.
std::optional<Permutation> cyclic_generator(GroupTable const &g);

bool is_abelian(GroupTable const &g);

// Right-regular action: the points are the group elements in canonical
// order and g acts by x -> x * g. The generators keep their order.
GroupTable regularize(GroupTable const &g,
                      std::size_t cap = default_order_cap);

// Elements h whose cyclic subgroup has exactly two orbits on the points.
std::vector<Permutation> two_orbit_elements(GroupTable const &g);

// Elements whose cyclic subgroup is transitive (an n-cycle).
std::vector<Permutation> transitive_cyclic_elements(GroupTable const &g);

// Group file: first non-comment line is the degree, every further
// non-empty line not starting with '#' is one generator in cycle notation.
// Errors carry 1-based line numbers.
GroupSpec parse_group_file(std::string const &text);
GroupSpec read_group_file(std::string const &path);
std::string format_group_file(GroupSpec const &spec);

} // namespace blocklat

#endif // BLOCKLAT_GROUP_HPP
