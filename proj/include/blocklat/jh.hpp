#ifndef BLOCKLAT_JH_HPP
#define BLOCKLAT_JH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "blocklat/chains.hpp"
#include "blocklat/group.hpp"
#include "blocklat/interval.hpp"

namespace blocklat
{

// A acting on the right cosets of B by right multiplication. Coset i is the
// i-th coset in order of its smallest element; image is the faithful
// permutation group on the [A:B] coset indices.
struct InducedAction
{
  GroupTable a;
  GroupTable b;
  std::size_t degree = 0;
  GroupTable image;
};

InducedAction coset_action(GroupTable const &a, GroupTable const &b);

// lambda(x^g) = lambda(x)^phi(g). phi is given on the generators of P.
struct PermEquivalence
{
  std::vector<Point> point_map;
  std::vector<Permutation> generator_images;
};

// Cheap necessary condition: degree, order and the multiset of element
// cycle types.
bool same_cycle_statistics(GroupTable const &p, GroupTable const &q);

std::optional<PermEquivalence> perm_equivalent(GroupTable const &p,
                                               GroupTable const &q);

std::vector<InducedAction> jh_profile(IntervalLattice const &l,
                                      MaximalChain const &chain);

struct JhReport
{
  bool holds = false;
  bool lengths_equal = false;
  std::vector<MaximalChain> chains; // bottom to top
  // Factor class of every cover step; equal ids mean perm equivalent
  // factors. Indexed like chains.
  std::vector<std::vector<std::size_t>> factor_classes;
  // A representative action per factor class.
  std::vector<InducedAction> classes;
  std::optional<std::pair<MaximalChain, MaximalChain>> counterexample;
};

JhReport jh_holds(IntervalLattice const &l);

// Every subgroup normal; equivalently every cyclic subgroup normal.
bool is_hamiltonian(GroupTable const &k);

// A transitive Hamiltonian subgroup; such a group acts regularly.
std::optional<GroupTable> has_transitive_hamiltonian(
  GroupTable const &g, std::size_t cap = default_order_cap);

// Every node of L(G_omega, G) is core-complementary.
bool lc_equals_l(GroupTable const &g, Point omega,
                 std::size_t cap = default_order_cap);

// The interval inside the subgroup lattice of a transitive Hamiltonian K
// via X -> X cap K: injective and preserving meets and joins.
bool embeds_in_subgroups_of(IntervalLattice const &l, GroupTable const &k,
                            std::size_t cap = default_order_cap);

} // namespace blocklat

#endif // BLOCKLAT_JH_HPP
