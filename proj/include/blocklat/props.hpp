#ifndef BLOCKLAT_PROPS_HPP
#define BLOCKLAT_PROPS_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "blocklat/group.hpp"
#include "blocklat/interval.hpp"
#include "blocklat/lattice.hpp"

namespace blocklat
{

// AB == BA as sets.
bool are_permutable(GroupTable const &a, GroupTable const &b);

// [<A,B> : B] >= [A : A cap B], with equality exactly for permutable pairs.
struct IndexInequality
{
  std::size_t lhs;
  std::size_t rhs;
  bool equality;
  bool permutable;
};

IndexInequality index_inequality_check(GroupTable const &a,
                                       GroupTable const &b,
                                       std::size_t cap = default_order_cap);

// A pair (a, b) violating the covering implication, if any.
//
// semimodular:       a^b <. a and a^b <. b  imply  a <. avb and b <. avb
// lower semimodular: the converse implication
using NodePair = std::pair<NodeId, NodeId>;

std::optional<NodePair> semimodular_violation(FiniteLattice const &l);
std::optional<NodePair> lower_semimodular_violation(FiniteLattice const &l);

bool is_semimodular(FiniteLattice const &l);
bool is_lower_semimodular(FiniteLattice const &l);
bool is_modular(FiniteLattice const &l);

// m if |h| = 2m and h = <r, s> with r of order m, s an involution outside
// <r> and s r s = r^-1. C2 (m = 1) and V4 (m = 2) count as dihedral.
std::optional<std::size_t> is_dihedral(GroupTable const &h);

// Faithful D_2m: an m-cycle and a reflection on points 1..m, the reflection
// also swapping two extra points so that m = 1, 2 stay faithful.
GroupTable dihedral_group(std::size_t m);

struct DihedralWitness
{
  std::size_t m = 0;
  GroupTable normal_subgroup; // E cap F, or N
  GroupTable top;             // <E, F>, or G
  // Involutions modulo normal_subgroup generating the quotient; their
  // product has order m modulo normal_subgroup.
  Permutation first, second;

  bool normal = false;
  bool quotient_dihedral = false;
  bool interval_isomorphic = false; // L(N, top) ~ L(D_2m)

  bool verified() const
  { return normal && quotient_dihedral && interval_isomorphic; }
};

// For [E : E cap F] = [F : E cap F] = 2, checks E cap F is normal in <E,F>,
// the quotient is D_2m with 2m = [<E,F> : E cap F], and the interval
// between them is isomorphic to the subgroup lattice of D_2m. Returns
// nullopt when the index hypothesis fails.
std::optional<DihedralWitness>
dihedral_quotient_check(GroupTable const &e, GroupTable const &f,
                        std::size_t cap = default_order_cap);

std::optional<DihedralWitness>
dihedral_quotient_check(IntervalLattice const &l, NodeId e, NodeId f,
                        std::size_t cap = default_order_cap);

// A pair failing modularity in an interval, turned into a dihedral witness
// when the pair has the index-2 shape. nullopt for modular intervals or
// when no such pair exists.
std::optional<DihedralWitness>
find_dihedral_interval(IntervalLattice const &l,
                       std::size_t cap = default_order_cap);

struct LiftedPair
{
  GroupTable a, b;
  std::size_t steps = 0;
};

// Replaces (A, B) by (A core(B), B core(A)) until the cores agree. The
// result is non-permutable and contains the input pair.
LiftedPair lift_nonpermutable(GroupTable const &g, GroupTable const &a,
                              GroupTable const &b,
                              std::size_t cap = default_order_cap);

// N normal in G with E cap F <= N and G/N dihedral, for non-permutable
// E, F in L(G_omega, G) generating G, G containing a cyclic subgroup with
// two orbits. Built by lifting the pair and applying the index-2 dihedral
// check to the lifted pair.
DihedralWitness gru0_witness(GroupTable const &g, Point omega,
                             GroupTable const &e, GroupTable const &f,
                             std::size_t cap = default_order_cap);

} // namespace blocklat

#endif // BLOCKLAT_PROPS_HPP
