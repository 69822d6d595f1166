#ifndef BLOCKLAT_CHECKS_HPP
#define BLOCKLAT_CHECKS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blocklat/blocks.hpp"
#include "blocklat/chains.hpp"
#include "blocklat/group.hpp"
#include "blocklat/interval.hpp"
#include "blocklat/jh.hpp"

namespace blocklat
{

using nlohmann::json;

struct CheckOptions
{
  IntervalStrategy strategy = IntervalStrategy::automatic;
  std::size_t cap = default_order_cap;
  bool exhaustive = false;
};

// Outcome of a property check. `hypothesis` tells whether the hypothesis of
// the theorem behind the property was met; `passed` is the verdict.
struct CheckReport
{
  std::string property;
  bool hypothesis = true;
  bool passed = false;
  std::vector<std::string> notes;
  json details = json::object();
};

std::vector<std::string> const &check_properties();

// Throws PreconditionError for an unknown property.
CheckReport run_check(GroupTable const &g, Point omega,
                      std::string_view property,
                      CheckOptions const &opts = {});

json node_json(IntervalLattice const &l, NodeId id);
json chain_json(IntervalLattice const &l, MaximalChain const &c);
json action_json(InducedAction const &a);

struct GroupInfo
{
  std::size_t degree = 0;
  std::size_t order = 0;
  bool transitive = false;
  std::vector<std::size_t> orbit_lengths;
  std::vector<std::vector<std::size_t>> generator_cycle_types;
  std::string tag;
  std::optional<Permutation> transitive_cyclic;
  std::optional<Permutation> two_orbit;
  std::vector<std::size_t> two_orbit_lengths;
  bool two_orbit_different_lengths = false;
};

// A two-orbit element with orbits of different lengths is preferred.
GroupInfo group_info(GroupTable const &g);

// Normal system <=> core-complementary block stabilizer, over all block
// systems. Returns the number of systems where the two disagree.
std::size_t normal_core_disagreements(GroupTable const &g, Point omega);

struct TwoOrbitSystemsReport
{
  std::size_t systems = 0;
  std::size_t intransitive = 0;
  std::size_t nonnormal_transitive = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;
};

// For every block system and the cyclic group <h> with two orbits:
// H-intransitive systems are normal; a non-normal H-transitive system has
// equal orbit lengths and an index-2 normal H-intransitive refinement
// whose blocks are the orbits of the kernel.
TwoOrbitSystemsReport two_orbit_systems_check(GroupTable const &g,
                                              Point omega,
                                              Permutation const &h);

} // namespace blocklat

#endif // BLOCKLAT_CHECKS_HPP
