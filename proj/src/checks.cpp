#include "blocklat/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blocklat/error.hpp"
#include "blocklat/props.hpp"
#include "blocklat/tags.hpp"

namespace blocklat
{

std::vector<std::string> const &check_properties()
{
  static std::vector<std::string> const names{
    "lower-semimodular", "semimodular", "modular",   "ritt",
    "jh",                "hamiltonian", "two-orbit", "dedekind"};
  return names;
}

json node_json(IntervalLattice const &l, NodeId id)
{
  return {{"id", id},
          {"order", l.node(id).order()},
          {"tag", structure_tag(l.node(id))}};
}

json chain_json(IntervalLattice const &l, MaximalChain const &c)
{
  json nodes = json::array();
  for (auto id : c)
    nodes.push_back(id);
  json orders = json::array();
  for (auto id : c)
    orders.push_back(l.node(id).order());
  return {{"nodes", nodes}, {"orders", orders}, {"length", chain_length(c)}};
}

json action_json(InducedAction const &a)
{
  return {{"degree", a.degree},
          {"order", a.image.order()},
          {"tag", structure_tag(a.image)}};
}

namespace
{

json pair_json(IntervalLattice const &l, std::optional<NodePair> const &p)
{
  if (!p)
    return nullptr;
  return json::array({node_json(l, p->first), node_json(l, p->second)});
}

json witness_json(DihedralWitness const &w)
{
  return {{"m", w.m},
          {"kernel_order", w.normal_subgroup.order()},
          {"top_order", w.top.order()},
          {"first", format_cycles(w.first)},
          {"second", format_cycles(w.second)},
          {"normal", w.normal},
          {"quotient_dihedral", w.quotient_dihedral},
          {"interval_isomorphic", w.interval_isomorphic}};
}

bool is_prime(std::size_t m)
{
  if (m < 2)
    return false;
  for (std::size_t d = 2; d * d <= m; ++d) {
    if (m % d == 0)
      return false;
  }
  return true;
}

void lattice_property(CheckReport &r, IntervalLattice const &l)
{
  auto const &o = l.order();
  auto sm = semimodular_violation(o);
  auto lsm = lower_semimodular_violation(o);

  r.details["semimodular"] = !sm;
  r.details["lower_semimodular"] = !lsm;
  r.details["semimodular_violation"] = pair_json(l, sm);
  r.details["lower_semimodular_violation"] = pair_json(l, lsm);

  if (r.property == "semimodular")
    r.passed = !sm;
  else if (r.property == "lower-semimodular")
    r.passed = !lsm;
  else
    r.passed = !sm && !lsm;
}

json jh_json(IntervalLattice const &l, JhReport const &jh)
{
  json out;
  out["holds"] = jh.holds;
  out["lengths_equal"] = jh.lengths_equal;
  out["chain_count"] = jh.chains.size();

  json factors = json::array();
  for (auto const &a : jh.classes)
    factors.push_back(action_json(a));
  out["factor_classes"] = factors;

  auto profile = [&](std::size_t i) {
    auto ids = jh.factor_classes[i];
    std::sort(ids.begin(), ids.end());
    json p = json::array();
    for (auto id : ids)
      p.push_back(action_json(jh.classes[id]));
    return p;
  };

  // Distinct profiles per r-equivalence class.
  auto graph = rewrite_graph(jh.chains);
  auto label = graph.components();
  std::size_t count =
    label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;

  json classes = json::array();
  for (std::size_t c = 0; c < count; ++c) {
    std::set<std::vector<std::size_t>> seen;
    json profiles = json::array();
    std::size_t members = 0;
    for (std::size_t i = 0; i < jh.chains.size(); ++i) {
      if (label[i] != c)
        continue;
      ++members;
      auto ids = jh.factor_classes[i];
      std::sort(ids.begin(), ids.end());
      if (seen.insert(ids).second)
        profiles.push_back(profile(i));
    }
    classes.push_back({{"chains", members}, {"profiles", profiles}});
  }
  out["r_classes"] = classes;

  if (jh.counterexample) {
    auto const &[a, b] = *jh.counterexample;
    std::size_t ia = std::find(jh.chains.begin(), jh.chains.end(), a)
                     - jh.chains.begin();
    std::size_t ib = std::find(jh.chains.begin(), jh.chains.end(), b)
                     - jh.chains.begin();
    json first = chain_json(l, a), second = chain_json(l, b);
    first["profile"] = profile(ia);
    second["profile"] = profile(ib);
    out["counterexample"] = json::array({first, second});
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

} // anonymous namespace

GroupInfo group_info(GroupTable const &g)
{
  GroupInfo info;
  info.degree = g.degree();
  info.order = g.order();
  info.transitive = is_transitive(g);
  for (auto const &o : orbits(g.elements(), g.degree()))
    info.orbit_lengths.push_back(o.size());
  for (auto const &x : g.generators())
    info.generator_cycle_types.push_back(x.cycle_type());
  info.tag = structure_tag(g);

  auto cyclic = transitive_cyclic_elements(g);
  if (!cyclic.empty())
    info.transitive_cyclic = cyclic.front();

  for (auto const &h : two_orbit_elements(g)) {
    auto type = h.cycle_type();
    bool different = type[0] != type[1];
    if (!info.two_orbit || (different && !info.two_orbit_different_lengths)) {
      info.two_orbit = h;
      info.two_orbit_lengths = {type[1], type[0]};
      info.two_orbit_different_lengths = different;
    }
    if (info.two_orbit_different_lengths)
      break;
  }
  return info;
}

std::size_t normal_core_disagreements(GroupTable const &g, Point omega)
{
  std::size_t bad = 0;
  for (auto const &e : all_block_systems(g, omega)) {
    bool normal = is_normal_system(g, e);
    bool cc = is_core_complementary(g, omega, block_stabilizer(g, e, omega));
    if (normal != cc)
      ++bad;
  }
  return bad;
}

TwoOrbitSystemsReport two_orbit_systems_check(GroupTable const &g,
                                              Point omega,
                                              Permutation const &h)
{
  TwoOrbitSystemsReport r;
  auto systems = all_block_systems(g, omega);

  auto violation = [&](BlockSystem const &e, std::string const &what) {
    ++r.violations;
    r.messages.push_back("system with block size "
                         + std::to_string(e.block_size()) + ": " + what);
  };

  for (auto const &e : systems) {
    ++r.systems;
    auto c = classify_H(h, e);
    bool normal = is_normal_system(g, e);

    if (c.kind == HKind::intransitive) {
      ++r.intransitive;
      if (!normal)
        violation(e, "H-intransitive but not normal");
      continue;
    }
    if (normal)
      continue;

    ++r.nonnormal_transitive;
    if (c.n1 != c.n2)
      violation(e, "non-normal H-transitive with n1 != n2");

    BlockSystem refinement;
    try {
      refinement = orbit_system(kernel_on_blocks(g, e));
    } catch (PreconditionError const &) {
      violation(e, "kernel orbits do not form a block system");
      continue;
    }

    bool ok = is_invariant(g, refinement) && refinement.refines(e)
              && e.block_size() == 2 * refinement.block_size()
              && is_normal_system(g, refinement)
              && classify_H(h, refinement).kind == HKind::intransitive;
    if (!ok)
      violation(e, "no index-2 normal H-intransitive refinement");

    for (auto const &f : systems) {
      if (f.refines(e) && classify_H(h, f).kind == HKind::intransitive
          && !f.refines(refinement))
        violation(e, "H-intransitive subsystem not below the refinement");
    }
  }
  return r;
}

CheckReport run_check(GroupTable const &g, Point omega,
                      std::string_view property, CheckOptions const &opts)
{
  auto const &names = check_properties();
  if (std::find(names.begin(), names.end(), property) == names.end())
    throw PreconditionError("unknown property '" + std::string(property)
                            + "'");

  CheckReport r;
  r.property = std::string(property);

  auto l = build_interval(g, omega, opts.strategy, opts.cap);
  r.details["interval_size"] = l.size();

  if (property == "lower-semimodular" || property == "semimodular"
      || property == "modular") {
    lattice_property(r, l);
    return r;
  }

  if (property == "ritt") {
    auto rr = ritt_theorem_check(l.order(), opts.exhaustive);
    r.hypothesis = rr.hypothesis;
    r.passed = rr.consistent();
    r.details["semimodular"] = rr.semimodular;
    r.details["lower_semimodular"] = rr.lower_semimodular;
    r.details["chain_count"] = rr.chain_count;
    r.details["class_count"] = rr.class_count;
    json hist = json::object();
    for (auto [len, n] : rr.length_histogram)
      hist[std::to_string(len)] = n;
    r.details["length_histogram"] = hist;
    r.details["semimodular_violation"] = pair_json(l, rr.semimodular_violation);
    r.details["lower_semimodular_violation"] =
      pair_json(l, rr.lower_semimodular_violation);
    if (rr.split_pair) {
      r.details["split"] = {
        {"pair", pair_json(l, rr.split_pair)},
        {"chains", json::array({chain_json(l, rr.split_chains->first),
                                chain_json(l, rr.split_chains->second)})}};
    }
    if (!rr.hypothesis)
      r.notes.push_back("lattice is neither semimodular nor lower "
                        "semimodular; no single class is implied");
    return r;
  }

  if (property == "jh") {
    auto jh = jh_holds(l);
    auto info = group_info(g);
    bool lc = lc_equals_l(g, omega, opts.cap);
    auto k = has_transitive_hamiltonian(g, opts.cap);

    r.hypothesis = lc || k || info.two_orbit_different_lengths;
    r.passed = jh.holds;
    r.details["jh"] = jh_json(l, jh);
    r.details["lc_equals_l"] = lc;
    r.details["transitive_hamiltonian"] = k.has_value();
    r.details["two_orbit_different_lengths"] =
      info.two_orbit_different_lengths;
    if (r.hypothesis && !jh.holds)
      r.notes.push_back("theorem hypothesis holds but the property fails");
    return r;
  }

  if (property == "hamiltonian") {
    auto k = has_transitive_hamiltonian(g, opts.cap);
    r.hypothesis = k.has_value();
    if (!k) {
      r.passed = true;
      r.notes.push_back("no transitive Hamiltonian subgroup");
      r.details["subgroup"] = nullptr;
      return r;
    }

    bool embeds = embeds_in_subgroups_of(l, *k, opts.cap);
    bool modular = is_modular(l.order());
    bool jh = jh_holds(l).holds;
    r.passed = embeds && modular && jh;

    json gens = json::array();
    for (auto const &x : k->generators())
      gens.push_back(format_cycles(x));
    r.details["subgroup"] = {{"order", k->order()},
                             {"tag", structure_tag(*k)},
                             {"generators", gens}};
    r.details["embeds"] = embeds;
    r.details["modular"] = modular;
    r.details["jh_holds"] = jh;
    return r;
  }

  if (property == "two-orbit") {
    auto info = group_info(g);
    r.hypothesis = info.two_orbit.has_value();
    if (!info.two_orbit) {
      r.passed = true;
      r.notes.push_back("no cyclic subgroup with two orbits");
      r.details["element"] = nullptr;
      return r;
    }

    auto const &o = l.order();
    bool lsm = is_lower_semimodular(o);
    bool modular = lsm && is_semimodular(o);
    r.details["element"] = format_cycles(*info.two_orbit);
    r.details["orbit_lengths"] = info.two_orbit_lengths;
    r.details["lower_semimodular"] = lsm;
    r.details["modular"] = modular;
    r.passed = lsm;

    if (!modular) {
      auto w = find_dihedral_interval(l, opts.cap);
      r.details["dihedral_witness"] = w ? witness_json(*w) : json(nullptr);
      if (!w || !w->verified())
        r.passed = false;
    }

    // Maximal pairs that do not permute give D_2m with m prime.
    json maximal = json::array();
    for (NodeId a = 0; a < l.size(); ++a) {
      for (NodeId b = a + 1; b < l.size(); ++b) {
        NodeId j = o.join(a, b);
        if (!o.covers(a, j) || !o.covers(b, j))
          continue;
        if (are_permutable(l.node(a), l.node(b)))
          continue;
        auto w = dihedral_quotient_check(l, a, b, opts.cap);
        bool ok = w && w->verified() && is_prime(w->m);
        maximal.push_back({{"pair", pair_json(l, NodePair{a, b})},
                           {"m", w ? w->m : 0},
                           {"verified", ok}});
        if (!ok)
          r.passed = false;
      }
    }
    r.details["maximal_nonpermutable"] = maximal;

    auto systems = two_orbit_systems_check(g, omega, *info.two_orbit);
    r.details["systems"] = {{"count", systems.systems},
                            {"intransitive", systems.intransitive},
                            {"nonnormal_transitive",
                             systems.nonnormal_transitive},
                            {"violations", systems.violations},
                            {"messages", systems.messages}};
    if (systems.violations > 0)
      r.passed = false;

    if (info.two_orbit_different_lengths) {
      bool jh = jh_holds(l).holds;
      r.details["jh_holds"] = jh;
      if (!modular || !jh)
        r.passed = false;
    }
    return r;
  }

  // dedekind
  auto info = group_info(g);
  r.hypothesis = info.transitive_cyclic.has_value();
  if (!info.transitive_cyclic) {
    r.passed = true;
    r.notes.push_back("no transitive cyclic subgroup");
    r.details["generator"] = nullptr;
    return r;
  }

  auto c = close(GroupSpec{g.degree(), {*info.transitive_cyclic}}, opts.cap);
  auto emb = dedekind_embedding(g, omega, c, opts.cap);
  bool modular = is_modular(emb.interval.order());
  bool identity = dedekind_identity_holds(emb.interval, c);

  json map = json::array();
  for (NodeId i = 0; i < emb.interval.size(); ++i) {
    auto n = node_json(emb.interval, i);
    n["divisor"] = emb.divisor[i];
    map.push_back(n);
  }
  r.details["generator"] = format_cycles(*info.transitive_cyclic);
  r.details["n"] = emb.n;
  r.details["divisor_map"] = map;
  r.details["injective"] = emb.injective;
  r.details["preserves_meet"] = emb.preserves_meet;
  r.details["preserves_join"] = emb.preserves_join;
  r.details["modular"] = modular;
  r.details["dedekind_identity"] = identity;
  r.passed = emb.embeds() && modular && identity;
  return r;
}

} // namespace blocklat
