#include "blocklat/jh.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "blocklat/blocks.hpp"
#include "blocklat/error.hpp"

namespace blocklat
{

InducedAction coset_action(GroupTable const &a, GroupTable const &b)
{
  if (!is_subgroup(b, a))
    throw PreconditionError("B is not a subgroup of A");

  auto const &elems = a.elements();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(elems.size(), unset);

  // Elements are sorted, so the first unlabelled one is the smallest
  // element of its coset.
  std::size_t count = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (label[i] != unset)
      continue;
    for (auto const &h : b.elements())
      label[*a.index_of(h * elems[i])] = count;
    ++count;
  }

  std::vector<Point> rep(count);
  {
    std::vector<bool> seen(count, false);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!seen[label[i]]) {
        seen[label[i]] = true;
        rep[label[i]] = static_cast<Point>(i);
      }
    }
  }

  GroupSpec spec{count, {}};
  for (auto const &g : a.generators()) {
    std::vector<Point> img(count);
    for (std::size_t c = 0; c < count; ++c)
      img[c] = static_cast<Point>(label[*a.index_of(elems[rep[c]] * g)]);
    spec.generators.emplace_back(std::move(img));
  }
  if (spec.generators.empty())
    spec.generators.emplace_back(count);

  return InducedAction{a, b, count, close(spec, a.order())};
}

namespace
{

std::multiset<std::vector<std::size_t>> cycle_statistics(GroupTable const &g)
{
  std::multiset<std::vector<std::size_t>> r;
  for (auto const &x : g.elements())
    r.insert(x.cycle_type());
  return r;
}

} // anonymous namespace

bool same_cycle_statistics(GroupTable const &p, GroupTable const &q)
{
  return p.degree() == q.degree() && p.order() == q.order()
         && cycle_statistics(p) == cycle_statistics(q);
}

std::optional<PermEquivalence> perm_equivalent(GroupTable const &p,
                                               GroupTable const &q)
{
  if (!same_cycle_statistics(p, q))
    return std::nullopt;

  std::size_t n = p.degree();
  if (n == 0)
    return PermEquivalence{};

  auto const &gens = p.generators();

  std::vector<std::vector<Permutation>> candidates;
  for (auto const &g : gens) {
    auto type = g.cycle_type();
    std::vector<Permutation> c;
    for (auto const &x : q.elements()) {
      if (x.cycle_type() == type)
        c.push_back(x);
    }
    candidates.push_back(std::move(c));
  }

  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Permutation> chosen;

  // With lambda(0) = 0 (Q is transitive, so this loses nothing) the map is
  // forced along generator edges. Returns the map if consistent.
  auto propagate = [&]() -> std::optional<std::vector<Point>> {
    std::vector<Point> lambda(n, unset);
    std::vector<bool> used(n, false);
    lambda[0] = 0;
    used[0] = true;
    std::deque<Point> queue{0};

    while (!queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        Point y = gens[i][x];
        Point target = chosen[i][lambda[x]];
        if (lambda[y] == unset) {
          if (used[target])
            return std::nullopt;
          lambda[y] = target;
          used[target] = true;
          queue.push_back(y);
        } else if (lambda[y] != target) {
          return std::nullopt;
        }
      }
    }
    return lambda;
  };

  std::optional<PermEquivalence> found;

  auto search = [&](auto &&self, std::size_t i) -> void {
    if (found)
      return;
    auto lambda = propagate();
    if (!lambda)
      return;

    if (i == gens.size()) {
      // P transitive, so lambda is total here and conjugates P into Q;
      // equal orders make it onto.
      if (std::find(lambda->begin(), lambda->end(), unset) != lambda->end())
        return;
      found = PermEquivalence{std::move(*lambda), chosen};
      return;
    }

    for (auto const &c : candidates[i]) {
      chosen.push_back(c);
      self(self, i + 1);
      chosen.pop_back();
      if (found)
        return;
    }
  };

  search(search, 0);
  return found;
}

std::vector<InducedAction> jh_profile(IntervalLattice const &l,
                                      MaximalChain const &chain)
{
  std::vector<InducedAction> r;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!l.order().covers(chain[i - 1], chain[i]))
      throw PreconditionError("not a maximal chain");
    r.push_back(coset_action(l.node(chain[i]), l.node(chain[i - 1])));
  }
  return r;
}

JhReport jh_holds(IntervalLattice const &l)
{
  JhReport r;
  r.chains = enumerate_maximal_chains(l.order(), l.bottom(), l.top());

  std::map<std::pair<NodeId, NodeId>, std::size_t> step_class;

  auto classify = [&](NodeId lo, NodeId hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = step_class.find(key); it != step_class.end())
      return it->second;

    auto action = coset_action(l.node(hi), l.node(lo));
    std::size_t id = r.classes.size();
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      if (perm_equivalent(r.classes[c].image, action.image)) {
        id = c;
        break;
      }
    }
    if (id == r.classes.size())
      r.classes.push_back(std::move(action));
    step_class.emplace(key, id);
    return id;
  };

  for (auto const &c : r.chains) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 1; i < c.size(); ++i)
      ids.push_back(classify(c[i - 1], c[i]));
    r.factor_classes.push_back(std::move(ids));
  }

  r.lengths_equal = true;
  r.holds = true;
  for (std::size_t i = 1; i < r.chains.size(); ++i) {
    auto x = r.factor_classes[0], y = r.factor_classes[i];
    if (x.size() != y.size())
      r.lengths_equal = false;

    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y && r.holds) {
      r.holds = false;
      r.counterexample = std::make_pair(r.chains[0], r.chains[i]);
    }
  }

  if (!r.lengths_equal && r.counterexample) {
    // Prefer a pair of chains of different length.
    for (std::size_t i = 1; i < r.chains.size(); ++i) {
      if (r.chains[i].size() != r.chains[0].size()) {
        r.counterexample = std::make_pair(r.chains[0], r.chains[i]);
        break;
      }
    }
  }

  return r;
}

bool is_hamiltonian(GroupTable const &k)
{
  for (auto const &x : k.elements()) {
    auto cyclic = close(GroupSpec{k.degree(), {x}}, k.order());
    for (auto const &g : k.generators()) {
      if (!cyclic.contains(conjugate(x, g)))
        return false;
    }
  }
  return true;
}

namespace
{

bool is_semiregular(GroupTable const &h)
{
  for (auto const &x : h.elements()) {
    if (x.is_identity())
      continue;
    for (Point p = 0; p < h.degree(); ++p) {
      if (x[p] == p)
        return false;
    }
  }
  return true;
}

} // anonymous namespace

std::optional<GroupTable> has_transitive_hamiltonian(GroupTable const &g,
                                                     std::size_t cap)
{
  std::size_t n = g.degree();
  if (!is_transitive(g))
    return std::nullopt;

  // A transitive Hamiltonian K has normal point stabilizers, hence trivial
  // ones: K is regular and all of its subgroups are semiregular.
  std::vector<Permutation> free;
  for (auto const &x : g.elements()) {
    bool ok = !x.is_identity();
    for (Point p = 0; ok && p < n; ++p)
      ok = x[p] != p;
    if (ok)
      free.push_back(x);
  }

  std::set<std::vector<Permutation>> seen;
  std::deque<GroupTable> queue;
  queue.push_back(close(GroupSpec{n, {g.identity()}}));
  seen.insert(queue.front().elements());

  while (!queue.empty()) {
    GroupTable h = std::move(queue.front());
    queue.pop_front();

    if (h.order() == n && is_transitive(h))
      return h;

    for (auto const &x : free) {
      if (h.contains(x))
        continue;
      GroupTable k = extend(h, x, cap);
      if (k.order() > n || n % k.order() != 0)
        continue;
      if (!seen.insert(k.elements()).second)
        continue;
      if (is_semiregular(k) && is_hamiltonian(k))
        queue.push_back(std::move(k));
    }
  }
  return std::nullopt;
}

bool lc_equals_l(GroupTable const &g, Point omega, std::size_t cap)
{
  auto l = build_interval(g, omega, IntervalStrategy::automatic, cap);
  for (auto const &x : l.nodes()) {
    if (!is_core_complementary(g, omega, x))
      return false;
  }
  return true;
}

bool embeds_in_subgroups_of(IntervalLattice const &l, GroupTable const &k,
                            std::size_t cap)
{
  std::vector<GroupTable> image;
  for (auto const &x : l.nodes())
    image.push_back(intersection(x, k));

  for (NodeId a = 0; a < l.size(); ++a) {
    for (NodeId b = 0; b < l.size(); ++b) {
      if (a != b && image[a] == image[b])
        return false;
      if (!(image[meet(l, a, b)] == intersection(image[a], image[b])))
        return false;
      if (!(image[join(l, a, b)] == blocklat::join(image[a], image[b], cap)))
        return false;
    }
  }
  return true;
}

} // namespace blocklat
