#include "blocklat/group.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "blocklat/error.hpp"

namespace blocklat
{

namespace
{

std::vector<Permutation> closure_elements(std::size_t degree,
                                          std::vector<Permutation> const &gens,
                                          std::size_t cap)
{
  Permutation id(degree);
  std::unordered_set<Permutation> seen{id};
  std::vector<Permutation> result{id};

  for (std::size_t next = 0; next < result.size(); ++next) {
    for (auto const &g : gens) {
      Permutation y = result[next] * g;
      if (seen.insert(y).second) {
        if (result.size() == cap)
          throw CapExceeded(cap);
        result.push_back(std::move(y));
      }
    }
  }

  std::sort(result.begin(), result.end());
  return result;
}

} // anonymous namespace

GroupTable GroupTable::from_elements(std::size_t degree,
                                     std::vector<Permutation> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());

  GroupTable result;
  result._spec.degree = degree;
  result._elements = std::move(elements);

  // Greedy generating set: add an element whenever it is not yet generated.
  std::vector<Permutation> gens;
  std::vector<Permutation> generated{Permutation(degree)};
  for (auto const &x : result._elements) {
    if (std::binary_search(generated.begin(), generated.end(), x))
      continue;
    gens.push_back(x);
    generated = closure_elements(degree, gens, result._elements.size() + 1);
    if (generated.size() == result._elements.size())
      break;
  }

  if (gens.empty())
    gens.emplace_back(degree);

  result._spec.generators = std::move(gens);
  return result;
}

bool GroupTable::contains(Permutation const &p) const
{
  return std::binary_search(_elements.begin(), _elements.end(), p);
}

std::optional<std::size_t> GroupTable::index_of(Permutation const &p) const
{
  auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
  if (it == _elements.end() || *it != p)
    return std::nullopt;
  return static_cast<std::size_t>(it - _elements.begin());
}

GroupTable close(GroupSpec const &spec, std::size_t cap)
{
  if (spec.degree == 0)
    throw PreconditionError("group degree must be positive");
  if (spec.generators.empty())
    throw PreconditionError("no generators");

  for (auto const &g : spec.generators) {
    if (g.degree() != spec.degree)
      throw PreconditionError("generator of degree "
                              + std::to_string(g.degree())
                              + " in a group of degree "
                              + std::to_string(spec.degree));
  }

  GroupTable result;
  result._spec = spec;
  result._elements = closure_elements(spec.degree, spec.generators, cap);
  return result;
}

std::vector<std::vector<Point>> orbits(std::span<Permutation const> elements,
                                       std::size_t degree)
{
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});

  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (auto const &g : elements) {
    for (Point x = 0; x < degree; ++x) {
      Point a = find(x), b = find(g[x]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::vector<Point>> result;
  std::vector<std::size_t> slot(degree, degree);
  for (Point x = 0; x < degree; ++x) {
    Point r = find(x);
    if (slot[r] == degree) {
      slot[r] = result.size();
      result.emplace_back();
    }
    result[slot[r]].push_back(x);
  }
  return result;
}

std::vector<Point> orbit(GroupTable const &g, Point x)
{
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> result{x};
  seen[x] = true;

  for (std::size_t next = 0; next < result.size(); ++next) {
    for (auto const &gen : g.generators()) {
      Point y = gen[result[next]];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }

  std::sort(result.begin(), result.end());
  return result;
}

bool is_transitive(GroupTable const &g)
{
  return orbit(g, 0).size() == g.degree();
}

GroupTable point_stabilizer(GroupTable const &g, Point omega)
{
  if (omega >= g.degree())
    throw PreconditionError("point " + std::to_string(omega + 1)
                            + " out of range");

  std::vector<Permutation> fixing;
  std::copy_if(g.elements().begin(), g.elements().end(),
               std::back_inserter(fixing),
               [omega](Permutation const &p) { return p[omega] == omega; });

  return GroupTable::from_elements(g.degree(), std::move(fixing));
}

bool is_subgroup(GroupTable const &sub, GroupTable const &group)
{
  return std::includes(group.elements().begin(), group.elements().end(),
                       sub.elements().begin(), sub.elements().end());
}

bool is_normal(GroupTable const &sub, GroupTable const &group)
{
  if (!is_subgroup(sub, group))
    return false;

  for (auto const &g : group.generators()) {
    for (auto const &n : sub.generators()) {
      if (!sub.contains(conjugate(n, g)))
        return false;
    }
  }
  return true;
}

GroupTable intersection(GroupTable const &a, GroupTable const &b)
{
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));

  return GroupTable::from_elements(a.degree(), std::move(common));
}

namespace
{

// Repeated joins would otherwise accumulate ever longer generator lists.
constexpr std::size_t max_join_generators = 6;

GroupTable close_compact(GroupSpec spec, std::size_t cap)
{
  std::sort(spec.generators.begin(), spec.generators.end());
  spec.generators.erase(std::unique(spec.generators.begin(),
                                    spec.generators.end()),
                        spec.generators.end());

  GroupTable result = close(spec, cap);
  if (spec.generators.size() > max_join_generators)
    result = GroupTable::from_elements(spec.degree, result.elements());
  return result;
}

} // anonymous namespace

GroupTable join(GroupTable const &a, GroupTable const &b, std::size_t cap)
{
  GroupSpec spec{a.degree(), a.generators()};
  spec.generators.insert(spec.generators.end(),
                         b.generators().begin(), b.generators().end());
  return close_compact(std::move(spec), cap);
}

GroupTable extend(GroupTable const &group, Permutation const &extra,
                  std::size_t cap)
{
  GroupSpec spec{group.degree(), group.generators()};
  spec.generators.push_back(extra);
  return close_compact(std::move(spec), cap);
}

std::vector<Permutation> product_set(GroupTable const &a, GroupTable const &b)
{
  std::unordered_set<Permutation> seen;
  for (auto const &x : a.elements()) {
    for (auto const &y : b.elements())
      seen.insert(x * y);
  }

  std::vector<Permutation> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

GroupTable conjugate(GroupTable const &a, Permutation const &g)
{
  std::vector<Permutation> conj;
  conj.reserve(a.order());
  for (auto const &x : a.elements())
    conj.push_back(conjugate(x, g));

  return GroupTable::from_elements(a.degree(), std::move(conj));
}

std::optional<Permutation> cyclic_generator(GroupTable const &g)
{
  for (auto const &x : g.elements()) {
    if (x.order() == g.order())
      return x;
  }
  return std::nullopt;
}

bool is_abelian(GroupTable const &g)
{
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

GroupTable regularize(GroupTable const &g, std::size_t cap)
{
  auto const &elems = g.elements();
  std::size_t n = elems.size();

  GroupSpec spec{n, {}};
  for (auto const &gen : g.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i)
      images[i] = static_cast<Point>(*g.index_of(elems[i] * gen));
    spec.generators.emplace_back(std::move(images));
  }

  return close(spec, cap);
}

std::vector<Permutation> two_orbit_elements(GroupTable const &g)
{
  std::vector<Permutation> result;
  for (auto const &x : g.elements()) {
    if (x.cycle_type().size() == 2)
      result.push_back(x);
  }
  return result;
}

std::vector<Permutation> transitive_cyclic_elements(GroupTable const &g)
{
  std::vector<Permutation> result;
  for (auto const &x : g.elements()) {
    if (x.cycle_type().size() == 1)
      result.push_back(x);
  }
  return result;
}

GroupSpec parse_group_file(std::string const &text)
{
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  GroupSpec spec;
  bool have_degree = false;

  while (std::getline(in, line)) {
    ++lineno;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;

    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);

    if (!have_degree) {
      std::size_t used = 0;
      long long degree = 0;
      try {
        degree = std::stoll(body, &used);
      } catch (std::exception const &) {
        used = 0;
      }
      if (used != body.size() || degree < 1)
        throw ParseError("expected a positive degree", first, {"integer"},
                         lineno);

      spec.degree = static_cast<std::size_t>(degree);
      have_degree = true;
      continue;
    }

    try {
      spec.generators.push_back(parse_cycles(body, spec.degree));
    } catch (ParseError const &e) {
      throw ParseError(e.message(), first + e.position(), e.expected(), lineno);
    }
  }

  if (spec.generators.empty())
    throw ParseError("no generators", 0, {"cycle notation"}, lineno);

  return spec;
}

GroupSpec read_group_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open group file '" + path + "'");

  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string format_group_file(GroupSpec const &spec)
{
  std::ostringstream ss;
  ss << spec.degree << '\n';
  for (auto const &g : spec.generators)
    ss << format_cycles(g) << '\n';
  return ss.str();
}

} // namespace blocklat
