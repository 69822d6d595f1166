#include "blocklat/tags.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "blocklat/props.hpp"

namespace blocklat
{

namespace
{

using OrderHistogram = std::map<std::size_t, std::size_t>;

OrderHistogram order_histogram(GroupTable const &g)
{
  OrderHistogram h;
  for (auto const &x : g.elements())
    ++h[x.order()];
  return h;
}

std::string abelian_tag(GroupTable const &g, OrderHistogram const &hist)
{
  auto count_dividing = [&](std::size_t m) {
    std::size_t c = 0;
    for (auto [ord, n] : hist) {
      if (m % ord == 0)
        c += n;
    }
    return c;
  };

  std::size_t rest = g.order();
  std::vector<std::vector<std::size_t>> parts; // prime powers, descending

  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0)
      continue;
    while (rest % p == 0)
      rest /= p;

    // rank[k] = number of cyclic p-factors of order >= p^k
    std::vector<std::size_t> rank{0};
    std::size_t prev = 1, pk = 1;
    for (;;) {
      pk *= p;
      std::size_t cur = count_dividing(pk);
      if (cur == prev)
        break;
      std::size_t r = 0;
      for (std::size_t q = cur / prev; q > 1; q /= p)
        ++r;
      rank.push_back(r);
      prev = cur;
    }

    std::vector<std::size_t> factors;
    for (std::size_t k = 1; k < rank.size(); ++k) {
      std::size_t exact = rank[k] - (k + 1 < rank.size() ? rank[k + 1] : 0);
      std::size_t power = 1;
      for (std::size_t i = 0; i < k; ++i)
        power *= p;
      factors.insert(factors.end(), exact, power);
    }
    std::sort(factors.begin(), factors.end(), std::greater<>());
    parts.push_back(std::move(factors));
  }

  std::size_t width = 0;
  for (auto const &f : parts)
    width = std::max(width, f.size());

  std::vector<std::size_t> invariants(width, 1);
  for (auto const &f : parts) {
    for (std::size_t i = 0; i < f.size(); ++i)
      invariants[i] *= f[i];
  }
  std::sort(invariants.begin(), invariants.end());

  if (invariants == std::vector<std::size_t>{2, 2})
    return "V4";

  std::string tag;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    tag += (i ? "xC" : "C") + std::to_string(invariants[i]);
  return tag;
}

} // anonymous namespace

std::string structure_tag(GroupTable const &g)
{
  if (g.order() == 1)
    return "1";
  if (cyclic_generator(g))
    return "C" + std::to_string(g.order());

  auto hist = order_histogram(g);
  if (is_abelian(g))
    return abelian_tag(g, hist);

  if (auto m = is_dihedral(g))
    return *m == 3 ? "S3" : "D" + std::to_string(2 * *m);

  static std::map<OrderHistogram, std::string> const known{
    {{{1, 1}, {2, 1}, {4, 6}}, "Q8"},
    {{{1, 1}, {2, 3}, {3, 8}}, "A4"},
    {{{1, 1}, {2, 5}, {4, 10}, {5, 4}}, "F20"},
    {{{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4"},
    {{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, "SL(2,3)"},
    {{{1, 1}, {2, 15}, {3, 20}, {5, 24}}, "A5"},
  };

  if (auto it = known.find(hist); it != known.end())
    return it->second;

  return "G" + std::to_string(g.order());
}

} // namespace blocklat
