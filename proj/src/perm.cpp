#include "blocklat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

#include "blocklat/error.hpp"

namespace blocklat
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> hit(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || hit[x])
      throw PreconditionError("image sequence is not a bijection");
    hit[x] = true;
  }
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation inv(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    inv._images[_images[i]] = static_cast<Point>(i);
  return inv;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  for (std::size_t len : cycle_type())
    result = std::lcm(result, len);
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);

  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;

    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }

  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);

  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;

    std::vector<Point> cycle;
    for (Point j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw PreconditionError("cannot compose permutations of degree "
                            + std::to_string(p.degree()) + " and "
                            + std::to_string(q.degree()));

  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    images[x] = q[p[x]];

  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation conjugate(Permutation const &p, Permutation const &g)
{
  return g.inverse() * p * g;
}

Permutation power(Permutation const &p, long long k)
{
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);

  Permutation result(p.degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size()
           && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  for (;;) {
    skip_space();
    if (i == text.size())
      break;

    if (text[i] != '(')
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'",
                       i, {"'('"});
    ++i;

    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i == text.size())
        throw ParseError("unbalanced parenthesis", i, {"point", "')'"});

      char c = text[i];
      if (c == ')') {
        ++i;
        break;
      }
      if (c == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         i, {"point", "')'"});

      std::size_t start = i;
      unsigned long long value = 0;
      while (i < text.size()
             && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > degree + 1)
          value = degree + 1; // saturate; reported as out of range below
        ++i;
      }

      if (value < 1 || value > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree),
                         start);

      Point p = static_cast<Point>(value - 1);
      if (used[p])
        throw ParseError("repeated point " + std::to_string(value), start);

      used[p] = true;
      cycle.push_back(p);
    }

    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }

  return Permutation(std::move(images));
}

std::string format_cycles(Permutation const &p)
{
  auto cs = p.cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k)
      ss << (k ? " " : "") << cycle[k] + 1;
    ss << ')';
  }
  return ss.str();
}

} // namespace blocklat

std::size_t std::hash<blocklat::Permutation>::operator()(
  blocklat::Permutation const &p) const noexcept
{
  std::size_t seed = p.degree();
  for (auto x : p.images())
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
