#ifndef BLOCKLAT_PERM_HPP
#define BLOCKLAT_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blocklat
{

// Points are 0-based inside the library. Text formats (cycle notation, group
// files, CLI options) use the 1-based labels of the usual cycle notation.
using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}.
//
// Composition acts left to right: (p * q)(x) = q(p(x)), i.e. x^(pq) =
// (x^p)^q. Every module relies on this convention.
class Permutation
{
public:
  Permutation() = default;

  // Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::vector<Point> const &images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  // Sorted cycle lengths, fixed points included as 1-cycles.
  std::vector<std::size_t> cycle_type() const;

  // Cycles of length >= 2, each starting at its smallest point, ordered by
  // that point.
  std::vector<std::vector<Point>> cycles() const;

  // Lexicographic on the image sequence.
  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images)
  : _images(std::move(images)) {}

  friend Permutation compose(Permutation const &p, Permutation const &q);

  std::vector<Point> _images;
};

// x -> q(p(x)). Throws PreconditionError on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);

inline Permutation operator*(Permutation const &p, Permutation const &q)
{ return compose(p, q); }

// g^-1 * p * g
Permutation conjugate(Permutation const &p, Permutation const &g);

Permutation power(Permutation const &p, long long k);

// Parses disjoint cycles such as "(1 2 3)(4 5)"; "" and "()" give the
// identity. Points may be separated by spaces or commas. Throws ParseError
// (with the offending offset) for out-of-range, repeated points and
// unbalanced parentheses.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Inverse of parse_cycles up to whitespace: "(1 2 3)(4 5)", identity as "()".
std::string format_cycles(Permutation const &p);

} // namespace blocklat

template<>
struct std::hash<blocklat::Permutation>
{
  std::size_t operator()(blocklat::Permutation const &p) const noexcept;
};

#endif // BLOCKLAT_PERM_HPP
