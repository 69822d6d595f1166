#ifndef BLOCKLAT_RATFUNC_HPP
#define BLOCKLAT_RATFUNC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blocklat
{

using Rational = mpq_class;

// Coefficients lowest degree first, no trailing zeros.
class Poly
{
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(Rational c);
  static Poly monomial(Rational c, std::size_t k);
  static Poly z() { return monomial(1, 1); }

  bool is_zero() const { return _c.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(_c.size()) - 1; }

  std::vector<Rational> const &coeffs() const { return _c; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Poly derivative() const;
  Poly monic() const;
  Poly pow(std::size_t k) const;

  friend Poly operator+(Poly const &a, Poly const &b);
  friend Poly operator-(Poly const &a, Poly const &b);
  friend Poly operator*(Poly const &a, Poly const &b);
  friend Poly operator*(Rational const &c, Poly const &a);
  friend Poly operator-(Poly const &a);
  friend bool operator==(Poly const &a, Poly const &b) = default;

private:
  void trim();

  std::vector<Rational> _c;
};

struct PolyDivision
{
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(Poly const &a, Poly const &b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly const &a, Poly const &b);

// p(q(z))
Poly compose(Poly const &p, Poly const &q);

// T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}
Poly chebyshev(std::size_t n);

// num/den in lowest terms with den monic.
class RatFunc
{
public:
  RatFunc() : RatFunc(Poly()) {}
  RatFunc(Poly num); // NOLINT: polynomials are rational functions
  RatFunc(Poly num, Poly den);

  static RatFunc constant(Rational c) { return RatFunc(Poly::constant(c)); }
  static RatFunc z() { return RatFunc(Poly::z()); }

  Poly const &num() const { return _num; }
  Poly const &den() const { return _den; }

  // max(deg num, deg den); 0 for constants, including 0
  std::size_t degree() const;
  bool is_constant() const { return degree() == 0; }
  bool is_polynomial() const { return _den.degree() == 0; }

  RatFunc pow(long k) const;

  // Inverse under composition of a degree-one function.
  RatFunc mobius_inverse() const;

  friend RatFunc operator+(RatFunc const &a, RatFunc const &b);
  friend RatFunc operator-(RatFunc const &a, RatFunc const &b);
  friend RatFunc operator*(RatFunc const &a, RatFunc const &b);
  friend RatFunc operator/(RatFunc const &a, RatFunc const &b);
  friend RatFunc operator-(RatFunc const &a);
  friend bool operator==(RatFunc const &a, RatFunc const &b) = default;

private:
  Poly _num, _den;
};

// f(g(z))
RatFunc compose(RatFunc const &f, RatFunc const &g);

// factors[0] o factors[1] o ... (the last factor is applied first)
RatFunc compose_all(std::vector<RatFunc> const &factors);

enum class KleinKind
{
  cyclic,   // z^n
  dihedral, // (z^n + z^-n)/2
  a4,
  s4
};

RatFunc klein(KleinKind kind, std::size_t n = 0);

// Distinct poles on the Riemann sphere.
std::size_t pole_count(RatFunc const &f);

struct CoefficientMismatch
{
  bool in_denominator = false;
  std::size_t power = 0;
  Rational expected;
  Rational actual;
};

struct CompositionReport
{
  bool equal = false;
  RatFunc composed;
  // Factors of degree < 2, which a decomposition does not allow.
  std::vector<std::size_t> degenerate;
  std::optional<CoefficientMismatch> mismatch;
};

CompositionReport verify_composition(std::vector<RatFunc> const &factors,
                                     RatFunc const &target);

std::string describe(CoefficientMismatch const &m);

struct ThreePoleReport
{
  RatFunc target;
  std::vector<RatFunc> long_chain;
  std::vector<RatFunc> short_chain;
  CompositionReport long_result;
  CompositionReport short_result;
  bool results_agree = false;
  bool nontrivial_factors = false;
  std::size_t poles = 0;
  std::size_t long_degree = 0;  // product of factor degrees
  std::size_t short_degree = 0;

  bool verified() const
  {
    return long_result.equal && short_result.equal && results_agree
           && nontrivial_factors && poles == 3 && long_chain.size() == 3
           && short_chain.size() == 2 && long_degree == target.degree()
           && short_degree == target.degree();
  }
};

ThreePoleReport verify_three_pole_counterexample();

// U_1 = V_1 o mu_1, U_i = mu_{i-1}^-1 o V_i o mu_i, U_k = mu_{k-1}^-1 o V_k
// with U = dec1, V = dec2. Throws PreconditionError on length mismatch or
// a mu of degree other than one.
bool equivalence_certificate(std::vector<RatFunc> const &dec1,
                             std::vector<RatFunc> const &dec2,
                             std::vector<RatFunc> const &mus);

// Grammar, lowest precedence first:
//   compose := sum ('o' compose)?
//   sum     := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] INT)?
//   primary := INT | 'z' | 'x' | '(' compose ')'
// Positions in ParseError are 0-based offsets into text.
RatFunc parse_expr(std::string_view text);

// The top-level 'o' factors of an expression, outermost first.
std::vector<RatFunc> parse_chain(std::string_view text);

std::string to_string(Poly const &p);
std::string to_string(RatFunc const &f);

struct ScenarioLine
{
  std::size_t line = 0;
  std::string text;
  bool passed = false;
  std::string detail;
};

// Lines "VERIFY <chain> == <expr>"; blank lines and '#' comments skipped.
// Syntax errors throw ParseError carrying the line number.
std::vector<ScenarioLine> run_scenario(std::string const &text);

} // namespace blocklat

#endif // BLOCKLAT_RATFUNC_HPP
