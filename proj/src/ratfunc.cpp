#include "blocklat/ratfunc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "blocklat/error.hpp"

namespace blocklat
{

Poly::Poly(std::vector<Rational> coeffs) : _c(std::move(coeffs))
{
  for (auto &c : _c)
    c.canonicalize();
  trim();
}

void Poly::trim()
{
  while (!_c.empty() && _c.back() == 0)
    _c.pop_back();
}

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t k)
{
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t k) const
{
  return k < _c.size() ? _c[k] : Rational(0);
}

Rational Poly::leading() const
{
  return _c.empty() ? Rational(0) : _c.back();
}

Poly Poly::derivative() const
{
  std::vector<Rational> v;
  for (std::size_t k = 1; k < _c.size(); ++k)
    v.push_back(_c[k] * Rational(static_cast<long>(k)));
  return Poly(std::move(v));
}

Poly Poly::monic() const
{
  if (is_zero())
    return *this;
  return Rational(1) / leading() * *this;
}

Poly Poly::pow(std::size_t k) const
{
  Poly result = constant(1), base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k > 0)
      base = base * base;
  }
  return result;
}

Poly operator+(Poly const &a, Poly const &b)
{
  std::vector<Rational> v(std::max(a._c.size(), b._c.size()), Rational(0));
  for (std::size_t i = 0; i < a._c.size(); ++i)
    v[i] += a._c[i];
  for (std::size_t i = 0; i < b._c.size(); ++i)
    v[i] += b._c[i];
  return Poly(std::move(v));
}

Poly operator-(Poly const &a) { return Rational(-1) * a; }

Poly operator-(Poly const &a, Poly const &b) { return a + (-b); }

Poly operator*(Poly const &a, Poly const &b)
{
  if (a.is_zero() || b.is_zero())
    return Poly();
  std::vector<Rational> v(a._c.size() + b._c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a._c.size(); ++i) {
    if (a._c[i] == 0)
      continue;
    for (std::size_t j = 0; j < b._c.size(); ++j)
      v[i + j] += a._c[i] * b._c[j];
  }
  return Poly(std::move(v));
}

Poly operator*(Rational const &c, Poly const &a)
{
  std::vector<Rational> v = a._c;
  for (auto &x : v)
    x *= c;
  return Poly(std::move(v));
}

PolyDivision divmod(Poly const &a, Poly const &b)
{
  if (b.is_zero())
    throw Error("polynomial division by zero");

  std::vector<Rational> rem = a.coeffs();
  long db = b.degree();
  std::vector<Rational> quot(
    std::max<long>(a.degree() - db + 1, 0), Rational(0));
  Rational lead = b.leading();

  for (long k = a.degree(); k >= db; --k) {
    Rational c = rem[k] / lead;
    if (c == 0)
      continue;
    quot[k - db] = c;
    for (long j = 0; j <= db; ++j)
      rem[k - db + j] -= c * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly const &a, Poly const &b)
{
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly compose(Poly const &p, Poly const &q)
{
  Poly result;
  for (long k = p.degree(); k >= 0; --k)
    result = result * q + Poly::constant(p.coeff(k));
  return result;
}

Poly chebyshev(std::size_t n)
{
  Poly prev = Poly::constant(1), cur = Poly::z();
  if (n == 0)
    return prev;
  Poly two_z = Poly::monomial(2, 1);
  for (std::size_t k = 1; k < n; ++k) {
    Poly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatFunc::RatFunc(Poly num) : _num(std::move(num)), _den(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den)
{
  if (den.is_zero())
    throw Error("division by the zero function");

  if (num.is_zero()) {
    _num = Poly();
    _den = Poly::constant(1);
    return;
  }

  Poly g = gcd(num, den);
  num = divmod(num, g).quotient;
  den = divmod(den, g).quotient;

  Rational scale = Rational(1) / den.leading();
  _num = scale * num;
  _den = scale * den;
}

std::size_t RatFunc::degree() const
{
  return static_cast<std::size_t>(
    std::max<long>({_num.degree(), _den.degree(), 0}));
}

RatFunc RatFunc::pow(long k) const
{
  if (k == 0) {
    if (_num.is_zero())
      throw Error("0^0 is undefined");
    return constant(1);
  }
  if (k < 0) {
    if (_num.is_zero())
      throw Error("division by the zero function");
    auto m = static_cast<std::size_t>(-k);
    return RatFunc(_den.pow(m), _num.pow(m));
  }
  auto m = static_cast<std::size_t>(k);
  return RatFunc(_num.pow(m), _den.pow(m));
}

RatFunc RatFunc::mobius_inverse() const
{
  if (degree() != 1)
    throw PreconditionError("not a degree-one function");

  // (az + b)/(cz + d) -> (dz - b)/(-cz + a)
  Rational a = _num.coeff(1), b = _num.coeff(0);
  Rational c = _den.coeff(1), d = _den.coeff(0);
  return RatFunc(Poly({-b, d}), Poly({a, -c}));
}

RatFunc operator+(RatFunc const &a, RatFunc const &b)
{
  return RatFunc(a._num * b._den + b._num * a._den, a._den * b._den);
}

RatFunc operator-(RatFunc const &a) { return RatFunc(-a._num, a._den); }

RatFunc operator-(RatFunc const &a, RatFunc const &b) { return a + (-b); }

RatFunc operator*(RatFunc const &a, RatFunc const &b)
{
  return RatFunc(a._num * b._num, a._den * b._den);
}

RatFunc operator/(RatFunc const &a, RatFunc const &b)
{
  if (b._num.is_zero())
    throw Error("division by the zero function");
  return RatFunc(a._num * b._den, a._den * b._num);
}

RatFunc compose(RatFunc const &f, RatFunc const &g)
{
  // Homogenize: f(A/B) = sum p_i A^i B^(d-i) / sum q_i A^i B^(d-i).
  auto d = static_cast<std::size_t>(f.degree());
  Poly const &a = g.num();
  Poly const &b = g.den();

  std::vector<Poly> apow{Poly::constant(1)}, bpow{Poly::constant(1)};
  for (std::size_t i = 1; i <= d; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }

  Poly num, den;
  for (std::size_t i = 0; i <= d; ++i) {
    Poly term = apow[i] * bpow[d - i];
    num = num + f.num().coeff(i) * term;
    den = den + f.den().coeff(i) * term;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc compose_all(std::vector<RatFunc> const &factors)
{
  if (factors.empty())
    throw PreconditionError("empty composition");
  RatFunc result = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it)
    result = compose(*it, result);
  return result;
}

RatFunc klein(KleinKind kind, std::size_t n)
{
  auto z = RatFunc::z();
  auto q = [](long p, long r) { return RatFunc::constant(Rational(p, r)); };
  auto c = [](long v) { return RatFunc::constant(v); };

  switch (kind) {
  case KleinKind::cyclic:
    if (n == 0)
      throw PreconditionError("n >= 1 required");
    return z.pow(static_cast<long>(n));
  case KleinKind::dihedral:
    if (n == 0)
      throw PreconditionError("n >= 1 required");
    return q(1, 2)
           * (z.pow(static_cast<long>(n)) + z.pow(-static_cast<long>(n)));
  case KleinKind::a4:
    return q(-1, 64) * z.pow(3) * (z.pow(3) - c(8)).pow(3)
           / (z.pow(3) + c(1)).pow(3);
  case KleinKind::s4:
    return c(256) * z.pow(3) * (z.pow(6) - c(7) * z.pow(3) - c(8)).pow(3)
           / (z.pow(6) + c(20) * z.pow(3) - c(8)).pow(4);
  }
  throw PreconditionError("unknown Klein function");
}

std::size_t pole_count(RatFunc const &f)
{
  Poly const &den = f.den();
  Poly square_free = divmod(den, gcd(den, den.derivative())).quotient;
  std::size_t finite = static_cast<std::size_t>(square_free.degree());
  return finite + (f.num().degree() > den.degree() ? 1 : 0);
}

namespace
{

std::optional<CoefficientMismatch> first_mismatch(RatFunc const &expected,
                                                  RatFunc const &actual)
{
  auto scan = [](Poly const &e, Poly const &a,
                 bool den) -> std::optional<CoefficientMismatch> {
    auto top = static_cast<std::size_t>(std::max(e.degree(), a.degree()) + 1);
    for (std::size_t k = 0; k < top; ++k) {
      if (e.coeff(k) != a.coeff(k))
        return CoefficientMismatch{den, k, e.coeff(k), a.coeff(k)};
    }
    return std::nullopt;
  };

  if (auto m = scan(expected.num(), actual.num(), false))
    return m;
  return scan(expected.den(), actual.den(), true);
}

} // anonymous namespace

CompositionReport verify_composition(std::vector<RatFunc> const &factors,
                                     RatFunc const &target)
{
  CompositionReport r;
  r.composed = compose_all(factors);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 2)
      r.degenerate.push_back(i);
  }
  r.mismatch = first_mismatch(target, r.composed);
  r.equal = !r.mismatch;
  return r;
}

std::string describe(CoefficientMismatch const &m)
{
  std::ostringstream ss;
  ss << (m.in_denominator ? "denominator" : "numerator") << " coefficient of z^"
     << m.power << ": expected " << m.expected.get_str() << ", got "
     << m.actual.get_str();
  return ss.str();
}

ThreePoleReport verify_three_pole_counterexample()
{
  auto z = RatFunc::z();
  auto q = [](long p, long r) { return RatFunc::constant(Rational(p, r)); };
  auto c = [](long v) { return RatFunc::constant(v); };

  ThreePoleReport r;
  r.target = q(-1, 27) * (z.pow(4) + c(2) * z.pow(2) - c(3)).pow(3)
             / (z.pow(2) + c(1)).pow(4);

  r.long_chain = {
    q(1, 54) * (c(7) - z).pow(3) / (z + c(1)).pow(2),
    c(2) * z.pow(2) + c(4) * z + c(1),
    z.pow(2),
  };
  r.short_chain = {
    q(-256, 27) * z.pow(3) * (z - c(1)),
    q(1, 4) * (z - c(1)).pow(3) / (z.pow(2) + c(1)) + c(1),
  };

  r.long_result = verify_composition(r.long_chain, r.target);
  r.short_result = verify_composition(r.short_chain, r.target);
  r.results_agree = r.long_result.composed == r.short_result.composed;
  r.nontrivial_factors =
    r.long_result.degenerate.empty() && r.short_result.degenerate.empty();
  r.poles = pole_count(r.target);

  r.long_degree = r.short_degree = 1;
  for (auto const &f : r.long_chain)
    r.long_degree *= f.degree();
  for (auto const &f : r.short_chain)
    r.short_degree *= f.degree();
  return r;
}

bool equivalence_certificate(std::vector<RatFunc> const &dec1,
                             std::vector<RatFunc> const &dec2,
                             std::vector<RatFunc> const &mus)
{
  std::size_t k = dec1.size();
  if (k == 0 || dec2.size() != k || mus.size() + 1 != k)
    throw PreconditionError("decompositions of length k need k - 1 links");
  for (auto const &mu : mus) {
    if (mu.degree() != 1)
      throw PreconditionError("linking function of degree other than one");
  }

  for (std::size_t i = 0; i < k; ++i) {
    RatFunc v = dec2[i];
    if (i + 1 < k)
      v = compose(v, mus[i]);
    if (i > 0)
      v = compose(mus[i - 1].mobius_inverse(), v);
    if (!(v == dec1[i]))
      return false;
  }

  if (!(compose_all(dec1) == compose_all(dec2)))
    throw Error("equivalent decompositions compose to different functions");
  return true;
}

namespace
{

class Parser
{
public:
  explicit Parser(std::string_view text) : _text(text) {}

  std::vector<RatFunc> chain()
  {
    std::vector<RatFunc> factors{sum()};
    while (peek() == 'o') {
      ++_pos;
      factors.push_back(sum());
    }
    expect_end();
    return factors;
  }

  RatFunc expr()
  {
    RatFunc r = compose_expr();
    expect_end();
    return r;
  }

private:
  static std::vector<std::string> const &operand_tokens()
  {
    static std::vector<std::string> const t{"integer", "'z'", "'('", "'-'"};
    return t;
  }

  char peek()
  {
    while (_pos < _text.size()
           && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  [[noreturn]] void fail(std::string const &msg,
                         std::vector<std::string> expected)
  {
    throw ParseError(msg, _pos, std::move(expected));
  }

  void expect_end()
  {
    if (peek() != '\0')
      fail(std::string("unexpected '") + _text[_pos] + "'",
           {"operator", "end of input"});
  }

  RatFunc compose_expr()
  {
    RatFunc f = sum();
    if (peek() == 'o') {
      ++_pos;
      RatFunc g = compose_expr();
      return compose(f, g);
    }
    return f;
  }

  RatFunc sum()
  {
    RatFunc r = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++_pos;
      RatFunc t = term();
      r = c == '+' ? r + t : r - t;
    }
    return r;
  }

  RatFunc term()
  {
    RatFunc r = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      std::size_t at = _pos++;
      RatFunc t = unary();
      if (c == '*') {
        r = r * t;
      } else {
        if (t.num().is_zero())
          throw ParseError("division by the zero function", at);
        r = r / t;
      }
    }
    return r;
  }

  RatFunc unary()
  {
    char c = peek();
    if (c == '-' || c == '+') {
      ++_pos;
      RatFunc r = unary();
      return c == '-' ? -r : r;
    }
    return power();
  }

  RatFunc power()
  {
    RatFunc base = primary();
    if (peek() != '^')
      return base;

    std::size_t at = _pos++;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++_pos;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer exponent", {"integer"});

    long k = 0;
    while (_pos < _text.size()
           && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      k = k * 10 + (_text[_pos++] - '0');
      if (k > 100000)
        throw ParseError("exponent too large", at);
    }
    if (base.num().is_zero() && (k == 0 || negative))
      throw ParseError(k == 0 ? "0^0 is undefined"
                              : "division by the zero function",
                       at);
    return base.pow(negative ? -k : k);
  }

  RatFunc primary()
  {
    char c = peek();
    if (c == 'z' || c == 'x') {
      ++_pos;
      return RatFunc::z();
    }
    if (c == '(') {
      ++_pos;
      RatFunc r = compose_expr();
      if (peek() != ')')
        fail("unbalanced parenthesis", {"')'"});
      ++_pos;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = _pos;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos])))
        ++_pos;
      return RatFunc::constant(
        Rational(mpz_class(std::string(_text.substr(start, _pos - start)))));
    }
    if (c == '\0')
      fail("unexpected end of input", operand_tokens());
    fail(std::string("unexpected '") + c + "'", operand_tokens());
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // anonymous namespace

RatFunc parse_expr(std::string_view text) { return Parser(text).expr(); }

std::vector<RatFunc> parse_chain(std::string_view text)
{
  return Parser(text).chain();
}

std::string to_string(Poly const &p)
{
  if (p.is_zero())
    return "0";

  std::ostringstream ss;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0)
      continue;

    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      ss << (negative ? "-" : "");
    else
      ss << (negative ? " - " : " + ");
    first = false;

    if (k == 0) {
      ss << mag.get_str();
      continue;
    }
    if (mag != 1)
      ss << mag.get_str() << "*";
    ss << "z";
    if (k > 1)
      ss << "^" << k;
  }
  return ss.str();
}

std::string to_string(RatFunc const &f)
{
  if (f.is_polynomial())
    return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::vector<ScenarioLine> run_scenario(std::string const &text)
{
  std::vector<ScenarioLine> result;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  constexpr std::string_view keyword = "VERIFY";

  while (std::getline(in, raw)) {
    ++number;
    auto begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos || raw[begin] == '#')
      continue;
    auto end = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(begin, end - begin + 1);

    if (line.compare(0, keyword.size(), keyword) != 0)
      throw ParseError("expected VERIFY", begin, {"VERIFY"}, number);

    std::size_t body = keyword.size();
    auto eq = line.find("==", body);
    if (eq == std::string::npos)
      throw ParseError("missing '=='", begin + line.size(), {"'=='"}, number);

    ScenarioLine r{number, line, false, {}};
    std::vector<RatFunc> factors;
    RatFunc target;
    try {
      factors = parse_chain(std::string_view(line).substr(body, eq - body));
    } catch (ParseError const &e) {
      throw ParseError(e.message(), begin + body + e.position(), e.expected(),
                       number);
    }
    try {
      target = parse_expr(std::string_view(line).substr(eq + 2));
    } catch (ParseError const &e) {
      throw ParseError(e.message(), begin + eq + 2 + e.position(),
                       e.expected(), number);
    }

    auto report = verify_composition(factors, target);
    r.passed = report.equal;
    if (!report.equal)
      r.detail = describe(*report.mismatch);
    else if (!report.degenerate.empty())
      r.detail = "note: factor of degree < 2";
    result.push_back(std::move(r));
  }
  return result;
}

} // namespace blocklat
