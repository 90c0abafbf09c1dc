#include "vvjack/scalar.hpp"

#include <cctype>

namespace vvjack {

namespace {

// lcm of coefficient denominators
BigInt coeff_denominator_lcm(const KPoly& p, BigInt acc) {
  for (const auto& c : p.coeffs()) {
    BigInt d = c.get_den();
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
  }
  return acc;
}

BigInt int_content(const KPoly& p, BigInt acc) {
  for (const auto& c : p.coeffs()) {
    BigInt n = c.get_num();
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
  }
  return acc;
}

// Renders an integer-coefficient polynomial, highest degree first,
// e.g. "2*k^2+3*k+1", "-k+4", "0".
std::string render_int_poly(const KPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    BigQ c = p.coeff(static_cast<size_t>(d));
    if (c == 0) continue;
    BigInt n = c.get_num();
    const bool neg = n < 0;
    if (neg) n = -n;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (d == 0) {
      out += n.get_str();
    } else {
      if (n != 1) {
        out += n.get_str();
        out += "*";
      }
      out += "k";
      if (d > 1) {
        out += "^";
        out += std::to_string(d);
      }
    }
  }
  return out;
}

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  BigInt parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in scalar: " + s);
    return BigInt(s.substr(start, pos - start));
  }

  // term := int ['*'? k-part] | k-part ; k-part := 'k' ['^' int]
  void parse_term(int sign, std::vector<BigQ>& acc) {
    skip_ws();
    BigInt coef(1);
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_int();
      have_coef = true;
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
    }
    int deg = 0;
    if (pos < s.size() && s[pos] == 'k') {
      ++pos;
      deg = 1;
      if (eat('^')) deg = static_cast<int>(parse_int().get_si());
    } else if (!have_coef) {
      throw ParseError("expected term in scalar: " + s);
    }
    if (acc.size() < static_cast<size_t>(deg) + 1) acc.resize(deg + 1);
    acc[deg] += BigQ(sign < 0 ? -coef : coef);
  }

  KPoly parse_poly() {
    std::vector<BigQ> acc;
    skip_ws();
    int sign = 1;
    if (eat('+')) sign = 1;
    else if (eat('-')) sign = -1;
    parse_term(sign, acc);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else break;
      parse_term(sign, acc);
    }
    return KPoly(std::move(acc));
  }
};

KPoly parse_poly_side(std::string part) {
  // strip one pair of enclosing parentheses if they wrap the whole string
  auto wrapped = [](const std::string& t) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return false;
    int depth = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      else if (t[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 != t.size()) return false;
      }
    }
    return true;
  };
  while (wrapped(part)) part = part.substr(1, part.size() - 2);
  PolyParser p(part);
  KPoly out = p.parse_poly();
  p.skip_ws();
  if (p.pos != part.size()) throw ParseError("trailing input in scalar: " + part);
  return out;
}

}  // namespace

ScalarQk::ScalarQk(KPoly num, KPoly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator in Q(kappa)");
  if (num.is_zero()) {
    num_ = KPoly::zero();
    den_ = KPoly::one();
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(1 / den.constant_term());
    den_ = KPoly::one();
    return;
  }
  KPoly g = KPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = KPoly::exact_div(num, g);
    den = KPoly::exact_div(den, g);
  }
  if (den.is_constant()) {
    num_ = num.scaled(1 / den.constant_term());
    den_ = KPoly::one();
    return;
  }
  const BigQ lead = den.lead();
  if (lead != 1) {
    num = num.scaled(1 / lead);
    den = den.scaled(1 / lead);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

ScalarQk ScalarQk::from_fraction(const BigQ& num, const BigQ& den) {
  if (den == 0) throw DivisionByZero();
  return ScalarQk(num / den);
}

ScalarQk ScalarQk::operator-() const {
  ScalarQk out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

ScalarQk ScalarQk::operator+(const ScalarQk& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    if (num_.is_constant() && o.num_.is_constant())
      return ScalarQk(num_.constant_term() + o.num_.constant_term());
    return ScalarQk(num_ + o.num_);
  }
  KPoly g = KPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    ScalarQk out;
    out.num_ = num_ * o.den_ + o.num_ * den_;
    if (out.num_.is_zero()) return ScalarQk();
    out.den_ = den_ * o.den_;
    return out;
  }
  KPoly da = KPoly::exact_div(den_, g);
  KPoly db = KPoly::exact_div(o.den_, g);
  KPoly t = num_ * db + o.num_ * da;
  if (t.is_zero()) return ScalarQk();
  KPoly g2 = KPoly::gcd(t, g);
  ScalarQk out;
  if (g2.degree() > 0) {
    out.num_ = KPoly::exact_div(t, g2);
    out.den_ = da * db * KPoly::exact_div(g, g2);
  } else {
    out.num_ = std::move(t);
    out.den_ = da * db * g;
  }
  if (out.den_.is_constant()) return ScalarQk(std::move(out.num_), std::move(out.den_));
  return out;
}

ScalarQk ScalarQk::operator-(const ScalarQk& o) const { return *this + (-o); }

ScalarQk ScalarQk::operator*(const ScalarQk& o) const {
  if (is_zero() || o.is_zero()) return ScalarQk();
  if (den_.is_one() && o.den_.is_one()) {
    if (num_.is_constant() && o.num_.is_constant())
      return ScalarQk(num_.constant_term() * o.num_.constant_term());
    return ScalarQk(num_ * o.num_);
  }
  KPoly g1 = KPoly::gcd(num_, o.den_);
  KPoly g2 = KPoly::gcd(o.num_, den_);
  const KPoly n1 = g1.degree() > 0 ? KPoly::exact_div(num_, g1) : num_;
  const KPoly d2 = g1.degree() > 0 ? KPoly::exact_div(o.den_, g1) : o.den_;
  const KPoly n2 = g2.degree() > 0 ? KPoly::exact_div(o.num_, g2) : o.num_;
  const KPoly d1 = g2.degree() > 0 ? KPoly::exact_div(den_, g2) : den_;
  ScalarQk out;
  out.num_ = n1 * n2;
  out.den_ = d1 * d2;
  if (out.den_.is_constant()) return ScalarQk(std::move(out.num_), std::move(out.den_));
  // denominators of canonical scalars are monic, so d1*d2 is monic already
  return out;
}

ScalarQk ScalarQk::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(kappa)");
  ScalarQk out;
  const BigQ lead = num_.lead();
  out.num_ = den_.scaled(1 / lead);
  out.den_ = num_.scaled(1 / lead);
  if (out.den_.is_constant()) return ScalarQk(std::move(out.num_), std::move(out.den_));
  return out;
}

ScalarQk ScalarQk::operator/(const ScalarQk& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(kappa)");
  return *this * o.inverse();
}

ScalarQk ScalarQk::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ScalarQk out(1);
  ScalarQk base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u > 0) {
    if (u & 1u) out *= base;
    base *= base;
    u >>= 1u;
  }
  return out;
}

BigQ ScalarQk::eval(const BigQ& k0) const {
  const BigQ d = den_.eval(k0);
  if (d == 0) throw PoleAtKappa("pole at kappa0 = " + bigq_str(k0));
  return num_.eval(k0) / d;
}

std::string ScalarQk::str() const {
  if (is_zero()) return "0";
  BigInt m = coeff_denominator_lcm(num_, coeff_denominator_lcm(den_, BigInt(1)));
  KPoly p = num_.scaled(BigQ(m));
  KPoly q = den_.scaled(BigQ(m));
  BigInt g = int_content(p, int_content(q, BigInt(0)));
  if (g < 0) g = -g;
  if (g > 1) {
    BigQ inv = BigQ(1) / BigQ(g);
    p = p.scaled(inv);
    q = q.scaled(inv);
  }
  const std::string ps = render_int_poly(p);
  if (q.is_one()) return ps;
  const std::string qs = render_int_poly(q);
  std::string out;
  out += (p.degree() > 0) ? "(" + ps + ")" : ps;
  out += "/";
  out += (q.degree() > 0) ? "(" + qs + ")" : qs;
  return out;
}

ScalarQk ScalarQk::parse(const std::string& text) {
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("multiple '/' in scalar: " + text);
      slash = i;
    }
  }
  if (slash == std::string::npos) return ScalarQk(parse_poly_side(text), KPoly::one());
  return ScalarQk(parse_poly_side(text.substr(0, slash)),
                  parse_poly_side(text.substr(slash + 1)));
}

ScalarQk pochhammer(const ScalarQk& base, int n) {
  if (n < 0) throw Error("pochhammer needs n >= 0");
  ScalarQk out(1);
  for (int i = 1; i <= n; ++i) out *= base + ScalarQk(i - 1);
  return out;
}

}  // namespace vvjack
