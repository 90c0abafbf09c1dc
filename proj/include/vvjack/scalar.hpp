#ifndef VVJACK_SCALAR_HPP
#define VVJACK_SCALAR_HPP

#include <string>

#include "vvjack/kpoly.hpp"

namespace vvjack {

// An element of the coefficient field Q(kappa), kept canonical at all times:
// denominator nonzero and monic, gcd(num, den) = 1, zero is 0/1. Structural
// equality therefore coincides with equality of field values.
class ScalarQk {
 public:
  ScalarQk() : num_(KPoly::zero()), den_(KPoly::one()) {}
  ScalarQk(const BigQ& a) : num_(KPoly::constant(a)), den_(KPoly::one()) {}
  ScalarQk(long a) : ScalarQk(BigQ(a)) {}
  explicit ScalarQk(KPoly p) : num_(std::move(p)), den_(KPoly::one()) {}
  // qk_normalize: reduce and make the denominator monic; value unchanged.
  ScalarQk(KPoly num, KPoly den);

  static ScalarQk kappa() { return ScalarQk(KPoly::kappa()); }
  // (c0 + c1*k) as a scalar
  static ScalarQk linear(const BigQ& c0, const BigQ& c1) {
    return ScalarQk(KPoly::linear(c0, c1));
  }
  static ScalarQk from_fraction(const BigQ& num, const BigQ& den);

  const KPoly& num() const { return num_; }
  const KPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  // Only valid when is_constant().
  BigQ constant_value() const { return num_.constant_term(); }
  bool is_kappa_free() const { return is_constant(); }

  ScalarQk operator-() const;
  ScalarQk operator+(const ScalarQk& o) const;
  ScalarQk operator-(const ScalarQk& o) const;
  ScalarQk operator*(const ScalarQk& o) const;
  ScalarQk operator/(const ScalarQk& o) const;  // throws DivisionByZero
  ScalarQk& operator+=(const ScalarQk& o) { return *this = *this + o; }
  ScalarQk& operator-=(const ScalarQk& o) { return *this = *this - o; }
  ScalarQk& operator*=(const ScalarQk& o) { return *this = *this * o; }
  ScalarQk& operator/=(const ScalarQk& o) { return *this = *this / o; }

  ScalarQk inverse() const;
  ScalarQk pow(int e) const;

  bool operator==(const ScalarQk& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ScalarQk& o) const { return !(*this == o); }

  // Evaluate at kappa = k0; throws PoleAtKappa when den(k0) = 0.
  BigQ eval(const BigQ& k0) const;

  // Bit-exact interchange format, e.g. "(2*k^2+3*k+1)/(k+1)", "(k+1)/2",
  // "3/4", "2*k+1", "0". parse() accepts the same grammar.
  std::string str() const;
  static ScalarQk parse(const std::string& text);

 private:
  KPoly num_, den_;
};

inline ScalarQk qk_normalize(KPoly num, KPoly den) {
  return ScalarQk(std::move(num), std::move(den));
}

// Rising factorial (t)_n = t(t+1)...(t+n-1); (t)_0 = 1.
ScalarQk pochhammer(const ScalarQk& base, int n);

inline BigQ qk_eval(const ScalarQk& s, const BigQ& k0) { return s.eval(k0); }

}  // namespace vvjack

#endif
