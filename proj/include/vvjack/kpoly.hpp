#ifndef VVJACK_KPOLY_HPP
#define VVJACK_KPOLY_HPP

#include <string>
#include <vector>

#include "vvjack/rational.hpp"

namespace vvjack {

// Univariate polynomial in the formal parameter kappa over Q, dense
// coefficients low degree first. Canonical: no stored leading zero; the zero
// polynomial has an empty coefficient vector and degree() == -1.
class KPoly {
 public:
  KPoly() = default;
  explicit KPoly(std::vector<BigQ> coeffs) : c_(std::move(coeffs)) { trim(); }

  static KPoly zero() { return KPoly(); }
  static KPoly one() { return constant(BigQ(1)); }
  static KPoly constant(const BigQ& a);
  static KPoly kappa() { return linear(BigQ(0), BigQ(1)); }
  // c0 + c1*k
  static KPoly linear(const BigQ& c0, const BigQ& c1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const BigQ& operator[](size_t i) const { return c_[i]; }
  const std::vector<BigQ>& coeffs() const { return c_; }
  BigQ coeff(size_t i) const { return i < c_.size() ? c_[i] : BigQ(0); }
  const BigQ& lead() const { return c_.back(); }
  BigQ constant_term() const { return c_.empty() ? BigQ(0) : c_[0]; }

  KPoly operator-() const;
  KPoly operator+(const KPoly& o) const;
  KPoly operator-(const KPoly& o) const;
  KPoly operator*(const KPoly& o) const;
  bool operator==(const KPoly& o) const { return c_ == o.c_; }
  bool operator!=(const KPoly& o) const { return c_ != o.c_; }

  KPoly scaled(const BigQ& a) const;
  KPoly monic() const;  // divide by leading coefficient; zero stays zero

  BigQ eval(const BigQ& x) const;  // Horner

  // Quotient and remainder in Q[kappa]; divisor must be nonzero.
  static void divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
  // Exact division; throws Error if the remainder is nonzero.
  static KPoly exact_div(const KPoly& a, const KPoly& b);
  // Monic gcd; gcd(0,0) = 0.
  static KPoly gcd(const KPoly& a, const KPoly& b);

  KPoly pow(unsigned e) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigQ> c_;
};

}  // namespace vvjack

#endif
