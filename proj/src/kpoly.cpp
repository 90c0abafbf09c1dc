#include "vvjack/kpoly.hpp"

namespace vvjack {

KPoly KPoly::constant(const BigQ& a) {
  KPoly p;
  if (a != 0) p.c_.push_back(a);
  return p;
}

KPoly KPoly::linear(const BigQ& c0, const BigQ& c1) {
  KPoly p;
  p.c_ = {c0, c1};
  p.trim();
  return p;
}

KPoly KPoly::operator-() const {
  KPoly p;
  p.c_.reserve(c_.size());
  for (const auto& a : c_) p.c_.push_back(-a);
  return p;
}

KPoly KPoly::operator+(const KPoly& o) const {
  KPoly p;
  const size_t n = std::max(c_.size(), o.c_.size());
  p.c_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < c_.size()) p.c_[i] += c_[i];
    if (i < o.c_.size()) p.c_[i] += o.c_[i];
  }
  p.trim();
  return p;
}

KPoly KPoly::operator-(const KPoly& o) const {
  KPoly p;
  const size_t n = std::max(c_.size(), o.c_.size());
  p.c_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < c_.size()) p.c_[i] += c_[i];
    if (i < o.c_.size()) p.c_[i] -= o.c_[i];
  }
  p.trim();
  return p;
}

KPoly KPoly::operator*(const KPoly& o) const {
  if (is_zero() || o.is_zero()) return KPoly();
  KPoly p;
  p.c_.assign(c_.size() + o.c_.size() - 1, BigQ(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      p.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  p.trim();
  return p;
}

KPoly KPoly::scaled(const BigQ& a) const {
  if (a == 0) return KPoly();
  KPoly p;
  p.c_.reserve(c_.size());
  for (const auto& b : c_) p.c_.push_back(a * b);
  return p;
}

KPoly KPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(1 / lead());
}

BigQ KPoly::eval(const BigQ& x) const {
  BigQ v(0);
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

void KPoly::divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  q = KPoly();
  r = a;
  const int db = b.degree();
  if (a.degree() < db) return;
  q.c_.assign(a.degree() - db + 1, BigQ(0));
  const BigQ inv_lead = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    BigQ coef = r.lead() * inv_lead;
    q.c_[shift] = coef;
    // r -= coef * x^shift * b
    for (int i = 0; i <= db; ++i) {
      if (b.c_[i] == 0) continue;
      r.c_[i + shift] -= coef * b.c_[i];
    }
    r.trim();
  }
  q.trim();
}

KPoly KPoly::exact_div(const KPoly& a, const KPoly& b) {
  KPoly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
  KPoly u = a, v = b;
  while (!v.is_zero()) {
    KPoly q, r;
    divrem(u, v, q, r);
    u = std::move(v);
    v = std::move(r);
    // normalizing each remainder keeps rational coefficients from blowing up
    v = v.monic();
  }
  return u.monic();
}

KPoly KPoly::pow(unsigned e) const {
  KPoly out = KPoly::one();
  KPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

}  // namespace vvjack
