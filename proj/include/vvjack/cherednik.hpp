#ifndef VVJACK_CHEREDNIK_HPP
#define VVJACK_CHEREDNIK_HPP

#include <functional>
#include <map>

#include "vvjack/irrep.hpp"

namespace vvjack {

// Element of M(tau) = P (x) V_tau: sparse exponent -> V_tau coefficient map.
// No zero coefficients stored; all keys have length N.
class VPoly {
 public:
  using Map = std::map<Composition, ModuleVector>;

  VPoly() = default;
  static VPoly monomial(Composition alpha, ModuleVector u) {
    VPoly f;
    if (!u.is_zero()) f.t_.emplace(std::move(alpha), std::move(u));
    return f;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const Map& terms() const { return t_; }
  int degree() const;  // max |alpha| over keys; -1 when zero

  ModuleVector coeff(const Composition& alpha) const {
    auto it = t_.find(alpha);
    return it == t_.end() ? ModuleVector() : it->second;
  }

  void add_term(const Composition& alpha, const ModuleVector& u) {
    if (u.is_zero()) return;
    auto [it, fresh] = t_.emplace(alpha, u);
    if (!fresh) {
      it->second += u;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add_to(const Composition& alpha, int tab, const ScalarQk& a) {
    if (a.is_zero()) return;
    auto& mv = t_[alpha];
    mv.add(tab, a);
    if (mv.is_zero()) t_.erase(alpha);
  }

  VPoly& operator+=(const VPoly& o) {
    for (const auto& [a, u] : o.t_) add_term(a, u);
    return *this;
  }
  VPoly& operator-=(const VPoly& o);
  VPoly operator+(const VPoly& o) const {
    VPoly f = *this;
    f += o;
    return f;
  }
  VPoly operator-(const VPoly& o) const {
    VPoly f = *this;
    f -= o;
    return f;
  }
  VPoly scaled(const ScalarQk& a) const;
  void axpy(const ScalarQk& a, const VPoly& o);
  bool operator==(const VPoly& o) const { return t_ == o.t_; }
  bool operator!=(const VPoly& o) const { return t_ != o.t_; }

  // terms of one homogeneous degree
  VPoly homogeneous_component(int d) const;

 private:
  Map t_;
};

// w(x^alpha v_T) = x^{w alpha} (w v_T)
VPoly group_act(const ShapeData& sd, const Perm& w, const VPoly& f);
VPoly act_simple_poly(const ShapeData& sd, int i, const VPoly& f);

// (f - (i,j)f)/(x_i - x_j) on the polynomial part only, by the exact
// geometric-sum expansion; coefficients in V_tau ride along unchanged.
VPoly divided_difference(int i, int j, const VPoly& f);

VPoly mult_x(int i, const VPoly& f);
VPoly partial_derivative(int i, const VPoly& f);

// Dunkl operator D_i = d/dx_i + kappa sum_{j != i} dd_{ij} (x) (i,j).
VPoly dunkl(const ShapeData& sd, int i, const VPoly& f);

// Cherednik operator U_i f = D_i(x_i f) - kappa sum_{j<i} (i,j) f.
VPoly cherednik_u(const ShapeData& sd, int i, const VPoly& f);

// Contravariant form via the constant-term pairing
// <x^alpha u, f> = <u, (D^alpha f)(0)>_0, extended bilinearly; homogeneous
// components of different degrees pair to zero.
ScalarQk contravariant_form(const ShapeData& sd, const VPoly& f, const VPoly& g);

// Memoized application of D^beta to a fixed polynomial.
class DunklTower {
 public:
  DunklTower(const ShapeData& sd, VPoly base);
  const VPoly& apply(const Composition& beta);
  // (D^beta base)(0) for |beta| == deg(base)
  ModuleVector constant_term(const Composition& beta);

 private:
  const ShapeData& sd_;
  std::map<Composition, VPoly> memo_;
};

// Dense matrix over the scalar field, row-major.
struct QkMatrix {
  int rows = 0, cols = 0;
  std::vector<ScalarQk> a;

  QkMatrix() = default;
  QkMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  ScalarQk& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const ScalarQk& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
  QkMatrix mul(const QkMatrix& o) const;
  QkMatrix transpose() const;
  bool operator==(const QkMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Monomial basis x^alpha v_T of M_d(tau): alpha lexicographic, tableau-major
// inner index; index = comp_index * dim + tab_index.
struct MonomialBasis {
  std::vector<Composition> comps;
  int ntabs = 0;
  MonomialBasis(const ShapeData& sd, int degree);
  int size() const { return static_cast<int>(comps.size()) * ntabs; }
  int index(int comp_idx, int tab) const { return comp_idx * ntabs + tab; }
};

// Symbolic Gram matrix of the contravariant form on M_d(tau).
QkMatrix gram_matrix(const ShapeData& sd, int degree);

// Matrix of a linear operator between homogeneous monomial bases; terms of
// op(basis monomial) outside out_degree are dropped.
QkMatrix operator_matrix(const ShapeData& sd, const MonomialBasis& bin,
                         const MonomialBasis& bout, int out_degree,
                         const std::function<VPoly(const VPoly&)>& op);

// Rank of the rational matrix by exact Gaussian elimination.
int rank_of_matrix(std::vector<std::vector<BigQ>> m);

}  // namespace vvjack

#endif
