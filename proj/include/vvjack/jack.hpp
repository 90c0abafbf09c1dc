#ifndef VVJACK_JACK_HPP
#define VVJACK_JACK_HPP

#include <mutex>
#include <utility>

#include "vvjack/cherednik.hpp"

namespace vvjack {

// xi_i(alpha,T) = alpha_i + 1 + kappa c(r(alpha,i),T)
ScalarQk spectral_value(const ShapeData& sd, const Composition& alpha, int tab, int i);
std::vector<ScalarQk> spectral(const ShapeData& sd, const Composition& alpha, int tab);

// b_i(alpha,T) = kappa / (xi_i - xi_{i+1})
ScalarQk b_alpha(const ShapeData& sd, const Composition& alpha, int tab, int i);

// E_eps(alpha,T), eps = +1 or -1, and E_2 = E_+ E_-
ScalarQk e_product(const ShapeData& sd, int eps, const Composition& alpha, int tab);
ScalarQk e2(const ShapeData& sd, const Composition& alpha, int tab);

// Closed-form ||zeta_{alpha,T}||^2 = E_2(alpha,T)^{-1} ||zeta_{alpha^+,T}||^2
// with the hook-style product for the partition case.
ScalarQk zeta_norm(const ShapeData& sd, const Composition& alpha, int tab);

// Memoized Yang-Baxter-graph recursion for the simultaneous eigenbasis.
// Cache is per shape, bounded by an entry budget; overflow throws MemoOverflow
// instead of evicting. Reads may run concurrently; inserts are exclusive.
class JackContext {
 public:
  explicit JackContext(const ShapeData& sd, size_t memo_budget = 1u << 20)
      : sd_(sd), budget_(memo_budget) {}

  const ShapeData& shape() const { return sd_; }
  size_t memo_size() const;
  // zeta_{alpha,T}: x^alpha w_alpha v_T plus dominance-lower terms
  const VPoly& zeta(const Composition& alpha, int tab);

 private:
  const VPoly& insert(std::pair<Composition, int> key, VPoly value);

  const ShapeData& sd_;
  size_t budget_;
  std::map<std::pair<Composition, int>, VPoly> memo_;
  mutable std::recursive_mutex mtx_;
};

struct EigenReport {
  bool pass = true;
  std::vector<int> failing;  // indices i with U_i zeta != xi_i zeta
};

EigenReport verify_eigen(const ShapeData& sd, JackContext& ctx,
                         const Composition& alpha, int tab);
EigenReport verify_eigen_poly(const ShapeData& sd, const Composition& alpha,
                              int tab, const VPoly& f);

// Independent construction: assemble the matrices of U_1..U_N on the degree
// |alpha| monomial basis x^beta w_beta v_S and extract the eigenvector with
// leading coefficient 1 by back-substitution in a linear extension of the
// dominance order. Throws TooLarge past the dimension guard.
VPoly triangular_oracle(const ShapeData& sd, const Composition& alpha, int tab,
                        int dim_guard = 5000);

// Linear extension of the dominance order within one degree:
// true when a is lower than b.
bool total_less(const Composition& a, const Composition& b);

// Coordinates of every zeta of one degree over the monomial basis,
// column index = MonomialBasis::index(comp, tab) of the label.
QkMatrix zeta_coord_matrix(const ShapeData& sd, JackContext& ctx, int degree);

}  // namespace vvjack

#endif
