#ifndef VVJACK_SYMMETRIZE_HPP
#define VVJACK_SYMMETRIZE_HPP

#include "vvjack/jack.hpp"

namespace vvjack {

// Throw NotColumnStrict / NotRowStrict unless (lambda, T) is a valid base
// label: floor tableau strict in the required direction and T the
// cm-decreasing extremal of its W_lambda orbit (the prod P = 1 member).
void check_symmetric_label(const ShapeData& sd, const Composition& lambda, int t0);
void check_antisymmetric_label(const ShapeData& sd, const Composition& lambda, int t0);

// f^s_{lambda,T0} = sum_{alpha^+ = lambda} sum_{T in orbit}
//   prod_j P0(T;a_j,b_j) E_-(alpha,T) zeta_{alpha,T};
// invariant under every group generator, leading term x^lambda u_{lambda,T0}.
VPoly f_symmetric(const ShapeData& sd, JackContext& ctx, const Composition& lambda,
                  int t0);
// Alternating counterpart with (-1)^{inv(alpha)} P1 E_+ weights.
VPoly f_antisymmetric(const ShapeData& sd, JackContext& ctx,
                      const Composition& lambda, int t0);

// Assembled closed-form norms (stabilizer order, group norm of the u-vector,
// E product at lambda^R, zeta norm).
ScalarQk norm_symmetric(const ShapeData& sd, const Composition& lambda, int t0);
ScalarQk norm_antisymmetric(const ShapeData& sd, const Composition& lambda, int t0);

// The four products of the hook identity P1*P2/P3 = Hs.
struct HookProducts {
  ScalarQk p1, p2, p3, hs;
};
HookProducts hook_products(const Partition& tau);

// ||v_T||^2 from the content vector of a standalone tableau.
BigQ content_norm(const Rsyt& T);

// Factored closed-form norm of the minimal symmetric/antisymmetric element:
// prefactor * prod over diagram nodes of (1 -/+ h(i,j) kappa)_{leg/arm}.
struct HookNormFactored {
  BigQ prefactor;                            // N!/prod(row or column factorials) * ||v||^2
  std::vector<std::pair<int, int>> factors;  // (hook length, pochhammer length)
  bool antisymmetric = false;
  ScalarQk value() const;
};

HookNormFactored hook_norm_symmetric(const Partition& tau);
HookNormFactored hook_norm_antisymmetric(const Partition& tau);

struct MinimalPoly {
  Composition lambda;
  int t0 = 0;
  VPoly poly;  // empty when build_poly = false
  HookNormFactored norm;
};

MinimalPoly min_symmetric(const ShapeData& sd, JackContext& ctx, bool build_poly);
MinimalPoly min_antisymmetric(const ShapeData& sd, JackContext& ctx, bool build_poly);

// Gram-rank scan for singular-value evidence.
struct ScanCell {
  BigQ kappa0;
  int degree = 0;
  int corank = 0;
  bool pole = false;  // kappa0 is a pole of some Gram entry; corank not computed
};

struct ScanReport {
  std::vector<ScanCell> cells;  // candidate-major, degree ascending
};

ScanReport singular_scan(const ShapeData& sd, int degree_max,
                         const std::vector<BigQ>& candidates, int workers = 1);

// {n/m : m a hook length, n/m not an integer, |n| <= ncap}, ascending.
std::vector<BigQ> default_candidates(const Partition& tau, int ncap);

}  // namespace vvjack

#endif
