#include "vvjack/jack.hpp"

#include <algorithm>

#include "vvjack/errors.hpp"

namespace vvjack {

ScalarQk spectral_value(const ShapeData& sd, const Composition& alpha, int tab, int i) {
  const int r = rank_of(alpha, i);
  return ScalarQk::linear(BigQ(alpha[i - 1] + 1), BigQ(sd.content[tab][r]));
}

std::vector<ScalarQk> spectral(const ShapeData& sd, const Composition& alpha, int tab) {
  std::vector<ScalarQk> xi;
  xi.reserve(alpha.size());
  for (int i = 1; i <= static_cast<int>(alpha.size()); ++i)
    xi.push_back(spectral_value(sd, alpha, tab, i));
  return xi;
}

ScalarQk b_alpha(const ShapeData& sd, const Composition& alpha, int tab, int i) {
  const int ri = rank_of(alpha, i), rj = rank_of(alpha, i + 1);
  const KPoly den = KPoly::linear(BigQ(alpha[i - 1] - alpha[i]),
                                  BigQ(sd.content[tab][ri] - sd.content[tab][rj]));
  return ScalarQk(KPoly::kappa(), den);
}

ScalarQk e_product(const ShapeData& sd, int eps, const Composition& alpha, int tab) {
  const int n = static_cast<int>(alpha.size());
  const auto ranks = rank_vector(alpha);
  ScalarQk out(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (alpha[i - 1] >= alpha[j - 1]) continue;
      const BigQ diff(alpha[j - 1] - alpha[i - 1]);
      const BigQ cdiff(sd.content[tab][ranks[j - 1]] - sd.content[tab][ranks[i - 1]]);
      const KPoly den = KPoly::linear(diff, cdiff);
      const KPoly num = KPoly::linear(diff, cdiff + eps);
      out *= ScalarQk(num, den);
    }
  return out;
}

ScalarQk e2(const ShapeData& sd, const Composition& alpha, int tab) {
  return e_product(sd, 1, alpha, tab) * e_product(sd, -1, alpha, tab);
}

ScalarQk zeta_norm(const ShapeData& sd, const Composition& alpha, int tab) {
  const Composition lambda = sorted_desc(alpha);
  const int n = static_cast<int>(lambda.size());
  ScalarQk out = norm0(sd, tab);
  for (int i = 1; i <= n; ++i)
    out *= pochhammer(ScalarQk::linear(BigQ(1), BigQ(sd.content[tab][i])),
                      lambda[i - 1]);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const BigQ cdiff(sd.content[tab][i] - sd.content[tab][j]);
      for (int l = 1; l <= lambda[i - 1] - lambda[j - 1]; ++l) {
        // 1 - kappa^2/(l + kappa cdiff)^2
        const KPoly den = KPoly::linear(BigQ(l), cdiff);
        const KPoly num = KPoly::linear(BigQ(l), cdiff + 1) *
                          KPoly::linear(BigQ(l), cdiff - 1);
        out *= ScalarQk(num, den * den);
      }
    }
  if (alpha != lambda) out = out / e2(sd, alpha, tab);
  return out;
}

size_t JackContext::memo_size() const {
  std::lock_guard<std::recursive_mutex> lk(mtx_);
  return memo_.size();
}

const VPoly& JackContext::insert(std::pair<Composition, int> key, VPoly value) {
  if (memo_.size() >= budget_)
    throw MemoOverflow("zeta memo budget exceeded (" + std::to_string(budget_) + ")");
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

const VPoly& JackContext::zeta(const Composition& alpha, int tab) {
  if (static_cast<int>(alpha.size()) != sd_.N) throw Error("zeta: bad alpha length");
  if (tab < 0 || tab >= sd_.dim()) throw Error("zeta: bad tableau index");
  std::lock_guard<std::recursive_mutex> lk(mtx_);
  auto key = std::make_pair(alpha, tab);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const int n = sd_.N;
  if (degree_of(alpha) == 0)
    return insert(std::move(key),
                  VPoly::monomial(alpha, ModuleVector::basis(tab)));

  if (alpha[n - 1] >= 1) {
    // raising step: zeta_{phi(beta),T} = x_N theta_N^{-1} zeta_{beta,T}
    const Composition beta = phi_inverse(alpha);
    Perm theta_inv(n);
    theta_inv[0] = n;
    for (int i = 2; i <= n; ++i) theta_inv[i - 1] = i - 1;
    VPoly z = mult_x(n, group_act(sd_, theta_inv, zeta(beta, tab)));
    return insert(std::move(key), std::move(z));
  }

  // rightmost positive entry; alpha_i > alpha_{i+1} = 0
  int i = n - 1;
  while (alpha[i - 1] == 0) --i;
  Composition beta = alpha;
  std::swap(beta[i - 1], beta[i]);
  const VPoly& zb = zeta(beta, tab);
  VPoly z = act_simple_poly(sd_, i, zb);
  z.axpy(b_alpha(sd_, alpha, tab, i), zb);
  return insert(std::move(key), std::move(z));
}

EigenReport verify_eigen_poly(const ShapeData& sd, const Composition& alpha,
                              int tab, const VPoly& f) {
  EigenReport rep;
  for (int i = 1; i <= sd.N; ++i) {
    const VPoly lhs = cherednik_u(sd, i, f);
    const VPoly rhs = f.scaled(spectral_value(sd, alpha, tab, i));
    if (lhs != rhs) {
      rep.pass = false;
      rep.failing.push_back(i);
    }
  }
  return rep;
}

EigenReport verify_eigen(const ShapeData& sd, JackContext& ctx,
                         const Composition& alpha, int tab) {
  return verify_eigen_poly(sd, alpha, tab, ctx.zeta(alpha, tab));
}

bool total_less(const Composition& a, const Composition& b) {
  // sorted prefix sums first, then own prefix sums, then lex
  const Composition ap = sorted_desc(a), bp = sorted_desc(b);
  int pa = 0, pb = 0;
  for (size_t i = 0; i < ap.size(); ++i) {
    pa += ap[i];
    pb += bp[i];
    if (pa != pb) return pa < pb;
  }
  pa = pb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa != pb) return pa < pb;
  }
  return a < b;
}

VPoly triangular_oracle(const ShapeData& sd, const Composition& alpha, int tab,
                        int dim_guard) {
  const int n = sd.N;
  const int deg = degree_of(alpha);
  const MonomialBasis basis(sd, deg);
  const int dim = basis.size();
  if (dim > dim_guard)
    throw TooLarge("triangular oracle basis dimension " + std::to_string(dim));

  const int ncomp = static_cast<int>(basis.comps.size());
  std::vector<Perm> sort_perm(ncomp), sort_perm_inv(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    sort_perm[c] = sorting_permutation(basis.comps[c]);
    sort_perm_inv[c] = perm_inverse(sort_perm[c]);
  }
  std::map<Composition, int> comp_index;
  for (int c = 0; c < ncomp; ++c) comp_index[basis.comps[c]] = c;

  // matrices of U_1..U_N in the basis e_{beta,S} = x^beta w_beta v_S
  std::vector<QkMatrix> umat(n, QkMatrix(dim, dim));
  for (int c = 0; c < ncomp; ++c) {
    for (int s = 0; s < basis.ntabs; ++s) {
      const VPoly e = VPoly::monomial(
          basis.comps[c], act_perm(sd, sort_perm[c], ModuleVector::basis(s)));
      const int col = basis.index(c, s);
      for (int i = 1; i <= n; ++i) {
        const VPoly ue = cherednik_u(sd, i, e);
        for (const auto& [gamma, u] : ue.terms()) {
          const int cg = comp_index.at(gamma);
          const ModuleVector coords = act_perm(sd, sort_perm_inv[cg], u);
          for (const auto& [r, val] : coords.coords())
            umat[i - 1].at(basis.index(cg, r), col) += val;
        }
      }
    }
  }

  // process exponents from dominance-high to low
  std::vector<int> order(ncomp);
  for (int c = 0; c < ncomp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return total_less(basis.comps[y], basis.comps[x]);
  });

  const auto xi_target = spectral(sd, alpha, tab);
  std::vector<ScalarQk> coeff(dim);
  const int target = basis.index(comp_index.at(alpha), tab);
  coeff[target] = ScalarQk(1);

  for (int oc : order) {
    for (int s = 0; s < basis.ntabs; ++s) {
      const int row = basis.index(oc, s);
      if (row == target) continue;
      int pick = -1;
      for (int i = 1; i <= n; ++i) {
        if (spectral_value(sd, basis.comps[oc], s, i) != xi_target[i - 1]) {
          pick = i;
          break;
        }
      }
      if (pick < 0) throw Error("spectral vectors fail to separate labels");
      ScalarQk acc;
      const QkMatrix& u = umat[pick - 1];
      for (int col = 0; col < dim; ++col) {
        if (col == row || coeff[col].is_zero()) continue;
        const ScalarQk& entry = u.at(row, col);
        if (!entry.is_zero()) acc += entry * coeff[col];
      }
      if (!acc.is_zero())
        coeff[row] =
            acc / (xi_target[pick - 1] - spectral_value(sd, basis.comps[oc], s, pick));
    }
  }

  VPoly out;
  for (int c = 0; c < ncomp; ++c) {
    ModuleVector u;
    for (int s = 0; s < basis.ntabs; ++s) {
      const ScalarQk& a = coeff[basis.index(c, s)];
      if (!a.is_zero()) u.add(s, a);
    }
    if (!u.is_zero()) out.add_term(basis.comps[c], act_perm(sd, sort_perm[c], u));
  }
  return out;
}


QkMatrix zeta_coord_matrix(const ShapeData& sd, JackContext& ctx, int degree) {
  const MonomialBasis basis(sd, degree);
  std::map<Composition, int> comp_index;
  for (size_t c = 0; c < basis.comps.size(); ++c)
    comp_index[basis.comps[c]] = static_cast<int>(c);
  QkMatrix coords(basis.size(), basis.size());
  for (size_t c = 0; c < basis.comps.size(); ++c)
    for (int t = 0; t < basis.ntabs; ++t) {
      const int col = basis.index(static_cast<int>(c), t);
      for (const auto& [beta, u] : ctx.zeta(basis.comps[c], t).terms()) {
        const int bc = comp_index.at(beta);
        for (const auto& [s, val] : u.coords())
          coords.at(basis.index(bc, s), col) = val;
      }
    }
  return coords;
}

}  // namespace vvjack
