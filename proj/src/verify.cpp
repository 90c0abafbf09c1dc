#include "vvjack/verify.hpp"

#include <chrono>
#include <functional>

namespace vvjack {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json label_json(const ShapeData& sd, const Composition& alpha, int tab) {
  Json j = Json::object();
  j["alpha"] = alpha;
  j["tableau"] = sd.tabs[tab].word();
  return j;
}

std::vector<std::pair<Composition, int>> labels_up_to(const ShapeData& sd, int nmax) {
  std::vector<std::pair<Composition, int>> labels;
  for (int d = 0; d <= nmax; ++d)
    for (const auto& alpha : compositions_of_degree(sd.N, d))
      for (int t = 0; t < sd.dim(); ++t) labels.emplace_back(alpha, t);
  return labels;
}

struct SuiteRunner {
  const ShapeData& sd;
  int nmax;
  size_t memo_budget;
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<Json()>& body) {
    CheckResult r;
    r.name = name;
    const auto start = Clock::now();
    r.counterexample = body();
    r.pass = r.counterexample.is_null();
    r.millis = ms_since(start);
    results.push_back(std::move(r));
  }
};

Json check_braid(const ShapeData& sd) {
  for (int t = 0; t < sd.dim(); ++t) {
    const ModuleVector v = ModuleVector::basis(t);
    for (int i = 1; i < sd.N; ++i) {
      if (act_simple(sd, i, act_simple(sd, i, v)) != v)
        return Json{{"identity", "s_i^2"}, {"i", i}, {"tableau", sd.tabs[t].word()}};
      for (int j = i + 2; j < sd.N; ++j) {
        if (act_simple(sd, i, act_simple(sd, j, v)) !=
            act_simple(sd, j, act_simple(sd, i, v)))
          return Json{{"identity", "far commute"}, {"i", i}, {"j", j}};
      }
      if (i + 1 < sd.N) {
        const ModuleVector lhs =
            act_simple(sd, i, act_simple(sd, i + 1, act_simple(sd, i, v)));
        const ModuleVector rhs =
            act_simple(sd, i + 1, act_simple(sd, i, act_simple(sd, i + 1, v)));
        if (lhs != rhs)
          return Json{{"identity", "braid"}, {"i", i}, {"tableau", sd.tabs[t].word()}};
      }
    }
  }
  return Json();
}

Json check_isometry(const ShapeData& sd) {
  for (int i = 1; i < sd.N; ++i)
    for (int t = 0; t < sd.dim(); ++t)
      for (int s = t; s < sd.dim(); ++s) {
        const ModuleVector vt = ModuleVector::basis(t), vs = ModuleVector::basis(s);
        if (form0(sd, act_simple(sd, i, vt), act_simple(sd, i, vs)) !=
            form0(sd, vt, vs))
          return Json{{"i", i},
                      {"T", sd.tabs[t].word()},
                      {"S", sd.tabs[s].word()}};
      }
  return Json();
}

Json check_jucys_murphy(const ShapeData& sd) {
  for (int t = 0; t < sd.dim(); ++t) {
    const ModuleVector v = ModuleVector::basis(t);
    for (int i = 1; i <= sd.N; ++i) {
      if (jm_apply(sd, i, v) != v.scaled(ScalarQk(sd.content[t][i])))
        return Json{{"i", i}, {"tableau", sd.tabs[t].word()}};
    }
    // s_i w_i - w_{i+1} s_i = 1
    for (int i = 1; i < sd.N; ++i) {
      const ModuleVector lhs = act_simple(sd, i, jm_apply(sd, i, v)) -
                               jm_apply(sd, i + 1, act_simple(sd, i, v));
      if (lhs != v)
        return Json{{"identity", "s w - w s = 1"}, {"i", i},
                    {"tableau", sd.tabs[t].word()}};
    }
  }
  return Json();
}

Json check_commutators(const ShapeData& sd, int nmax) {
  const ScalarQk kappa = ScalarQk::kappa();
  for (int d = 0; d <= nmax; ++d)
    for (const auto& alpha : compositions_of_degree(sd.N, d))
      for (int t = 0; t < sd.dim(); ++t) {
        const VPoly f = VPoly::monomial(alpha, ModuleVector::basis(t));
        for (int i = 1; i <= sd.N; ++i) {
          for (int j = 1; j <= sd.N; ++j) {
            const VPoly lhs =
                dunkl(sd, i, mult_x(j, f)) - mult_x(j, dunkl(sd, i, f));
            if (i == j) continue;
            VPoly rhs;
            rhs.axpy(-kappa, group_act(sd, perm_transposition(sd.N, i, j), f));
            if (lhs != rhs)
              return Json{{"identity", "D_i x_j - x_j D_i"}, {"i", i}, {"j", j},
                          {"alpha", alpha}, {"tableau", sd.tabs[t].word()}};
          }
          // D_i x_i - x_i D_i = 1 + kappa sum_{j != i} (i,j)
          VPoly rhs = f;
          for (int j = 1; j <= sd.N; ++j) {
            if (j == i) continue;
            rhs.axpy(kappa, group_act(sd, perm_transposition(sd.N, i, j), f));
          }
          if (dunkl(sd, i, mult_x(i, f)) - mult_x(i, dunkl(sd, i, f)) != rhs)
            return Json{{"identity", "D_i x_i - x_i D_i"}, {"i", i},
                        {"alpha", alpha}, {"tableau", sd.tabs[t].word()}};
        }
      }
  return Json();
}

Json check_dunkl_commute(const ShapeData& sd, int nmax) {
  for (int d = 0; d <= nmax; ++d)
    for (const auto& alpha : compositions_of_degree(sd.N, d))
      for (int t = 0; t < sd.dim(); ++t) {
        const VPoly f = VPoly::monomial(alpha, ModuleVector::basis(t));
        for (int i = 1; i <= sd.N; ++i)
          for (int j = i + 1; j <= sd.N; ++j)
            if (dunkl(sd, i, dunkl(sd, j, f)) != dunkl(sd, j, dunkl(sd, i, f)))
              return Json{{"identity", "Dunkl commute"}, {"i", i}, {"j", j},
                          {"alpha", alpha}};
      }
  return Json();
}

Json check_u_commute(const ShapeData& sd, int nmax) {
  for (int d = 0; d <= nmax; ++d)
    for (const auto& alpha : compositions_of_degree(sd.N, d))
      for (int t = 0; t < sd.dim(); ++t) {
        const VPoly f = VPoly::monomial(alpha, ModuleVector::basis(t));
        for (int i = 1; i <= sd.N; ++i)
          for (int j = i + 1; j <= sd.N; ++j)
            if (cherednik_u(sd, i, cherednik_u(sd, j, f)) !=
                cherednik_u(sd, j, cherednik_u(sd, i, f)))
              return Json{{"identity", "U commute"}, {"i", i}, {"j", j},
                          {"alpha", alpha}};
      }
  return Json();
}

Json check_triangularity(const ShapeData& sd, int nmax) {
  for (int d = 0; d <= nmax; ++d)
    for (const auto& alpha : compositions_of_degree(sd.N, d))
      for (int t = 0; t < sd.dim(); ++t) {
        const Perm w = sorting_permutation(alpha);
        const VPoly e =
            VPoly::monomial(alpha, act_perm(sd, w, ModuleVector::basis(t)));
        for (int i = 1; i <= sd.N; ++i) {
          VPoly rest = cherednik_u(sd, i, e);
          rest.axpy(-spectral_value(sd, alpha, t, i), e);
          for (const auto& [beta, u] : rest.terms())
            if (!dominance_lt(beta, alpha))
              return Json{{"alpha", alpha}, {"beta", beta}, {"i", i}};
        }
      }
  return Json();
}

Json check_form_axioms(const ShapeData& sd, int nmax) {
  const ScalarQk kappa = ScalarQk::kappa();
  std::vector<QkMatrix> gram(nmax + 1);
  std::vector<MonomialBasis> bases;
  for (int d = 0; d <= nmax; ++d) {
    bases.emplace_back(sd, d);
    gram[d] = gram_matrix(sd, d);
  }
  for (int d = 0; d <= nmax; ++d) {
    const QkMatrix& g = gram[d];
    if (g != g.transpose()) return Json{{"axiom", "symmetry"}, {"degree", d}};
    // <wf, wg> = <f,g> for simple reflections
    for (int i = 1; i < sd.N; ++i) {
      const QkMatrix p = operator_matrix(
          sd, bases[d], bases[d], d,
          [&](const VPoly& f) { return act_simple_poly(sd, i, f); });
      if (p.transpose().mul(g).mul(p) != g)
        return Json{{"axiom", "w-invariance"}, {"degree", d}, {"i", i}};
    }
    // <(i,j)f, g> = <f, (i,j)g> and <D_i x_i f, g> = <f, D_i x_i g>
    for (int i = 1; i <= sd.N; ++i) {
      for (int j = i + 1; j <= sd.N; ++j) {
        const QkMatrix m = operator_matrix(
            sd, bases[d], bases[d], d, [&](const VPoly& f) {
              return group_act(sd, perm_transposition(sd.N, i, j), f);
            });
        if (m.transpose().mul(g) != g.mul(m))
          return Json{{"axiom", "transposition self-adjoint"}, {"degree", d},
                      {"i", i}, {"j", j}};
      }
      const QkMatrix m = operator_matrix(
          sd, bases[d], bases[d], d,
          [&](const VPoly& f) { return dunkl(sd, i, mult_x(i, f)); });
      if (m.transpose().mul(g) != g.mul(m))
        return Json{{"axiom", "D_i x_i self-adjoint"}, {"degree", d}, {"i", i}};
    }
    // <x_i f, g> = <f, D_i g> across degrees
    if (d + 1 <= nmax) {
      for (int i = 1; i <= sd.N; ++i) {
        const QkMatrix xi = operator_matrix(
            sd, bases[d], bases[d + 1], d + 1,
            [&](const VPoly& f) { return mult_x(i, f); });
        const QkMatrix di = operator_matrix(
            sd, bases[d + 1], bases[d], d,
            [&](const VPoly& f) { return dunkl(sd, i, f); });
        if (xi.transpose().mul(gram[d + 1]) != gram[d].mul(di))
          return Json{{"axiom", "x_i/D_i adjoint"}, {"degree", d}, {"i", i}};
      }
    }
    (void)kappa;
  }
  // degree orthogonality spot checks
  if (nmax >= 1) {
    const VPoly f = VPoly::monomial(Composition(sd.N, 0), ModuleVector::basis(0));
    Composition e1(sd.N, 0);
    e1[0] = 1;
    const VPoly g = VPoly::monomial(e1, ModuleVector::basis(0));
    if (!contravariant_form(sd, f, g).is_zero())
      return Json{{"axiom", "degree orthogonality"}};
  }
  return Json();
}

Json check_jack_eigen(const ShapeData& sd, JackContext& ctx, int nmax) {
  for (const auto& [alpha, t] : labels_up_to(sd, nmax)) {
    const EigenReport rep = verify_eigen(sd, ctx, alpha, t);
    if (!rep.pass) {
      Json j = label_json(sd, alpha, t);
      j["failing"] = rep.failing;
      return j;
    }
  }
  return Json();
}

Json check_jack_oracle(const ShapeData& sd, JackContext& ctx, int nmax) {
  for (const auto& [alpha, t] : labels_up_to(sd, nmax)) {
    if (ctx.zeta(alpha, t) != triangular_oracle(sd, alpha, t))
      return label_json(sd, alpha, t);
  }
  return Json();
}

Json check_jack_gram(const ShapeData& sd, JackContext& ctx, int nmax) {
  for (int d = 0; d <= nmax; ++d) {
    const MonomialBasis basis(sd, d);
    const int dim = basis.size();
    const QkMatrix coords = zeta_coord_matrix(sd, ctx, d);
    const QkMatrix zgram = coords.transpose().mul(gram_matrix(sd, d).mul(coords));
    for (size_t c = 0; c < basis.comps.size(); ++c)
      for (int t = 0; t < basis.ntabs; ++t) {
        const int i = basis.index(static_cast<int>(c), t);
        for (int j = 0; j < dim; ++j) {
          if (i == j) {
            if (zgram.at(i, i) != zeta_norm(sd, basis.comps[c], t)) {
              Json rep = label_json(sd, basis.comps[c], t);
              rep["mismatch"] = "norm";
              rep["form"] = zgram.at(i, i).str();
              rep["formula"] = zeta_norm(sd, basis.comps[c], t).str();
              return rep;
            }
          } else if (!zgram.at(i, j).is_zero()) {
            Json rep = label_json(sd, basis.comps[c], t);
            rep["mismatch"] = "orthogonality";
            return rep;
          }
        }
      }
  }
  return Json();
}

Json check_sigma_laws(const ShapeData& sd, JackContext& ctx, int nmax) {
  for (const auto& [alpha, t] : labels_up_to(sd, nmax)) {
    const VPoly& z = ctx.zeta(alpha, t);
    for (int i = 1; i < sd.N; ++i) {
      if (alpha[i - 1] > alpha[i]) {
        Composition swapped = alpha;
        std::swap(swapped[i - 1], swapped[i]);
        const ScalarQk b = b_alpha(sd, alpha, t, i);
        // s_i zeta_alpha = b zeta_alpha + (1-b^2) zeta_{s_i alpha}
        VPoly rhs = z.scaled(b);
        rhs.axpy(ScalarQk(1) - b * b, ctx.zeta(swapped, t));
        if (act_simple_poly(sd, i, z) != rhs) {
          Json rep = label_json(sd, alpha, t);
          rep["law"] = "descent step";
          rep["i"] = i;
          return rep;
        }
        if (zeta_norm(sd, alpha, t) !=
            (ScalarQk(1) - b * b) * zeta_norm(sd, swapped, t)) {
          Json rep = label_json(sd, alpha, t);
          rep["law"] = "descent norm";
          rep["i"] = i;
          return rep;
        }
      } else if (alpha[i - 1] == alpha[i]) {
        const int bigI = rank_of(alpha, i);
        const SimpleAction& sa = sd.action[t][bigI - 1];
        const VPoly lhs = act_simple_poly(sd, i, z);
        bool ok = true;
        if (sa.kind == SimpleAction::SameRow) {
          ok = (lhs == z);
        } else if (sa.kind == SimpleAction::SameCol) {
          ok = (lhs == z.scaled(ScalarQk(-1)));
        } else {
          VPoly rhs = z.scaled(ScalarQk(sa.b));
          if (sa.b > 0) {
            rhs += ctx.zeta(alpha, sa.partner);
          } else {
            rhs.axpy(ScalarQk(1 - sa.b * sa.b), ctx.zeta(alpha, sa.partner));
          }
          ok = (lhs == rhs);
        }
        if (!ok) {
          Json rep = label_json(sd, alpha, t);
          rep["law"] = "repeated entry step";
          rep["i"] = i;
          return rep;
        }
      }
    }
  }
  return Json();
}

Json check_hook_identity(const ShapeData& sd) {
  const HookProducts hp = hook_products(sd.tau);
  if (hp.p1 * hp.p2 / hp.p3 != hp.hs)
    return Json{{"identity", "P1 P2 / P3 = Hs"}, {"tau", sd.tau.parts}};
  // the two supporting identities behind the minimal symmetric norm
  const auto [ds, ts] = min_symmetric_label(sd.tau);
  const int t0 = sd.index_of_word(ts.word());
  if (zeta_norm(sd, ds, t0) != norm0(sd, t0) * hp.p1 * hp.p2)
    return Json{{"identity", "zeta norm = norm0 P1 P2"}};
  Composition rev = ds;
  std::reverse(rev.begin(), rev.end());
  if (e_product(sd, 1, rev, t0) != hp.p3)
    return Json{{"identity", "E+(delta^R) = P3"}};
  return Json();
}

Json check_minimal_norms(const ShapeData& sd, JackContext& ctx) {
  const auto [ds, ts] = min_symmetric_label(sd.tau);
  const auto [da, ta] = min_antisymmetric_label(sd.tau);
  const int t0s = sd.index_of_word(ts.word());
  const int t0a = sd.index_of_word(ta.word());

  const ScalarQk hook_s = hook_norm_symmetric(sd.tau).value();
  const ScalarQk hook_a = hook_norm_antisymmetric(sd.tau).value();
  if (norm_symmetric(sd, ds, t0s) != hook_s)
    return Json{{"mismatch", "symmetric assembled vs hook"}, {"tau", sd.tau.parts}};
  if (norm_antisymmetric(sd, da, t0a) != hook_a)
    return Json{{"mismatch", "antisymmetric assembled vs hook"},
                {"tau", sd.tau.parts}};

  // polynomial construction and the contravariant oracle, when small
  const bool small = sd.N <= 4 && degree_of(ds) <= 6 && degree_of(da) <= 6;
  if (small) {
    const VPoly fs = f_symmetric(sd, ctx, ds, t0s);
    const VPoly fa = f_antisymmetric(sd, ctx, da, t0a);
    for (int i = 1; i < sd.N; ++i) {
      if (act_simple_poly(sd, i, fs) != fs)
        return Json{{"mismatch", "f^s not invariant"}, {"i", i}};
      if (act_simple_poly(sd, i, fa) != fa.scaled(ScalarQk(-1)))
        return Json{{"mismatch", "f^a not alternating"}, {"i", i}};
    }
    for (const auto& [a, u] : fs.terms())
      for (const auto& [tt, val] : u.coords())
        if (!val.is_kappa_free())
          return Json{{"mismatch", "f^s coefficient depends on kappa"}};
    if (contravariant_form(sd, fs, fs) != hook_s)
      return Json{{"mismatch", "symmetric oracle vs hook"}, {"tau", sd.tau.parts}};
    if (contravariant_form(sd, fa, fa) != hook_a)
      return Json{{"mismatch", "antisymmetric oracle vs hook"},
                  {"tau", sd.tau.parts}};
  }
  return Json();
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const Partition& tau, int nmax,
                                          size_t memo_budget) {
  const ShapeData sd(tau);
  JackContext ctx(sd, memo_budget);
  SuiteRunner runner{sd, nmax, memo_budget, {}};

  runner.run("rep_braid_relations", [&] { return check_braid(sd); });
  runner.run("rep_form_isometry", [&] { return check_isometry(sd); });
  runner.run("rep_jucys_murphy", [&] { return check_jucys_murphy(sd); });
  runner.run("op_commutators", [&] { return check_commutators(sd, nmax); });
  runner.run("op_dunkl_commute", [&] { return check_dunkl_commute(sd, nmax); });
  runner.run("op_cherednik_commute", [&] { return check_u_commute(sd, nmax); });
  runner.run("op_triangularity", [&] { return check_triangularity(sd, nmax); });
  runner.run("form_axioms", [&] { return check_form_axioms(sd, nmax); });
  runner.run("jack_eigen", [&] { return check_jack_eigen(sd, ctx, nmax); });
  runner.run("jack_triangular_oracle",
             [&] { return check_jack_oracle(sd, ctx, nmax); });
  runner.run("jack_orthogonality_norms",
             [&] { return check_jack_gram(sd, ctx, nmax); });
  runner.run("jack_reflection_laws", [&] { return check_sigma_laws(sd, ctx, nmax); });
  runner.run("hook_identity", [&] { return check_hook_identity(sd); });
  runner.run("minimal_norms", [&] { return check_minimal_norms(sd, ctx); });
  return runner.results;
}

}  // namespace vvjack
