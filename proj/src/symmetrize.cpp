#include "vvjack/symmetrize.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

void check_label_common(const ShapeData& sd, const Composition& lambda, int t0) {
  if (static_cast<int>(lambda.size()) != sd.N)
    throw Error("label: lambda length must be N");
  if (!is_weakly_decreasing(lambda)) throw Error("label: lambda must be a partition");
  if (t0 < 0 || t0 >= sd.dim()) throw Error("label: bad tableau index");
}

}  // namespace

void check_symmetric_label(const ShapeData& sd, const Composition& lambda, int t0) {
  check_label_common(sd, lambda, t0);
  if (!column_strict(floor_tableau(lambda, sd.tabs[t0])))
    throw NotColumnStrict("floor tableau of (" + composition_str(lambda) + ", " +
                          sd.tabs[t0].word() + ") is not column-strict");
  if (!is_cm_extremal(sd, t0, stabilizer(lambda)))
    throw NotColumnStrict("tableau is not the extremal orbit member");
}

void check_antisymmetric_label(const ShapeData& sd, const Composition& lambda, int t0) {
  check_label_common(sd, lambda, t0);
  if (!row_strict(floor_tableau(lambda, sd.tabs[t0])))
    throw NotRowStrict("floor tableau of (" + composition_str(lambda) + ", " +
                       sd.tabs[t0].word() + ") is not row-strict");
  if (!is_cm_extremal(sd, t0, stabilizer(lambda)))
    throw NotRowStrict("tableau is not the extremal orbit member");
}

namespace {

VPoly f_family(const ShapeData& sd, JackContext& ctx, const Composition& lambda,
               int t0, bool antisym) {
  const StabilizerIntervals H = stabilizer(lambda);
  const std::vector<int> orbit = orbit_tableaux(sd, t0, H);
  std::vector<BigQ> pweight;
  pweight.reserve(orbit.size());
  for (int t : orbit) {
    BigQ p(1);
    for (auto [a, b] : H.intervals)
      p *= antisym ? p1_product(sd, t, a, b) : p0_product(sd, t, a, b);
    pweight.push_back(p);
  }
  VPoly f;
  for (const Composition& alpha : orbit_compositions(lambda)) {
    const bool negate = antisym && (inv_count(alpha) % 2 == 1);
    for (size_t k = 0; k < orbit.size(); ++k) {
      ScalarQk c =
          ScalarQk(pweight[k]) * e_product(sd, antisym ? 1 : -1, alpha, orbit[k]);
      if (negate) c = -c;
      f.axpy(c, ctx.zeta(alpha, orbit[k]));
    }
  }
  return f;
}

ScalarQk norm_family(const ShapeData& sd, const Composition& lambda, int t0,
                     bool antisym) {
  const StabilizerIntervals H = stabilizer(lambda);
  const int t1 = find_opposite_extremal(sd, t0, H);
  const ScalarQk unorm =
      group_norm(sd, antisym ? PKind::P1 : PKind::P0, t0, t1, H);
  Composition lambda_rev = lambda;
  std::reverse(lambda_rev.begin(), lambda_rev.end());
  const ScalarQk erev = e_product(sd, antisym ? -1 : 1, lambda_rev, t0);
  const ScalarQk nfac =
      ScalarQk(bigq(factorial(static_cast<unsigned>(sd.N)), H.order()));
  return nfac * unorm / (erev * norm0(sd, t0)) * zeta_norm(sd, lambda, t0);
}

}  // namespace

VPoly f_symmetric(const ShapeData& sd, JackContext& ctx, const Composition& lambda,
                  int t0) {
  check_symmetric_label(sd, lambda, t0);
  return f_family(sd, ctx, lambda, t0, false);
}

VPoly f_antisymmetric(const ShapeData& sd, JackContext& ctx,
                      const Composition& lambda, int t0) {
  check_antisymmetric_label(sd, lambda, t0);
  return f_family(sd, ctx, lambda, t0, true);
}

ScalarQk norm_symmetric(const ShapeData& sd, const Composition& lambda, int t0) {
  check_symmetric_label(sd, lambda, t0);
  return norm_family(sd, lambda, t0, false);
}

ScalarQk norm_antisymmetric(const ShapeData& sd, const Composition& lambda, int t0) {
  check_antisymmetric_label(sd, lambda, t0);
  return norm_family(sd, lambda, t0, true);
}

HookProducts hook_products(const Partition& tau) {
  const int L = tau.length();
  HookProducts hp{ScalarQk(1), ScalarQk(1), ScalarQk(1), ScalarQk(1)};
  for (int i = 2; i <= L; ++i)
    for (int j = 1; j <= tau.parts[i - 1]; ++j)
      hp.p1 *= pochhammer(ScalarQk::linear(BigQ(1), BigQ(j - i)), i - 1);
  for (int i = 1; i <= L; ++i)
    for (int j = i + 1; j <= L; ++j)
      for (int j1 = 1; j1 <= tau.parts[i - 1]; ++j1)
        for (int j2 = 1; j2 <= tau.parts[j - 1]; ++j2) {
          const BigQ cdiff(j2 - j1 - j + i);
          for (int r = 1; r <= j - i; ++r) {
            const KPoly den = KPoly::linear(BigQ(r), cdiff);
            const KPoly num =
                KPoly::linear(BigQ(r), cdiff + 1) * KPoly::linear(BigQ(r), cdiff - 1);
            hp.p2 *= ScalarQk(num, den * den);
          }
          const KPoly den3 = KPoly::linear(BigQ(j - i), cdiff);
          hp.p3 *= ScalarQk(KPoly::linear(BigQ(j - i), cdiff + 1), den3);
        }
  for (const Node& nd : hook_data(tau))
    hp.hs *= pochhammer(ScalarQk::linear(BigQ(1), BigQ(-nd.hook)), nd.leg);
  return hp;
}

BigQ content_norm(const Rsyt& T) {
  BigQ nrm(1);
  const int n = T.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int diff = T.content(i) - T.content(j);
      if (diff <= -2) nrm *= bigq(diff * diff - 1, diff * diff);
    }
  return nrm;
}

ScalarQk HookNormFactored::value() const {
  ScalarQk out{prefactor};
  for (auto [hook, len] : factors) {
    const BigQ slope = antisymmetric ? BigQ(hook) : BigQ(-hook);
    out *= pochhammer(ScalarQk::linear(BigQ(1), slope), len);
  }
  return out;
}

HookNormFactored hook_norm_symmetric(const Partition& tau) {
  const auto [lambda, ts] = min_symmetric_label(tau);
  HookNormFactored out;
  out.antisymmetric = false;
  BigInt denom(1);
  for (int p : tau.parts) denom *= factorial(static_cast<unsigned>(p));
  out.prefactor =
      bigq(factorial(static_cast<unsigned>(tau.n())), denom) * content_norm(ts);
  for (const Node& nd : hook_data(tau))
    if (nd.leg > 0) out.factors.emplace_back(nd.hook, nd.leg);
  return out;
}

HookNormFactored hook_norm_antisymmetric(const Partition& tau) {
  const auto [lambda, ta] = min_antisymmetric_label(tau);
  HookNormFactored out;
  out.antisymmetric = true;
  BigInt denom(1);
  for (int p : tau.conjugate()) denom *= factorial(static_cast<unsigned>(p));
  out.prefactor =
      bigq(factorial(static_cast<unsigned>(tau.n())), denom) * content_norm(ta);
  for (const Node& nd : hook_data(tau))
    if (nd.arm > 0) out.factors.emplace_back(nd.hook, nd.arm);
  return out;
}

MinimalPoly min_symmetric(const ShapeData& sd, JackContext& ctx, bool build_poly) {
  MinimalPoly out;
  auto [lambda, ts] = min_symmetric_label(sd.tau);
  out.lambda = std::move(lambda);
  out.t0 = sd.index_of_word(ts.word());
  out.norm = hook_norm_symmetric(sd.tau);
  if (build_poly) out.poly = f_symmetric(sd, ctx, out.lambda, out.t0);
  return out;
}

MinimalPoly min_antisymmetric(const ShapeData& sd, JackContext& ctx, bool build_poly) {
  MinimalPoly out;
  auto [lambda, ta] = min_antisymmetric_label(sd.tau);
  out.lambda = std::move(lambda);
  out.t0 = sd.index_of_word(ta.word());
  out.norm = hook_norm_antisymmetric(sd.tau);
  if (build_poly) out.poly = f_antisymmetric(sd, ctx, out.lambda, out.t0);
  return out;
}

ScanReport singular_scan(const ShapeData& sd, int degree_max,
                         const std::vector<BigQ>& candidates, int workers) {
  // symbolic Gram matrices once per degree, evaluated per candidate
  std::vector<QkMatrix> grams;
  grams.reserve(degree_max + 1);
  for (int d = 0; d <= degree_max; ++d) grams.push_back(gram_matrix(sd, d));

  ScanReport report;
  report.cells.resize(candidates.size() * static_cast<size_t>(degree_max + 1));
  auto run_candidate = [&](size_t ci) {
    for (int d = 0; d <= degree_max; ++d) {
      ScanCell cell;
      cell.kappa0 = candidates[ci];
      cell.degree = d;
      const QkMatrix& g = grams[d];
      std::vector<std::vector<BigQ>> m(g.rows, std::vector<BigQ>(g.cols));
      try {
        for (int r = 0; r < g.rows; ++r)
          for (int c = 0; c < g.cols; ++c) m[r][c] = g.at(r, c).eval(cell.kappa0);
        cell.corank = g.rows - rank_of_matrix(std::move(m));
      } catch (const PoleAtKappa&) {
        cell.pole = true;
      }
      report.cells[ci * (degree_max + 1) + d] = std::move(cell);
    }
  };

  if (workers <= 1 || candidates.size() <= 1) {
    for (size_t ci = 0; ci < candidates.size(); ++ci) run_candidate(ci);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    const int nthreads = std::min<int>(workers, static_cast<int>(candidates.size()));
    for (int w = 0; w < nthreads; ++w)
      pool.emplace_back([&] {
        while (true) {
          const size_t ci = next.fetch_add(1);
          if (ci >= candidates.size()) break;
          run_candidate(ci);
        }
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

std::vector<BigQ> default_candidates(const Partition& tau, int ncap) {
  std::set<BigQ> set;
  for (const Node& nd : hook_data(tau)) {
    const int m = nd.hook;
    if (m < 2) continue;
    for (int n = -ncap; n <= ncap; ++n) {
      if (n == 0 || n % m == 0) continue;
      set.insert(bigq(n, m));
    }
  }
  return {set.begin(), set.end()};
}

}  // namespace vvjack
