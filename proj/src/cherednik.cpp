#include "vvjack/cherednik.hpp"

#include <algorithm>
#include <functional>

#include "vvjack/errors.hpp"

namespace vvjack {

int VPoly::degree() const {
  int d = -1;
  for (const auto& [a, u] : t_) d = std::max(d, degree_of(a));
  return d;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  for (const auto& [a, u] : o.t_) add_term(a, -u);
  return *this;
}

VPoly VPoly::scaled(const ScalarQk& s) const {
  VPoly f;
  if (s.is_zero()) return f;
  for (const auto& [a, u] : t_) f.t_.emplace(a, u.scaled(s));
  return f;
}

void VPoly::axpy(const ScalarQk& s, const VPoly& o) {
  if (s.is_zero()) return;
  for (const auto& [a, u] : o.t_) add_term(a, u.scaled(s));
}

VPoly VPoly::homogeneous_component(int d) const {
  VPoly f;
  for (const auto& [a, u] : t_)
    if (degree_of(a) == d) f.t_.emplace(a, u);
  return f;
}

VPoly act_simple_poly(const ShapeData& sd, int i, const VPoly& f) {
  VPoly out;
  for (const auto& [alpha, u] : f.terms()) {
    Composition swapped = alpha;
    std::swap(swapped[i - 1], swapped[i]);
    out.add_term(swapped, act_simple(sd, i, u));
  }
  return out;
}

VPoly group_act(const ShapeData& sd, const Perm& w, const VPoly& f) {
  VPoly out = f;
  for (int i : reduced_word(w)) out = act_simple_poly(sd, i, out);
  return out;
}

VPoly divided_difference(int i, int j, const VPoly& f) {
  VPoly out;
  for (const auto& [alpha, u] : f.terms()) {
    const int ai = alpha[i - 1], aj = alpha[j - 1];
    if (ai == aj) continue;
    if (ai > aj) {
      Composition beta = alpha;
      for (int s = 0; s < ai - aj; ++s) {
        beta[i - 1] = ai - 1 - s;
        beta[j - 1] = aj + s;
        out.add_term(beta, u);
      }
    } else {
      Composition beta = alpha;
      for (int s = 0; s < aj - ai; ++s) {
        beta[j - 1] = aj - 1 - s;
        beta[i - 1] = ai + s;
        out.add_term(beta, -u);
      }
    }
  }
  return out;
}

VPoly mult_x(int i, const VPoly& f) {
  VPoly out;
  for (const auto& [alpha, u] : f.terms()) {
    Composition beta = alpha;
    ++beta[i - 1];
    out.add_term(beta, u);
  }
  return out;
}

VPoly partial_derivative(int i, const VPoly& f) {
  VPoly out;
  for (const auto& [alpha, u] : f.terms()) {
    if (alpha[i - 1] == 0) continue;
    Composition beta = alpha;
    --beta[i - 1];
    out.add_term(beta, u.scaled(ScalarQk(alpha[i - 1])));
  }
  return out;
}

VPoly dunkl(const ShapeData& sd, int i, const VPoly& f) {
  const ScalarQk kappa = ScalarQk::kappa();
  VPoly out = partial_derivative(i, f);
  // the (i,j) transposition acts on the V_tau coefficient, the divided
  // difference on the monomial
  for (const auto& [alpha, u] : f.terms()) {
    for (int j = 1; j <= sd.N; ++j) {
      if (j == i) continue;
      const int ai = alpha[i - 1], aj = alpha[j - 1];
      if (ai == aj) continue;
      const ModuleVector tu =
          act_perm(sd, perm_transposition(sd.N, i, j), u).scaled(kappa);
      Composition beta = alpha;
      if (ai > aj) {
        for (int s = 0; s < ai - aj; ++s) {
          beta[i - 1] = ai - 1 - s;
          beta[j - 1] = aj + s;
          out.add_term(beta, tu);
        }
      } else {
        for (int s = 0; s < aj - ai; ++s) {
          beta[j - 1] = aj - 1 - s;
          beta[i - 1] = ai + s;
          out.add_term(beta, -tu);
        }
      }
    }
  }
  return out;
}

VPoly cherednik_u(const ShapeData& sd, int i, const VPoly& f) {
  VPoly out = dunkl(sd, i, mult_x(i, f));
  const ScalarQk kappa = ScalarQk::kappa();
  for (int j = 1; j < i; ++j)
    out.axpy(-kappa, group_act(sd, perm_transposition(sd.N, i, j), f));
  return out;
}

DunklTower::DunklTower(const ShapeData& sd, VPoly base) : sd_(sd) {
  const int n = sd.N;
  memo_.emplace(Composition(n, 0), std::move(base));
}

const VPoly& DunklTower::apply(const Composition& beta) {
  auto it = memo_.find(beta);
  if (it != memo_.end()) return it->second;
  int i = 0;
  while (beta[i] == 0) ++i;
  Composition prev = beta;
  --prev[i];
  VPoly d = dunkl(sd_, i + 1, apply(prev));
  return memo_.emplace(beta, std::move(d)).first->second;
}

ModuleVector DunklTower::constant_term(const Composition& beta) {
  return apply(beta).coeff(Composition(beta.size(), 0));
}

namespace {

struct TowerItem {
  const Composition* alpha;
  const ModuleVector* payload;
};

// Coordinate-major DFS over the prefix tree of the target exponents, applying
// D_i incrementally so each distinct prefix costs one Dunkl application and
// only one polynomial per tree level stays alive.
template <typename Sink>
void tower_dfs(const ShapeData& sd, int coord, const VPoly& current,
               const std::vector<TowerItem>& items, size_t lo, size_t hi,
               Sink&& sink) {
  const int n = sd.N;
  if (coord == n) {
    // a single exponent value remains; current is already D^alpha g
    const ModuleVector m = current.coeff(Composition(n, 0));
    for (size_t k = lo; k < hi; ++k) sink(items[k], m);
    return;
  }
  size_t k = lo;
  int level = 0;
  VPoly work = current;
  while (k < hi) {
    const int v = (*items[k].alpha)[coord - 1];
    while (level < v) {
      work = dunkl(sd, coord, work);
      ++level;
    }
    size_t next = k;
    while (next < hi && (*items[next].alpha)[coord - 1] == v) ++next;
    if (coord == n - 1) {
      // the last coordinate is forced by homogeneity; finish here
      VPoly rest = work;
      int rlevel = 0;
      const int vn = (*items[k].alpha)[n - 1];
      while (rlevel < vn) {
        rest = dunkl(sd, n, rest);
        ++rlevel;
      }
      const ModuleVector m = rest.coeff(Composition(n, 0));
      for (size_t j = k; j < next; ++j) sink(items[j], m);
    } else {
      tower_dfs(sd, coord + 1, work, items, k, next, sink);
    }
    k = next;
  }
}

// Pairs every target (alpha, payload) of one homogeneous degree with
// (D^alpha g)(0); items must be lex-sorted by alpha.
template <typename Sink>
void constant_terms_for(const ShapeData& sd, const VPoly& g,
                        const std::vector<TowerItem>& items, Sink&& sink) {
  if (items.empty()) return;
  if (sd.N == 1) {
    VPoly work = g;
    for (int v = 0; v < (*items[0].alpha)[0]; ++v) work = dunkl(sd, 1, work);
    const ModuleVector m = work.coeff(Composition(1, 0));
    for (const auto& it : items) sink(it, m);
    return;
  }
  tower_dfs(sd, 1, g, items, 0, items.size(), sink);
}

}  // namespace

ScalarQk contravariant_form(const ShapeData& sd, const VPoly& f, const VPoly& g) {
  // group both sides by homogeneous degree; cross degrees pair to zero
  std::map<int, VPoly> fparts, gparts;
  for (const auto& [a, u] : f.terms()) fparts[degree_of(a)].add_term(a, u);
  for (const auto& [a, u] : g.terms()) gparts[degree_of(a)].add_term(a, u);
  ScalarQk out;
  for (const auto& [d, fd] : fparts) {
    auto it = gparts.find(d);
    if (it == gparts.end()) continue;
    std::vector<TowerItem> items;
    items.reserve(fd.terms().size());
    for (const auto& [alpha, u] : fd.terms()) items.push_back({&alpha, &u});
    constant_terms_for(sd, it->second, items,
                       [&](const TowerItem& item, const ModuleVector& m) {
                         out += form0(sd, *item.payload, m);
                       });
  }
  return out;
}

QkMatrix QkMatrix::mul(const QkMatrix& o) const {
  QkMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const ScalarQk& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const ScalarQk& y = o.at(k, j);
        if (y.is_zero()) continue;
        out.at(i, j) += x * y;
      }
    }
  return out;
}

QkMatrix QkMatrix::transpose() const {
  QkMatrix out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

QkMatrix operator_matrix(const ShapeData& sd, const MonomialBasis& bin,
                         const MonomialBasis& bout, int out_degree,
                         const std::function<VPoly(const VPoly&)>& op) {
  std::map<Composition, int> out_index;
  for (size_t c = 0; c < bout.comps.size(); ++c)
    out_index[bout.comps[c]] = static_cast<int>(c);
  QkMatrix m(bout.size(), bin.size());
  for (size_t c = 0; c < bin.comps.size(); ++c)
    for (int t = 0; t < bin.ntabs; ++t) {
      const VPoly img = op(VPoly::monomial(bin.comps[c], ModuleVector::basis(t)));
      const int col = bin.index(static_cast<int>(c), t);
      for (const auto& [gamma, u] : img.terms()) {
        if (degree_of(gamma) != out_degree) continue;
        const int rc = out_index.at(gamma);
        for (const auto& [s, val] : u.coords()) m.at(bout.index(rc, s), col) = val;
      }
    }
  return m;
}

MonomialBasis::MonomialBasis(const ShapeData& sd, int degree)
    : comps(compositions_of_degree(sd.N, degree)), ntabs(sd.dim()) {}

QkMatrix gram_matrix(const ShapeData& sd, int degree) {
  const MonomialBasis basis(sd, degree);
  const int ncomp = static_cast<int>(basis.comps.size());
  QkMatrix gram(basis.size(), basis.size());
  for (int cb = 0; cb < ncomp; ++cb) {
    for (int s = 0; s < basis.ntabs; ++s) {
      DunklTower tower(sd, VPoly::monomial(basis.comps[cb], ModuleVector::basis(s)));
      const int col = basis.index(cb, s);
      for (int ca = 0; ca < ncomp; ++ca) {
        const ModuleVector m = tower.constant_term(basis.comps[ca]);
        for (const auto& [t, val] : m.coords())
          gram.at(basis.index(ca, t), col) = val * ScalarQk(sd.norm0_values[t]);
      }
    }
  }
  return gram;
}

int rank_of_matrix(std::vector<std::vector<BigQ>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const BigQ inv = 1 / m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const BigQ factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace vvjack
