#include "vvjack/irrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vvjack/errors.hpp"

namespace vvjack {

ShapeData::ShapeData(const Partition& shape) : tau(shape), N(shape.n()) {
  tabs = enumerate_rsyt(tau);
  const int d = dim();
  content.resize(d);
  norm0_values.resize(d);
  action.assign(d, {});
  for (int t = 0; t < d; ++t) {
    index_by_word[tabs[t].word()] = t;
    content[t].assign(N + 1, 0);
    for (int e = 1; e <= N; ++e) content[t][e] = tabs[t].content(e);
  }
  for (int t = 0; t < d; ++t) {
    // content-vector norm
    BigQ nrm(1);
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        const int diff = content[t][i] - content[t][j];
        if (diff <= -2) nrm *= bigq(diff * diff - 1, diff * diff);
      }
    norm0_values[t] = nrm;
  }
  for (int t = 0; t < d; ++t) {
    action[t].resize(std::max(N - 1, 0));
    for (int i = 1; i < N; ++i) {
      SimpleAction& sa = action[t][i - 1];
      const Rsyt& T = tabs[t];
      if (T.row_of[i] == T.row_of[i + 1]) {
        sa.kind = SimpleAction::SameRow;
        sa.partner = -1;
      } else if (T.col_of[i] == T.col_of[i + 1]) {
        sa.kind = SimpleAction::SameCol;
        sa.partner = -1;
      } else {
        sa.kind = SimpleAction::Mixed;
        sa.b = bigq(1, content[t][i] - content[t][i + 1]);
        Rsyt swapped = T;
        std::swap(swapped.rows[T.row_of[i] - 1][T.col_of[i] - 1],
                  swapped.rows[T.row_of[i + 1] - 1][T.col_of[i + 1] - 1]);
        swapped = Rsyt::from_rows(swapped.rows);
        auto it = index_by_word.find(swapped.word());
        if (it == index_by_word.end()) throw Error("swap left the tableau set");
        sa.partner = it->second;
      }
    }
  }
}

int ShapeData::index_of_word(const std::string& word) const {
  auto it = index_by_word.find(word);
  return it == index_by_word.end() ? -1 : it->second;
}

ModuleVector act_simple(const ShapeData& sd, int i, const ModuleVector& v) {
  if (i < 1 || i >= sd.N) throw Error("act_simple: index out of range");
  ModuleVector out;
  for (const auto& [t, a] : v.coords()) {
    const SimpleAction& sa = sd.action[t][i - 1];
    switch (sa.kind) {
      case SimpleAction::SameRow:
        out.add(t, a);
        break;
      case SimpleAction::SameCol:
        out.add(t, -a);
        break;
      case SimpleAction::Mixed: {
        out.add(t, a * ScalarQk(sa.b));
        if (sa.b > 0) {
          out.add(sa.partner, a);  // s_i v_T = b v_T + v_{s_iT}
        } else {
          out.add(sa.partner, a * ScalarQk(1 - sa.b * sa.b));
        }
        break;
      }
    }
  }
  return out;
}

ModuleVector act_perm(const ShapeData& sd, const Perm& w, const ModuleVector& v) {
  ModuleVector out = v;
  for (int i : reduced_word(w)) out = act_simple(sd, i, out);
  return out;
}

ModuleVector jm_apply(const ShapeData& sd, int i, const ModuleVector& v) {
  ModuleVector out;
  for (int j = i + 1; j <= sd.N; ++j)
    out += act_perm(sd, perm_transposition(sd.N, i, j), v);
  return out;
}

BigQ norm0_value(const ShapeData& sd, int t) { return sd.norm0_values[t]; }

ScalarQk norm0(const ShapeData& sd, int t) { return ScalarQk(sd.norm0_values[t]); }

ScalarQk form0(const ShapeData& sd, const ModuleVector& u, const ModuleVector& v) {
  ScalarQk out;
  const auto& a = u.coords();
  const auto& b = v.coords();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      out += ia->second * ib->second * ScalarQk(sd.norm0_values[ia->first]);
      ++ia;
      ++ib;
    }
  }
  return out;
}

namespace {

void require_cm_distinct(const ShapeData& sd, int t, int a, int b) {
  for (int i = a; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j)
      if (sd.tabs[t].col_of[i] == sd.tabs[t].col_of[j])
        throw ConditionViolated("entries " + std::to_string(a) + ".." +
                                std::to_string(b) + " not column-distinct");
}

void require_rw_distinct(const ShapeData& sd, int t, int a, int b) {
  for (int i = a; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j)
      if (sd.tabs[t].row_of[i] == sd.tabs[t].row_of[j])
        throw ConditionViolated("entries " + std::to_string(a) + ".." +
                                std::to_string(b) + " not row-distinct");
}

}  // namespace

BigQ p0_product(const ShapeData& sd, int t, int a, int b) {
  require_cm_distinct(sd, t, a, b);
  BigQ p(1);
  for (int i = a; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j) {
      if (sd.tabs[t].col_of[i] < sd.tabs[t].col_of[j]) {
        const int d = sd.content[t][j] - sd.content[t][i];
        p *= bigq(d, 1 + d);
      }
    }
  return p;
}

BigQ p1_product(const ShapeData& sd, int t, int a, int b) {
  require_rw_distinct(sd, t, a, b);
  BigQ p(1);
  for (int i = a; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j) {
      if (sd.tabs[t].col_of[i] < sd.tabs[t].col_of[j]) {
        const int d = sd.content[t][j] - sd.content[t][i];
        p *= bigq(d, 1 - d);
      }
    }
  return p;
}

std::vector<int> orbit_tableaux(const ShapeData& sd, int t0,
                                const StabilizerIntervals& H) {
  std::set<int> seen{t0};
  std::vector<int> stack{t0};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (auto [a, b] : H.intervals) {
      for (int i = a; i < b; ++i) {
        const SimpleAction& sa = sd.action[t][i - 1];
        if (sa.kind == SimpleAction::Mixed && !seen.count(sa.partner)) {
          seen.insert(sa.partner);
          stack.push_back(sa.partner);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_cm_extremal(const ShapeData& sd, int t, const StabilizerIntervals& H) {
  for (auto [a, b] : H.intervals)
    for (int i = a; i < b; ++i)
      if (sd.tabs[t].col_of[i] < sd.tabs[t].col_of[i + 1]) return false;
  return true;
}

int find_opposite_extremal(const ShapeData& sd, int t0, const StabilizerIntervals& H) {
  for (int t : orbit_tableaux(sd, t0, H)) {
    bool ok = true;
    for (auto [a, b] : H.intervals) {
      for (int i = a; i < b && ok; ++i)
        if (sd.tabs[t].row_of[i] < sd.tabs[t].row_of[i + 1]) ok = false;
      if (!ok) break;
    }
    if (ok) return t;
  }
  throw Error("no rw-extremal tableau in orbit");
}

ModuleVector invariant_vector(const ShapeData& sd, int t0,
                              const StabilizerIntervals& H) {
  for (auto [a, b] : H.intervals) {
    try {
      require_cm_distinct(sd, t0, a, b);
    } catch (const ConditionViolated& e) {
      throw NotColumnDistinct(e.what());
    }
  }
  if (!is_cm_extremal(sd, t0, H))
    throw NotColumnDistinct("base tableau is not the cm-decreasing extremal");
  ModuleVector f;
  for (int t : orbit_tableaux(sd, t0, H)) {
    BigQ coef(1);
    for (auto [a, b] : H.intervals) coef *= p0_product(sd, t, a, b);
    f.add(t, ScalarQk(coef));
  }
  return f;
}

ModuleVector antisymmetric_vector(const ShapeData& sd, int t0,
                                  const StabilizerIntervals& H) {
  for (auto [a, b] : H.intervals) {
    try {
      require_rw_distinct(sd, t0, a, b);
    } catch (const ConditionViolated& e) {
      throw NotRowDistinct(e.what());
    }
  }
  if (!is_cm_extremal(sd, t0, H))
    throw NotRowDistinct("base tableau is not the cm-decreasing extremal");
  ModuleVector f;
  for (int t : orbit_tableaux(sd, t0, H)) {
    BigQ coef(1);
    for (auto [a, b] : H.intervals) coef *= p1_product(sd, t, a, b);
    f.add(t, ScalarQk(coef));
  }
  return f;
}

namespace {

// count w in S_[a,b] fixing v_{t0} (exactly, or up to sign)
int orbit_stabilizer_order(const ShapeData& sd, int t0, int a, int b,
                           bool up_to_sign) {
  std::vector<int> window(b - a + 1);
  std::iota(window.begin(), window.end(), a);
  const ModuleVector v = ModuleVector::basis(t0);
  int count = 0;
  std::sort(window.begin(), window.end());
  do {
    Perm w = perm_identity(sd.N);
    for (int k = 0; k < b - a + 1; ++k) w[a + k - 1] = window[k];
    const ModuleVector wv = act_perm(sd, w, v);
    if (wv == v) ++count;
    else if (up_to_sign && wv == -v) ++count;
  } while (std::next_permutation(window.begin(), window.end()));
  return count;
}

}  // namespace

ScalarQk group_norm(const ShapeData& sd, PKind kind, int t0, int t1,
                    const StabilizerIntervals& H) {
  BigQ out = sd.norm0_values[t0];
  for (auto [a, b] : H.intervals) {
    const int n0 = orbit_stabilizer_order(sd, t0, a, b, kind == PKind::P1);
    BigQ p = (kind == PKind::P0) ? p0_product(sd, t1, a, b) : p1_product(sd, t1, a, b);
    if (kind == PKind::P1 && p < 0) p = -p;
    out *= bigq(factorial(static_cast<unsigned>(b - a + 1)), BigInt(n0)) * p;
  }
  return ScalarQk(out);
}

}  // namespace vvjack
