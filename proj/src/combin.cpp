#include "vvjack/combin.hpp"

#include <algorithm>
#include <numeric>

#include "vvjack/errors.hpp"

namespace vvjack {

int degree_of(const Composition& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

Composition sorted_desc(const Composition& a) {
  Composition s = a;
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

bool is_weakly_decreasing(const Composition& a) {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i - 1] < a[i]) return false;
  return true;
}

Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Perm perm_inverse(const Perm& w) {
  Perm inv(w.size());
  for (size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Perm perm_transposition(int n, int i, int j) {
  Perm w = perm_identity(n);
  std::swap(w[i - 1], w[j - 1]);
  return w;
}

int perm_sign(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm p = w;
  while (true) {
    int j = -1;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        j = static_cast<int>(i);
        break;
      }
    }
    if (j < 0) break;
    std::swap(p[j], p[j + 1]);  // p <- p ∘ s_{j+1}
    word.push_back(j + 1);
  }
  return word;
}

Composition perm_apply(const Perm& w, const Composition& a) {
  const Perm inv = perm_inverse(w);
  Composition out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[inv[i] - 1];
  return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i - 1] < parts[i]))
      throw Error("not a partition: " + str());
  }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::max_hook() const {
  return parts.empty() ? 0 : parts[0] + length() - 1;
}

std::vector<int> Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<int> conj(parts[0], 0);
  for (int m = 1; m <= parts[0]; ++m)
    for (int p : parts)
      if (p >= m) ++conj[m - 1];
  return conj;
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  return Partition(composition_parse(text));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Node> hook_data(const Partition& tau) {
  const auto conj = tau.conjugate();
  std::vector<Node> nodes;
  for (int i = 1; i <= tau.length(); ++i) {
    for (int j = 1; j <= tau.parts[i - 1]; ++j) {
      Node nd;
      nd.row = i;
      nd.col = j;
      nd.arm = tau.parts[i - 1] - j;
      nd.leg = conj[j - 1] - i;
      nd.hook = nd.arm + nd.leg + 1;
      nodes.push_back(nd);
    }
  }
  return nodes;
}

BigInt hook_product(const Partition& tau) {
  BigInt p(1);
  for (const auto& nd : hook_data(tau)) p *= nd.hook;
  return p;
}

std::vector<int> Rsyt::content_vector() const {
  std::vector<int> c(n());
  for (int i = 1; i <= n(); ++i) c[i - 1] = content(i);
  return c;
}

std::string Rsyt::word() const {
  std::string out;
  for (const auto& row : rows)
    for (int e : row) {
      if (!out.empty()) out += ",";
      out += std::to_string(e);
    }
  return out;
}

Rsyt Rsyt::from_rows(std::vector<std::vector<int>> rows) {
  Rsyt t;
  t.rows = std::move(rows);
  int n = 0;
  for (const auto& r : t.rows) n += static_cast<int>(r.size());
  t.row_of.assign(n + 1, 0);
  t.col_of.assign(n + 1, 0);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      int e = t.rows[i][j];
      if (e < 1 || e > n || t.row_of[e] != 0)
        throw Error("invalid tableau filling");
      t.row_of[e] = static_cast<int>(i) + 1;
      t.col_of[e] = static_cast<int>(j) + 1;
    }
  }
  return t;
}

std::vector<Rsyt> enumerate_rsyt(const Partition& tau) {
  const int n = tau.n();
  const int nrows = tau.length();
  std::vector<std::vector<int>> grid(nrows);
  for (int i = 0; i < nrows; ++i) grid[i].assign(tau.parts[i], 0);
  std::vector<int> filled(nrows, 0);  // cells filled so far in each row
  std::vector<Rsyt> out;

  // place n, n-1, ..., 1; each entry goes to the next free cell of some row
  // whose upper neighbor is already filled, which keeps rows and columns
  // decreasing
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry == 0) {
      out.push_back(Rsyt::from_rows(grid));
      return;
    }
    for (int r = 0; r < nrows; ++r) {
      const int c = filled[r];
      if (c >= tau.parts[r]) continue;
      if (r > 0 && filled[r - 1] <= c) continue;
      grid[r][c] = entry;
      ++filled[r];
      self(self, entry - 1);
      --filled[r];
      grid[r][c] = 0;
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), [](const Rsyt& a, const Rsyt& b) {
    return a.word() < b.word();
  });
  return out;
}

int rank_of(const Composition& a, int i) {
  const int ai = a[i - 1];
  int r = 0;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] > ai) ++r;
  for (int j = 0; j < i; ++j)
    if (a[j] == ai) ++r;
  return r;
}

std::vector<int> rank_vector(const Composition& a) {
  std::vector<int> r(a.size());
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) r[i - 1] = rank_of(a, i);
  return r;
}

Perm sorting_permutation(const Composition& a) {
  Perm w(a.size());
  for (int i = 1; i <= static_cast<int>(a.size()); ++i)
    w[rank_of(a, i) - 1] = i;
  return w;
}

namespace {
// strict dominance on equal-degree vectors: a ≺ b
bool dominates_strict(const Composition& b, const Composition& a) {
  if (a == b) return false;
  int pa = 0, pb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}
}  // namespace

bool dominance_lt(const Composition& a, const Composition& b) {
  if (a.size() != b.size())
    throw IncomparableInput("dominance: length mismatch");
  if (degree_of(a) != degree_of(b))
    throw IncomparableInput("dominance: degree mismatch");
  const Composition ap = sorted_desc(a), bp = sorted_desc(b);
  if (ap != bp) return dominates_strict(bp, ap);
  return dominates_strict(b, a);
}

Composition phi(const Composition& a) {
  Composition out(a.size());
  for (size_t i = 0; i + 1 < a.size(); ++i) out[i] = a[i + 1];
  out[a.size() - 1] = a[0] + 1;
  return out;
}

Composition phi_inverse(const Composition& a) {
  if (a.empty() || a.back() < 1) throw Error("phi_inverse needs last entry >= 1");
  Composition out(a.size());
  out[0] = a.back() - 1;
  for (size_t i = 1; i < a.size(); ++i) out[i] = a[i - 1];
  return out;
}

long inv_count(const Composition& a) {
  long inv = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] < a[j]) ++inv;
  return inv;
}

BigInt StabilizerIntervals::order() const {
  BigInt o(1);
  for (auto [a, b] : intervals) o *= factorial(static_cast<unsigned>(b - a + 1));
  return o;
}

bool StabilizerIntervals::contains_index(int i) const {
  for (auto [a, b] : intervals)
    if (a <= i && i < b) return true;
  return false;
}

StabilizerIntervals stabilizer(const Composition& lambda) {
  if (!is_weakly_decreasing(lambda))
    throw Error("stabilizer expects a weakly decreasing composition");
  StabilizerIntervals st;
  const int n = static_cast<int>(lambda.size());
  int a = 1;
  for (int i = 2; i <= n + 1; ++i) {
    if (i <= n && lambda[i - 1] == lambda[a - 1]) continue;
    if (i - 1 > a) st.intervals.emplace_back(a, i - 1);
    a = i;
  }
  return st;
}

std::pair<Composition, Rsyt> min_symmetric_label(const Partition& tau) {
  const int n = tau.n();
  std::vector<std::vector<int>> rows(tau.length());
  int next = n;
  for (int i = 0; i < tau.length(); ++i)
    for (int j = 0; j < tau.parts[i]; ++j) rows[i].push_back(next--);
  Rsyt t = Rsyt::from_rows(std::move(rows));
  Composition lambda(n);
  for (int e = 1; e <= n; ++e) lambda[e - 1] = t.row_of[e] - 1;
  return {lambda, t};
}

std::pair<Composition, Rsyt> min_antisymmetric_label(const Partition& tau) {
  const int n = tau.n();
  const auto conj = tau.conjugate();
  std::vector<std::vector<int>> rows(tau.length());
  for (int i = 0; i < tau.length(); ++i) rows[i].assign(tau.parts[i], 0);
  int next = n;
  const int ncols = tau.parts.empty() ? 0 : tau.parts[0];
  for (int j = 0; j < ncols; ++j)
    for (int i = 0; i < conj[j]; ++i) rows[i][j] = next--;
  Rsyt t = Rsyt::from_rows(std::move(rows));
  Composition lambda(n);
  for (int e = 1; e <= n; ++e) lambda[e - 1] = t.col_of[e] - 1;
  return {lambda, t};
}

std::vector<std::vector<int>> floor_tableau(const Composition& lambda, const Rsyt& T) {
  std::vector<std::vector<int>> grid(T.rows.size());
  for (size_t i = 0; i < T.rows.size(); ++i) grid[i].assign(T.rows[i].size(), 0);
  for (int e = 1; e <= T.n(); ++e)
    grid[T.row_of[e] - 1][T.col_of[e] - 1] = lambda[e - 1];
  return grid;
}

bool column_strict(const std::vector<std::vector<int>>& grid) {
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = 0; j < grid[i].size(); ++j) {
      if (j > 0 && grid[i][j - 1] > grid[i][j]) return false;
      if (i > 0 && grid[i - 1][j] >= grid[i][j]) return false;
    }
  return true;
}

bool row_strict(const std::vector<std::vector<int>>& grid) {
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = 0; j < grid[i].size(); ++j) {
      if (j > 0 && grid[i][j - 1] >= grid[i][j]) return false;
      if (i > 0 && grid[i - 1][j] > grid[i][j]) return false;
    }
  return true;
}

std::vector<Composition> orbit_compositions(const Composition& lambda) {
  Composition a = lambda;
  std::sort(a.begin(), a.end());
  std::vector<Composition> out;
  do {
    out.push_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::vector<Composition> compositions_of_degree(int nvars, int degree) {
  std::vector<Composition> out;
  Composition cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == nvars - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::string composition_str(const Composition& a) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out;
}

Composition composition_parse(const std::string& text) {
  Composition out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok.empty()) throw ParseError("bad composition: " + text);
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad composition: " + text);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace vvjack
