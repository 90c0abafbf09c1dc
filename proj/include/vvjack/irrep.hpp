#ifndef VVJACK_IRREP_HPP
#define VVJACK_IRREP_HPP

#include <map>
#include <string>
#include <vector>

#include "vvjack/combin.hpp"
#include "vvjack/scalar.hpp"

namespace vvjack {

// Per-(tableau, i) data for the simple-reflection action.
struct SimpleAction {
  enum Kind { SameRow, SameCol, Mixed };
  Kind kind;
  int partner;  // index of s_i T when Mixed, else -1
  BigQ b;       // 1/(c(i,T) - c(i+1,T)) when Mixed
};

// Immutable data for one shape tau: the tableau list in canonical order,
// contents, content-vector norms, and the Murphy action tables. All
// ModuleVector/VPoly operations are relative to one ShapeData.
struct ShapeData {
  Partition tau;
  int N = 0;
  std::vector<Rsyt> tabs;
  std::vector<std::vector<int>> content;   // [t][entry], entry 1..N
  std::vector<BigQ> norm0_values;          // content-vector norm per tableau
  std::vector<std::vector<SimpleAction>> action;  // [t][i-1]
  std::map<std::string, int> index_by_word;

  explicit ShapeData(const Partition& shape);
  int dim() const { return static_cast<int>(tabs.size()); }
  int index_of_word(const std::string& word) const;  // -1 if absent
};

// Element of V_tau: sparse tableau-index -> coefficient map, no stored zeros.
class ModuleVector {
 public:
  using Map = std::map<int, ScalarQk>;

  ModuleVector() = default;
  static ModuleVector basis(int t) {
    ModuleVector v;
    v.c_[t] = ScalarQk(1);
    return v;
  }

  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  const Map& coords() const { return c_; }
  ScalarQk coeff(int t) const {
    auto it = c_.find(t);
    return it == c_.end() ? ScalarQk() : it->second;
  }
  void add(int t, const ScalarQk& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = c_.emplace(t, a);
    if (!fresh) {
      it->second += a;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  ModuleVector& operator+=(const ModuleVector& o) {
    for (const auto& [t, a] : o.c_) add(t, a);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [t, a] : o.c_) add(t, -a);
    return *this;
  }
  ModuleVector operator+(const ModuleVector& o) const {
    ModuleVector v = *this;
    v += o;
    return v;
  }
  ModuleVector operator-(const ModuleVector& o) const {
    ModuleVector v = *this;
    v -= o;
    return v;
  }
  ModuleVector operator-() const {
    ModuleVector v;
    for (const auto& [t, a] : c_) v.c_[t] = -a;
    return v;
  }
  ModuleVector scaled(const ScalarQk& a) const {
    ModuleVector v;
    if (a.is_zero()) return v;
    for (const auto& [t, x] : c_) v.c_[t] = x * a;
    return v;
  }
  void axpy(const ScalarQk& a, const ModuleVector& o) {
    if (a.is_zero()) return;
    for (const auto& [t, x] : o.c_) add(t, x * a);
  }
  bool operator==(const ModuleVector& o) const { return c_ == o.c_; }
  bool operator!=(const ModuleVector& o) const { return c_ != o.c_; }

 private:
  Map c_;
};

// The four-case Murphy rule, extended linearly.
ModuleVector act_simple(const ShapeData& sd, int i, const ModuleVector& v);
// w acting through the bubble-sort reduced word of w.
ModuleVector act_perm(const ShapeData& sd, const Perm& w, const ModuleVector& v);
// omega_i = sum_{j>i} (i,j) as the literal sum of transpositions.
ModuleVector jm_apply(const ShapeData& sd, int i, const ModuleVector& v);

// ||v_T||^2 from the content vector; strictly positive rational.
BigQ norm0_value(const ShapeData& sd, int t);
ScalarQk norm0(const ShapeData& sd, int t);
// Diagonal S_N-invariant form <u,v>_0 = sum_T u_T v_T ||v_T||^2.
ScalarQk form0(const ShapeData& sd, const ModuleVector& u, const ModuleVector& v);

// P_0 / P_1 interval products; throw ConditionViolated when the entries of
// [a,b] are not column-distinct (P_0) resp. row-distinct (P_1).
BigQ p0_product(const ShapeData& sd, int t, int a, int b);
BigQ p1_product(const ShapeData& sd, int t, int a, int b);

// Orbit of tableau t0 under admissible adjacent swaps inside the intervals,
// as a sorted list of tableau indices.
std::vector<int> orbit_tableaux(const ShapeData& sd, int t0,
                                const StabilizerIntervals& H);

// cm weakly decreasing across every interval (equivalently prod P = 1).
bool is_cm_extremal(const ShapeData& sd, int t, const StabilizerIntervals& H);
// rw weakly decreasing across every interval; the opposite extremal.
int find_opposite_extremal(const ShapeData& sd, int t0, const StabilizerIntervals& H);

// f = sum_{T in orbit} prod_j P0(T;a_j,b_j) v_T with wf = f on H.
ModuleVector invariant_vector(const ShapeData& sd, int t0, const StabilizerIntervals& H);
// f = sum_{T in orbit} prod_j P1(T;a_j,b_j) v_T with s_i f = -f inside H.
ModuleVector antisymmetric_vector(const ShapeData& sd, int t0,
                                  const StabilizerIntervals& H);

enum class PKind { P0, P1 };

// ||f||_0^2 = prod_j ((b_j-a_j+1)!/n0_j) |P(T1;a_j,b_j)| * ||v_T0||_0^2,
// n0_j counting w in S_[a_j,b_j] with w v_T0 = v_T0 (up to sign for P1).
ScalarQk group_norm(const ShapeData& sd, PKind kind, int t0, int t1,
                    const StabilizerIntervals& H);

}  // namespace vvjack

#endif
