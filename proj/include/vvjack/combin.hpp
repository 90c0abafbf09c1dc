#ifndef VVJACK_COMBIN_HPP
#define VVJACK_COMBIN_HPP

#include <string>
#include <utility>
#include <vector>

#include "vvjack/rational.hpp"

namespace vvjack {

// Composition: fixed-length vector of nonnegative integers. Length N and
// degree |alpha| are independent; trailing zeros are significant.
using Composition = std::vector<int>;

// Permutation of [1,N], stored as 1-based images: w[i-1] = w(i).
using Perm = std::vector<int>;

int degree_of(const Composition& a);
Composition sorted_desc(const Composition& a);  // alpha^+
bool is_weakly_decreasing(const Composition& a);

Perm perm_identity(int n);
Perm perm_inverse(const Perm& w);
Perm perm_compose(const Perm& a, const Perm& b);  // (a∘b)(i) = a(b(i))
Perm perm_transposition(int n, int i, int j);
int perm_sign(const Perm& w);
// Deterministic bubble-sort factorization into simple reflections:
// w = s_{word.back()} ∘ ... ∘ s_{word.front()}, so word.front() acts first.
std::vector<int> reduced_word(const Perm& w);
// (w alpha)_i = alpha_{w^{-1}(i)}
Composition perm_apply(const Perm& w, const Composition& a);

// Shape of an irreducible S_N module: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;                       // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  int max_hook() const;                // parts[0] + length - 1
  std::vector<int> conjugate() const;  // tau'
  std::string str() const;             // "5,3,2"
  static Partition parse(const std::string& text);

  bool operator==(const Partition& o) const { return parts == o.parts; }
};

std::vector<Partition> partitions_of(int n);

struct Node {
  int row, col;  // 1-based
  int arm, leg, hook;
};

// One node per diagram cell, row-major; hook = arm + leg + 1.
std::vector<Node> hook_data(const Partition& tau);
BigInt hook_product(const Partition& tau);

// Reversed standard Young tableau: entries decrease along rows and columns.
struct Rsyt {
  std::vector<std::vector<int>> rows;
  std::vector<int> row_of, col_of;  // 1-based, indexed by entry 1..N

  int n() const { return static_cast<int>(row_of.size()) - 1; }
  int content(int entry) const { return col_of[entry] - row_of[entry]; }
  std::vector<int> content_vector() const;
  // Row-reading word as comma-separated entries; the canonical identifier.
  std::string word() const;
  static Rsyt from_rows(std::vector<std::vector<int>> rows);
};

// All RSYT of shape tau in lexicographic order of the row-reading word;
// the count equals N!/prod(hooks).
std::vector<Rsyt> enumerate_rsyt(const Partition& tau);

// r(alpha,i) = #{j: a_j > a_i} + #{j <= i: a_j = a_i}; a bijection in i.
int rank_of(const Composition& a, int i);
std::vector<int> rank_vector(const Composition& a);
// w_alpha, the inverse of i -> r(alpha,i).
Perm sorting_permutation(const Composition& a);

// alpha ◁ beta in the two-level order: alpha^+ ≺ beta^+, or equal
// rearrangements and alpha ≺ beta. Throws IncomparableInput on degree or
// length mismatch.
bool dominance_lt(const Composition& a, const Composition& b);

Composition phi(const Composition& a);          // (a_2,...,a_N,a_1+1)
Composition phi_inverse(const Composition& a);  // requires a_N >= 1

long inv_count(const Composition& a);

// Maximal constant blocks [a_j,b_j] with a_j < b_j of a weakly decreasing
// composition; zero parts form blocks like any other value.
struct StabilizerIntervals {
  std::vector<std::pair<int, int>> intervals;
  BigInt order() const;  // prod (b_j - a_j + 1)!
  bool contains_index(int i) const;  // is some [a_j,b_j] with a_j <= i < b_j
};

StabilizerIntervals stabilizer(const Composition& lambda);

// Minimal-degree labels: (delta^s, T^s) with T^s filled N..1 row by row,
// and (delta^a, T^a) filled column by column.
std::pair<Composition, Rsyt> min_symmetric_label(const Partition& tau);
std::pair<Composition, Rsyt> min_antisymmetric_label(const Partition& tau);

// Grid with lambda_i placed at the node of T containing i.
std::vector<std::vector<int>> floor_tableau(const Composition& lambda, const Rsyt& T);
// Strict increase down columns, weak increase along rows.
bool column_strict(const std::vector<std::vector<int>>& grid);
// Strict increase along rows, weak increase down columns.
bool row_strict(const std::vector<std::vector<int>>& grid);

// All distinct rearrangements of lambda, deterministic (lexicographic) order.
std::vector<Composition> orbit_compositions(const Composition& lambda);
// All compositions of given length and degree, lexicographic order.
std::vector<Composition> compositions_of_degree(int nvars, int degree);

std::string composition_str(const Composition& a);
Composition composition_parse(const std::string& text);

}  // namespace vvjack

#endif
