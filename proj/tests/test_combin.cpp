#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "vvjack/combin.hpp"
#include "vvjack/errors.hpp"

using namespace vvjack;

TEST_CASE("hook data") {
  const auto nodes = hook_data(Partition::parse("5,3,2"));
  std::vector<int> hooks;
  for (const auto& nd : nodes) hooks.push_back(nd.hook);
  CHECK(hooks == std::vector<int>{7, 6, 4, 2, 1, 4, 3, 1, 2, 1});

  const auto row = hook_data(Partition::parse("6"));
  std::vector<int> rh;
  for (const auto& nd : row) rh.push_back(nd.hook);
  CHECK(rh == std::vector<int>{6, 5, 4, 3, 2, 1});

  const auto small = hook_data(Partition::parse("2,1"));
  std::vector<int> sh;
  for (const auto& nd : small) sh.push_back(nd.hook);
  CHECK(sh == std::vector<int>{3, 1, 1});
}

TEST_CASE("rsyt enumeration") {
  CHECK(enumerate_rsyt(Partition::parse("4")).size() == 1);

  const auto t21 = enumerate_rsyt(Partition::parse("2,1"));
  REQUIRE(t21.size() == 2);
  CHECK(t21[0].word() == "3,1,2");
  CHECK(t21[1].word() == "3,2,1");

  CHECK(enumerate_rsyt(Partition::parse("2,2")).size() == 2);

  // hook length formula for every partition of N <= 6 (acceptance runs 8)
  for (int n = 1; n <= 6; ++n) {
    for (const auto& tau : partitions_of(n)) {
      const BigInt expect = factorial(n) / hook_product(tau);
      CHECK(BigInt(enumerate_rsyt(tau).size()) == expect);
    }
  }

  // entries decrease along rows and columns
  for (const auto& t : enumerate_rsyt(Partition::parse("3,2,1"))) {
    for (size_t r = 0; r < t.rows.size(); ++r)
      for (size_t c = 0; c < t.rows[r].size(); ++c) {
        if (c + 1 < t.rows[r].size()) CHECK(t.rows[r][c] > t.rows[r][c + 1]);
        if (r + 1 < t.rows.size() && c < t.rows[r + 1].size())
          CHECK(t.rows[r][c] > t.rows[r + 1][c]);
      }
    CHECK(t.content(t.n()) == 0);
  }
}

TEST_CASE("rank function and sorting permutation") {
  const Composition part{4, 3, 1};
  for (int i = 1; i <= 3; ++i) CHECK(rank_of(part, i) == i);

  // lambda = (3,2,2,1), lambda^R = (1,2,2,3): w = [4,2,3,1]
  const Composition lr{1, 2, 2, 3};
  CHECK(sorting_permutation(lr) == Perm{4, 2, 3, 1});

  CHECK(rank_vector({0, 5, 0}) == std::vector<int>{2, 1, 3});

  CHECK(sorting_permutation({3, 2, 1}) == perm_identity(3));

  // w_alpha^{-1} alpha = alpha^+ with the stability rule
  const Composition a{1, 0, 2};
  const Perm w = sorting_permutation(a);
  CHECK(perm_apply(perm_inverse(w), a) == Composition{2, 1, 0});
  for (int i = 1; i <= 3; ++i) CHECK(rank_of(a, w[i - 1]) == i);
}

TEST_CASE("dominance order") {
  CHECK(dominance_lt({0, 2}, {2, 0}));
  CHECK(!dominance_lt({2, 0}, {2, 0}));
  CHECK(dominance_lt({1, 1, 0}, {2, 0, 0}));
  CHECK_THROWS_AS(dominance_lt({1, 0}, {2, 0}), IncomparableInput);
  CHECK_THROWS_AS(dominance_lt({1, 0}, {1, 0, 0}), IncomparableInput);

  // strict partial order on a degree orbit; lambda^R the unique minimum
  for (const Composition lambda : {Composition{3, 1, 0}, Composition{2, 2, 1}}) {
    const auto orbit = orbit_compositions(lambda);
    Composition rev = lambda;
    std::reverse(rev.begin(), rev.end());
    for (const auto& a : orbit) {
      CHECK(!dominance_lt(a, a));
      if (a != rev) CHECK(dominance_lt(rev, a));
      for (const auto& b : orbit)
        for (const auto& c : orbit)
          if (dominance_lt(a, b) && dominance_lt(b, c)) CHECK(dominance_lt(a, c));
    }
  }
}

TEST_CASE("phi and inversions") {
  CHECK(phi({0, 0}) == Composition{0, 1});
  CHECK(phi({1, 0, 2}) == Composition{0, 2, 2});
  CHECK(phi_inverse({0, 1}) == Composition{0, 0});
  CHECK_THROWS(phi_inverse({1, 0}));
  const Composition a{2, 0, 3, 1};
  CHECK(phi_inverse(phi(a)) == a);
  CHECK(degree_of(phi(a)) == degree_of(a) + 1);

  CHECK(inv_count({3, 2, 2, 0}) == 0);
  CHECK(inv_count({0, 1, 2, 3}) == 6);
  CHECK(inv_count({1, 0, 2}) == 2);
}

TEST_CASE("stabilizer intervals") {
  const auto st = stabilizer({2, 2, 1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(st.intervals ==
        std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {6, 10}});
  CHECK(st.order() == factorial(2) * factorial(3) * factorial(5));

  CHECK(stabilizer({3, 2, 1}).intervals.empty());
  CHECK(stabilizer({3, 2, 1}).order() == 1);

  const auto all0 = stabilizer(Composition(4, 0));
  CHECK(all0.intervals == std::vector<std::pair<int, int>>{{1, 4}});
}

TEST_CASE("minimal labels for 5,3,2") {
  const Partition tau = Partition::parse("5,3,2");
  const auto [ds, ts] = min_symmetric_label(tau);
  CHECK(ds == Composition{2, 2, 1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(ts.rows == std::vector<std::vector<int>>{{10, 9, 8, 7, 6}, {5, 4, 3}, {2, 1}});
  const auto grid_s = floor_tableau(ds, ts);
  CHECK(grid_s == std::vector<std::vector<int>>{{0, 0, 0, 0, 0}, {1, 1, 1}, {2, 2}});
  CHECK(column_strict(grid_s));

  const auto [da, ta] = min_antisymmetric_label(tau);
  CHECK(da == Composition{4, 3, 2, 2, 1, 1, 1, 0, 0, 0});
  CHECK(ta.rows == std::vector<std::vector<int>>{{10, 7, 4, 2, 1}, {9, 6, 3}, {8, 5}});
  const auto grid_a = floor_tableau(da, ta);
  CHECK(grid_a == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {0, 1, 2}, {0, 1}});
  CHECK(row_strict(grid_a));
}

TEST_CASE("minimal labels for a single row") {
  const Partition tau = Partition::parse("4");
  const auto [ds, ts] = min_symmetric_label(tau);
  CHECK(ds == Composition{0, 0, 0, 0});
  CHECK(ts.rows == std::vector<std::vector<int>>{{4, 3, 2, 1}});
  const auto [da, ta] = min_antisymmetric_label(tau);
  CHECK(da == Composition{3, 2, 1, 0});
  const auto grid = floor_tableau(Composition(4, 0), ts);
  CHECK(column_strict(grid));  // single row: nothing to violate
}

TEST_CASE("hook sum identity") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& tau : partitions_of(n)) {
      int hook_sum = 0;
      for (const auto& nd : hook_data(tau)) hook_sum += nd.hook;
      const auto [ds, ts] = min_symmetric_label(tau);
      const auto [da, ta] = min_antisymmetric_label(tau);
      CHECK(degree_of(ds) + degree_of(da) + n == hook_sum);
    }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(perm_identity(5)).empty());
  // applying the word to the identity composition action reproduces w
  for (const Perm w : {Perm{2, 3, 1}, Perm{3, 1, 2}, Perm{4, 2, 3, 1}}) {
    Composition a(w.size());
    for (size_t i = 0; i < w.size(); ++i) a[i] = 10 + static_cast<int>(i);
    // (w a)_{w(i)} = a_i
    Composition expect(w.size());
    for (size_t i = 0; i < w.size(); ++i) expect[w[i] - 1] = a[i];
    Composition got = a;
    for (int s : reduced_word(w)) std::swap(got[s - 1], got[s]);
    CHECK(got == expect);
    CHECK(got == perm_apply(w, a));
  }
}
