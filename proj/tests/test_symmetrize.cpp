#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vvjack/symmetrize.hpp"

using namespace vvjack;

namespace {

const ScalarQk k = ScalarQk::kappa();

VPoly mono(const Composition& a, int tab = 0) {
  return VPoly::monomial(a, ModuleVector::basis(tab));
}

// kappa -> -kappa on a canonical scalar
KPoly negate_kappa(const KPoly& p) {
  std::vector<BigQ> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return KPoly(std::move(c));
}
ScalarQk negate_kappa(const ScalarQk& s) {
  return ScalarQk(negate_kappa(s.num()), negate_kappa(s.den()));
}

VPoly vandermonde(const ShapeData& sd) {
  VPoly v = VPoly::monomial(Composition(sd.N, 0), ModuleVector::basis(0));
  for (int i = 1; i <= sd.N; ++i)
    for (int j = i + 1; j <= sd.N; ++j) v = mult_x(i, v) - mult_x(j, v);
  return v;
}

bool is_kappa_free(const VPoly& f) {
  for (const auto& [a, u] : f.terms())
    for (const auto& [t, val] : u.coords())
      if (!val.is_kappa_free()) return false;
  return true;
}

}  // namespace

TEST_CASE("label validation") {
  const ShapeData sd(Partition::parse("2,1"));
  JackContext ctx(sd);
  // lambda = 0 is not column-strict for a shape with two rows
  CHECK_THROWS_AS(f_symmetric(sd, ctx, {0, 0, 0}, 0), NotColumnStrict);
  // lambda = 0 is row-strict here (rows of length 1 and 2 need distinct values)
  CHECK_THROWS_AS(f_antisymmetric(sd, ctx, {0, 0, 0}, 0), NotRowStrict);

  const ShapeData row(Partition::parse("3"));
  JackContext rctx(row);
  CHECK(f_symmetric(row, rctx, {0, 0, 0}, 0) == mono({0, 0, 0}));
}

TEST_CASE("symmetric family, trivial module") {
  const ShapeData sd(Partition::parse("2"));
  JackContext ctx(sd);
  // lambda = (1,0): f = zeta_{(1,0)} + E_-((0,1)) zeta_{(0,1)} = x1 + x2
  const VPoly f = f_symmetric(sd, ctx, {1, 0}, 0);
  CHECK(f == mono({1, 0}) + mono({0, 1}));
  CHECK(act_simple_poly(sd, 1, f) == f);
  // norm: both routes and the oracle give 2
  CHECK(norm_symmetric(sd, {1, 0}, 0) == ScalarQk(2));
  CHECK(contravariant_form(sd, f, f) == ScalarQk(2));
}

TEST_CASE("antisymmetric family, trivial module") {
  const ShapeData sd(Partition::parse("2"));
  JackContext ctx(sd);
  const VPoly f = f_antisymmetric(sd, ctx, {1, 0}, 0);
  CHECK(f == mono({1, 0}) - mono({0, 1}));
  CHECK(act_simple_poly(sd, 1, f) == f.scaled(ScalarQk(-1)));
  const ScalarQk expect = ScalarQk(2) * (ScalarQk(1) + ScalarQk(2) * k);
  CHECK(norm_antisymmetric(sd, {1, 0}, 0) == expect);
  CHECK(contravariant_form(sd, f, f) == expect);
}

TEST_CASE("sign representation boundary") {
  const ShapeData sd(Partition::parse("1,1"));
  JackContext ctx(sd);
  // minimal antisymmetric label is lambda = 0; f = v_T, alternating already
  const auto [da, ta] = min_antisymmetric_label(sd.tau);
  CHECK(da == Composition{0, 0});
  const VPoly f = f_antisymmetric(sd, ctx, da, 0);
  CHECK(f == mono({0, 0}));
  CHECK(act_simple_poly(sd, 1, f) == f.scaled(ScalarQk(-1)));

  // minimal symmetric label is (1,0); f = (x1 - x2) v
  const auto [ds, ts] = min_symmetric_label(sd.tau);
  CHECK(ds == Composition{1, 0});
  const VPoly g = f_symmetric(sd, ctx, ds, 0);
  CHECK(g == mono({1, 0}) - mono({0, 1}));
  CHECK(act_simple_poly(sd, 1, g) == g);
  const ScalarQk expect = ScalarQk(2) * (ScalarQk(1) - ScalarQk(2) * k);
  CHECK(norm_symmetric(sd, ds, 0) == expect);
  CHECK(contravariant_form(sd, g, g) == expect);
}

TEST_CASE("nontrivial orbit: tau = (2,1), lambda = (1,1,0)") {
  const ShapeData sd(Partition::parse("2,1"));
  JackContext ctx(sd);
  const int tB = sd.index_of_word("3,1,2");
  const Composition lambda{1, 1, 0};

  const VPoly fs = f_symmetric(sd, ctx, lambda, tB);
  const VPoly fa = f_antisymmetric(sd, ctx, lambda, tB);
  for (int i = 1; i < 3; ++i) {
    CHECK(act_simple_poly(sd, i, fs) == fs);
    CHECK(act_simple_poly(sd, i, fa) == fa.scaled(ScalarQk(-1)));
  }
  CHECK(contravariant_form(sd, fs, fs) == norm_symmetric(sd, lambda, tB));
  CHECK(contravariant_form(sd, fa, fa) == norm_antisymmetric(sd, lambda, tB));
  CHECK(contravariant_form(sd, fs, fa).is_zero());

  // leading coefficient: x^lambda u_{lambda,T0} with the P-weighted u-vector
  const StabilizerIntervals H = stabilizer(lambda);
  CHECK(fs.coeff(lambda) == invariant_vector(sd, tB, H));
  CHECK(fa.coeff(lambda) == antisymmetric_vector(sd, tB, H));
}

TEST_CASE("family orthogonality across labels") {
  const ShapeData sd(Partition::parse("2,1"));
  JackContext ctx(sd);
  const int tA = sd.index_of_word("3,2,1");
  const int tB = sd.index_of_word("3,1,2");
  // same degree, different lambda
  const VPoly f1 = f_symmetric(sd, ctx, {2, 0, 0}, tA);
  const VPoly f2 = f_symmetric(sd, ctx, {1, 1, 0}, tB);
  CHECK(contravariant_form(sd, f1, f2).is_zero());
  // different degrees
  const VPoly f3 = f_symmetric(sd, ctx, {1, 0, 0}, sd.index_of_word("3,2,1"));
  CHECK(contravariant_form(sd, f1, f3).is_zero());
}

TEST_CASE("hook products") {
  // single row: every product is 1
  const HookProducts row = hook_products(Partition::parse("6"));
  CHECK(row.p1 == ScalarQk(1));
  CHECK(row.p2 == ScalarQk(1));
  CHECK(row.p3 == ScalarQk(1));
  CHECK(row.hs == ScalarQk(1));

  // tau = (2,1), by hand: P1 = 1-k, P2 = (1-3k)/((1-k)(1-2k)), P3 = 1/(1-2k)
  const HookProducts hp = hook_products(Partition::parse("2,1"));
  const ScalarQk one(1);
  CHECK(hp.p1 == one - k);
  CHECK(hp.p2 == (one - ScalarQk(3) * k) / ((one - k) * (one - ScalarQk(2) * k)));
  CHECK(hp.p3 == one / (one - ScalarQk(2) * k));
  CHECK(hp.hs == one - ScalarQk(3) * k);

  // tau = (5,3,2): Hs = (1-7k)_2 (1-6k)_2 (1-4k)^2 (1-3k)
  const HookProducts big = hook_products(Partition::parse("5,3,2"));
  const ScalarQk expect = pochhammer(ScalarQk::linear(bigq(1), bigq(-7)), 2) *
                          pochhammer(ScalarQk::linear(bigq(1), bigq(-6)), 2) *
                          ScalarQk::linear(bigq(1), bigq(-4)).pow(2) *
                          ScalarQk::linear(bigq(1), bigq(-3));
  CHECK(big.hs == expect);

  // identity for every partition of N <= 6 (acceptance runs 8)
  for (int n = 1; n <= 6; ++n)
    for (const auto& tau : partitions_of(n))
      CHECK([&] {
        const HookProducts p = hook_products(tau);
        return p.p1 * p.p2 / p.p3 == p.hs;
      }());
}

TEST_CASE("supporting identities for the minimal norm") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& tau : partitions_of(n)) {
      const ShapeData sd(tau);
      const HookProducts hp = hook_products(tau);
      const auto [ds, ts] = min_symmetric_label(tau);
      const int t0 = sd.index_of_word(ts.word());
      CHECK(zeta_norm(sd, ds, t0) == norm0(sd, t0) * hp.p1 * hp.p2);
      Composition rev = ds;
      std::reverse(rev.begin(), rev.end());
      CHECK(e_product(sd, 1, rev, t0) == hp.p3);
    }
}

TEST_CASE("minimal elements for one-row shapes") {
  for (int n = 2; n <= 4; ++n) {
    const ShapeData sd(Partition::parse(std::to_string(n)));
    JackContext ctx(sd);
    const MinimalPoly fs = min_symmetric(sd, ctx, true);
    CHECK(fs.poly == VPoly::monomial(Composition(n, 0), ModuleVector::basis(0)));
    CHECK(fs.norm.value() == ScalarQk(1));

    const MinimalPoly fa = min_antisymmetric(sd, ctx, true);
    CHECK(fa.poly == vandermonde(sd));
    // norm = N! prod_{i=2..N} (1 + i kappa)_{i-1}, confirmed by the oracle
    ScalarQk expect{bigq(factorial(n), BigInt(1))};
    for (int i = 2; i <= n; ++i)
      expect *= pochhammer(ScalarQk::linear(bigq(1), bigq(i)), i - 1);
    CHECK(fa.norm.value() == expect);
    CHECK(contravariant_form(sd, fa.poly, fa.poly) == expect);
  }
}

TEST_CASE("triple agreement for all shapes of 3 and 4") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& tau : partitions_of(n)) {
      const ShapeData sd(tau);
      JackContext ctx(sd);
      const MinimalPoly fs = min_symmetric(sd, ctx, true);
      const MinimalPoly fa = min_antisymmetric(sd, ctx, true);
      // hook closed form == assembled formula == contravariant oracle
      CHECK(fs.norm.value() == norm_symmetric(sd, fs.lambda, fs.t0));
      CHECK(fa.norm.value() == norm_antisymmetric(sd, fa.lambda, fa.t0));
      CHECK(contravariant_form(sd, fs.poly, fs.poly) == fs.norm.value());
      CHECK(contravariant_form(sd, fa.poly, fa.poly) == fa.norm.value());
      // kappa-free coefficients
      CHECK(is_kappa_free(fs.poly));
      CHECK(is_kappa_free(fa.poly));
      // symmetry under every generator
      for (int i = 1; i < n; ++i) {
        CHECK(act_simple_poly(sd, i, fs.poly) == fs.poly);
        CHECK(act_simple_poly(sd, i, fa.poly) == fa.poly.scaled(ScalarQk(-1)));
      }
    }
}

TEST_CASE("conjugation duality of the hook products") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& tau : partitions_of(n)) {
      Partition conj(tau.conjugate());
      ScalarQk prod_a(1), prod_s_conj(1);
      for (auto [hook, len] : hook_norm_antisymmetric(tau).factors)
        prod_a *= pochhammer(ScalarQk::linear(bigq(1), bigq(hook)), len);
      for (auto [hook, len] : hook_norm_symmetric(conj).factors)
        prod_s_conj *= pochhammer(ScalarQk::linear(bigq(1), bigq(-hook)), len);
      CHECK(prod_a == negate_kappa(prod_s_conj));
    }
}

TEST_CASE("singular scan") {
  // positive definite at kappa = 0
  for (int n = 2; n <= 3; ++n)
    for (const auto& tau : partitions_of(n)) {
      const ShapeData sd(tau);
      const ScanReport rep = singular_scan(sd, 2, {bigq(0)});
      for (const auto& cell : rep.cells) {
        CHECK(!cell.pole);
        CHECK(cell.corank == 0);
      }
    }

  // tau = (2): corank >= 1 at degree 1 for kappa0 = -1/2
  const ShapeData sd2(Partition::parse("2"));
  const ScanReport r2 = singular_scan(sd2, 1, {bigq(-1, 2), bigq(1, 2)});
  REQUIRE(r2.cells.size() == 4);
  CHECK(r2.cells[0].kappa0 == bigq(-1, 2));
  CHECK(r2.cells[1].degree == 1);
  CHECK(r2.cells[1].corank >= 1);
  // +1/2 does not degenerate the trivial side
  CHECK(r2.cells[3].corank == 0);

  // the sign side picks up +1/2
  const ShapeData sd11(Partition::parse("1,1"));
  const ScanReport r11 = singular_scan(sd11, 1, {bigq(1, 2)});
  CHECK(r11.cells[1].corank >= 1);

  // workers > 1 produce the identical report
  const ScanReport seq = singular_scan(sd2, 2, default_candidates(sd2.tau, 2), 1);
  const ScanReport par = singular_scan(sd2, 2, default_candidates(sd2.tau, 2), 4);
  REQUIRE(seq.cells.size() == par.cells.size());
  for (size_t i = 0; i < seq.cells.size(); ++i) {
    CHECK(seq.cells[i].kappa0 == par.cells[i].kappa0);
    CHECK(seq.cells[i].corank == par.cells[i].corank);
  }
}

TEST_CASE("default candidates") {
  const auto cands = default_candidates(Partition::parse("2"), 2);
  // hooks {2,1}: n/2 for odd n in [-2,2] -> -1/2, 1/2
  CHECK(cands == std::vector<BigQ>{bigq(-1, 2), bigq(1, 2)});
}
