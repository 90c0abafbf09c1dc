#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vvjack/scalar.hpp"

using namespace vvjack;

namespace {

const ScalarQk k = ScalarQk::kappa();

// deterministic small-value generator for property checks
struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  int small(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
  ScalarQk scalar() {
    // ratio of random polynomials of degree <= 2
    KPoly num({bigq(small(-4, 4)), bigq(small(-4, 4)), bigq(small(-2, 2))});
    KPoly den({bigq(small(-4, 4)), bigq(small(-4, 4)), bigq(small(-2, 2))});
    if (den.is_zero()) den = KPoly::one();
    return ScalarQk(num, den);
  }
};

}  // namespace

TEST_CASE("qk_normalize examples") {
  // (k^2-1)/(k-1) -> k+1
  const KPoly num({bigq(-1), bigq(0), bigq(1)});
  const KPoly den({bigq(-1), bigq(1)});
  CHECK(qk_normalize(num, den) == k + ScalarQk(1));

  // (0, 7k+3) -> 0/1
  const ScalarQk z = qk_normalize(KPoly::zero(), KPoly::linear(bigq(3), bigq(7)));
  CHECK(z.is_zero());
  CHECK(z.den().is_one());

  // (2k+2, 4) -> (k/2 + 1/2)/1; value at kappa=1 equals 1
  const ScalarQk s = qk_normalize(KPoly::linear(bigq(2), bigq(2)),
                                  KPoly::constant(bigq(4)));
  CHECK(s.den().is_one());
  CHECK(s.num() == KPoly::linear(bigq(1, 2), bigq(1, 2)));
  CHECK(s.eval(bigq(1)) == bigq(1));

  CHECK_THROWS_AS(qk_normalize(KPoly::one(), KPoly::zero()), DivisionByZero);
}

TEST_CASE("qk_arith examples") {
  const ScalarQk one(1);
  // (1/(1+k)) * (1+k) = 1
  const ScalarQk a = one / (one + k);
  CHECK(a * (one + k) == one);
  // k + (-k) = 0
  CHECK((k + (-k)).is_zero());
  // (1-k^2)/(1+k)^2 / (1-k) = 1/(1+k); spot value at kappa=2
  const ScalarQk lhs =
      (one - k * k) / ((one + k) * (one + k)) / (one - k);
  CHECK(lhs == one / (one + k));
  CHECK(lhs.eval(bigq(2)) == bigq(1, 3));
  CHECK_THROWS_AS(one / ScalarQk(0), DivisionByZero);
}

TEST_CASE("pochhammer examples") {
  // (1-7k)_2 = (1-7k)(2-7k)
  const ScalarQk base = ScalarQk::linear(bigq(1), bigq(-7));
  CHECK(pochhammer(base, 2) == base * (base + ScalarQk(1)));
  CHECK(pochhammer(k * k + ScalarQk(5), 0) == ScalarQk(1));
  CHECK(pochhammer(ScalarQk(1), 4) == ScalarQk(24));
}

TEST_CASE("qk_eval examples") {
  CHECK((ScalarQk(1) / (ScalarQk(1) + k)).eval(bigq(1)) == bigq(1, 2));
  const ScalarQk pole = k / (k - ScalarQk(bigq(1, 3)));
  CHECK_THROWS_AS(pole.eval(bigq(1, 3)), PoleAtKappa);
  const ScalarQk sq = (ScalarQk(1) + ScalarQk(2) * k).pow(2);
  CHECK(sq.eval(bigq(-1, 2)) == bigq(0));
}

TEST_CASE("field axioms on random instances") {
  Lcg rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const ScalarQk a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == ScalarQk(1));
  }
}

TEST_CASE("canonicality") {
  Lcg rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const ScalarQk a = rng.scalar();
    // normalize is idempotent
    CHECK(qk_normalize(a.num(), a.den()) == a);
    const ScalarQk b = rng.scalar();
    // equal values (cross-multiplication) have identical representations
    const bool equal_value = (a.num() * b.den() == b.num() * a.den());
    CHECK(equal_value == (a == b));
    // scaling numerator and denominator together does not change the value
    const KPoly m = KPoly::linear(bigq(3), bigq(2));
    CHECK(qk_normalize(a.num() * m, a.den() * m) == a);
  }
}

TEST_CASE("eval commutes with arithmetic") {
  Lcg rng(999);
  const BigQ pts[] = {bigq(0), bigq(1), bigq(-1, 2), bigq(3, 5)};
  for (int trial = 0; trial < 30; ++trial) {
    const ScalarQk a = rng.scalar(), b = rng.scalar();
    for (const BigQ& pt : pts) {
      try {
        const BigQ va = a.eval(pt), vb = b.eval(pt);
        CHECK((a + b).eval(pt) == va + vb);
        CHECK((a * b).eval(pt) == va * vb);
        CHECK((a - b).eval(pt) == va - vb);
      } catch (const PoleAtKappa&) {
        // skipped: pt is a pole of an operand
      }
    }
  }
}

TEST_CASE("text format round trip") {
  // emitted canonical strings
  CHECK((k + ScalarQk(1)).str() == "k+1");
  CHECK(ScalarQk(bigq(3, 4)).str() == "3/4");
  CHECK(ScalarQk(bigq(-7)).str() == "-7");
  CHECK(ScalarQk(0).str() == "0");
  const ScalarQk half_kp1 = (k + ScalarQk(1)) / ScalarQk(2);
  CHECK(half_kp1.str() == "(k+1)/2");
  const ScalarQk r = (ScalarQk(2) * k + ScalarQk(1)) / (k + ScalarQk(1));
  CHECK(r.str() == "(2*k+1)/(k+1)");
  CHECK((ScalarQk(1) / (k + ScalarQk(1))).str() == "1/(k+1)");
  CHECK((-(k * k)).str() == "-k^2");

  // parsing accepts the same grammar, including non-reduced input
  CHECK(ScalarQk::parse("(2*k^2+3*k+1)/(k+1)") == ScalarQk(2) * k + ScalarQk(1));
  CHECK(ScalarQk::parse("k+1") == k + ScalarQk(1));
  CHECK(ScalarQk::parse("3/4") == ScalarQk(bigq(3, 4)));
  CHECK(ScalarQk::parse("-k") == -k);
  CHECK(ScalarQk::parse("0") == ScalarQk(0));

  Lcg rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const ScalarQk a = rng.scalar();
    CHECK(ScalarQk::parse(a.str()) == a);
  }
}
