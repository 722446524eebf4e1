#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ws/gf.hpp"

using ws::gf::FieldCtx;
using ws::gf::FieldElem;

TEST_CASE("prime field basics") {
  const auto& F5 = FieldCtx::get(5, 1);
  CHECK(F5.q() == 5);
  CHECK(F5.inv(2) == 3);  // 2*3 = 6 = 1
  CHECK(F5.add(4, 3) == 2);
  CHECK(F5.mul(4, 4) == 1);
  CHECK(F5.neg(2) == 3);
  CHECK_THROWS_AS((void)F5.inv(0), std::domain_error);
}

TEST_CASE("deterministic moduli") {
  const auto& F4 = FieldCtx::get(2, 2);
  CHECK(F4.modulus() == std::vector<uint32_t>{1, 1, 1});  // x^2+x+1
  const auto& F9 = FieldCtx::get(3, 2);
  CHECK(F9.modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2+1
  const auto& F8 = FieldCtx::get(2, 3);
  CHECK(F8.modulus() == std::vector<uint32_t>{1, 1, 0, 1});  // x^3+x+1
}

TEST_CASE("F9: x*x = -1") {
  const auto& F9 = FieldCtx::get(3, 2);
  uint32_t x = 3;  // packed c1 = 1
  CHECK(F9.mul(x, x) == F9.neg(1));
}

TEST_CASE("F4 frobenius: x -> x+1") {
  const auto& F4 = FieldCtx::get(2, 2);
  uint32_t x = 2;
  CHECK(F4.frobenius(x, 1) == 3);      // x^2 = x+1 mod x^2+x+1
  CHECK(F4.frobenius(F4.frobenius(x, 1), 1) == x);  // Galois group order 2
}

TEST_CASE("field axioms exhaustive for q <= 81") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4},
           {5, 2}, {3, 3}, {2, 6}, {7, 2}, {13, 1}}) {
    const auto& F = FieldCtx::get(p, k);
    uint64_t q = F.q();
    REQUIRE(q <= 81);
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.mul(a, 1) == a);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      if (a) CHECK(F.pow(a, (long long)q - 1) == 1);
      // Frobenius is additive: (x+y)^p = x^p + y^p
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
    }
    // associativity / distributivity on sampled triples
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
      uint32_t a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
}

TEST_CASE("sampled axioms for a large field") {
  const auto& F = FieldCtx::get(3, 12);  // 531441 elements
  std::mt19937 rng(5);
  for (int t = 0; t < 500; ++t) {
    uint32_t a = rng() % F.q(), b = rng() % F.q(), c = rng() % F.q();
    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("frobenius fixed field is the prime field") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    const auto& F = FieldCtx::get(p, k);
    unsigned fixed = 0;
    for (uint32_t a = 0; a < F.q(); ++a)
      if (F.frobenius(a, 1) == a) ++fixed;
    CHECK(fixed == p);
    // e = 1 iterated k times is the identity
    for (uint32_t a = 0; a < F.q(); ++a) {
      uint32_t b = a;
      for (unsigned i = 0; i < k; ++i) b = F.frobenius(b, 1);
      CHECK(b == a);
    }
  }
}

TEST_CASE("multiplicative orders divide q-1") {
  const auto& F = FieldCtx::get(3, 3);
  for (uint32_t a = 1; a < F.q(); ++a) CHECK((F.q() - 1) % F.mult_order(a) == 0);
  CHECK(F.mult_order(F.generator()) == F.q() - 1);
}

TEST_CASE("roots of unity") {
  const auto& F9 = FieldCtx::get(3, 2);
  auto r4 = F9.roots_of_unity(4);
  CHECK(r4.size() == 4);  // gcd(4, 8) = 4
  for (auto z : r4) CHECK(F9.pow(z, 4) == 1);

  const auto& F8 = FieldCtx::get(2, 3);
  auto r7 = F8.roots_of_unity(7);
  CHECK(r7.size() == 7);
  std::set<uint32_t> s(r7.begin(), r7.end());
  CHECK(s.size() == 7);

  CHECK(F8.roots_of_unity(1) == std::vector<uint32_t>{1});
  CHECK_THROWS_AS((void)F8.roots_of_unity(0), std::domain_error);
}

TEST_CASE("tower embeddings") {
  const auto& F3 = FieldCtx::get(3, 1);
  const auto& F9 = FieldCtx::get(3, 2);
  const auto& F81 = FieldCtx::get(3, 4);
  // embedding is a ring homomorphism
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      CHECK(ws::gf::embed(F3, F3.add(a, b), F9) ==
            F9.add(ws::gf::embed(F3, a, F9), ws::gf::embed(F3, b, F9)));
      CHECK(ws::gf::embed(F3, F3.mul(a, b), F9) ==
            F9.mul(ws::gf::embed(F3, a, F9), ws::gf::embed(F3, b, F9)));
    }
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t b = 0; b < 9; ++b) {
      CHECK(ws::gf::embed(F9, F9.mul(a, b), F81) ==
            F81.mul(ws::gf::embed(F9, a, F81), ws::gf::embed(F9, b, F81)));
      CHECK(ws::gf::embed(F9, F9.add(a, b), F81) ==
            F81.add(ws::gf::embed(F9, a, F81), ws::gf::embed(F9, b, F81)));
    }
  // orders are preserved
  for (uint32_t a = 1; a < 9; ++a)
    CHECK(F81.mult_order(ws::gf::embed(F9, a, F81)) == F9.mult_order(a));
  CHECK_THROWS_AS((void)ws::gf::embed(F9, 1, FieldCtx::get(3, 3)), std::domain_error);
}

TEST_CASE("size bound enforced") {
  CHECK_THROWS_AS((void)FieldCtx::get(2, 21), std::domain_error);
  CHECK_THROWS_AS((void)FieldCtx::get(3, 14), std::domain_error);
}

TEST_CASE("FieldElem operators") {
  const auto& F9 = FieldCtx::get(3, 2);
  FieldElem a(F9, 3), b(F9, 5);
  CHECK((a + b).v == F9.add(3, 5));
  CHECK((a * b).v == F9.mul(3, 5));
  CHECK((a - a).is_zero());
  CHECK((a * a.inverse()).v == 1);
  const auto& F3 = FieldCtx::get(3, 1);
  FieldElem c(F3, 2);
  CHECK_THROWS_AS((void)(a + c), std::domain_error);
}
