#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "ws/rootsys.hpp"
#include "ws/smith.hpp"

using namespace ws::roots;

namespace {
const Root A = g2(1, 0), B = g2(0, 1);

// Cartan table rows/cols in the order a, b, a+b, 2a+b, 3a+b, 3a+2b.
const std::array<Root, 6> kPosOrder = {g2(1, 0), g2(0, 1), g2(1, 1),
                                       g2(2, 1), g2(3, 1), g2(3, 2)};
constexpr int kCartanTable[6][6] = {
    {2, -3, -1, 1, 3, 0},  {-1, 2, 1, 0, -1, 1},  {-1, 3, 2, 1, 0, 3},
    {1, 0, 1, 2, 3, 3},    {1, -1, 0, 1, 2, 1},   {0, 1, 1, 1, 1, 2},
};
}  // namespace

TEST_CASE("system shapes") {
  CHECK(RootSystem::G2().roots().size() == 12);
  CHECK(RootSystem::D4().roots().size() == 24);
  CHECK(RootSystem::G2().base().size() == 2);
  CHECK(RootSystem::D4().base().size() == 4);
  CHECK(RootSystem::G2().positive().size() == 6);
  // every root is an all-nonneg or all-nonpos base combination
  for (const auto& r : RootSystem::G2().roots()) {
    bool nn = r.c[0] >= 0 && r.c[1] >= 0, np = r.c[0] <= 0 && r.c[1] <= 0;
    CHECK((nn || np));
  }
  for (const auto& r : RootSystem::D4().roots()) {
    auto bc = RootSystem::D4().dual_coords(r);  // = base coords, simply laced
    bool nn = true, np = true;
    for (int c : bc) {
      nn &= c >= 0;
      np &= c <= 0;
    }
    CHECK((nn || np));
  }
}

TEST_CASE("Cartan integers match the G2 table") {
  const auto& sys = RootSystem::G2();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(sys.cartan(kPosOrder[i], kPosOrder[j]) == kCartanTable[i][j]);
  // antisymmetry extension <-r,s> = <r,-s> = -<r,s>
  for (const auto& r : sys.roots())
    for (const auto& s : sys.roots()) {
      CHECK(sys.cartan(-r, s) == -sys.cartan(r, s));
      CHECK(sys.cartan(r, -s) == -sys.cartan(r, s));
    }
  CHECK(sys.cartan(A, B) == -3);
  CHECK(sys.cartan(g2(3, 2), A) == 0);
  for (const auto& r : sys.roots()) CHECK(sys.cartan(r, r) == 2);
}

TEST_CASE("short/long pairing values") {
  const auto& sys = RootSystem::G2();
  for (const auto& r : sys.roots())
    for (const auto& s : sys.roots()) {
      if (r == s || r == -s) continue;
      int c = sys.cartan(r, s);
      bool mixed = sys.is_long(r) != sys.is_long(s);
      if (mixed)
        CHECK((c == -3 || c == -1 || c == 0 || c == 1 || c == 3));
      else
        CHECK((c == -1 || c == 0 || c == 1));
    }
}

TEST_CASE("reflections") {
  const auto& sys = RootSystem::G2();
  CHECK(sys.reflect(A, B) == g2(3, 1));  // w_a(b) = 3a+b
  for (const auto& r : sys.roots()) {
    CHECK(sys.reflect(r, r) == -r);
    // involution permuting Sigma
    std::set<Root> image;
    for (const auto& s : sys.roots()) {
      Root t = sys.reflect(r, s);
      CHECK(sys.reflect(r, t) == s);
      image.insert(t);
    }
    CHECK(image.size() == 12);
  }
  const auto& sysd = RootSystem::D4();
  // w_{r2}(r1) = r1 + r2 : e1-e2 -> e1-e3
  CHECK(sysd.reflect(sysd.base()[1], sysd.base()[0]) == d4(1, 0, -1, 0));
}

TEST_CASE("eta seed and closure") {
  const auto& sys = RootSystem::G2();
  CHECK(eta(A, g2(-2, -1)) == -1);   // row a, col -(2a+b)
  CHECK(eta(B, B) == -1);
  CHECK(eta(-A, B) == eta(A, sys.reflect(A, B)));
  CHECK(eta(-A, B) == -1);           // eta_{a, 3a+b} = -1

  // total on Sigma x Sigma and closure rules hold as identities
  for (const auto& r : sys.roots()) {
    CHECK(eta(r, r) == -1);
    for (const auto& s : sys.roots()) {
      int v = eta(r, s);
      CHECK((v == 1 || v == -1));
      CHECK(eta(r, -s) == v);                      // column rule
      CHECK(eta(-r, s) == eta(r, sys.reflect(r, s)));  // row rule
    }
  }
}

TEST_CASE("eta closure is confluent on the seed block") {
  // recompute each seed cell through the negated-row/column path
  const auto& sys = RootSystem::G2();
  for (const auto& r : sys.roots())
    for (const auto& s : sys.roots()) {
      // strip column first, then row: must agree with direct evaluation
      int via = eta(-r, sys.reflect(-r, -s));
      CHECK(via == eta(r, -s));
      CHECK(via == eta(r, s));
    }
}

TEST_CASE("eta rejects D4") {
  CHECK_THROWS_AS((void)eta(d4(1, -1, 0, 0), d4(0, 1, -1, 0)), std::domain_error);
}

TEST_CASE("triality") {
  const auto& sys = RootSystem::D4();
  Root r1 = sys.base()[0], r2 = sys.base()[1], r3 = sys.base()[2], r4 = sys.base()[3];
  CHECK(triality(r1) == r3);
  CHECK(triality(r3) == r4);
  CHECK(triality(r4) == r1);
  CHECK(triality(r2) == r2);
  for (const auto& r : sys.roots()) {
    CHECK(triality(triality(triality(r))) == r);
    for (const auto& s : sys.roots())
      CHECK(sys.cartan(triality(r), triality(s)) == sys.cartan(r, s));
  }
  CHECK_THROWS_AS((void)triality(A), std::domain_error);
}

TEST_CASE("folding") {
  auto classes = fold();
  CHECK(classes.size() == 12);
  int a1 = 0, a13 = 0;
  const auto& sys = RootSystem::D4();
  Root r1 = sys.base()[0], r2 = sys.base()[1], r3 = sys.base()[2], r4 = sys.base()[3];
  for (const auto& cls : classes) {
    if (cls.a1_cubed) {
      ++a13;
      CHECK(cls.orbit.size() == 3);
    } else {
      ++a1;
      CHECK(cls.orbit.size() == 1);
      CHECK(triality(cls.orbit[0]) == cls.orbit[0]);
    }
    // oracle: projected vector = sum over the full rho-orbit
    for (const auto& r : cls.orbit) {
      std::array<int, 4> acc{0, 0, 0, 0};
      Root cur = r;
      for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 4; ++i) acc[i] += cur.c[i];
        cur = triality(cur);
      }
      CHECK(acc == cls.projected_times3);
    }
  }
  CHECK(a1 == 6);
  CHECK(a13 == 6);
  // the class of r2 is A1, the class of r1 is the orbit {r1, r3, r4}
  for (const auto& cls : classes) {
    if (std::find(cls.orbit.begin(), cls.orbit.end(), r2) != cls.orbit.end())
      CHECK_FALSE(cls.a1_cubed);
    if (std::find(cls.orbit.begin(), cls.orbit.end(), r1) != cls.orbit.end()) {
      CHECK(cls.a1_cubed);
      std::vector<Root> expect = {r1, r3, r4};
      std::sort(expect.begin(), expect.end());
      CHECK(cls.orbit == expect);
    }
  }
  // projected lengths split 6/6 into two values with ratio 3 (G2 shape)
  std::map<int, int> bylen;
  for (const auto& cls : classes) {
    int n2 = 0;
    for (int i = 0; i < 4; ++i) n2 += cls.projected_times3[i] * cls.projected_times3[i];
    bylen[n2]++;
  }
  CHECK(bylen.size() == 2);
  for (auto& [len, cnt] : bylen) CHECK(cnt == 6);
}

TEST_CASE("g2 length-swapping symmetry") {
  CHECK(g2_rho(A) == B);
  CHECK(g2_rho(B) == A);
  CHECK(g2_rho(g2(1, 1)) == g2(3, 1));
  CHECK(g2_rho(g2(2, 1)) == g2(3, 2));
  const auto& sys = RootSystem::G2();
  for (const auto& r : sys.roots()) {
    CHECK(g2_rho(g2_rho(r)) == r);
    CHECK(sys.is_long(g2_rho(r)) != sys.is_long(r));
    CHECK(g2_rho(-r) == -g2_rho(r));
  }
}

TEST_CASE("dual coordinates") {
  const auto& sys = RootSystem::G2();
  // h_{3a+b} decomposes with coefficients (1,1): checked downstream against
  // the group identity h_{3a+b}(t) = h_a(t) h_b(t)
  CHECK(sys.dual_coords(g2(3, 1)) == std::vector<int>{1, 1});
  CHECK(sys.dual_coords(A) == std::vector<int>{1, 0});
  CHECK(sys.dual_coords(B) == std::vector<int>{0, 1});
  CHECK(sys.dual_coords(g2(1, 1)) == std::vector<int>{1, 3});
  CHECK(sys.dual_coords(g2(2, 1)) == std::vector<int>{2, 3});
  CHECK(sys.dual_coords(g2(3, 2)) == std::vector<int>{1, 2});
}

TEST_CASE("table dump golden") {
  auto j = table_dump();
  std::ifstream in(std::string(FIXTURE_DIR) + "/g2_tables.json");
  REQUIRE(in.good());
  nlohmann::ordered_json want = nlohmann::ordered_json::parse(in);
  CHECK(j == want);
}

TEST_CASE("smith normal form utility") {
  using ws::smith::Mat;
  Mat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  auto s = ws::smith::smith_normal_form(a);
  CHECK(s.d[0][0] == 2);
  CHECK(s.d[1][1] == 2);
  CHECK(s.d[2][2] == 156);
  // u * a * v == d
  auto mul = [](const Mat& x, const Mat& y) {
    Mat r(x.size(), std::vector<long long>(y[0].size(), 0));
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t k = 0; k < y.size(); ++k)
        for (size_t j = 0; j < y[0].size(); ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  CHECK(mul(mul(s.u, a), s.v) == s.d);
  CHECK(ws::smith::invariant_factors(a) == std::vector<long long>{2, 2, 156});
  CHECK(ws::smith::abs_det(a) == 2 * 2 * 156);
  Mat b = {{4, 0}, {0, 6}};
  CHECK(ws::smith::invariant_factors(b) == std::vector<long long>{2, 12});
}
