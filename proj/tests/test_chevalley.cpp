#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ws/chevalley.hpp"

using namespace ws::chev;
using ws::gf::FieldCtx;
using ws::roots::g2;
using ws::roots::RootSystem;

namespace {
const RootSystem& sys() { return RootSystem::G2(); }
int idx(int c1, int c2) { return sys().index_of(g2(c1, c2)); }
}  // namespace

TEST_CASE("basis: structure constants and Jacobi") {
  const auto& B = Basis::get();
  B.check_jacobi();
  // N_{xi2,xi1} = -2, N_{xi2,-xi3} = 3, N_{xi1-xi2,xi2-xi3} = 1
  CHECK(B.n_const(idx(1, 0), idx(1, 1)) == -2);
  CHECK(B.n_const(idx(1, 0), idx(2, 1)) == 3);
  CHECK(B.n_const(idx(0, 1), idx(3, 1)) == 1);
  // antisymmetry of what was built
  for (int r = 0; r < 12; ++r)
    for (int s = 0; s < 12; ++s) CHECK(B.n_const(r, s) == -B.n_const(s, r));
}

TEST_CASE("basis: extracted sign table equals the classical one") {
  const auto& B = Basis::get();
  for (int r = 0; r < 12; ++r)
    for (int s = 0; s < 12; ++s)
      CHECK(B.eta(r, s) == ws::roots::eta(sys().roots()[r], sys().roots()[s]));
  // spot value: eta(a+b, a) = -1
  CHECK(B.eta(idx(1, 1), idx(1, 0)) == -1);
}

TEST_CASE("matrix-level eta extraction is characteristic independent") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{3, 1}, {5, 1}}) {
    const auto& F = FieldCtx::get(p, k);
    for (int r = 0; r < 12; ++r)
      for (int s = 0; s < 12; ++s)
        CHECK(eta_from_matrices(F, r, s) == Basis::get().eta(r, s));
  }
}

TEST_CASE("x matrices: unipotent, additive, x(0) = I") {
  const auto& F = FieldCtx::get(5, 1);
  for (int r = 0; r < 12; ++r) {
    CHECK(x_mat(F, r, 0).is_identity());
    for (uint32_t t = 0; t < 5; ++t) {
      auto m = x_mat(F, r, t);
      // (x - I)^5 = 0
      auto d = m;
      for (int i = 0; i < kDim; ++i) d.at(i, i) = F.sub(d.at(i, i), 1);
      CHECK(d.pow(5).a == ws::mat::Mat(F, kDim).a);
      for (uint32_t u = 0; u < 5; ++u)
        CHECK(x_mat(F, r, F.add(t, u)) == m * x_mat(F, r, u));
    }
  }
}

TEST_CASE("n(r,1)^2 = h(r,-1)") {
  for (uint64_t p : {3, 5}) {
    const auto& F = FieldCtx::get(p, 1);
    for (int r = 0; r < 12; ++r)
      CHECK(n_mat(F, r, 1) * n_mat(F, r, 1) == h_mat(F, r, F.neg(1)));
  }
}

TEST_CASE("torus conversion") {
  const auto& F = FieldCtx::get(5, 1);
  CHECK(torus_mat(F, 1, 1, 1).is_identity());
  // h_a(z) = h(z^-1, z^2, z^-1)
  for (uint32_t z = 1; z < 5; ++z) {
    auto want = torus_mat(F, F.inv(z), F.mul(z, z), F.inv(z));
    CHECK(h_mat(F, idx(1, 0), z) == want);
  }
  // h_r(z) = h(z^<r,xi1>, z^<r,xi2>, z^<r,xi3>) for every root
  for (int r = 0; r < 12; ++r) {
    auto rr = sys().roots()[r];
    int e1 = sys().cartan(rr, g2(1, 1));
    int e2 = sys().cartan(rr, g2(1, 0));
    int e3 = sys().cartan(rr, g2(-2, -1));
    for (uint32_t z = 1; z < 5; ++z)
      CHECK(h_mat(F, r, z) == torus_mat(F, F.pow(z, e1), F.pow(z, e2), F.pow(z, e3)));
  }
  // y = h_a(-1) h_b(-1) = h(1,-1,-1)
  auto y = named(Named::y, F);
  CHECK(y.m == torus_mat(F, 1, F.neg(1), F.neg(1)));
  // round trip
  auto ex = torus_extract(torus_mat(F, 2, 3, F.inv(F.mul(2, 3))));
  CHECK(ex[0] == 2);
  CHECK(ex[1] == 3);
  CHECK_THROWS_AS((void)torus_mat(F, 2, 2, 2), std::domain_error);
  CHECK_THROWS_AS((void)torus_extract(x_mat(F, 0, 1)), std::domain_error);
}

TEST_CASE("distinguished elements v2, v3, v6, y") {
  for (uint64_t p : {3, 5}) {
    const auto& F = FieldCtx::get(p, 1);
    auto v2 = named(Named::v2, F), v3 = named(Named::v3, F), v6 = named(Named::v6, F);
    CHECK((v2.m * v2.m).is_identity());
    CHECK((v3.m * v3.m * v3.m).is_identity());
    CHECK(v6.m.pow(6).is_identity());
    CHECK(v2.m * v3.m == v3.m * v2.m);
    CHECK_FALSE(v3.m.is_identity());
    CHECK_FALSE(v6.m.pow(3).is_identity());
    CHECK_FALSE(v6.m.pow(2).is_identity());
    auto y = named(Named::y, F);
    CHECK((y.m * y.m).is_identity());
    CHECK_FALSE(y.m.is_identity());
    // v2 x_r(t) v2^-1 = x_{-r}(-t); same shape for n_r(1)
    auto v2inv = v2.m.inverse();
    for (int r = 0; r < 12; ++r) {
      int nr = sys().index_of(-sys().roots()[r]);
      for (uint32_t t = 0; t < F.q(); ++t)
        CHECK(v2.m * x_mat(F, r, t) * v2inv == x_mat(F, nr, F.neg(t)));
      CHECK(v2.m * n_mat(F, r, 1) * v2inv == n_mat(F, nr, F.neg(1)));
    }
  }
}

TEST_CASE("v2/v3 action on the torus") {
  const auto& F = FieldCtx::get(7, 1);
  auto v2 = named(Named::v2, F).m, v3 = named(Named::v3, F).m;
  auto v2i = v2.inverse(), v3i = v3.inverse();
  for (uint32_t z1 = 1; z1 < 7; ++z1)
    for (uint32_t z2 = 1; z2 < 7; ++z2) {
      uint32_t z3 = F.inv(F.mul(z1, z2));
      auto h = torus_mat(F, z1, z2, z3);
      CHECK(v2i * h * v2 == torus_mat(F, F.inv(z1), F.inv(z2), F.inv(z3)));
      CHECK(v3i * h * v3 == torus_mat(F, z3, z1, z2));
    }
}

TEST_CASE("field and graph automorphisms") {
  const auto& F9 = FieldCtx::get(3, 2);
  for (int r = 0; r < 12; ++r) {
    auto g = x_el(F9, r, 1);
    auto img = apply_auto({AutoMap::Kind::FieldFp, 1}, F9, g);
    CHECK(img.m == g.m);  // 1^p = 1
  }
  const auto& F5 = FieldCtx::get(5, 1);
  CHECK_THROWS_AS((void)apply_auto({AutoMap::Kind::GraphGamma, 1}, F5, x_el(F5, 0, 1)),
                  std::domain_error);
  // Gamma(n_{a+b}(1)) = n_{3a+b}(1)
  const auto& F3 = FieldCtx::get(3, 1);
  auto n_ab = n_el(F3, idx(1, 1), 1);
  auto img = apply_auto({AutoMap::Kind::GraphGamma, 1}, F3, n_ab);
  CHECK(img.m == n_mat(F3, idx(3, 1), 1));
  // Gamma^2 = F_3 on all generators over F_9
  for (int r = 0; r < 12; ++r)
    for (uint32_t t = 0; t < 9; ++t) {
      auto g = x_el(F9, r, t);
      auto gg = apply_auto({AutoMap::Kind::GraphGamma, 2}, F9, g);
      CHECK(gg.m == x_mat(F9, r, F9.pow(t, 3)));
    }
  GroupElem bare{x_mat(F3, 0, 1), {}};
  CHECK_THROWS_AS((void)apply_auto({AutoMap::Kind::FieldFp, 1}, F3, bare), std::domain_error);
}

TEST_CASE("reflections through n-conjugation agree with the root system") {
  const auto& F = FieldCtx::get(5, 1);
  for (int r = 0; r < 12; ++r) {
    auto n = n_mat(F, r, 1);
    auto ni = n.inverse();
    for (int s = 0; s < 12; ++s) {
      auto c = n * x_mat(F, s, 1) * ni;
      int w = sys().index_of(sys().reflect(sys().roots()[r], sys().roots()[s]));
      bool plus = c == x_mat(F, w, 1), minus = c == x_mat(F, w, F.neg(1));
      CHECK((plus || minus));
    }
  }
}

TEST_CASE("extended Weyl group words give distinct matrices") {
  const auto& F = FieldCtx::get(3, 1);
  int ia = idx(1, 0), ib = idx(0, 1);
  std::set<std::vector<uint32_t>> seen;
  std::vector<ws::mat::Mat> words = {ws::mat::Mat::identity(F, kDim)};
  seen.insert(words[0].a);
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<ws::mat::Mat> next;
    for (const auto& w : words)
      for (int g : {ia, ib}) {
        auto m = w * n_mat(F, g, 1);
        if (seen.insert(m.a).second) next.push_back(m);
      }
    words = std::move(next);
  }
  // <n_a(1), n_b(1)> covers all 12 Weyl classes over the q=3 torus kernel;
  // 48 distinct matrices witness faithfulness on the extended Weyl group
  CHECK(seen.size() == 48);
}

TEST_CASE("steinberg relations exhaustive for q in {2,3,4,5}") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto rep = verify_steinberg(p, k);
    CHECK(rep.exhaustive);
    for (const auto& c : rep.checks) {
      INFO("q=", rep.q, " relation ", c.relation, " witness ", c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("steinberg relations sampled for q = 9") {
  auto rep = verify_steinberg(3, 2, false, 300, 42);
  CHECK_FALSE(rep.exhaustive);
  for (const auto& c : rep.checks) {
    INFO("relation ", c.relation, " witness ", c.witness);
    CHECK(c.pass);
  }
}
