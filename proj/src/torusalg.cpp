#include "ws/torusalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ws/rootsys.hpp"

namespace ws::torus {

using roots::Root;
using roots::RootSystem;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error("torusalg: " + msg);
}

// integer inverse of a unimodular matrix via adjugate (n <= 4)
smith::Mat unimodular_inverse(const smith::Mat& u) {
  size_t n = u.size();
  auto det_of = [](auto&& self, const smith::Mat& m) -> long long {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    long long acc = 0, sgn = 1;
    for (size_t c = 0; c < k; ++c) {
      smith::Mat sub(k - 1, std::vector<long long>(k - 1));
      for (size_t i = 1; i < k; ++i) {
        size_t jc = 0;
        for (size_t j = 0; j < k; ++j) {
          if (j == c) continue;
          sub[i - 1][jc++] = m[i][j];
        }
      }
      acc += sgn * m[0][c] * self(self, sub);
      sgn = -sgn;
    }
    return acc;
  };
  long long det = det_of(det_of, u);
  require(det == 1 || det == -1, "matrix is not unimodular");
  smith::Mat inv(n, std::vector<long long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (n == 1) {
        inv[0][0] = det;
        continue;
      }
      smith::Mat sub(n - 1, std::vector<long long>(n - 1));
      size_t ir = 0;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        size_t jc = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          sub[ir][jc++] = u[r][c];
        }
        ++ir;
      }
      long long cof = det_of(det_of, sub);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = det * cof;
    }
  return inv;
}

smith::Mat mat_mul(const smith::Mat& a, const smith::Mat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  smith::Mat r(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

}  // namespace

const char* twist_label(Group g, int twist) {
  static const char* g2[] = {"1", "v2", "n_a", "n_b", "v3", "v6"};
  static const char* d4[] = {"1", "w1+", "w1-", "w2+", "w2-", "w3", "w0"};
  if (g == Group::G2) {
    require(twist >= 0 && twist < kG2Twists, "bad twist");
    return g2[twist];
  }
  require(twist >= 0 && twist < kD4Twists, "bad twist");
  return d4[twist];
}

// --- G2 coordinate maps ------------------------------------------------------

CoordMap g2_weyl_form(int root_index) {
  const auto& sys = RootSystem::G2();
  Root r = sys.roots()[root_index];
  // xi1 = a+b, xi2 = a, xi3 = -(2a+b); long roots are the differences
  // xi_i - xi_j, short roots are the xi_k themselves
  auto tr = [](int i, int j) {
    std::array<int, 3> p = {0, 1, 2};
    std::swap(p[i], p[j]);
    return p;
  };
  struct Entry {
    Root root;
    CoordMap map;
  };
  const std::array<Entry, 6> table = {{
      {roots::g2(0, 1), {tr(0, 1), false}},   // b = xi1-xi2
      {roots::g2(3, 1), {tr(1, 2), false}},   // 3a+b = xi2-xi3
      {roots::g2(3, 2), {tr(0, 2), false}},   // 3a+2b = xi1-xi3
      {roots::g2(1, 1), {tr(1, 2), true}},    // a+b = xi1
      {roots::g2(1, 0), {tr(0, 2), true}},    // a = xi2
      {roots::g2(-2, -1), {tr(0, 1), true}},  // -(2a+b) = xi3
  }};
  for (const auto& e : table)
    if (e.root == r || e.root == -r) return e.map;
  throw std::logic_error("torusalg: unhandled root");
}

CoordMap g2_v2_form() { return {{0, 1, 2}, true}; }
CoordMap g2_v3_form() { return {{2, 0, 1}, false}; }  // h -> h(z3, z1, z2)

CoordMap compose(const CoordMap& second, const CoordMap& first) {
  CoordMap r;
  for (int m = 0; m < 3; ++m) r.perm[m] = first.perm[second.perm[m]];
  r.invert = second.invert != first.invert;
  return r;
}

std::array<uint32_t, 3> apply_form(const gf::FieldCtx& F, const CoordMap& m,
                                   const std::array<uint32_t, 3>& z) {
  std::array<uint32_t, 3> out;
  for (int i = 0; i < 3; ++i) {
    uint32_t v = z[m.perm[i]];
    out[i] = m.invert ? F.inv(v) : v;
  }
  return out;
}

smith::Mat exponent_matrix(const CoordMap& m) {
  // rows give z'_1, z'_2 over (z1, z2), with z3 = (z1 z2)^-1
  smith::Mat e(2, std::vector<long long>(2, 0));
  long long s = m.invert ? -1 : 1;
  for (int row = 0; row < 2; ++row) {
    int src = m.perm[row];
    if (src == 0)
      e[row][0] = s;
    else if (src == 1)
      e[row][1] = s;
    else {
      e[row][0] = -s;
      e[row][1] = -s;
    }
  }
  return e;
}

namespace {

// coordinate form of h -> w^-1 h w for each G2 twist row
CoordMap g2_twist_form(int twist) {
  const auto& sys = RootSystem::G2();
  int ia = sys.index_of(roots::g2(1, 0)), ib = sys.index_of(roots::g2(0, 1));
  CoordMap ident{{0, 1, 2}, false};
  switch (twist) {
    case 0: return ident;
    case 1: return g2_v2_form();
    case 2: return g2_weyl_form(ia);
    case 3: return g2_weyl_form(ib);
    case 4: return g2_v3_form();
    case 5: return compose(g2_v3_form(), g2_v2_form());  // w = v2 v3
  }
  throw std::domain_error("torusalg: bad G2 twist");
}

}  // namespace

std::array<uint32_t, 3> frobenius_g2(const TorusSpec& spec, const gf::FieldCtx& F,
                                     const std::array<uint32_t, 3>& z) {
  require(spec.group == Group::G2, "G2 spec expected");
  std::array<uint32_t, 3> zq;
  for (int i = 0; i < 3; ++i) zq[i] = F.pow(z[i], (long long)spec.q);
  return apply_form(F, g2_twist_form(spec.twist), zq);
}

bool g2_member(const TorusSpec& spec, const gf::FieldCtx& F,
               const std::array<uint32_t, 3>& z) {
  for (auto v : z)
    if (!v) return false;
  if (F.mul(F.mul(z[0], z[1]), z[2]) != 1) return false;
  return frobenius_g2(spec, F, z) == z;
}

// --- D4 machinery ------------------------------------------------------------

RootPerm d4_reflection(int base_index) {
  const auto& sys = RootSystem::D4();
  Root r = sys.base()[base_index];
  RootPerm p;
  for (int i = 0; i < 24; ++i)
    p[i] = (int8_t)sys.index_of(sys.reflect(r, sys.roots()[i]));
  return p;
}

RootPerm d4_triality_perm() {
  const auto& sys = RootSystem::D4();
  RootPerm p;
  for (int i = 0; i < 24; ++i)
    p[i] = (int8_t)sys.index_of(roots::triality(sys.roots()[i]));
  return p;
}

RootPerm perm_mul(const RootPerm& a, const RootPerm& b) {
  RootPerm r;
  for (int i = 0; i < 24; ++i) r[i] = a[b[i]];
  return r;
}

int perm_order(const RootPerm& p) {
  RootPerm id;
  for (int i = 0; i < 24; ++i) id[i] = (int8_t)i;
  RootPerm cur = p;
  int o = 1;
  while (!(cur == id)) {
    cur = perm_mul(p, cur);
    ++o;
    require(o <= 24, "permutation order overflow");
  }
  return o;
}

smith::Mat d4_base_form(int base_index) {
  // w_{r_i} h(t1..t4) w_{r_i}^-1, rows as exponent vectors
  static const long long forms[4][4][4] = {
      {{-1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {1, -1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, -1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, -1}},
  };
  require(base_index >= 0 && base_index < 4, "bad base index");
  smith::Mat e(4, std::vector<long long>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e[i][j] = forms[base_index][i][j];
  return e;
}

smith::Mat d4_tau_matrix() {
  // tau(h(t1,t2,t3,t4)) = h(t4, t2, t1, t3)
  smith::Mat p(4, std::vector<long long>(4, 0));
  p[0][3] = 1;
  p[1][1] = 1;
  p[2][0] = 1;
  p[3][2] = 1;
  return p;
}

smith::Mat d4_conj_matrix(const std::vector<int>& word) {
  smith::Mat e(4, std::vector<long long>(4, 0));
  for (int i = 0; i < 4; ++i) e[i][i] = 1;
  for (int g : word) e = mat_mul(e, d4_base_form(g));
  return e;
}

const std::vector<int>& d4_twist_word(int twist) {
  static const std::vector<std::vector<int>> words = [] {
    const auto& sys = RootSystem::D4();
    auto find_word = [&](const RootPerm& target) {
      RootPerm id;
      for (int i = 0; i < 24; ++i) id[i] = (int8_t)i;
      std::map<RootPerm, std::vector<int>> seen;
      seen[id] = {};
      std::vector<RootPerm> frontier = {id};
      std::array<RootPerm, 4> gens;
      for (int i = 0; i < 4; ++i) gens[i] = d4_reflection(i);
      while (true) {
        if (auto it = seen.find(target); it != seen.end()) return it->second;
        std::vector<RootPerm> next;
        for (const auto& p : frontier)
          for (int g = 0; g < 4; ++g) {
            RootPerm np = perm_mul(p, gens[g]);
            if (seen.count(np)) continue;
            auto w = seen[p];
            w.push_back(g);
            seen[np] = w;
            next.push_back(np);
          }
        require(!next.empty(), "word search exhausted");
        frontier = std::move(next);
      }
    };
    RootPerm refl_star;
    {
      Root rstar = roots::d4(1, 1, 0, 0);  // highest root e1+e2
      for (int i = 0; i < 24; ++i)
        refl_star[i] = (int8_t)sys.index_of(sys.reflect(rstar, sys.roots()[i]));
    }
    RootPerm w0;
    for (int i = 0; i < 24; ++i) w0[i] = (int8_t)sys.index_of(-sys.roots()[i]);

    auto word_star = find_word(refl_star);
    auto word_w0 = find_word(w0);
    auto cat = [](std::vector<int> a, const std::vector<int>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    std::vector<std::vector<int>> w(7);
    w[0] = {};
    w[1] = word_star;                             // w_{1,+} = w_{r*}
    w[2] = cat(word_w0, word_star);               // w_{1,-} = w0 w_{r*}
    w[3] = cat(word_star, {1});                   // w_{2,+} = w_{r*} w_{r2}
    w[4] = cat(word_w0, cat(word_star, {1}));     // w_{2,-} = w0 w_{2,+}
    w[5] = {0, 1};                                // w3 = w_{r1} w_{r2}
    w[6] = word_w0;                               // w0
    return w;
  }();
  require(twist >= 0 && twist < kD4Twists, "bad twist");
  return words[twist];
}

// --- torus orders and invariants ----------------------------------------------

TorusInfo torus_members(const TorusSpec& spec) {
  smith::Mat A;
  if (spec.group == Group::G2) {
    A = exponent_matrix(g2_twist_form(spec.twist));
  } else {
    // x = w^-1 tau(x^q) w: conjugation by w^-1 composes the reversed word
    auto word = d4_twist_word(spec.twist);
    std::reverse(word.begin(), word.end());
    A = mat_mul(d4_conj_matrix(word), d4_tau_matrix());
  }
  size_t n = A.size();
  smith::Mat M(n, std::vector<long long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      M[i][j] = (long long)spec.q * A[i][j] - (i == j ? 1 : 0);

  TorusInfo info;
  info.fixed_matrix = M;
  auto snf = smith::smith_normal_form(M);
  info.order = 1;
  for (size_t i = 0; i < n; ++i) info.order *= std::abs(snf.d[i][i]);
  for (size_t i = 0; i < n; ++i)
    if (std::abs(snf.d[i][i]) > 1) info.invariants.push_back(std::abs(snf.d[i][i]));
  auto uinv = unimodular_inverse(snf.u);
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(snf.d[i][i]) <= 1) continue;
    std::vector<long long> gen(n);
    for (size_t r = 0; r < n; ++r) gen[r] = uinv[r][i];
    info.generator_exponents.push_back(gen);
  }
  return info;
}

WeylFixedGroup weyl_fixed_group(int twist) {
  require(twist == 0 || twist == 6, "fixed Weyl group supported for twists 1 and w0 only");
  WeylFixedGroup out;
  out.gen_a = {1};         // w_{r2}
  out.gen_b = {0, 2, 3};   // w_{r1} w_{r3} w_{r4}
  std::array<RootPerm, 4> refl;
  for (int i = 0; i < 4; ++i) refl[i] = d4_reflection(i);
  auto word_perm = [&](const std::vector<int>& w) {
    RootPerm p;
    for (int i = 0; i < 24; ++i) p[i] = (int8_t)i;
    for (int g : w) p = perm_mul(p, refl[g]);
    return p;
  };
  RootPerm pa = word_perm(out.gen_a), pb = word_perm(out.gen_b);
  std::vector<RootPerm> elems = {word_perm({})};
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < elems.size(); ++i)
      for (const auto& g : {pa, pb}) {
        RootPerm np = perm_mul(elems[i], g);
        if (std::find(elems.begin(), elems.end(), np) == elems.end()) {
          elems.push_back(np);
          grew = true;
        }
      }
  }
  out.order = (int)elems.size();
  RootPerm rot = perm_mul(pb, pa);  // w_{r1} w_{r3} w_{r4} w_{r2}
  out.rot_order = perm_order(rot);
  RootPerm id;
  for (int i = 0; i < 24; ++i) id[i] = (int8_t)i;
  RootPerm rotinv = id;
  for (int i = 0; i < out.rot_order - 1; ++i) rotinv = perm_mul(rotinv, rot);
  out.dihedral = perm_mul(perm_mul(pa, rot), pa) == rotinv;
  RootPerm tau = d4_triality_perm();
  RootPerm tau2 = perm_mul(tau, tau);  // = tau^-1
  auto conj = [&](const RootPerm& w) { return perm_mul(perm_mul(tau, w), tau2); };
  out.f_invariant = conj(pa) == pa && conj(pb) == pb;
  return out;
}

std::array<uint32_t, 4> frobenius_d4(const TorusSpec& spec, const gf::FieldCtx& F,
                                     const std::array<uint32_t, 4>& t) {
  require(spec.group == Group::D4Twisted, "D4 spec expected");
  std::array<uint32_t, 4> tq;
  for (int i = 0; i < 4; ++i) tq[i] = F.pow(t[i], (long long)spec.q);
  std::array<uint32_t, 4> tt = {tq[3], tq[1], tq[0], tq[2]};  // tau
  auto word = d4_twist_word(spec.twist);
  std::reverse(word.begin(), word.end());
  auto E = d4_conj_matrix(word);
  std::array<uint32_t, 4> out;
  for (int i = 0; i < 4; ++i) {
    uint32_t acc = 1;
    for (int j = 0; j < 4; ++j) acc = F.mul(acc, F.pow(tt[j], E[i][j]));
    out[i] = acc;
  }
  return out;
}

bool d4_member(const TorusSpec& spec, const gf::FieldCtx& F,
               const std::array<uint32_t, 4>& t) {
  for (auto v : t)
    if (!v) return false;
  return frobenius_d4(spec, F, t) == t;
}

}  // namespace ws::torus
