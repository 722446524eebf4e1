#include "ws/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ws::roots {

namespace {

// Gram matrix for the G2 base {a,b}: (a,a)=2, (b,b)=6, (a,b)=-3.
constexpr long kG2Gram[2][2] = {{2, -3}, {-3, 6}};

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(std::string("rootsys: ") + msg);
}

}  // namespace

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.c) x = (int8_t)-x;
  return r;
}

std::string Root::name() const {
  if (kind == Kind::G2) {
    int c1 = c[0], c2 = c[1];
    std::string s;
    auto term = [&](int k, const char* v) {
      if (!k) return;
      if (!s.empty()) s += k > 0 ? "+" : "-";
      else if (k < 0) s += "-";
      int a = std::abs(k);
      if (a != 1) s += std::to_string(a);
      s += v;
    };
    term(c1, "a");
    term(c2, "b");
    return s.empty() ? "0" : s;
  }
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (!c[i]) continue;
    if (!s.empty()) s += c[i] > 0 ? "+" : "-";
    else if (c[i] < 0) s += "-";
    s += "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

Root g2(int c1, int c2) {
  return Root{Kind::G2, {(int8_t)c1, (int8_t)c2, 0, 0}};
}

Root d4(int c1, int c2, int c3, int c4) {
  return Root{Kind::D4, {(int8_t)c1, (int8_t)c2, (int8_t)c3, (int8_t)c4}};
}

RootSystem::RootSystem(Kind kind) : kind_(kind) {
  if (kind == Kind::G2) {
    const int pos[6][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (auto& p : pos) {
      roots_.push_back(g2(p[0], p[1]));
      roots_.push_back(g2(-p[0], -p[1]));
    }
    base_ = {g2(1, 0), g2(0, 1)};  // {a, b}
  } else {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            int v[4] = {0, 0, 0, 0};
            v[i] = si;
            v[j] = sj;
            roots_.push_back(d4(v[0], v[1], v[2], v[3]));
          }
    base_ = {d4(1, -1, 0, 0), d4(0, 1, -1, 0), d4(0, 0, 1, -1), d4(0, 0, 1, 1)};
  }
  std::sort(roots_.begin(), roots_.end());
  for (const auto& r : roots_)
    if (height(r) > 0) positive_.push_back(r);
}

const RootSystem& RootSystem::G2() {
  static RootSystem sys(Kind::G2);
  return sys;
}

const RootSystem& RootSystem::D4() {
  static RootSystem sys(Kind::D4);
  return sys;
}

bool RootSystem::contains(const Root& r) const {
  return r.kind == kind_ && std::binary_search(roots_.begin(), roots_.end(), r);
}

int RootSystem::index_of(const Root& r) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
  require(it != roots_.end() && *it == r && r.kind == kind_, "not a root of this system");
  return (int)(it - roots_.begin());
}

long RootSystem::inner(const Root& r, const Root& s) const {
  require(r.kind == kind_ && s.kind == kind_, "roots from a different system");
  if (kind_ == Kind::G2) {
    long acc = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += (long)r.c[i] * kG2Gram[i][j] * s.c[j];
    return acc;
  }
  long acc = 0;
  for (int i = 0; i < 4; ++i) acc += (long)r.c[i] * s.c[i];
  return acc;
}

int RootSystem::cartan(const Root& r, const Root& s) const {
  long num = 2 * inner(r, s), den = inner(r, r);
  require(den != 0 && num % den == 0, "non-integral Cartan pairing");
  return (int)(num / den);
}

Root RootSystem::reflect(const Root& r, const Root& s) const {
  int k = cartan(r, s);
  Root out = s;
  for (int i = 0; i < 4; ++i) out.c[i] = (int8_t)(s.c[i] - k * r.c[i]);
  require(contains(out), "reflection left the root system");
  return out;
}

bool RootSystem::is_long(const Root& r) const {
  if (kind_ == Kind::D4) return false;  // simply laced
  return inner(r, r) == 6;
}

int RootSystem::height(const Root& r) const {
  if (kind_ == Kind::G2) return r.c[0] + r.c[1];
  // solve for base coordinates; the base matrix has the explicit inverse below
  // r1=e1-e2, r2=e2-e3, r3=e3-e4, r4=e3+e4:
  // c_r1 = x1, c_r2 = x1+x2, c_r3 = (x1+x2+x3-x4)/2, c_r4 = (x1+x2+x3+x4)/2
  int x1 = r.c[0], x2 = r.c[1], x3 = r.c[2];
  return 3 * x1 + 2 * x2 + x3;
}

std::vector<int> RootSystem::dual_coords(const Root& r) const {
  // rcheck = 2r/(r,r); solve rcheck = sum c_i * 2 b_i/(b_i,b_i) over the base.
  if (kind_ == Kind::G2) {
    // acheck = a, bcheck = b/3; rcheck = (2c1/rr) acheck + (6c2/rr) bcheck
    long rr = inner(r, r);
    long d1 = 2L * r.c[0], d2 = 6L * r.c[1];
    require(d1 % rr == 0 && d2 % rr == 0, "dual coord failure");
    return {(int)(d1 / rr), (int)(d2 / rr)};
  }
  // D4: all roots same length, rcheck = r; base coords of r
  int x1 = r.c[0], x2 = r.c[1], x3 = r.c[2], x4 = r.c[3];
  int c1 = x1, c2 = x1 + x2;
  int c3n = x1 + x2 + x3 - x4, c4n = x1 + x2 + x3 + x4;
  require(c3n % 2 == 0 && c4n % 2 == 0, "dual coord failure");
  return {c1, c2, c3n / 2, c4n / 2};
}

namespace {

// Sign table seed: rows/cols in the order a+b, a, -(2a+b), b, 3a+b, -(3a+2b).
const std::array<Root, 6> kEtaReps = {g2(1, 1),  g2(1, 0),  g2(-2, -1),
                                      g2(0, 1),  g2(3, 1),  g2(-3, -2)};
constexpr int kEtaSeed[6][6] = {
    {-1, -1, +1, -1, +1, +1},
    {+1, -1, -1, +1, -1, +1},
    {-1, +1, -1, +1, +1, -1},
    {-1, +1, +1, -1, +1, -1},
    {+1, -1, +1, -1, -1, +1},
    {+1, +1, -1, +1, -1, -1},

};

int eta_rep_index(const Root& r) {
  for (int i = 0; i < 6; ++i)
    if (kEtaReps[i] == r) return i;
  return -1;
}

}  // namespace

int eta(const Root& r, const Root& s) {
  require(r.kind == Kind::G2 && s.kind == Kind::G2, "eta is fixed only for G2");
  const auto& sys = RootSystem::G2();
  require(sys.contains(r) && sys.contains(s), "eta needs G2 roots");
  int ri = eta_rep_index(r), si = eta_rep_index(s);
  if (ri >= 0 && si >= 0) return kEtaSeed[ri][si];
  if (si < 0) return eta(r, -s);               // eta_{r,-s} = eta_{r,s}
  return eta(-r, sys.reflect(-r, s));          // eta_{-r,s} = eta_{r,w_r(s)}
}

Root triality(const Root& r) {
  require(r.kind == Kind::D4, "triality is defined on D4 roots");
  const auto& sys = RootSystem::D4();
  auto bc = sys.dual_coords(r);  // base coordinates (simply laced)
  // rho: r1 -> r3, r2 -> r2, r3 -> r4, r4 -> r1
  int n1 = bc[3], n2 = bc[1], n3 = bc[0], n4 = bc[2];
  // back to e-coordinates
  int e1 = n1;
  int e2 = n2 - n1;
  int e3 = n3 + n4 - n2;
  int e4 = n4 - n3;
  Root out = d4(e1, e2, e3, e4);
  require(sys.contains(out), "triality image is not a root");
  return out;
}

Root g2_rho(const Root& r) {
  require(r.kind == Kind::G2, "g2_rho is defined on G2 roots");
  static const std::map<std::pair<int, int>, std::pair<int, int>> images = {
      {{1, 0}, {0, 1}},  {{0, 1}, {1, 0}},  {{1, 1}, {3, 1}},
      {{3, 1}, {1, 1}},  {{2, 1}, {3, 2}},  {{3, 2}, {2, 1}},
  };
  int s = 1, c1 = r.c[0], c2 = r.c[1];
  auto it = images.find({c1, c2});
  if (it == images.end()) {
    it = images.find({-c1, -c2});
    s = -1;
    require(it != images.end(), "g2_rho needs a G2 root");
  }
  return g2(s * it->second.first, s * it->second.second);
}

std::vector<FoldClass> fold() {
  const auto& sys = RootSystem::D4();
  std::vector<bool> used(24, false);
  std::vector<FoldClass> out;
  for (const auto& r : sys.roots()) {
    int idx = sys.index_of(r);
    if (used[idx]) continue;
    FoldClass cls;
    Root cur = r;
    for (int k = 0; k < 3; ++k) {
      int ci = sys.index_of(cur);
      if (!used[ci]) {
        used[ci] = true;
        cls.orbit.push_back(cur);
      }
      cur = triality(cur);
    }
    std::sort(cls.orbit.begin(), cls.orbit.end());
    cls.a1_cubed = cls.orbit.size() == 3;
    for (int i = 0; i < 4; ++i) {
      int acc = 0;
      if (cls.a1_cubed) {
        for (const auto& o : cls.orbit) acc += o.c[i];
      } else {
        acc = 3 * cls.orbit[0].c[i];
      }
      cls.projected_times3[i] = acc;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

nlohmann::ordered_json table_dump() {
  const auto& sys = RootSystem::G2();
  nlohmann::ordered_json j;
  j["roots"] = nlohmann::ordered_json::array();
  for (const auto& r : sys.roots()) j["roots"].push_back(r.name());
  auto cart = nlohmann::ordered_json::array();
  auto et = nlohmann::ordered_json::array();
  for (const auto& r : sys.roots()) {
    auto crow = nlohmann::ordered_json::array();
    auto erow = nlohmann::ordered_json::array();
    for (const auto& s : sys.roots()) {
      crow.push_back(sys.cartan(r, s));
      erow.push_back(eta(r, s));
    }
    cart.push_back(crow);
    et.push_back(erow);
  }
  j["cartan"] = cart;
  j["eta"] = et;
  return j;
}

}  // namespace ws::roots
