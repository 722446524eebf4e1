#include "ws/torchars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ws/rootsys.hpp"
#include "ws/torusalg.hpp"

namespace ws::tchar {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error("torchars: " + msg);
}

long long ell_part(long long n, int ell) {
  long long w = 1;
  while (n % ell == 0) {
    n /= ell;
    w *= ell;
  }
  return w;
}

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 mul2(const Mat2& x, const Mat2& y) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

Mat2 transpose2(const smith::Mat& m) {
  return Mat2{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}

}  // namespace

// --- G2 char actions -----------------------------------------------------------

const std::vector<CharAction>& g2_char_actions() {
  static const std::vector<CharAction> actions = [] {
    const auto& sys = roots::RootSystem::G2();
    // chi^w(h) = chi(w h w^-1); the reflection forms are involutions, so the
    // character matrix is the transpose of the exponent matrix of the form
    auto refl_mat = [&](int c1, int c2) {
      int ri = sys.index_of(roots::g2(c1, c2));
      return transpose2(torus::exponent_matrix(torus::g2_weyl_form(ri)));
    };
    Mat2 na = refl_mat(1, 0), nb = refl_mat(0, 1), nab = refl_mat(1, 1);
    Mat2 n2ab = refl_mat(2, 1), n3ab = refl_mat(3, 1), n3a2b = refl_mat(3, 2);
    // v3 conjugation is the inverse of its Lemma form; square the form
    Mat2 v3 = transpose2(torus::exponent_matrix(
        torus::compose(torus::g2_v3_form(), torus::g2_v3_form())));
    Mat2 id{{{1, 0}, {0, 1}}};
    Mat2 v2{{{-1, 0}, {0, -1}}};
    Mat2 v32 = mul2(v3, v3);
    Mat2 v6 = mul2(v2, v3), v65 = mul2(v2, v32);
    std::vector<CharAction> out = {
        {"1", id, false},          {"v2", v2, false},
        {"v3", v3, false},         {"v3^2", v32, false},
        {"v6", v6, false},         {"v6^5", v65, false},
        {"n_a", na, true},         {"n_b", nb, true},
        {"n_{a+b}", nab, true},    {"n_{2a+b}", n2ab, true},
        {"n_{3a+b}", n3ab, true},  {"n_{3a+2b}", n3a2b, true},
    };
    // closure sanity: twelve distinct integer matrices forming a group
    for (const auto& x : out)
      for (const auto& y : out) {
        Mat2 prod = mul2(x.mat, y.mat);
        bool found = false;
        for (const auto& z : out) found |= z.mat == prod;
        if (!found) throw std::logic_error("torchars: action set is not closed");
      }
    return out;
  }();
  return actions;
}

CharG2 reduce(const G2Ctx& c, long long i, long long j) {
  return {mod(i, c.m()), mod(j, c.m())};
}

CharG2 act(const CharAction& a, const G2Ctx& c, const CharG2& t) {
  return reduce(c, a.mat[0][0] * t.i + a.mat[0][1] * t.j,
                a.mat[1][0] * t.i + a.mat[1][1] * t.j);
}

std::vector<int> stabilizer(const G2Ctx& c, const CharG2& t) {
  std::vector<int> out;
  const auto& acts = g2_char_actions();
  for (int k = 0; k < (int)acts.size(); ++k)
    if (act(acts[k], c, t) == t) out.push_back(k);
  return out;
}

std::vector<CharG2> orbit_of(const G2Ctx& c, const CharG2& t) {
  std::vector<CharG2> out;
  for (const auto& a : g2_char_actions()) {
    CharG2 u = act(a, c, t);
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StabClass classify_stabilizer(const std::vector<int>& indices) {
  const auto& acts = g2_char_actions();
  StabClass s;
  s.order = (int)indices.size();
  int reflections = 0;
  for (int k : indices)
    if (acts[k].reflection) ++reflections;
  switch (s.order) {
    case 1: s.name = "1"; break;
    case 2: s.name = "C2"; break;
    case 3: s.name = "C3"; break;
    case 4: s.name = "C2xC2"; break;
    case 6: s.name = reflections ? "S3" : "C6"; break;
    case 12: s.name = "D12"; break;
    default: s.name = "?"; break;
  }
  for (int k : indices)
    if (acts[k].label != "1") s.generators.push_back(acts[k].label);
  return s;
}

bool canonical_for_block(int ell, const G2Ctx& c, const CharG2& t) {
  require(ell == 2 || ell == 3, "supported block primes are 2 and 3");
  long long w = ell_part(c.m(), ell);
  return t.i % w == 0 && t.j % w == 0;
}

int count_weights_abelian(const StabClass& stab, int ell) {
  require(stab.order % ell != 0,
          "stabilizer order divisible by ell contradicts the defect assumption");
  return stab.order;
}

// --- triality side ---------------------------------------------------------------

std::vector<CharActionD4> d4_char_actions(const D4Ctx& c) {
  long long M1 = c.m1(), m2 = c.m2(), kappa = c.kappa();
  long long q = (long long)c.q;
  int eps = c.eps;

  // enumerate the fixed dihedral group as words in the two generators
  struct Elem {
    std::string label;
    std::vector<int> word;  // in base reflections
  };
  std::vector<Elem> elems;
  {
    std::vector<int> ga = {1}, gb = {0, 2, 3};
    auto key = [&](const std::vector<int>& w) { return torus::d4_conj_matrix(w); };
    std::vector<std::pair<smith::Mat, Elem>> seen;
    auto insert = [&](const Elem& e) {
      auto k = key(e.word);
      for (auto& [m, ex] : seen)
        if (m == k) return;
      seen.push_back({k, e});
    };
    insert({"1", {}});
    bool grew = true;
    while (grew) {
      grew = false;
      auto snapshot = seen;
      for (auto& [m, e] : snapshot) {
        for (int which = 0; which < 2; ++which) {
          Elem ne;
          ne.word = e.word;
          const auto& g = which == 0 ? ga : gb;
          ne.word.insert(ne.word.end(), g.begin(), g.end());
          ne.label = e.label == "1" ? (which == 0 ? "s" : "r")
                                    : e.label + (which == 0 ? "s" : "r");
          size_t before = seen.size();
          insert(ne);
          if (seen.size() != before) grew = true;
        }
      }
    }
    require(seen.size() == 12, "fixed Weyl group on the torus has order 12");
    for (auto& [m, e] : seen) elems.push_back(e);
  }

  std::vector<CharActionD4> out;
  for (const auto& e : elems) {
    auto E = torus::d4_conj_matrix(e.word);
    // translate the action on (t1,t2,t3,t4) = (u1, kappa u2, eps q u1, q^2 u1)
    // into an action on the parameters (u1 mod M1, u2 mod m2)
    auto coeff_u1 = [&](int row) {
      return mod(E[row][0] + eps * q * E[row][2] + q * q * E[row][3], M1);
    };
    long long a = coeff_u1(0);
    long long b1 = mod(E[0][1] * kappa, M1);      // u2-coefficient of u1'
    long long alpha_raw = coeff_u1(1);            // u1-coefficient of kappa*u2'
    long long d = mod(E[1][1], m2);
    require(alpha_raw % kappa == 0, "torus action does not preserve the parametrization");
    // consistency of the dependent coordinates
    require(mod(coeff_u1(2) - eps * q * a, M1) == 0, "coordinate 3 inconsistent");
    require(mod(E[2][1] * kappa - eps * q * b1, M1) == 0, "coordinate 3 inconsistent");
    require(mod(coeff_u1(3) - q * q * a, M1) == 0, "coordinate 4 inconsistent");
    require(mod(E[3][1] * kappa - q * q * b1, M1) == 0, "coordinate 4 inconsistent");

    CharActionD4 ca;
    ca.label = e.label;
    ca.word = e.word;
    // dual action on character exponents
    ca.a = a;
    ca.alpha = alpha_raw;            // = kappa * (u1-coefficient of u2')
    ca.b = mod(E[0][1], m2);         // since b1 = kappa * E[0][1]
    ca.d = d;
    out.push_back(ca);
  }
  return out;
}

CharD4 reduce(const D4Ctx& c, long long i, long long j) {
  return {mod(i, c.m1()), mod(j, c.m2())};
}

CharD4 act(const CharActionD4& a, const D4Ctx& c, const CharD4& t) {
  return reduce(c, a.a * t.i + a.alpha * t.j, a.b * t.i + a.d * t.j);
}

std::vector<int> stabilizer(const D4Ctx& c, const CharD4& t) {
  std::vector<int> out;
  auto acts = d4_char_actions(c);
  for (int k = 0; k < (int)acts.size(); ++k)
    if (act(acts[k], c, t) == t) out.push_back(k);
  return out;
}

std::vector<CharD4> orbit_of(const D4Ctx& c, const CharD4& t) {
  std::vector<CharD4> out;
  for (const auto& a : d4_char_actions(c)) {
    CharD4 u = act(a, c, t);
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CharG2 restrict_to_g2(const D4Ctx& c, const CharD4& t) {
  return {mod(t.i, c.m2()), mod(t.j, c.m2())};
}

bool canonical_for_block(int ell, const D4Ctx& c, const CharD4& t) {
  require(ell == 2 || ell == 3, "supported block primes are 2 and 3");
  return t.i % ell_part(c.m1(), ell) == 0 && t.j % ell_part(c.m2(), ell) == 0;
}

bool subtorus_in_kernel(const D4Ctx& c, const CharD4& t) {
  auto r = restrict_to_g2(c, t);
  return r.i == 0 && r.j == 0;
}

Trichotomy trichotomy(const D4Ctx& c, const CharD4& t) {
  require(canonical_for_block(3, c, t), "trichotomy applies to canonical 3-block characters");
  auto acts = d4_char_actions(c);
  std::vector<int> s1, s2;
  auto rt = restrict_to_g2(c, t);
  for (int k = 0; k < (int)acts.size(); ++k) {
    CharD4 u = act(acts[k], c, t);
    if (u == t) s1.push_back(k);
    if (restrict_to_g2(c, u) == rt) s2.push_back(k);
  }
  if (s1.size() == 1) return Trichotomy::StabIsTorus;
  if (s1 == s2) return Trichotomy::StabEqualsRestrictionStab;
  if (s1.size() == 2 && s2.size() == 4) {
    require(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()),
            "stabilizer not contained in restriction stabilizer");
    return Trichotomy::IndexTwo;
  }
  // characters with the subtorus in their kernel have stabilizer order
  // divisible by 3; their block has a larger defect group and the stabilizer
  // classification does not apply to them
  require(!subtorus_in_kernel(c, t),
          "subtorus lies in the kernel; the block defect assumption fails");
  throw std::logic_error("torchars: character fits none of the three stabilizer cases");
}

}  // namespace ws::tchar
