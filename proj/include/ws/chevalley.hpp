#pragma once

// Matrix model of the universal Chevalley group of type G2 in the
// 14-dimensional adjoint representation: a fixed Chevalley basis whose sign
// table matches the classical one, generators x_r(t), n_r(t), h_r(t),
// the distinguished elements v2/v3/v6/y, and the automorphisms F_p and Gamma.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ws/gf.hpp"
#include "ws/mat.hpp"
#include "ws/rootsys.hpp"

namespace ws::chev {

inline constexpr int kDim = 14;  // 12 root vectors + 2 Cartan

struct CommTerm {
  int i, j;      // positive integers with i*r + j*s a root
  int root;      // index of i*r + j*s
  long long c;   // integer constant; parameter is c * (-t)^i * u^j
};

class Basis {
public:
  static const Basis& get();  // built once; throws if sign resolution fails

  const roots::RootSystem& sys() const { return *sys_; }
  // structure constant N_{r,s} with [e_r, e_s] = N_{r,s} e_{r+s}; 0 if r+s
  // is not a root
  long long n_const(int r, int s) const { return N_[r][s]; }
  int eta(int r, int s) const { return eta_[r][s]; }
  // (ad e_r)^k / k!, k = 0..4, exact integer matrices
  const std::array<std::array<long long, kDim * kDim>, 5>& divided_powers(int r) const {
    return dp_[r];
  }
  // commutator expansion of [x_r(t), x_s(u)] (convention g^-1 h^-1 g h),
  // terms ordered by (i+j, i) ascending
  const std::vector<CommTerm>& comm_terms(int r, int s) const;
  // Jacobi identity over all basis triples; throws on violation
  void check_jacobi() const;
  // chosen signs on the four extraspecial pairs, in table order
  const std::array<int, 4>& extraspecial_signs() const { return seed_; }

private:
  Basis();
  void build_comm_terms();
  const roots::RootSystem* sys_;
  long long N_[12][12];
  int eta_[12][12];
  std::vector<std::array<std::array<long long, kDim * kDim>, 5>> dp_;
  std::vector<std::vector<CommTerm>> comm_;
  std::array<int, 4> seed_;
  std::array<std::array<long long, kDim>, kDim> bracket_[14];  // bracket table
  friend struct BasisBuilder;
};

// generator words
enum class GenKind : uint8_t { X, N, H };
struct Gen {
  GenKind kind;
  int root;     // index into RootSystem::G2().roots()
  uint32_t t;   // packed field element
};
using Word = std::vector<Gen>;

struct GroupElem {
  mat::Mat m;
  Word w;
  friend GroupElem operator*(const GroupElem& a, const GroupElem& b) {
    GroupElem r{a.m * b.m, a.w};
    r.w.insert(r.w.end(), b.w.begin(), b.w.end());
    return r;
  }
};

// generator matrices; root is an index into the fixed G2 root ordering
mat::Mat x_mat(const gf::FieldCtx& F, int root, uint32_t t);
mat::Mat n_mat(const gf::FieldCtx& F, int root, uint32_t t);  // t != 0
mat::Mat h_mat(const gf::FieldCtx& F, int root, uint32_t t);  // t != 0
GroupElem x_el(const gf::FieldCtx& F, int root, uint32_t t);
GroupElem n_el(const gf::FieldCtx& F, int root, uint32_t t);
GroupElem h_el(const gf::FieldCtx& F, int root, uint32_t t);
mat::Mat eval_word(const gf::FieldCtx& F, const Word& w);

// torus element h(z1,z2,z3), z1 z2 z3 = 1, all nonzero
mat::Mat torus_mat(const gf::FieldCtx& F, uint32_t z1, uint32_t z2, uint32_t z3);
// inverse: recover (z1,z2,z3) from a torus matrix; throws if not of that form
std::array<uint32_t, 3> torus_extract(const mat::Mat& m);

enum class Named { v2, v3, v6, y };
GroupElem named(Named which, const gf::FieldCtx& F);

struct AutoMap {
  enum class Kind { FieldFp, GraphGamma } kind;
  unsigned exponent = 1;  // F_p^e, or Gamma^e
};
// word-level application; Gamma requires characteristic 3
GroupElem apply_auto(const AutoMap& a, const gf::FieldCtx& F, const GroupElem& g);
Word apply_auto_word(const AutoMap& a, const gf::FieldCtx& F, const Word& w);

// sign extracted from n_r(1) x_s(1) n_r(1)^-1 = x_{w_r(s)}(sign)
int eta_from_matrices(const gf::FieldCtx& F, int r, int s);

struct RelationCheck {
  std::string relation;
  bool pass = true;
  long long instances = 0;
  std::string witness;  // first failing instance, if any
};
struct RelationReport {
  uint64_t q = 0;
  bool exhaustive = false;
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Verifies relation families (i)-(viii) plus the commutator formula.
// Exhaustive when q <= 5 or forced; otherwise `samples` random instances
// per family from the given seed.
RelationReport verify_steinberg(uint64_t p, unsigned k, bool force_exhaustive = false,
                                int samples = 1000, uint64_t seed = 1);

}  // namespace ws::chev
