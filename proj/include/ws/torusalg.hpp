#pragma once

// Symbolic maximal-torus algebra for G2(q) and the triality-twisted D4(q):
// twisted fixed-point lattices, orders and invariant factors via Smith normal
// form, Weyl and Frobenius actions on torus coordinates.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ws/gf.hpp"
#include "ws/smith.hpp"

namespace ws::torus {

enum class Group : uint8_t { G2, D4Twisted };

// twist rows in the order of the printed torus tables
inline constexpr int kG2Twists = 6;
inline constexpr int kD4Twists = 7;
const char* twist_label(Group g, int twist);

struct TorusSpec {
  Group group;
  int twist;
  uint64_t q;
};

struct TorusInfo {
  long long order = 0;
  std::vector<long long> invariants;           // nontrivial, ascending
  smith::Mat fixed_matrix;                     // qA - I on the exponent lattice
  std::vector<std::vector<long long>> generator_exponents;
};

TorusInfo torus_members(const TorusSpec& spec);

// --- G2 torus coordinate actions -----------------------------------------
// Torus points are coordinate triples (z1,z2,z3), z1 z2 z3 = 1.  Weyl action
// forms are signed coordinate permutations h -> n^-1 h n.
struct CoordMap {
  std::array<int, 3> perm;  // z'_m = z_{perm[m]}^(inv ? -1 : +1)
  bool invert;
};
// the conjugation form attached to n_r(1) for a G2 root index
CoordMap g2_weyl_form(int root_index);
CoordMap g2_v2_form();
CoordMap g2_v3_form();
CoordMap compose(const CoordMap& second, const CoordMap& first);

std::array<uint32_t, 3> apply_form(const gf::FieldCtx& F, const CoordMap& m,
                                   const std::array<uint32_t, 3>& z);

// 2x2 exponent-lattice matrix of a coordinate map on (z1, z2)
smith::Mat exponent_matrix(const CoordMap& m);

// twisted Frobenius x -> w^-1 x^q w on G2 torus coordinates
std::array<uint32_t, 3> frobenius_g2(const TorusSpec& spec, const gf::FieldCtx& F,
                                     const std::array<uint32_t, 3>& z);
bool g2_member(const TorusSpec& spec, const gf::FieldCtx& F,
               const std::array<uint32_t, 3>& z);

// --- D4 side ---------------------------------------------------------------
// Weyl group elements as permutations of the 24 roots (faithful), used for
// word search and triality-invariance checks.
using RootPerm = std::array<int8_t, 24>;
RootPerm d4_reflection(int base_index);
RootPerm d4_triality_perm();
RootPerm perm_mul(const RootPerm& a, const RootPerm& b);  // a after b
int perm_order(const RootPerm& p);

// base-reflection conjugation w_{r_i} h w_{r_i}^-1 as a 4x4 exponent matrix
smith::Mat d4_base_form(int base_index);
// exponent matrix of the triality permutation on (t1..t4)
smith::Mat d4_tau_matrix();
// exponent matrix of h -> w h w^-1 for a word in base reflections
smith::Mat d4_conj_matrix(const std::vector<int>& word);
// word (in base reflections 0..3) for each twist row of the torus table
const std::vector<int>& d4_twist_word(int twist);

struct WeylFixedGroup {
  std::vector<int> gen_a;        // word for w_{r2}
  std::vector<int> gen_b;        // word for w_{r1} w_{r3} w_{r4}
  int order = 0;                 // closure size (12)
  int rot_order = 0;             // order of w_{r1} w_{r3} w_{r4} w_{r2} (6)
  bool dihedral = false;
  bool f_invariant = false;      // both generators fixed by triality conj
};
// the fixed Weyl group of the twisted Frobenius for twist rows 1 and w0
WeylFixedGroup weyl_fixed_group(int twist);

// twisted Frobenius x -> w^-1 tau(x^q) w on (t1..t4) coordinates
std::array<uint32_t, 4> frobenius_d4(const TorusSpec& spec, const gf::FieldCtx& F,
                                     const std::array<uint32_t, 4>& t);
bool d4_member(const TorusSpec& spec, const gf::FieldCtx& F,
               const std::array<uint32_t, 4>& t);

}  // namespace ws::torus
