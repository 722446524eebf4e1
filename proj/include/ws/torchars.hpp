#pragma once

// Character lattices of the split/twisted maximal tori with dihedral Weyl
// action: stabilizers, orbits, canonical block characters, restriction from
// the triality side to the G2 subtorus, and torus-level weight counts for
// abelian-defect blocks.  Characters are exponent tuples throughout.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ws::tchar {

// --- G2 side -----------------------------------------------------------------

struct G2Ctx {
  uint64_t q;
  int eps;  // +1 or -1
  long long m() const { return (long long)q - eps; }
};

struct CharG2 {
  long long i, j;
  friend bool operator==(const CharG2& x, const CharG2& y) {
    return x.i == y.i && x.j == y.j;
  }
  friend bool operator<(const CharG2& x, const CharG2& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  }
};

struct CharAction {
  std::string label;  // "1", "v2", "v3", "v3^2", "v6", "v6^5", "n_a", ...
  std::array<std::array<long long, 2>, 2> mat;  // integer 2x2, acts on (i,j)
  bool reflection;
};

// the twelve elements of the dihedral Weyl action on Irr(T_eps)
const std::vector<CharAction>& g2_char_actions();

CharG2 reduce(const G2Ctx& c, long long i, long long j);
CharG2 act(const CharAction& a, const G2Ctx& c, const CharG2& t);

std::vector<int> stabilizer(const G2Ctx& c, const CharG2& t);  // action indices
std::vector<CharG2> orbit_of(const G2Ctx& c, const CharG2& t);

struct StabClass {
  int order = 0;
  std::string name;  // "1", "C2", "C3", "C2xC2", "C6", "S3", "D12"
  std::vector<std::string> generators;
};
StabClass classify_stabilizer(const std::vector<int>& indices);

// true iff both exponents are divisible by the ell-part of the modulus,
// i.e. the ell-part of the torus lies in the kernel
bool canonical_for_block(int ell, const G2Ctx& c, const CharG2& t);

// number of weight characters contributed by the orbit of a canonical
// character with the given (ell'-) stabilizer: the number of extensions
int count_weights_abelian(const StabClass& stab, int ell);

// --- triality side -------------------------------------------------------------

struct D4Ctx {
  uint64_t q;
  int eps;
  long long m1() const { return (long long)q * q * q - eps; }
  long long m2() const { return (long long)q - eps; }
  long long kappa() const { return (long long)q * q + eps * (long long)q + 1; }
};

struct CharD4 {
  long long i, j;  // i mod m1, j mod m2
  friend bool operator==(const CharD4& x, const CharD4& y) {
    return x.i == y.i && x.j == y.j;
  }
  friend bool operator<(const CharD4& x, const CharD4& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  }
};

struct CharActionD4 {
  std::string label;
  std::vector<int> word;  // in the D4 base reflections, for cross-checks
  long long a, alpha;     // i' = a i + alpha j   (mod m1)
  long long b, d;         // j' = b i + d j       (mod m2)
};

// the twelve elements of the fixed dihedral Weyl group acting on Irr(T_eps),
// derived from the torus coordinate action through the parametrization
std::vector<CharActionD4> d4_char_actions(const D4Ctx& c);

CharD4 reduce(const D4Ctx& c, long long i, long long j);
CharD4 act(const CharActionD4& a, const D4Ctx& c, const CharD4& t);
std::vector<int> stabilizer(const D4Ctx& c, const CharD4& t);
std::vector<CharD4> orbit_of(const D4Ctx& c, const CharD4& t);

// exponent reduction onto the G2 subtorus
CharG2 restrict_to_g2(const D4Ctx& c, const CharD4& t);
bool canonical_for_block(int ell, const D4Ctx& c, const CharD4& t);
// restriction to the subtorus is trivial
bool subtorus_in_kernel(const D4Ctx& c, const CharD4& t);

enum class Trichotomy { StabIsTorus, StabEqualsRestrictionStab, IndexTwo };
// classification of a canonical character's stabilizer against the stabilizer
// of its restriction; throws if the character is not canonical for ell = 3
Trichotomy trichotomy(const D4Ctx& c, const CharD4& t);

}  // namespace ws::tchar
