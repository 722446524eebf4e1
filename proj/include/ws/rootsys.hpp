#pragma once

// Root systems of types G2 and D4: Cartan pairings, reflections, the G2 sign
// table eta_{r,s} with its closure rules, D4 triality and folding.
//
// G2 roots are integer pairs (c1,c2) in the base {a,b}; D4 roots are integer
// 4-vectors in the orthonormal basis e1..e4 (two nonzero entries, +-1).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ws::roots {

enum class Kind : uint8_t { G2, D4 };

struct Root {
  Kind kind;
  std::array<int8_t, 4> c;  // G2 uses c[0..1], c[2..3] zero

  friend bool operator==(const Root& x, const Root& y) {
    return x.kind == y.kind && x.c == y.c;
  }
  friend bool operator<(const Root& x, const Root& y) { return x.c < y.c; }
  Root operator-() const;
  std::string name() const;  // e.g. "3a+b", "e1-e2"
};

Root g2(int c1, int c2);
Root d4(int c1, int c2, int c3, int c4);

class RootSystem {
public:
  static const RootSystem& G2();
  static const RootSystem& D4();

  Kind kind() const { return kind_; }
  // all roots, sorted lexicographically on coordinates (fixed ordering)
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& base() const { return base_; }
  const std::vector<Root>& positive() const { return positive_; }

  bool contains(const Root& r) const;
  int index_of(const Root& r) const;  // position in roots(), throws if absent

  long inner(const Root& r, const Root& s) const;  // (r,s), exact integer
  int cartan(const Root& r, const Root& s) const;  // <r,s> = 2(r,s)/(r,r)
  Root reflect(const Root& r, const Root& s) const;  // w_r(s)
  bool is_long(const Root& r) const;
  int height(const Root& r) const;  // sum of base coefficients

  // coefficients c_i with rcheck = sum c_i * rcheck_i over the base
  std::vector<int> dual_coords(const Root& r) const;

private:
  RootSystem(Kind kind);
  Kind kind_;
  std::vector<Root> roots_, base_, positive_;
};

// G2 sign table (total on Sigma x Sigma via the closure rules
// eta_{r,r} = -1, eta_{r,-s} = eta_{r,s}, eta_{-r,s} = eta_{r,w_r(s)}).
// Evaluation order: seed lookup, then the column rule, then the row rule;
// eta_{-r,-s} strips the column sign first.
int eta(const Root& r, const Root& s);

// The triality isometry rho of D4: r1 -> r3 -> r4 -> r1, r2 fixed.
Root triality(const Root& r);

// The length-swapping diagram symmetry of G2 (a <-> b); used by the graph
// automorphism of the group when p = 3.
Root g2_rho(const Root& r);

struct FoldClass {
  std::vector<Root> orbit;      // Sigma(S): 1 root (A1) or a rho-orbit (A1^3)
  std::array<int, 4> projected_times3;  // 3 * rtilde, an integer vector
  bool a1_cubed;                // |orbit| == 3
};

// The 12 classes of the projection of D4 onto the triality-fixed subspace.
std::vector<FoldClass> fold();

// {"cartan": [[...]], "eta": [[...]]} over the fixed G2 root ordering.
nlohmann::ordered_json table_dump();

}  // namespace ws::roots
