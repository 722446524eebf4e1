#pragma once

// Exact arithmetic in GF(p^k) for small fields (p^k <= 2^20).
//
// Elements are stored packed: an element sum c_i * x^i (0 <= c_i < p) is the
// integer sum c_i * p^i.  Multiplication goes through discrete-log tables of
// a fixed primitive element, addition is digit-wise (table-backed for small
// fields, XOR for characteristic 2).

#include <cstdint>
#include <string>
#include <vector>

namespace ws::gf {

inline constexpr uint64_t kMaxFieldSize = 1u << 20;

class FieldCtx {
public:
  // Cached, deterministic context for GF(p^k).  The modulus is the monic
  // irreducible of degree k over GF(p) with the smallest packed encoding.
  static const FieldCtx& get(uint64_t p, unsigned k);

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t q() const { return q_; }
  // Modulus coefficients c_0..c_k, c_k = 1.  For k = 1 this is {0,1}, i.e. x.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!addtab_.empty()) return addtab_[(uint64_t)a * q_ + b];
    return add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return negtab_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = (uint64_t)log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, long long e) const;
  // a^(p^e)
  uint32_t frobenius(uint32_t a, unsigned e = 1) const;

  uint32_t one() const { return 1; }
  uint32_t from_int(long long n) const;  // image of n under Z -> GF(p) -> GF(q)
  uint32_t generator() const { return gen_; }
  uint64_t log(uint32_t a) const;        // a != 0
  uint32_t exp_of(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  uint64_t mult_order(uint32_t a) const;  // a != 0
  // All z with z^n = 1; there are gcd(n, q-1) of them, sorted by encoding.
  std::vector<uint32_t> roots_of_unity(long long n) const;

  uint32_t coeff(uint32_t a, unsigned i) const;  // c_i of the packed element
  std::string show(uint32_t a) const;            // debug print as polynomial

private:
  FieldCtx(uint64_t p, unsigned k);
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint64_t p_;
  unsigned k_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;   // size q-1
  std::vector<uint32_t> log_;   // size q, log_[0] unused
  std::vector<uint32_t> addtab_;  // q*q when small enough, else empty
  std::vector<uint32_t> negtab_;
  std::vector<uint64_t> order_primes_;  // prime factors of q-1
};

struct FieldElem {
  const FieldCtx* F = nullptr;
  uint32_t v = 0;

  FieldElem() = default;
  FieldElem(const FieldCtx& ctx, uint32_t packed) : F(&ctx), v(packed) {}

  bool is_zero() const { return v == 0; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.F == b.F && a.v == b.v;
  }
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const { return FieldElem(*F, F->neg(v)); }
  FieldElem inverse() const { return FieldElem(*F, F->inv(v)); }
  FieldElem pow(long long e) const { return FieldElem(*F, F->pow(v, e)); }
  FieldElem frob(unsigned e = 1) const { return FieldElem(*F, F->frobenius(v, e)); }
  std::string show() const { return F->show(v); }
};

// Embedding along a tower GF(p^k) -> GF(p^(k*d)).  The image of the small
// field's polynomial generator is the smallest (by encoding) root of the
// small modulus in the big field; cached per context pair.
uint32_t embed(const FieldCtx& from, uint32_t a, const FieldCtx& into);
FieldElem embed(const FieldElem& a, const FieldCtx& into);

}  // namespace ws::gf
