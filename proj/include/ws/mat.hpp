#pragma once

// Dense square matrices over a FieldCtx, with canonical byte encodings used
// as element keys by the group engine.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ws/gf.hpp"

namespace ws::mat {

struct Mat {
  const gf::FieldCtx* F = nullptr;
  int n = 0;
  std::vector<uint32_t> a;  // row-major packed field elements

  Mat() = default;
  Mat(const gf::FieldCtx& ctx, int dim) : F(&ctx), n(dim), a(dim * dim, 0) {}

  static Mat identity(const gf::FieldCtx& ctx, int dim) {
    Mat m(ctx, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  uint32_t& at(int i, int j) { return a[i * n + j]; }
  uint32_t at(int i, int j) const { return a[i * n + j]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.F == y.F && x.n == y.n && x.a == y.a;
  }

  Mat operator*(const Mat& o) const {
    if (F != o.F || n != o.n) throw std::domain_error("mat: mixed shapes");
    const auto& ctx = *F;
    Mat r(ctx, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        uint32_t v = at(i, k);
        if (!v) continue;
        const uint32_t* brow = &o.a[k * n];
        uint32_t* rrow = &r.a[i * n];
        for (int j = 0; j < n; ++j)
          if (brow[j]) rrow[j] = ctx.add(rrow[j], ctx.mul(v, brow[j]));
      }
    return r;
  }

  Mat inverse() const;
  Mat pow(long long e) const;
  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  unsigned bytes_per_entry() const {
    uint64_t q = F->q();
    return q <= 256 ? 1 : (q <= 65536 ? 2 : 3);
  }
  std::vector<uint8_t> encode() const;
  static Mat decode(const gf::FieldCtx& ctx, int dim, const uint8_t* data);
};

}  // namespace ws::mat
