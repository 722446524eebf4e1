#include "ws/mat.hpp"

namespace ws::mat {

Mat Mat::inverse() const {
  const auto& ctx = *F;
  Mat left = *this, right = identity(ctx, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (left.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("mat: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(left.at(piv, j), left.at(col, j));
        std::swap(right.at(piv, j), right.at(col, j));
      }
    }
    uint32_t s = ctx.inv(left.at(col, col));
    for (int j = 0; j < n; ++j) {
      left.at(col, j) = ctx.mul(left.at(col, j), s);
      right.at(col, j) = ctx.mul(right.at(col, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      uint32_t f = left.at(i, col);
      if (!f) continue;
      for (int j = 0; j < n; ++j) {
        left.at(i, j) = ctx.sub(left.at(i, j), ctx.mul(f, left.at(col, j)));
        right.at(i, j) = ctx.sub(right.at(i, j), ctx.mul(f, right.at(col, j)));
      }
    }
  }
  return right;
}

Mat Mat::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat r = identity(*F, n), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<uint8_t> Mat::encode() const {
  unsigned w = bytes_per_entry();
  std::vector<uint8_t> out(a.size() * w);
  size_t k = 0;
  for (uint32_t v : a)
    for (unsigned b = 0; b < w; ++b) out[k++] = (uint8_t)(v >> (8 * b));
  return out;
}

Mat Mat::decode(const gf::FieldCtx& ctx, int dim, const uint8_t* data) {
  Mat m(ctx, dim);
  unsigned w = m.bytes_per_entry();
  size_t k = 0;
  for (auto& v : m.a) {
    v = 0;
    for (unsigned b = 0; b < w; ++b) v |= (uint32_t)data[k++] << (8 * b);
  }
  return m;
}

}  // namespace ws::mat
