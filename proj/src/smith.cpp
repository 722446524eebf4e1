#include "ws/smith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ws::smith {

namespace {

void row_op(Mat& m, int i, int j, long long f) {  // row_i += f * row_j
  for (size_t k = 0; k < m[i].size(); ++k) m[i][k] += f * m[j][k];
}
void col_op(Mat& m, int i, int j, long long f) {  // col_i += f * col_j
  for (size_t k = 0; k < m.size(); ++k) m[k][i] += f * m[k][j];
}

}  // namespace

SNF smith_normal_form(Mat a) {
  size_t n = a.size();
  if (n == 0) return {a, {}, {}};
  size_t m = a[0].size();
  Mat u(n, std::vector<long long>(n, 0)), v(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (size_t i = 0; i < m; ++i) v[i][i] = 1;

  size_t t = 0;
  while (t < n && t < m) {
    // find a nonzero pivot with minimal absolute value
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    std::swap(u[t], u[pi]);
    for (size_t k = 0; k < n; ++k) std::swap(a[k][t], a[k][pj]);
    for (size_t k = 0; k < m; ++k) std::swap(v[k][t], v[k][pj]);

    bool dirty = false;
    for (size_t i = t + 1; i < n; ++i) {
      long long f = a[i][t] / a[t][t];
      if (f) {
        row_op(a, (int)i, (int)t, -f);
        row_op(u, (int)i, (int)t, -f);
      }
      if (a[i][t] != 0) dirty = true;
    }
    for (size_t j = t + 1; j < m; ++j) {
      long long f = a[t][j] / a[t][t];
      if (f) {
        col_op(a, (int)j, (int)t, -f);
        col_op(v, (int)j, (int)t, -f);
      }
      if (a[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // remainder left somewhere, re-pivot

    // divisibility: a[t][t] must divide every remaining entry
    bool fixed = true;
    for (size_t i = t + 1; i < n && fixed; ++i)
      for (size_t j = t + 1; j < m && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_op(a, (int)t, (int)i, 1);
          row_op(u, (int)t, (int)i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  for (size_t i = 0; i < n && i < m; ++i)
    if (a[i][i] < 0) {
      for (size_t k = 0; k < m; ++k) a[i][k] = -a[i][k];
      for (size_t k = 0; k < n; ++k) u[i][k] = -u[i][k];
    }
  return {a, u, v};
}

std::vector<long long> invariant_factors(const Mat& a) {
  auto s = smith_normal_form(a);
  std::vector<long long> out;
  size_t n = std::min(s.d.size(), s.d.empty() ? 0 : s.d[0].size());
  for (size_t i = 0; i < n; ++i)
    if (s.d[i][i] != 0 && s.d[i][i] != 1) out.push_back(s.d[i][i]);
  return out;
}

long long abs_det(const Mat& a) {
  if (a.empty() || a.size() != a[0].size()) throw std::domain_error("smith: det of non-square");
  auto s = smith_normal_form(a);
  long long d = 1;
  for (size_t i = 0; i < a.size(); ++i) d *= s.d[i][i];
  return std::llabs(d);
}

}  // namespace ws::smith
