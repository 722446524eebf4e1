#pragma once

// Smith normal form of small integer matrices, plus the invariant factors of
// a cokernel Z^n / A Z^n (used for torus fixed-point lattices).

#include <cstdint>
#include <vector>

namespace ws::smith {

using Mat = std::vector<std::vector<long long>>;

struct SNF {
  Mat d;        // diagonal form
  Mat u, v;     // unimodular: u * a * v = d
};

SNF smith_normal_form(Mat a);

// Nontrivial invariant factors (> 1) of coker(A), ascending by divisibility.
std::vector<long long> invariant_factors(const Mat& a);

// |det A| computed from the SNF; 0 if singular.
long long abs_det(const Mat& a);

}  // namespace ws::smith
