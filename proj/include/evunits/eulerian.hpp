#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace evunits {

using BigInt = boost::multiprecision::cpp_int;

// Largest n accepted by eulerian(). Values are exact at any size; the cap
// bounds the cost of the alternating sum.
inline constexpr int kMaxEulerianOrder = 200;

// Eulerian number <n,k>: permutations of n elements with exactly k descents,
// computed from the alternating sum
//   sum_{j=0}^{k} (-1)^j C(n+1, j) (k-j+1)^n.
// Requires 1 <= n <= kMaxEulerianOrder and k >= 0; zero for k >= n.
BigInt eulerian(int n, int k);

// <n,0> .. <n,n-1>.
std::vector<BigInt> eulerian_row(int n);

}  // namespace evunits
