#include "evunits/eulerian.hpp"

#include "evunits/errors.hpp"

#include <string>

namespace evunits {

namespace {

void check_order(int n) {
  if (n < 1) {
    throw DomainError("Eulerian order must be >= 1, got " + std::to_string(n));
  }
  if (n > kMaxEulerianOrder) {
    throw CapabilityError("Eulerian order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxEulerianOrder));
  }
}

}  // namespace

BigInt eulerian(int n, int k) {
  check_order(n);
  if (k < 0) {
    throw DomainError("Eulerian index k must be >= 0, got " + std::to_string(k));
  }
  if (k >= n) {
    return 0;
  }

  BigInt sum = 0;
  BigInt binom = 1;  // C(n+1, j)
  for (int j = 0; j <= k; ++j) {
    const BigInt term = binom * boost::multiprecision::pow(BigInt(k - j + 1), n);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    binom = binom * (n + 1 - j) / (j + 1);
  }
  return sum;
}

std::vector<BigInt> eulerian_row(int n) {
  check_order(n);
  std::vector<BigInt> row;
  row.reserve(n);
  for (int k = 0; k < n; ++k) {
    row.push_back(eulerian(n, k));
  }
  return row;
}

}  // namespace evunits
