#include "evunits/logistic.hpp"

#include "evunits/errors.hpp"
#include "evunits/eulerian.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace evunits {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " + std::to_string(value));
  }
}

LogOdds::LogOdds(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("log-odds must be finite");
  }
}

namespace {

double logistic_raw(double l) {
  if (l >= 0.0) {
    return 1.0 / (1.0 + std::exp(-l));
  }
  const double e = std::exp(l);
  return e / (1.0 + e);
}

// Eulerian rows as doubles, <n,k> at [n][k], built once.
const std::vector<std::vector<double>>& eulerian_rows_double() {
  static const std::vector<std::vector<double>> rows = [] {
    std::vector<std::vector<double>> out(kMaxDerivativeOrder + 1);
    for (int n = 1; n <= kMaxDerivativeOrder; ++n) {
      for (const BigInt& e : eulerian_row(n)) {
        out[n].push_back(e.convert_to<double>());
      }
    }
    return out;
  }();
  return rows;
}

void check_order(int n) {
  if (n < 1) {
    throw DomainError("derivative order must be >= 1, got " + std::to_string(n));
  }
  if (n > kMaxDerivativeOrder) {
    throw CapabilityError("derivative order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxDerivativeOrder));
  }
}

}  // namespace

Probability logistic(LogOdds l) { return Probability(logistic_raw(l.value())); }

LogOdds logit(Probability p) {
  const double v = p.value();
  if (v <= 0.0) {
    throw DomainError("logit undefined at p <= 0 (lower bound of (0, 1))");
  }
  if (v >= 1.0) {
    throw DomainError("logit undefined at p >= 1 (upper bound of (0, 1))");
  }
  return LogOdds(std::log(v) - std::log1p(-v));
}

double logistic_derivative(int n, LogOdds l) {
  check_order(n);
  const double u = logistic_raw(l.value());
  const double v = -logistic_raw(-l.value());  // u - 1
  const auto& row = eulerian_rows_double()[n];

  // v_pows[m] = (u-1)^m
  std::vector<double> v_pows(n + 1, 1.0);
  for (int m = 1; m <= n; ++m) {
    v_pows[m] = v_pows[m - 1] * v;
  }
  double sum = 0.0;
  double u_pow = u;  // u^(k+1)
  for (int k = 0; k < n; ++k) {
    sum += row[k] * u_pow * v_pows[n - k];
    u_pow *= u;
  }
  return (n % 2 == 0) ? sum : -sum;
}

double default_fd_step(int n) { return n <= 3 ? 1e-3 : 0.1; }

double finite_difference_derivative(int n, LogOdds l, double step) {
  check_order(n);
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("finite-difference step must be positive");
  }

  // Binomial coefficients C(n, i) with alternating sign.
  std::vector<long double> coeff(n + 1);
  long double c = 1.0L;
  for (int i = 0; i <= n; ++i) {
    coeff[i] = (i % 2 == 0) ? c : -c;
    c = c * (n - i) / (i + 1);
  }

  const long double x = l.value();
  auto stencil = [&](long double h) {
    long double acc = 0.0L;
    for (int i = 0; i <= n; ++i) {
      const long double offset = (0.5L * n - i) * h;
      acc += coeff[i] * 0.5L * std::tanh(0.5L * (x + offset));
    }
    return acc / std::pow(h, static_cast<long double>(n));
  };

  const long double h = step;
  const std::array<long double, 3> d = {stencil(h), stencil(h / 2), stencil(h / 4)};
  const long double r1a = (4.0L * d[1] - d[0]) / 3.0L;
  const long double r1b = (4.0L * d[2] - d[1]) / 3.0L;
  return static_cast<double>((16.0L * r1b - r1a) / 15.0L);
}

double finite_difference_derivative(int n, LogOdds l) {
  return finite_difference_derivative(n, l, default_fd_step(n));
}

std::pair<InflectionPoint, InflectionPoint> inflection_points() {
  const double root3 = std::sqrt(3.0);
  const double l = std::log((root3 + 1.0) / (root3 - 1.0));
  const double half_width = 0.5 / root3;
  return {InflectionPoint{LogOdds(-l), Probability(0.5 - half_width)},
          InflectionPoint{LogOdds(l), Probability(0.5 + half_width)}};
}

}  // namespace evunits
