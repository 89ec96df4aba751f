#pragma once

#include <utility>

namespace evunits {

/// A probability in [0, 1]. Construction validates the range.
class Probability {
 public:
  explicit Probability(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(Probability, Probability) = default;

 private:
  double value_;
};

/// Natural-log odds. Always finite.
class LogOdds {
 public:
  explicit LogOdds(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(LogOdds, LogOdds) = default;

 private:
  double value_;
};

/// (1 + e^-l)^-1. Result lies strictly inside (0, 1) for moderate l and
/// saturates to 0 or 1 in double precision beyond |l| ~ 37.
Probability logistic(LogOdds l);

/// ln(p / (1 - p)). Throws DomainError for p <= 0 or p >= 1.
LogOdds logit(Probability p);

/// nth derivative of the logistic at l, evaluated through the Eulerian
/// polynomial
///
///   u^(n) = (-1)^n * sum_{k=0}^{n-1} <n,k> u^(k+1) (u-1)^(n-k),
///
/// with u = logistic(l). (u - 1) is taken as -logistic(-l) to avoid
/// cancellation in the upper tail. n == 0 is rejected; orders above
/// kMaxDerivativeOrder raise CapabilityError.
double logistic_derivative(int n, LogOdds l);

inline constexpr int kMaxDerivativeOrder = 60;

/// Default step used by finite_difference_derivative when none is given.
double default_fd_step(int n);

/// Independent finite-difference estimate of the nth logistic derivative.
///
/// The base estimate is the central stencil
///   h^-n * sum_i (-1)^i C(n,i) f(l + (n/2 - i) h),
/// which has an even error expansion in h. Two Richardson passes over
/// h, h/2, h/4 cancel the h^2 and h^4 terms. Evaluation is carried out in
/// extended precision on the odd part 0.5*tanh(l/2) of the logistic.
double finite_difference_derivative(int n, LogOdds l, double step);
double finite_difference_derivative(int n, LogOdds l);

struct InflectionPoint {
  LogOdds log_odds;
  Probability probability;
};

/// Zeros of the third derivative, i.e. extrema of the second derivative:
/// l = -+ln((sqrt3+1)/(sqrt3-1)), p = (1 -+ 1/sqrt3)/2. Returned as
/// (lower, upper).
std::pair<InflectionPoint, InflectionPoint> inflection_points();

}  // namespace evunits
