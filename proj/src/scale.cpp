#include "evunits/scale.hpp"

#include "evunits/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace evunits {

LikelihoodRatio::LikelihoodRatio(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("likelihood ratio must be finite and >= 0, got " + std::to_string(value));
  }
}

EvidenceUnits::EvidenceUnits(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("evidence units must be finite");
  }
}

double unit_base() {
  const double root3 = std::sqrt(3.0);
  return (root3 + 1.0) / (root3 - 1.0);
}

double unit_log_width() {
  static const double width = std::log(unit_base());
  return width;
}

namespace {

void require_positive(LikelihoodRatio lr) {
  if (lr.value() <= 0.0) {
    throw DomainError("likelihood ratio must be > 0 (a zero ratio is a refutation, not evidence)");
  }
}

double logistic_raw(double l) {
  if (l >= 0.0) {
    return 1.0 / (1.0 + std::exp(-l));
  }
  const double e = std::exp(l);
  return e / (1.0 + e);
}

// Probability at the edge between categories k and k+1 (k >= 0), or k and
// k-1 (k < 0).
double boundary_probability(int k) { return logistic_raw(k * unit_log_width()); }

constexpr double kSnapTolerance = 1e-12;

}  // namespace

EvidenceUnits units_from_lr(LikelihoodRatio lr) {
  require_positive(lr);
  return EvidenceUnits(std::log(lr.value()) / unit_log_width());
}

LikelihoodRatio lr_from_units(EvidenceUnits units) {
  return LikelihoodRatio(std::pow(unit_base(), units.value()));
}

Probability posterior(Probability prior, LikelihoodRatio lr) {
  if (prior.value() <= 0.0 || prior.value() >= 1.0) {
    throw DomainError("prior must lie strictly inside (0, 1); certainty cannot be updated");
  }
  require_positive(lr);
  return logistic(LogOdds(logit(prior).value() + std::log(lr.value())));
}

std::string category_label(int index) {
  if (index == 0) {
    return "neutral";
  }
  const int depth = std::abs(index);
  const std::string noun = index > 0 ? "belief" : "disbelief";
  if (depth == 1) {
    return "weaker " + noun;
  }
  std::string label;
  for (int i = 0; i < depth - 2; ++i) {
    label += (i == 0) ? "much" : ", much";
  }
  if (!label.empty()) {
    label += ' ';
  }
  return label + "stronger " + noun;
}

std::string BeliefCategory::label() const { return category_label(index_); }

int BeliefCategory::lower_bound_units() const {
  if (index_ == 0) {
    throw DomainError("the neutral category has no lower bound in units");
  }
  return index_ > 0 ? index_ - 1 : index_;
}

namespace {

BeliefCategory classify(double l, std::optional<double> p) {
  if (l == 0.0) {
    return BeliefCategory(0);
  }
  double t = l / unit_log_width();
  if (std::abs(t) > 1e9) {
    throw CapabilityError("log-odds too large to index a belief category");
  }
  // A probability produced as a category edge belongs to that edge's
  // category even when the logit round trip lands just past it.
  const double nearest = std::nearbyint(t);
  if (nearest != 0.0 &&
      (std::abs(t - nearest) <= kSnapTolerance ||
       (p && *p == boundary_probability(static_cast<int>(nearest))))) {
    t = nearest;
  }
  return BeliefCategory(static_cast<int>(l > 0.0 ? std::ceil(t) : std::floor(t)));
}

}  // namespace

BeliefCategory category_of(Probability p) {
  if (p.value() <= 0.0 || p.value() >= 1.0) {
    throw DomainError("category_of requires p strictly inside (0, 1)");
  }
  return classify(logit(p).value(), p.value());
}

BeliefCategory category_of(LogOdds l) { return classify(l.value(), std::nullopt); }

std::vector<Probability> category_boundaries(int max_index) {
  if (max_index < 1) {
    throw DomainError("max_index must be >= 1");
  }
  std::vector<Probability> out;
  out.reserve(max_index + 1);
  for (int k = 0; k <= max_index; ++k) {
    out.emplace_back(boundary_probability(k));
  }
  return out;
}

int required_units(BeliefCategory from, BeliefCategory to) {
  if (from.index() == 0 || to.index() == 0) {
    throw DomainError("required_units is undefined for the neutral category");
  }
  return std::max(0, to.lower_bound_units() - from.lower_bound_units());
}

UpdateMatrix update_matrix(int n_disbelief_rows, int n_belief_cols) {
  if (n_disbelief_rows < 1 || n_belief_cols < 1) {
    throw DomainError("update matrix needs at least one disbelief row and one belief column");
  }
  UpdateMatrix m;
  m.rows.emplace_back(1);
  for (int i = 1; i <= n_disbelief_rows; ++i) {
    m.rows.emplace_back(-i);
  }
  for (int j = 1; j <= n_belief_cols; ++j) {
    m.cols.emplace_back(j);
  }
  for (const auto& row : m.rows) {
    auto& entries = m.entries.emplace_back();
    for (const auto& col : m.cols) {
      entries.push_back(required_units(row, col));
    }
  }
  return m;
}

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) {
    return x;
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

std::vector<UnitsTableRow> units_table(int max_units) {
  if (max_units < 1) {
    throw DomainError("max_units must be >= 1");
  }
  // Published rules of thumb for 1..4 units.
  constexpr std::array<double, 4> kLrThumb = {4, 15, 50, 200};
  constexpr std::array<double, 4> kProbThumb = {0.80, 0.95, 0.98, 0.99};

  std::vector<UnitsTableRow> rows;
  rows.reserve(max_units);
  for (int u = 1; u <= max_units; ++u) {
    UnitsTableRow row{};
    row.units = u;
    row.likelihood_ratio = std::pow(unit_base(), u);
    row.posterior_at_even_prior = logistic_raw(u * unit_log_width());
    if (u <= static_cast<int>(kLrThumb.size())) {
      row.lr_rule_of_thumb = kLrThumb[u - 1];
      row.prob_rule_of_thumb = kProbThumb[u - 1];
      row.extrapolated = false;
    } else {
      row.lr_rule_of_thumb = round_significant(row.likelihood_ratio, 1);
      row.prob_rule_of_thumb = 1.0 - round_significant(1.0 - row.posterior_at_even_prior, 1);
      row.extrapolated = true;
    }
    rows.push_back(row);
  }
  return rows;
}

LikelihoodRatio royall_urn(const std::vector<Ball>& draws) {
  if (draws.empty()) {
    throw DomainError("urn experiment needs at least one draw");
  }
  if (std::find(draws.begin(), draws.end(), Ball::White) != draws.end()) {
    return LikelihoodRatio(0.0);
  }
  if (draws.size() > 1023) {
    throw CapabilityError("more than 1023 black draws overflows a double likelihood ratio");
  }
  return LikelihoodRatio(std::ldexp(1.0, static_cast<int>(draws.size())));
}

std::vector<Ball> parse_draws(std::string_view sequence) {
  std::vector<Ball> draws;
  draws.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    switch (sequence[i]) {
      case 'B':
      case 'b':
        draws.push_back(Ball::Black);
        break;
      case 'W':
      case 'w':
        draws.push_back(Ball::White);
        break;
      default:
        throw DomainError("invalid draw '" + std::string(1, sequence[i]) + "' at position " +
                          std::to_string(i + 1) + " (expected B or W)");
    }
  }
  return draws;
}

}  // namespace evunits
