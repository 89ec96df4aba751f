#pragma once

#include "evunits/logistic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evunits {

/// Pr(X|H0) / Pr(X|H1). Non-negative; zero only arises as a refutation
/// (see royall_urn) and is rejected by every scale conversion.
class LikelihoodRatio {
 public:
  explicit LikelihoodRatio(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(LikelihoodRatio, LikelihoodRatio) = default;

 private:
  double value_;
};

/// log_b of a likelihood ratio.
class EvidenceUnits {
 public:
  explicit EvidenceUnits(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(EvidenceUnits, EvidenceUnits) = default;

 private:
  double value_;
};

/// (sqrt3 + 1) / (sqrt3 - 1) = 2 + sqrt3 ~ 3.732, the likelihood ratio of
/// one unit of evidence.
double unit_base();

/// ln(unit_base()) ~ 1.317, the log-odds width of one unit.
double unit_log_width();

/// log_b(L). Negative when L < 1. Throws DomainError for L <= 0.
EvidenceUnits units_from_lr(LikelihoodRatio lr);

/// b^u.
LikelihoodRatio lr_from_units(EvidenceUnits units);

/// Posterior probability of H0 by adding ln L to the prior log-odds.
/// Throws DomainError if the prior is 0 or 1, or if L <= 0.
Probability posterior(Probability prior, LikelihoodRatio lr);

/// Signed index into the belief-category lattice.
///
///   index k >= 1   log-odds in ((k-1) ln b, k ln b]
///   index k <= -1  log-odds in [k ln b, (k+1) ln b)
///   index 0        log-odds exactly 0
class BeliefCategory {
 public:
  explicit constexpr BeliefCategory(int index) : index_(index) {}
  constexpr int index() const noexcept { return index_; }
  std::string label() const;

  /// Lower edge of the category in units: k-1 for k >= 1, k for k <= -1.
  /// Throws DomainError for the neutral category.
  int lower_bound_units() const;

  friend constexpr bool operator==(BeliefCategory, BeliefCategory) = default;
  friend constexpr auto operator<=>(BeliefCategory, BeliefCategory) = default;

 private:
  int index_;
};

/// Label for index k: "weaker belief", "stronger belief", then one more
/// "much" per step ("much, much stronger belief"), mirrored with "disbelief"
/// below zero. Index 0 is "neutral".
std::string category_label(int index);

/// Category containing p. Throws DomainError outside (0, 1).
/// Unit positions within 1e-12 of an integer snap to it, and a probability
/// equal to a category_boundaries() entry belongs to that edge's category.
BeliefCategory category_of(Probability p);

/// Category containing log-odds l (tolerance snapping only).
BeliefCategory category_of(LogOdds l);

/// logistic(k ln b) for k = 0..max_index. Throws DomainError if
/// max_index < 1.
std::vector<Probability> category_boundaries(int max_index);

/// Whole units of evidence needed to move every prior in `from` into `to`
/// or beyond. Zero when `from` already reaches `to`.
int required_units(BeliefCategory from, BeliefCategory to);

struct UpdateMatrix {
  std::vector<BeliefCategory> rows;  // priors: +1, -1, -2, ...
  std::vector<BeliefCategory> cols;  // posteriors: +1, +2, ...
  std::vector<std::vector<int>> entries;
};

UpdateMatrix update_matrix(int n_disbelief_rows, int n_belief_cols);

struct UnitsTableRow {
  int units;
  double likelihood_ratio;
  double lr_rule_of_thumb;
  double posterior_at_even_prior;
  double prob_rule_of_thumb;
  bool extrapolated;  // rule-of-thumb values computed rather than published
};

/// Rows for 1..max_units units of evidence. Rule-of-thumb columns carry the
/// published values for the first four units; beyond that the likelihood
/// ratio is rounded to one significant figure and the posterior's distance
/// from certainty, 1 - p, likewise.
std::vector<UnitsTableRow> units_table(int max_units);

/// Round to `digits` significant figures.
double round_significant(double x, int digits);

enum class Ball { Black, White };

/// Likelihood ratio of "all balls black" against "half black, half white".
/// 2^n for n black draws, exactly 0 once any white ball is seen.
/// Throws DomainError on an empty sequence.
LikelihoodRatio royall_urn(const std::vector<Ball>& draws);

/// Parses a B/W string (case-insensitive). Throws DomainError naming the
/// 1-based position of the first invalid character.
std::vector<Ball> parse_draws(std::string_view sequence);

}  // namespace evunits
