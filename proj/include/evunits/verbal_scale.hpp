#pragma once

#include "evunits/scale.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace evunits {

struct ScaleBin {
  std::optional<double> upper;  // inclusive; nullopt for the open final bin
  std::string descriptor;
};

/// A named, ordered set of likelihood-ratio bins. A bin covers
/// (previous upper, upper]; the first bin starts at 1.
///
/// The built-in "units" scale has no bins and reports "k units" with
/// k = ceil(log_b L).
class VerbalScale {
 public:
  enum class Kind { Bins, Units };

  /// Throws DomainError unless bounds are > 1, strictly increasing and at
  /// most the last bin is open.
  VerbalScale(std::string name, std::vector<ScaleBin> bins);

  static VerbalScale units_scale();

  const std::string& name() const noexcept { return name_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<ScaleBin>& bins() const noexcept { return bins_; }
  bool has_open_bin() const noexcept { return !bins_.empty() && !bins_.back().upper; }

 private:
  VerbalScale(std::string name, Kind kind);

  std::string name_;
  Kind kind_;
  std::vector<ScaleBin> bins_;
};

/// afsp, jeffreys, kass-raftery, royall, goodman, units.
const std::vector<VerbalScale>& builtin_scales();

/// Built-in scale by name, or nullptr.
const VerbalScale* find_builtin_scale(const std::string& name);

/// Descriptor of the bin containing L, or nullopt when L lies above every
/// closed bin of a scale without an open bin. Throws DomainError for L <= 1;
/// invert the ratio (swap hypotheses) first.
std::optional<std::string> describe(LikelihoodRatio lr, const VerbalScale& scale);

/// Parses custom scale definitions:
///
///   scale <name>
///   <upper_bound> <descriptor...>
///   open <descriptor...>
///
/// Blank lines and lines starting with '#' are ignored. Any error rejects the
/// whole input with a ScaleParseError carrying the line number.
std::vector<VerbalScale> parse_scales(std::istream& in);
std::vector<VerbalScale> parse_scales_file(const std::string& path);

}  // namespace evunits
