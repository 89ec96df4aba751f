#include "evunits/verbal_scale.hpp"

#include "evunits/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace evunits {

namespace {

// Returns an empty string when the bins are valid, otherwise the problem.
std::string bin_problem(const std::vector<ScaleBin>& bins, std::size_t i) {
  const ScaleBin& bin = bins[i];
  if (bin.descriptor.empty()) {
    return "bin has an empty descriptor";
  }
  if (i > 0 && !bins[i - 1].upper) {
    return "no bins may follow the open bin";
  }
  if (!bin.upper) {
    return {};
  }
  if (!std::isfinite(*bin.upper) || *bin.upper <= 1.0) {
    return "upper bound must be a finite number > 1";
  }
  if (i > 0 && *bin.upper <= *bins[i - 1].upper) {
    return "upper bounds must be strictly increasing";
  }
  return {};
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

VerbalScale::VerbalScale(std::string name, std::vector<ScaleBin> bins)
    : name_(std::move(name)), kind_(Kind::Bins), bins_(std::move(bins)) {
  if (name_.empty()) {
    throw DomainError("verbal scale needs a name");
  }
  if (bins_.empty()) {
    throw DomainError("verbal scale '" + name_ + "' has no bins");
  }
  for (std::size_t i = 0; i < bins_.size(); ++i) {
    if (auto problem = bin_problem(bins_, i); !problem.empty()) {
      throw DomainError("verbal scale '" + name_ + "', bin " + std::to_string(i + 1) + ": " +
                        problem);
    }
  }
}

VerbalScale::VerbalScale(std::string name, Kind kind) : name_(std::move(name)), kind_(kind) {}

VerbalScale VerbalScale::units_scale() { return VerbalScale("units", Kind::Units); }

const std::vector<VerbalScale>& builtin_scales() {
  static const std::vector<VerbalScale> scales = [] {
    std::vector<VerbalScale> out;
    out.emplace_back("afsp", std::vector<ScaleBin>{{10.0, "weak"},
                                                   {100.0, "moderate"},
                                                   {1000.0, "moderately strong"},
                                                   {10000.0, "strong"},
                                                   {1e6, "very strong"},
                                                   {std::nullopt, "extremely strong"}});
    // Half-powers of ten, as originally stated.
    out.emplace_back("jeffreys", std::vector<ScaleBin>{{std::sqrt(10.0), "bare mention"},
                                                       {10.0, "substantial"},
                                                       {std::pow(10.0, 1.5), "strong"},
                                                       {100.0, "very strong"},
                                                       {std::nullopt, "decisive"}});
    out.emplace_back("kass-raftery", std::vector<ScaleBin>{{std::exp(1.0), "bare mention"},
                                                           {std::exp(3.0), "positive"},
                                                           {std::exp(5.0), "strong"},
                                                           {std::nullopt, "very strong"}});
    out.emplace_back("royall", std::vector<ScaleBin>{{8.0, "fairly strong"}, {32.0, "strong"}});
    out.emplace_back("goodman", std::vector<ScaleBin>{{5.0, "weak"},
                                                      {10.0, "moderate"},
                                                      {20.0, "strong"},
                                                      {100.0, "very strong"}});
    out.push_back(VerbalScale::units_scale());
    return out;
  }();
  return scales;
}

const VerbalScale* find_builtin_scale(const std::string& name) {
  for (const auto& scale : builtin_scales()) {
    if (scale.name() == name) {
      return &scale;
    }
  }
  return nullptr;
}

std::optional<std::string> describe(LikelihoodRatio lr, const VerbalScale& scale) {
  const double value = lr.value();
  if (value <= 1.0) {
    throw DomainError("verbal scales apply to likelihood ratios > 1; invert the ratio (swap the "
                      "hypotheses) to describe evidence for the alternative");
  }
  if (scale.kind() == VerbalScale::Kind::Units) {
    double t = units_from_lr(lr).value();
    const double nearest = std::nearbyint(t);
    if (std::abs(t - nearest) <= 1e-12 || value == std::pow(unit_base(), nearest)) {
      t = nearest;
    }
    return std::to_string(static_cast<long long>(std::ceil(t))) + " units";
  }
  for (const ScaleBin& bin : scale.bins()) {
    if (!bin.upper || value <= *bin.upper) {
      return bin.descriptor;
    }
  }
  return std::nullopt;
}

std::vector<VerbalScale> parse_scales(std::istream& in) {
  struct Pending {
    std::string name;
    std::size_t header_line;
    std::vector<ScaleBin> bins;
  };
  std::vector<Pending> pending;
  std::set<std::string> names;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto split = line.find_first_of(" \t");
    const std::string head = line.substr(0, split);
    const std::string rest = split == std::string::npos ? std::string{} : trim(line.substr(split));

    if (head == "scale") {
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) {
        throw ScaleParseError(line_no, "expected 'scale <name>' with a single-word name");
      }
      if (!pending.empty() && pending.back().bins.empty()) {
        throw ScaleParseError(pending.back().header_line,
                              "scale '" + pending.back().name + "' has no bins");
      }
      if (!names.insert(rest).second) {
        throw ScaleParseError(line_no, "duplicate scale name '" + rest + "'");
      }
      pending.push_back({rest, line_no, {}});
      continue;
    }

    if (pending.empty()) {
      throw ScaleParseError(line_no, "bin line before any 'scale <name>' header");
    }
    if (rest.empty()) {
      throw ScaleParseError(line_no, "bin line needs a descriptor after the bound");
    }
    ScaleBin bin{std::nullopt, rest};
    if (head != "open") {
      double bound = 0.0;
      const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), bound);
      if (ec != std::errc{} || ptr != head.data() + head.size()) {
        throw ScaleParseError(line_no, "expected a numeric upper bound or 'open', got '" + head + "'");
      }
      bin.upper = bound;
    }
    auto& bins = pending.back().bins;
    bins.push_back(std::move(bin));
    if (auto problem = bin_problem(bins, bins.size() - 1); !problem.empty()) {
      throw ScaleParseError(line_no, problem);
    }
  }

  if (!pending.empty() && pending.back().bins.empty()) {
    throw ScaleParseError(pending.back().header_line,
                          "scale '" + pending.back().name + "' has no bins");
  }

  std::vector<VerbalScale> scales;
  scales.reserve(pending.size());
  for (auto& p : pending) {
    scales.emplace_back(std::move(p.name), std::move(p.bins));
  }
  return scales;
}

std::vector<VerbalScale> parse_scales_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScaleParseError(0, "cannot read scales file '" + path + "'");
  }
  return parse_scales(in);
}

}  // namespace evunits
