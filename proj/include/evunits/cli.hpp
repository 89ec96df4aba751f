#pragma once

#include "evunits/scale.hpp"
#include "evunits/verbal_scale.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evunits {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);

struct InterpretationReport {
  double likelihood_ratio = 0.0;
  double units = 0.0;
  long long ceil_units = 0;
  std::vector<std::pair<std::string, std::string>> descriptors;  // scale name, descriptor
  std::vector<std::string> skipped_scales;  // scales that do not admit the input
  std::optional<double> prior;
  std::optional<double> posterior;
  std::optional<std::string> prior_category;
  std::optional<std::string> posterior_category;
};

InterpretationReport interpret(double lr, std::optional<double> prior,
                               const std::vector<VerbalScale>& scales);

// Display helpers shared by the renderers.
std::string format_significant(double x, int digits);  // keeps trailing zeros: 52.0
std::string format_probability(double p);               // three decimals
std::string format_percent(double p);                   // 0.95 -> "95%"
std::string format_full(double x);                      // shortest round-trip decimal

void render_report(const InterpretationReport& report, OutputFormat format, std::ostream& out);
void render_units_table(const std::vector<UnitsTableRow>& rows, OutputFormat format,
                        std::ostream& out);
void render_update_matrix(const UpdateMatrix& matrix, OutputFormat format, std::ostream& out);

/// Figure data: rows (l, logistic(l), first derivative) over the inclusive
/// grid l_min, l_min + step, ... <= l_max.
void render_figure(double l_min, double l_max, double step, OutputFormat format,
                   std::ostream& out);

/// Entry point of the `evunits` command. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evunits
