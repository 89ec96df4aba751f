#include "evunits/cli.hpp"

#include "evunits/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

namespace evunits {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw DomainError("unknown output format '" + name + "' (expected text, json or csv)");
}

// ---------------------------------------------------------------------------
// Number formatting

std::string format_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) {
    return fmt::format("{}", x);
  }
  const double rounded = round_significant(x, digits);
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(rounded))));
  const int decimals = digits - 1 - exponent;
  if (decimals > 0) {
    return fmt::format("{:.{}f}", rounded, decimals);
  }
  return fmt::format("{:.0f}", rounded);
}

std::string format_probability(double p) { return fmt::format("{:.3f}", p); }

std::string format_percent(double p) {
  const double pct = p * 100.0;
  for (int decimals = 0; decimals < 12; ++decimals) {
    const double scale = std::pow(10.0, decimals);
    if (std::abs(std::round(pct * scale) / scale - pct) < 1e-9) {
      return fmt::format("{:.{}f}%", pct, decimals);
    }
  }
  return fmt::format("{}%", pct);
}

std::string format_full(double x) { return fmt::format("{}", x); }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Left-aligned columns separated by two spaces.
void print_aligned(const std::vector<std::vector<std::string>>& cells, std::ostream& out) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

long long ceil_units(double units) {
  const double nearest = std::nearbyint(units);
  if (std::abs(units - nearest) <= 1e-12) {
    return static_cast<long long>(nearest);
  }
  return static_cast<long long>(std::ceil(units));
}

}  // namespace

// ---------------------------------------------------------------------------
// Interpretation

InterpretationReport interpret(double lr_value, std::optional<double> prior,
                               const std::vector<VerbalScale>& scales) {
  if (!(lr_value > 0.0) || !std::isfinite(lr_value)) {
    throw DomainError("likelihood ratio must be a finite number > 0");
  }
  if (prior && !(*prior > 0.0 && *prior < 1.0)) {
    throw DomainError("prior must lie strictly inside (0, 1)");
  }
  const LikelihoodRatio lr(lr_value);

  InterpretationReport report;
  report.likelihood_ratio = lr_value;
  report.units = units_from_lr(lr).value();
  report.ceil_units = ceil_units(report.units);

  for (const auto& scale : scales) {
    std::optional<std::string> descriptor;
    if (lr_value > 1.0) {
      descriptor = describe(lr, scale);
    }
    if (descriptor) {
      report.descriptors.emplace_back(scale.name(), *descriptor);
    } else {
      report.skipped_scales.push_back(scale.name());
    }
  }

  if (prior) {
    const Probability prior_p(*prior);
    const LogOdds prior_l = logit(prior_p);
    const LogOdds post_l(prior_l.value() + std::log(lr_value));
    report.prior = *prior;
    report.posterior = posterior(prior_p, lr).value();
    report.prior_category = category_of(prior_p).label();
    report.posterior_category = category_of(post_l).label();
  }
  return report;
}

void render_report(const InterpretationReport& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json j;
    j["likelihood_ratio"] = r.likelihood_ratio;
    j["units"] = r.units;
    j["ceil_units"] = r.ceil_units;
    j["descriptors"] = json::object();
    for (const auto& [name, text] : r.descriptors) {
      j["descriptors"][name] = text;
    }
    if (r.prior) {
      j["prior"] = *r.prior;
      j["posterior"] = *r.posterior;
      j["prior_category"] = *r.prior_category;
      j["posterior_category"] = *r.posterior_category;
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::Csv) {
    out << "field,value\n";
    out << "likelihood_ratio," << format_full(r.likelihood_ratio) << '\n';
    out << "units," << format_full(r.units) << '\n';
    out << "ceil_units," << r.ceil_units << '\n';
    for (const auto& [name, text] : r.descriptors) {
      out << csv_field("descriptor:" + name) << ',' << csv_field(text) << '\n';
    }
    if (r.prior) {
      out << "prior," << format_full(*r.prior) << '\n';
      out << "posterior," << format_full(*r.posterior) << '\n';
      out << "prior_category," << csv_field(*r.prior_category) << '\n';
      out << "posterior_category," << csv_field(*r.posterior_category) << '\n';
    }
    return;
  }

  std::vector<std::vector<std::string>> cells = {
      {"likelihood ratio", format_significant(r.likelihood_ratio, 3)},
      {"units of evidence", fmt::format("{:.3f}", r.units)},
      {"whole units (ceil)", std::to_string(r.ceil_units)},
  };
  for (const auto& [name, text] : r.descriptors) {
    cells.push_back({"scale " + name, text});
  }
  if (r.prior) {
    cells.push_back({"prior", format_probability(*r.prior) + " (" + *r.prior_category + ")"});
    cells.push_back(
        {"posterior", format_probability(*r.posterior) + " (" + *r.posterior_category + ")"});
  }
  print_aligned(cells, out);
}

// ---------------------------------------------------------------------------
// Tables

void render_units_table(const std::vector<UnitsTableRow>& rows, OutputFormat format,
                        std::ostream& out) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const auto& row : rows) {
      j.push_back({{"units", row.units},
                   {"likelihood_ratio", row.likelihood_ratio},
                   {"lr_rule_of_thumb", row.lr_rule_of_thumb},
                   {"posterior_at_even_prior", row.posterior_at_even_prior},
                   {"prob_rule_of_thumb", row.prob_rule_of_thumb},
                   {"extrapolated", row.extrapolated}});
    }
    out << json{{"rows", j}}.dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::Csv) {
    out << "units,likelihood_ratio,lr_rule_of_thumb,posterior_at_even_prior,prob_rule_of_thumb,"
           "extrapolated\n";
    for (const auto& row : rows) {
      out << row.units << ',' << format_full(row.likelihood_ratio) << ','
          << format_full(row.lr_rule_of_thumb) << ',' << format_full(row.posterior_at_even_prior)
          << ',' << format_full(row.prob_rule_of_thumb) << ','
          << (row.extrapolated ? "true" : "false") << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> cells = {
      {"units", "likelihood ratio", "rule of thumb", "probability", "rule of thumb", "source"}};
  for (const auto& row : rows) {
    cells.push_back({fmt::format("{:.1f}", static_cast<double>(row.units)),
                     format_significant(row.likelihood_ratio, 3),
                     format_full(row.lr_rule_of_thumb),
                     format_probability(row.posterior_at_even_prior),
                     format_percent(row.prob_rule_of_thumb),
                     row.extrapolated ? "extrapolated" : "published"});
  }
  print_aligned(cells, out);
}

void render_update_matrix(const UpdateMatrix& m, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    json cols = json::array();
    for (const auto& c : m.rows) rows.push_back({{"index", c.index()}, {"label", c.label()}});
    for (const auto& c : m.cols) cols.push_back({{"index", c.index()}, {"label", c.label()}});
    out << json{{"rows", rows}, {"cols", cols}, {"entries", m.entries}}.dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::Csv) {
    out << "prior";
    for (const auto& c : m.cols) out << ',' << csv_field(c.label());
    out << '\n';
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      out << csv_field(m.rows[i].label());
      for (int v : m.entries[i]) out << ',' << v;
      out << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  auto& header = cells.emplace_back();
  header.push_back("prior \\ posterior");
  for (const auto& c : m.cols) header.push_back(c.label());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    auto& line = cells.emplace_back();
    line.push_back(m.rows[i].label());
    for (int v : m.entries[i]) line.push_back(v == 0 ? "" : std::to_string(v));
  }
  print_aligned(cells, out);
}

void render_figure(double l_min, double l_max, double step, OutputFormat format,
                   std::ostream& out) {
  if (!std::isfinite(l_min) || !std::isfinite(l_max) || !(l_min < l_max)) {
    throw DomainError("figure range needs finite --min < --max");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("figure --step must be > 0");
  }
  const double span = (l_max - l_min) / step;
  if (span > 1e7) {
    throw DomainError("figure grid exceeds 10^7 points; increase --step");
  }
  const auto count = static_cast<long long>(std::floor(span + 1e-9)) + 1;

  json rows = json::array();
  std::vector<std::vector<std::string>> cells;
  if (format == OutputFormat::Csv) {
    out << "l,p,dpdl\n";
  } else if (format == OutputFormat::Text) {
    cells.push_back({"l", "p", "dpdl"});
  }
  for (long long i = 0; i < count; ++i) {
    double l = l_min + static_cast<double>(i) * step;
    // Stay on the step lattice so that grids spanning zero are symmetric.
    const double lattice = std::nearbyint(l / step);
    if (std::abs(l / step - lattice) < 1e-9) {
      l = lattice * step;
    }
    const double p = logistic(LogOdds(l)).value();
    const double d = logistic_derivative(1, LogOdds(l));
    switch (format) {
      case OutputFormat::Csv:
        out << format_full(l) << ',' << format_full(p) << ',' << format_full(d) << '\n';
        break;
      case OutputFormat::Json:
        rows.push_back({{"l", l}, {"p", p}, {"dpdl", d}});
        break;
      case OutputFormat::Text:
        cells.push_back({fmt::format("{:.4f}", l), fmt::format("{:.6f}", p),
                         fmt::format("{:.6f}", d)});
        break;
    }
  }
  if (format == OutputFormat::Json) {
    out << json{{"rows", rows}}.dump(2) << '\n';
  } else if (format == OutputFormat::Text) {
    print_aligned(cells, out);
  }
}

// ---------------------------------------------------------------------------
// Command line

namespace {

constexpr int kUsageError = 2;
constexpr int kInputError = 1;

// Built-ins followed by any file-defined scales; names must be unique.
std::vector<VerbalScale> load_scales(const std::string& scales_file) {
  std::vector<VerbalScale> scales = builtin_scales();
  if (scales_file.empty()) {
    return scales;
  }
  for (auto& scale : parse_scales_file(scales_file)) {
    if (find_builtin_scale(scale.name()) != nullptr) {
      throw ScaleParseError(0, "scales file redefines built-in scale '" + scale.name() + "'");
    }
    scales.push_back(std::move(scale));
  }
  return scales;
}

void render_scale(const VerbalScale& scale, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json bins = json::array();
    for (const auto& bin : scale.bins()) {
      bins.push_back({{"upper", bin.upper ? json(*bin.upper) : json(nullptr)},
                      {"descriptor", bin.descriptor}});
    }
    json j{{"name", scale.name()}, {"bins", bins}};
    if (scale.kind() == VerbalScale::Kind::Units) {
      j["base"] = unit_base();
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (scale.kind() == VerbalScale::Kind::Units) {
    out << "scale units\n";
    out << "# descriptor \"k units\" with k = ceil(log_b L), b = " << format_full(unit_base())
        << '\n';
    return;
  }
  // Text output is itself a valid scales file.
  out << "scale " << scale.name() << '\n';
  for (const auto& bin : scale.bins()) {
    out << (bin.upper ? format_full(*bin.upper) : std::string("open")) << ' ' << bin.descriptor
        << '\n';
  }
}

void render_urn(std::size_t draws, LikelihoodRatio lr, OutputFormat format, std::ostream& out) {
  const bool refuted = lr.value() == 0.0;
  if (format == OutputFormat::Json) {
    json j{{"draws", draws}, {"likelihood_ratio", lr.value()}, {"refuted", refuted}};
    if (!refuted) {
      j["units"] = units_from_lr(lr).value();
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells = {{"draws", std::to_string(draws)}};
  if (refuted) {
    cells.push_back({"likelihood ratio", "0"});
    cells.push_back({"result", "H0 refuted (a white ball rules out an all-black urn)"});
  } else {
    cells.push_back({"likelihood ratio", format_full(lr.value())});
    cells.push_back({"units of evidence", fmt::format("{:.3f}", units_from_lr(lr).value())});
  }
  print_aligned(cells, out);
}

const std::set<std::string> kFormats = {"text", "json", "csv"};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Units of evidence for likelihood ratios and Bayes factors", "evunits"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember(kFormats))
        ->default_str(default_format);
  };

  // interpret
  double lr = 0.0;
  std::optional<double> prior;
  std::vector<std::string> scale_names;
  std::string scales_file;
  auto* interpret_cmd = app.add_subcommand("interpret", "Interpret a likelihood ratio");
  interpret_cmd->add_option("LR", lr, "Likelihood ratio Pr(X|H0)/Pr(X|H1)")->required();
  interpret_cmd->add_option("--prior", prior, "Prior probability of H0, in (0, 1)");
  interpret_cmd->add_option("--scale", scale_names, "Restrict descriptors to these scales");
  interpret_cmd->add_option("--scales-file", scales_file, "Additional verbal scale definitions");
  add_format(interpret_cmd, "text");

  // table units|update
  int max_units = 4;
  int rows = 4;
  int cols = 4;
  auto* table_cmd = app.add_subcommand("table", "Reproduce the units or update tables");
  table_cmd->require_subcommand(1);
  auto* units_cmd = table_cmd->add_subcommand("units", "Likelihood ratios per unit of evidence");
  units_cmd->add_option("--max-units", max_units, "Number of rows (1-20)")->capture_default_str();
  add_format(units_cmd, "text");
  auto* update_cmd = table_cmd->add_subcommand("update", "Units needed between belief categories");
  update_cmd->add_option("--rows", rows, "Disbelief rows (1-10)")->capture_default_str();
  update_cmd->add_option("--cols", cols, "Belief columns (1-10)")->capture_default_str();
  add_format(update_cmd, "text");

  // figure
  double l_min = -6.0;
  double l_max = 6.0;
  double step = 0.01;
  auto* figure_cmd = app.add_subcommand("figure", "Logistic curve and its first derivative");
  figure_cmd->add_option("--min", l_min, "Smallest log-odds")->capture_default_str();
  figure_cmd->add_option("--max", l_max, "Largest log-odds")->capture_default_str();
  figure_cmd->add_option("--step", step, "Grid step")->capture_default_str();
  figure_cmd->add_option("--format", format_name, "Output format: csv, json or text")
      ->check(CLI::IsMember(kFormats));

  // urn
  std::string sequence;
  auto* urn_cmd = app.add_subcommand("urn", "Royall's urn: B/W draw sequence to likelihood ratio");
  urn_cmd->add_option("SEQUENCE", sequence, "Draws, e.g. BBBW")->required();
  add_format(urn_cmd, "text");

  // scales list|show
  std::string show_name;
  auto* scales_cmd = app.add_subcommand("scales", "Inspect verbal scales");
  scales_cmd->require_subcommand(1);
  scales_cmd->add_option("--scales-file", scales_file, "Additional verbal scale definitions");
  auto* list_cmd = scales_cmd->add_subcommand("list", "List scale names");
  auto* show_cmd = scales_cmd->add_subcommand("show", "Print a scale's bins");
  show_cmd->add_option("NAME", show_name, "Scale name")->required();
  add_format(show_cmd, "text");

  figure_cmd->preparse_callback([&](std::size_t) { format_name = "csv"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const OutputFormat format = parse_output_format(format_name);

    if (interpret_cmd->parsed()) {
      std::vector<VerbalScale> scales = load_scales(scales_file);
      if (!scale_names.empty()) {
        std::vector<VerbalScale> selected;
        for (const auto& name : scale_names) {
          auto it = std::find_if(scales.begin(), scales.end(),
                                 [&](const VerbalScale& s) { return s.name() == name; });
          if (it == scales.end()) {
            err << "error: unknown scale '" << name << "'\n";
            return kUsageError;
          }
          selected.push_back(*it);
        }
        scales = std::move(selected);
      }
      const InterpretationReport report = interpret(lr, prior, scales);
      if (lr <= 1.0 && !report.skipped_scales.empty()) {
        err << "note: verbal scales need a likelihood ratio > 1; invert the ratio to describe "
               "evidence for the alternative\n";
      } else {
        for (const auto& name : report.skipped_scales) {
          err << "note: likelihood ratio lies beyond the largest bound of scale '" << name
              << "'\n";
        }
      }
      render_report(report, format, out);
      return 0;
    }

    if (units_cmd->parsed()) {
      if (max_units < 1 || max_units > 20) {
        err << "error: --max-units must be between 1 and 20\n";
        return kUsageError;
      }
      render_units_table(units_table(max_units), format, out);
      return 0;
    }

    if (update_cmd->parsed()) {
      if (rows < 1 || rows > 10 || cols < 1 || cols > 10) {
        err << "error: --rows and --cols must be between 1 and 10\n";
        return kUsageError;
      }
      render_update_matrix(update_matrix(rows, cols), format, out);
      return 0;
    }

    if (figure_cmd->parsed()) {
      render_figure(l_min, l_max, step, format, out);
      return 0;
    }

    if (urn_cmd->parsed()) {
      const std::vector<Ball> draws = parse_draws(sequence);
      render_urn(draws.size(), royall_urn(draws), format, out);
      return 0;
    }

    if (scales_cmd->parsed()) {
      const std::vector<VerbalScale> scales = load_scales(scales_file);
      if (list_cmd->parsed()) {
        for (const auto& scale : scales) {
          out << scale.name() << '\n';
        }
        return 0;
      }
      if (show_cmd->parsed()) {
        auto it = std::find_if(scales.begin(), scales.end(),
                               [&](const VerbalScale& s) { return s.name() == show_name; });
        if (it == scales.end()) {
          err << "error: unknown scale '" << show_name << "'\n";
          return kUsageError;
        }
        render_scale(*it, format, out);
        return 0;
      }
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ScaleParseError& e) {
    err << "error: " << (scales_file.empty() ? "" : scales_file + ": ") << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace evunits
