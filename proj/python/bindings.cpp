#include "evunits/cli.hpp"
#include "evunits/errors.hpp"
#include "evunits/eulerian.hpp"
#include "evunits/logistic.hpp"
#include "evunits/scale.hpp"
#include "evunits/verbal_scale.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace evunits;

namespace {

py::int_ to_python_int(const BigInt& value) {
  return py::int_(py::module_::import("builtins").attr("int")(value.str()));
}

const VerbalScale& scale_by_name(const std::string& name) {
  const VerbalScale* scale = find_builtin_scale(name);
  if (scale == nullptr) {
    throw DomainError("unknown scale '" + name + "'");
  }
  return *scale;
}

py::dict category_dict(BeliefCategory c) {
  py::dict d;
  d["index"] = c.index();
  d["label"] = c.label();
  return d;
}

}  // namespace

PYBIND11_MODULE(_evunits, m) {
  m.doc() = "Units of evidence for likelihood ratios and Bayes factors";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_OverflowError);
  py::register_exception<ScaleParseError>(m, "ScaleParseError", PyExc_ValueError);

  // logistic calculus
  m.def("logistic", [](double l) { return logistic(LogOdds(l)).value(); }, py::arg("l"));
  m.def("logit", [](double p) { return logit(Probability(p)).value(); }, py::arg("p"));
  m.def(
      "logistic_derivative", [](int n, double l) { return logistic_derivative(n, LogOdds(l)); },
      py::arg("n"), py::arg("l"));
  m.def(
      "finite_difference_derivative",
      [](int n, double l, std::optional<double> step) {
        return step ? finite_difference_derivative(n, LogOdds(l), *step)
                    : finite_difference_derivative(n, LogOdds(l));
      },
      py::arg("n"), py::arg("l"), py::arg("step") = py::none());
  m.def("inflection_points", [] {
    const auto [lower, upper] = inflection_points();
    return py::make_tuple(py::make_tuple(lower.log_odds.value(), lower.probability.value()),
                          py::make_tuple(upper.log_odds.value(), upper.probability.value()));
  });
  m.def(
      "eulerian", [](int n, int k) { return to_python_int(eulerian(n, k)); }, py::arg("n"),
      py::arg("k"));
  m.def(
      "eulerian_row",
      [](int n) {
        py::list row;
        for (const auto& v : eulerian_row(n)) row.append(to_python_int(v));
        return row;
      },
      py::arg("n"));

  // evidence scale
  m.def("unit_base", &unit_base);
  m.def(
      "units_from_lr", [](double lr) { return units_from_lr(LikelihoodRatio(lr)).value(); },
      py::arg("lr"));
  m.def(
      "lr_from_units", [](double u) { return lr_from_units(EvidenceUnits(u)).value(); },
      py::arg("units"));
  m.def(
      "posterior",
      [](double prior, double lr) {
        return posterior(Probability(prior), LikelihoodRatio(lr)).value();
      },
      py::arg("prior"), py::arg("lr"));
  m.def(
      "category_of", [](double p) { return category_dict(category_of(Probability(p))); },
      py::arg("p"));
  m.def("category_label", &category_label, py::arg("index"));
  m.def(
      "category_boundaries",
      [](int max_index) {
        std::vector<double> out;
        for (const auto& p : category_boundaries(max_index)) out.push_back(p.value());
        return out;
      },
      py::arg("max_index"));
  m.def(
      "required_units",
      [](int from, int to) { return required_units(BeliefCategory(from), BeliefCategory(to)); },
      py::arg("prior_index"), py::arg("posterior_index"));
  m.def(
      "update_matrix",
      [](int rows, int cols) {
        const UpdateMatrix um = update_matrix(rows, cols);
        py::list row_list, col_list;
        for (const auto& c : um.rows) row_list.append(category_dict(c));
        for (const auto& c : um.cols) col_list.append(category_dict(c));
        py::dict d;
        d["rows"] = row_list;
        d["cols"] = col_list;
        d["entries"] = um.entries;
        return d;
      },
      py::arg("n_disbelief_rows"), py::arg("n_belief_cols"));
  m.def(
      "units_table",
      [](int max_units) {
        py::list out;
        for (const auto& row : units_table(max_units)) {
          py::dict d;
          d["units"] = row.units;
          d["likelihood_ratio"] = row.likelihood_ratio;
          d["lr_rule_of_thumb"] = row.lr_rule_of_thumb;
          d["posterior_at_even_prior"] = row.posterior_at_even_prior;
          d["prob_rule_of_thumb"] = row.prob_rule_of_thumb;
          d["extrapolated"] = row.extrapolated;
          out.append(d);
        }
        return out;
      },
      py::arg("max_units"));
  m.def("builtin_scale_names", [] {
    std::vector<std::string> names;
    for (const auto& s : builtin_scales()) names.push_back(s.name());
    return names;
  });
  m.def(
      "describe",
      [](double lr, const std::string& scale) {
        return describe(LikelihoodRatio(lr), scale_by_name(scale));
      },
      py::arg("lr"), py::arg("scale"));
  m.def(
      "royall_urn", [](const std::string& draws) { return royall_urn(parse_draws(draws)).value(); },
      py::arg("draws"));

  // cli surface
  m.def(
      "interpret",
      [](double lr, std::optional<double> prior) {
        const auto r = interpret(lr, prior, builtin_scales());
        py::dict d;
        d["likelihood_ratio"] = r.likelihood_ratio;
        d["units"] = r.units;
        d["ceil_units"] = r.ceil_units;
        py::dict descriptors;
        for (const auto& [name, text] : r.descriptors) descriptors[py::str(name)] = text;
        d["descriptors"] = descriptors;
        if (r.prior) {
          d["prior"] = *r.prior;
          d["posterior"] = *r.posterior;
          d["prior_category"] = *r.prior_category;
          d["posterior_category"] = *r.posterior_category;
        }
        return d;
      },
      py::arg("lr"), py::arg("prior") = py::none());
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"));
}
