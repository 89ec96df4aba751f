// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: evunits_acceptance <path-to-evunits-cli>

#include "evunits/eulerian.hpp"
#include "evunits/logistic.hpp"
#include "evunits/scale.hpp"
#include "evunits/verbal_scale.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace evunits;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct ProcessResult {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProcessResult run_process(const std::string& cli, const std::string& args) {
  const std::string out_path = std::string(P_tmpdir) + "/evunits_acc_out.txt";
  const std::string err_path = std::string(P_tmpdir) + "/evunits_acc_err.txt";
  const std::string cmd = "'" + cli + "' " + args + " >" + out_path + " 2>" + err_path;
  const int raw = std::system(cmd.c_str());
  const int status = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  return {status, slurp(out_path), slurp(err_path)};
}

double units(double lr) { return units_from_lr(LikelihoodRatio(lr)).value(); }

// 1
Outcome base_constant() {
  Outcome o;
  o.require(std::abs(unit_base() - 3.7320508) <= 1e-6, "b != 3.7320508 +- 1e-6");
  o.require(std::abs(unit_base() - (2.0 + std::sqrt(3.0))) <= 1e-12, "b != 2 + sqrt3");
  return o;
}

// 2
Outcome inflection() {
  Outcome o;
  const auto [lower, upper] = inflection_points();
  o.require(std::abs(upper.log_odds.value() - 1.317) <= 1e-3, "upper log-odds");
  o.require(std::abs(lower.log_odds.value() + 1.317) <= 1e-3, "lower log-odds");
  o.require(std::abs(upper.probability.value() - 0.7887) <= 5e-4, "upper probability");
  o.require(std::abs(lower.probability.value() - 0.2113) <= 5e-4, "lower probability");
  const double lnb = std::log(unit_base());
  o.require(std::abs(logistic_derivative(3, LogOdds(lnb))) <= 1e-6, "u'''(+ln b) != 0");
  o.require(std::abs(logistic_derivative(3, LogOdds(-lnb))) <= 1e-6, "u'''(-ln b) != 0");
  return o;
}

// 3
Outcome table_units() {
  Outcome o;
  const double lr[] = {3.73, 13.9, 52.0, 194.0};
  const double post[] = {0.789, 0.933, 0.981, 0.995};
  const auto rows = units_table(4);
  o.require(rows.size() == 4, "row count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    o.require(std::abs(rows[i].likelihood_ratio - lr[i]) <= 5e-3 * lr[i],
              "LR row " + std::to_string(i + 1));
    o.require(std::abs(rows[i].posterior_at_even_prior - post[i]) <= 5e-4,
              "posterior row " + std::to_string(i + 1));
  }
  return o;
}

// 4
Outcome table_update() {
  Outcome o;
  const std::vector<std::vector<int>> expected = {
      {0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7}};
  o.require(update_matrix(4, 4).entries == expected, "grid differs from the 5x4 reference");
  return o;
}

// 5
Outcome derivative_oracle() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int i = -10; i <= 10; ++i) {
      const LogOdds l(0.5 * i);
      const double exact = logistic_derivative(n, l);
      const double numeric = finite_difference_derivative(n, l);
      const bool ok = std::abs(exact) < 1e-4 ? std::abs(numeric - exact) <= 1e-9
                                              : std::abs(numeric - exact) <= 1e-5 * std::abs(exact);
      o.require(ok, "n=" + std::to_string(n) + " l=" + std::to_string(l.value()));
    }
  }
  return o;
}

// 6
Outcome eulerian_exact() {
  Outcome o;
  std::vector<std::vector<BigInt>> tri(13);
  tri[1] = {1};
  for (int n = 2; n <= 12; ++n) {
    tri[n].assign(n, 0);
    for (int k = 0; k < n; ++k) {
      if (k < n - 1) tri[n][k] += (k + 1) * tri[n - 1][k];
      if (k > 0) tri[n][k] += (n - k) * tri[n - 1][k - 1];
    }
  }
  BigInt factorial = 1;
  for (int n = 1; n <= 12; ++n) {
    factorial *= n;
    BigInt sum = 0;
    for (int k = 0; k < n; ++k) {
      const BigInt v = eulerian(n, k);
      o.require(v == tri[n][k], "recurrence mismatch at n=" + std::to_string(n));
      o.require(v == eulerian(n, n - 1 - k), "symmetry at n=" + std::to_string(n));
      sum += v;
    }
    o.require(sum == factorial, "row sum at n=" + std::to_string(n));
  }
  return o;
}

// 7
Outcome descriptors() {
  Outcome o;
  const struct {
    double lr;
    const char* scale;
    const char* expected;
  } cases[] = {{50, "jeffreys", "very strong"},
               {1000, "afsp", "moderately strong"},
               {8, "royall", "fairly strong"},
               {20, "kass-raftery", "positive"},
               {100, "goodman", "very strong"}};
  for (const auto& c : cases) {
    const auto got = describe(LikelihoodRatio(c.lr), *find_builtin_scale(c.scale));
    o.require(got && *got == c.expected, std::string(c.scale) + " at " + std::to_string(c.lr));
  }
  return o;
}

// 8
Outcome update_guarantee() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick(-4, 3);
  std::uniform_real_distribution<double> frac(0.001, 0.999);
  const double w = std::log(unit_base());
  auto draw = [&] {
    const int k = pick(rng);
    return BeliefCategory(k >= 0 ? k + 1 : k);
  };
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BeliefCategory from = draw();
    const BeliefCategory to = draw();
    const int k = required_units(from, to);
    const double low = from.lower_bound_units() * w;
    const double prior = logistic(LogOdds(low + frac(rng) * w)).value();
    const double after =
        posterior(Probability(prior), LikelihoodRatio(std::pow(unit_base(), k))).value();
    if (category_of(Probability(after)).index() < to.index()) ++failures;
    if (k >= 1) {
      const double edge = logistic(LogOdds(low + 0.001 * w)).value();
      const double short_of =
          posterior(Probability(edge), LikelihoodRatio(std::pow(unit_base(), k - 0.01))).value();
      if (category_of(Probability(short_of)).index() >= to.index()) ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " failing trials");
  return o;
}

// 9
Outcome additivity() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> exponent(-6.0, 6.0);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = std::pow(10.0, exponent(rng));
    const double b = std::pow(10.0, exponent(rng));
    if (std::abs(units(a * b) - units(a) - units(b)) > 1e-9) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " failing trials");
  return o;
}

// 10
Outcome urn() {
  Outcome o;
  o.require(royall_urn(parse_draws("BBB")).value() == 8.0, "BBB != 8");
  o.require(royall_urn(parse_draws("BBBBB")).value() == 32.0, "BBBBB != 32");
  for (const char* seq : {"W", "BW", "WB", "BBBBW", "BBWBB"}) {
    o.require(royall_urn(parse_draws(seq)).value() == 0.0, std::string(seq) + " != 0");
  }
  return o;
}

// 11
Outcome cli_contract(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  auto table = run_process(cli, "table units --max-units 4");
  o.require(table.status == 0, "table units exit status");
  for (const char* literal : {"3.73", "13.9", "52.0", "194", "0.789", "0.933", "0.981", "0.995"}) {
    o.require(table.out.find(literal) != std::string::npos,
              std::string("missing literal ") + literal);
  }

  auto figure = run_process(cli, "figure");
  o.require(figure.status == 0, "figure exit status");
  std::istringstream in(figure.out);
  std::string line;
  std::getline(in, line);
  o.require(line == "l,p,dpdl", "figure header");
  std::vector<double> l, p, d;
  while (std::getline(in, line)) {
    double a = 0, b = 0, c = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3) {
      o.require(false, "unparseable figure row: " + line);
      break;
    }
    l.push_back(a);
    p.push_back(b);
    d.push_back(c);
  }
  o.require(l.size() == 1201, "figure row count");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i > 0) {
      o.require(l[i] > l[i - 1], "l not increasing");
      o.require(p[i] > p[i - 1], "p not increasing");
    }
    o.require(d[i] > 0.0, "dpdl not positive");
    o.require(std::abs(d[i] - d[l.size() - 1 - i]) <= 1e-12, "dpdl not symmetric");
  }

  for (const char* bad : {"interpret 0", "interpret -2", "interpret 2 --prior 1",
                          "table units --max-units 0", "table update --rows 11",
                          "figure --min 1 --max 0", "urn BXB", "scales show missing",
                          "no-such-command"}) {
    auto r = run_process(cli, bad);
    o.require(r.status != 0, std::string("exit 0 for: ") + bad);
    o.require(!r.err.empty(), std::string("no diagnostics for: ") + bad);
    o.require(r.out.empty(), std::string("data on stdout for: ") + bad);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  base constant b = 2 + sqrt3 = 3.7320508", base_constant},
      {"AC2  third-derivative zeros at l = +-1.317, p = 0.2113/0.7887", inflection},
      {"AC3  units table: LR within 0.5%, posteriors within 5e-4", table_units},
      {"AC4  update matrix (4,4) reproduces the 5x4 grid", table_update},
      {"AC5  Eulerian expansion vs finite differences, n = 1..6", derivative_oracle},
      {"AC6  Eulerian numbers exact for n <= 12", eulerian_exact},
      {"AC7  verbal descriptor spot checks", descriptors},
      {"AC8  update guarantee and infimum property, 1000 trials", update_guarantee},
      {"AC9  units additivity, 1000 trials", additivity},
      {"AC10 canonical urn likelihood ratios", urn},
      {"AC11 CLI contract (table literals, figure CSV, error exits)",
       [&] { return cli_contract(cli); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "PASS  " : "FAIL  ") << name;
    if (!outcome.pass) {
      std::cout << "  [" << outcome.detail << "]";
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
