#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

#include "kouch/classify.hpp"
#include "kouch/error.hpp"
#include "kouch/model.hpp"
#include "kouch/newton.hpp"
#include "kouch/parser.hpp"
#include "render.hpp"
#include "text_report.hpp"

namespace kouch::cli {
namespace {

Json support_to_json(const Polynomial& f) {
  Json out = Json::array();
  for (const Monomial& m : f.support())
    out.push_back(Json::array({m.alpha, m.beta}));
  return out;
}

std::vector<LatticePoint> support_points(const Polynomial& f) {
  std::vector<LatticePoint> out;
  for (const Monomial& m : f.support()) out.push_back({m.alpha, m.beta});
  return out;
}

Json indices_to_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Json optional_int(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::int64_t> germ_milnor(const GermData& germ) {
  if (!milnor_computable(germ)) return std::nullopt;
  return milnor(germ);
}

}  // namespace

Json analyze_poly_report(const Polynomial& f, const ReportOptions& options) {
  require_germ(f);
  Json out = Json::object();
  out["command"] = "analyze-poly";
  out["polynomial"] = f.to_string();
  out["support"] = support_to_json(f);
  if (!is_reduced_at_origin(f))
    throw InputError("not reduced at the origin (repeated factor through "
                     "the origin)");
  KouchnirenkoReport r = kouchnirenko_report(f, options);
  Json core = kouchnirenko_to_json(r);
  for (const auto& item : core.items()) out[item.key()] = item.value();
  out["verdict"] = r.chart_nondegenerate ? "nondegenerate" : "degenerate";
  return out;
}

Json analyze_germ_report(const GermData& germ) {
  require_valid(germ);
  Json out = Json::object();
  out["command"] = "analyze-germ";
  out["branches"] = germ.size();
  out["multiplicity"] = multiplicity(germ);
  out["milnor"] = optional_int(germ_milnor(germ));
  TangentialDecomposition td = tangential_decomposition(germ);
  out["tangential_count"] = td.count();
  out["ordinary"] = is_ordinary(germ);

  Json contacts = Json::array();
  for (std::size_t i = 0; i < germ.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < germ.size(); ++j)
      row.push_back(germ.contact(i, j).to_string());
    contacts.push_back(row);
  }
  out["contact_matrix"] = contacts;
  out["contact_exponent"] = contact_exponent(germ).to_string();

  NGermResult whole = ngerm_check(germ);
  out["ngerm"] = ngerm_to_json(whole);
  if (whole.verdict)
    out["milnor_from_witness"] = milnor_from_witness(germ, whole.witness);

  NondegeneracyResult nd = nondegenerate_verdict(germ);
  Json comps = Json::array();
  for (const ComponentReport& c : nd.components) {
    Json jc = Json::object();
    jc["branches"] = indices_to_json(c.branches);
    jc["smooth_branch"] = c.is_smooth_branch;
    jc["ngerm"] = ngerm_to_json(c.ngerm);
    comps.push_back(jc);
  }
  out["components"] = comps;
  out["nonsmooth_components"] = nd.nonsmooth_count;
  out["nondegenerate"] = nd.verdict;

  if (milnor_computable(germ)) {
    GermNewtonNumber nn = newton_number_germ(germ);
    out["newton_number"] = nn.exact ? Json(nn.value) : Json(nullptr);
    out["newton_number_lower_bound"] = nn.value;
  } else {
    out["newton_number"] = nullptr;
    out["newton_number_lower_bound"] = nullptr;
  }
  return out;
}

Json model_report(const GermData& germ, const ReportOptions& options) {
  require_valid(germ);
  NGermResult ng = ngerm_check(germ);
  if (!ng.verdict) throw InputError("not an N-germ: " + ng.refutation);

  ModelEquation eq = model_equation(germ, ng.witness, options.seed);
  ModelCheck check = verify_model(germ, ng.witness, eq);
  KouchnirenkoReport r = kouchnirenko_report(eq.polynomial, options);
  std::int64_t witness_mu = milnor_from_witness(germ, ng.witness);
  std::optional<std::int64_t> mu_germ = germ_milnor(germ);
  if (r.mu != witness_mu || (mu_germ && *mu_germ != r.mu) || r.mu != r.nu)
    throw InvariantViolation("model equation Milnor numbers disagree: oracle " +
                             std::to_string(r.mu) + ", witness formula " +
                             std::to_string(witness_mu) + ", nu " +
                             std::to_string(r.nu));

  Json out = Json::object();
  out["command"] = "model";
  out["seed"] = options.seed;
  out["polynomial"] = eq.polynomial.to_string();
  Json factors = Json::array();
  for (const Polynomial& p : eq.factors) factors.push_back(p.to_string());
  out["factors"] = factors;
  out["witness"] = decomposition_to_json(ng.witness);
  out["model_diagram"] = diagram_to_json(model_diagram(germ, ng.witness));
  Json checks = Json::object();
  checks["diagram_matches"] = check.diagram_matches;
  checks["chart_nondegenerate"] = check.chart_nondegenerate;
  checks["transversal"] = check.transversal;
  checks["intersections_match"] = check.intersections_match;
  out["checks"] = checks;
  out["mu"] = r.mu;
  out["nu"] = r.nu;
  out["mu_witness_formula"] = witness_mu;
  out["mu_germ"] = optional_int(mu_germ);
  out["verified"] = check.ok();
  return out;
}

namespace {

struct TrialOutcome {
  Json record;
  std::vector<std::string> problems;
};

TrialOutcome run_trial(const GermData& germ, std::uint64_t seed,
                       const ReportOptions& options) {
  TrialOutcome t;
  t.record = Json::object();
  t.record["seed"] = seed;
  auto problem = [&](const std::string& p) { t.problems.push_back(p); };

  NGermResult ng = ngerm_check(germ);
  NondegeneracyResult nd = nondegenerate_verdict(germ);
  std::optional<std::int64_t> mu_germ = germ_milnor(germ);

  ModelEquation eq;
  try {
    if (ng.verdict) {
      t.record["route"] = "model";
      eq = model_equation(germ, ng.witness, seed);
    } else {
      t.record["route"] = "realization";
      eq = realize_germ(germ, seed);
    }
  } catch (const InvariantViolation& e) {
    problem(e.what());
    return t;
  }
  t.record["polynomial"] = eq.polynomial.to_string();

  KouchnirenkoReport r;
  try {
    ReportOptions o = options;
    o.seed = seed;
    r = kouchnirenko_report(eq.polynomial, o);
  } catch (const InvariantViolation& e) {
    problem(e.what());
    return t;
  } catch (const OracleError& e) {
    problem(e.what());
    return t;
  }
  t.record["mu"] = r.mu;
  t.record["nu"] = r.nu;
  t.record["nondegenerate"] = r.chart_nondegenerate;

  if (mu_germ && *mu_germ != r.mu)
    problem("oracle mu " + std::to_string(r.mu) + " differs from germ mu " +
            std::to_string(*mu_germ));
  if (ng.verdict) {
    std::int64_t witness_mu = milnor_from_witness(germ, ng.witness);
    if (r.mu != witness_mu)
      problem("oracle mu differs from the witness formula " +
              std::to_string(witness_mu));
    if (!r.chart_nondegenerate)
      problem("model chart of an N-germ is degenerate");
  } else if (!nd.verdict && r.chart_nondegenerate) {
    problem("chart is nondegenerate but the class is degenerate");
  }
  if (mu_germ) {
    GermNewtonNumber nn = newton_number_germ(germ);
    if (nn.exact && r.nu > nn.value)
      problem("chart nu " + std::to_string(r.nu) + " exceeds nu(C) " +
              std::to_string(nn.value));
  }
  return t;
}

struct TrialSet {
  Json records = Json::array();
  std::vector<std::string> problems;
  std::optional<std::uint64_t> first_failing_seed;
};

TrialSet run_trials(const GermData& germ, int trials,
                    const ReportOptions& options) {
  TrialSet s;
  std::optional<Json> reference;
  for (int k = 0; k < trials; ++k) {
    std::uint64_t seed = options.seed + static_cast<std::uint64_t>(k);
    TrialOutcome t = run_trial(germ, seed, options);
    if (t.problems.empty() && t.record.contains("mu")) {
      Json key = Json::array({t.record["mu"], t.record["nu"],
                              t.record["nondegenerate"]});
      if (!reference)
        reference = key;
      else if (*reference != key)
        t.problems.push_back("(mu, nu, verdict) " + key.dump() +
                             " differs from the first seed " +
                             reference->dump());
    }
    t.record["problems"] = t.problems;
    for (const std::string& p : t.problems)
      s.problems.push_back("seed " + std::to_string(seed) + ": " + p);
    if (!t.problems.empty() && !s.first_failing_seed)
      s.first_failing_seed = seed;
    s.records.push_back(t.record);
  }
  return s;
}

bool still_fails(const GermData& germ, int trials,
                 const ReportOptions& options) {
  try {
    return !run_trials(germ, trials, options).problems.empty();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Json crosscheck_report(const GermData& germ, int trials,
                       const ReportOptions& options) {
  require_valid(germ);
  if (trials < 1) throw InputError("--trials must be positive");

  Json out = Json::object();
  out["command"] = "crosscheck";
  out["seed"] = options.seed;
  out["trials"] = trials;
  NGermResult ng = ngerm_check(germ);
  NondegeneracyResult nd = nondegenerate_verdict(germ);
  Json intrinsic = Json::object();
  intrinsic["ngerm"] = ng.verdict;
  intrinsic["nondegenerate"] = nd.verdict;
  intrinsic["milnor"] = optional_int(germ_milnor(germ));
  out["intrinsic"] = intrinsic;

  TrialSet s = run_trials(germ, trials, options);
  out["results"] = s.records;
  out["pass"] = s.problems.empty();
  if (!s.problems.empty()) {
    // Drop branches one at a time while the failure persists.
    std::vector<std::size_t> keep(germ.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    bool shrunk = true;
    while (shrunk && keep.size() > 1) {
      shrunk = false;
      for (std::size_t drop = 0; drop < keep.size(); ++drop) {
        std::vector<std::size_t> trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(drop));
        if (still_fails(germ.subgerm(trial), trials, options)) {
          keep = trial;
          shrunk = true;
          break;
        }
      }
    }
    GermData small = germ.subgerm(keep);
    TrialSet again = run_trials(small, trials, options);
    Json repro = Json::object();
    repro["germ"] = germ_to_json(small);
    repro["branches"] = indices_to_json(keep);
    repro["seed"] = again.first_failing_seed.value_or(options.seed);
    repro["problems"] = again.problems.empty() ? Json(s.problems)
                                               : Json(again.problems);
    out["reproduction"] = repro;
  }
  return out;
}

namespace {

struct Common {
  std::string format;
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  std::string oracle = "both";

  ReportOptions options() const {
    ReportOptions o;
    o.seed = seed;
    o.degree_cap = degree_cap;
    o.oracle = oracle == "resultant" ? OracleChoice::resultant
               : oracle == "linear"  ? OracleChoice::linear
                                     : OracleChoice::both;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool figure) {
  if (figure) {
    c.format = "ascii";
    cmd->add_option("--format", c.format, "Figure format")
        ->check(CLI::IsMember({"ascii", "svg"}));
  } else {
    c.format = "text";
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  }
  cmd->add_option("--seed", c.seed, "Seed for coefficient and coordinate draws");
  cmd->add_option("--degree-cap", c.degree_cap,
                  "Largest truncation degree for the linear-algebra oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle", c.oracle, "Milnor-number oracle")
      ->check(CLI::IsMember({"resultant", "linear", "both"}));
}

void emit(const Json& report, const Common& c, std::ostream& out) {
  if (c.format == "json")
    out << report.dump(2) << '\n';
  else
    out << render_text_report(report);
}

Polynomial read_polynomial(const std::string& expr, const std::string& file) {
  if (!file.empty()) return parse(read_text_file(file));
  if (expr.empty()) throw InputError("no polynomial given");
  return parse(expr);
}

std::string render_target(const std::string& target, const Common& c) {
  NewtonDiagram diagram;
  std::vector<LatticePoint> support;
  std::optional<Json> doc;
  std::string text = target;
  if (std::filesystem::is_regular_file(target)) {
    text = read_text_file(target);
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      doc.reset();
    }
  }
  if (doc && doc->is_object() && doc->contains("branches")) {
    GermData germ = germ_from_json(*doc);
    require_valid(germ);
    NGermResult ng = ngerm_check(germ);
    if (!ng.verdict) throw InputError("not an N-germ: " + ng.refutation);
    diagram = model_diagram(germ, ng.witness);
    support = support_points(model_equation(germ, ng.witness, c.seed).polynomial);
  } else if (doc && doc->is_object()) {
    diagram = diagram_from_json(*doc);
  } else {
    Polynomial f = parse(text);
    require_germ(f);
    diagram = diagram_of(f);
    support = support_points(f);
  }
  return c.format == "svg" ? render_svg(diagram, support)
                           : render_ascii(diagram, support);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Kouchnirenko nondegeneracy of plane curve germs", "kouch"};
  app.require_subcommand(1);

  Common poly_flags, germ_flags, model_flags, render_flags, cross_flags;

  std::string expr, poly_file;
  auto* poly = app.add_subcommand("analyze-poly",
                                  "Newton diagram, faces, mu and nu of f(x,y)");
  poly->add_option("expr", expr, "Polynomial expression in x and y");
  poly->add_option("--file", poly_file, "Read the expression from a file");
  add_common(poly, poly_flags, false);

  std::string germ_file;
  auto* germ_cmd = app.add_subcommand("analyze-germ",
                                      "Invariants and verdicts of germ data");
  germ_cmd->add_option("file", germ_file, "Germ data JSON")->required();
  add_common(germ_cmd, germ_flags, false);

  std::string model_file;
  auto* model = app.add_subcommand("model",
                                   "Model equation of an N-germ class");
  model->add_option("file", model_file, "Germ data JSON")->required();
  add_common(model, model_flags, false);

  std::string target;
  auto* render = app.add_subcommand(
      "render", "Draw a Newton diagram (polynomial, germ file or diagram file)");
  render->add_option("target", target, "Expression or file")->required();
  add_common(render, render_flags, true);

  std::string cross_file;
  int trials = 5;
  auto* cross = app.add_subcommand(
      "crosscheck", "Compare intrinsic and polynomial routes over seeds");
  cross->add_option("file", cross_file, "Germ data JSON")->required();
  cross->add_option("--trials", trials, "Number of seeds");
  add_common(cross, cross_flags, false);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (poly->parsed()) {
      emit(analyze_poly_report(read_polynomial(expr, poly_file),
                               poly_flags.options()),
           poly_flags, out);
    } else if (germ_cmd->parsed()) {
      emit(analyze_germ_report(load_germ(germ_file)), germ_flags, out);
    } else if (model->parsed()) {
      emit(model_report(load_germ(model_file), model_flags.options()),
           model_flags, out);
    } else if (render->parsed()) {
      out << render_target(target, render_flags);
    } else if (cross->parsed()) {
      Json report = crosscheck_report(load_germ(cross_file), trials,
                                      cross_flags.options());
      emit(report, cross_flags, out);
      if (!report["pass"].get<bool>()) {
        err << "error: crosscheck failed\n";
        return kExitInvariant;
      }
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace kouch::cli
