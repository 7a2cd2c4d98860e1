// lcx: command-line front end for the neighbourhood-property engine, the
// product-estimate witness builders and the numerical falsifier.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcx/error.hpp"
#include "lcx/json_io.hpp"

namespace {

using lcx::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 64;

int exit_for(lcx::Status s) {
  switch (s) {
    case lcx::Status::Holds: return kExitOk;
    case lcx::Status::Fails: return kExitFails;
    case lcx::Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

void print_tree(std::ostream& os, const lcx::Derivation& d, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << '[' << d.rule << "] " << d.conclusion << "  ("
     << lcx::rule_citation(d.rule) << ")\n";
  for (const auto& p : d.premises) print_tree(os, p, depth + 1);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string vec_text(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ')';
  return os.str();
}

lcx::Status parse_yes_no(const std::string& s) {
  if (s == "yes") return lcx::Status::Holds;
  if (s == "no") return lcx::Status::Fails;
  if (s == "unknown") return lcx::Status::Unknown;
  throw lcx::Error(lcx::ErrorCode::ParseError, "expected yes, no or unknown, got \"" + s + "\"");
}

lcx::Degree parse_degree(const std::string& s) {
  if (s == "inf") return lcx::Degree::inf();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw lcx::Error(lcx::ErrorCode::ParseError, "degree must be a non-negative integer or inf, got \"" + s + "\"");
  }
  return lcx::Degree::of(static_cast<std::uint32_t>(std::stoul(s)));
}

lcx::GroupClass parse_group_class(const std::string& s) {
  if (s == "finite") return lcx::GroupClass::Finite;
  if (s == "infinite-discrete") return lcx::GroupClass::InfiniteDiscrete;
  if (s == "infinite-compact") return lcx::GroupClass::InfiniteCompact;
  if (s == "noncompact-nondiscrete" || s == "non-compact-non-discrete") return lcx::GroupClass::NonCompactNonDiscrete;
  throw lcx::Error(lcx::ErrorCode::ParseError, "unknown group class \"" + s + "\"");
}

struct Options {
  bool json = false;

  std::string space, property = "cnp", theta, base;

  std::string witness_kind, input;

  std::uint64_t seed = 0;
  std::size_t count = 10000;
  bool search = false;
  std::string strategies = "basis,randomSparse,randomDense";

  std::size_t n = 0;
  double r = 1.0;
  unsigned k = 0;
  std::vector<double> t_grid{0.125, 0.0625, 0.03125, 0.015625, 0.0078125};

  std::string group, gamma, eta;

  std::string group_class, deg_r = "inf", deg_s = "inf", deg_t = "inf", b_pe = "yes", countable = "yes",
                           sigma_compact = "yes";
};

int run_derive(const Options& o) {
  const auto space = lcx::io::space_from_json(lcx::io::load(o.space));
  if (o.property == "psi") {
    if (o.base.empty()) throw lcx::Error(lcx::ErrorCode::InvalidArgument, "--property psi needs --base");
    const auto v = lcx::psi_continuity(lcx::io::base_from_json(lcx::io::load(o.base)), space);
    if (o.json) {
      print_json(Json{{"property", "psi"},
                      {"continuous", lcx::io::to_json(v.continuous)},
                      {"hypocontinuous", lcx::io::to_json(v.hypocontinuous)}});
    } else {
      print_tree(std::cout, v.continuous.derivation, 0);
      print_tree(std::cout, v.hypocontinuous.derivation, 0);
      std::cout << "continuous: " << lcx::to_string(v.continuous.status)
                << "\nhypocontinuous: " << lcx::to_string(v.hypocontinuous.status) << '\n';
    }
    return exit_for(v.continuous.status);
  }

  lcx::Verdict v;
  if (o.property == "cnp") {
    v = lcx::derive(space, lcx::PropertyQuery::cnp());
  } else if (o.property == "theta-np") {
    if (o.theta.empty()) throw lcx::Error(lcx::ErrorCode::InvalidArgument, "--property theta-np needs --theta");
    v = lcx::derive(space, lcx::PropertyQuery::theta_np(lcx::io::parse_cardinal(o.theta)));
  } else if (o.property == "continuous-norm") {
    v = lcx::continuous_norm(space);
  } else {
    throw lcx::Error(lcx::ErrorCode::InvalidArgument, "unknown property \"" + o.property + "\"");
  }
  if (o.json) {
    Json j{{"property", o.property}};
    if (o.property == "theta-np") j["theta"] = lcx::io::to_json(lcx::io::parse_cardinal(o.theta));
    j.update(lcx::io::to_json(v));
    print_json(j);
  } else {
    print_tree(std::cout, v.derivation, 0);
    std::cout << "verdict: " << lcx::to_string(v.status) << '\n';
  }
  return exit_for(v.status);
}

int run_witness(const Options& o) {
  const Json in = lcx::io::load(o.input);
  const auto expr = [&](const char* key) { return lcx::io::seminorm_from_json(in.at(key)); };
  Json out;
  std::string text;
  if (o.witness_kind == "schedule") {
    const auto res =
        lcx::schedule_constants(lcx::io::matrix_from_json(in.at("r")), lcx::io::matrix_from_json(in.at("s")));
    out = Json{{"a", lcx::io::to_json(res.a)}, {"b", lcx::io::to_json(res.b)}};
    text = "a = " + vec_text(res.a) + "\nb = " + vec_text(res.b) + '\n';
  } else if (o.witness_kind == "split") {
    const auto res = lcx::bisgaard_split(lcx::io::matrix_from_json(in.at("C")));
    out = Json{{"c", lcx::io::to_json(res.c)}, {"d", lcx::io::to_json(res.d)}};
    text = "c = " + vec_text(res.c) + "\nd = " + vec_text(res.d) + '\n';
  } else if (o.witness_kind == "exponent") {
    const auto res = lcx::exponent_schedule(lcx::io::int_matrix_from_json(in.at("t")));
    out = Json{{"r", lcx::io::to_json(res.r)}, {"s", lcx::io::to_json(res.s)}};
    text = "r = " + vec_text(res.r.cast<double>()) + "\ns = " + vec_text(res.s.cast<double>()) + '\n';
  } else if (o.witness_kind == "direct-sum") {
    lcx::Grid<lcx::SeminormExpr> pb, qb;
    for (const auto& row : in.at("P_blocks")) {
      pb.emplace_back();
      for (const auto& e : row) pb.back().push_back(lcx::io::seminorm_from_json(e));
    }
    for (const auto& row : in.at("Q_blocks")) {
      qb.emplace_back();
      for (const auto& e : row) qb.back().push_back(lcx::io::seminorm_from_json(e));
    }
    out = lcx::io::to_json(lcx::direct_sum_combine(lcx::io::tensor4_from_json(in.at("C")), pb, qb));
  } else {
    lcx::ProductEstimateWitness w;
    if (o.witness_kind == "cnp") {
      w = lcx::cnp_product_estimates(expr("p"), expr("q"), lcx::io::matrix_from_json(in.at("r")),
                                     lcx::io::matrix_from_json(in.at("s")));
    } else if (o.witness_kind == "target-cnp") {
      w = lcx::target_cnp_product_estimates(expr("P"), lcx::io::matrix_from_json(in.at("C")), expr("p"), expr("q"));
    } else if (o.witness_kind == "exenew") {
      lcx::Grid<lcx::WeightMap> targets;
      for (const auto& row : in.at("targets")) {
        targets.emplace_back();
        for (const auto& v : row) targets.back().push_back(lcx::io::weights_from_json(v));
      }
      const auto space = in.contains("space") ? lcx::io::space_from_json(in.at("space"))
                                              : lcx::Space::r_finsupp_uncountable(lcx::Cardinal::continuum());
      w = lcx::exenew_witness(targets, space);
    } else {
      throw lcx::Error(lcx::ErrorCode::InvalidArgument, "unknown witness kind \"" + o.witness_kind + "\"");
    }
    out = lcx::io::to_json(w);
  }
  if (o.json || text.empty()) {
    print_json(out);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

lcx::SampleConfig sample_config(const Options& o) {
  lcx::SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.basis = cfg.random_sparse = cfg.random_dense = false;
  cfg.hill_climb = o.search;
  std::stringstream ss(o.strategies);
  std::string s;
  while (std::getline(ss, s, ',')) {
    if (s == "basis") {
      cfg.basis = true;
    } else if (s == "randomSparse") {
      cfg.random_sparse = true;
    } else if (s == "randomDense") {
      cfg.random_dense = true;
    } else if (s == "hillClimb") {
      cfg.hill_climb = true;
    } else {
      throw lcx::Error(lcx::ErrorCode::ParseError, "unknown strategy \"" + s + "\"");
    }
  }
  return cfg;
}

int run_falsify(const Options& o) {
  const Json in = lcx::io::load(o.input);
  const auto model = lcx::io::model_from_json(in.at("model"));
  lcx::Grid<lcx::SeminormExpr> targets;
  for (const auto& row : in.at("targets")) {
    targets.emplace_back();
    for (const auto& e : row) targets.back().push_back(lcx::io::seminorm_from_json(e));
  }
  const auto witness = lcx::io::witness_from_json(in.at("witness"));
  const auto cfg = sample_config(o);
  const auto res = cfg.hill_climb ? lcx::search(model, targets, witness, cfg) : lcx::check(model, targets, witness, cfg);
  if (o.json) {
    print_json(lcx::io::to_json(res));
  } else if (res.pass()) {
    std::cout << "Pass (" << res.samples_tried << " samples, seed " << res.seed << ")\n";
  } else {
    const auto& v = *res.violation;
    std::cout << "Violation at i=" << v.i << " j=" << v.j << ": lhs=" << v.lhs << " > rhs=" << v.rhs << " after "
              << res.samples_tried << " samples (seed " << res.seed << ")\n";
  }
  return res.pass() ? kExitOk : kExitFails;
}

int run_examp3(const Options& o) {
  const auto rep = lcx::repro_examp3(o.n, o.r);
  if (o.json) {
    print_json(lcx::io::to_json(rep));
  } else {
    const auto& v = rep.violation;
    std::cout << "Violation(i=" << v.i << ", j=" << v.j << ", x=y=e_" << o.n + 1 << ", lhs=" << v.lhs
              << ", rhs=" << v.rhs << ")\n"
              << rep.note << '\n';
  }
  return kExitFails;
}

int run_examp4(const Options& o) {
  const auto rep = lcx::repro_examp4(o.k, o.t_grid);
  if (o.json) {
    print_json(lcx::io::to_json(rep));
  } else {
    for (std::size_t m = 0; m < rep.t.size(); ++m) {
      std::cout << "t=" << rep.t[m] << " intervals=" << rep.intervals[m] << " C^k=" << rep.ck[m]
                << " C^(k+1)=" << rep.ck_next[m] << " ratio=" << rep.ratios[m] << '\n';
    }
    for (const double q : rep.quotients) std::cout << "quotient=" << q << '\n';
    std::cout << (rep.blowup ? "Blowup" : "NoClaim") << ": " << rep.note << '\n';
  }
  return rep.blowup ? kExitFails : kExitUnknown;
}

Eigen::VectorXd vector_arg(const std::string& s) {
  const Json j = lcx::io::load(s);
  if (!j.is_array()) throw lcx::Error(lcx::ErrorCode::ParseError, "expected a JSON array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

int run_convolve(const Options& o) {
  const auto g = lcx::io::group_from_json(lcx::io::load(o.group));
  const auto gamma = vector_arg(o.gamma), eta = vector_arg(o.eta);
  const auto z = lcx::convolve(g, gamma, eta);
  const double bound = lcx::rl_norm(g, gamma, 0, 0) * lcx::rl_norm(g, eta, 0, 0) * lcx::support_measure(g, gamma);
  const double lhs = lcx::rl_norm(g, z, 0, 0);
  if (o.json) {
    print_json(Json{{"group", g.describe()},
                    {"result", lcx::io::to_json(z)},
                    {"supResult", lhs},
                    {"youngBound", bound}});
  } else {
    std::cout << "gamma * eta = " << vec_text(z) << "\n||gamma * eta||_inf = " << lhs
              << " <= ||gamma||_inf ||eta||_inf lambda(supp gamma) = " << bound << '\n';
  }
  return kExitOk;
}

int run_theta(const Options& o) {
  const auto c = lcx::theta(lcx::io::base_from_json(lcx::io::load(o.base)));
  if (o.json) {
    print_json(Json{{"theta", lcx::io::to_json(c)}});
  } else {
    std::cout << "theta(M) = " << c << '\n';
  }
  return kExitOk;
}

int run_classify(const Options& o) {
  lcx::ConvolutionSetting s;
  s.group = parse_group_class(o.group_class);
  s.r = parse_degree(o.deg_r);
  s.s = parse_degree(o.deg_s);
  s.t = parse_degree(o.deg_t);
  s.b_product_estimates = parse_yes_no(o.b_pe);
  s.countable = parse_yes_no(o.countable) == lcx::Status::Holds;
  s.sigma_compact = parse_yes_no(o.sigma_compact) == lcx::Status::Holds;
  const auto v = lcx::classify_convolution(s);
  if (o.json) {
    print_json(Json{{"group", lcx::to_string(s.group)},
                    {"r", s.r.to_string()},
                    {"s", s.s.to_string()},
                    {"t", s.t.to_string()},
                    {"continuous", lcx::to_string(v.continuous.status)},
                    {"productEstimates", lcx::to_string(v.product_estimates.status)},
                    {"derivations",
                     Json{{"continuous", lcx::io::to_json(v.continuous.derivation)},
                          {"productEstimates", lcx::io::to_json(v.product_estimates.derivation)}}}});
  } else {
    print_tree(std::cout, v.continuous.derivation, 0);
    print_tree(std::cout, v.product_estimates.derivation, 0);
    std::cout << "continuous: " << lcx::to_string(v.continuous.status)
              << "\nproductEstimates: " << lcx::to_string(v.product_estimates.status) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Neighbourhood properties, product-estimate witnesses and counterexample search"};
  app.name("lcx");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable report");

  auto* derive = app.add_subcommand("derive", "Derive cnp / theta-np / continuous norm / Psi continuity");
  derive->add_option("--space", o.space, "Space presentation (JSON text or file)")->required();
  derive->add_option("--property", o.property, "cnp | theta-np | continuous-norm | psi")
      ->check(CLI::IsMember({"cnp", "theta-np", "continuous-norm", "psi"}));
  derive->add_option("--theta", o.theta, "Cardinal for theta-np: n, alephK or continuum");
  derive->add_option("--base", o.base, "Base space M for --property psi (JSON text or file)");

  auto* witness = app.add_subcommand("witness", "Build scheduling constants or a product-estimate witness");
  witness->add_option("--kind", o.witness_kind, "schedule | split | exponent | cnp | target-cnp | direct-sum | exenew")
      ->required();
  witness->add_option("--input", o.input, "Input document (JSON text or file)")->required();

  auto* falsify = app.add_subcommand("falsify", "Check a witness numerically on a finite model");
  falsify->add_option("--input", o.input, "{model, targets, witness} (JSON text or file)")->required();
  falsify->add_option("--seed", o.seed, "RNG seed")->required();
  falsify->add_option("--count", o.count, "Number of samples")->check(CLI::PositiveNumber);
  falsify->add_option("--strategies", o.strategies, "Comma list of basis, randomSparse, randomDense, hillClimb");
  falsify->add_flag("--search", o.search, "Add hill climbing from the best samples");

  auto* repro = app.add_subcommand("repro", "Reproduce a counterexample");
  repro->require_subcommand(1, 1);
  auto* examp3 = repro->add_subcommand("examp3", "Pointwise multiplication on R^N");
  examp3->add_option("--n", o.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  examp3->add_option("--r", o.r, "Scale of the candidate p_1")->check(CLI::PositiveNumber);
  auto* examp4 = repro->add_subcommand("examp4", "Pointwise multiplication on C^inf[0,1]");
  examp4->add_option("--k", o.k, "Order k")->required();
  examp4->add_option("--t", o.t_grid, "Decreasing t values in (0, 1]")->delimiter(',');

  auto* convolve = app.add_subcommand("convolve", "Convolve two functions on a finite group model");
  convolve->add_option("--group", o.group, "{\"kind\": cyclic|truncated|circle, \"size\": n}")->required();
  convolve->add_option("--gamma", o.gamma, "JSON array")->required();
  convolve->add_option("--eta", o.eta, "JSON array")->required();

  auto* theta = app.add_subcommand("theta", "Compact covering number of a non-compact base space");
  theta->add_option("--base", o.base, "Base space description (JSON text or file)")->required();

  auto* classify = app.add_subcommand("classify-convolution", "Continuity and product estimates of convolution");
  classify->add_option("--group", o.group_class, "finite | infinite-discrete | infinite-compact | noncompact-nondiscrete")
      ->required();
  classify->add_option("--r", o.deg_r, "Degree r (integer or inf)");
  classify->add_option("--s", o.deg_s, "Degree s (integer or inf)");
  classify->add_option("--t", o.deg_t, "Degree t (integer or inf)");
  classify->add_option("--b-pe", o.b_pe, "Whether b admits product estimates: yes | no | unknown");
  classify->add_option("--countable", o.countable, "Whether G is countable: yes | no");
  classify->add_option("--sigma-compact", o.sigma_compact, "Whether G is sigma-compact: yes | no");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*derive) return run_derive(o);
    if (*witness) return run_witness(o);
    if (*falsify) return run_falsify(o);
    if (*examp3) return run_examp3(o);
    if (*examp4) return run_examp4(o);
    if (*convolve) return run_convolve(o);
    if (*theta) return run_theta(o);
    if (*classify) return run_classify(o);
  } catch (const lcx::Error& e) {
    std::cerr << "lcx: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "lcx: ParseError: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
