#include "lcx/falsify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "lcx/error.hpp"

namespace lcx {

namespace {

struct Outcome {
  std::optional<Violation> first;
  double score = 0.0;
};

class Evaluator {
 public:
  Evaluator(const BilinearModel& m, const Grid<SeminormExpr>& targets, const ProductEstimateWitness& w)
      : m_(m), targets_(targets), w_(w) {
    if (targets.size() != w.p_family.size()) {
      throw Error(ErrorCode::ShapeMismatch, "one row of targets per p_i is required");
    }
    for (const auto& row : targets) {
      if (row.size() != w.q_family.size()) {
        throw Error(ErrorCode::ShapeMismatch, "one column of targets per q_j is required");
      }
    }
  }

  Outcome run(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    const Eigen::VectorXd z = m_.eval(x, y);
    std::vector<double> pv, qv;
    for (const auto& p : w_.p_family) pv.push_back(evaluate(p, x, m_.ctx1));
    for (const auto& q : w_.q_family) qv.push_back(evaluate(q, y, m_.ctx2));
    Outcome out;
    for (std::size_t i = 0; i < pv.size(); ++i) {
      for (std::size_t j = 0; j < qv.size(); ++j) {
        const double lhs = evaluate(targets_[i][j], z, m_.ctx_out);
        const double rhs = pv[i] * qv[j];
        out.score = std::max(out.score, lhs / (rhs * (1.0 + kRelTol) + kAbsTol));
        if (!out.first && violates(lhs, rhs)) out.first = Violation{i + 1, j + 1, x, y, lhs, rhs};
      }
    }
    return out;
  }

 private:
  const BilinearModel& m_;
  const Grid<SeminormExpr>& targets_;
  const ProductEstimateWitness& w_;
};

class Sampler {
 public:
  Sampler(const BilinearModel& m, const SampleConfig& cfg) : m_(m), cfg_(cfg), rng_(cfg.seed) {
    if (cfg.count == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
    if (!cfg.basis && !cfg.random_sparse && !cfg.random_dense) {
      throw Error(ErrorCode::InvalidArgument, "no sampling strategy enabled");
    }
  }

  /// Fills the next pair; false when the budget is spent.
  bool next(Eigen::VectorXd& x, Eigen::VectorXd& y) {
    if (index_ >= cfg_.count) return false;
    ++index_;
    const std::size_t n_basis = cfg_.basis ? m_.n1 * m_.n2 : 0;
    if (basis_done_ < n_basis) {
      const std::size_t a = basis_done_ / m_.n2, b = basis_done_ % m_.n2;
      ++basis_done_;
      x = unit(m_.n1, a);
      y = unit(m_.n2, b);
      return true;
    }
    const bool sparse = cfg_.random_sparse && (!cfg_.random_dense || random_done_ % 2 == 0);
    ++random_done_;
    x = sparse ? sparse_vec(m_.n1) : dense_vec(m_.n1);
    y = sparse ? sparse_vec(m_.n2) : dense_vec(m_.n2);
    return true;
  }

  std::size_t index() const { return index_; }

 private:
  static Eigen::VectorXd unit(std::size_t n, std::size_t k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
  }

  Eigen::VectorXd sparse_vec(std::size_t n) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(4, n));
    std::uniform_int_distribution<std::size_t> coord(0, n - 1);
    std::uniform_real_distribution<double> mag(-1.0, 1.0);
    std::bernoulli_distribution sign(0.5);
    const std::size_t s = size(rng_);
    for (std::size_t k = 0; k < s; ++k) {
      v(static_cast<Eigen::Index>(coord(rng_))) = (sign(rng_) ? 1.0 : -1.0) * std::pow(10.0, mag(rng_));
    }
    return v;
  }

  Eigen::VectorXd dense_vec(std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng_);
    return v;
  }

  const BilinearModel& m_;
  const SampleConfig& cfg_;
  std::mt19937_64 rng_;
  std::size_t index_ = 0;
  std::size_t basis_done_ = 0;
  std::size_t random_done_ = 0;
};

struct Seed {
  double score;
  std::size_t index;
  Eigen::VectorXd x, y;
};

constexpr std::size_t kRestarts = 8;
constexpr int kClimbSteps = 200;

}  // namespace

CheckResult check(const BilinearModel& model, const Grid<SeminormExpr>& targets, const ProductEstimateWitness& w,
                  const SampleConfig& cfg) {
  const Evaluator eval(model, targets, w);
  Sampler sampler(model, cfg);
  CheckResult result;
  result.seed = cfg.seed;
  Eigen::VectorXd x, y;
  while (sampler.next(x, y)) {
    auto out = eval.run(x, y);
    if (out.first) {
      result.violation = std::move(out.first);
      break;
    }
  }
  result.samples_tried = sampler.index();
  return result;
}

CheckResult search(const BilinearModel& model, const Grid<SeminormExpr>& targets, const ProductEstimateWitness& w,
                   const SampleConfig& cfg) {
  const Evaluator eval(model, targets, w);
  Sampler sampler(model, cfg);
  CheckResult result;
  result.seed = cfg.seed;

  std::vector<Seed> best;
  Eigen::VectorXd x, y;
  while (sampler.next(x, y)) {
    auto out = eval.run(x, y);
    if (out.first) {
      result.violation = std::move(out.first);
      result.samples_tried = sampler.index();
      return result;
    }
    best.push_back(Seed{out.score, sampler.index(), x, y});
    std::stable_sort(best.begin(), best.end(), [](const Seed& a, const Seed& b) { return a.score > b.score; });
    if (best.size() > kRestarts) best.pop_back();
  }
  result.samples_tried = sampler.index();
  if (!cfg.hill_climb) return result;

  const std::size_t dims = model.n1 + model.n2;
  for (auto& start : best) {
    Eigen::VectorXd cx = start.x, cy = start.y;
    double score = start.score;
    double step = 0.5 * std::max({cx.cwiseAbs().maxCoeff(), cy.cwiseAbs().maxCoeff(), 1e-3});
    for (int s = 0; s < kClimbSteps; ++s) {
      const std::size_t c = static_cast<std::size_t>(s) % dims;
      bool moved = false;
      for (const double dir : {1.0, -1.0}) {
        Eigen::VectorXd nx = cx, ny = cy;
        if (c < model.n1) {
          nx(static_cast<Eigen::Index>(c)) += dir * step;
        } else {
          ny(static_cast<Eigen::Index>(c - model.n1)) += dir * step;
        }
        auto out = eval.run(nx, ny);
        ++result.samples_tried;
        if (out.first) {
          result.violation = std::move(out.first);
          return result;
        }
        if (out.score > score) {
          cx = std::move(nx);
          cy = std::move(ny);
          score = out.score;
          moved = true;
          break;
        }
      }
      if (!moved) step *= 0.5;
    }
  }
  return result;
}

std::pair<double, double> replay_violation(const BilinearModel& model, const Grid<SeminormExpr>& targets,
                                           const ProductEstimateWitness& w, const Violation& v) {
  if (v.i == 0 || v.j == 0 || v.i > targets.size() || v.j > targets[v.i - 1].size()) {
    throw Error(ErrorCode::InvalidArgument, "violation indices out of range");
  }
  const double lhs = evaluate(targets[v.i - 1][v.j - 1], model.eval(v.x, v.y), model.ctx_out);
  const double rhs = evaluate(w.p_family[v.i - 1], v.x, model.ctx1) * evaluate(w.q_family[v.j - 1], v.y, model.ctx2);
  return {lhs, rhs};
}

Examp3Setup examp3_setup(std::size_t n, double r) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (!(r > 0)) throw Error(ErrorCode::NonPositiveEntry, "r must be > 0");
  const Space a = Space::frechet_seq(false, "R^N");
  Examp3Setup s{pointwise_model(n + 1), {}, {}};
  s.targets.emplace_back();
  for (std::size_t j = 1; j <= n; ++j) {
    s.targets.front().push_back(SeminormExpr::prefix_sup(a, 1 + j));
    s.candidate.q_family.push_back(SeminormExpr::prefix_sup(a, j + 1));
  }
  s.candidate.p_family.push_back(SeminormExpr::scale(r, SeminormExpr::prefix_sup(a, n)));
  s.candidate.provenance = {"candidate: p_1 = r ||.||_n, q_j = ||.||_{j+1}"};
  return s;
}

Examp3Report repro_examp3(std::size_t n, double r) {
  const auto s = examp3_setup(n, r);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n + 1));
  e(static_cast<Eigen::Index>(n)) = 1.0;

  Examp3Report report;
  report.n = n;
  report.r = r;
  report.violation = Violation{1, n, e, e, 0.0, 0.0};
  std::tie(report.violation.lhs, report.violation.rhs) = replay_violation(s.model, s.targets, s.candidate,
                                                                          report.violation);
  report.note =
      "x = y = e_{n+1}: p_{1,n}(beta(x,y)) = ||e_{n+1}||_{n+1}; the bound is p_1(e_{n+1}) q_n(e_{n+1}) <= "
      "r ||e_{n+1}||_n q_n(e_{n+1}) = 0 (p_1 taken at e_{n+1}, not e_n)";
  return report;
}

BlowupReport repro_examp4(unsigned k, const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty t grid");
  for (std::size_t m = 0; m < t_grid.size(); ++m) {
    if (!(t_grid[m] > 0.0)) throw Error(ErrorCode::NonPositiveT, "t must be > 0");
    if (t_grid[m] > 1.0) throw Error(ErrorCode::InvalidArgument, "t must be <= 1");
    if (m > 0 && !(t_grid[m] < t_grid[m - 1])) throw Error(ErrorCode::InvalidArgument, "t grid must decrease");
  }

  BlowupReport rep;
  rep.k = k;
  for (const double t : t_grid) {
    auto n = static_cast<std::size_t>(std::ceil(static_cast<double>(kBumpPointsPerT) / t - 1e-9));
    auto coarse = bump(t, k, n);
    double a = ck_norm(coarse, k), b = ck_norm(coarse, k + 1);
    double change = 1.0;
    for (unsigned level = 0; level <= kMaxRefinements; ++level) {
      const auto fine = bump(t, k, 2 * n);
      const double a2 = ck_norm(fine, k), b2 = ck_norm(fine, k + 1);
      change = std::max(std::abs(a2 - a) / a2, std::abs(b2 - b) / b2);
      if (change < 0.02) break;
      n *= 2;
      a = a2;
      b = b2;
    }
    if (!(change < 0.02)) {
      throw Error(ErrorCode::GridTooCoarse, "refining the grid at t = " + std::to_string(t) + " changed a norm by " +
                                                std::to_string(100.0 * change) + "%");
    }
    rep.self_check = std::max(rep.self_check, change);
    rep.t.push_back(t);
    rep.intervals.push_back(n);
    rep.ck.push_back(a);
    rep.ck_next.push_back(b);
    rep.ratios.push_back(b / a);
  }
  bool halvings = true;
  for (std::size_t m = 1; m < rep.t.size(); ++m) {
    rep.quotients.push_back(rep.ratios[m] / rep.ratios[m - 1]);
    halvings = halvings && std::abs(rep.t[m] * 2.0 - rep.t[m - 1]) <= 1e-12 * rep.t[m - 1];
  }
  const bool in_band = std::all_of(rep.quotients.begin(), rep.quotients.end(),
                                   [](double q) { return q >= 1.8 && q <= 2.2; });
  if (rep.t.size() < 2) {
    rep.note = "a single t supports no blowup claim";
  } else if (!halvings) {
    rep.note = "t does not halve between consecutive grid points; no blowup claim";
  } else {
    rep.blowup = in_band;
    rep.note = in_band ? "||g_t||_{C^{k+1}} / ||g_t||_{C^k} doubles as t halves, so no K bounds C^{k+1} by C^k"
                       : "a ratio quotient lies outside [1.8, 2.2]";
  }
  return rep;
}

}  // namespace lcx
