#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcx/models.hpp"
#include "lcx/witness.hpp"

namespace lcx {

inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

/// lhs > rhs (1 + 1e-9) + 1e-12.
inline bool violates(double lhs, double rhs) { return lhs > rhs * (1.0 + kRelTol) + kAbsTol; }

struct SampleConfig {
  std::uint64_t seed = 0;
  /// Total number of (x, y) samples, basis pairs included.
  std::size_t count = 1000;
  bool basis = true;
  bool random_sparse = true;
  bool random_dense = true;
  /// Only used by search().
  bool hill_climb = true;
};

/// Indices are 1-based.
struct Violation {
  std::size_t i = 0, j = 0;
  Eigen::VectorXd x, y;
  double lhs = 0.0, rhs = 0.0;
};

struct CheckResult {
  std::optional<Violation> violation;
  std::size_t samples_tried = 0;
  std::uint64_t seed = 0;
  bool pass() const { return !violation; }
};

/// Samples (x, y) deterministically and tests
/// targets[i][j](beta(x, y)) <= p_i(x) q_j(y) within the tolerance. Basis
/// pairs come first, then random sparse and dense vectors alternately.
/// Returns the first violation in sample order, then i, then j.
/// Throws UnevaluableSeminorm, ShapeMismatch.
CheckResult check(const BilinearModel& model, const Grid<SeminormExpr>& targets, const ProductEstimateWitness& w,
                  const SampleConfig& cfg);

/// check() followed by coordinate-ascent hill climbing on the ratio
/// lhs / (rhs (1 + eps) + eta) from the 8 best samples (200 steps each, step
/// halved after a failed move).
CheckResult search(const BilinearModel& model, const Grid<SeminormExpr>& targets, const ProductEstimateWitness& w,
                   const SampleConfig& cfg);

/// Recomputes (lhs, rhs) of a reported violation.
std::pair<double, double> replay_violation(const BilinearModel& model, const Grid<SeminormExpr>& targets,
                                           const ProductEstimateWitness& w, const Violation& v);

struct Examp3Report {
  std::size_t n = 0;
  double r = 1.0;
  Violation violation;
  std::string note;
};

/// Pointwise multiplication on R^N truncated to n + 1 coordinates, targets
/// p_ij = ||.||_{i+j}, candidate p_1 = r ||.||_n and q_n = ||.||_{n+1}:
/// at x = y = e_{n+1} the target p_{1,n} gives 1 while p_1(x) q_n(y) = 0.
Examp3Report repro_examp3(std::size_t n, double r = 1.0);

/// The model, targets and candidate of repro_examp3, for use with check/search.
struct Examp3Setup {
  BilinearModel model;
  Grid<SeminormExpr> targets;
  ProductEstimateWitness candidate;
};
Examp3Setup examp3_setup(std::size_t n, double r = 1.0);

struct BlowupReport {
  unsigned k = 0;
  std::vector<double> t;
  std::vector<std::size_t> intervals;
  /// ||g_t||_{C^k} and ||g_t||_{C^{k+1}}.
  std::vector<double> ck, ck_next;
  /// ck_next / ck.
  std::vector<double> ratios;
  /// ratios[m+1] / ratios[m].
  std::vector<double> quotients;
  /// Largest relative change of either norm under grid refinement.
  double self_check = 0.0;
  bool blowup = false;
  std::string note;
};

/// Grid points per unit of t for bump functions, before refinement.
inline constexpr std::size_t kBumpPointsPerT = 512;
/// How often the bump grid may be halved before GridTooCoarse.
inline constexpr unsigned kMaxRefinements = 4;

/// For each t, ratio ||g_t||_{C^{k+1}} / ||g_t||_{C^k} on a grid of spacing
/// h = t/512. While halving h changes either norm by 2% or more, h is halved
/// (at most kMaxRefinements times); `intervals` records the accepted grid.
/// Blowup is certified when t halves at each step and every quotient lies
/// in [1.8, 2.2]. Throws GridTooCoarse, NonPositiveT, InvalidArgument.
BlowupReport repro_examp4(unsigned k, const std::vector<double>& t_grid);

}  // namespace lcx
