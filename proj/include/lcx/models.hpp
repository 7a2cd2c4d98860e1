#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lcx/seminorm.hpp"

namespace lcx {

/// Truncation of a sequence in R^N or R^(N); coordinate i (0-based) carries
/// label i + 1 unless an EvalContext says otherwise.
using SeqVector = Eigen::VectorXd;

/// Samples on a uniform grid over [0, 1] (endpoints included) or over the
/// circle R/Z (n samples, x_i = i/n).
struct GridFunction {
  Eigen::VectorXd samples;
  double spacing = 1.0;
  bool periodic = false;

  static GridFunction interval(Eigen::VectorXd samples);
  static GridFunction circle(Eigen::VectorXd samples);
  /// Samples f(x_i) on the grid with the given number of intervals (the
  /// number of samples on the circle).
  static GridFunction sample(const std::function<double(double)>& f, std::size_t intervals, bool periodic);
  Eigen::Index size() const { return samples.size(); }
  double x(Eigen::Index i) const { return static_cast<double>(i) * spacing; }
};

/// max{|x_1|, ..., |x_n|}. Throws IndexBeyondTruncation.
double prefix_norm(const SeqVector& x, std::uint64_t n);

/// max over the support of v of v(m)|x_m|; labels outside 1..N read as 0.
double weighted_sup_norm(const SeqVector& x, const WeightMap& v);

/// j-th derivative by finite differences of order 2. On the interval,
/// central stencils of half-width ceil(j/2) and one-sided windows of j + 2
/// points near the ends (Fornberg weights); on the circle, j-fold application
/// of the central first difference. Throws StencilTooWide.
Eigen::VectorXd derivative(const GridFunction& f, unsigned j);

/// max_{j <= k} ||f^(j)||_inf. Throws StencilTooWide when 2k + 1 exceeds
/// the number of samples.
double ck_norm(const GridFunction& f, unsigned k);

/// Weights of the stencil approximating the m-th derivative at z from the
/// nodes x (Fornberg's recursion).
Eigen::VectorXd fornberg_weights(double z, const Eigen::VectorXd& x, unsigned m);

/// Entrywise product. Throws ShapeMismatch.
SeqVector pointwise_mul(const SeqVector& x, const SeqVector& y);
GridFunction pointwise_mul(const GridFunction& x, const GridFunction& y);

class GroupModel {
 public:
  enum class Kind { CyclicZ, TruncatedZ, CircleGrid };

  /// Z/mZ with counting measure.
  static GroupModel cyclic(std::size_t m);
  /// Functions on Z supported in {-R, ..., R}; index i is the point i - R.
  static GroupModel truncated(std::size_t radius);
  /// R/Z sampled at n points, Haar measure normalized to 1 (weight 1/n).
  static GroupModel circle(std::size_t n);

  Kind kind() const { return kind_; }
  std::size_t parameter() const { return param_; }
  /// Number of stored values per function.
  std::size_t length() const;
  /// Quadrature weight of one point.
  double weight() const;
  bool discrete() const { return kind_ != Kind::CircleGrid; }
  std::string describe() const;

 private:
  GroupModel(Kind kind, std::size_t param) : kind_(kind), param_(param) {}
  Kind kind_;
  std::size_t param_;
};

/// (gamma * eta)(x) = sum_y gamma(y) eta(x - y) weight(y). Throws
/// ShapeMismatch, and OverflowOutsideWindow on TruncatedZ when mass leaves
/// the window.
Eigen::VectorXd convolve(const GroupModel& g, const Eigen::VectorXd& gamma, const Eigen::VectorXd& eta);

/// Haar measure of the support of f in the model.
double support_measure(const GroupModel& g, const Eigen::VectorXd& f);

/// ||f||^{R,L}_{k,l}. The models are abelian, so this is
/// max_{i <= k, j <= l} ||D^{i+j} f||_inf with D the central difference on
/// CircleGrid; the discrete models carry no vector fields and give the sup
/// norm.
double rl_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned k, unsigned l);
double r_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned k);
double l_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned l);

/// g(x) = exp(-1/(1 - 16x^2)) on |x| < 1/4, 0 elsewhere.
double base_bump(double x);

/// g_t(x) = t^k g((x - 1/2)/t) sampled on [0, 1] with the given number of
/// intervals. Throws NonPositiveT.
GridFunction bump(double t, unsigned k, std::size_t intervals);

/// How a model vector is read by the seminorm evaluator.
struct EvalContext {
  /// Label of each coordinate; empty means 1..N.
  std::vector<std::int64_t> labels;
  /// Evaluators for SeminormExpr::base ids.
  std::map<std::string, std::function<double(const Eigen::VectorXd&)>> bases;
  /// For direct sums: consecutive block lengths and, optionally, one
  /// context per block.
  std::vector<std::size_t> block_sizes;
  std::vector<EvalContext> block_contexts;
  /// Set for grid functions (CkNorm).
  bool grid = false;
  bool periodic = false;
};

/// Numeric value of a seminorm expression on a model vector. Throws
/// UnevaluableSeminorm when the context cannot interpret a node.
double evaluate(const SeminormExpr& e, const Eigen::VectorXd& x, const EvalContext& ctx = {});

struct BilinearModel {
  std::string name;
  std::size_t n1 = 0, n2 = 0, nout = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> eval;
  EvalContext ctx1, ctx2, ctx_out;
};

/// Pointwise multiplication on sequences of length n (labels 1..n).
BilinearModel pointwise_model(std::size_t n);
/// Pointwise multiplication on R^(C) for a finite set C of labels.
BilinearModel pointwise_model(std::vector<std::int64_t> labels);
/// Pointwise multiplication of grid functions on [0, 1].
BilinearModel pointwise_grid_model(std::size_t intervals);
/// Convolution with b = scalar multiplication.
BilinearModel convolution_model(const GroupModel& g);
/// The zero map on R^n x R^n -> R^n.
BilinearModel zero_model(std::size_t n);

/// Largest relative additivity/homogeneity defect over random triples.
double bilinearity_defect(const BilinearModel& m, std::uint64_t seed, int trials);

}  // namespace lcx
