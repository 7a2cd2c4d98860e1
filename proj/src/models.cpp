#include "lcx/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lcx/error.hpp"

namespace lcx {

GridFunction GridFunction::interval(Eigen::VectorXd samples) {
  if (samples.size() < 2) throw Error(ErrorCode::InvalidArgument, "an interval grid needs at least 2 samples");
  const double h = 1.0 / static_cast<double>(samples.size() - 1);
  return GridFunction{std::move(samples), h, false};
}

GridFunction GridFunction::circle(Eigen::VectorXd samples) {
  if (samples.size() < 1) throw Error(ErrorCode::InvalidArgument, "a circle grid needs at least 1 sample");
  const double h = 1.0 / static_cast<double>(samples.size());
  return GridFunction{std::move(samples), h, true};
}

GridFunction GridFunction::sample(const std::function<double(double)>& f, std::size_t intervals, bool periodic) {
  if (intervals == 0) throw Error(ErrorCode::InvalidArgument, "grid needs at least one interval");
  const auto n = static_cast<Eigen::Index>(periodic ? intervals : intervals + 1);
  const double h = 1.0 / static_cast<double>(intervals);
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = f(static_cast<double>(i) * h);
  return GridFunction{std::move(s), h, periodic};
}

double prefix_norm(const SeqVector& x, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(x.size())) {
    throw Error(ErrorCode::IndexBeyondTruncation,
                "n = " + std::to_string(n) + " exceeds truncation " + std::to_string(x.size()));
  }
  if (n == 0) return 0.0;
  return x.head(static_cast<Eigen::Index>(n)).cwiseAbs().maxCoeff();
}

double weighted_sup_norm(const SeqVector& x, const WeightMap& v) {
  double out = 0.0;
  for (const auto& [label, w] : v) {
    if (label < 1 || label > x.size()) continue;
    out = std::max(out, w * std::abs(x(static_cast<Eigen::Index>(label - 1))));
  }
  return out;
}

Eigen::VectorXd fornberg_weights(double z, const Eigen::VectorXd& x, unsigned m) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, m + 1);
  double c1 = 1.0;
  double c4 = x(0) - z;
  c(0, 0) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const Eigen::Index mn = std::min<Eigen::Index>(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x(i) - z;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double c3 = x(i) - x(j);
      c2 *= c3;
      if (j == i - 1) {
        for (Eigen::Index k = mn; k >= 1; --k) {
          c(i, k) = c1 * (static_cast<double>(k) * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        }
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (Eigen::Index k = mn; k >= 1; --k) {
        c(j, k) = (c4 * c(j, k) - static_cast<double>(k) * c(j, k - 1)) / c3;
      }
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.col(m);
}

namespace {

Eigen::VectorXd central_difference(const Eigen::VectorXd& f, double h) {
  const Eigen::Index n = f.size();
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = (f((i + 1) % n) - f((i + n - 1) % n)) / (2.0 * h);
  }
  return out;
}

Eigen::VectorXd unit_nodes(Eigen::Index count, Eigen::Index offset) {
  return Eigen::VectorXd::LinSpaced(count, static_cast<double>(offset), static_cast<double>(offset + count - 1));
}

}  // namespace

Eigen::VectorXd derivative(const GridFunction& f, unsigned j) {
  if (j == 0) return f.samples;
  const Eigen::Index n = f.size();
  if (f.periodic) {
    if (n < 3) throw Error(ErrorCode::StencilTooWide, "periodic differences need at least 3 samples");
    Eigen::VectorXd out = f.samples;
    for (unsigned r = 0; r < j; ++r) out = central_difference(out, f.spacing);
    return out;
  }

  const Eigen::Index half = (static_cast<Eigen::Index>(j) + 1) / 2;
  const Eigen::Index side = static_cast<Eigen::Index>(j) + 2;
  if (2 * half + 1 > n || side > n) {
    throw Error(ErrorCode::StencilTooWide,
                "derivative of order " + std::to_string(j) + " needs " + std::to_string(std::max(2 * half + 1, side)) +
                    " samples, have " + std::to_string(n));
  }
  const double scale = std::pow(f.spacing, -static_cast<double>(j));
  const Eigen::VectorXd centre = fornberg_weights(0.0, unit_nodes(2 * half + 1, -half), j) * scale;

  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i >= half && i + half < n) {
      out(i) = centre.dot(f.samples.segment(i - half, 2 * half + 1));
      continue;
    }
    const Eigen::Index start = i < half ? 0 : n - side;
    const Eigen::VectorXd w = fornberg_weights(static_cast<double>(i - start), unit_nodes(side, 0), j) * scale;
    out(i) = w.dot(f.samples.segment(start, side));
  }
  return out;
}

double ck_norm(const GridFunction& f, unsigned k) {
  if (2 * static_cast<Eigen::Index>(k) + 1 > f.size()) {
    throw Error(ErrorCode::StencilTooWide,
                "C^" + std::to_string(k) + " norm needs " + std::to_string(2 * k + 1) + " samples, have " +
                    std::to_string(f.size()));
  }
  double out = 0.0;
  if (f.periodic) {
    Eigen::VectorXd d = f.samples;
    for (unsigned j = 0; j <= k; ++j) {
      if (j > 0) d = central_difference(d, f.spacing);
      out = std::max(out, d.cwiseAbs().maxCoeff());
    }
    return out;
  }
  for (unsigned j = 0; j <= k; ++j) out = std::max(out, derivative(f, j).cwiseAbs().maxCoeff());
  return out;
}

SeqVector pointwise_mul(const SeqVector& x, const SeqVector& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::ShapeMismatch, "truncations differ");
  return x.cwiseProduct(y);
}

GridFunction pointwise_mul(const GridFunction& x, const GridFunction& y) {
  if (x.size() != y.size() || x.periodic != y.periodic || x.spacing != y.spacing) {
    throw Error(ErrorCode::ShapeMismatch, "grids differ");
  }
  return GridFunction{x.samples.cwiseProduct(y.samples), x.spacing, x.periodic};
}

GroupModel GroupModel::cyclic(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "Z/mZ needs m >= 1");
  return GroupModel(Kind::CyclicZ, m);
}

GroupModel GroupModel::truncated(std::size_t radius) { return GroupModel(Kind::TruncatedZ, radius); }

GroupModel GroupModel::circle(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "circle grid needs n >= 1");
  return GroupModel(Kind::CircleGrid, n);
}

std::size_t GroupModel::length() const { return kind_ == Kind::TruncatedZ ? 2 * param_ + 1 : param_; }

double GroupModel::weight() const { return kind_ == Kind::CircleGrid ? 1.0 / static_cast<double>(param_) : 1.0; }

std::string GroupModel::describe() const {
  switch (kind_) {
    case Kind::CyclicZ: return "Z/" + std::to_string(param_) + "Z";
    case Kind::TruncatedZ: return "Z[-" + std::to_string(param_) + "," + std::to_string(param_) + "]";
    case Kind::CircleGrid: return "R/Z on " + std::to_string(param_) + " points";
  }
  return {};
}

Eigen::VectorXd convolve(const GroupModel& g, const Eigen::VectorXd& gamma, const Eigen::VectorXd& eta) {
  const auto n = static_cast<Eigen::Index>(g.length());
  if (gamma.size() != n || eta.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, g.describe() + " functions have " + std::to_string(n) + " values");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  if (g.kind() == GroupModel::Kind::TruncatedZ) {
    const auto r = static_cast<Eigen::Index>(g.parameter());
    for (Eigen::Index a = 0; a < n; ++a) {
      if (gamma(a) == 0.0) continue;
      for (Eigen::Index b = 0; b < n; ++b) {
        if (eta(b) == 0.0) continue;
        const Eigen::Index point = (a - r) + (b - r);
        if (point < -r || point > r) {
          throw Error(ErrorCode::OverflowOutsideWindow,
                      "mass at " + std::to_string(point) + " leaves the window of radius " + std::to_string(r));
        }
        out(point + r) += gamma(a) * eta(b);
      }
    }
    return out;
  }
  const double w = g.weight();
  for (Eigen::Index x = 0; x < n; ++x) {
    double acc = 0.0;
    for (Eigen::Index y = 0; y < n; ++y) acc += gamma(y) * eta((x - y + n) % n);
    out(x) = acc * w;
  }
  return out;
}

double support_measure(const GroupModel& g, const Eigen::VectorXd& f) {
  return static_cast<double>((f.array() != 0.0).count()) * g.weight();
}

double rl_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned k, unsigned l) {
  if (f.size() != static_cast<Eigen::Index>(g.length())) {
    throw Error(ErrorCode::ShapeMismatch, "function does not live on " + g.describe());
  }
  if (f.size() == 0) return 0.0;
  if (g.discrete()) return f.cwiseAbs().maxCoeff();
  const double h = g.weight();
  double out = 0.0;
  Eigen::VectorXd d = f;
  for (unsigned j = 0; j <= k + l; ++j) {
    if (j > 0) d = central_difference(d, h);
    out = std::max(out, d.cwiseAbs().maxCoeff());
  }
  return out;
}

double r_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned k) { return rl_norm(g, f, k, 0); }

double l_norm(const GroupModel& g, const Eigen::VectorXd& f, unsigned l) { return rl_norm(g, f, 0, l); }

double base_bump(double x) {
  const double u = 1.0 - 16.0 * x * x;
  return u > 0.0 ? std::exp(-1.0 / u) : 0.0;
}

GridFunction bump(double t, unsigned k, std::size_t intervals) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveT, "t must be > 0");
  const double amp = std::pow(t, static_cast<double>(k));
  return GridFunction::sample([&](double x) { return amp * base_bump((x - 0.5) / t); }, intervals, false);
}

namespace {

[[noreturn]] void unevaluable(const SeminormExpr& e, const std::string& why) {
  throw Error(ErrorCode::UnevaluableSeminorm, e.describe() + ": " + why);
}

std::int64_t label_of(const EvalContext& ctx, Eigen::Index i) {
  return ctx.labels.empty() ? static_cast<std::int64_t>(i + 1) : ctx.labels[static_cast<std::size_t>(i)];
}

}  // namespace

double evaluate(const SeminormExpr& e, const Eigen::VectorXd& x, const EvalContext& ctx) {
  using K = SeminormExpr::Kind;
  if (!ctx.labels.empty() && static_cast<Eigen::Index>(ctx.labels.size()) != x.size()) {
    throw Error(ErrorCode::ShapeMismatch, "label count differs from vector length");
  }
  switch (e.kind()) {
    case K::Base: {
      auto it = ctx.bases.find(e.id());
      if (it == ctx.bases.end()) unevaluable(e, "no evaluator bound");
      return it->second(x);
    }
    case K::Scale: return e.factor() * evaluate(e.terms().front(), x, ctx);
    case K::MaxOf: {
      double out = 0.0;
      for (const auto& t : e.terms()) out = std::max(out, evaluate(t, x, ctx));
      return out;
    }
    case K::SumOf: {
      double out = 0.0;
      for (std::size_t k = 0; k < e.terms().size(); ++k) out += e.term_weights()[k] * evaluate(e.terms()[k], x, ctx);
      return out;
    }
    case K::PrefixSup: {
      if (ctx.grid) unevaluable(e, "sequence seminorm on a grid function");
      if (ctx.labels.empty()) return prefix_norm(x, e.order());
      double out = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const auto label = label_of(ctx, i);
        if (label >= 1 && static_cast<std::uint64_t>(label) <= e.order()) out = std::max(out, std::abs(x(i)));
      }
      return out;
    }
    case K::CkNorm: {
      if (!ctx.grid) unevaluable(e, "C^k norm needs a grid context");
      return ck_norm(ctx.periodic ? GridFunction::circle(x) : GridFunction::interval(x),
                     static_cast<unsigned>(e.order()));
    }
    case K::WeightedSup: {
      if (ctx.grid) unevaluable(e, "sequence seminorm on a grid function");
      if (ctx.labels.empty()) return weighted_sup_norm(x, e.weights());
      double out = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        auto it = e.weights().find(label_of(ctx, i));
        if (it != e.weights().end()) out = std::max(out, it->second * std::abs(x(i)));
      }
      return out;
    }
    case K::BlockSum:
    case K::BlockMax: {
      const auto terms = e.terms();
      if (ctx.block_sizes.size() != terms.size()) unevaluable(e, "block layout does not match the expression");
      if (!ctx.block_contexts.empty() && ctx.block_contexts.size() != terms.size()) {
        unevaluable(e, "one context per block is required");
      }
      Eigen::Index offset = 0;
      double out = 0.0;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto len = static_cast<Eigen::Index>(ctx.block_sizes[i]);
        if (offset + len > x.size()) unevaluable(e, "vector shorter than the block layout");
        const EvalContext& sub = ctx.block_contexts.empty() ? EvalContext{} : ctx.block_contexts[i];
        const double v = evaluate(terms[i], x.segment(offset, len), sub);
        out = e.kind() == K::BlockSum ? out + e.term_weights()[i] * v : std::max(out, v);
        offset += len;
      }
      if (offset != x.size()) unevaluable(e, "vector longer than the block layout");
      return out;
    }
  }
  unevaluable(e, "unknown node");
}

BilinearModel pointwise_model(std::size_t n) {
  BilinearModel m;
  m.name = "pointwise multiplication on R^" + std::to_string(n);
  m.n1 = m.n2 = m.nout = n;
  m.eval = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) -> Eigen::VectorXd { return pointwise_mul(x, y); };
  return m;
}

BilinearModel pointwise_model(std::vector<std::int64_t> labels) {
  auto m = pointwise_model(labels.size());
  m.name = "pointwise multiplication on R^(C), |C| = " + std::to_string(labels.size());
  m.ctx1.labels = m.ctx2.labels = m.ctx_out.labels = std::move(labels);
  return m;
}

BilinearModel pointwise_grid_model(std::size_t intervals) {
  BilinearModel m;
  m.name = "pointwise multiplication on C[0,1] with " + std::to_string(intervals) + " intervals";
  m.n1 = m.n2 = m.nout = intervals + 1;
  m.eval = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) -> Eigen::VectorXd { return pointwise_mul(x, y); };
  m.ctx1.grid = m.ctx2.grid = m.ctx_out.grid = true;
  return m;
}

BilinearModel convolution_model(const GroupModel& g) {
  BilinearModel m;
  m.name = "convolution on " + g.describe();
  m.n1 = m.n2 = m.nout = g.length();
  m.eval = [g](const Eigen::VectorXd& x, const Eigen::VectorXd& y) { return convolve(g, x, y); };
  if (!g.discrete()) {
    m.ctx1.grid = m.ctx2.grid = m.ctx_out.grid = true;
    m.ctx1.periodic = m.ctx2.periodic = m.ctx_out.periodic = true;
  }
  return m;
}

BilinearModel zero_model(std::size_t n) {
  BilinearModel m;
  m.name = "zero map on R^" + std::to_string(n);
  m.n1 = m.n2 = m.nout = n;
  m.eval = [n](const Eigen::VectorXd&, const Eigen::VectorXd&) -> Eigen::VectorXd {
    return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  };
  return m;
}

double bilinearity_defect(const BilinearModel& m, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto draw = [&](std::size_t n) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
    return v;
  };
  const auto rel = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b, double scale) {
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, scale);
  };
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto x = draw(m.n1), x2 = draw(m.n1), y = draw(m.n2), y2 = draw(m.n2);
    const double c = 4.0 * u(rng);
    const auto bxy = m.eval(x, y), bx2y = m.eval(x2, y), bxy2 = m.eval(x, y2);
    const double s = bxy.size() ? bxy.cwiseAbs().maxCoeff() + bx2y.cwiseAbs().maxCoeff() +
                                      bxy2.cwiseAbs().maxCoeff()
                                : 0.0;
    worst = std::max(worst, rel(m.eval(x + x2, y), bxy + bx2y, s));
    worst = std::max(worst, rel(m.eval(x, y + y2), bxy + bxy2, s));
    worst = std::max(worst, rel(m.eval(c * x, y), c * bxy, std::abs(c) * s));
    worst = std::max(worst, rel(m.eval(x, c * y), c * bxy, std::abs(c) * s));
  }
  return worst;
}

}  // namespace lcx
