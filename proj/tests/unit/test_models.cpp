#include <doctest.h>

#include <cmath>

#include "../support/gen.hpp"
#include "lcx/error.hpp"
#include "lcx/models.hpp"

using namespace lcx;

namespace {

constexpr double kTau = 2.0 * M_PI;

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Direct double loop over the group Z/m.
Eigen::VectorXd cyclic_oracle(const Eigen::VectorXd& g, const Eigen::VectorXd& h) {
  const auto m = g.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  for (Eigen::Index x = 0; x < m; ++x)
    for (Eigen::Index y = 0; y < m; ++y) out(x) += g(y) * h(((x - y) % m + m) % m);
  return out;
}

// Closed form of the base bump's derivatives: g^(j) = g P_j / u^(2j) with
// u = 1 - 16 x^2 and P_{j+1} = P_j' u^2 + 64 j x P_j u - 32 x P_j.
class BumpOracle {
 public:
  explicit BumpOracle(unsigned order) {
    using Poly = std::vector<double>;
    const auto mul = [](const Poly& a, const Poly& b) {
      Poly c(a.size() + b.size() - 1, 0.0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
      return c;
    };
    const auto add = [](Poly a, const Poly& b) {
      if (a.size() < b.size()) a.resize(b.size(), 0.0);
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
      return a;
    };
    const auto deriv = [](const Poly& a) {
      Poly d(a.size() > 1 ? a.size() - 1 : 1, 0.0);
      for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = static_cast<double>(i) * a[i];
      return d;
    };
    const Poly u = {1.0, 0.0, -16.0};
    polys_.push_back({1.0});
    for (unsigned j = 0; j < order; ++j) {
      const Poly& p = polys_.back();
      const double jj = static_cast<double>(j);
      Poly next = mul(deriv(p), mul(u, u));
      next = add(next, mul(mul({0.0, 64.0 * jj}, p), u));
      next = add(next, mul({0.0, -32.0}, p));
      polys_.push_back(next);
    }
  }

  double operator()(double x, unsigned j) const {
    const double u = 1.0 - 16.0 * x * x;
    if (u <= 0.0) return 0.0;
    double p = 0.0;
    for (std::size_t i = polys_[j].size(); i-- > 0;) p = p * x + polys_[j][i];
    return std::exp(-1.0 / u) * p / std::pow(u, 2.0 * j);
  }

  /// sup |g^(j)| over a fine grid of (-1/4, 1/4).
  double sup(unsigned j) const {
    double out = 0.0;
    for (int i = -200000; i <= 200000; ++i) out = std::max(out, std::abs((*this)(0.25 * i / 200000.0, j)));
    return out;
  }

 private:
  std::vector<std::vector<double>> polys_;
};

double max_error_interval(const std::function<double(double)>& f, const std::function<double(double)>& df,
                          unsigned j, std::size_t intervals) {
  const auto g = GridFunction::sample(f, intervals, false);
  const auto d = derivative(g, j);
  double err = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) err = std::max(err, std::abs(d(i) - df(g.x(i))));
  return err;
}

}  // namespace

TEST_CASE("prefix_norm") {
  const Eigen::VectorXd e3 = gen::basis(5, 2);
  CHECK(prefix_norm(e3, 2) == 0.0);
  CHECK(prefix_norm(e3, 3) == 1.0);
  for (std::uint64_t n = 1; n <= 5; ++n) CHECK(prefix_norm(Eigen::VectorXd::Zero(5), n) == 0.0);
  expect_error(ErrorCode::IndexBeyondTruncation, [&] { prefix_norm(e3, 6); });

  gen::Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto x = rng.dense(9);
    for (std::uint64_t n = 1; n < 9; ++n) CHECK(prefix_norm(x, n) <= prefix_norm(x, n + 1));
  }
}

TEST_CASE("weighted_sup_norm") {
  CHECK(weighted_sup_norm(gen::basis(3, 1), {{2, 1.0}}) == 1.0);
  CHECK(weighted_sup_norm(Eigen::Vector3d(1, 5, 2), {{1, 3.0}, {2, 0.0}, {3, 1.0}}) == 3.0);
  CHECK(weighted_sup_norm(Eigen::Vector3d(1, 5, 2), {}) == 0.0);
  CHECK(weighted_sup_norm(Eigen::Vector3d(1, 5, 2), {{9, 4.0}}) == 0.0);
}

TEST_CASE("pointwise_mul") {
  const Eigen::VectorXd x = Eigen::Vector4d(1, -2, 3, 4);
  CHECK(pointwise_mul(x, Eigen::VectorXd::Zero(4)) == Eigen::VectorXd::Zero(4));
  CHECK(pointwise_mul(gen::basis(4, 1), gen::basis(4, 2)) == Eigen::VectorXd::Zero(4));
  CHECK(pointwise_mul(gen::basis(4, 2), gen::basis(4, 2)) == gen::basis(4, 2));
  expect_error(ErrorCode::ShapeMismatch, [&] { pointwise_mul(x, Eigen::VectorXd::Zero(3)); });

  gen::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = rng.dense(6, 4.0), b = rng.dense(6, 4.0);
    for (std::uint64_t n = 1; n <= 6; ++n)
      CHECK(prefix_norm(pointwise_mul(a, b), n) <= prefix_norm(a, n) * prefix_norm(b, n) * (1 + 1e-15));
  }
}

TEST_CASE("pointwise products on grids obey the Leibniz bound") {
  const auto f = GridFunction::sample([](double x) { return std::sin(3 * x) + x * x; }, 2000, false);
  const auto g = GridFunction::sample([](double x) { return std::cos(5 * x) - x; }, 2000, false);
  const auto fg = pointwise_mul(f, g);
  for (unsigned k = 0; k <= 3; ++k) CHECK(ck_norm(fg, k) <= std::pow(2.0, k) * ck_norm(f, k) * ck_norm(g, k) * 1.001);
}

TEST_CASE("ck_norm examples") {
  const auto one = GridFunction::sample([](double) { return 1.0; }, 64, false);
  for (unsigned k = 0; k <= 4; ++k) CHECK(ck_norm(one, k) == doctest::Approx(1.0).epsilon(1e-9));

  const auto id = GridFunction::sample([](double x) { return x; }, 64, false);
  CHECK(ck_norm(id, 1) == doctest::Approx(1.0).epsilon(1e-12));

  const auto s = GridFunction::sample([](double x) { return std::sin(kTau * x); }, 1024, true);
  CHECK(ck_norm(s, 1) == doctest::Approx(kTau).epsilon(1e-3));

  for (unsigned k = 0; k < 4; ++k) CHECK(ck_norm(s, k) <= ck_norm(s, k + 1));

  const auto tiny = GridFunction::interval(Eigen::Vector3d(0, 1, 0));
  CHECK_NOTHROW(ck_norm(tiny, 1));
  expect_error(ErrorCode::StencilTooWide, [&] { ck_norm(tiny, 2); });
}

TEST_CASE("finite differences converge at order 2") {
  const auto f = [](double x) { return std::sin(2 * x) + x * x * x; };
  const std::vector<std::function<double(double)>> d = {
      f, [](double x) { return 2 * std::cos(2 * x) + 3 * x * x; },
      [](double x) { return -4 * std::sin(2 * x) + 6 * x; }, [](double x) { return -8 * std::cos(2 * x) + 6; },
      [](double x) { return 16 * std::sin(2 * x); }};
  for (unsigned j = 1; j <= 4; ++j) {
    const double coarse = max_error_interval(f, d[j], j, 100);
    const double fine = max_error_interval(f, d[j], j, 200);
    const double rate = std::log2(coarse / fine);
    CHECK_MESSAGE(rate > 1.8, "j=" << j << " rate " << rate);
    CHECK_MESSAGE(rate < 2.3, "j=" << j << " rate " << rate);
  }
}

TEST_CASE("periodic differences converge at order 2") {
  for (unsigned j = 1; j <= 3; ++j) {
    double err[2];
    for (int level = 0; level < 2; ++level) {
      const std::size_t n = 128u << level;
      const auto g = GridFunction::sample([](double x) { return std::sin(kTau * x); }, n, true);
      const auto dj = derivative(g, j);
      err[level] = 0.0;
      for (Eigen::Index i = 0; i < dj.size(); ++i) {
        const double exact = std::pow(kTau, j) * std::sin(kTau * g.x(i) + j * M_PI / 2);
        err[level] = std::max(err[level], std::abs(dj(i) - exact));
      }
    }
    CHECK(std::log2(err[0] / err[1]) == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("fornberg weights reproduce textbook stencils") {
  const auto w = fornberg_weights(0.0, Eigen::Vector3d(-1, 0, 1), 2);
  CHECK(w(0) == doctest::Approx(1.0));
  CHECK(w(1) == doctest::Approx(-2.0));
  CHECK(w(2) == doctest::Approx(1.0));
  const auto v = fornberg_weights(0.0, Eigen::Vector3d(0, 1, 2), 1);
  CHECK(v(0) == doctest::Approx(-1.5));
  CHECK(v(1) == doctest::Approx(2.0));
  CHECK(v(2) == doctest::Approx(-0.5));
}

TEST_CASE("convolution") {
  SUBCASE("delta is the identity") {
    const auto g = GroupModel::cyclic(5);
    const Eigen::VectorXd h = (Eigen::VectorXd(5) << 1, 2, 3, 4, 5).finished();
    CHECK(convolve(g, gen::basis(5, 0), h) == h);
  }

  SUBCASE("cyclic example against a direct loop") {
    const Eigen::Vector3d a(1, 2, 0), b(1, 0, 1);
    const auto c = convolve(GroupModel::cyclic(3), a, b);
    CHECK(c == cyclic_oracle(a, b));
    CHECK(c == Eigen::Vector3d(3, 2, 1));
  }

  SUBCASE("commutative and matching the oracle") {
    gen::Rng rng(8);
    for (int k = 0; k < 100; ++k) {
      const auto m = static_cast<std::size_t>(rng.integer(1, 40));
      const auto g = GroupModel::cyclic(m);
      const auto a = rng.dense(static_cast<Eigen::Index>(m)), b = rng.dense(static_cast<Eigen::Index>(m));
      const auto ab = convolve(g, a, b), ba = convolve(g, b, a);
      CHECK((ab - ba).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((ab - cyclic_oracle(a, b)).cwiseAbs().maxCoeff() <= 1e-12);
    }
    const auto circle = GroupModel::circle(256);
    const auto a = gen::TrigPoly::random(rng, 5).sample(256), b = gen::TrigPoly::random(rng, 7).sample(256);
    CHECK((convolve(circle, a, b) - convolve(circle, b, a)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("truncated window") {
    const auto g = GroupModel::truncated(3);
    CHECK(g.length() == 7);
    Eigen::VectorXd a = Eigen::VectorXd::Zero(7), b = Eigen::VectorXd::Zero(7);
    a(4) = 2.0;  // the point 1
    b(5) = 3.0;  // the point 2
    const auto c = convolve(g, a, b);
    CHECK(c(6) == 6.0);  // the point 3
    CHECK(c.sum() == 6.0);
    b(6) = 1.0;  // the point 3 would land on 4
    expect_error(ErrorCode::OverflowOutsideWindow, [&] { convolve(g, a, b); });
  }

  SUBCASE("circle quadrature") {
    // 1 * 1 = lambda(G) = 1 with the normalized measure.
    const auto g = GroupModel::circle(64);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(64);
    CHECK((convolve(g, one, one).array() - 1.0).abs().maxCoeff() < 1e-12);
    CHECK(support_measure(g, one) == doctest::Approx(1.0));
  }

  expect_error(ErrorCode::ShapeMismatch, [] { convolve(GroupModel::cyclic(3), Eigen::Vector2d(1, 1), Eigen::Vector3d(1, 1, 1)); });
}

TEST_CASE("Young-type bound on cyclic groups") {
  gen::Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 64));
    const auto g = GroupModel::cyclic(m);
    const auto a = rng.sparse(static_cast<Eigen::Index>(m), static_cast<std::size_t>(rng.integer(1, 6)), 3.0);
    const auto b = rng.dense(static_cast<Eigen::Index>(m), 3.0);
    const double lhs = convolve(g, a, b).cwiseAbs().maxCoeff();
    const double rhs = a.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff() * support_measure(g, a);
    CHECK(lhs <= rhs * (1 + 1e-12));
  }
}

TEST_CASE("rl norms") {
  const auto circle = GroupModel::circle(2048);
  const auto s = GridFunction::sample([](double x) { return std::sin(kTau * x); }, 2048, true).samples;
  CHECK(rl_norm(circle, s, 0, 0) == doctest::Approx(s.cwiseAbs().maxCoeff()));
  CHECK(rl_norm(circle, s, 1, 1) == doctest::Approx(kTau * kTau).epsilon(1e-2));
  CHECK(rl_norm(circle, Eigen::VectorXd::Ones(2048), 2, 1) == doctest::Approx(1.0));
  CHECK(r_norm(circle, s, 1) == rl_norm(circle, s, 1, 0));
  CHECK(l_norm(circle, s, 2) == rl_norm(circle, s, 0, 2));

  const auto cyc = GroupModel::cyclic(4);
  CHECK(rl_norm(cyc, Eigen::Vector4d(1, -3, 2, 0), 3, 2) == 3.0);
}

TEST_CASE("derivative of a convolution on the circle") {
  gen::Rng rng(21);
  const std::size_t n = 1024;
  const auto g = GroupModel::circle(n);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = gen::TrigPoly::random(rng, 8).sample(n), b = gen::TrigPoly::random(rng, 8).sample(n);
    const auto d = [](const Eigen::VectorXd& v) { return derivative(GridFunction::circle(v), 1); };
    const auto lhs = d(convolve(g, a, b));
    const auto r1 = convolve(g, d(a), b), r2 = convolve(g, a, d(b));
    const double scale = lhs.cwiseAbs().maxCoeff();
    CHECK((lhs - r1).cwiseAbs().maxCoeff() <= 1e-4 * scale);
    CHECK((lhs - r2).cwiseAbs().maxCoeff() <= 1e-4 * scale);
  }
}

TEST_CASE("bump functions") {
  CHECK(base_bump(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(base_bump(0.25) == 0.0);
  CHECK(base_bump(-0.3) == 0.0);

  const auto g1 = bump(1.0, 0, 1024);
  CHECK(g1.samples(512) == doctest::Approx(std::exp(-1.0)));

  for (double t : {1.0, 0.5, 0.125, 1.0 / 64}) {
    const auto g = bump(t, 2, 4096);
    CHECK(g.samples(0) == 0.0);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      if (g.samples(i) != 0.0) {
        CHECK(g.x(i) > 0.5 - t / 4 - 1e-12);
        CHECK(g.x(i) < 0.5 + t / 4 + 1e-12);
      }
    }
  }
  expect_error(ErrorCode::NonPositiveT, [] { bump(0.0, 1, 16); });
  expect_error(ErrorCode::NonPositiveT, [] { bump(-1.0, 1, 16); });
}

TEST_CASE("bump derivatives converge to the closed form") {
  const BumpOracle oracle(3);
  const double t = 0.25;
  const unsigned k = 1;
  for (unsigned j = 0; j <= 3; ++j) {
    double err[2], scale = 0.0;
    for (int level = 0; level < 2; ++level) {
      const auto g = bump(t, k, std::size_t{4096} << level);
      const auto d = derivative(g, j);
      err[level] = 0.0;
      for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double exact = std::pow(t, static_cast<double>(k) - j) * oracle((g.x(i) - 0.5) / t, j);
        err[level] = std::max(err[level], std::abs(d(i) - exact));
        scale = std::max(scale, std::abs(exact));
      }
    }
    CHECK_MESSAGE(err[1] <= 5e-3 * scale, "j=" << j << " err=" << err[1] << " scale=" << scale);
    if (j > 0) CHECK_MESSAGE(std::log2(err[0] / err[1]) > 1.8, "j=" << j);
  }
}

TEST_CASE("evaluate") {
  const Space seq = Space::finsupp();
  const Eigen::VectorXd x = Eigen::Vector3d(1, -5, 2);
  CHECK(evaluate(SeminormExpr::prefix_sup(seq, 2), x) == 5.0);
  CHECK(evaluate(SeminormExpr::scale(2, SeminormExpr::prefix_sup(seq, 1)), x) == 2.0);
  CHECK(evaluate(SeminormExpr::sum_of({{1.0, SeminormExpr::prefix_sup(seq, 1)}, {3.0, SeminormExpr::weighted_sup(seq, {{3, 1.0}})}}), x) == 7.0);

  EvalContext labelled;
  labelled.labels = {10, 20, 30};
  CHECK(evaluate(SeminormExpr::weighted_sup(seq, {{20, 2.0}}), x, labelled) == 10.0);

  expect_error(ErrorCode::UnevaluableSeminorm, [&] { evaluate(SeminormExpr::base(seq, "nope"), x); });
  expect_error(ErrorCode::UnevaluableSeminorm, [&] { evaluate(SeminormExpr::ck_norm(seq, 1), x); });
}

TEST_CASE("every registered model is bilinear") {
  std::vector<BilinearModel> models = {pointwise_model(8),
                                       pointwise_model(std::vector<std::int64_t>{3, 5, 9}),
                                       pointwise_grid_model(64),
                                       convolution_model(GroupModel::cyclic(16)),
                                       convolution_model(GroupModel::circle(128)),
                                       zero_model(5)};
  for (const auto& m : models) CHECK_MESSAGE(bilinearity_defect(m, 42, 100) <= 1e-12, m.name);
}
