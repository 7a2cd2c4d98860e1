#include <doctest.h>

#include "../support/gen.hpp"
#include "lcx/error.hpp"
#include "lcx/json_io.hpp"

using namespace lcx;
using lcx::io::Json;

namespace {

Space random_space(gen::Rng& rng, int depth) {
  if (depth <= 0 || rng.coin(0.4)) {
    switch (rng.integer(0, 8)) {
      case 0: return Space::normed(rng.coin() ? "" : "X");
      case 1: return Space::frechet_seq(rng.coin(), "F");
      case 2: return Space::finsupp();
      case 3: return Space::k_omega();
      case 4: return Space::df();
      case 5: return Space::gdf();
      case 6: return Space::ell_infinity(Cardinal::aleph(static_cast<std::uint64_t>(rng.integer(0, 3))));
      case 7: return Space::ell_infinity(Cardinal::continuum());
      default: return Space::r_finsupp_uncountable(Cardinal::aleph(1));
    }
  }
  std::vector<Space> blocks;
  for (int k = 0, n = static_cast<int>(rng.integer(1, 3)); k < n; ++k) blocks.push_back(random_space(rng, depth - 1));
  switch (rng.integer(0, 4)) {
    case 0: {
      const auto index = rng.coin() ? Cardinal::finite(blocks.size()) : Cardinal::aleph0();
      return Space::direct_sum(index, std::move(blocks));
    }
    case 1: return Space::product(std::move(blocks));
    case 2: return Space::subspace(blocks.front());
    case 3: return Space::quotient(blocks.front());
    default: return Space::countable_direct_limit(std::move(blocks));
  }
}

SeminormExpr random_expr(gen::Rng& rng, const Space& space, int depth) {
  switch (depth <= 0 ? rng.integer(0, 2) : rng.integer(0, 5)) {
    case 0: return SeminormExpr::prefix_sup(space, static_cast<std::uint64_t>(rng.integer(1, 9)));
    case 1: return SeminormExpr::weighted_sup(space, {{rng.integer(1, 9), rng.log_uniform(0.1, 10)}, {rng.integer(1, 9), 0.5}});
    case 2: return SeminormExpr::base(space, "b" + std::to_string(rng.integer(0, 3)));
    case 3: return SeminormExpr::scale(rng.log_uniform(0.1, 10), random_expr(rng, space, depth - 1));
    case 4: return SeminormExpr::max_of({random_expr(rng, space, depth - 1), random_expr(rng, space, depth - 1)});
    default:
      return SeminormExpr::sum_of({{rng.log_uniform(0.1, 10), random_expr(rng, space, depth - 1)},
                                   {1.0, random_expr(rng, space, depth - 1)}});
  }
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("cardinals serialize as tagged objects") {
  CHECK(io::to_json(Cardinal::finite(4)) == Json::parse(R"({"finite": 4})"));
  CHECK(io::to_json(Cardinal::aleph(1)) == Json::parse(R"({"aleph": 1})"));
  CHECK(io::to_json(Cardinal::continuum()) == Json("continuum"));
  for (const auto& c : {Cardinal::finite(0), Cardinal::finite(9), Cardinal::aleph0(), Cardinal::aleph(5),
                        Cardinal::continuum()})
    CHECK(io::cardinal_from_json(io::to_json(c)) == c);
  CHECK(io::cardinal_from_json(Json("aleph0")) == Cardinal::aleph0());
  CHECK(io::cardinal_from_json(Json(3)) == Cardinal::finite(3));
  CHECK(code_of([] { io::cardinal_from_json(Json::parse(R"({"aleph": -1})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_cardinal("omega"); }) == ErrorCode::ParseError);
}

TEST_CASE("property: spaces round trip") {
  gen::Rng rng(10);
  for (int k = 0; k < 300; ++k) {
    const auto s = random_space(rng, 3);
    const auto j = io::to_json(s);
    CHECK_MESSAGE(io::space_from_json(j) == s, j.dump());
    CHECK(io::space_from_json(Json::parse(j.dump())) == s);
  }
}

TEST_CASE("property: seminorms round trip") {
  gen::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto space = rng.coin() ? Space::finsupp() : Space::normed("E");
    const auto e = random_expr(rng, space, 3);
    const auto j = io::to_json(e);
    CHECK_MESSAGE(io::seminorm_from_json(j) == e, j.dump());
  }
  const Space sum = Space::direct_sum(Cardinal::finite(2), {Space::finsupp(), Space::normed("B")});
  const auto block = SeminormExpr::block_sum(
      sum, {2.0, 3.0}, {SeminormExpr::prefix_sup(Space::finsupp(), 2), SeminormExpr::base(Space::normed("B"), "b")});
  CHECK(io::seminorm_from_json(io::to_json(block)) == block);
}

TEST_CASE("witnesses round trip") {
  const Space seq = Space::finsupp();
  ProductEstimateWitness w{{SeminormExpr::prefix_sup(seq, 3), SeminormExpr::scale(2, SeminormExpr::prefix_sup(seq, 3))},
                           {SeminormExpr::weighted_sup(seq, {{1, 2.0}})},
                           {"step one", "step two"}};
  const auto back = io::witness_from_json(io::to_json(w));
  CHECK(back.p_family == w.p_family);
  CHECK(back.q_family == w.q_family);
  CHECK(back.provenance == w.provenance);
}

TEST_CASE("inputs") {
  CHECK(io::matrix_from_json(Json::parse("[[1, 2], [3, 4]]")) == (Eigen::Matrix2d() << 1, 2, 3, 4).finished());
  CHECK(code_of([] { io::matrix_from_json(Json::parse("[[1, 2], [3]]")); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] { io::int_matrix_from_json(Json::parse("[[1.5]]")); }) == ErrorCode::ParseError);
  const auto t = io::tensor4_from_json(Json::parse("[[[[1, 2]]], [[[3, 4]]]]"));
  CHECK(t.ni() == 2);
  CHECK(t.nt() == 2);
  CHECK(t(1, 0, 0, 1) == 4.0);
  CHECK(io::weights_from_json(Json::parse("[0, 2, 0, 5]")) == WeightMap{{2, 2.0}, {4, 5.0}});
  CHECK(io::weights_from_json(Json::parse(R"({"7": 1.5})")) == WeightMap{{7, 1.5}});

  const auto base = io::base_from_json(Json::parse(R"({"components": {"aleph": 1}, "kind": "locallyCompactParacompact"})"));
  CHECK(base.components == Cardinal::aleph(1));
  CHECK(code_of([] { io::space_from_json(Json::parse(R"({"node": "banach"})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::load("{not json"); }) == ErrorCode::ParseError);
  CHECK(io::load(R"({"a": 1})")["a"] == 1);
}

TEST_CASE("reports") {
  const auto r = io::to_json(repro_examp3(2));
  CHECK(r["outcome"] == "Violation");
  CHECK(r["violation"]["lhs"] == 1.0);
  CHECK(r["violation"]["rhs"] == 0.0);

  CheckResult pass;
  pass.samples_tried = 12;
  pass.seed = 4;
  const auto j = io::to_json(pass);
  CHECK(j["outcome"] == "Pass");
  CHECK_FALSE(j.contains("violation"));
  CHECK(j["samplesTried"] == 12);
}
