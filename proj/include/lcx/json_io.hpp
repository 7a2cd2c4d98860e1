#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "lcx/covering.hpp"
#include "lcx/falsify.hpp"
#include "lcx/np_engine.hpp"
#include "lcx/witness.hpp"

namespace lcx::io {

using Json = nlohmann::ordered_json;

/// "5", "aleph0", "aleph1", "continuum". Throws ParseError.
Cardinal parse_cardinal(const std::string& text);
/// {"finite": n} | {"aleph": k} | "continuum"; a bare integer or a string
/// accepted by parse_cardinal is read too.
Cardinal cardinal_from_json(const Json& j);
Json to_json(const Cardinal& c);

Space space_from_json(const Json& j);
Json to_json(const Space& s);

/// Nodes without a "space" member inherit the enclosing one; the root
/// defaults to finsupp.
SeminormExpr seminorm_from_json(const Json& j, const std::optional<Space>& inherited = std::nullopt);
Json to_json(const SeminormExpr& e, const std::optional<Space>& inherited = std::nullopt);

Eigen::MatrixXd matrix_from_json(const Json& j);
Eigen::MatrixXi int_matrix_from_json(const Json& j);
Tensor4 tensor4_from_json(const Json& j);
WeightMap weights_from_json(const Json& j);
Json to_json(const WeightMap& w);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const Eigen::VectorXi& v);

BaseSpaceDesc base_from_json(const Json& j);

/// {rule, conclusion, status, citation, property, theta?, space?, facts?, premises}.
Json to_json(const Derivation& d);
Json to_json(const Verdict& v);

Json to_json(const ProductEstimateWitness& w);
ProductEstimateWitness witness_from_json(const Json& j, const std::optional<Space>& inherited = std::nullopt);
Json to_json(const DirectSumWitness& w);

/// {"kind": "pointwise", "n"} | {"kind": "pointwise", "labels"} |
/// {"kind": "pointwise-grid", "intervals"} | {"kind": "zero", "n"} |
/// {"kind": "convolution", "group": {"kind": "cyclic"|"truncated"|"circle", "size"}}.
BilinearModel model_from_json(const Json& j);
GroupModel group_from_json(const Json& j);

Json to_json(const Violation& v);
/// {outcome, violation?, samplesTried, seed}.
Json to_json(const CheckResult& r);
Json to_json(const Examp3Report& r);
Json to_json(const BlowupReport& r);

/// Parses text as JSON, or, failing that, reads it as a file path.
Json load(const std::string& text_or_path);

}  // namespace lcx::io
