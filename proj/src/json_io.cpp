#include "lcx/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lcx/error.hpp"

namespace lcx::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    parse_error(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key);
}

std::vector<Space> space_list(const Json& j) {
  std::vector<Space> out;
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) parse_error("\"blocks\" must be an array");
  for (const auto& b : blocks) out.push_back(space_from_json(b));
  return out;
}

}  // namespace

Cardinal parse_cardinal(const std::string& text) {
  if (text == "continuum" || text == "c") return Cardinal::continuum();
  const auto digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (text.rfind("aleph", 0) == 0 && digits(text.substr(5))) return Cardinal::aleph(std::stoull(text.substr(5)));
  if (digits(text)) return Cardinal::finite(std::stoull(text));
  parse_error("not a cardinal: \"" + text + "\" (use n, alephK or continuum)");
}

Cardinal cardinal_from_json(const Json& j) {
  if (j.is_object() && j.size() == 1) {
    const auto index = [&](const char* key) {
      const auto& v = j.at(key);
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) parse_error("cardinal index must be >= 0");
      return v.get<std::uint64_t>();
    };
    if (j.contains("finite")) return Cardinal::finite(index("finite"));
    if (j.contains("aleph")) return Cardinal::aleph(index("aleph"));
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Cardinal::finite(j.get<std::uint64_t>());
  if (j.is_string()) return parse_cardinal(j.get<std::string>());
  parse_error("cardinal must be {\"finite\": n}, {\"aleph\": k} or \"continuum\"");
}

Json to_json(const Cardinal& c) {
  switch (c.kind()) {
    case Cardinal::Kind::Finite: return Json{{"finite", c.index()}};
    case Cardinal::Kind::Aleph: return Json{{"aleph", c.index()}};
    case Cardinal::Kind::Continuum: return Json("continuum");
  }
  return Json("continuum");
}

Space space_from_json(const Json& j) {
  if (j.is_string()) return space_from_json(Json{{"node", j.get<std::string>()}});
  const auto node = get<std::string>(j, "node");
  const auto label = get_or<std::string>(j, "label", "");
  if (node == "normed") return Space::normed(label);
  if (node == "frechet-seq") return Space::frechet_seq(get<bool>(j, "declaredNormable"), label);
  if (node == "direct-sum") return Space::direct_sum(cardinal_from_json(field(j, "index")), space_list(j));
  if (node == "product") return Space::product(space_list(j));
  if (node == "subspace") return Space::subspace(space_from_json(field(j, "of")));
  if (node == "quotient") return Space::quotient(space_from_json(field(j, "of")));
  if (node == "countable-direct-limit") return Space::countable_direct_limit(space_list(j));
  if (node == "finsupp") return Space::finsupp();
  if (node == "k-omega") return Space::k_omega();
  if (node == "df") return Space::df();
  if (node == "gdf") return Space::gdf();
  if (node == "ell-infinity-theta") return Space::ell_infinity(cardinal_from_json(field(j, "theta")));
  if (node == "r-finsupp-uncountable") return Space::r_finsupp_uncountable(cardinal_from_json(field(j, "size")));
  parse_error("unknown space node \"" + node + "\"");
}

Json to_json(const Space& s) {
  using K = Space::Kind;
  Json j{{"node", to_string(s.kind())}};
  const auto blocks = [&] {
    Json a = Json::array();
    for (const auto& b : s.blocks()) a.push_back(to_json(b));
    return a;
  };
  switch (s.kind()) {
    case K::Normed:
      if (!s.label().empty()) j["label"] = s.label();
      break;
    case K::FrechetSeq:
      j["declaredNormable"] = s.declared_normable();
      if (!s.label().empty()) j["label"] = s.label();
      break;
    case K::DirectSum:
      j["index"] = to_json(s.cardinal());
      j["blocks"] = blocks();
      break;
    case K::Product:
    case K::CountableDirectLimit: j["blocks"] = blocks(); break;
    case K::Subspace:
    case K::Quotient: j["of"] = to_json(s.of()); break;
    case K::EllInftyTheta: j["theta"] = to_json(s.cardinal()); break;
    case K::RFinSuppUncountable: j["size"] = to_json(s.cardinal()); break;
    case K::FinSupp:
    case K::KOmega:
    case K::DF:
    case K::GDF: break;
  }
  return j;
}

WeightMap weights_from_json(const Json& j) {
  WeightMap w;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      try {
        w[std::stoll(key)] = value.get<double>();
      } catch (const std::exception&) {
        parse_error("weight map keys must be integer labels and values numbers");
      }
    }
    return w;
  }
  if (j.is_array()) {
    // Dense form: entry k is the weight of label k + 1.
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_number()) parse_error("weights must be numbers");
      const double v = j[k].get<double>();
      if (v != 0.0) w[static_cast<std::int64_t>(k + 1)] = v;
    }
    return w;
  }
  parse_error("weight map must be an object or an array");
}

Json to_json(const WeightMap& w) {
  Json j = Json::object();
  for (const auto& [label, value] : w) j[std::to_string(label)] = value;
  return j;
}

SeminormExpr seminorm_from_json(const Json& j, const std::optional<Space>& inherited) {
  const Space space = j.is_object() && j.contains("space") ? space_from_json(j.at("space"))
                                                           : inherited.value_or(Space::finsupp());
  const auto node = get<std::string>(j, "node");
  const auto list = [&](const char* key) {
    const auto& a = field(j, key);
    if (!a.is_array()) parse_error(std::string("\"") + key + "\" must be an array");
    return a;
  };
  if (node == "base") return SeminormExpr::base(space, get<std::string>(j, "id"));
  if (node == "prefix-sup") return SeminormExpr::prefix_sup(space, get<std::uint64_t>(j, "n"));
  if (node == "ck-norm") return SeminormExpr::ck_norm(space, get<unsigned>(j, "k"));
  if (node == "weighted-sup") return SeminormExpr::weighted_sup(space, weights_from_json(field(j, "weights")));
  if (node == "scale") return SeminormExpr::scale(get<double>(j, "factor"), seminorm_from_json(field(j, "of"), space));
  if (node == "max-of") {
    std::vector<SeminormExpr> terms;
    for (const auto& t : list("terms")) terms.push_back(seminorm_from_json(t, space));
    return SeminormExpr::max_of(std::move(terms));
  }
  if (node == "sum-of") {
    std::vector<std::pair<double, SeminormExpr>> terms;
    for (const auto& t : list("terms")) {
      terms.emplace_back(get_or<double>(t, "weight", 1.0), seminorm_from_json(field(t, "term"), space));
    }
    return SeminormExpr::sum_of(std::move(terms));
  }
  if (node == "block-sum" || node == "block-max") {
    const auto& arr = list("blocks");
    std::vector<SeminormExpr> blocks;
    const bool own_space = j.contains("space");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      blocks.push_back(seminorm_from_json(arr[i], own_space ? std::optional<Space>(space.block(i)) : inherited));
    }
    Space sum = space;
    if (!own_space) {
      std::vector<Space> spaces;
      for (const auto& b : blocks) spaces.push_back(b.space());
      sum = Space::direct_sum(Cardinal::finite(spaces.size()), std::move(spaces));
    }
    if (node == "block-max") return SeminormExpr::block_max(sum, std::move(blocks));
    std::vector<double> weights = j.contains("weights") ? get<std::vector<double>>(j, "weights")
                                                        : std::vector<double>(blocks.size(), 1.0);
    return SeminormExpr::block_sum(sum, std::move(weights), std::move(blocks));
  }
  parse_error("unknown seminorm node \"" + node + "\"");
}

Json to_json(const SeminormExpr& e, const std::optional<Space>& inherited) {
  using K = SeminormExpr::Kind;
  Json j{{"node", to_string(e.kind())}};
  if (!inherited || !(e.space() == *inherited)) j["space"] = to_json(e.space());
  const auto terms = e.terms();
  switch (e.kind()) {
    case K::Base: j["id"] = e.id(); break;
    case K::PrefixSup: j["n"] = e.order(); break;
    case K::CkNorm: j["k"] = e.order(); break;
    case K::WeightedSup: j["weights"] = to_json(e.weights()); break;
    case K::Scale:
      j["factor"] = e.factor();
      j["of"] = to_json(terms.front(), e.space());
      break;
    case K::MaxOf:
      j["terms"] = Json::array();
      for (const auto& t : terms) j["terms"].push_back(to_json(t, e.space()));
      break;
    case K::SumOf:
      j["terms"] = Json::array();
      for (std::size_t k = 0; k < terms.size(); ++k) {
        j["terms"].push_back(Json{{"weight", e.term_weights()[k]}, {"term", to_json(terms[k], e.space())}});
      }
      break;
    case K::BlockSum:
    case K::BlockMax:
      if (e.kind() == K::BlockSum) j["weights"] = std::vector<double>(e.term_weights().begin(), e.term_weights().end());
      j["blocks"] = Json::array();
      for (std::size_t k = 0; k < terms.size(); ++k) j["blocks"].push_back(to_json(terms[k], e.space().block(k)));
      break;
  }
  return j;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) parse_error("matrix must be a non-empty array of rows");
  const auto cols = j.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) parse_error("matrix entries must be numbers");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
    }
  }
  return m;
}

Eigen::MatrixXi int_matrix_from_json(const Json& j) {
  const Eigen::MatrixXd m = matrix_from_json(j);
  if (!(m.array() == m.array().round()).all()) parse_error("exponent matrix entries must be integers");
  return m.cast<int>();
}

Tensor4 tensor4_from_json(const Json& j) {
  const auto dim = [](const Json& a, const char* what) {
    if (!a.is_array() || a.empty()) parse_error(std::string("4-index array: ") + what + " must be a non-empty array");
    return a.size();
  };
  const std::size_t ni = dim(j, "axis i"), nj = dim(j[0], "axis j"), ns = dim(j[0][0], "axis sigma"),
                    nt = dim(j[0][0][0], "axis tau");
  Tensor4 c(ni, nj, ns, nt);
  for (std::size_t i = 0; i < ni; ++i) {
    if (dim(j[i], "axis j") != nj) throw Error(ErrorCode::ShapeMismatch, "4-index array is ragged");
    for (std::size_t a = 0; a < nj; ++a) {
      if (dim(j[i][a], "axis sigma") != ns) throw Error(ErrorCode::ShapeMismatch, "4-index array is ragged");
      for (std::size_t s = 0; s < ns; ++s) {
        if (dim(j[i][a][s], "axis tau") != nt) throw Error(ErrorCode::ShapeMismatch, "4-index array is ragged");
        for (std::size_t t = 0; t < nt; ++t) {
          if (!j[i][a][s][t].is_number()) parse_error("4-index entries must be numbers");
          c(i, a, s, t) = j[i][a][s][t].get<double>();
        }
      }
    }
  }
  return c;
}

Json to_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Json to_json(const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

BaseSpaceDesc base_from_json(const Json& j) {
  BaseSpaceDesc m;
  m.compact = get_or<bool>(j, "compact", false);
  if (j.contains("components")) m.components = cardinal_from_json(j.at("components"));
  if (j.contains("coverSize")) m.cover_size = cardinal_from_json(j.at("coverSize"));
  const auto kind = get_or<std::string>(j, "kind", "manifold");
  if (kind == "manifold") {
    m.kind = BaseSpaceDesc::Kind::Manifold;
  } else if (kind == "locallyCompactParacompact") {
    m.kind = BaseSpaceDesc::Kind::LocallyCompactParacompact;
  } else {
    parse_error("base space kind must be manifold or locallyCompactParacompact");
  }
  return m;
}

Json to_json(const Derivation& d) {
  Json j{{"rule", d.rule},
         {"conclusion", d.conclusion},
         {"status", to_string(d.status)},
         {"citation", std::string(rule_citation(d.rule))},
         {"property", d.property}};
  if (d.theta) j["theta"] = to_json(*d.theta);
  if (d.space) j["space"] = d.space->describe();
  if (!d.facts.empty()) j["facts"] = d.facts;
  j["premises"] = Json::array();
  for (const auto& p : d.premises) j["premises"].push_back(to_json(p));
  return j;
}

Json to_json(const Verdict& v) { return Json{{"status", to_string(v.status)}, {"derivation", to_json(v.derivation)}}; }

Json to_json(const ProductEstimateWitness& w) {
  Json j{{"p_family", Json::array()}, {"q_family", Json::array()}, {"provenance", w.provenance}};
  for (const auto& p : w.p_family) j["p_family"].push_back(to_json(p));
  for (const auto& q : w.q_family) j["q_family"].push_back(to_json(q));
  return j;
}

ProductEstimateWitness witness_from_json(const Json& j, const std::optional<Space>& inherited) {
  ProductEstimateWitness w;
  for (const auto& p : field(j, "p_family")) w.p_family.push_back(seminorm_from_json(p, inherited));
  for (const auto& q : field(j, "q_family")) w.q_family.push_back(seminorm_from_json(q, inherited));
  w.provenance = get_or<std::vector<std::string>>(j, "provenance", {});
  return w;
}

Json to_json(const DirectSumWitness& w) {
  Json j{{"p_family", Json::array()}, {"q_family", Json::array()}, {"d", to_json(w.d)}, {"provenance", w.provenance}};
  for (const auto& p : w.p_family) j["p_family"].push_back(to_json(p));
  for (const auto& q : w.q_family) j["q_family"].push_back(to_json(q));
  return j;
}

GroupModel group_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  const auto size = get<std::size_t>(j, "size");
  if (kind == "cyclic") return GroupModel::cyclic(size);
  if (kind == "truncated") return GroupModel::truncated(size);
  if (kind == "circle") return GroupModel::circle(size);
  parse_error("group kind must be cyclic, truncated or circle");
}

BilinearModel model_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "pointwise") {
    if (j.contains("labels")) return pointwise_model(get<std::vector<std::int64_t>>(j, "labels"));
    return pointwise_model(get<std::size_t>(j, "n"));
  }
  if (kind == "pointwise-grid") return pointwise_grid_model(get<std::size_t>(j, "intervals"));
  if (kind == "zero") return zero_model(get<std::size_t>(j, "n"));
  if (kind == "convolution") return convolution_model(group_from_json(field(j, "group")));
  parse_error("model kind must be pointwise, pointwise-grid, zero or convolution");
}

Json to_json(const Violation& v) {
  return Json{{"i", v.i}, {"j", v.j}, {"x", to_json(v.x)}, {"y", to_json(v.y)}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

Json to_json(const CheckResult& r) {
  Json j{{"outcome", r.pass() ? "Pass" : "Violation"}};
  if (r.violation) j["violation"] = to_json(*r.violation);
  j["samplesTried"] = r.samples_tried;
  j["seed"] = r.seed;
  return j;
}

Json to_json(const Examp3Report& r) {
  return Json{{"outcome", "Violation"}, {"n", r.n}, {"r", r.r}, {"violation", to_json(r.violation)}, {"note", r.note}};
}

Json to_json(const BlowupReport& r) {
  Json points = Json::array();
  for (std::size_t m = 0; m < r.t.size(); ++m) {
    points.push_back(Json{{"t", r.t[m]},
                          {"intervals", r.intervals[m]},
                          {"ck", r.ck[m]},
                          {"ckNext", r.ck_next[m]},
                          {"ratio", r.ratios[m]}});
  }
  return Json{{"outcome", r.blowup ? "Blowup" : "NoClaim"},
              {"k", r.k},
              {"points", points},
              {"quotients", r.quotients},
              {"selfCheck", r.self_check},
              {"note", r.note}};
}

Json load(const std::string& text_or_path) {
  try {
    return Json::parse(text_or_path);
  } catch (const Json::parse_error&) {
  }
  std::ifstream in(text_or_path);
  if (!in) parse_error("neither JSON nor a readable file: " + text_or_path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(text_or_path + ": " + e.what());
  }
}

}  // namespace lcx::io
