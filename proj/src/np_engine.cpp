#include "lcx/np_engine.hpp"

#include <algorithm>
#include <sstream>

#include "lcx/error.hpp"

namespace lcx {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Unknown: return "Unknown";
  }
  return {};
}

Status tri_and(std::initializer_list<Status> parts) {
  if (std::find(parts.begin(), parts.end(), Status::Fails) != parts.end()) return Status::Fails;
  if (std::find(parts.begin(), parts.end(), Status::Unknown) != parts.end()) return Status::Unknown;
  return Status::Holds;
}

Cardinal PropertyQuery::effective_theta() const {
  if (kind == Kind::Cnp) return Cardinal::aleph0();
  if (!theta) throw Error(ErrorCode::InvalidArgument, "theta-np query without theta");
  return *theta;
}

std::string_view rule_citation(std::string_view rule) {
  static const std::map<std::string_view, std::string_view> table = {
      {"normed-structure", "a normed space is normable"},
      {"input-flag", "declared input"},
      {"normable-theta-np", "every normable space has the theta-np for each infinite theta"},
      {"metrizable-cnp-iff-normable", "a metrizable locally convex space has the cnp iff it is normable"},
      {"monotone-up", "the theta'-np implies the theta-np for theta <= theta'; failure propagates upward"},
      {"monotone-down", "the theta'-np implies the theta-np for theta <= theta'"},
      {"countable-sum", "a countable locally convex direct sum of spaces with the cnp has the cnp"},
      {"subspace", "vector subspaces inherit the theta-np"},
      {"finite-product", "finite products (finite direct sums) of spaces with the theta-np have the theta-np"},
      {"summand-embeds", "each summand is a subspace, so a failing summand makes the whole space fail"},
      {"k-omega", "k_omega spaces (and lcx-modifications of k_omega vector spaces) have the cnp"},
      {"finite-support-sequences", "R^(N) = countable direct sum of copies of R has the cnp"},
      {"ell-infinity-axiom", "l^inf(X), |X| > theta, with sup seminorms over <=theta-subsets has the theta-np (external construction)"},
      {"ell-infinity-sharp", "the same space fails the theta'-np for every theta' > theta (external construction)"},
      {"quotient", "quotients by closed subspaces inherit the theta-np"},
      {"countable-direct-limit", "countable locally convex direct limits of spaces with the cnp have the cnp (e.g. LB-spaces)"},
      {"df-space", "every DF-space and every gDF-space has the cnp"},
      {"no-rule", "no rule decides this claim"},
      {"normable-has-norm", "a normable space admits a continuous norm"},
      {"countable-support-seminorms", "the seminorms p_v with countable support define the topology of R^(M) and none is a norm"},
      {"compact-covering-number", "theta(M) from a locally finite relatively compact cover or from the components"},
      {"psi-continuity-iff-theta-np", "(gamma, v) -> gamma v is continuous iff E has the theta(M)-np"},
      {"psi-hypocontinuous", "(gamma, v) -> gamma v is always hypocontinuous"},
      {"compact-group-continuous", "convolution over a compact group is always continuous"},
      {"finite-group-pe-iff-b", "over a finite group beta_b admits product estimates iff b does"},
      {"discrete-continuity", "over an infinite discrete group beta_b is continuous iff G is countable and b admits product estimates"},
      {"pe-iff-continuous", "beta_b admits product estimates iff it is continuous"},
      {"compact-group-pe", "over an infinite compact group beta_b admits product estimates iff conditions (a)-(c) hold"},
      {"theorem-a-continuity", "beta_b is continuous iff G is sigma-compact, t = inf forces r = s = inf, and b admits product estimates"},
      {"compact-is-sigma-compact", "a compact group is sigma-compact"},
      {"degree-condition", "if t = inf then r = s = inf"},
  };
  auto it = table.find(rule);
  return it == table.end() ? std::string_view("unregistered rule") : it->second;
}

namespace {

const Cardinal kAleph0 = Cardinal::aleph0();

std::string np_name(const Cardinal& theta) {
  return theta == kAleph0 ? std::string("cnp") : theta.to_string() + "-np";
}

Derivation np_node(std::string rule, const Space& s, const Cardinal& theta, Status st,
                   std::vector<Derivation> premises = {}) {
  Derivation d;
  d.rule = std::move(rule);
  d.status = st;
  d.property = "theta-np";
  d.space = s;
  d.theta = theta;
  d.premises = std::move(premises);
  switch (st) {
    case Status::Holds: d.conclusion = s.describe() + " has the " + np_name(theta); break;
    case Status::Fails: d.conclusion = s.describe() + " does not have the " + np_name(theta); break;
    case Status::Unknown: d.conclusion = "undecided: " + s.describe() + " has the " + np_name(theta); break;
  }
  return d;
}

Derivation normable_leaf(const Space& s) {
  Derivation d;
  d.property = "normable";
  d.space = s;
  if (s.kind() == Space::Kind::Normed) {
    d.rule = "normed-structure";
    d.status = Status::Holds;
    d.conclusion = s.describe() + " is normable";
  } else {
    d.rule = "input-flag";
    d.status = s.declared_normable() ? Status::Holds : Status::Fails;
    d.conclusion = s.describe() + (s.declared_normable() ? " is declared normable" : " is declared non-normable");
  }
  return d;
}

Derivation prove(const Space& s, const Cardinal& theta);

// Derivations for every listed block, then the verdict of the sum/product.
Derivation prove_summands(const Space& s, const Cardinal& theta) {
  std::vector<Derivation> parts;
  for (const auto& b : s.blocks()) parts.push_back(prove(b, theta));
  for (const auto& p : parts) {
    if (p.status == Status::Fails) return np_node("summand-embeds", s, theta, Status::Fails, {p});
  }
  const bool all_hold =
      std::all_of(parts.begin(), parts.end(), [](const Derivation& p) { return p.status == Status::Holds; });
  const bool finite = s.kind() == Space::Kind::Product || s.cardinal().is_finite();
  if (all_hold && finite) return np_node("finite-product", s, theta, Status::Holds, std::move(parts));
  if (all_hold && s.cardinal() == kAleph0 && theta == kAleph0) {
    return np_node("countable-sum", s, theta, Status::Holds, std::move(parts));
  }
  return np_node("no-rule", s, theta, Status::Unknown, std::move(parts));
}

Derivation prove(const Space& s, const Cardinal& theta) {
  using K = Space::Kind;
  const bool at_aleph0 = theta == kAleph0;
  switch (s.kind()) {
    case K::Normed: return np_node("normable-theta-np", s, theta, Status::Holds, {normable_leaf(s)});
    case K::FrechetSeq:
      if (s.declared_normable()) return np_node("normable-theta-np", s, theta, Status::Holds, {normable_leaf(s)});
      if (at_aleph0) return np_node("metrizable-cnp-iff-normable", s, theta, Status::Fails, {normable_leaf(s)});
      return np_node("monotone-up", s, theta, Status::Fails, {prove(s, kAleph0)});
    case K::KOmega:
      return at_aleph0 ? np_node("k-omega", s, theta, Status::Holds) : np_node("no-rule", s, theta, Status::Unknown);
    case K::DF:
    case K::GDF:
      return at_aleph0 ? np_node("df-space", s, theta, Status::Holds) : np_node("no-rule", s, theta, Status::Unknown);
    case K::FinSupp:
      if (at_aleph0) {
        const Space sum = Space::direct_sum(kAleph0, {Space::normed("R")});
        return np_node("finite-support-sequences", s, theta, Status::Holds, {prove(sum, kAleph0)});
      }
      return np_node("no-rule", s, theta, Status::Unknown);
    case K::EllInftyTheta:
      switch (compare(theta, s.cardinal())) {
        case CardinalOrder::Equal: return np_node("ell-infinity-axiom", s, theta, Status::Holds);
        case CardinalOrder::Less:
          return np_node("monotone-down", s, theta, Status::Holds, {prove(s, s.cardinal())});
        case CardinalOrder::Greater: return np_node("ell-infinity-sharp", s, theta, Status::Fails);
        case CardinalOrder::Unknown: return np_node("no-rule", s, theta, Status::Unknown);
      }
      break;
    case K::Subspace:
    case K::Quotient: {
      auto inner = prove(s.of(), theta);
      if (inner.status == Status::Holds) {
        return np_node(s.kind() == K::Subspace ? "subspace" : "quotient", s, theta, Status::Holds, {inner});
      }
      return np_node("no-rule", s, theta, Status::Unknown, {inner});
    }
    case K::Product:
    case K::DirectSum: return prove_summands(s, theta);
    case K::CountableDirectLimit: {
      std::vector<Derivation> parts;
      for (const auto& b : s.blocks()) parts.push_back(prove(b, kAleph0));
      const bool all_hold =
          std::all_of(parts.begin(), parts.end(), [](const Derivation& p) { return p.status == Status::Holds; });
      if (at_aleph0 && all_hold) {
        return np_node("countable-direct-limit", s, theta, Status::Holds, std::move(parts));
      }
      return np_node("no-rule", s, theta, Status::Unknown);
    }
    case K::RFinSuppUncountable: return np_node("no-rule", s, theta, Status::Unknown);
  }
  return np_node("no-rule", s, theta, Status::Unknown);
}

// --- replay -----------------------------------------------------------------

bool is_np(const Derivation& d, Status st) {
  return d.property == "theta-np" && d.status == st && d.space && d.theta;
}

bool premise_on(const Derivation& d, const Space& s, const Cardinal& theta, Status st) {
  return is_np(d, st) && *d.space == s && *d.theta == theta;
}

std::optional<Status> parse_tri(const std::string& v) {
  if (v == "yes") return Status::Holds;
  if (v == "no") return Status::Fails;
  if (v == "unknown") return Status::Unknown;
  return std::nullopt;
}

std::optional<Degree> parse_degree(const std::string& v) {
  if (v == "inf") return Degree::inf();
  try {
    return Degree::of(static_cast<std::uint32_t>(std::stoul(v)));
  } catch (...) {
    return std::nullopt;
  }
}

bool has_premise_property(const Derivation& d, std::size_t i, std::string_view property) {
  return d.premises.size() > i && d.premises[i].property == property;
}

Status premise_and(const Derivation& d) {
  Status acc = Status::Holds;
  for (const auto& p : d.premises) acc = tri_and({acc, p.status});
  return acc;
}

bool check_node(const Derivation& d) {
  using K = Space::Kind;
  const auto& r = d.rule;
  const auto& ps = d.premises;
  const bool np = d.property == "theta-np" && d.space && d.theta;

  if (r == "no-rule") return d.status == Status::Unknown;
  if (r == "normed-structure") {
    return d.property == "normable" && d.status == Status::Holds && d.space && d.space->kind() == K::Normed;
  }
  if (r == "input-flag") {
    if (d.property == "normable") {
      return d.space && d.space->kind() == K::FrechetSeq &&
             d.status == (d.space->declared_normable() ? Status::Holds : Status::Fails);
    }
    if (d.property.rfind("condition:", 0) == 0) {
      auto it = d.facts.find("value");
      return it != d.facts.end() && parse_tri(it->second) == d.status;
    }
    return false;
  }
  if (r == "normable-theta-np") {
    return np && d.status == Status::Holds && ps.size() == 1 && ps[0].property == "normable" &&
           ps[0].status == Status::Holds && ps[0].space && *ps[0].space == *d.space;
  }
  if (r == "metrizable-cnp-iff-normable") {
    return np && d.status == Status::Fails && d.space->kind() == K::FrechetSeq && *d.theta == kAleph0 &&
           ps.size() == 1 && ps[0].property == "normable" && ps[0].status == Status::Fails &&
           ps[0].space && *ps[0].space == *d.space;
  }
  if (r == "monotone-up") {
    return np && d.status == Status::Fails && ps.size() == 1 && is_np(ps[0], Status::Fails) &&
           *ps[0].space == *d.space && known_le(*ps[0].theta, *d.theta);
  }
  if (r == "monotone-down") {
    return np && d.status == Status::Holds && ps.size() == 1 && is_np(ps[0], Status::Holds) &&
           *ps[0].space == *d.space && known_le(*d.theta, *ps[0].theta);
  }
  if (r == "k-omega" || r == "df-space") {
    const bool kind_ok = r == "k-omega" ? d.space && d.space->kind() == K::KOmega
                                        : d.space && (d.space->kind() == K::DF || d.space->kind() == K::GDF);
    return np && kind_ok && *d.theta == kAleph0 && d.status == Status::Holds && ps.empty();
  }
  if (r == "finite-support-sequences") {
    return np && d.space->kind() == K::FinSupp && *d.theta == kAleph0 && d.status == Status::Holds &&
           ps.size() == 1 &&
           premise_on(ps[0], Space::direct_sum(kAleph0, {Space::normed("R")}), kAleph0, Status::Holds);
  }
  if (r == "ell-infinity-axiom") {
    return np && d.space->kind() == K::EllInftyTheta && *d.theta == d.space->cardinal() &&
           d.status == Status::Holds && ps.empty();
  }
  if (r == "ell-infinity-sharp") {
    return np && d.space->kind() == K::EllInftyTheta &&
           compare(*d.theta, d.space->cardinal()) == CardinalOrder::Greater && d.status == Status::Fails &&
           ps.empty();
  }
  if (r == "subspace" || r == "quotient") {
    const K want = r == "subspace" ? K::Subspace : K::Quotient;
    return np && d.space->kind() == want && d.status == Status::Holds && ps.size() == 1 &&
           premise_on(ps[0], d.space->of(), *d.theta, Status::Holds);
  }
  if (r == "finite-product" || r == "countable-sum" || r == "countable-direct-limit") {
    if (!np || d.status != Status::Holds) return false;
    const auto& s = *d.space;
    if (r == "finite-product" &&
        !(s.kind() == K::Product || (s.kind() == K::DirectSum && s.cardinal().is_finite()))) {
      return false;
    }
    if (r == "countable-sum" && !(s.kind() == K::DirectSum && s.cardinal() == kAleph0 && *d.theta == kAleph0)) {
      return false;
    }
    if (r == "countable-direct-limit" && !(s.kind() == K::CountableDirectLimit && *d.theta == kAleph0)) {
      return false;
    }
    if (ps.size() != s.blocks().size()) return false;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (!premise_on(ps[i], s.blocks()[i], *d.theta, Status::Holds)) return false;
    }
    return true;
  }
  if (r == "summand-embeds") {
    if (!np || d.status != Status::Fails || ps.size() != 1) return false;
    if (d.space->kind() != K::Product && d.space->kind() != K::DirectSum) return false;
    const auto blocks = d.space->blocks();
    return is_np(ps[0], Status::Fails) && *ps[0].theta == *d.theta &&
           std::any_of(blocks.begin(), blocks.end(), [&](const Space& b) { return b == *ps[0].space; });
  }
  if (r == "normable-has-norm") {
    return d.property == "continuous-norm" && d.status == Status::Holds && ps.size() == 1 &&
           ps[0].property == "normable" && ps[0].status == Status::Holds && ps[0].space == d.space;
  }
  if (r == "countable-support-seminorms") {
    return d.property == "continuous-norm" && d.status == Status::Fails && d.space &&
           d.space->kind() == K::RFinSuppUncountable && ps.empty();
  }
  if (r == "compact-covering-number") {
    return d.property == "theta(M)" && d.theta && d.theta->is_infinite() && d.status == Status::Holds;
  }
  if (r == "psi-continuity-iff-theta-np") {
    return d.property == "psi-continuous" && ps.size() == 2 && ps[0].property == "theta(M)" && ps[0].theta &&
           ps[1].property == "theta-np" && ps[1].theta && *ps[1].theta == *ps[0].theta &&
           d.status == ps[1].status;
  }
  if (r == "psi-hypocontinuous") return d.property == "psi-hypocontinuous" && d.status == Status::Holds;
  if (r == "compact-group-continuous") {
    auto it = d.facts.find("group");
    return d.property == "beta-continuous" && d.status == Status::Holds && it != d.facts.end() &&
           (it->second == "finite" || it->second == "infinite-compact");
  }
  if (r == "finite-group-pe-iff-b") {
    return d.property == "beta-product-estimates" && ps.size() == 1 &&
           ps[0].property == "condition:b-product-estimates" && d.status == ps[0].status;
  }
  if (r == "pe-iff-continuous") {
    return d.property == "beta-product-estimates" && ps.size() == 1 && ps[0].property == "beta-continuous" &&
           d.status == ps[0].status;
  }
  if (r == "discrete-continuity") {
    return d.property == "beta-continuous" && ps.size() == 2 && has_premise_property(d, 0, "condition:countable") &&
           has_premise_property(d, 1, "condition:b-product-estimates") && d.status == premise_and(d);
  }
  if (r == "compact-group-pe" || r == "theorem-a-continuity") {
    const std::string_view want = r == "compact-group-pe" ? "beta-product-estimates" : "beta-continuous";
    return d.property == want && ps.size() == 3 && has_premise_property(d, 0, "condition:sigma-compact") &&
           has_premise_property(d, 1, "condition:degrees") &&
           has_premise_property(d, 2, "condition:b-product-estimates") && d.status == premise_and(d);
  }
  if (r == "compact-is-sigma-compact") {
    return d.property == "condition:sigma-compact" && d.status == Status::Holds && ps.empty();
  }
  if (r == "degree-condition") {
    auto get = [&](const char* k) -> std::optional<Degree> {
      auto it = d.facts.find(k);
      return it == d.facts.end() ? std::nullopt : parse_degree(it->second);
    };
    const auto rr = get("r"), ss = get("s"), tt = get("t");
    if (d.property != "condition:degrees" || !rr || !ss || !tt) return false;
    const bool ok = !tt->infinite || (rr->infinite && ss->infinite);
    return d.status == (ok ? Status::Holds : Status::Fails);
  }
  return false;
}

void render_into(std::ostringstream& os, const Derivation& d, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << '[' << d.rule << "] " << d.conclusion << '\n';
  for (const auto& p : d.premises) render_into(os, p, depth + 1);
}

}  // namespace

std::optional<std::string> replay(const Derivation& d) {
  for (const auto& p : d.premises) {
    if (auto bad = replay(p)) return bad;
  }
  if (!check_node(d)) return d.rule;
  return std::nullopt;
}

std::string render(const Derivation& d) {
  std::ostringstream os;
  render_into(os, d, 0);
  return os.str();
}

Verdict derive(const Space& space, const PropertyQuery& query) {
  const Cardinal theta = query.effective_theta();
  if (theta.is_finite()) {
    throw Error(ErrorCode::FiniteTheta, "neighbourhood properties need an infinite theta, got " + theta.to_string());
  }
  auto d = prove(space, theta);
  return Verdict{d.status, std::move(d)};
}

Verdict continuous_norm(const Space& space) {
  Derivation d;
  d.property = "continuous-norm";
  d.space = space;
  const bool normable = space.kind() == Space::Kind::Normed ||
                        (space.kind() == Space::Kind::FrechetSeq && space.declared_normable());
  if (normable) {
    d.rule = "normable-has-norm";
    d.status = Status::Holds;
    d.conclusion = space.describe() + " admits a continuous norm";
    d.premises = {normable_leaf(space)};
  } else if (space.kind() == Space::Kind::RFinSuppUncountable) {
    d.rule = "countable-support-seminorms";
    d.status = Status::Fails;
    d.conclusion = space.describe() + " does not admit a continuous norm";
  } else {
    d.rule = "no-rule";
    d.status = Status::Unknown;
    d.conclusion = "undecided: " + space.describe() + " admits a continuous norm";
  }
  return Verdict{d.status, std::move(d)};
}

PsiVerdict psi_continuity(const BaseSpaceDesc& m, const Space& e) {
  if (m.compact) throw Error(ErrorCode::CompactBase, "M must be non-compact");
  const Cardinal th = theta(m);

  Derivation cover;
  cover.rule = "compact-covering-number";
  cover.property = "theta(M)";
  cover.status = Status::Holds;
  cover.theta = th;
  cover.conclusion = "theta(M) = " + th.to_string();

  auto np = derive(e, PropertyQuery::theta_np(th));

  Derivation cont;
  cont.rule = "psi-continuity-iff-theta-np";
  cont.property = "psi-continuous";
  cont.status = np.status;
  cont.space = e;
  cont.theta = th;
  switch (np.status) {
    case Status::Holds: cont.conclusion = "Psi is continuous"; break;
    case Status::Fails: cont.conclusion = "Psi is not continuous"; break;
    case Status::Unknown: cont.conclusion = "undecided: Psi is continuous"; break;
  }
  cont.premises = {cover, np.derivation};

  Derivation hypo;
  hypo.rule = "psi-hypocontinuous";
  hypo.property = "psi-hypocontinuous";
  hypo.status = Status::Holds;
  hypo.space = e;
  hypo.conclusion = "Psi is hypocontinuous";

  return PsiVerdict{Verdict{cont.status, cont}, Verdict{Status::Holds, hypo}};
}

std::string Degree::to_string() const { return infinite ? std::string("inf") : std::to_string(value); }

bool degree_le_sum(Degree t, Degree r, Degree s) {
  if (r.infinite || s.infinite) return true;
  if (t.infinite) return false;
  return std::uint64_t{t.value} <= std::uint64_t{r.value} + s.value;
}

std::string to_string(GroupClass g) {
  switch (g) {
    case GroupClass::Finite: return "finite";
    case GroupClass::InfiniteDiscrete: return "infinite-discrete";
    case GroupClass::InfiniteCompact: return "infinite-compact";
    case GroupClass::NonCompactNonDiscrete: return "non-compact-non-discrete";
  }
  return {};
}

namespace {

std::string yes_no(Status s) {
  switch (s) {
    case Status::Holds: return "yes";
    case Status::Fails: return "no";
    case Status::Unknown: return "unknown";
  }
  return {};
}

Derivation condition(std::string name, Status value, std::string text) {
  Derivation d;
  d.rule = "input-flag";
  d.property = "condition:" + name;
  d.status = value;
  d.facts["value"] = yes_no(value);
  d.conclusion = std::move(text) + ": " + yes_no(value);
  return d;
}

Derivation beta_node(std::string rule, std::string property, Status st, const ConvolutionSetting& c,
                     std::vector<Derivation> premises = {}) {
  Derivation d;
  d.rule = std::move(rule);
  d.property = std::move(property);
  d.status = st;
  d.facts["group"] = to_string(c.group);
  d.premises = std::move(premises);
  const bool pe = d.property == "beta-product-estimates";
  switch (st) {
    case Status::Holds:
      d.conclusion = pe ? "beta_b admits product estimates" : "beta_b is continuous";
      break;
    case Status::Fails:
      d.conclusion = pe ? "beta_b does not admit product estimates" : "beta_b is not continuous";
      break;
    case Status::Unknown:
      d.conclusion = pe ? "undecided: beta_b admits product estimates" : "undecided: beta_b is continuous";
      break;
  }
  return d;
}

Derivation degree_condition(const ConvolutionSetting& c) {
  const bool ok = !c.t.infinite || (c.r.infinite && c.s.infinite);
  Derivation d;
  d.rule = "degree-condition";
  d.property = "condition:degrees";
  d.status = ok ? Status::Holds : Status::Fails;
  d.facts = {{"r", c.r.to_string()}, {"s", c.s.to_string()}, {"t", c.t.to_string()}};
  d.conclusion = "(t = inf implies r = s = inf) with r=" + c.r.to_string() + " s=" + c.s.to_string() +
                 " t=" + c.t.to_string() + ": " + (ok ? "yes" : "no");
  return d;
}

}  // namespace

ConvolutionVerdict classify_convolution(const ConvolutionSetting& c) {
  if (!degree_le_sum(c.t, c.r, c.s)) {
    throw Error(ErrorCode::DegreeViolation,
                "t=" + c.t.to_string() + " exceeds r+s with r=" + c.r.to_string() + " s=" + c.s.to_string());
  }
  const auto b_pe = condition("b-product-estimates", c.b_product_estimates, "b admits product estimates");
  Derivation cont, pe;
  switch (c.group) {
    case GroupClass::Finite:
      cont = beta_node("compact-group-continuous", "beta-continuous", Status::Holds, c);
      pe = beta_node("finite-group-pe-iff-b", "beta-product-estimates", b_pe.status, c, {b_pe});
      break;
    case GroupClass::InfiniteDiscrete: {
      auto countable = condition("countable", c.countable ? Status::Holds : Status::Fails, "G is countable");
      const Status st = tri_and({countable.status, b_pe.status});
      cont = beta_node("discrete-continuity", "beta-continuous", st, c, {countable, b_pe});
      pe = beta_node("pe-iff-continuous", "beta-product-estimates", st, c, {cont});
      break;
    }
    case GroupClass::InfiniteCompact: {
      Derivation sigma;
      sigma.rule = "compact-is-sigma-compact";
      sigma.property = "condition:sigma-compact";
      sigma.status = Status::Holds;
      sigma.conclusion = "G is sigma-compact: yes";
      auto deg = degree_condition(c);
      cont = beta_node("compact-group-continuous", "beta-continuous", Status::Holds, c);
      const Status st = tri_and({sigma.status, deg.status, b_pe.status});
      pe = beta_node("compact-group-pe", "beta-product-estimates", st, c, {sigma, deg, b_pe});
      break;
    }
    case GroupClass::NonCompactNonDiscrete: {
      auto sigma = condition("sigma-compact", c.sigma_compact ? Status::Holds : Status::Fails, "G is sigma-compact");
      auto deg = degree_condition(c);
      const Status st = tri_and({sigma.status, deg.status, b_pe.status});
      cont = beta_node("theorem-a-continuity", "beta-continuous", st, c, {sigma, deg, b_pe});
      pe = beta_node("pe-iff-continuous", "beta-product-estimates", st, c, {cont});
      break;
    }
  }
  return ConvolutionVerdict{Verdict{cont.status, cont}, Verdict{pe.status, pe}};
}

}  // namespace lcx
