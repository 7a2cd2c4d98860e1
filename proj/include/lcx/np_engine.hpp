#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcx/cardinal.hpp"
#include "lcx/covering.hpp"
#include "lcx/space.hpp"

namespace lcx {

enum class Status { Holds, Fails, Unknown };

std::string to_string(Status s);
/// Three-valued conjunction: any Fails wins, then any Unknown.
Status tri_and(std::initializer_list<Status> parts);

/// Node of a derivation tree. The machine-readable claim (property, space,
/// theta, status, facts) is what replay() checks; `conclusion` is the
/// rendered form.
struct Derivation {
  std::string rule;
  std::string conclusion;
  Status status = Status::Unknown;
  /// "theta-np", "normable", "continuous-norm", "theta(M)",
  /// "psi-continuous", "psi-hypocontinuous", "beta-continuous",
  /// "beta-product-estimates", or "condition:<name>".
  std::string property;
  std::optional<Space> space;
  std::optional<Cardinal> theta;
  std::map<std::string, std::string> facts;
  std::vector<Derivation> premises;
};

/// One-line description of the mathematical fact behind a rule id.
std::string_view rule_citation(std::string_view rule);

/// Mechanical check that every node's rule, applied to its premises, yields
/// its conclusion. Returns the first offending node's rule id on failure.
std::optional<std::string> replay(const Derivation& d);

/// Indented text rendering, one node per line.
std::string render(const Derivation& d);

struct PropertyQuery {
  enum class Kind { Cnp, ThetaNp };
  Kind kind = Kind::Cnp;
  std::optional<Cardinal> theta;

  static PropertyQuery cnp() { return {Kind::Cnp, std::nullopt}; }
  static PropertyQuery theta_np(Cardinal t) { return {Kind::ThetaNp, t}; }
  /// aleph0 for the cnp.
  Cardinal effective_theta() const;
};

struct Verdict {
  Status status = Status::Unknown;
  Derivation derivation;
};

/// Derives the cnp / theta-np of a presentation from the permanence rules.
/// Unknown when no rule chain applies. Throws FiniteTheta.
Verdict derive(const Space& space, const PropertyQuery& query);

/// Whether the space admits a continuous norm, where a rule decides it.
Verdict continuous_norm(const Space& space);

struct PsiVerdict {
  Verdict continuous;
  Verdict hypocontinuous;
};

/// Continuity of (gamma, v) -> gamma v from C^r_c(M) x E to C^r_c(M, E).
/// Throws CompactBase for compact M.
PsiVerdict psi_continuity(const BaseSpaceDesc& m, const Space& e);

/// Differentiability degree in N_0 or infinity.
struct Degree {
  std::uint32_t value = 0;
  bool infinite = false;

  static constexpr Degree inf() { return {0, true}; }
  static constexpr Degree of(std::uint32_t v) { return {v, false}; }
  std::string to_string() const;
  friend bool operator==(const Degree&, const Degree&) = default;
};

/// t <= r + s in N_0 u {infinity}.
bool degree_le_sum(Degree t, Degree r, Degree s);

enum class GroupClass { Finite, InfiniteDiscrete, InfiniteCompact, NonCompactNonDiscrete };

std::string to_string(GroupClass g);

struct ConvolutionSetting {
  GroupClass group = GroupClass::Finite;
  /// Used for infinite discrete groups.
  bool countable = true;
  /// Used for groups that are neither compact nor discrete.
  bool sigma_compact = true;
  Degree r, s, t;
  /// Whether the pointwise bilinear map b admits product estimates.
  Status b_product_estimates = Status::Holds;
};

struct ConvolutionVerdict {
  Verdict continuous;
  Verdict product_estimates;
};

/// Decision table for continuity and product estimates of test-function
/// convolution. Throws DegreeViolation when t > r + s.
ConvolutionVerdict classify_convolution(const ConvolutionSetting& setting);

}  // namespace lcx
