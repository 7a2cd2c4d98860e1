#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcx/cardinal.hpp"
#include "lcx/space.hpp"

namespace lcx {

/// Coordinate label -> weight. Labels index the coordinates of a sequence
/// model (1-based by default) or the points of a set M.
using WeightMap = std::map<std::int64_t, double>;

/// Immutable symbolic seminorm attached to a space presentation.
///
/// Constructors enforce positivity of every scale factor and weight and that
/// combined expressions live on the same space. Block nodes live on a direct
/// sum and hold one expression per listed block, each attached to that block.
class SeminormExpr {
 public:
  enum class Kind { Base, Scale, MaxOf, SumOf, PrefixSup, CkNorm, WeightedSup, BlockSum, BlockMax };

  static SeminormExpr base(Space space, std::string id);
  /// max{|x_1|, ..., |x_n|}.
  static SeminormExpr prefix_sup(Space space, std::uint64_t n);
  /// max of the sup norms of the derivatives of order 0..k.
  static SeminormExpr ck_norm(Space space, unsigned k);
  /// max over the support of v of v(m)|x_m|. Weights must be >= 0.
  static SeminormExpr weighted_sup(Space space, WeightMap weights);
  /// c * inner, c > 0. Collapses c == 1 and nested scalings.
  static SeminormExpr scale(double c, const SeminormExpr& inner);
  static SeminormExpr max_of(std::vector<SeminormExpr> terms);
  static SeminormExpr sum_of(std::vector<std::pair<double, SeminormExpr>> terms);
  /// x -> sum_i w_i p_i(x_i) on a direct sum.
  static SeminormExpr block_sum(Space direct_sum, std::vector<double> weights, std::vector<SeminormExpr> blocks);
  /// x -> max_i p_i(x_i) on a direct sum with countable index.
  static SeminormExpr block_max(Space direct_sum, std::vector<SeminormExpr> blocks);

  Kind kind() const;
  const Space& space() const;
  const std::string& id() const;
  /// PrefixSup n, CkNorm k.
  std::uint64_t order() const;
  /// Scale factor.
  double factor() const;
  const WeightMap& weights() const;
  /// Children of Scale (one), MaxOf, SumOf, BlockSum, BlockMax.
  std::span<const SeminormExpr> terms() const;
  /// Weights of SumOf / BlockSum, parallel to terms().
  std::span<const double> term_weights() const;

  std::string describe() const;

  friend bool operator==(const SeminormExpr& a, const SeminormExpr& b);

 private:
  struct Node;
  explicit SeminormExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(SeminormExpr::Kind kind);

/// Certificate that p <= constant * q pointwise.
struct DominationCert {
  SeminormExpr p;
  SeminormExpr q;
  double constant;
  std::string rule;
};

/// Sound, incomplete decision of p <= C q. Returns the least constant found
/// among the applicable rules, or nothing when no rule decides it.
///
/// Rule order (ties go to the earlier rule): reflexive, prefix-monotone,
/// ck-monotone, weighted-sup, scale-left, scale-right, max-left, sum-left,
/// max-right, sum-right, block.
///
/// Throws MismatchedSpace when p and q live on different presentations.
std::optional<DominationCert> dominates(const SeminormExpr& p, const SeminormExpr& q);

/// Exact weighted-sup normal form of an expression built from PrefixSup,
/// WeightedSup, Scale and MaxOf. Empty for anything else.
std::optional<WeightMap> weighted_normal_form(const SeminormExpr& e);

enum class BlockForm { Max, Sum };

/// Single seminorm on the direct sum of the blocks' spaces that restricts to
/// each block seminorm (times its weight for the sum form).
///
/// Throws UncountableIndex for the max form over an uncountable index.
SeminormExpr upper_bound_direct_sum(const std::vector<SeminormExpr>& family, Cardinal index,
                                    BlockForm form = BlockForm::Max, std::vector<double> weights = {});

}  // namespace lcx
