#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lcx/cardinal.hpp"

namespace lcx {

/// Immutable AST describing a locally convex space.
///
/// Leaves are either concrete (normed spaces, Frechet spaces given by a
/// seminorm sequence, finitely supported sequences) or flagged classes whose
/// neighbourhood behaviour is known (k_omega, DF, gDF). Inner nodes are the
/// constructions under which neighbourhood properties are inherited.
///
/// For a direct sum over an infinite index the listed blocks are the first
/// summands and the last listed block repeats for all remaining indices.
class Space {
 public:
  enum class Kind {
    Normed,
    FrechetSeq,
    DirectSum,
    Product,
    Subspace,
    Quotient,
    CountableDirectLimit,
    FinSupp,
    KOmega,
    DF,
    GDF,
    EllInftyTheta,
    RFinSuppUncountable,
  };

  static Space normed(std::string label = {});
  /// Metrizable space presented by a countable seminorm sequence.
  /// Normability is declared, never inferred.
  static Space frechet_seq(bool declared_normable, std::string label = {});
  static Space direct_sum(Cardinal index, std::vector<Space> blocks);
  static Space product(std::vector<Space> blocks);
  static Space subspace(Space of);
  static Space quotient(Space of);
  static Space countable_direct_limit(std::vector<Space> blocks);
  /// R^(N): finitely supported sequences, finest locally convex topology.
  static Space finsupp();
  static Space k_omega();
  static Space df();
  static Space gdf();
  /// Bounded functions on a set of cardinality > theta, topologized by sup
  /// seminorms over subsets of cardinality <= theta.
  static Space ell_infinity(Cardinal theta);
  /// R^(M) for an uncountable M, initial topology w.r.t. restrictions to
  /// countable subsets.
  static Space r_finsupp_uncountable(Cardinal size);

  Kind kind() const;
  const std::string& label() const;
  bool declared_normable() const;
  /// Index of a direct sum, theta of ell_infinity, |M| of R^(M).
  const Cardinal& cardinal() const;
  std::span<const Space> blocks() const;
  /// Block i of a direct sum, honouring the repeat-last convention.
  const Space& block(std::size_t i) const;
  /// Wrapped space of Subspace / Quotient.
  const Space& of() const;

  std::string describe() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Node;
  explicit Space(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(Space::Kind kind);

}  // namespace lcx
