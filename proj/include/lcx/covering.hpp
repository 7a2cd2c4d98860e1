#pragma once

#include <optional>

#include "lcx/cardinal.hpp"

namespace lcx {

/// Description of a base space M (a manifold, or a paracompact locally
/// compact space) sufficient to determine its compact covering number.
struct BaseSpaceDesc {
  enum class Kind { Manifold, LocallyCompactParacompact };

  bool compact = false;
  /// Connected components (manifold) or sigma-compact pieces of a
  /// topological-sum decomposition. Read as 1 when absent.
  std::optional<Cardinal> components;
  /// |J| of a declared locally finite cover by relatively compact open sets.
  std::optional<Cardinal> cover_size;
  Kind kind = Kind::Manifold;
};

/// Compact covering number theta(M) of a non-compact M.
///
/// A declared cover size is returned as is; otherwise the result is
/// max(components, aleph0). When both are present they must agree.
/// Throws CompactSpace for compact M and InconsistentDescription when the
/// declarations contradict each other.
Cardinal theta(const BaseSpaceDesc& m);

}  // namespace lcx
