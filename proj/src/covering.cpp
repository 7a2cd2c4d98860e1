#include "lcx/covering.hpp"

#include "lcx/error.hpp"

namespace lcx {

Cardinal theta(const BaseSpaceDesc& m) {
  if (m.compact) throw Error(ErrorCode::CompactSpace, "the compact covering number is only used for non-compact M");
  if (m.components == Cardinal::finite(0)) {
    throw Error(ErrorCode::InconsistentDescription, "a non-compact space has at least one component");
  }
  const Cardinal from_components = max(m.components.value_or(Cardinal::finite(1)), Cardinal::aleph0());
  if (!m.cover_size) return from_components;

  const Cardinal& j = *m.cover_size;
  if (j.kind() == Cardinal::Kind::Continuum) {
    throw Error(ErrorCode::InconsistentDescription, "cover size must be finite or an aleph");
  }
  // A finite locally finite cover by relatively compact sets would make M compact.
  if (j.is_finite()) {
    throw Error(ErrorCode::InconsistentDescription,
                "finite relatively compact cover " + j.to_string() + " of a non-compact space");
  }
  if (m.components && compare(from_components, j) != CardinalOrder::Equal) {
    throw Error(ErrorCode::InconsistentDescription, "cover size " + j.to_string() + " but " +
                                                        m.components->to_string() + " components");
  }
  return j;
}

}  // namespace lcx
