#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace lcx {

/// Three-valued outcome of comparing two symbolic cardinals.
enum class CardinalOrder { Less, Equal, Greater, Unknown };

/// Symbolic cardinal: a finite number, an aleph, or the continuum.
///
/// The continuum is kept apart from the alephs. Comparing it with aleph(k)
/// for k >= 1 depends on the continuum hypothesis and yields Unknown.
class Cardinal {
 public:
  enum class Kind : std::uint8_t { Finite, Aleph, Continuum };

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
  static constexpr Cardinal aleph(std::uint64_t k) { return Cardinal(Kind::Aleph, k); }
  static constexpr Cardinal aleph0() { return aleph(0); }
  static constexpr Cardinal continuum() { return Cardinal(Kind::Continuum, 0); }

  constexpr Kind kind() const { return kind_; }
  /// n for Finite(n), k for Aleph(k), 0 for the continuum.
  constexpr std::uint64_t index() const { return index_; }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_infinite() const { return !is_finite(); }
  /// Finite or aleph-null.
  constexpr bool is_countable() const {
    return kind_ == Kind::Finite || (kind_ == Kind::Aleph && index_ == 0);
  }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;

  std::string to_string() const;

 private:
  constexpr Cardinal(Kind kind, std::uint64_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::uint64_t index_;
};

CardinalOrder compare(const Cardinal& a, const Cardinal& b);

/// Larger of the two; throws IncomparableCardinals when compare() is Unknown.
Cardinal max(const Cardinal& a, const Cardinal& b);

/// a <= b, decided. False when the comparison is Unknown.
bool known_le(const Cardinal& a, const Cardinal& b);

std::string to_string(CardinalOrder order);

std::ostream& operator<<(std::ostream& os, const Cardinal& c);

}  // namespace lcx
