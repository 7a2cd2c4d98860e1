#include "lcx/cardinal.hpp"

#include <ostream>

#include "lcx/error.hpp"

namespace lcx {

namespace {

CardinalOrder order_of(std::uint64_t a, std::uint64_t b) {
  if (a < b) return CardinalOrder::Less;
  if (a > b) return CardinalOrder::Greater;
  return CardinalOrder::Equal;
}

CardinalOrder flip(CardinalOrder o) {
  switch (o) {
    case CardinalOrder::Less: return CardinalOrder::Greater;
    case CardinalOrder::Greater: return CardinalOrder::Less;
    default: return o;
  }
}

}  // namespace

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(index_);
    case Kind::Aleph: return "aleph" + std::to_string(index_);
    case Kind::Continuum: return "continuum";
  }
  return {};
}

CardinalOrder compare(const Cardinal& a, const Cardinal& b) {
  using K = Cardinal::Kind;
  if (a.kind() == b.kind()) {
    if (a.kind() == K::Continuum) return CardinalOrder::Equal;
    return order_of(a.index(), b.index());
  }
  if (a.kind() == K::Finite) return CardinalOrder::Less;
  if (b.kind() == K::Finite) return CardinalOrder::Greater;
  // One aleph, one continuum.
  if (a.kind() == K::Aleph) {
    return a.index() == 0 ? CardinalOrder::Less : CardinalOrder::Unknown;
  }
  return flip(compare(b, a));
}

Cardinal max(const Cardinal& a, const Cardinal& b) {
  switch (compare(a, b)) {
    case CardinalOrder::Less: return b;
    case CardinalOrder::Equal:
    case CardinalOrder::Greater: return a;
    case CardinalOrder::Unknown: break;
  }
  throw Error(ErrorCode::IncomparableCardinals, a.to_string() + " vs " + b.to_string());
}

bool known_le(const Cardinal& a, const Cardinal& b) {
  const auto o = compare(a, b);
  return o == CardinalOrder::Less || o == CardinalOrder::Equal;
}

std::string to_string(CardinalOrder order) {
  switch (order) {
    case CardinalOrder::Less: return "Less";
    case CardinalOrder::Equal: return "Equal";
    case CardinalOrder::Greater: return "Greater";
    case CardinalOrder::Unknown: return "Unknown";
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Cardinal& c) { return os << c.to_string(); }

}  // namespace lcx
