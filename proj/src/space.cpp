#include "lcx/space.hpp"

#include <sstream>

#include "lcx/error.hpp"

namespace lcx {

struct Space::Node {
  Kind kind;
  std::string label;
  bool normable = false;
  Cardinal card = Cardinal::finite(0);
  std::vector<Space> children;
};

Space Space::normed(std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Normed;
  n->label = std::move(label);
  n->normable = true;
  return Space(n);
}

Space Space::frechet_seq(bool declared_normable, std::string label) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FrechetSeq;
  n->label = std::move(label);
  n->normable = declared_normable;
  return Space(n);
}

Space Space::direct_sum(Cardinal index, std::vector<Space> blocks) {
  if (index.kind() == Cardinal::Kind::Continuum) {
    throw Error(ErrorCode::InvalidPresentation, "direct sum index must be finite or an aleph");
  }
  if (index == Cardinal::finite(0)) {
    throw Error(ErrorCode::InvalidPresentation, "direct sum over an empty index");
  }
  if (blocks.empty()) {
    throw Error(ErrorCode::InvalidPresentation, "direct sum needs at least one block");
  }
  if (index.is_finite() && blocks.size() != 1 && blocks.size() != index.index()) {
    throw Error(ErrorCode::InvalidPresentation,
                "finite direct sum lists " + std::to_string(blocks.size()) + " blocks for index " +
                    index.to_string());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::DirectSum;
  n->card = index;
  n->children = std::move(blocks);
  return Space(n);
}

Space Space::product(std::vector<Space> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidPresentation, "product needs at least one factor");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(blocks);
  return Space(n);
}

Space Space::subspace(Space of) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Subspace;
  n->children = {std::move(of)};
  return Space(n);
}

Space Space::quotient(Space of) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quotient;
  n->children = {std::move(of)};
  return Space(n);
}

Space Space::countable_direct_limit(std::vector<Space> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidPresentation, "direct limit needs at least one step");
  auto n = std::make_shared<Node>();
  n->kind = Kind::CountableDirectLimit;
  n->children = std::move(blocks);
  return Space(n);
}

Space Space::finsupp() { return Space(std::make_shared<Node>(Node{Kind::FinSupp})); }
Space Space::k_omega() { return Space(std::make_shared<Node>(Node{Kind::KOmega})); }
Space Space::df() { return Space(std::make_shared<Node>(Node{Kind::DF})); }
Space Space::gdf() { return Space(std::make_shared<Node>(Node{Kind::GDF})); }

Space Space::ell_infinity(Cardinal theta) {
  if (theta.is_finite()) throw Error(ErrorCode::InvalidPresentation, "ell_infinity needs an infinite theta");
  auto n = std::make_shared<Node>();
  n->kind = Kind::EllInftyTheta;
  n->card = theta;
  return Space(n);
}

Space Space::r_finsupp_uncountable(Cardinal size) {
  if (size.is_countable()) {
    throw Error(ErrorCode::InvalidPresentation, "R^(M) needs an uncountable M, got " + size.to_string());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::RFinSuppUncountable;
  n->card = size;
  return Space(n);
}

Space::Kind Space::kind() const { return node_->kind; }
const std::string& Space::label() const { return node_->label; }
bool Space::declared_normable() const { return node_->normable; }
const Cardinal& Space::cardinal() const { return node_->card; }
std::span<const Space> Space::blocks() const { return node_->children; }

const Space& Space::block(std::size_t i) const {
  const auto& c = node_->children;
  if (c.empty()) throw Error(ErrorCode::InvalidPresentation, describe() + " has no blocks");
  if (node_->kind == Kind::DirectSum && node_->card.is_finite() && i >= node_->card.index()) {
    throw Error(ErrorCode::IndexBeyondTruncation, "block " + std::to_string(i) + " of " + describe());
  }
  return i < c.size() ? c[i] : c.back();
}

const Space& Space::of() const {
  if (node_->kind != Kind::Subspace && node_->kind != Kind::Quotient) {
    throw Error(ErrorCode::InvalidPresentation, describe() + " does not wrap a space");
  }
  return node_->children.front();
}

std::string Space::describe() const {
  std::ostringstream os;
  const auto list = [&](const char* name) {
    os << name << '(';
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
      if (i) os << ", ";
      os << node_->children[i].describe();
    }
    os << ')';
  };
  switch (node_->kind) {
    case Kind::Normed:
      os << "normed";
      if (!node_->label.empty()) os << ' ' << node_->label;
      break;
    case Kind::FrechetSeq:
      os << (node_->normable ? "frechet[normable]" : "frechet[non-normable]");
      if (!node_->label.empty()) os << ' ' << node_->label;
      break;
    case Kind::DirectSum:
      os << "sum[" << node_->card << "]";
      list("");
      break;
    case Kind::Product: list("product"); break;
    case Kind::Subspace: list("subspace"); break;
    case Kind::Quotient: list("quotient"); break;
    case Kind::CountableDirectLimit: list("limit"); break;
    case Kind::FinSupp: os << "R^(N)"; break;
    case Kind::KOmega: os << "k_omega"; break;
    case Kind::DF: os << "DF"; break;
    case Kind::GDF: os << "gDF"; break;
    case Kind::EllInftyTheta: os << "l^inf[" << node_->card << "]"; break;
    case Kind::RFinSuppUncountable: os << "R^(M)[|M|=" << node_->card << "]"; break;
  }
  return os.str();
}

bool operator==(const Space& a, const Space& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.label == y.label && x.normable == y.normable && x.card == y.card &&
         x.children == y.children;
}

std::string to_string(Space::Kind kind) {
  switch (kind) {
    case Space::Kind::Normed: return "normed";
    case Space::Kind::FrechetSeq: return "frechet-seq";
    case Space::Kind::DirectSum: return "direct-sum";
    case Space::Kind::Product: return "product";
    case Space::Kind::Subspace: return "subspace";
    case Space::Kind::Quotient: return "quotient";
    case Space::Kind::CountableDirectLimit: return "countable-direct-limit";
    case Space::Kind::FinSupp: return "finsupp";
    case Space::Kind::KOmega: return "k-omega";
    case Space::Kind::DF: return "df";
    case Space::Kind::GDF: return "gdf";
    case Space::Kind::EllInftyTheta: return "ell-infinity-theta";
    case Space::Kind::RFinSuppUncountable: return "r-finsupp-uncountable";
  }
  return {};
}

}  // namespace lcx
