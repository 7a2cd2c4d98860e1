#include "lcx/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcx/error.hpp"

namespace lcx {

struct SeminormExpr::Node {
  Kind kind;
  Space space;
  std::string id;
  std::uint64_t order = 0;
  double factor = 1.0;
  WeightMap weights;
  std::vector<SeminormExpr> terms;
  std::vector<double> term_weights;
};

namespace {

// PrefixSup(n) expands to n map entries in the weighted normal form.
constexpr std::uint64_t kMaxExpandedPrefix = std::uint64_t{1} << 20;

void require_positive(double c, const char* what) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::NonPositiveEntry, std::string(what) + " must be a positive finite real");
  }
}

void require_same_space(const std::vector<SeminormExpr>& terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "combination of zero seminorms");
  for (const auto& t : terms) {
    if (!(t.space() == terms.front().space())) {
      throw Error(ErrorCode::MismatchedSpace,
                  t.space().describe() + " vs " + terms.front().space().describe());
    }
  }
}

void require_blocks_fit(const Space& sum, const std::vector<SeminormExpr>& blocks) {
  if (sum.kind() != Space::Kind::DirectSum) {
    throw Error(ErrorCode::InvalidPresentation, "block seminorm on " + sum.describe());
  }
  if (blocks.empty()) throw Error(ErrorCode::InvalidArgument, "block seminorm without blocks");
  if (sum.cardinal().is_finite() && blocks.size() != sum.cardinal().index()) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(blocks.size()) + " block seminorms for " +
                                              sum.describe());
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!(blocks[i].space() == sum.block(i))) {
      throw Error(ErrorCode::MismatchedSpace, "block " + std::to_string(i) + " seminorm lives on " +
                                                  blocks[i].space().describe());
    }
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

SeminormExpr SeminormExpr::base(Space space, std::string id) {
  auto n = std::make_shared<Node>(Node{Kind::Base, std::move(space)});
  n->id = std::move(id);
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::prefix_sup(Space space, std::uint64_t order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "prefix sup needs n >= 1");
  auto n = std::make_shared<Node>(Node{Kind::PrefixSup, std::move(space)});
  n->order = order;
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::ck_norm(Space space, unsigned k) {
  auto n = std::make_shared<Node>(Node{Kind::CkNorm, std::move(space)});
  n->order = k;
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::weighted_sup(Space space, WeightMap weights) {
  WeightMap support;
  for (const auto& [label, w] : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::NegativeEntry, "weight at " + std::to_string(label));
    if (w > 0.0) support.emplace(label, w);
  }
  auto n = std::make_shared<Node>(Node{Kind::WeightedSup, std::move(space)});
  n->weights = std::move(support);
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::scale(double c, const SeminormExpr& inner) {
  require_positive(c, "scale factor");
  double total = c;
  const SeminormExpr* core = &inner;
  if (inner.kind() == Kind::Scale) {
    total *= inner.factor();
    core = &inner.node_->terms.front();
  }
  if (total == 1.0) return *core;
  auto n = std::make_shared<Node>(Node{Kind::Scale, core->space()});
  n->factor = total;
  n->terms = {*core};
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::max_of(std::vector<SeminormExpr> terms) {
  require_same_space(terms);
  auto n = std::make_shared<Node>(Node{Kind::MaxOf, terms.front().space()});
  n->terms = std::move(terms);
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::sum_of(std::vector<std::pair<double, SeminormExpr>> terms) {
  std::vector<SeminormExpr> exprs;
  std::vector<double> weights;
  for (auto& [w, e] : terms) {
    require_positive(w, "sum weight");
    weights.push_back(w);
    exprs.push_back(std::move(e));
  }
  require_same_space(exprs);
  auto n = std::make_shared<Node>(Node{Kind::SumOf, exprs.front().space()});
  n->terms = std::move(exprs);
  n->term_weights = std::move(weights);
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::block_sum(Space direct_sum, std::vector<double> weights,
                                     std::vector<SeminormExpr> blocks) {
  require_blocks_fit(direct_sum, blocks);
  if (weights.size() != blocks.size()) throw Error(ErrorCode::ShapeMismatch, "block weights vs blocks");
  for (double w : weights) require_positive(w, "block weight");
  auto n = std::make_shared<Node>(Node{Kind::BlockSum, std::move(direct_sum)});
  n->terms = std::move(blocks);
  n->term_weights = std::move(weights);
  return SeminormExpr(n);
}

SeminormExpr SeminormExpr::block_max(Space direct_sum, std::vector<SeminormExpr> blocks) {
  require_blocks_fit(direct_sum, blocks);
  if (!direct_sum.cardinal().is_countable()) {
    throw Error(ErrorCode::UncountableIndex, "block max over " + direct_sum.cardinal().to_string() + " blocks");
  }
  auto n = std::make_shared<Node>(Node{Kind::BlockMax, std::move(direct_sum)});
  n->terms = std::move(blocks);
  return SeminormExpr(n);
}

SeminormExpr::Kind SeminormExpr::kind() const { return node_->kind; }
const Space& SeminormExpr::space() const { return node_->space; }
const std::string& SeminormExpr::id() const { return node_->id; }
std::uint64_t SeminormExpr::order() const { return node_->order; }
double SeminormExpr::factor() const { return node_->factor; }
const WeightMap& SeminormExpr::weights() const { return node_->weights; }
std::span<const SeminormExpr> SeminormExpr::terms() const { return node_->terms; }
std::span<const double> SeminormExpr::term_weights() const { return node_->term_weights; }

std::string SeminormExpr::describe() const {
  std::ostringstream os;
  const auto& n = *node_;
  const auto list = [&](const char* name) {
    os << name << '(';
    for (std::size_t i = 0; i < n.terms.size(); ++i) {
      if (i) os << ", ";
      if (!n.term_weights.empty() && n.term_weights[i] != 1.0) os << fmt(n.term_weights[i]) << '*';
      os << n.terms[i].describe();
    }
    os << ')';
  };
  switch (n.kind) {
    case Kind::Base: os << n.id; break;
    case Kind::Scale: os << fmt(n.factor) << '*' << n.terms.front().describe(); break;
    case Kind::MaxOf: list("max"); break;
    case Kind::SumOf: list("sum"); break;
    case Kind::PrefixSup: os << "||.||_" << n.order; break;
    case Kind::CkNorm: os << "||.||_C" << n.order; break;
    case Kind::WeightedSup: {
      os << "p_v{";
      bool first = true;
      for (const auto& [label, w] : n.weights) {
        if (!first) os << ", ";
        first = false;
        os << label << ':' << fmt(w);
      }
      os << '}';
      break;
    }
    case Kind::BlockSum: list("blocksum"); break;
    case Kind::BlockMax: list("blockmax"); break;
  }
  return os.str();
}

bool operator==(const SeminormExpr& a, const SeminormExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.id == y.id && x.order == y.order && x.factor == y.factor &&
         x.weights == y.weights && x.term_weights == y.term_weights && x.terms == y.terms &&
         x.space == y.space;
}

std::string to_string(SeminormExpr::Kind kind) {
  using K = SeminormExpr::Kind;
  switch (kind) {
    case K::Base: return "base";
    case K::Scale: return "scale";
    case K::MaxOf: return "max-of";
    case K::SumOf: return "sum-of";
    case K::PrefixSup: return "prefix-sup";
    case K::CkNorm: return "ck-norm";
    case K::WeightedSup: return "weighted-sup";
    case K::BlockSum: return "block-sum";
    case K::BlockMax: return "block-max";
  }
  return {};
}

std::optional<WeightMap> weighted_normal_form(const SeminormExpr& e) {
  using K = SeminormExpr::Kind;
  switch (e.kind()) {
    case K::PrefixSup: {
      if (e.order() > kMaxExpandedPrefix) return std::nullopt;
      WeightMap w;
      for (std::uint64_t i = 1; i <= e.order(); ++i) w.emplace_hint(w.end(), static_cast<std::int64_t>(i), 1.0);
      return w;
    }
    case K::WeightedSup: return e.weights();
    case K::Scale: {
      auto w = weighted_normal_form(e.terms().front());
      if (!w) return std::nullopt;
      for (auto& [label, v] : *w) v *= e.factor();
      return w;
    }
    case K::MaxOf: {
      WeightMap acc;
      for (const auto& t : e.terms()) {
        auto w = weighted_normal_form(t);
        if (!w) return std::nullopt;
        for (const auto& [label, v] : *w) {
          auto [it, inserted] = acc.emplace(label, v);
          if (!inserted) it->second = std::max(it->second, v);
        }
      }
      return acc;
    }
    default: return std::nullopt;
  }
}

namespace {

struct Found {
  double constant;
  const char* rule;
};

std::optional<Found> dominate(const SeminormExpr& p, const SeminormExpr& q);

// Least constant C with max_m v(m)|x_m| <= C max_m w(m)|x_m|.
std::optional<double> weighted_ratio(const WeightMap& v, const WeightMap& w) {
  double c = 0.0;
  for (const auto& [label, weight] : v) {
    if (weight == 0.0) continue;
    auto it = w.find(label);
    if (it == w.end() || it->second == 0.0) return std::nullopt;
    c = std::max(c, weight / it->second);
  }
  return c;
}

std::optional<double> block_rule(const SeminormExpr& p, const SeminormExpr& q) {
  using K = SeminormExpr::Kind;
  const bool p_block = p.kind() == K::BlockSum || p.kind() == K::BlockMax;
  const bool q_block = q.kind() == K::BlockSum || q.kind() == K::BlockMax;
  if (!p_block || !q_block || p.terms().size() != q.terms().size()) return std::nullopt;
  const auto np = p.terms().size();
  std::vector<double> c(np);
  for (std::size_t i = 0; i < np; ++i) {
    auto f = dominate(p.terms()[i], q.terms()[i]);
    if (!f) return std::nullopt;
    c[i] = f->constant;
  }
  const auto pw = [&](std::size_t i) { return p.kind() == K::BlockSum ? p.term_weights()[i] : 1.0; };
  const auto qw = [&](std::size_t i) { return q.kind() == K::BlockSum ? q.term_weights()[i] : 1.0; };
  double result = 0.0;
  if (p.kind() == K::BlockSum && q.kind() == K::BlockMax) {
    // sum_i u_i p_i(x_i) <= (sum_i u_i c_i) max_i q_i(x_i)
    for (std::size_t i = 0; i < np; ++i) result += pw(i) * c[i];
  } else {
    for (std::size_t i = 0; i < np; ++i) result = std::max(result, pw(i) * c[i] / qw(i));
  }
  return result;
}

std::optional<Found> dominate(const SeminormExpr& p, const SeminormExpr& q) {
  using K = SeminormExpr::Kind;
  std::optional<Found> best;
  const auto offer = [&](std::optional<double> c, const char* rule) {
    if (c && (!best || *c < best->constant)) best = Found{*c, rule};
  };

  if (p == q) offer(1.0, "reflexive");
  if (p.kind() == K::PrefixSup && q.kind() == K::PrefixSup && p.order() <= q.order()) {
    offer(1.0, "prefix-monotone");
  }
  if (p.kind() == K::CkNorm && q.kind() == K::CkNorm && p.order() <= q.order()) offer(1.0, "ck-monotone");
  if (auto v = weighted_normal_form(p)) {
    if (auto w = weighted_normal_form(q)) offer(weighted_ratio(*v, *w), "weighted-sup");
  }
  if (p.kind() == K::Scale) {
    if (auto f = dominate(p.terms().front(), q)) offer(p.factor() * f->constant, "scale-left");
  }
  if (q.kind() == K::Scale) {
    if (auto f = dominate(p, q.terms().front())) offer(f->constant / q.factor(), "scale-right");
  }
  if (p.kind() == K::MaxOf || p.kind() == K::SumOf) {
    std::optional<double> acc = 0.0;
    for (std::size_t k = 0; k < p.terms().size() && acc; ++k) {
      auto f = dominate(p.terms()[k], q);
      if (!f) {
        acc.reset();
      } else if (p.kind() == K::MaxOf) {
        acc = std::max(*acc, f->constant);
      } else {
        acc = *acc + p.term_weights()[k] * f->constant;
      }
    }
    offer(acc, p.kind() == K::MaxOf ? "max-left" : "sum-left");
  }
  if (q.kind() == K::MaxOf || q.kind() == K::SumOf) {
    std::optional<double> acc;
    for (std::size_t k = 0; k < q.terms().size(); ++k) {
      if (auto f = dominate(p, q.terms()[k])) {
        const double c = q.kind() == K::MaxOf ? f->constant : f->constant / q.term_weights()[k];
        if (!acc || c < *acc) acc = c;
      }
    }
    offer(acc, q.kind() == K::MaxOf ? "max-right" : "sum-right");
  }
  offer(block_rule(p, q), "block");
  return best;
}

}  // namespace

std::optional<DominationCert> dominates(const SeminormExpr& p, const SeminormExpr& q) {
  if (!(p.space() == q.space())) {
    throw Error(ErrorCode::MismatchedSpace, p.space().describe() + " vs " + q.space().describe());
  }
  auto f = dominate(p, q);
  if (!f) return std::nullopt;
  return DominationCert{p, q, f->constant, f->rule};
}

SeminormExpr upper_bound_direct_sum(const std::vector<SeminormExpr>& family, Cardinal index, BlockForm form,
                                    std::vector<double> weights) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "empty block family");
  if (form == BlockForm::Max && !index.is_countable()) {
    throw Error(ErrorCode::UncountableIndex, "max form needs a countable index, got " + index.to_string());
  }
  std::vector<Space> blocks;
  blocks.reserve(family.size());
  for (const auto& p : family) blocks.push_back(p.space());
  Space sum = Space::direct_sum(index, std::move(blocks));
  if (form == BlockForm::Max) return SeminormExpr::block_max(std::move(sum), family);
  if (weights.empty()) weights.assign(family.size(), 1.0);
  return SeminormExpr::block_sum(std::move(sum), std::move(weights), family);
}

}  // namespace lcx
