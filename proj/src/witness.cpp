#include "lcx/witness.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "lcx/error.hpp"

namespace lcx {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string vec(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << num(v(i));
  os << ')';
  return os.str();
}

template <typename T>
std::size_t grid_cols(const Grid<T>& g, const char* name) {
  if (g.empty()) throw Error(ErrorCode::ShapeMismatch, std::string(name) + " is empty");
  const std::size_t n = g.front().size();
  for (const auto& row : g) {
    if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, std::string(name) + " is ragged");
  }
  return n;
}

// Extracts the constants of a certificate grid, all dominated by the same seminorm.
std::pair<SeminormExpr, Eigen::MatrixXd> cert_matrix(const Grid<std::optional<DominationCert>>& g, const char* name) {
  const std::size_t cols = grid_cols(g, name);
  std::optional<SeminormExpr> top;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& cert = g[i][j];
      if (!cert) {
        throw Error(ErrorCode::MissingCert, std::string(name) + " lacks a certificate at (" + std::to_string(i + 1) +
                                                ", " + std::to_string(j + 1) + ")");
      }
      if (!top) top = cert->q;
      if (!(cert->q == *top)) {
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " certificates bound different seminorms");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cert->constant;
    }
  }
  return {*top, m};
}

Eigen::MatrixXd pad_square(const Eigen::MatrixXd& c) {
  const Eigen::Index n = std::max(c.rows(), c.cols());
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(n, n);
  out.topLeftCorner(c.rows(), c.cols()) = c;
  return out;
}

}  // namespace

ProductEstimateWitness cnp_product_estimates(const SeminormExpr& p, const SeminormExpr& q, const Eigen::MatrixXd& r,
                                             const Eigen::MatrixXd& s) {
  if (r.size() == 0) throw Error(ErrorCode::ShapeMismatch, "empty constant matrix");
  if ((r.array() < 0).any() || (s.array() < 0).any()) {
    throw Error(ErrorCode::NegativeEntry, "domination constants must be >= 0");
  }
  // P <= 0 * p implies P <= 1 * p; the schedule needs positive entries.
  const Eigen::MatrixXd rr = (r.array() == 0).select(1.0, r);
  const Eigen::MatrixXd ss = (s.array() == 0).select(1.0, s);
  const auto sched = schedule_constants(rr, ss);

  ProductEstimateWitness w;
  for (Eigen::Index i = 0; i < sched.a.size(); ++i) w.p_family.push_back(SeminormExpr::scale(sched.a(i), p));
  for (Eigen::Index j = 0; j < sched.b.size(); ++j) w.q_family.push_back(SeminormExpr::scale(sched.b(j), q));
  w.provenance = {
      "assumed: p_ij(beta(x,y)) <= P_ij(x) Q_ij(y)",
      "certified: P_ij <= r_ij " + p.describe() + ", Q_ij <= s_ij " + q.describe(),
      "schedule: a_i = max(1, r_ik s_ik : k <= i) = " + vec(sched.a),
      "schedule: b_j = max(1, r_kj s_kj : k < j) = " + vec(sched.b),
      "p_ij(beta(x,y)) <= r_ij s_ij p(x) q(y) <= (a_i p)(x) (b_j q)(y)",
  };
  return w;
}

ProductEstimateWitness cnp_product_estimates(const Grid<std::optional<DominationCert>>& p_bound,
                                             const Grid<std::optional<DominationCert>>& q_bound) {
  auto [p, r] = cert_matrix(p_bound, "P_bound");
  auto [q, s] = cert_matrix(q_bound, "Q_bound");
  if (r.rows() != s.rows() || r.cols() != s.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "P_bound and Q_bound differ in shape");
  }
  auto w = cnp_product_estimates(p, q, r, s);
  std::set<std::string> rules;
  for (const auto& row : p_bound) for (const auto& c : row) rules.insert(c->rule);
  for (const auto& row : q_bound) for (const auto& c : row) rules.insert(c->rule);
  std::string used;
  for (const auto& rule : rules) used += (used.empty() ? "" : ", ") + rule;
  w.provenance.insert(w.provenance.begin() + 2, "domination rules: " + used);
  return w;
}

ProductEstimateWitness target_cnp_product_estimates(const SeminormExpr& P, const Eigen::MatrixXd& C,
                                                    const SeminormExpr& p, const SeminormExpr& q) {
  if (C.size() == 0) throw Error(ErrorCode::ShapeMismatch, "empty constant matrix");
  detail::require_positive(C, "C");
  const auto split = bisgaard_split(pad_square(C));

  ProductEstimateWitness w;
  for (Eigen::Index i = 0; i < C.rows(); ++i) w.p_family.push_back(SeminormExpr::scale(split.d(i), p));
  for (Eigen::Index j = 0; j < C.cols(); ++j) w.q_family.push_back(SeminormExpr::scale(split.d(j), q));
  w.provenance = {
      "certified: p_ij <= C_ij " + P.describe(),
      "assumed: " + P.describe() + "(beta(x,y)) <= " + p.describe() + "(x) " + q.describe() + "(y)",
      "split: d_i = max(1, C_ik, C_ki : k <= i) = " + vec(split.d) + ", c_i = 1/d_i",
      "p_ij(beta(x,y)) <= C_ij P(beta(x,y)) <= C_ij p(x) q(y) <= (p(x)/c_i) (q(y)/c_j) = p_i(x) q_j(y)",
  };
  return w;
}

DirectSumWitness direct_sum_combine(const Tensor4& C, const Grid<SeminormExpr>& p_blocks,
                                    const Grid<SeminormExpr>& q_blocks) {
  const std::size_t ni = C.ni(), nj = C.nj(), ns = C.ns(), nt = C.nt();
  if (ni == 0 || nj == 0 || ns == 0 || nt == 0) throw Error(ErrorCode::ShapeMismatch, "empty 4-index array");
  if (p_blocks.size() != ni || grid_cols(p_blocks, "P_blocks") != ns) {
    throw Error(ErrorCode::ShapeMismatch, "P_blocks must be " + std::to_string(ni) + " x " + std::to_string(ns));
  }
  if (q_blocks.size() != nj || grid_cols(q_blocks, "Q_blocks") != nt) {
    throw Error(ErrorCode::ShapeMismatch, "Q_blocks must be " + std::to_string(nj) + " x " + std::to_string(nt));
  }

  Eigen::MatrixXd D(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(nj));
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      double m = 0.0;
      for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t t = 0; t < nt; ++t) {
          const double c = C(i, j, s, t);
          if (!(c > 0)) throw Error(ErrorCode::NonPositiveEntry, "C must have entries > 0");
          m = std::max(m, c);
        }
      }
      D(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m;
    }
  }
  const auto split = bisgaard_split(pad_square(D));

  DirectSumWitness out;
  out.d = split.d;
  const auto side = [&](const Grid<SeminormExpr>& blocks, std::size_t n, std::size_t m) {
    std::vector<Space> spaces;
    for (std::size_t i = 0; i < n; ++i) spaces.push_back(blocks[i].front().space());
    const Space sum = Space::direct_sum(Cardinal::finite(n), spaces);
    const std::vector<double> weights(split.d.data(), split.d.data() + n);
    std::vector<SeminormExpr> family;
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<SeminormExpr> column;
      for (std::size_t i = 0; i < n; ++i) column.push_back(blocks[i][s]);
      family.push_back(SeminormExpr::block_sum(sum, weights, std::move(column)));
    }
    return family;
  };
  out.p_family = side(p_blocks, ni, ns);
  out.q_family = side(q_blocks, nj, nt);
  out.provenance = {
      "assumed: P_{sigma,tau}(beta_ij(x,y)) <= C_{i,j,sigma,tau} P_{i,sigma}(x) Q_{j,tau}(y)",
      "collapse: D_ij = max_{sigma,tau} C_{i,j,sigma,tau}",
      "split: d = " + vec(split.d) + ", u_{i,sigma} = d_i, v_{j,tau} = d_j",
      "P_{sigma,tau}(beta(x,y)) <= sum_ij C P_{i,sigma}(x_i) Q_{j,tau}(y_j) <= "
      "(sum_i d_i P_{i,sigma}(x_i)) (sum_j d_j Q_{j,tau}(y_j))",
  };
  return out;
}

std::vector<std::optional<LinearCert>> identity_certs(const std::vector<SeminormExpr>& family) {
  std::vector<std::optional<LinearCert>> out;
  for (const auto& p : family) out.push_back(LinearCert{p, 1.0});
  return out;
}

namespace {

std::vector<double> row_max(const Grid<std::optional<double>>& g, std::size_t rows, std::size_t cols,
                            const char* name) {
  if (g.size() != rows) throw Error(ErrorCode::MissingCert, std::string(name) + " has the wrong number of rows");
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (g[i].size() != cols) throw Error(ErrorCode::MissingCert, std::string(name) + " has the wrong number of columns");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!g[i][j]) {
        throw Error(ErrorCode::MissingCert, std::string(name) + " lacks a certificate at (" + std::to_string(i + 1) +
                                                ", " + std::to_string(j + 1) + ")");
      }
      if (*g[i][j] < 0) throw Error(ErrorCode::NegativeEntry, std::string(name) + " constants must be >= 0");
      out[i] = std::max(out[i], *g[i][j]);
    }
  }
  return out;
}

}  // namespace

ProductEstimateWitness transport(const ProductEstimateWitness& w, const std::vector<std::optional<LinearCert>>& lambda1,
                                 const std::vector<std::optional<LinearCert>>& lambda2,
                                 const Grid<std::optional<double>>& lambda_out) {
  const std::size_t ni = w.p_family.size(), nj = w.q_family.size();
  if (lambda1.size() != ni || lambda2.size() != nj) {
    throw Error(ErrorCode::MissingCert, "one linear-map certificate per witness seminorm is required");
  }
  const auto lam = row_max(lambda_out, ni, nj, "Lambda");

  ProductEstimateWitness out;
  for (std::size_t i = 0; i < ni; ++i) {
    if (!lambda1[i]) throw Error(ErrorCode::MissingCert, "lambda1 lacks a certificate for p_" + std::to_string(i + 1));
    const double c = std::max(lam[i] * lambda1[i]->constant, 0.0);
    out.p_family.push_back(c > 0 ? SeminormExpr::scale(c, lambda1[i]->source) : lambda1[i]->source);
  }
  for (std::size_t j = 0; j < nj; ++j) {
    if (!lambda2[j]) throw Error(ErrorCode::MissingCert, "lambda2 lacks a certificate for q_" + std::to_string(j + 1));
    const double c = lambda2[j]->constant;
    out.q_family.push_back(c > 0 ? SeminormExpr::scale(c, lambda2[j]->source) : lambda2[j]->source);
  }
  out.provenance = w.provenance;
  out.provenance.push_back("transport: p'_ij(Lambda beta(lambda1 x, lambda2 y)) <= L_ij p_i(lambda1 x) q_j(lambda2 y)");
  out.provenance.push_back("transport: p_i o lambda1 <= c1_i p'_i, q_j o lambda2 <= c2_j q'_j");
  out.provenance.push_back("transport: constants folded into the p-side, p''_i = (max_j L_ij) c1_i p'_i");
  return out;
}

ProductEstimateWitness pull_back(const ProductEstimateWitness& w, const EmbeddingCerts& lambda_out) {
  if (!lambda_out.embedding) throw Error(ErrorCode::NotEmbedding, "Lambda is not flagged as an embedding");
  const std::size_t ni = w.p_family.size(), nj = w.q_family.size();
  const auto lam = row_max(lambda_out.constants, ni, nj, "Lambda");

  ProductEstimateWitness out;
  for (std::size_t i = 0; i < ni; ++i) {
    out.p_family.push_back(lam[i] > 0 ? SeminormExpr::scale(lam[i], w.p_family[i]) : w.p_family[i]);
  }
  out.q_family = w.q_family;
  out.provenance = w.provenance;
  out.provenance.push_back("pull-back: p_ij <= C_ij p'_ij o Lambda (Lambda an embedding)");
  out.provenance.push_back("pull-back: p_ij(beta(x,y)) <= C_ij p'_ij(Lambda beta(x,y)) <= (max_j C_ij) p'_i(x) q'_j(y)");
  return out;
}

UpperBound finsupp_upper_bound(const std::vector<SeminormExpr>& family) {
  if (family.empty()) throw Error(ErrorCode::InvalidArgument, "empty seminorm family");
  std::vector<WeightMap> maps;
  std::set<std::int64_t> labels;
  for (const auto& p : family) {
    auto w = weighted_normal_form(p);
    if (!w) throw Error(ErrorCode::InvalidArgument, "not a weighted sup: " + p.describe());
    if (!(p.space() == family.front().space())) {
      throw Error(ErrorCode::MismatchedSpace, "family members live on different spaces");
    }
    for (const auto& [label, weight] : *w) labels.insert(label);
    maps.push_back(std::move(*w));
  }

  WeightMap u;
  std::size_t rank = 0;
  for (const auto label : labels) {
    ++rank;
    double m = 1.0;
    for (std::size_t k = 0; k < std::min(rank, maps.size()); ++k) {
      auto it = maps[k].find(label);
      if (it != maps[k].end()) m = std::max(m, it->second);
    }
    u[label] = m;
  }

  UpperBound out{SeminormExpr::weighted_sup(family.front().space(), std::move(u)), {}};
  for (const auto& p : family) {
    auto cert = dominates(p, out.bound);
    if (!cert) throw Error(ErrorCode::InvalidArgument, "no domination certificate for " + p.describe());
    out.certs.push_back(std::move(*cert));
  }
  return out;
}

std::pair<SeminormExpr, SeminormExpr> pointwise_factorization(const SeminormExpr& target) {
  auto v = weighted_normal_form(target);
  if (!v) throw Error(ErrorCode::InvalidArgument, "not a weighted sup: " + target.describe());
  WeightMap ones;
  for (const auto& [label, weight] : *v) {
    if (weight > 0) ones[label] = 1.0;
  }
  return {SeminormExpr::weighted_sup(target.space(), *v), SeminormExpr::weighted_sup(target.space(), ones)};
}

std::vector<std::int64_t> support_union(const Grid<WeightMap>& targets) {
  std::set<std::int64_t> labels;
  for (const auto& row : targets) {
    for (const auto& v : row) {
      for (const auto& [label, weight] : v) {
        if (weight < 0) throw Error(ErrorCode::NegativeEntry, "weights must be >= 0");
        if (weight > 0) labels.insert(label);
      }
    }
  }
  return {labels.begin(), labels.end()};
}

ProductEstimateWitness exenew_witness(const Grid<WeightMap>& targets, const Space& space) {
  const std::size_t ni = targets.size();
  const std::size_t nj = grid_cols(targets, "targets");
  const auto support = support_union(targets);

  // Enumerate (i, j) along anti-diagonals so every pair has a finite position.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t diag = 0; diag + 1 < ni + nj; ++diag) {
    for (std::size_t i = 0; i <= diag; ++i) {
      const std::size_t j = diag - i;
      if (i < ni && j < nj) order.emplace_back(i, j);
    }
  }
  std::vector<SeminormExpr> big_p, big_q;
  for (const auto& [i, j] : order) {
    auto [P, Q] = pointwise_factorization(SeminormExpr::weighted_sup(space, targets[i][j]));
    big_p.push_back(P);
    big_q.push_back(Q);
  }
  const auto up = finsupp_upper_bound(big_p);
  const auto uq = finsupp_upper_bound(big_q);

  Eigen::MatrixXd r(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(nj));
  Eigen::MatrixXd s(r.rows(), r.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [i, j] = order[k];
    r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = up.certs[k].constant;
    s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = uq.certs[k].constant;
  }
  auto w = cnp_product_estimates(up.bound, uq.bound, r, s);

  std::ostringstream c;
  c << '{';
  for (std::size_t k = 0; k < support.size(); ++k) c << (k ? ", " : "") << support[k];
  c << '}';
  w.provenance.insert(w.provenance.begin(),
                      {"support union C = " + c.str() + " (countable), restrict to R^(C)",
                       "assumed via pointwise factorization: p_v(x y) <= p_v(x) p_{1_supp v}(y)",
                       "cnp of R^(C): diagonal upper bounds " + up.bound.describe() + ", " + uq.bound.describe()});
  return w;
}

}  // namespace lcx
