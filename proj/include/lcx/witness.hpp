#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lcx/schedule.hpp"
#include "lcx/seminorm.hpp"

namespace lcx {

/// Families p_i (on E1) and q_j (on E2), truncated to finitely many indices,
/// claimed to satisfy p_ij(beta(x, y)) <= p_i(x) q_j(y). Index 0 is i = 1.
struct ProductEstimateWitness {
  std::vector<SeminormExpr> p_family;
  std::vector<SeminormExpr> q_family;
  std::vector<std::string> provenance;
};

template <typename T>
using Grid = std::vector<std::vector<T>>;

/// From certificates P_ij <= r_ij p and Q_ij <= s_ij q, where the caller
/// vouches for p_ij(beta(x, y)) <= P_ij(x) Q_ij(y), build p_i = a_i p and
/// q_j = b_j q. A zero constant is raised to 1. Throws MissingCert.
ProductEstimateWitness cnp_product_estimates(const Grid<std::optional<DominationCert>>& p_bound,
                                             const Grid<std::optional<DominationCert>>& q_bound);

/// Same, from the dominating seminorms and constant matrices directly.
ProductEstimateWitness cnp_product_estimates(const SeminormExpr& p, const SeminormExpr& q,
                                             const Eigen::MatrixXd& r, const Eigen::MatrixXd& s);

/// From p_ij <= C_ij P and P(beta(x, y)) <= p(x) q(y): p_i = d_i p,
/// q_j = d_j q with d from bisgaard_split. Rectangular C is padded with ones.
ProductEstimateWitness target_cnp_product_estimates(const SeminormExpr& P, const Eigen::MatrixXd& C,
                                                    const SeminormExpr& p, const SeminormExpr& q);

/// Dense C[i][j][sigma][tau], row-major.
class Tensor4 {
 public:
  Tensor4(std::size_t ni, std::size_t nj, std::size_t ns, std::size_t nt, double fill = 1.0)
      : ni_(ni), nj_(nj), ns_(ns), nt_(nt), data_(ni * nj * ns * nt, fill) {}

  double& operator()(std::size_t i, std::size_t j, std::size_t s, std::size_t t) {
    return data_[((i * nj_ + j) * ns_ + s) * nt_ + t];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t s, std::size_t t) const {
    return data_[((i * nj_ + j) * ns_ + s) * nt_ + t];
  }
  std::size_t ni() const { return ni_; }
  std::size_t nj() const { return nj_; }
  std::size_t ns() const { return ns_; }
  std::size_t nt() const { return nt_; }

 private:
  std::size_t ni_, nj_, ns_, nt_;
  std::vector<double> data_;
};

struct DirectSumWitness {
  /// P_sigma = sum_i d_i P_{i,sigma} on the direct sum of the E1 blocks.
  std::vector<SeminormExpr> p_family;
  /// Q_tau = sum_j d_j Q_{j,tau} on the direct sum of the E2 blocks.
  std::vector<SeminormExpr> q_family;
  /// u[i][sigma] = d_i and v[j][tau] = d_j.
  Eigen::VectorXd d;
  std::vector<std::string> provenance;
};

/// Combines blockwise estimates
///   P_{sigma,tau}(beta_ij(x, y)) <= C[i][j][sigma][tau] P_{i,sigma}(x) Q_{j,tau}(y)
/// into seminorms on the direct sums. p_blocks[i][sigma], q_blocks[j][tau].
/// Throws NonPositiveEntry, ShapeMismatch.
DirectSumWitness direct_sum_combine(const Tensor4& C, const Grid<SeminormExpr>& p_blocks,
                                    const Grid<SeminormExpr>& q_blocks);

/// Continuity certificate of a linear map for one seminorm:
/// p(lambda(x)) <= constant * source(x).
struct LinearCert {
  SeminormExpr source;
  double constant = 1.0;
};

/// Witness for Lambda o beta o (lambda1 x lambda2) from a witness for beta.
/// lambda1[i] certifies p_i o lambda1, lambda2[j] certifies q_j o lambda2, and
/// lambda_out[i][j] is C with p'_ij o Lambda <= C p_ij. The Lambda constants
/// are folded into the p-side by row maxima. Throws MissingCert.
ProductEstimateWitness transport(const ProductEstimateWitness& w, const std::vector<std::optional<LinearCert>>& lambda1,
                                 const std::vector<std::optional<LinearCert>>& lambda2,
                                 const Grid<std::optional<double>>& lambda_out);

/// Identity certificates for a family (constant 1, source = the seminorm).
std::vector<std::optional<LinearCert>> identity_certs(const std::vector<SeminormExpr>& family);

/// Lower certificates of an embedding Lambda: p_ij <= C_ij (p'_ij o Lambda).
struct EmbeddingCerts {
  bool embedding = false;
  Grid<std::optional<double>> constants;
};

/// Witness for beta from a witness for Lambda o beta when Lambda is an
/// embedding. Throws NotEmbedding, MissingCert.
ProductEstimateWitness pull_back(const ProductEstimateWitness& w, const EmbeddingCerts& lambda_out);

struct UpperBound {
  SeminormExpr bound;
  /// family[k] <= certs[k].constant * bound.
  std::vector<DominationCert> certs;
};

/// Upper bound of a sequence of weighted sups on R^(N) (or R^(C)) by the
/// diagonal weight U(m) = max(1, max_{k <= m} w_k(m)), m the rank of a label
/// in the union of the supports. All members must live on the same space.
UpperBound finsupp_upper_bound(const std::vector<SeminormExpr>& family);

/// For a target p = max_m v(m)|z_m| of pointwise multiplication on sequence
/// spaces, the pair (P, Q) with p(x y) <= P(x) Q(y): P = p and Q the sup over
/// the support of v.
std::pair<SeminormExpr, SeminormExpr> pointwise_factorization(const SeminormExpr& target);

/// Witness for pointwise multiplication on R^(M) against the targets
/// p_{v_ij}: restricts to the countable union C of the supports and runs the
/// cnp construction there. targets[i][j] is v_ij.
ProductEstimateWitness exenew_witness(const Grid<WeightMap>& targets, const Space& space);

/// Union of the supports of a family of weight maps, in increasing order.
std::vector<std::int64_t> support_union(const Grid<WeightMap>& targets);

}  // namespace lcx
