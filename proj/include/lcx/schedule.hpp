#pragma once

#include <algorithm>
#include <string>

#include <Eigen/Dense>

#include "lcx/error.hpp"

namespace lcx {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct ScheduleResult {
  VectorX<Scalar> a;
  VectorX<Scalar> b;
};

template <typename Scalar>
struct SplitResult {
  VectorX<Scalar> c;
  VectorX<Scalar> d;
};

template <typename Index>
struct ExponentSchedule {
  VectorX<Index> r;
  VectorX<Index> s;
};

namespace detail {

template <typename Derived>
void require_positive(const Eigen::MatrixBase<Derived>& m, const char* name) {
  // Written so that NaN entries are rejected too.
  if (!(m.array() > typename Derived::Scalar(0)).all()) {
    throw Error(ErrorCode::NonPositiveEntry, std::string(name) + " must have entries > 0");
  }
}

}  // namespace detail

/// Constants a_i, b_j >= 1 with a_i b_j >= r_ij s_ij for every (i, j).
///
/// a_i collects the entries on or left of the diagonal in row i, b_j those
/// strictly above the diagonal in column j. Row i of the output depends only
/// on the leading (i+1) x (i+1) block, so extending the input never changes
/// earlier constants. Rectangular inputs are accepted.
template <typename DerivedR, typename DerivedS>
ScheduleResult<typename DerivedR::Scalar> schedule_constants(const Eigen::MatrixBase<DerivedR>& r,
                                                             const Eigen::MatrixBase<DerivedS>& s) {
  using Scalar = typename DerivedR::Scalar;
  if (r.rows() != s.rows() || r.cols() != s.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "r and s must have the same shape");
  }
  detail::require_positive(r, "r");
  detail::require_positive(s, "s");

  const auto rs = (r.array() * s.array()).matrix().eval();
  ScheduleResult<Scalar> out{VectorX<Scalar>::Ones(r.rows()), VectorX<Scalar>::Ones(r.cols())};
  for (Eigen::Index i = 0; i < rs.rows(); ++i) {
    const Eigen::Index n = std::min<Eigen::Index>(i + 1, rs.cols());
    if (n > 0) out.a(i) = std::max(Scalar(1), rs.row(i).head(n).maxCoeff());
  }
  for (Eigen::Index j = 0; j < rs.cols(); ++j) {
    const Eigen::Index n = std::min<Eigen::Index>(j, rs.rows());
    if (n > 0) out.b(j) = std::max(Scalar(1), rs.col(j).head(n).maxCoeff());
  }
  return out;
}

/// d_i = max(1, C_ik, C_ki : k <= i) and c = 1/d, so that d_i d_j >= C_ij.
template <typename Derived>
SplitResult<typename Derived::Scalar> bisgaard_split(const Eigen::MatrixBase<Derived>& C) {
  using Scalar = typename Derived::Scalar;
  if (C.rows() != C.cols()) throw Error(ErrorCode::ShapeMismatch, "C must be square");
  detail::require_positive(C, "C");

  SplitResult<Scalar> out;
  out.d = VectorX<Scalar>::Ones(C.rows());
  for (Eigen::Index i = 0; i < C.rows(); ++i) {
    const Scalar row = C.row(i).head(i + 1).maxCoeff();
    const Scalar col = C.col(i).head(i + 1).maxCoeff();
    out.d(i) = std::max({Scalar(1), row, col});
  }
  out.c = out.d.cwiseInverse();
  return out;
}

/// r_i = max_{j <= i} t_ij and s_j = max_{i <= j} t_ij, so r_i + s_j >= t_ij.
template <typename Derived>
ExponentSchedule<typename Derived::Scalar> exponent_schedule(const Eigen::MatrixBase<Derived>& t) {
  using Index = typename Derived::Scalar;
  if (!(t.array() >= Index(0)).all()) throw Error(ErrorCode::NegativeEntry, "t must have entries >= 0");

  ExponentSchedule<Index> out{VectorX<Index>::Zero(t.rows()), VectorX<Index>::Zero(t.cols())};
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const Eigen::Index n = std::min<Eigen::Index>(i + 1, t.cols());
    if (n > 0) out.r(i) = t.row(i).head(n).maxCoeff();
  }
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    const Eigen::Index n = std::min<Eigen::Index>(j + 1, t.rows());
    if (n > 0) out.s(j) = t.col(j).head(n).maxCoeff();
  }
  return out;
}

}  // namespace lcx
