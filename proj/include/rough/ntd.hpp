#pragma once

// Spectral model of the truncated NtD matrix and the matrix T_n(k) whose
// determinant vanishes at resonances.

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <string>

#include "rough/common.hpp"
#include "rough/fem.hpp"
#include "rough/specfun.hpp"

namespace rough {

inline const cplx kDefaultK0{-1.0, -1.0};

struct SpectralModel {
  double X = 1.0;
  int N = 0;
  int J = 0;
  cplx k0 = kDefaultK0;
  Eigen::MatrixXcd ahat0;   // (alpha + N, beta + N) -> a_{alpha beta}(k0)
  Eigen::VectorXd mu;
  Eigen::MatrixXcd traces;  // J x (2N + 1)
  int d_n = 0;
  double h = 0.0;
};

// Assembly and eigenpairs are independent of k0, so re-anchoring a model
// costs one factorization and 2N + 1 solves.
class ModelFactory {
 public:
  ModelFactory(const TriMesh& mesh, int N, int J, const EigenOptions& eig = {});
  SpectralModel at(cplx k0) const;
  int dofs() const { return int(sys_->dofs()); }
  int N() const { return N_; }
  int J() const { return J_; }

 private:
  std::shared_ptr<const FemSystem> sys_;
  Eigen::VectorXd mu_;
  Eigen::MatrixXcd traces_;
  double X_ = 1.0, h_ = 0.0;
  int N_ = 0, J_ = 0;
};

SpectralModel build_model(const TriMesh& mesh, cplx k0, int N, int J, const EigenOptions& eig = {});

Eigen::MatrixXcd eval_a(const SpectralModel& model, cplx k);

// T from the diagonal blocks and an NtD matrix indexed as in SpectralModel.
// Column alpha is the input mode.
Eigen::MatrixXcd compose_t(const DiagOperators& d, const Eigen::MatrixXcd& a);

Eigen::MatrixXcd eval_t(const SpectralModel& model, cplx k);

struct LogDet {
  double log_abs = 0.0;
  double arg = 0.0;
};

template <class Derived>
LogDet logdet(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw Error(ErrorKind::ntd, "logdet of a non-square matrix");
  LogDet r;
  if (m.rows() == 0) return r;
  // exact power-of-two row scaling keeps complex pivot division in range
  Mat a = m;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double big = a.row(i).cwiseAbs().maxCoeff();
    if (big == 0) return {-std::numeric_limits<double>::infinity(), 0.0};
    int e = 0;
    std::frexp(big, &e);
    --e;  // row maximum lands in [1, 2)
    a.row(i) *= Scalar(std::ldexp(1.0, -e));
    r.log_abs += e * std::log(2.0);
  }
  const Eigen::PartialPivLU<Mat> lu{a};
  const Mat& u = lu.matrixLU();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const Scalar p = u(i, i);
    if (p == Scalar(0)) return {-std::numeric_limits<double>::infinity(), 0.0};
    r.log_abs += std::log(std::abs(p));
    r.arg += std::arg(p);
  }
  if (lu.permutationP().determinant() < 0) r.arg += pi;
  r.arg = std::remainder(r.arg, 2 * pi);
  if (r.arg <= -pi) r.arg += 2 * pi;
  return r;
}

struct OptimalN {
  int N = 0;
  bool interior_minimum = false;
  Eigen::VectorXd profile;  // |T_aa - 1| averaged over +-a, index a = 0..N_big
};

OptimalN optimal_N(const TriMesh& mesh, cplx k_probe, int N_big);

// N from the profile alone; exposed for tests.
OptimalN optimal_N_from_profile(const Eigen::VectorXd& profile);

enum class ScheduleStyle { theoretical, practical };

struct Schedule {
  int N = 0;
  double h = 0.0;
  long long J = 0;  // n^3 overflows int quickly
};

Schedule param_schedule(int n, ScheduleStyle style);
int practical_N(double h);
inline constexpr int kPracticalJ = 100;

double corrector_tail_bound(const SpectralModel& model, cplx k, int from, int alpha, int beta);

std::string model_to_json(const SpectralModel& model);
SpectralModel model_from_json(const std::string& text);

}  // namespace rough
