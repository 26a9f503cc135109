#pragma once

// P1 finite elements on a TriMesh with homogeneous Dirichlet data on the
// obstacle and natural (Neumann) data on the interface.

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <memory>
#include <vector>

#include "rough/mesh.hpp"

namespace rough {

struct FemSystem {
  double X = 1.0;
  int N = 0;
  Eigen::SparseMatrix<double> K;
  Eigen::SparseMatrix<double> M;
  std::vector<int> dof_of_vertex;  // -1 for dirichlet vertices
  std::vector<int> vertex_of_dof;
  Eigen::MatrixXcd B;              // column alpha + N holds b_alpha

  int dofs() const { return int(K.rows()); }
  int column(int alpha) const { return alpha + N; }
};

FemSystem assemble(const TriMesh& t, int N);

// Local P1 matrices of one triangle.
Eigen::Matrix3d element_stiffness(const Point& a, const Point& b, const Point& c);
Eigen::Matrix3d element_mass(const Point& a, const Point& b, const Point& c);

// One sparse LU of K - k0^2 M, shared across right-hand sides.
class HelmholtzSolver {
 public:
  HelmholtzSolver(const FemSystem& sys, cplx k0);
  const FemSystem& system() const { return *sys_; }
  cplx k0() const { return k0_; }
  Eigen::VectorXcd solve(int alpha) const;
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const;
  Eigen::MatrixXcd solve_all() const { return solve(sys_->B); }
  const Eigen::SparseMatrix<cplx>& matrix() const { return A_; }

 private:
  const FemSystem* sys_;
  cplx k0_;
  Eigen::SparseMatrix<cplx> A_;
  std::shared_ptr<Eigen::SparseLU<Eigen::SparseMatrix<cplx>>> lu_;
};

Eigen::VectorXcd solve_helmholtz(const FemSystem& sys, cplx k0, int alpha);

struct EigenOptions {
  int dense_limit = 3000;
  int block = 4;
  double shift = -1.0;
  double tol = 1e-10;
  unsigned seed = 20240611u;
};

struct EigenPack {
  Eigen::VectorXd mu;        // ascending
  Eigen::MatrixXd w;         // dofs x J, M-orthonormal
  Eigen::MatrixXcd traces;   // J x (2N+1), traces(m, alpha + N) = b_alpha^T w_m
  int count() const { return int(mu.size()); }
};

EigenPack eig_lowest(const FemSystem& sys, int J, const EigenOptions& opt = {});

// rho(X) for rho'' + rho'/r + (k^2 - alpha^2/r^2) rho = 0, rho(a) = 0, rho'(X) = 1.
cplx disk_ntd_oracle(double a, double X, cplx k, int alpha);

}  // namespace rough
