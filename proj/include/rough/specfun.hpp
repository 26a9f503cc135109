#pragma once

// Hankel functions of the first kind for integer order, and the diagonal
// Dirichlet-to-Neumann blocks of the exterior problem outside a ball.

#include <Eigen/Core>
#include <vector>

#include "rough/common.hpp"

namespace rough {

inline constexpr int kMaxHankelOrder = 200;
inline constexpr double kMaxHankelArg = 1.0e3;

struct HankelRow {
  cplx z;
  std::vector<cplx> h;      // H^{(1)}_nu(z), nu = 0..nu_max
  std::vector<cplx> dh;     // d/dz H^{(1)}_nu(z)
  std::vector<double> err;  // rough relative error estimate per order
};

struct BesselRow {
  cplx z;
  std::vector<cplx> j;
  std::vector<cplx> y;
  std::vector<cplx> h1;
  std::vector<cplx> h2;
};

// Principal branch, z off the cut (-inf, 0].
HankelRow hankel_row(int nu_max, cplx z);
BesselRow bessel_row(int nu_max, cplx z);

cplx hankel1(int nu, cplx z);
cplx hankel1_prime(int nu, cplx z);
cplx besselj(int nu, cplx z);

// Normalisation A_nu used to keep the diagonal blocks O(1).
cplx a_norm(int nu, cplx k, double X);
cplx log_a_norm(int nu, cplx k, double X);

// Diagonal entries indexed by alpha + N for alpha = -N..N.
struct DiagOperators {
  int N = 0;
  cplx k;
  double X = 1.0;
  Eigen::VectorXcd n1;  // H_|a|(kX) / A_|a|
  Eigen::VectorXcd n2;  // k H'_|a|(kX) / A_|a|
  Eigen::VectorXd weight;  // max(|a|, 1)
};

DiagOperators diag_operators(int N, cplx k, double X);

struct HankelZero {
  cplx z;
  int iterations = 0;
  std::vector<cplx> trail;
};

// Newton iteration on H^{(1)}_m. Throws if |H_m| >= tol on exit.
cplx hankel_zero(int m, cplx guess, double tol = 1e-12);
HankelZero hankel_zero_trace(int m, cplx guess, double tol = 1e-12);

}  // namespace rough
