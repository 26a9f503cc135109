#pragma once

// Resonances as zeros of g(k) = det T_n(k): contour fields, damped Newton
// with k0 re-anchoring, and certified boxes by the argument principle.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rough/ntd.hpp"

namespace rough {

using Function = std::function<cplx(cplx)>;

struct Rect {
  double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
};

void validate_rect(const Rect& r);

cplx det_t(const SpectralModel& model, cplx k);

struct ContourGrid {
  Rect rect;
  int n_re = 0, n_im = 0;
  std::vector<double> values;   // index j * n_re + i, i along Re
  std::vector<std::uint8_t> ok;  // 0 where the node evaluation failed
  int N = 0, J = 0;
  double h = 0;
  cplx k0;

  cplx node(int i, int j) const;
  double at(int i, int j) const { return values[std::size_t(j) * n_re + i]; }
};

ContourGrid contour_grid(const SpectralModel& model, const Rect& rect, int n_re, int n_im, int threads = 1);
ContourGrid contour_grid(const std::function<double(cplx)>& field, const Rect& rect, int n_re, int n_im,
                         int threads = 1);
std::string grid_csv(const ContourGrid& g);

// Local minima deeper than their 8 neighbours by `depth` in log_abs.
std::vector<cplx> grid_minima(const ContourGrid& g, double depth = 1.0);

struct MinimizeOptions {
  double stop = 1e-12;  // on |g|
  // also stop once the Newton step |g/g'| is below step_tol (1 + |k|); off
  // by default. Needed where |det T| carries a huge analytic factor and
  // the absolute test cannot be met in floating point.
  double step_tol = 0;
  int max_iter = 200;
  double fd_rel = 1e-6;
  double reflect_im = -1e-6;
  int max_reflect = 2;
};

struct ResonanceResult {
  cplx k;
  double log_abs = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<cplx> trail;
};

ResonanceResult minimize(const Function& g, cplx k_init, const MinimizeOptions& opt = {});
ResonanceResult minimize(const SpectralModel& model, cplx k_init, const MinimizeOptions& opt = {});

// Builds the evaluator for refinement level `level` anchored at k0.
using EvaluatorBuilder = std::function<Function(std::size_t level, cplx k0)>;

struct AnchoredRun {
  cplx first;                          // level 0 result before re-anchoring
  std::vector<cplx> anchors;           // k0 of the model behind levels[l]
  std::vector<ResonanceResult> levels;
  bool complete = false;
  std::string failure;
};

AnchoredRun anchored_refinement(std::size_t levels, cplx k0_init, const EvaluatorBuilder& build,
                                const MinimizeOptions& opt = {});

struct Box {
  double re0 = 0, re1 = 0, im0 = 0, im1 = 0;

  double width() const { return re1 - re0; }
  double height() const { return im1 - im0; }
  double perimeter() const { return 2 * (width() + height()); }
  double diameter() const;
  bool contains(cplx z) const { return z.real() >= re0 && z.real() <= re1 && z.imag() >= im0 && z.imag() <= im1; }
  double distance(cplx z) const;
  Box expanded(double d) const { return {re0 - d, re1 + d, im0 - d, im1 + d}; }
};

// g with derivative and a bound on |g| + |g'| + |g''| over a box.
struct Analytic {
  Function g;
  Function dg;
  std::function<double(const Box&)> bound;
  std::string bound_kind;
};

Analytic affine_analytic(cplx z0);
Analytic hankel_analytic(int order, double scale);  // H_order(k / scale)
Analytic det_analytic(const SpectralModel& model);

// 2 sup(|g| + |g'| + |g''|) over a grid of the box with the given pitch.
double sampled_bound(const Function& g, const Function& dg, const Function& d2g, const Box& b, double pitch);
// Cauchy estimates from 2 sup|g| on the box enlarged by delta.
double cauchy_bound(const Function& g, const Box& b, double delta);

enum class BoxDecision { no_zero, zero, inconclusive };
const char* to_string(BoxDecision d);

struct BoxRecord {
  Box box;
  BoxDecision decision = BoxDecision::inconclusive;
  int j = 0;
  double L = 0, C = 0, D = 0;
  cplx I;
  long samples = 0;
};

struct CertifyOptions {
  int j_max = 40;
  long max_samples = 1L << 24;
};

BoxRecord certify_box(const Analytic& f, const Box& b, int n, const CertifyOptions& opt = {});

struct CertifiedRegion {
  int n = 0;
  Rect region;
  std::vector<Box> boxes;  // kept: a zero lies within 2^-n
  std::vector<BoxRecord> records;
  int inconclusive = 0;
  bool complete = false;
};

// Tiles B_n = {2^-n <= -Im k <= 2^n, |Re k| <= 2^n}, clipped to the region,
// with boxes of side 2^-(n+1).
CertifiedRegion zero_boxes(const Analytic& f, int n, const std::optional<Rect>& region = std::nullopt,
                           const CertifyOptions& opt = {}, int threads = 1);

PointSet box_points(const std::vector<Box>& boxes, double pitch);

}  // namespace rough
