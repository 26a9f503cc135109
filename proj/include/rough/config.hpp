#pragma once

// Run configuration: TOML in, validated RunConfig out, canonical TOML back.

#include <optional>
#include <string>
#include <vector>

#include "rough/mesh.hpp"
#include "rough/ntd.hpp"
#include "rough/zerofind.hpp"

namespace rough {

inline const cplx kExactDisk{-0.838549208188362, -1.154799048234411};

struct ObstacleConfig {
  std::string kind = "disk";  // disk, koch, julia, bitmap
  double radius = 0.5;
  double center_x = 0, center_y = 0;
  int level = 3;
  double scale = 0.5;
  cplx c = 0.0;
  int max_iter = 400;
  double bailout = 2.0;
  std::string path;
  double origin_x = 0, origin_y = 0;
  double pitch = 0.01;

  bool operator==(const ObstacleConfig&) const = default;
};

enum class NMode { table, heuristic, fixed };

struct DiscretizationConfig {
  double h = 0.02;
  NMode n_mode = NMode::table;
  int N = 0;  // used when n_mode == fixed
  int N_big = 40;
  int J = 100;
  cplx k0 = kDefaultK0;

  bool operator==(const DiscretizationConfig&) const = default;
};

struct GeometryConfig {
  double X = 1.0;
  int pixel_n = 0;
  int interface_corners = 0;
  double min_angle_deg = 20.0;
  double quality_cap = 4.0;

  bool operator==(const GeometryConfig&) const = default;
};

struct RectConfig {
  double re_min = -3, re_max = 0, im_min = -2, im_max = -0.1;
  Rect rect() const { return {re_min, re_max, im_min, im_max}; }
  bool operator==(const RectConfig&) const = default;
};

struct ContourConfig {
  RectConfig rect;
  int n_re = 121, n_im = 77;
  bool operator==(const ContourConfig&) const = default;
};

struct FindConfig {
  std::vector<cplx> seeds;  // empty: minima of a coarse grid over contour.rect
  int n_re = 41, n_im = 27;
  double percentile = 0.1;
  double stop = 1e-12;
  double step_tol = 0;
  double dedupe = 1e-4;  // relative merge radius for refined resonances
  int max_iter = 200;
  bool reanchor = true;
  bool operator==(const FindConfig&) const = default;
};

struct CertifyConfig {
  int n = 4;
  std::optional<RectConfig> rect;
  std::string target = "det";  // det or hankel
  int order = 1;
  double scale = 2.0;
  int j_max = 40;
  long max_samples = 1L << 24;
  bool operator==(const CertifyConfig&) const = default;
};

struct ConvergeConfig {
  std::vector<double> h{0.08, 0.05, 0.02, 0.01};
  std::vector<int> N;  // empty: the practical schedule
  cplx k_init = kDefaultK0;
  cplx reference = kExactDisk;
  bool operator==(const ConvergeConfig&) const = default;
};

std::vector<double> default_julia_q();

struct SweepConfig {
  std::vector<double> q = default_julia_q();
  std::vector<int> levels{2, 3, 4, 5};
  std::vector<cplx> seeds{kDefaultK0};
  bool operator==(const SweepConfig&) const = default;
};

struct RunSection {
  std::string out = "out";
  bool cache = true;
  int threads = 1;
  bool operator==(const RunSection&) const = default;
};

struct RunConfig {
  ObstacleConfig obstacle;
  GeometryConfig geometry;
  DiscretizationConfig discretization;
  ContourConfig contour;
  FindConfig find;
  CertifyConfig certify;
  ConvergeConfig converge;
  SweepConfig sweep;
  RunSection run;
  std::vector<std::string> warnings;  // not part of equality

  bool operator==(const RunConfig& o) const {
    return obstacle == o.obstacle && geometry == o.geometry && discretization == o.discretization &&
           contour == o.contour && find == o.find && certify == o.certify && converge == o.converge &&
           sweep == o.sweep && run == o.run;
  }
};

RunConfig parse_config(const std::string& text, const std::string& source = "config");
RunConfig load_config(const std::string& path);
std::string emit_config(const RunConfig& c);
void validate(RunConfig& c);

// Obstacle for the config; bitmap paths are resolved against base_dir.
ObstacleSpec obstacle_spec(const ObstacleConfig& o, const std::string& base_dir = ".");
MeshOptions mesh_options(const RunConfig& c);

}  // namespace rough
