#pragma once

// Obstacles, their pixelations, boundary polygons and set distances.

#include <Eigen/Core>
#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "rough/common.hpp"

namespace rough {

using Point = Eigen::Vector2d;

// Closed polygon, no repeated last vertex.
struct Polygon {
  std::vector<Point> vertices;
};

double signed_area(const Polygon& p);
bool point_in_polygon(const Polygon& p, const Point& x);  // even-odd, boundary undefined

struct DiskParams {
  double radius = 0.5;
  Point center = Point::Zero();
};

struct KochParams {
  int level = 0;
  double scale = 0.5;  // circumradius of the level-0 triangle
  Point center = Point::Zero();
};

// Filled Julia set of z^2 + c, mapped by x = center + scale * z.
struct JuliaParams {
  cplx c = 0.0;
  int max_iter = 400;
  double bailout = 2.0;
  double scale = 0.5;
  Point center = Point::Zero();
};

// Binary image with row 0 at the top. Pixel (col, row) covers the square of
// side `pitch` whose lower-left corner is origin + pitch * (col, height-1-row).
struct Bitmap {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> inside;
  Point origin = Point::Zero();
  double pitch = 1.0;
};

struct PixelOracleParams {
  Bitmap bitmap;
};

enum class ObstacleKind { disk, koch, julia, pixel_oracle };

struct ObstacleSpec {
  std::variant<DiskParams, KochParams, JuliaParams, PixelOracleParams> params;
  ObstacleKind kind() const { return static_cast<ObstacleKind>(params.index()); }
};

inline constexpr int kKochLevelCap = 8;

// Throws geometry errors for malformed parameters.
void validate(const ObstacleSpec& spec);
// Upper bound for sup |x| over the obstacle.
double extent(const ObstacleSpec& spec);
// True when the obstacle lies in the open ball of radius X - 1.
bool fits_margin(const ObstacleSpec& spec, double X);

bool membership(const ObstacleSpec& spec, const Point& x);

Bitmap read_pgm(const std::string& path, const Point& origin, double pitch);
Bitmap read_pgm_text(const std::string& contents, const Point& origin, double pitch);

// Lattice points (i/n, j/n) of the obstacle.
struct PixelSet {
  int n = 1;
  std::vector<std::array<int, 2>> cells;  // sorted
};

PixelSet pixelate(const ObstacleSpec& spec, int n, double X, long long max_cells = 16'000'000);

// Boundary loops of the union of closed squares of side 1/n centred at the
// cells. Outer loops are counter-clockwise, holes clockwise. Loops touching
// only at a corner are kept separate.
std::vector<Polygon> trace_pixel_boundary(const PixelSet& cells);

Polygon disk_polygon(const DiskParams& d, int m);
Polygon koch_polygon(const KochParams& k);
// Corners X e^{2 pi i j / m}, j = 0..m-1.
Polygon ball_polygon(double X, int m);

struct DistanceReport {
  double value = 0.0;
  double truncation_bound = 0.0;
};

using PointSet = std::vector<cplx>;

DistanceReport hausdorff(const PointSet& a, const PointSet& b);
// sum_{k>=1} 2^{-k} min(1, sup_{|x|<k} |d(x,A) - d(x,B)|); the sup is sampled
// on a grid of the given pitch.
DistanceReport attouch_wets(const PointSet& a, const PointSet& b, int k_max = 30, double pitch = 0.01);

}  // namespace rough
