#pragma once

// P1 meshes of the truncated exterior domain between an obstacle and the
// interface polygon inscribed in the circle of radius X.

#include <Eigen/Core>
#include <string>
#include <vector>

#include "rough/geometry.hpp"

namespace rough {

enum class VertexTag : char { interior = 'i', dirichlet = 'd', interface = 'g' };

struct InterfaceEdge {
  int a, b;                  // mesh vertices, counter-clockwise along the interface
  int corner_a, corner_b;    // chord corners
};

struct TriMesh {
  double X = 1.0;
  int corners = 0;               // corners of the interface polygon
  Eigen::Matrix2Xd vertices;
  Eigen::Matrix3Xi triangles;    // counter-clockwise
  std::vector<VertexTag> tags;
  std::vector<InterfaceEdge> interface_edges;

  int num_vertices() const { return int(vertices.cols()); }
  int num_triangles() const { return int(triangles.cols()); }
  Point corner(int j) const;
  double corner_angle(int j) const { return 2.0 * pi * j / corners; }
};

struct MeshOptions {
  double min_angle_deg = 20.0;
  double quality_cap = 4.0;       // largest admissible C_theta
  double lattice_factor = 0.9;    // seed pitch relative to h_target
  int interface_corners = 0;      // 0 picks max(16, ceil(2 pi X / h_target))
  int pixel_n = 0;                // pixelation for julia and bitmap obstacles, 0 picks ceil(1 / h_target)
  size_t max_vertices = 4'000'000;
};

int default_interface_corners(double X, double h_target);

TriMesh build_mesh(const ObstacleSpec& spec, double X, double h_target, const MeshOptions& opt = {});
// Obstacle given by its boundary loops (outer loops counter-clockwise).
TriMesh build_mesh(const std::vector<Polygon>& obstacle, double X, double h_target, const MeshOptions& opt = {});

struct MeshQuality {
  double c_theta = 0.0;       // max over triangles and edges of max(|e|/sqrt|T|, sqrt|T|/|e|)
  double h = 0.0;             // largest triangle diameter
  double min_angle_deg = 0.0;
  int worst_triangle = -1;
  int free_dofs = 0;          // d_n, vertices not tagged dirichlet
};

MeshQuality mesh_quality(const TriMesh& t);

// Linear interpolant of e_alpha = (2 pi X)^{-1/2} e^{i alpha theta} along each
// chord, and its load vector b_alpha[i] = int_Gamma pihat(e_alpha) phi_i.
struct BoundaryBasisPairing {
  int alpha = 0;
  std::vector<int> vertices;  // interface vertices
  Eigen::VectorXcd values;    // pihat(e_alpha) at those vertices
  Eigen::VectorXcd load;      // length num_vertices()
};

BoundaryBasisPairing boundary_pairing(const TriMesh& t, int alpha);

std::string export_mesh(const TriMesh& t);
TriMesh import_mesh(const std::string& text);
void write_mesh(const TriMesh& t, const std::string& path);
TriMesh read_mesh(const std::string& path);

}  // namespace rough
