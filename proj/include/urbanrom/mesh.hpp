#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace urbanrom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class BoundaryTag : std::uint8_t { Inflow = 1, NoSlip = 2, Outflow = 3 };

std::string_view to_string(BoundaryTag tag);
BoundaryTag parse_boundary_tag(std::string_view text);

struct BoundaryEdge {
  int a = 0;
  int b = 0;
  BoundaryTag tag = BoundaryTag::NoSlip;
};

using Triangle = std::array<int, 3>;

// Triangulated 2D domain with tagged boundary. Immutable once constructed;
// the constructor enforces every structural invariant.
class Mesh {
 public:
  // characteristic_length <= 0 selects the total inflow-boundary length.
  Mesh(std::vector<Point> vertices, std::vector<Triangle> triangles, std::vector<BoundaryEdge> boundary,
       double characteristic_length = 0.0, bool enclosed = false);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<BoundaryEdge>& boundary() const { return boundary_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  double characteristic_length() const { return characteristic_length_; }
  bool enclosed() const { return enclosed_; }

  double triangle_area(int t) const;
  double area() const;
  double tagged_length(BoundaryTag tag) const;
  int count_tag(BoundaryTag tag) const;

  // Closed vertex loops of the boundary; the loop with the largest enclosed
  // area is the outer one and comes first, the rest are holes.
  std::vector<std::vector<int>> boundary_loops() const;
  int num_holes() const { return static_cast<int>(boundary_loops().size()) - 1; }
  int num_edges() const;

  std::uint64_t hash() const;

 private:
  std::vector<Point> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<BoundaryEdge> boundary_;
  double characteristic_length_;
  bool enclosed_;
};

enum class MeshFormat { Native, Gmsh2 };

Mesh load_mesh(const std::string& path, MeshFormat format = MeshFormat::Native);
Mesh parse_mesh(std::string_view text, MeshFormat format = MeshFormat::Native);
std::string format_mesh(const Mesh& mesh);
void save_mesh(const Mesh& mesh, const std::string& path);

enum class Side { South, East, North, West };

struct UrbanLayout {
  double width = 1.0;
  double height = 1.0;
  int cells_per_street = 2;
  Side inflow_side = Side::South;
  // Whole outer boundary tagged Inflow (two-parameter, direction-dependent flow).
  bool enclosed = false;
  // <= 0 picks the inflow length (open) or the building-region diameter (enclosed).
  double characteristic_length = 0.0;
};

// Rectangle with a block_rows x block_cols grid of rectangular buildings.
// Each block has pitch width/cols x height/rows; the building inside it is
// inset by street_width/2 on every side. refine_level applies uniform
// midpoint refinement that many times.
Mesh synth_urban_mesh(int block_rows, int block_cols, double street_width, int refine_level,
                      const UrbanLayout& layout = {});

struct RectangleTags {
  BoundaryTag south = BoundaryTag::NoSlip;
  BoundaryTag east = BoundaryTag::Outflow;
  BoundaryTag north = BoundaryTag::NoSlip;
  BoundaryTag west = BoundaryTag::Inflow;
};

// nx x ny grid of squares, each split along the (+1,+1) diagonal.
Mesh rectangle_mesh(int nx, int ny, double width, double height, const RectangleTags& tags = {},
                    double characteristic_length = 0.0, bool enclosed = false);

Mesh refine_uniform(const Mesh& mesh);

// Either a mesh file or the synthetic urban generator.
struct MeshSpec {
  std::string path;  // empty selects the generator
  MeshFormat format = MeshFormat::Native;
  int block_rows = 2;
  int block_cols = 3;
  double street_width = 50.0;
  int refine_level = 0;
  UrbanLayout layout{300.0, 300.0, 6};
};

Mesh build_mesh(const MeshSpec& spec);

}  // namespace urbanrom
