#pragma once

#include <array>
#include <string>
#include <vector>

namespace monodim {

struct MeshComponentInfo {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  int genus = 0;
};

/// Closed, oriented, edge-manifold triangle mesh. Geometry is carried per face
/// as squared corner-opposite edge lengths, so a mesh may come from embedded
/// vertex positions (OFF files) or be specified intrinsically (e.g. an exactly
/// flat torus, which admits no smooth isometric embedding in R^3).
class Mesh {
 public:
  /// Embedded mesh; squared lengths are derived from the positions.
  static Mesh from_vertices_and_faces(std::vector<std::array<double, 3>> vertices,
                                      std::vector<std::array<int, 3>> faces);

  /// Intrinsic mesh: sq_lengths[f][c] is the squared length of the edge of
  /// face f opposite its corner c.
  static Mesh from_face_edge_lengths(int vertex_count, std::vector<std::array<int, 3>> faces,
                                     std::vector<std::array<double, 3>> sq_lengths);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::vector<std::array<double, 3>>& squared_lengths() const { return sq_lengths_; }
  /// Embedded positions; empty for intrinsic meshes.
  const std::vector<std::array<double, 3>>& vertices() const { return vertices_; }

  int edge_count() const { return edge_count_; }
  int euler_characteristic() const { return vertex_count_ - edge_count_ + int(faces_.size()); }
  int connected_components() const { return int(components_.size()); }
  const std::vector<MeshComponentInfo>& component_info() const { return components_; }
  /// Genus, defined for connected meshes only.
  int genus() const;
  /// Component index of each vertex.
  const std::vector<int>& vertex_component() const { return vertex_component_; }

 private:
  Mesh() = default;
  void validate_and_index();

  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<std::array<double, 3>> vertices_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::array<double, 3>> sq_lengths_;
  std::vector<MeshComponentInfo> components_;
  std::vector<int> vertex_component_;
};

/// Parses an ASCII OFF file ("OFF" header, counts line "V F E", V vertex
/// lines, F face lines "3 i j k" with zero-based indices). '#' comments and
/// blank lines are skipped. Throws input_error with a line number on parse
/// failures and on non-manifold / boundary / misoriented edges.
Mesh load_mesh(const std::string& path);

/// Writes the embedded mesh as ASCII OFF.
void write_off(const Mesh& mesh, const std::string& path);

}  // namespace monodim
