#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace affclust {

using Vec3d = std::array<double, 3>;
using Vec3f = std::array<float, 3>;
using Triangle = std::array<uint32_t, 3>;

constexpr int32_t kNoLabel = -1;        // vertex carries no annotation
constexpr int32_t kUnannotated = 0;     // instance id reserved for unlabeled points

struct Vertex {
  Vec3d position{0, 0, 0};
  Vec3f color{0.5f, 0.5f, 0.5f};
  Vec3f normal{0, 0, 0};
  int32_t semantic_class = kNoLabel;
  int32_t instance_id = kNoLabel;
};

// Unordered vertex-index pair, stored with a < b.
struct Edge {
  uint32_t a = 0;
  uint32_t b = 0;
  Edge() = default;
  Edge(uint32_t u, uint32_t v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Triangle mesh plus the undirected edge graph used for clustering.
// Vertices [0, original_vertex_count) come from the source scan; any
// vertices after that were added by densification.
struct Mesh {
  std::vector<Vertex> vertices;
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;  // sorted, unique, no self-loops
  size_t original_vertex_count = 0;
  std::vector<std::string> comments;  // passthrough PLY comments

  size_t vertex_count() const { return vertices.size(); }
  bool is_original(uint32_t v) const { return v < original_vertex_count; }

  // Rebuilds the edge set from triangle sides (dropping self-loops and
  // duplicates) and keeps any extra edges already present.
  void rebuild_edges();

  // Appends extra edges, then sorts and deduplicates.
  void add_edges(const std::vector<Edge>& extra);
};

// Per-vertex annotations, aligned to the original vertices of a mesh.
struct LabelSet {
  std::vector<int32_t> semantic_class;
  std::vector<int32_t> instance_id;

  size_t size() const { return semantic_class.size(); }
  size_t annotated_instance_count() const;
};

// Area-weighted vertex normals from face normals. Zero-area triangles do
// not contribute; vertices with no contribution get (0, 0, 1).
void compute_vertex_normals(Mesh& mesh);

// Copies labels onto the first labels.size() vertices. Throws
// ValidationError if labels.size() != mesh.original_vertex_count.
void attach_labels(Mesh& mesh, const LabelSet& labels);

// Reads labels back off the vertices (all of them, densified included).
LabelSet extract_labels(const Mesh& mesh);

}  // namespace affclust
