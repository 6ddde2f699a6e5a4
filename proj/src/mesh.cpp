#include "affclust/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "affclust/error.hpp"

namespace affclust {

void Mesh::rebuild_edges() {
  std::vector<Edge> extra;
  extra.swap(edges);
  edges.reserve(triangles.size() * 3 + extra.size());
  for (const Triangle& t : triangles) {
    if (t[0] != t[1]) edges.emplace_back(t[0], t[1]);
    if (t[1] != t[2]) edges.emplace_back(t[1], t[2]);
    if (t[0] != t[2]) edges.emplace_back(t[0], t[2]);
  }
  edges.insert(edges.end(), extra.begin(), extra.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void Mesh::add_edges(const std::vector<Edge>& extra) {
  edges.insert(edges.end(), extra.begin(), extra.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

size_t LabelSet::annotated_instance_count() const {
  std::vector<int32_t> ids;
  for (int32_t id : instance_id)
    if (id != kUnannotated) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids.size();
}

void compute_vertex_normals(Mesh& mesh) {
  std::vector<Vec3d> acc(mesh.vertices.size(), Vec3d{0, 0, 0});
  for (const Triangle& t : mesh.triangles) {
    const Vec3d& a = mesh.vertices[t[0]].position;
    const Vec3d& b = mesh.vertices[t[1]].position;
    const Vec3d& c = mesh.vertices[t[2]].position;
    Vec3d u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    Vec3d v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    // Cross product magnitude is twice the area, so summing raw cross
    // products gives area weighting for free.
    Vec3d n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
    double len2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    if (len2 == 0.0) continue;  // degenerate: keep edges, skip normals
    for (uint32_t idx : t)
      for (int k = 0; k < 3; ++k) acc[idx][k] += n[k];
  }
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3d& n = acc[i];
    double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (len > 0.0) {
      mesh.vertices[i].normal = {float(n[0] / len), float(n[1] / len),
                                 float(n[2] / len)};
    } else {
      mesh.vertices[i].normal = {0.f, 0.f, 1.f};
    }
  }
}

void attach_labels(Mesh& mesh, const LabelSet& labels) {
  if (labels.size() != mesh.original_vertex_count ||
      labels.instance_id.size() != labels.semantic_class.size()) {
    throw ValidationError(
        "label count " + std::to_string(labels.size()) +
        " does not match original vertex count " +
        std::to_string(mesh.original_vertex_count));
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    mesh.vertices[i].semantic_class = labels.semantic_class[i];
    mesh.vertices[i].instance_id = labels.instance_id[i];
  }
}

LabelSet extract_labels(const Mesh& mesh) {
  LabelSet out;
  out.semantic_class.reserve(mesh.vertices.size());
  out.instance_id.reserve(mesh.vertices.size());
  for (const Vertex& v : mesh.vertices) {
    out.semantic_class.push_back(v.semantic_class);
    out.instance_id.push_back(v.instance_id == kNoLabel ? kUnannotated
                                                        : v.instance_id);
  }
  return out;
}

}  // namespace affclust
