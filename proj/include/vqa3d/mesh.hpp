#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vqa3d/common.hpp"

namespace vqa3d {

// Category-level mesh with a per-vertex feature texture and labeled part
// vertex groups. Canonical frame: forward = -Y, left = +X, up = +Z, ground
// contact at z = 0. Immutable after construction.
struct CategoryMesh {
  int subtype_id = -1;
  int category_id = -1;
  int feature_dim = 0;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<float> texture;      // N x feature_dim, row-major, unit rows
  std::vector<int> vertex_part;    // global part id per vertex, -1 = body
  double footprint_radius = 0.0;   // max sqrt(x^2+y^2) over vertices
  double scale = 1.0;              // applied geometric scale

  const float* texture_row(int v) const { return texture.data() + size_t(v) * feature_dim; }
  int vertex_count() const { return int(vertices.size()); }
  int face_count() const { return int(faces.size()); }

  // Part ids present in this mesh, in the subtype's canonical part order.
  std::vector<int> part_ids() const;
  std::map<std::string, std::vector<int>> part_vertex_groups() const;

  void validate() const;  // throws Error naming the violated invariant
};

struct AssetConfig {
  uint64_t seed = 7;
  int feature_dim = 16;
  double shared_base_weight = 0.5;  // cross-shape feature correlation knob
};

// Procedural mesh for one subtype; deterministic in (subtype, config).
CategoryMesh build_subtype_mesh(int subtype_id, const AssetConfig& cfg);

// All 21 subtype meshes, indexed by subtype id.
class MeshLibrary {
 public:
  explicit MeshLibrary(const AssetConfig& cfg);
  const CategoryMesh& mesh(int subtype_id) const { return meshes_.at(subtype_id); }
  const CategoryMesh& scaled_mesh(int subtype_id, double scale) const;
  const AssetConfig& config() const { return cfg_; }

 private:
  AssetConfig cfg_;
  std::vector<CategoryMesh> meshes_;
  mutable std::map<std::pair<int, long long>, CategoryMesh> scaled_cache_;
};

CategoryMesh scale_mesh(const CategoryMesh& mesh, double s);

std::string mesh_to_json(const CategoryMesh& mesh);
CategoryMesh mesh_from_json(const std::string& text);

}  // namespace vqa3d
