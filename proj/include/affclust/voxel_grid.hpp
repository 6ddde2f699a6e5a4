#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affclust/mesh.hpp"

namespace affclust {

// Voxel coordinates are packed 16 bits per axis into a uint64 key whose
// ordering matches lexicographic (x, y, z) order.
using VoxelKey = uint64_t;
using VoxelCoord = std::array<int32_t, 3>;

inline VoxelKey pack_voxel(int32_t x, int32_t y, int32_t z) {
  return (uint64_t(uint16_t(x)) << 32) | (uint64_t(uint16_t(y)) << 16) |
         uint64_t(uint16_t(z));
}
inline VoxelKey pack_voxel(const VoxelCoord& c) {
  return pack_voxel(c[0], c[1], c[2]);
}
inline VoxelCoord unpack_voxel(VoxelKey key) {
  return {int32_t((key >> 32) & 0xffff), int32_t((key >> 16) & 0xffff),
          int32_t(key & 0xffff)};
}

// 6-neighborhood in fixed direction order: -x,+x,-y,+y,-z,+z.
constexpr int kNumDirections = 6;
constexpr std::array<VoxelCoord, kNumDirections> kDirectionOffsets{
    VoxelCoord{-1, 0, 0}, VoxelCoord{1, 0, 0},  VoxelCoord{0, -1, 0},
    VoxelCoord{0, 1, 0},  VoxelCoord{0, 0, -1}, VoxelCoord{0, 0, 1}};
constexpr int opposite_direction(int dir) { return dir ^ 1; }

// Neighbor key in the given direction, or nullopt when it would leave
// [0, extent)^3.
std::optional<VoxelKey> neighbor_key(VoxelKey key, int dir, int32_t extent);

// Minimum point count for a node to occupy a voxel at scale s.
inline uint32_t occupancy_threshold(int scale) { return 1u << (2 * scale); }

struct GridSpec {
  double voxel_size = 0.02;             // meters
  int32_t extent = 4096;                // voxels per axis at scale 0
  int num_scales = 2;
  std::optional<Vec3d> origin;          // auto: min corner minus one voxel

  int32_t extent_at(int scale) const { return extent >> scale; }
  void validate() const;  // throws ValidationError on bad fields
};

// Points bucketed per scale into sorted (key -> point slice) levels.
// Immutable after construction.
class SparseVoxelGrid {
 public:
  struct Level {
    std::vector<VoxelKey> keys;       // sorted, unique
    std::vector<uint32_t> offsets;    // keys.size() + 1 entries
    std::vector<uint32_t> point_ids;  // grouped by key, ascending within
  };

  GridSpec spec;                       // origin resolved
  std::vector<Level> levels;           // one per scale
  std::vector<VoxelKey> point_keys0;   // scale-0 key per point

  size_t point_count() const { return point_keys0.size(); }
  size_t voxel_count(int scale) const { return levels[scale].keys.size(); }

  // Index of key in level `scale`, or npos.
  static constexpr size_t npos = size_t(-1);
  size_t find(int scale, VoxelKey key) const;

  std::span<const uint32_t> points_in(int scale, size_t voxel_index) const {
    const Level& lv = levels[scale];
    return {lv.point_ids.data() + lv.offsets[voxel_index],
            lv.point_ids.data() + lv.offsets[voxel_index + 1]};
  }

  VoxelKey key_at_scale(VoxelKey key0, int scale) const {
    VoxelCoord c = unpack_voxel(key0);
    return pack_voxel(c[0] >> scale, c[1] >> scale, c[2] >> scale);
  }
};

// Buckets every mesh point into one voxel per scale. With no explicit
// origin, the origin is the component-wise position minimum shifted down
// by one voxel. Throws ValidationError naming the axis when the scene
// does not fit the extent.
SparseVoxelGrid voxelize(const Mesh& mesh, const GridSpec& spec);

// Per-node voxel occupancy: (scale, key) -> number of the node's points
// in that voxel. Entries sorted by (scale, key); every stored count >= 1.
class OccupancyCounts {
 public:
  struct Entry {
    VoxelKey key;
    uint32_t count;
  };

  OccupancyCounts() = default;
  explicit OccupancyCounts(int num_scales) : scale_begin_(num_scales + 1, 0) {}

  int num_scales() const { return int(scale_begin_.size()) - 1; }
  std::span<const Entry> entries(int scale) const {
    return {entries_.data() + scale_begin_[scale],
            entries_.data() + scale_begin_[scale + 1]};
  }
  uint32_t count(int scale, VoxelKey key) const;
  bool occupies(int scale, VoxelKey key) const {
    return count(scale, key) >= occupancy_threshold(scale);
  }

  // Builders. append_scale must be called with ascending scales and
  // entries sorted by key.
  void append_scale(int scale, std::vector<Entry> sorted);
  size_t total_entries() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::vector<uint32_t> scale_begin_;
  friend OccupancyCounts merge_occupancy(const OccupancyCounts&,
                                         const OccupancyCounts&);
};

// Occupancy of a point set under a grid.
OccupancyCounts occupancy(std::span<const uint32_t> points,
                          const SparseVoxelGrid& grid);

// Element-wise sum; the occupancy of the union of two disjoint point sets.
OccupancyCounts merge_occupancy(const OccupancyCounts& a,
                                const OccupancyCounts& b);

// All (p, q) with p occupied by a, q occupied by b (>= 4^s points each)
// and p, q 6-adjacent. Enumerated in (a key, direction) order.
std::vector<std::pair<VoxelKey, VoxelKey>> neighbor_pairs(
    const OccupancyCounts& occ_a, const OccupancyCounts& occ_b, int scale,
    int32_t extent);

// Debug dump: one line per occupied voxel, "<scale> <i> <j> <k> <count>".
std::string format_grid_dump(const SparseVoxelGrid& grid);
void write_grid_dump(const std::string& path, const SparseVoxelGrid& grid);

}  // namespace affclust
