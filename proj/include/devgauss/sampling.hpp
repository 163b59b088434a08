#pragma once

#include <optional>
#include <vector>

#include "devgauss/bspline.hpp"
#include "devgauss/types.hpp"

namespace devgauss {

/// Uniform parameter-space lattice, endpoints included, row-major ids
/// (id = iu * Lv + iv).
struct SampleGrid {
  int Lu = 0, Lv = 0;
  std::vector<Scalar> us, vs;

  int count() const { return Lu * Lv; }
  int id(int iu, int iv) const { return iu * Lv + iv; }
  Vec2 param(int id) const { return Vec2(us[id / Lv], vs[id % Lv]); }
  std::vector<Vec2> params() const;
};

SampleGrid make_grid(int Lu, int Lv);

/// A group of samples sharing one target plane v.x + d = 0, and in rotational
/// mode an axis moment. d_fixed pins d to d_target for the whole optimization.
struct Patch {
  int id = 0;
  std::vector<int> sample_ids;

  Vec3 plane_normal = Vec3::UnitZ();
  Scalar plane_d = 0.0;
  std::optional<Vec3> axis_moment;
  std::optional<Scalar> d_target;
  bool d_fixed = false;
  bool rotational = false;
  bool ambiguous_init = false;
};

/// Overlapping rectangular patches with stride = size - overlap; boundary
/// patches are shifted inward so every sample is covered.
std::vector<Patch> group_overlapping(const SampleGrid& grid, int size_u,
                                     int size_v, int overlap_u, int overlap_v);

/// Number of patches per direction for the stride formula above.
int patch_count_1d(int samples, int size, int overlap);

/// Per-panel sampling: one patch per panel, samples on a per_u x per_v
/// lattice strictly interior to the panel's parameter rectangle.
struct PanelSampling {
  std::vector<Vec2> params;
  std::vector<Patch> patches;
};

PanelSampling group_by_panel(const SurfaceModel& model, int per_u, int per_v);

}  // namespace devgauss
