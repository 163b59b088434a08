#include "devgauss/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace devgauss {

std::vector<Vec2> SampleGrid::params() const {
  std::vector<Vec2> out;
  out.reserve(count());
  for (int iu = 0; iu < Lu; ++iu)
    for (int iv = 0; iv < Lv; ++iv) out.emplace_back(us[iu], vs[iv]);
  return out;
}

SampleGrid make_grid(int Lu, int Lv) {
  if (Lu < 2 || Lv < 2) throw ArgumentError("sample counts must be >= 2");
  SampleGrid g;
  g.Lu = Lu;
  g.Lv = Lv;
  g.us.resize(Lu);
  g.vs.resize(Lv);
  for (int i = 0; i < Lu; ++i)
    g.us[i] = static_cast<Scalar>(i) / static_cast<Scalar>(Lu - 1);
  for (int i = 0; i < Lv; ++i)
    g.vs[i] = static_cast<Scalar>(i) / static_cast<Scalar>(Lv - 1);
  return g;
}

int patch_count_1d(int samples, int size, int overlap) {
  const int stride = size - overlap;
  if (samples == size) return 1;
  return (samples - size + stride - 1) / stride + 1;  // ceil + 1
}

std::vector<Patch> group_overlapping(const SampleGrid& grid, int size_u,
                                     int size_v, int overlap_u,
                                     int overlap_v) {
  if (overlap_u < 1 || overlap_v < 1 || size_u <= overlap_u ||
      size_v <= overlap_v)
    throw ArgumentError("patch grouping requires size > overlap >= 1");
  if (size_u > grid.Lu || size_v > grid.Lv)
    throw ArgumentError("patch larger than sample grid");

  const int pu = patch_count_1d(grid.Lu, size_u, overlap_u);
  const int pv = patch_count_1d(grid.Lv, size_v, overlap_v);
  const int stride_u = size_u - overlap_u;
  const int stride_v = size_v - overlap_v;

  std::vector<Patch> patches;
  patches.reserve(pu * pv);
  for (int l = 0; l < pu; ++l) {
    const int su = std::min(l * stride_u, grid.Lu - size_u);
    for (int m = 0; m < pv; ++m) {
      const int sv = std::min(m * stride_v, grid.Lv - size_v);
      Patch patch;
      patch.id = static_cast<int>(patches.size());
      patch.sample_ids.reserve(size_u * size_v);
      for (int i = 0; i < size_u; ++i)
        for (int j = 0; j < size_v; ++j)
          patch.sample_ids.push_back(grid.id(su + i, sv + j));
      patches.push_back(std::move(patch));
    }
  }
  return patches;
}

PanelSampling group_by_panel(const SurfaceModel& model, int per_u, int per_v) {
  if (model.kind != SurfaceKind::PanelGrid)
    throw ArgumentError("per-panel grouping requires a panel-grid surface");
  if (per_u < 1 || per_v < 1)
    throw ArgumentError("per-panel sample counts must be >= 1");

  PanelSampling out;
  out.params.reserve(model.panel_count() * per_u * per_v);
  out.patches.reserve(model.panel_count());
  for (int r = 0; r < model.panel_count(); ++r) {
    const auto [lo, hi] = model.panel_domain(r);
    Patch patch;
    patch.id = r;
    patch.sample_ids.reserve(per_u * per_v);
    for (int i = 0; i < per_u; ++i) {
      const Scalar fu = static_cast<Scalar>(i + 1) / (per_u + 1);
      const Scalar u = lo.x() + fu * (hi.x() - lo.x());
      for (int j = 0; j < per_v; ++j) {
        const Scalar fv = static_cast<Scalar>(j + 1) / (per_v + 1);
        const Scalar v = lo.y() + fv * (hi.y() - lo.y());
        patch.sample_ids.push_back(static_cast<int>(out.params.size()));
        out.params.emplace_back(u, v);
      }
    }
    out.patches.push_back(std::move(patch));
  }
  return out;
}

}  // namespace devgauss
