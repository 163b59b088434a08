#include "devgauss/bspline.hpp"

#include <algorithm>
#include <cmath>

#include "devgauss/util.hpp"

namespace devgauss {

KnotVector::KnotVector(std::vector<Scalar> knots) : knots_(std::move(knots)) {
  const int n = static_cast<int>(knots_.size());
  if (n < 8) throw ArgumentError("knot vector needs at least 8 entries");
  for (int i = 0; i + 1 < n; ++i)
    if (!(knots_[i] <= knots_[i + 1]))
      throw ArgumentError("knot vector must be nondecreasing");
  if (knots_[0] != knots_[3] || knots_[n - 4] != knots_[n - 1])
    throw ArgumentError("knot vector must be clamped (cubic)");
  if (knots_[3] != 0.0 || knots_[n - 4] != 1.0)
    throw ArgumentError("knot domain must be [0,1]");
  // Interior multiplicity at most 3 and no zero-length spans between
  // distinct breakpoints.
  int mult = 1;
  for (int i = 4; i < n - 4; ++i) {
    if (knots_[i] == knots_[i - 1]) {
      if (++mult > 3) throw ArgumentError("interior knot multiplicity over 3");
    } else {
      mult = 1;
    }
  }
}

int KnotVector::find_span(Scalar u) const {
  const int c = basis_count();  // domain is [knots_[3], knots_[c]]
  if (u >= knots_[c]) return c - 1;
  int lo = 3, hi = c;  // invariant: knots_[lo] <= u < knots_[hi]
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    (u < knots_[mid] ? hi : lo) = mid;
  }
  return lo;
}

KnotVector clamped_uniform_knots(int num_ctrl) {
  if (num_ctrl < 4) throw ArgumentError("need at least 4 control points");
  const int spans = num_ctrl - 3;
  std::vector<Scalar> k;
  k.reserve(num_ctrl + 4);
  for (int i = 0; i < 4; ++i) k.push_back(0.0);
  for (int i = 1; i < spans; ++i)
    k.push_back(static_cast<Scalar>(i) / static_cast<Scalar>(spans));
  for (int i = 0; i < 4; ++i) k.push_back(1.0);
  return KnotVector(std::move(k));
}

KnotVector bezier_segment_knots(int num_panels) {
  if (num_panels < 1) throw ArgumentError("need at least one panel");
  std::vector<Scalar> k;
  k.reserve(4 * (num_panels + 1) + 2);
  for (int i = 0; i < 4; ++i) k.push_back(0.0);
  for (int i = 1; i < num_panels; ++i) {
    const Scalar t = static_cast<Scalar>(i) / static_cast<Scalar>(num_panels);
    for (int j = 0; j < 3; ++j) k.push_back(t);
  }
  for (int i = 0; i < 4; ++i) k.push_back(1.0);
  return KnotVector(std::move(k));
}

BasisValues basis_eval(const KnotVector& knots, Scalar u, int order) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("parameter outside [0,1]");
  if (order < 0 || order > 2) throw ArgumentError("derivative order must be 0..2");

  constexpr int p = 3;
  const int s = knots.find_span(u);

  // Triangular table of basis values by degree plus the knot differences,
  // then the derivative sweep (Piegl & Tiller A2.3 specialized to p = 3).
  Scalar ndu[p + 1][p + 1], left[p + 1], right[p + 1];
  ndu[0][0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - knots[s + 1 - j];
    right[j] = knots[s + j] - u;
    Scalar saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const Scalar temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }

  BasisValues out;
  out.first = s - p;
  if (order == 0) {
    for (int j = 0; j <= p; ++j) out.b[j] = ndu[j][p];
    return out;
  }

  Scalar ders[3][p + 1];
  for (int j = 0; j <= p; ++j) ders[0][j] = ndu[j][p];
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    Scalar a[2][p + 1];
    a[0][0] = 1.0;
    for (int k = 1; k <= order; ++k) {
      Scalar d = 0.0;
      const int rk = r - k, pk = p - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  int mult = p;
  for (int k = 1; k <= order; ++k) {
    for (int j = 0; j <= p; ++j) ders[k][j] *= mult;
    mult *= p - k;
  }
  for (int j = 0; j <= p; ++j) out.b[j] = ders[order][j];
  return out;
}

ControlGrid::ControlGrid(int nu, int nv) : nu_(nu), nv_(nv) {
  if (nu < 4 || nv < 4)
    throw ArgumentError("control grid needs at least 4x4 points");
  pts_ = MatX3::Zero(nu * nv, 3);
}

ControlGrid::ControlGrid(int nu, int nv, MatX3 points)
    : nu_(nu), nv_(nv), pts_(std::move(points)) {
  if (nu < 4 || nv < 4)
    throw ArgumentError("control grid needs at least 4x4 points");
  if (pts_.rows() != static_cast<Eigen::Index>(nu) * nv)
    throw ArgumentError("control grid size mismatch");
  if (!pts_.allFinite())
    throw ArgumentError("control grid has non-finite coordinates");
}

Scalar ControlGrid::bbox_diagonal() const {
  const Vec3 lo = pts_.colwise().minCoeff();
  const Vec3 hi = pts_.colwise().maxCoeff();
  return (hi - lo).norm();
}

int SurfaceModel::panel_ctrl_index(int r, int a, int b) const {
  const int pu = r / panels_v, pv = r % panels_v;
  return control.index(3 * pu + a, 3 * pv + b);
}

std::pair<Vec2, Vec2> SurfaceModel::panel_domain(int r) const {
  const int pu = r / panels_v, pv = r % panels_v;
  const Scalar du = 1.0 / panels_u, dv = 1.0 / panels_v;
  return {Vec2(pu * du, pv * dv), Vec2((pu + 1) * du, (pv + 1) * dv)};
}

SurfaceModel make_single_bspline(ControlGrid grid) {
  KnotVector ku = clamped_uniform_knots(grid.nu());
  KnotVector kv = clamped_uniform_knots(grid.nv());
  return SurfaceModel{SurfaceKind::SingleBspline, std::move(grid),
                      std::move(ku), std::move(kv), 1, 1};
}

SurfaceModel build_panel_grid(int rows, int cols, ControlGrid seed) {
  if (rows < 1 || cols < 1) throw ArgumentError("panel grid needs rows, cols >= 1");
  if (seed.nu() != 3 * rows + 1 || seed.nv() != 3 * cols + 1)
    throw ArgumentError("panel grid seed must be (3*rows+1) x (3*cols+1)");
  KnotVector ku = bezier_segment_knots(rows);
  KnotVector kv = bezier_segment_knots(cols);
  return SurfaceModel{SurfaceKind::PanelGrid, std::move(seed), std::move(ku),
                      std::move(kv), rows, cols};
}

namespace {

BasisRow tensor_row(const SurfaceModel& m, const BasisValues& bu,
                    const BasisValues& bv) {
  BasisRow row;
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b, ++k) {
      row.idx[k] = m.control.index(bu.first + a, bv.first + b);
      row.c[k] = bu.b[a] * bv.b[b];
    }
  return row;
}

}  // namespace

Vec3 surface_eval(const SurfaceModel& model, Scalar u, Scalar v) {
  const BasisValues bu = basis_eval(model.knots_u, u, 0);
  const BasisValues bv = basis_eval(model.knots_v, v, 0);
  Vec3 out = Vec3::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out += bu.b[a] * bv.b[b] *
             model.control.point(bu.first + a, bv.first + b);
  return out;
}

SurfaceJet surface_partials(const SurfaceModel& model, Scalar u, Scalar v) {
  return precompute_rows(model, u, v).eval(model.control);
}

SampleRows precompute_rows(const SurfaceModel& model, Scalar u, Scalar v) {
  const BasisValues bu0 = basis_eval(model.knots_u, u, 0);
  const BasisValues bu1 = basis_eval(model.knots_u, u, 1);
  const BasisValues bu2 = basis_eval(model.knots_u, u, 2);
  const BasisValues bv0 = basis_eval(model.knots_v, v, 0);
  const BasisValues bv1 = basis_eval(model.knots_v, v, 1);
  const BasisValues bv2 = basis_eval(model.knots_v, v, 2);
  SampleRows rows;
  rows.value = tensor_row(model, bu0, bv0);
  rows.du = tensor_row(model, bu1, bv0);
  rows.dv = tensor_row(model, bu0, bv1);
  rows.duu = tensor_row(model, bu2, bv0);
  rows.duv = tensor_row(model, bu1, bv1);
  rows.dvv = tensor_row(model, bu0, bv2);
  return rows;
}

std::vector<SampleRows> precompute_rows(const SurfaceModel& model,
                                        std::span<const Vec2> params) {
  std::vector<SampleRows> out;
  out.reserve(params.size());
  for (const Vec2& uv : params)
    out.push_back(precompute_rows(model, uv.x(), uv.y()));
  return out;
}

}  // namespace devgauss
