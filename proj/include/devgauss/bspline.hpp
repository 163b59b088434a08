#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "devgauss/types.hpp"

namespace devgauss {

/// Clamped cubic knot sequence on [0,1].
class KnotVector {
 public:
  explicit KnotVector(std::vector<Scalar> knots);

  int basis_count() const { return static_cast<int>(knots_.size()) - 4; }
  Scalar operator[](int i) const { return knots_[i]; }
  const std::vector<Scalar>& values() const { return knots_; }

  /// Span index s with knots[s] <= u < knots[s+1]; u = 1 maps to the last
  /// nonempty span, so derivatives at interior triple knots come from the
  /// right-hand piece and at u = 1 from the left-hand piece.
  int find_span(Scalar u) const;

 private:
  std::vector<Scalar> knots_;
};

/// Uniform clamped cubic knots for num_ctrl control points per direction.
KnotVector clamped_uniform_knots(int num_ctrl);

/// Clamped cubic knots with interior multiplicity 3: num_panels Bezier pieces.
KnotVector bezier_segment_knots(int num_panels);

/// The four nonzero cubic basis values (or derivatives) on the active span.
struct BasisValues {
  int first;                    // index of the first active basis function
  std::array<Scalar, 4> b;
};

/// Cubic B-spline basis derivatives of the requested order (0..2) at u.
BasisValues basis_eval(const KnotVector& knots, Scalar u, int order);

class ControlGrid {
 public:
  ControlGrid(int nu, int nv);
  ControlGrid(int nu, int nv, MatX3 points);

  int nu() const { return nu_; }
  int nv() const { return nv_; }
  int count() const { return nu_ * nv_; }
  int index(int iu, int iv) const { return iu * nv_ + iv; }

  Vec3 point(int iu, int iv) const { return pts_.row(index(iu, iv)); }
  Vec3 point(int g) const { return pts_.row(g); }
  void set_point(int iu, int iv, const Vec3& p) { pts_.row(index(iu, iv)) = p; }
  void set_point(int g, const Vec3& p) { pts_.row(g) = p; }

  const MatX3& points() const { return pts_; }
  MatX3& points() { return pts_; }

  /// Length of the bounding-box diagonal of the control net.
  Scalar bbox_diagonal() const;

 private:
  int nu_, nv_;
  MatX3 pts_;
};

enum class SurfaceKind { SingleBspline, PanelGrid };

/// Bicubic B-spline surface, or a C0 grid of bicubic Bezier panels realized
/// as a B-spline with interior knots of multiplicity 3 (shared control points
/// along panel edges come for free from the common grid).
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::SingleBspline;
  ControlGrid control;
  KnotVector knots_u, knots_v;
  int panels_u = 1, panels_v = 1;

  int panel_count() const { return panels_u * panels_v; }
  int panel_index(int pu, int pv) const { return pu * panels_v + pv; }

  /// Global control index of the local Bezier control (a,b) of panel r.
  int panel_ctrl_index(int r, int a, int b) const;

  /// Parameter rectangle (lo, hi) owned by panel r.
  std::pair<Vec2, Vec2> panel_domain(int r) const;
};

SurfaceModel make_single_bspline(ControlGrid grid);

/// C0 panel grid with rows x cols bicubic Bezier panels. The seed grid must
/// be (3*rows+1) x (3*cols+1).
SurfaceModel build_panel_grid(int rows, int cols, ControlGrid seed);

Vec3 surface_eval(const SurfaceModel& model, Scalar u, Scalar v);

struct SurfaceJet {
  Vec3 p, Su, Sv, Suu, Suv, Svv;
};

SurfaceJet surface_partials(const SurfaceModel& model, Scalar u, Scalar v);

/// Sparse row of control-point coefficients for one cached quantity at one
/// sample: the 4x4 active tensor-product block.
struct BasisRow {
  std::array<int, 16> idx;
  std::array<Scalar, 16> c;

  Vec3 eval(const ControlGrid& g) const {
    Vec3 out = Vec3::Zero();
    for (int k = 0; k < 16; ++k) out += c[k] * g.point(idx[k]);
    return out;
  }
};

/// Cached coefficient rows for value and first/second partials at one (u,v).
struct SampleRows {
  BasisRow value, du, dv, duu, duv, dvv;

  SurfaceJet eval(const ControlGrid& g) const {
    return {value.eval(g), du.eval(g),  dv.eval(g),
            duu.eval(g),   duv.eval(g), dvv.eval(g)};
  }
};

SampleRows precompute_rows(const SurfaceModel& model, Scalar u, Scalar v);
std::vector<SampleRows> precompute_rows(const SurfaceModel& model,
                                        std::span<const Vec2> params);

}  // namespace devgauss
