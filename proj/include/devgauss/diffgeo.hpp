#pragma once

#include <optional>

#include "devgauss/bspline.hpp"
#include "devgauss/types.hpp"

namespace devgauss {

/// Position, partials, unit normal and the cross-product norm carried over
/// from the previous solver iteration (lagged normalization).
struct PointFrame {
  Vec3 p, Su, Sv, Suu, Suv, Svv;
  Vec3 n;
  Scalar lagged_norm = 0.0;
};

/// (Su x Sv) / lagged_norm when a lagged norm is supplied, else the exactly
/// normalized cross product. Throws DegenerateError when the cross product is
/// below eps_reg and no lagged norm is given.
Vec3 unit_normal(const Vec3& Su, const Vec3& Sv,
                 std::optional<Scalar> lagged_norm = std::nullopt,
                 Scalar eps_reg = 1e-10);

/// Frame from a surface jet; the normal uses the lagged norm if supplied.
PointFrame make_frame(const SurfaceJet& jet,
                      std::optional<Scalar> lagged_norm = std::nullopt,
                      Scalar eps_reg = 1e-10);

struct FundamentalForms {
  Mat2 first, second;
};

/// First form from the partials, second form from the exactly normalized
/// normal. Throws DegenerateError when det(I) <= 0 within tolerance.
FundamentalForms fundamental_forms(const PointFrame& frame);

/// det(II) / det(I).
Scalar gaussian_curvature(const PointFrame& frame);

struct PrincipalData {
  Scalar kappa1 = 0.0, kappa2 = 0.0;  // |kappa1| >= |kappa2|
  Vec3 q1 = Vec3::Zero(), q2 = Vec3::Zero();
  Scalar weight = 0.0;
  bool umbilic = false;
};

/// Principal curvatures and directions from the shape operator -I^{-1} II,
/// ordered by decreasing |kappa|; directions mapped to 3D and normalized.
/// At umbilics an arbitrary orthonormal tangent pair is returned, flagged.
PrincipalData principal(const PointFrame& frame);

/// Confidence weight 1 - min|kappa| / max|kappa|; 0 at flat points.
Scalar confidence_weight(Scalar kappa1, Scalar kappa2);

}  // namespace devgauss
