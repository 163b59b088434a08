#include "devgauss/diffgeo.hpp"

#include <cmath>

namespace devgauss {

Vec3 unit_normal(const Vec3& Su, const Vec3& Sv,
                 std::optional<Scalar> lagged_norm, Scalar eps_reg) {
  const Vec3 cross = Su.cross(Sv);
  if (lagged_norm) {
    if (!(*lagged_norm > 0.0))
      throw ContractError("lagged norm must be positive");
    return cross / *lagged_norm;
  }
  const Scalar n = cross.norm();
  if (!(n > eps_reg))
    throw DegenerateError("degenerate parameterization: |Su x Sv| ~ 0");
  return cross / n;
}

PointFrame make_frame(const SurfaceJet& jet, std::optional<Scalar> lagged_norm,
                      Scalar eps_reg) {
  PointFrame f{jet.p,      jet.Su,      jet.Sv, jet.Suu, jet.Suv, jet.Svv,
               Vec3::Zero(), 0.0};
  f.n = unit_normal(jet.Su, jet.Sv, lagged_norm, eps_reg);
  f.lagged_norm = lagged_norm ? *lagged_norm : jet.Su.cross(jet.Sv).norm();
  return f;
}

FundamentalForms fundamental_forms(const PointFrame& frame) {
  FundamentalForms ff;
  ff.first << frame.Su.dot(frame.Su), frame.Su.dot(frame.Sv),
      frame.Su.dot(frame.Sv), frame.Sv.dot(frame.Sv);
  if (!(ff.first.determinant() > 1e-14))
    throw DegenerateError("degenerate first fundamental form");
  const Vec3 n = unit_normal(frame.Su, frame.Sv);
  ff.second << n.dot(frame.Suu), n.dot(frame.Suv), n.dot(frame.Suv),
      n.dot(frame.Svv);
  return ff;
}

Scalar gaussian_curvature(const PointFrame& frame) {
  const FundamentalForms ff = fundamental_forms(frame);
  return ff.second.determinant() / ff.first.determinant();
}

PrincipalData principal(const PointFrame& frame) {
  const FundamentalForms ff = fundamental_forms(frame);
  const Mat2 shape = -ff.first.inverse() * ff.second;

  // The shape operator is self-adjoint in the metric of I, so its eigenvalues
  // are real; solve the characteristic quadratic directly.
  const Scalar tr = shape.trace();
  const Scalar det = shape.determinant();
  Scalar disc = tr * tr - 4.0 * det;
  if (disc < 0.0) disc = 0.0;
  const Scalar root = std::sqrt(disc);
  Scalar k1 = 0.5 * (tr + root);
  Scalar k2 = 0.5 * (tr - root);
  if (std::abs(k1) < std::abs(k2)) std::swap(k1, k2);

  PrincipalData out;
  out.kappa1 = k1;
  out.kappa2 = k2;
  out.weight = confidence_weight(k1, k2);

  const Vec3 n = unit_normal(frame.Su, frame.Sv);
  const Scalar scale = std::max(std::abs(k1), std::abs(k2));
  out.umbilic = root <= 1e-9 * std::max(scale, Scalar(1));

  if (out.umbilic) {
    // No preferred direction; return any orthonormal tangent pair.
    out.q1 = frame.Su.normalized();
    out.q2 = n.cross(out.q1).normalized();
    return out;
  }

  // Eigenvector of the 2x2 shape operator for k1, taking the better
  // conditioned of the two defining rows.
  const Mat2 m = shape - k1 * Mat2::Identity();
  Vec2 ev;
  if (std::abs(m(0, 0)) + std::abs(m(0, 1)) >=
      std::abs(m(1, 0)) + std::abs(m(1, 1)))
    ev = Vec2(-m(0, 1), m(0, 0));
  else
    ev = Vec2(-m(1, 1), m(1, 0));
  out.q1 = (ev.x() * frame.Su + ev.y() * frame.Sv).normalized();
  // Eigendirections of a self-adjoint operator are orthogonal in 3D, so the
  // second direction is the tangent orthogonal to the first.
  out.q2 = n.cross(out.q1).normalized();
  return out;
}

Scalar confidence_weight(Scalar kappa1, Scalar kappa2) {
  const Scalar a = std::abs(kappa1), b = std::abs(kappa2);
  const Scalar hi = std::max(a, b), lo = std::min(a, b);
  if (hi == 0.0) return 0.0;  // flat point
  return 1.0 - lo / hi;
}

}  // namespace devgauss
