#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <stdexcept>
#include <string>

namespace devgauss {

using Scalar = double;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using MatX3 = Eigen::Matrix<Scalar, Eigen::Dynamic, 3>;
using SparseMat = Eigen::SparseMatrix<Scalar>;
using Triplet = Eigen::Triplet<Scalar>;

/// Parameter outside the surface domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid argument to a constructor or operation.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Degenerate parameterization, circle, or linear system.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A patch could not be initialized (empty or degenerate input).
struct InitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite energy or an unsolvable linear system.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal contract violation (mismatched layouts, missing caches).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration error; carries the offending key or line.
struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(const std::string& message, std::string offending_key)
      : std::runtime_error(message), key(std::move(offending_key)) {}
};

}  // namespace devgauss
