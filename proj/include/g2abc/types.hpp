#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace g2abc {

inline constexpr int kDim = 7;

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat4 = Eigen::Matrix4d;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented invariant (non-commuting triple, non-positive
/// 3-form, degree overflow, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unit vector e_j, 1-based as in the e_1..e_7 notation.
inline Vec7 basis_vector(int j) {
  if (j < 1 || j > kDim) throw Error("basis index out of range: " + std::to_string(j));
  return Vec7::Unit(j - 1);
}

}  // namespace g2abc
