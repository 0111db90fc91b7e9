#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nrkh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Inverse golden ratio (sqrt(5)-1)/2, the default quasiperiodicity parameter.
inline constexpr double kInverseGoldenRatio = 0.6180339887498948482;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace nrkh
