#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/LU>

namespace triosc {

using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using CMat6 = Eigen::Matrix<std::complex<double>, 6, 6>;
using CMatX = Eigen::MatrixXcd;

}  // namespace triosc
