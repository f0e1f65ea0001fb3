#ifndef QREPNET_TYPES_HPP
#define QREPNET_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace qrepnet {

// All floating-point state in the library uses one scalar type so the
// numeric tolerances quoted in the tests mean the same thing everywhere.
using Real    = double;
using Complex = std::complex<Real>;

using DensityMatrix = Eigen::Matrix<Complex, 2, 2>;
using Ket           = Eigen::Matrix<Complex, 2, 1>;
using BlochVector   = Eigen::Matrix<Real, 3, 1>;

using MatrixXr = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace qrepnet

#endif
