#pragma once

#include <Eigen/Dense>

namespace convexlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
// Directions are passed by reference-to-column so quadrature nodes stored as
// matrix columns can be evaluated without copies.
using VecRef = Eigen::Ref<const Vec>;

}  // namespace convexlab
