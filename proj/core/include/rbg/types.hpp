#pragma once

#include <Eigen/Dense>

namespace rbg {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IndexList = std::vector<Index>;

} // namespace rbg
