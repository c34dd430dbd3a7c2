#pragma once

#include <Eigen/Dense>
#include <vector>

namespace causil {

// Numerically stable softmax of a logit vector.
Eigen::VectorXd softmax(const Eigen::VectorXd& logits);

// Index of the maximum entry; ties broken by lowest index.
int argmax_lowest(const Eigen::VectorXd& v);

// Median with mean-of-middle-two convention for even counts. Input is copied.
double median(std::vector<double> v);

// Quantile by linear interpolation between order statistics at h = (n-1)q.
double quantile(std::vector<double> v, double q);

}  // namespace causil
