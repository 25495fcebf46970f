#pragma once

#include <vector>

#include "mixspec/int_matrix.hpp"

namespace mixspec {

struct EigenResult {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k], unit norm
    double tol = 0.0;                          // convergence tolerance used

    double value(int i) const { return values.at(static_cast<size_t>(i)); }
};

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr double kClusterTol = 1e-6;

// Full eigendecomposition of a symmetric integer matrix by cyclic Jacobi
// rotations, swept until the off-diagonal Frobenius mass is at most tol.
// Throws std::invalid_argument on a non-symmetric input.
EigenResult symmetric_eigen(const IntMatrix& m, double tol = kDefaultEigenTol);

struct EigenCluster {
    double value = 0.0;  // cluster representative (mean)
    int multiplicity = 0;
};

// Groups sorted eigenvalues, merging neighbours closer than
// tol*(1+|value|). Input must be sorted descending.
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& values,
                                              double tol = kClusterTol);

// Multiplicity of x among values under the clustering tolerance.
int eigenvalue_multiplicity(const std::vector<double>& values, double x,
                            double tol = kClusterTol);

}  // namespace mixspec
