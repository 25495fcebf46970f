#include "mixspec/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mixspec {

namespace {

double offdiag_mass(const std::vector<std::vector<double>>& a) {
    const size_t n = a.size();
    double s = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

}  // namespace

EigenResult symmetric_eigen(const IntMatrix& m, double tol) {
    if (!m.is_symmetric()) throw std::invalid_argument("eigensolver requires a symmetric matrix");
    const int n = m.rows();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j).get_d();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

    const int max_sweeps = 100;
    int sweep = 0;
    while (n > 1 && offdiag_mass(a) > tol) {
        if (++sweep > max_sweeps) throw std::runtime_error("Jacobi iteration did not converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a[q][q] - a[p][p]) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a[static_cast<size_t>(x)][static_cast<size_t>(x)] > a[static_cast<size_t>(y)][static_cast<size_t>(y)]; });

    EigenResult res;
    res.tol = tol;
    res.values.reserve(static_cast<size_t>(n));
    res.vectors.reserve(static_cast<size_t>(n));
    for (int k : order) {
        res.values.push_back(a[static_cast<size_t>(k)][static_cast<size_t>(k)]);
        std::vector<double> col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = v[static_cast<size_t>(i)][static_cast<size_t>(k)];
        // Deterministic sign: largest-magnitude entry made positive.
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(col[static_cast<size_t>(i)]) > std::abs(col[static_cast<size_t>(imax)])) imax = i;
        if (n > 0 && col[static_cast<size_t>(imax)] < 0)
            for (auto& x : col) x = -x;
        res.vectors.push_back(std::move(col));
    }
    return res;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& values, double tol) {
    std::vector<EigenCluster> clusters;
    for (double x : values) {
        if (!clusters.empty()) {
            EigenCluster& last = clusters.back();
            if (std::abs(last.value - x) <= tol * (1.0 + std::abs(x))) {
                last.value = (last.value * last.multiplicity + x) / (last.multiplicity + 1);
                ++last.multiplicity;
                continue;
            }
        }
        clusters.push_back({x, 1});
    }
    return clusters;
}

int eigenvalue_multiplicity(const std::vector<double>& values, double x, double tol) {
    int mult = 0;
    for (double v : values)
        if (std::abs(v - x) <= tol * (1.0 + std::abs(x))) ++mult;
    return mult;
}

}  // namespace mixspec
