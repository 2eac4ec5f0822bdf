#pragma once

#include <vector>

namespace chd {

// Dense symmetric matrix stored row-major, n x n.
struct SymMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    explicit SymMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

// Cholesky factorization A = L L^T. Throws if A is not positive definite.
SymMatrix cholesky(const SymMatrix& a);

// Solves A x = b given the Cholesky factor L of A.
std::vector<double> cholesky_solve(const SymMatrix& l, const std::vector<double>& b);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace chd
