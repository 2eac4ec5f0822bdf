#include "chd/linalg.hpp"

#include <cmath>

#include "chd/errors.hpp"

namespace chd {

SymMatrix cholesky(const SymMatrix& a) {
    std::size_t n = a.n;
    SymMatrix l(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l.at(i, k) * l.at(j, k);
            if (i == j) {
                if (sum <= 0.0 || !std::isfinite(sum))
                    throw Error("cholesky: matrix not positive definite");
                l.at(i, i) = std::sqrt(sum);
            } else {
                l.at(i, j) = sum / l.at(j, j);
            }
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const SymMatrix& l, const std::vector<double>& b) {
    std::size_t n = l.n;
    if (b.size() != n) throw DimensionMismatch("cholesky_solve: size mismatch");
    // Forward substitution L y = b, then back substitution L^T x = y.
    std::vector<double> y(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= l.at(i, k) * y[k];
        y[i] = sum / l.at(i, i);
    }
    for (std::size_t ii = n; ii > 0; --ii) {
        std::size_t i = ii - 1;
        double sum = y[i];
        for (std::size_t k = i + 1; k < n; ++k) sum -= l.at(k, i) * x[k];
        x[i] = sum / l.at(i, i);
    }
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace chd
