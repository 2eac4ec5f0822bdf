#include "chd/svm.hpp"

#include <cmath>

#include "chd/errors.hpp"
#include "chd/linalg.hpp"
#include "chd/logistic.hpp"

namespace chd {

double SvmModel::decision(const std::vector<double>& x) const {
    if (x.size() != weights_.size())
        throw DimensionMismatch("svm decision: feature count mismatch");
    return dot(weights_, x) + bias_;
}

double SvmModel::score(const std::vector<double>& x) const {
    return sigmoid(decision(x));
}

ClassLabel SvmModel::predict(const std::vector<double>& x, double /*threshold*/) const {
    return decision(x) >= 0.0 ? 1 : 0;
}

double svm_objective(const Dataset& data, const std::vector<double>& weights, double bias,
                     double c) {
    double obj = 0.5 * dot(weights, weights);
    for (std::size_t i = 0; i < data.num_rows(); ++i) {
        double y = data.labels[i] == 1 ? 1.0 : -1.0;
        double margin = y * (dot(weights, data.rows[i]) + bias);
        if (margin < 1.0) obj += c * (1.0 - margin);
    }
    return obj;
}

void svm_subgradient(const Dataset& data, const std::vector<double>& weights, double bias,
                     double c, std::vector<double>& grad_w, double& grad_b) {
    std::size_t n = weights.size();
    grad_w = weights;  // d/dw of the 1/2 w.w term
    grad_b = 0.0;
    for (std::size_t i = 0; i < data.num_rows(); ++i) {
        double y = data.labels[i] == 1 ? 1.0 : -1.0;
        double margin = y * (dot(weights, data.rows[i]) + bias);
        if (margin < 1.0) {
            for (std::size_t j = 0; j < n; ++j) grad_w[j] -= c * y * data.rows[i][j];
            grad_b -= c * y;
        }
    }
}

std::unique_ptr<SvmModel> fit_svm(const Dataset& train, const SvmParams& params,
                                  RngStream& rng) {
    auto [n0, n1] = train.class_counts();
    if (n0 == 0 || n1 == 0) throw SingleClass();
    std::size_t m = train.num_rows();
    std::size_t n = train.num_features();

    // Pegasos scaling: lambda = 1/(C m) makes the per-example objective
    // proportional to 1/2 w.w + C sum(hinge).
    double lambda = 1.0 / (params.c * static_cast<double>(m));

    std::vector<double> weights(n, 0.0);
    double bias = 0.0;
    auto model = std::make_unique<SvmModel>(weights, bias);

    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        std::vector<std::size_t> order = rng.permutation(m);
        for (std::size_t i : order) {
            ++t;
            double eta = 1.0 / (lambda * static_cast<double>(t));
            double y = train.labels[i] == 1 ? 1.0 : -1.0;
            double margin = y * (dot(weights, train.rows[i]) + bias);
            double shrink = 1.0 - eta * lambda;
            for (std::size_t j = 0; j < n; ++j) weights[j] *= shrink;
            if (margin < 1.0) {
                double step = eta / static_cast<double>(m);
                for (std::size_t j = 0; j < n; ++j) weights[j] += step * y * train.rows[i][j];
                bias += step * y;
            }
        }
        model->objective_trace_.push_back(svm_objective(train, weights, bias, params.c));
    }
    model->weights_ = std::move(weights);
    model->bias_ = bias;
    return model;
}

}  // namespace chd
