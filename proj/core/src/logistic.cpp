#include "chd/logistic.hpp"

#include <cmath>

#include "chd/errors.hpp"
#include "chd/linalg.hpp"

namespace chd {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    double e = std::exp(z);
    return e / (1.0 + e);
}

double LogisticModel::score(const std::vector<double>& x) const {
    if (x.size() != weights_.size())
        throw DimensionMismatch("logistic score: feature count mismatch");
    return sigmoid(dot(weights_, x) + bias_);
}

double logistic_loss(const Dataset& data, const std::vector<double>& weights, double bias) {
    double loss = 0.0;
    for (std::size_t i = 0; i < data.num_rows(); ++i) {
        double z = dot(weights, data.rows[i]) + bias;
        double y = static_cast<double>(data.labels[i]);
        // log(1+e^z) - y z, computed without overflow for large |z|.
        double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
        loss += softplus - y * z;
    }
    return loss / static_cast<double>(data.num_rows());
}

void logistic_gradient(const Dataset& data, const std::vector<double>& weights, double bias,
                       std::vector<double>& grad_w, double& grad_b) {
    std::size_t m = data.num_rows();
    std::size_t n = weights.size();
    grad_w.assign(n, 0.0);
    grad_b = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double p = sigmoid(dot(weights, data.rows[i]) + bias);
        double residual = p - static_cast<double>(data.labels[i]);
        for (std::size_t j = 0; j < n; ++j) grad_w[j] += residual * data.rows[i][j];
        grad_b += residual;
    }
    double inv_m = 1.0 / static_cast<double>(m);
    for (double& g : grad_w) g *= inv_m;
    grad_b *= inv_m;
}

std::unique_ptr<LogisticModel> fit_logistic(const Dataset& train, const LogisticParams& params) {
    if (train.num_rows() == 0) throw Error("fit_logistic: empty dataset");
    std::size_t n = train.num_features();
    std::vector<double> weights(n, 0.0);
    double bias = 0.0;

    auto model = std::make_unique<LogisticModel>(weights, bias);
    double prev_loss = logistic_loss(train, weights, bias);
    model->loss_trace_.push_back(prev_loss);

    std::vector<double> grad_w;
    double grad_b = 0.0;
    for (std::size_t iter = 0; iter < params.max_iters; ++iter) {
        logistic_gradient(train, weights, bias, grad_w, grad_b);
        for (std::size_t j = 0; j < n; ++j) weights[j] -= params.learning_rate * grad_w[j];
        bias -= params.learning_rate * grad_b;

        double loss = logistic_loss(train, weights, bias);
        if (!std::isfinite(loss))
            throw NonFiniteLoss("fit_logistic: loss diverged; lower the learning rate");
        model->loss_trace_.push_back(loss);
        if (std::abs(prev_loss - loss) < params.tolerance) break;
        prev_loss = loss;
    }
    model->weights_ = std::move(weights);
    model->bias_ = bias;
    return model;
}

}  // namespace chd
