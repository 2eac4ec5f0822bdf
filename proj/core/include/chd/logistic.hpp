#pragma once

#include <memory>
#include <vector>

#include "chd/dataset.hpp"

namespace chd {

// Numerically stable sigmoid, no overflow for any finite z.
double sigmoid(double z);

struct LogisticParams {
    double learning_rate = 0.1;
    std::size_t max_iters = 5000;
    double tolerance = 1e-7;
};

class LogisticModel : public FittedModel {
public:
    LogisticModel(std::vector<double> weights, double bias)
        : weights_(std::move(weights)), bias_(bias) {}

    double score(const std::vector<double>& x) const override;

    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }
    const std::vector<double>& loss_trace() const { return loss_trace_; }

private:
    friend std::unique_ptr<LogisticModel> fit_logistic(const Dataset&, const LogisticParams&);
    std::vector<double> weights_;
    double bias_;
    std::vector<double> loss_trace_;
};

// Full-batch gradient descent on mean log-loss from zero initialization.
// Stops at max_iters or when the loss change drops below tolerance.
std::unique_ptr<LogisticModel> fit_logistic(const Dataset& train,
                                            const LogisticParams& params = {});

// Mean log-loss and its analytic gradient; exposed for gradient checks.
double logistic_loss(const Dataset& data, const std::vector<double>& weights, double bias);
void logistic_gradient(const Dataset& data, const std::vector<double>& weights, double bias,
                       std::vector<double>& grad_w, double& grad_b);

}  // namespace chd
