#pragma once

#include <memory>
#include <vector>

#include "chd/dataset.hpp"
#include "chd/rng.hpp"

namespace chd {

struct SvmParams {
    double c = 1.0;  // slack penalty
    std::size_t epochs = 50;
};

// Soft-margin linear SVM trained by epoch-shuffled subgradient descent
// with a 1/(lambda t) step schedule. Labels are mapped to {-1,+1}
// internally; score() for the curves is sigmoid(decision).
class SvmModel : public FittedModel {
public:
    SvmModel(std::vector<double> weights, double bias)
        : weights_(std::move(weights)), bias_(bias) {}

    // w.x + b, the signed margin.
    double decision(const std::vector<double>& x) const;

    double score(const std::vector<double>& x) const override;
    ClassLabel predict(const std::vector<double>& x, double threshold = 0.5) const override;

    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }
    const std::vector<double>& objective_trace() const { return objective_trace_; }

private:
    friend std::unique_ptr<SvmModel> fit_svm(const Dataset&, const SvmParams&, RngStream&);
    std::vector<double> weights_;
    double bias_;
    std::vector<double> objective_trace_;  // per epoch
};

std::unique_ptr<SvmModel> fit_svm(const Dataset& train, const SvmParams& params,
                                  RngStream& rng);

// 1/2 w.w + C sum max(0, 1 - y(w.x+b)); exposed for gradient checks.
double svm_objective(const Dataset& data, const std::vector<double>& weights, double bias,
                     double c);
void svm_subgradient(const Dataset& data, const std::vector<double>& weights, double bias,
                     double c, std::vector<double>& grad_w, double& grad_b);

}  // namespace chd
