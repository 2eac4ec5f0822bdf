#pragma once

#include <memory>
#include <vector>

#include "chd/dataset.hpp"

namespace chd {

// Regression tree for one boosting round; leaves carry additive weights
// on the log-odds scale.
struct BoostNode {
    double leaf_weight = 0.0;
    int feature = -1;  // < 0 marks a leaf
    double threshold = 0.0;
    std::unique_ptr<BoostNode> left;
    std::unique_ptr<BoostNode> right;

    bool is_leaf() const { return feature < 0; }
};

struct BoostParams {
    std::size_t rounds = 100;
    double eta = 0.3;     // shrinkage
    double lambda = 1.0;  // L2 leaf-weight penalty
    double gamma = 0.0;   // per-leaf split penalty
    std::size_t max_depth = 3;
};

// Gain = 1/2 [G_L^2/(H_L+lambda) + G_R^2/(H_R+lambda)
//             - (G_L+G_R)^2/(H_L+H_R+lambda)] - gamma
double xgb_split_gain(double g_left, double h_left, double g_right, double h_right,
                      double lambda, double gamma);

// Mean of the labels; the model's initial prediction in probability form.
double xgb_init(const Dataset& train);

class BoostModel : public FittedModel {
public:
    // sigma(raw_init + eta * sum of leaf weights along the routes).
    double score(const std::vector<double>& x) const override;

    double base_score() const { return base_score_; }
    double raw_init() const { return raw_init_; }
    const std::vector<std::unique_ptr<BoostNode>>& trees() const { return trees_; }
    const std::vector<double>& loss_trace() const { return loss_trace_; }

private:
    friend std::unique_ptr<BoostModel> fit_boost(const Dataset&, const BoostParams&);
    double base_score_ = 0.5;
    double raw_init_ = 0.0;
    double eta_ = 0.3;
    std::vector<std::unique_ptr<BoostNode>> trees_;
    std::vector<double> loss_trace_;  // training log-loss after each round
};

// Second-order boosting on log-loss: g = p - y, h = p(1-p), splits by
// xgb_split_gain with negative-gain splits pruned, leaf weight
// -G/(H+lambda), raw score updated by eta * f_t.
std::unique_ptr<BoostModel> fit_boost(const Dataset& train, const BoostParams& params = {});

}  // namespace chd
